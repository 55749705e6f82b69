#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <unistd.h>

#include "laz/cli.hpp"
#include "laz/construct.hpp"
#include "laz/io.hpp"
#include "oracle.hpp"

using namespace laz;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("laz_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("property: sequence set json round trip") {
    std::mt19937_64 rng(17);
    const SequenceSet rational({oracle::random_rational(rng, 10, 30), oracle::random_rational(rng, 10, 7)});
    CHECK(sequence_set_from_json(to_json(rational)) == rational);
    CHECK(to_json(rational)["phase_mode"] == "rational");

    const SequenceSet floating({oracle::random_float(rng, 6), oracle::random_float(rng, 6)});
    const SequenceSet back = sequence_set_from_json(json::parse(to_json(floating).dump()));
    CHECK(to_json(floating)["phase_mode"] == "float");
    for (std::int64_t i = 0; i < 2; ++i) {
        for (std::int64_t t = 0; t < 6; ++t) CHECK(back[i][t].radians() == floating[i][t].radians());
    }
}

TEST_CASE("malformed sets are rejected") {
    CHECK_THROWS(sequence_set_from_json(json::parse(R"({"length": 2, "size": 1, "members": [[[0,1]]]})")));
    CHECK_THROWS(sequence_set_from_json(json::parse(R"({"length": 1, "size": 1, "members": [[[0,0]]]})")));
    CHECK_THROWS(sequence_set_from_json(json::parse(R"({"members": 3})")));
}

TEST_CASE("params round trip and sidecar path") {
    const LazParams p = predicted_params(7, 11, AfKind::aperiodic);
    CHECK(laz_params_from_json(to_json(p)) == p);
    CHECK(meta_path_for("out/set.json") == fs::path("out/set.meta.json"));
    CHECK(round_sig(1.23456789012345) == 1.23456789);
}

}

TEST_SUITE("cli") {

TEST_CASE("gen then verify") {
    const std::string set = scratch("s77.json").string();
    const Run g = run({"gen", "--n", "7", "--k", "7", "--a2", "1", "--a1", "0", "--h", "legendre", "-o", set});
    CHECK(g.code == 0);
    CHECK(fs::exists(meta_path_for(set)));
    const Run v = run({"verify", "--set", set});
    CHECK(v.code == 0);
    const json cert = json::parse(v.out);
    CHECK(cert["pass"] == true);
    CHECK(cert["certificates"].size() == 2);

    const std::string meta = scratch("tight.meta.json").string();
    json m = read_json_file(meta_path_for(set));
    m["periodic"]["theta"] = 6.0;
    write_json_file(meta, m);
    CHECK(run({"verify", "--set", set, "--meta", meta, "--kind", "periodic"}).code == 1);
}

TEST_CASE("tables") {
    const Run t = run({"tables", "--id", "1"});
    CHECK(t.code == 0);
    std::istringstream lines(t.out);
    std::string line;
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        CHECK(line.find("PASS") != std::string::npos);
    }
    CHECK(rows == 9);
    CHECK(run({"tables", "--id", "3"}).code == 2);
}

TEST_CASE("exit codes") {
    CHECK(run({"gen", "--n", "9", "--k", "7", "-o", scratch("x.json").string()}).code == 3);
    CHECK(run({"gen", "--n", "9", "--k", "9", "--a2", "3", "-o", scratch("x.json").string()}).code == 3);
    const Run unknown = run({"bounds", "--bogus"});
    CHECK(unknown.code == 2);
    CHECK(unknown.err.find("Usage") != std::string::npos);
    CHECK(run({}).code == 2);
    CHECK(run({"bounds", "--m", "0", "--len", "9", "--zx", "3", "--zy", "3", "--theta", "3"}).code == 2);
    CHECK(run({"af", "--set", "/nonexistent.json", "--zx", "2", "--zy", "2"}).code == 2);
}

TEST_CASE("hgen and lpnf") {
    const std::string h = scratch("h7.json").string();
    CHECK(run({"hgen", "--kind", "mseq", "--n", "7", "-o", h}).code == 0);
    CHECK(run({"hgen", "verify", h}).code == 0);
    json dup = read_json_file(h);
    dup["members"][1] = dup["members"][0];
    write_json_file(h, dup);
    CHECK(run({"hgen", "verify", h}).code == 1);
    CHECK(run({"hgen", "--kind", "mseq", "--n", "8"}).code == 3);

    const Run l = run({"lpnf", "--n", "5", "--k", "8", "--zx", "5", "--zy", "8"});
    CHECK(l.code == 0);
    CHECK(json::parse(l.out)["P_f"] == 2);
}

TEST_CASE("bounds json") {
    const Run b = run({"bounds", "--m", "7", "--len", "77", "--zx", "7", "--zy", "5", "--theta", "11"});
    REQUIRE(b.code == 0);
    const json j = json::parse(b.out);
    CHECK(j["rho"].get<double>() == doctest::Approx(1.498298).epsilon(1e-6));
    CHECK(j["regime"] == "N<K<2N-1");
}

TEST_CASE("property: output is byte-identical across worker counts") {
    const std::string set = scratch("s711.json").string();
    REQUIRE(run({"gen", "--n", "7", "--k", "11", "--h", "legendre", "-o", set}).code == 0);
    const Run one = run({"--threads", "1", "verify", "--set", set, "--empirical-budget", "11"});
    const Run four = run({"--threads", "4", "verify", "--set", set, "--empirical-budget", "11"});
    CHECK(one.code == 0);
    CHECK(one.out == four.out);

    const std::string c1 = scratch("g1.csv").string(), c4 = scratch("g4.csv").string();
    CHECK(run({"--threads", "1", "af", "--set", set, "--pair", "1", "2", "--zx", "7", "--zy", "5", "-o", c1}).code == 0);
    CHECK(run({"--threads", "4", "af", "--set", set, "--pair", "1", "2", "--zx", "7", "--zy", "5", "-o", c4}).code == 0);
    const std::string csv = slurp(c1);
    CHECK(csv == slurp(c4));
    CHECK(csv.rfind("tau,v,re,im,mag\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 13 * 9);
}

}
