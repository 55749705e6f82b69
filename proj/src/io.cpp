#include "laz/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "laz/error.hpp"

namespace laz {

double round_sig(double x, int digits) {
    if (!std::isfinite(x) || x == 0.0) return x;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return std::strtod(buf, nullptr);
}

json to_json(const SequenceSet& set) {
    json members = json::array();
    for (const auto& m : set.members()) {
        json row = json::array();
        for (const Phase& p : m.entries()) {
            if (p.is_rational()) {
                row.push_back({p.num(), p.den()});
            } else {
                row.push_back(p.radians());
            }
        }
        members.push_back(std::move(row));
    }
    return {{"length", set.length()},
            {"size", set.size()},
            {"phase_mode", set.all_rational() ? "rational" : "float"},
            {"members", std::move(members)}};
}

SequenceSet sequence_set_from_json(const json& j) {
    try {
        const auto length = j.at("length").get<std::int64_t>();
        const auto size = j.at("size").get<std::int64_t>();
        const auto mode = j.at("phase_mode").get<std::string>();
        if (mode != "rational" && mode != "float") throw FormatError("phase_mode must be 'rational' or 'float'");
        std::vector<UnimodSequence> members;
        for (const json& row : j.at("members")) {
            std::vector<Phase> entries;
            for (const json& e : row) {
                if (e.is_array()) {
                    if (e.size() != 2) throw FormatError("rational phase must be [num, den]");
                    entries.push_back(Phase::rational(e[0].get<std::int64_t>(), e[1].get<std::int64_t>()));
                } else if (e.is_number()) {
                    if (mode == "rational") throw FormatError("float angle in a rational-mode set");
                    entries.push_back(Phase::angle(e.get<double>()));
                } else {
                    throw FormatError("phase entry must be [num, den] or an angle");
                }
            }
            if (static_cast<std::int64_t>(entries.size()) != length) throw FormatError("member length differs from 'length'");
            members.emplace_back(std::move(entries));
        }
        if (static_cast<std::int64_t>(members.size()) != size) throw FormatError("member count differs from 'size'");
        return SequenceSet(std::move(members));
    } catch (const json::exception& e) {
        throw FormatError(std::string("sequence set: ") + e.what());
    }
}

json to_json(const LazParams& p) {
    return {{"set_size", p.set_size},
            {"length", p.length},
            {"zone", {{"zx", p.zone.zx}, {"zy", p.zone.zy}}},
            {"theta", round_sig(p.theta)},
            {"kind", to_string(p.kind)}};
}

LazParams laz_params_from_json(const json& j) {
    try {
        LazParams p;
        p.set_size = j.at("set_size").get<std::int64_t>();
        p.length = j.at("length").get<std::int64_t>();
        p.zone = {j.at("zone").at("zx").get<std::int64_t>(), j.at("zone").at("zy").get<std::int64_t>()};
        p.theta = j.at("theta").get<double>();
        p.kind = parse_af_kind(j.at("kind").get<std::string>());
        return p;
    } catch (const json::exception& e) {
        throw FormatError(std::string("LAZ parameters: ") + e.what());
    }
}

json to_json(const BoundReport& r) {
    json out = {{"kind", to_string(r.kind)},
                {"bound_value", round_sig(r.bound_value)},
                {"theta", round_sig(r.theta)},
                {"rho", round_sig(r.rho)},
                {"regime", to_string(r.regime)}};
    out["gamma_limit"] = r.gamma_limit ? json(round_sig(*r.gamma_limit)) : json(nullptr);
    return out;
}

json to_json(const HReport& r) {
    return {{"max_offdiag_inner", round_sig(r.max_offdiag_inner)},
            {"max_modulated", round_sig(r.max_modulated)},
            {"pass", r.pass},
            {"witness", {{"i", r.i}, {"j", r.j}, {"v", r.v}}}};
}

namespace {

json witness_json(const AfWitness& w) {
    return {{"i", w.i}, {"j", w.j}, {"tau", w.tau}, {"v", w.v}, {"magnitude", round_sig(w.magnitude)}};
}

json phase_json(const Phase& p) {
    if (p.is_rational()) return json::array({p.num(), p.den()});
    return round_sig(p.radians());
}

}  // namespace

json to_json(const ThetaReport& r) {
    return {{"theta_a", round_sig(r.theta_a)},
            {"theta_c", round_sig(r.theta_c)},
            {"theta_max", round_sig(r.theta_max)},
            {"witness", witness_json(r.witness)}};
}

json to_json(const DistinctReport& r) {
    json out = {{"distinct", r.distinct}};
    if (r.witness) {
        out["witness"] = {{"i", r.witness->i}, {"j", r.witness->j}, {"tau", r.witness->tau}, {"phase", phase_json(r.witness->phase)}};
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

json to_json(const LazCertificate& c) {
    json out = {{"claimed", to_json(c.claimed)},
                {"measured_theta", round_sig(c.measured_theta)},
                {"tolerance", round_sig(c.tolerance)},
                {"pass", c.pass},
                {"theta", to_json(c.theta)},
                {"cyclically_distinct", c.cyclically_distinct}};
    out["bound_report"] = c.bound_report ? to_json(*c.bound_report) : json(nullptr);
    return out;
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

SequenceSet read_sequence_set(const std::filesystem::path& path) {
    return sequence_set_from_json(read_json_file(path));
}

void write_sequence_set(const std::filesystem::path& path, const SequenceSet& set) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write " + path.string());
    out << to_json(set).dump() << '\n';
}

std::filesystem::path meta_path_for(const std::filesystem::path& set_path) {
    std::filesystem::path p = set_path;
    if (p.extension() == ".json") p.replace_extension();
    p += ".meta.json";
    return p;
}

}  // namespace laz
