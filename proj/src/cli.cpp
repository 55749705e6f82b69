#include "laz/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "laz/ambiguity.hpp"
#include "laz/error.hpp"
#include "laz/io.hpp"
#include "laz/parallel.hpp"

namespace laz::cli {

namespace {

std::string fmt_sig(double x, int digits = 9) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

std::string fmt_fixed(double x, int decimals = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
    return buf;
}

std::string zone_text(const Zone& z) {
    return "(-" + std::to_string(z.zx) + "," + std::to_string(z.zx) + ")x(-" + std::to_string(z.zy) + "," +
           std::to_string(z.zy) + ")";
}

void emit_json(const json& j, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << j.dump(2) << '\n';
    } else {
        write_json_file(path, j);
    }
}

struct GenOptions {
    std::int64_t n = 0, k = 0, a2 = 1, a1 = 0;
    std::string h = "dft";
    std::vector<std::int64_t> power_map;
    std::string output;
};

int run_gen(const GenOptions& o, std::ostream& out) {
    std::optional<ZFunc> f;
    LocalZone zone;
    json construction;
    if (!o.power_map.empty()) {
        const std::int64_t p = o.power_map[0];
        f = power_lpnf(p, o.power_map[1]);
        zone = {p - 1, p};
        construction = {{"lpnf", "power"}, {"p", p}, {"alpha", o.power_map[1]}};
    } else {
        f = quad_lpnf(o.n, o.a2, o.a1, o.k);
        zone = lpnf_zone_for(o.n, o.k);
        construction = {{"lpnf", "quadratic"}, {"a2", o.a2}, {"a1", o.a1}};
    }
    const std::int64_t n = f->domain_size();
    const std::int64_t k = f->codomain_size();
    if (!is_lpnf(*f, zone)) throw PreconditionError("function is not locally perfect nonlinear on the predicted zone");
    const HMatrix h = make_h(parse_hkind(o.h), n);
    const SequenceSet set = build_laz_set(*f, h);

    construction["n"] = n;
    construction["k"] = k;
    construction["h"] = to_string(h.provenance());
    json meta = {{"construction", construction},
                 {"periodic", to_json(params_for_zone(n, k, zone, AfKind::periodic))},
                 {"aperiodic", to_json(params_for_zone(n, k, zone, AfKind::aperiodic))}};
    write_sequence_set(o.output, set);
    write_json_file(meta_path_for(o.output), meta);
    out << "wrote " << o.output << ": " << set.size() << " sequences of length " << set.length() << ", zone "
        << zone_text({zone.zx, zone.zy}) << '\n';
    return kOk;
}

int run_hgen(const std::string& kind, std::int64_t n, const std::string& output, std::ostream& out) {
    const HMatrix h = make_h(parse_hkind(kind), n);
    json j = to_json(h.rows());
    j["provenance"] = to_string(h.provenance());
    emit_json(j, output, out);
    return kOk;
}

int run_hgen_verify(const std::string& file, std::ostream& out) {
    const json j = read_json_file(file);
    HKind kind = HKind::custom;
    if (j.contains("provenance")) kind = parse_hkind(j["provenance"].get<std::string>());
    const HMatrix h(sequence_set_from_json(j), kind);
    const HReport report = verify_h_constraints(h);
    json r = to_json(report);
    r["order"] = h.order();
    r["provenance"] = to_string(h.provenance());
    out << r.dump(2) << '\n';
    return report.pass ? kOk : kVerificationFailed;
}

struct LpnfOptions {
    std::int64_t n = 0, k = 0, a2 = 1, a1 = 0, zx = 0, zy = 0;
    std::vector<std::int64_t> power_map;
    std::string diff_csv;
};

int run_lpnf(const LpnfOptions& o, std::ostream& out) {
    const ZFunc f = o.power_map.empty() ? quad_lpnf(o.n, o.a2, o.a1, o.k) : power_lpnf(o.power_map[0], o.power_map[1]);
    LocalZone zone;
    if (o.zx > 0 && o.zy > 0) {
        zone = {o.zx, o.zy};
    } else if (o.power_map.empty()) {
        zone = lpnf_zone_for(o.n, o.k);
    } else {
        zone = {f.domain_size(), f.codomain_size()};
    }
    const Nonlinearity nl = nonlinearity(f, zone);
    json j = {{"n", f.domain_size()},
              {"k", f.codomain_size()},
              {"zone", {{"zx", zone.zx}, {"zy", zone.zy}}},
              {"P_f", nl.measure},
              {"witness", {{"a", nl.a}, {"b", nl.b}, {"count", nl.measure}}},
              {"is_lpnf", nl.measure == 1},
              {"is_pnf", is_pnf(f)},
              {"table", f.table()}};
    out << j.dump(2) << '\n';
    if (!o.diff_csv.empty()) {
        std::ofstream csv(o.diff_csv);
        if (!csv) throw FormatError("cannot write " + o.diff_csv);
        csv << "a,x,diff\n";
        for (std::int64_t a = 1; a < f.domain_size(); ++a) {
            const auto d = diff_table(f, a);
            for (std::size_t x = 0; x < d.size(); ++x) csv << a << ',' << x << ',' << d[x] << '\n';
        }
    }
    return kOk;
}

struct AfOptions {
    std::string set;
    std::vector<std::int64_t> pair{0, 0};
    std::string kind = "periodic";
    std::int64_t zx = 1, zy = 1;
    std::string output;
};

int run_af(const AfOptions& o, std::ostream& out) {
    const SequenceSet set = read_sequence_set(o.set);
    const AfGrid grid = af_grid(set, o.pair[0], o.pair[1], {o.zx, o.zy}, parse_af_kind(o.kind));
    std::ofstream file;
    if (!o.output.empty()) {
        file.open(o.output);
        if (!file) throw FormatError("cannot write " + o.output);
    }
    std::ostream& csv = o.output.empty() ? out : file;
    csv << "tau,v,re,im,mag\n";
    for (std::int64_t tau = grid.tau_min; tau <= grid.tau_max; ++tau) {
        for (std::int64_t v = grid.v_min; v <= grid.v_max; ++v) {
            std::complex<double> z = grid.at(tau, v);
            // Collapse signed zeros and sub-rounding residue so output is stable.
            const double floor = 1e-12 * static_cast<double>(set.length());
            if (std::abs(z.real()) < floor) z.real(0.0);
            if (std::abs(z.imag()) < floor) z.imag(0.0);
            csv << tau << ',' << v << ',' << fmt_sig(z.real()) << ',' << fmt_sig(z.imag()) << ',' << fmt_sig(std::abs(z))
                << '\n';
        }
    }
    return kOk;
}

struct BoundsOptions {
    std::int64_t m = 0, len = 0, zx = 0, zy = 0;
    double theta = 0.0;
    std::string kind = "periodic";
};

int run_bounds(const BoundsOptions& o, std::ostream& out) {
    const BoundReport r = optimality_factor(o.theta, o.m, o.len, o.zx, o.zy, parse_af_kind(o.kind));
    out << to_json(r).dump(2) << '\n';
    return kOk;
}

std::vector<int> parse_ids(const std::string& text) {
    std::vector<int> ids;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            ids.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--id", "expected a comma-separated list of 1, 2, 4, 5");
        }
        if (ids.back() != 1 && ids.back() != 2 && ids.back() != 4 && ids.back() != 5) {
            throw CLI::ValidationError("--id", "table ids are 1, 2, 4, 5");
        }
    }
    if (ids.empty()) throw CLI::ValidationError("--id", "no table id given");
    return ids;
}

int run_tables(const std::vector<int>& ids, std::ostream& out) {
    bool all = true;
    for (int id : ids) {
        for (const TableCheck& c : reproduce_table(id)) {
            out << "table " << id << " M=" << c.row.set_size << " len=" << c.row.length << " zone="
                << zone_text({c.row.zx, c.row.zy}) << " theta=" << c.row.theta << " computed=" << fmt_fixed(c.rho)
                << " printed=" << fmt_fixed(c.row.printed_rho) << ' ' << (c.pass ? "PASS" : "FAIL");
            if (c.zone_erratum) {
                out << " (printed zone gives " << fmt_fixed(c.computed_rho) << "; evaluated with predicted zone "
                    << zone_text(c.evaluated_zone) << ")";
            }
            out << '\n';
            all = all && c.pass;
        }
    }
    return all ? kOk : kVerificationFailed;
}

struct VerifyOptions {
    std::string set;
    std::string meta;
    std::string kind = "both";
    std::optional<double> budget;
    std::string output;
};

int run_verify(const VerifyOptions& o, std::ostream& out) {
    const SequenceSet set = read_sequence_set(o.set);
    const std::string meta_path = o.meta.empty() ? meta_path_for(o.set).string() : o.meta;
    const json meta = read_json_file(meta_path);
    std::vector<AfKind> kinds;
    if (o.kind == "both" || o.kind == "periodic") kinds.push_back(AfKind::periodic);
    if (o.kind == "both" || o.kind == "aperiodic") kinds.push_back(AfKind::aperiodic);

    json report = {{"set", {{"size", set.size()}, {"length", set.length()}}}};
    json certs = json::array();
    bool all = true;
    for (AfKind kind : kinds) {
        const std::string key = to_string(kind);
        if (!meta.contains(key)) throw FormatError(meta_path + " has no '" + key + "' parameters");
        const LazCertificate cert = certify_laz(set, laz_params_from_json(meta.at(key)));
        all = all && cert.pass;
        certs.push_back(to_json(cert));
    }
    report["certificates"] = certs;
    report["cyclic_distinct"] = {{"exact", to_json(cyclic_distinct(set, DistinctMode::exact))},
                                 {"phase", to_json(cyclic_distinct(set, DistinctMode::phase))}};
    if (o.budget) {
        json zones = json::object();
        for (AfKind kind : kinds) {
            json list = json::array();
            for (const Zone& z : empirical_zone(set, *o.budget, kind)) list.push_back({{"zx", z.zx}, {"zy", z.zy}});
            zones[to_string(kind)] = list;
        }
        report["empirical_zones"] = {{"budget", round_sig(*o.budget)}, {"zones", zones}};
    }
    report["pass"] = all;
    emit_json(report, o.output, out);
    return all ? kOk : kVerificationFailed;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Low-ambiguity-zone sequence sets: construction, AF evaluation and certification", "laz_forge"};
    app.require_subcommand(1);
    std::size_t threads = 0;
    app.add_option("--threads", threads, "Worker threads (default: LAZ_FORGE_THREADS or all cores)")
        ->check(CLI::PositiveNumber);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Build a LAZ sequence set and its parameter sidecar");
    gen_cmd->set_help_flag("--help", "Print this help message and exit");
    gen_cmd->add_option("--n", gen.n, "LPNF domain size N (odd, > 2)")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--k", gen.k, "LPNF codomain size K (>= N)")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--a2", gen.a2, "Quadratic coefficient, coprime to N");
    gen_cmd->add_option("--a1", gen.a1, "Linear coefficient in [0, N)")->check(CLI::NonNegativeNumber);
    gen_cmd->add_option("--h", gen.h, "Companion matrix kind")->check(CLI::IsMember({"dft", "legendre", "mseq", "bjorck"}));
    auto* power = gen_cmd->add_option("--power-map", gen.power_map, "Use f(x) = alpha^x on Z_{p-1} -> Z_p")
                      ->expected(2)
                      ->check(CLI::PositiveNumber);
    gen_cmd->add_option("-o,--output", gen.output, "Output sequence-set JSON")->required();

    std::string hgen_kind;
    std::int64_t hgen_n = 0;
    std::string hgen_out, hgen_file;
    auto* hgen_cmd = app.add_subcommand("hgen", "Generate or verify a companion matrix H");
    hgen_cmd->add_option("--kind", hgen_kind, "dft | legendre | mseq | bjorck")
        ->check(CLI::IsMember({"dft", "legendre", "mseq", "bjorck"}));
    hgen_cmd->add_option("--n", hgen_n, "Order N")->check(CLI::PositiveNumber);
    hgen_cmd->add_option("-o,--output", hgen_out, "Output JSON (default stdout)");
    auto* hverify_cmd = hgen_cmd->add_subcommand("verify", "Check the companion constraints of a matrix file");
    hverify_cmd->add_option("file", hgen_file, "Sequence-set JSON holding the rows of H")->required();

    LpnfOptions lp;
    auto* lpnf_cmd = app.add_subcommand("lpnf", "Measure local nonlinearity of a quadratic or power map");
    lpnf_cmd->add_option("--n", lp.n)->check(CLI::PositiveNumber);
    lpnf_cmd->add_option("--k", lp.k)->check(CLI::PositiveNumber);
    lpnf_cmd->add_option("--a2", lp.a2);
    lpnf_cmd->add_option("--a1", lp.a1)->check(CLI::NonNegativeNumber);
    lpnf_cmd->add_option("--zx", lp.zx, "Shift half-width (default: predicted zone)")->check(CLI::PositiveNumber);
    lpnf_cmd->add_option("--zy", lp.zy, "Difference half-width")->check(CLI::PositiveNumber);
    auto* lp_power = lpnf_cmd->add_option("--power-map", lp.power_map)->expected(2)->check(CLI::PositiveNumber);
    lpnf_cmd->add_option("--diff-csv", lp.diff_csv, "Write all difference tables as CSV");

    AfOptions afo;
    auto* af_cmd = app.add_subcommand("af", "Write an AF grid over a zone as CSV");
    af_cmd->add_option("--set", afo.set)->required()->check(CLI::ExistingFile);
    af_cmd->add_option("--pair", afo.pair, "Member indices i j (default 0 0)")->expected(2)->check(CLI::NonNegativeNumber);
    af_cmd->add_option("--kind", afo.kind)->check(CLI::IsMember({"periodic", "aperiodic"}));
    af_cmd->add_option("--zx", afo.zx)->required()->check(CLI::PositiveNumber);
    af_cmd->add_option("--zy", afo.zy)->required()->check(CLI::PositiveNumber);
    af_cmd->add_option("-o,--output", afo.output, "CSV path (default stdout)");

    BoundsOptions bo;
    auto* bounds_cmd = app.add_subcommand("bounds", "Lower bound and optimality factor for (M, N, Pi, theta)");
    bounds_cmd->add_option("--m", bo.m)->required()->check(CLI::PositiveNumber);
    bounds_cmd->add_option("--len", bo.len)->required()->check(CLI::PositiveNumber);
    bounds_cmd->add_option("--zx", bo.zx)->required()->check(CLI::PositiveNumber);
    bounds_cmd->add_option("--zy", bo.zy)->required()->check(CLI::PositiveNumber);
    bounds_cmd->add_option("--theta", bo.theta)->required()->check(CLI::PositiveNumber);
    bounds_cmd->add_option("--kind", bo.kind)->check(CLI::IsMember({"periodic", "aperiodic"}));

    std::string table_ids = "1,2,4,5";
    auto* tables_cmd = app.add_subcommand("tables", "Recompute the published parameter tables");
    tables_cmd->add_option("--id", table_ids, "Comma-separated subset of 1,2,4,5");

    VerifyOptions vo;
    double budget = 0.0;
    auto* verify_cmd = app.add_subcommand("verify", "Certify a sequence set against its claimed parameters");
    verify_cmd->add_option("--set", vo.set)->required()->check(CLI::ExistingFile);
    verify_cmd->add_option("--meta", vo.meta, "Parameter sidecar (default: <set>.meta.json)");
    verify_cmd->add_option("--kind", vo.kind)->check(CLI::IsMember({"periodic", "aperiodic", "both"}));
    auto* budget_opt = verify_cmd->add_option("--empirical-budget", budget, "Also report maximal zones for this theta")
                           ->check(CLI::PositiveNumber);
    verify_cmd->add_option("-o,--output", vo.output, "Certificate JSON (default stdout)");

    std::vector<int> ids;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        if (*tables_cmd) ids = parse_ids(table_ids);
        if (*gen_cmd && power->count() == 0 && (gen.n == 0 || gen.k == 0)) {
            throw CLI::ValidationError("gen", "--n and --k are required unless --power-map is given");
        }
        if (*lpnf_cmd && lp_power->count() == 0 && (lp.n == 0 || lp.k == 0)) {
            throw CLI::ValidationError("lpnf", "--n and --k are required unless --power-map is given");
        }
        if (*hgen_cmd && !*hverify_cmd && (hgen_kind.empty() || hgen_n == 0)) {
            throw CLI::ValidationError("hgen", "--kind and --n are required");
        }
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    }
    if (budget_opt->count() > 0) vo.budget = budget;
    set_worker_count(threads);

    try {
        if (*gen_cmd) return run_gen(gen, out);
        if (*hgen_cmd) return *hverify_cmd ? run_hgen_verify(hgen_file, out) : run_hgen(hgen_kind, hgen_n, hgen_out, out);
        if (*lpnf_cmd) return run_lpnf(lp, out);
        if (*af_cmd) return run_af(afo, out);
        if (*bounds_cmd) return run_bounds(bo, out);
        if (*tables_cmd) return run_tables(ids, out);
        if (*verify_cmd) return run_verify(vo, out);
    } catch (const PreconditionError& e) {
        err << "precondition: " << e.what() << '\n';
        return kPrecondition;
    } catch (const FormatError& e) {
        err << "input: " << e.what() << '\n';
        return kPrecondition;
    }
    return kUsage;
}

}  // namespace laz::cli
