#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "hecone/errors.hpp"
#include "hecone/report.hpp"

using namespace hecone;

namespace {

struct Options {
    int g = 2;
    int k = 0;
    std::string curve_spec = "special"; // special | roots=... | coeffs=...
    std::string config_path;
    int nu = -1;
    std::uint64_t prime_bound = 500;
    bool json = false;
    std::string out_path;
};

std::vector<Rat> parse_rat_list(const std::string& s) {
    std::vector<Rat> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(rat_from_string(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(rat_from_string(cur));
    return out;
}

struct Job {
    HyperellipticCurve curve;
    int k;
    std::vector<std::pair<Rat, Rat>> divisor_points;
};

Job resolve_job(const Options& opt) {
    Job job;
    if (!opt.config_path.empty()) {
        std::ifstream in(opt.config_path);
        if (!in) throw InvalidInput("cannot open config file " + opt.config_path);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        CurveConfig cfg = parse_curve_config(text);
        job.curve = cfg.curve;
        job.k = cfg.k > 0 ? cfg.k : 2 * cfg.curve.g + 2;
        job.divisor_points = cfg.divisor_points;
        return job;
    }
    if (opt.curve_spec == "special") {
        job.curve = special_curve(opt.g);
    } else if (opt.curve_spec.rfind("roots=", 0) == 0) {
        job.curve = curve_from_roots(opt.g, parse_rat_list(opt.curve_spec.substr(6)));
    } else if (opt.curve_spec.rfind("coeffs=", 0) == 0) {
        job.curve = curve_from_coeffs(opt.g, parse_rat_list(opt.curve_spec.substr(7)));
    } else {
        throw InvalidInput("--curve must be special, roots=... or coeffs=...");
    }
    job.k = opt.k > 0 ? opt.k : 2 * opt.g + 2;
    return job;
}

void emit(const Options& opt, const Json& j, const std::string& text_fallback) {
    std::string payload = opt.json ? j.dump(2) + "\n" : text_fallback;
    if (!opt.out_path.empty()) {
        std::ofstream out(opt.out_path);
        if (!out) throw InvalidInput("cannot write " + opt.out_path);
        out << payload;
    } else {
        std::cout << payload;
    }
}

std::string render_dim_table(const Json& t) {
    std::string s;
    for (const auto& row : t["dims"])
        s += "  nu=" + std::to_string(row["nu"].get<int>()) + ": " +
             std::to_string(row["dim"].get<long>()) + "\n";
    return s;
}

int run_command(const std::string& cmd, const Options& opt) {
    Job job = resolve_job(opt);
    const int g = job.curve.g;

    if (cmd == "equations") {
        RollingFactorsPresentation pres;
        if (!job.divisor_points.empty()) {
            auto M = mumford_from_points(job.curve, job.divisor_points);
            pres = cone_equations_general(job.curve, M, job.k);
        } else {
            pres = cone_equations_kg12(job.curve, job.k);
        }
        Json j = presentation_to_json(pres);
        std::string text = "cone over curve (g=" + std::to_string(g) + ", d=" +
                           std::to_string(pres.d) + "): " + std::to_string(pres.num_gens()) +
                           " generators (" + std::to_string(pres.minors.size()) + " minors + " +
                           std::to_string(pres.phis.size()) + " phi)\n";
        for (int i = 0; i < pres.num_gens(); ++i)
            text += "  " + pres.gen_name(i) + " = " + pres.generator(i).to_string() + "\n";
        emit(opt, j, text);
        return 0;
    }
    if (cmd == "t1") {
        auto pres = cone_equations_kg12(job.curve, job.k);
        long oracle = t1_oracle(pres, opt.nu);
        long formula = t1_formula(g, pres.d, ConeShape::Curve).at(opt.nu);
        Json j{{"nu", opt.nu}, {"oracle", oracle}, {"formula", formula}};
        emit(opt, j,
             "T1(" + std::to_string(opt.nu) + "): oracle " + std::to_string(oracle) +
                 ", formula " + std::to_string(formula) + "\n");
        return oracle == formula ? 0 : 4;
    }
    if (cmd == "t2") {
        Json j = t2_report(g, 2 * job.k);
        emit(opt, j, "T2 table (formula):\n" + render_dim_table(j["formula"]) +
                         "main lemma total: " + std::to_string(j["main_lemma_total"].get<long>()) +
                         "\n");
        return j["agree"].get<bool>() ? 0 : 4;
    }
    if (cmd == "versal") {
        auto fam = first_order_family(job.curve, job.k);
        auto base = base_space_equations(fam);
        Json j = base_space_to_json(base);
        std::string text = "base space (negative degree), " +
                           std::to_string(base.equations.size()) + " equations:\n";
        for (const auto& e : base.equations) text += "  " + e.to_string() + "\n";
        emit(opt, j, text);
        return 0;
    }
    if (cmd == "basecount") {
        auto fam = first_order_family(job.curve, job.k);
        auto base = base_space_equations(fam);
        auto hf = hilbert_function_check(base, 6);
        long expected = 1L << (2 * g + 1);
        auto scan = scan_primes_for_point_count(base, opt.prime_bound, expected);
        Json j;
        j["hilbert"] = hf;
        j["hilbert_expected"] = ci_hilbert_series(2 * g + 1, 6);
        if (scan) {
            j["prime"] = scan->prime;
            j["num_points"] = scan->num_points;
            j["smooth"] = scan->num_smooth;
        } else {
            j["prime"] = nullptr;
        }
        std::string text = "hilbert:";
        for (long h : hf) text += " " + std::to_string(h);
        text += "\n";
        if (scan)
            text += "prime " + std::to_string(scan->prime) + ": " +
                    std::to_string(scan->num_points) + " points, " +
                    std::to_string(scan->num_smooth) + " smooth\n";
        else
            text += "no prime below the bound attains the expected count\n";
        emit(opt, j, text);
        return scan ? 0 : 4;
    }
    if (cmd == "components") {
        Json j;
        auto cc = count_components(g);
        j["count"] = cc.count;
        std::string text = "smoothing components: " + std::to_string(cc.count) + "\n";
        if (job.curve.branch_xs) {
            auto comps = enumerate_components(*job.curve.branch_xs);
            j["hyperplanes"] = components_to_json(comps);
            text += "distinct hyperplanes: " + std::to_string(comps.size()) + "\n";
        }
        emit(opt, j, text);
        return 0;
    }
    if (cmd == "topology") {
        Json j = topology_report(g);
        std::string text = "H1(M) = " + j["H1M"]["pretty"].get<std::string>() + "\n";
        text += "smoothing data count: " +
                (j["count"].is_number() ? std::to_string(j["count"].get<long>()) :
                                          j["count"].get<std::string>()) +
                "\n";
        emit(opt, j, text);
        return 0;
    }
    if (cmd == "report") {
        Json j = full_report(job.curve, job.k, opt.prime_bound);
        emit(opt, j, j.dump(2) + "\n");
        return 0;
    }
    throw InvalidInput("unknown command " + cmd);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations for cones over hyperelliptic curves"};
    app.require_subcommand(1);
    Options opt;

    std::vector<std::string> commands = {"equations", "t1", "t2", "versal",
                                         "basecount", "components", "topology", "report"};
    std::map<std::string, CLI::App*> subs;
    for (const auto& c : commands) {
        CLI::App* s = app.add_subcommand(c);
        s->add_option("--g", opt.g, "genus");
        s->add_option("--k", opt.k, "L = k*g12 (default 2g+2)");
        s->add_option("--curve", opt.curve_spec, "special | roots=r1,r2,... | coeffs=a0,a1,...");
        s->add_option("--config", opt.config_path, "JSON config file");
        s->add_option("--nu", opt.nu, "graded degree");
        s->add_option("--prime-bound", opt.prime_bound, "largest prime for point counting");
        s->add_flag("--json", opt.json, "JSON output");
        s->add_option("--out", opt.out_path, "write output to a file");
        subs[c] = s;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        for (const auto& [name, sub] : subs)
            if (sub->parsed()) return run_command(name, opt);
        std::cerr << "no command given\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error [" << e.type() << "]: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error [InternalError]: " << e.what() << "\n";
        return 4;
    }
}
