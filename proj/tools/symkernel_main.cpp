// Command-line surface for kernel evaluation, identity verification,
// basis listing and Gram certification. JSON (default) or CSV to stdout,
// diagnostics to stderr.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage/parse error,
// 3 domain error, 4 degenerate-point refusal.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "symkernel/symkernel.hpp"

using json = nlohmann::ordered_json;
using namespace symkernel;

namespace {

struct RunConfig {
    int n = 2;
    double lambda = 2.0;
    int max_weight = 30;
    std::int64_t samples = 1000000;
    std::uint64_t seed = 0;
    double tolerance = 1e-8;
    std::string format = "json";
    double radius = 0.5;
    double prune = 0.0;
};

void add_common_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--n", cfg.n, "ambient dimension")->check(CLI::Range(1, 8));
    cmd->add_option("--lambda", cfg.lambda, "weight parameter (>= 1; 1 = Hardy)");
    cmd->add_option("--max-weight", cfg.max_weight, "series/basis truncation |m| <= D")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--samples", cfg.samples, "Monte Carlo sample count");
    cmd->add_option("--seed", cfg.seed, "64-bit RNG seed")->envname("SYMKERNEL_SEED");
    cmd->add_option("--tolerance", cfg.tolerance, "pass/fail tolerance")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--radius", cfg.radius, "modulus bound for random test points")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--prune", cfg.prune,
                    "coefficient prune threshold for exact polynomials (0 = keep all)")
        ->check(CLI::NonNegativeNumber);
}

json config_json(const RunConfig& cfg) {
    return json{{"n", cfg.n},           {"lambda", cfg.lambda},
                {"max_weight", cfg.max_weight}, {"samples", cfg.samples},
                {"seed", cfg.seed},     {"tolerance", cfg.tolerance},
                {"format", cfg.format}, {"radius", cfg.radius},
                {"prune", cfg.prune}};
}

json complex_json(Cplx v) { return json{{"re", v.real()}, {"im", v.imag()}}; }

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Cplx parse_complex(const std::string& text) {
    double re = 0.0, im = 0.0;
    char trailing = 0;
    const int got = std::sscanf(text.c_str(), "%lf,%lf%c", &re, &im, &trailing);
    if (got != 2)
        throw CLI::ValidationError("coordinates", "expected a \"re,im\" pair, got '" +
                                                      text + "'");
    return Cplx(re, im);
}

CVec parse_point(const std::vector<std::string>& coords, int n, const char* name) {
    if (static_cast<int>(coords.size()) != n)
        throw CLI::ValidationError(name, "expected " + std::to_string(n) +
                                             " coordinates, got " +
                                             std::to_string(coords.size()));
    CVec z;
    z.reserve(coords.size());
    for (const auto& c : coords) z.push_back(parse_complex(c));
    return z;
}

double rel_deviation(Cplx a, Cplx b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale < 1e-300 ? 0.0 : std::abs(a - b) / scale;
}

// ---------------------------------------------------------------- eval --

struct EvalArgs {
    std::string kernel;
    std::string method; // empty = per-kernel default
    std::vector<std::string> z, w, u, v;
};

EvalMethod parse_method(const std::string& name) {
    if (name == "determinant") return EvalMethod::determinant;
    if (name == "series") return EvalMethod::series;
    if (name == "product") return EvalMethod::product;
    if (name == "explicit") return EvalMethod::explicit_form;
    throw CLI::ValidationError("--method", "unknown method '" + name + "'");
}

KernelResult dispatch_eval(const RunConfig& cfg, const EvalArgs& args) {
    const Weight weight(cfg.lambda);
    if (args.kernel == "g2-explicit") {
        const CVec u = parse_point(args.u, 2, "--u");
        const CVec v = parse_point(args.v, 2, "--v");
        return KernelResult{g2_bergman_explicit({u, std::nullopt}, {v, std::nullopt}),
                            EvalMethod::explicit_form, std::nullopt, std::nullopt};
    }
    const CVec z = parse_point(args.z, cfg.n, "--z");
    const CVec w = parse_point(args.w, cfg.n, "--w");
    if (args.kernel == "polydisc")
        return KernelResult{bergman_kernel_polydisc(z, w, weight), EvalMethod::product,
                            std::nullopt, std::nullopt};
    if (args.kernel == "anti") {
        const EvalMethod m =
            args.method.empty() ? EvalMethod::determinant : parse_method(args.method);
        if (m == EvalMethod::determinant) return kernel_anti_det(z, w, weight);
        if (m == EvalMethod::series)
            return kernel_anti_series(z, w, weight, cfg.max_weight);
        throw CLI::ValidationError("--method", "anti supports determinant or series");
    }
    if (args.kernel == "bergman-sym") {
        const EvalMethod m =
            args.method.empty() ? EvalMethod::determinant : parse_method(args.method);
        return bergman_kernel_symmetrized(z, w, weight, m, cfg.max_weight);
    }
    if (args.kernel == "szego") {
        const EvalMethod m =
            args.method.empty() ? EvalMethod::product : parse_method(args.method);
        return szego_kernel_symmetrized(z, w, m, cfg.max_weight);
    }
    if (args.kernel == "hardy-anti") return hardy_kernel_anti(z, w);
    throw CLI::ValidationError("--kernel", "unknown kernel '" + args.kernel + "'");
}

int run_eval(const RunConfig& cfg, const EvalArgs& args) {
    const KernelResult r = dispatch_eval(cfg, args);
    if (cfg.format == "csv") {
        std::printf("kernel,method,value_re,value_im,truncation_degree,tail_estimate\n");
        std::printf("%s,%s,%s,%s,%s,%s\n", args.kernel.c_str(), to_string(r.method),
                    fmt_double(r.value.real()).c_str(), fmt_double(r.value.imag()).c_str(),
                    r.truncation_degree ? std::to_string(*r.truncation_degree).c_str() : "",
                    r.tail_estimate ? fmt_double(*r.tail_estimate).c_str() : "");
        return 0;
    }
    json result{{"kernel", args.kernel},
                {"value", complex_json(r.value)},
                {"method", to_string(r.method)}};
    if (r.truncation_degree) result["truncation_degree"] = *r.truncation_degree;
    if (r.tail_estimate) result["tail_estimate"] = *r.tail_estimate;
    json out{{"command", "eval"}, {"config", config_json(cfg)}, {"result", result}};
    std::cout << out.dump() << "\n";
    return 0;
}

// -------------------------------------------------------------- verify --

struct Deviations {
    double max_abs = 0.0;
    double max_rel = 0.0;

    void record(Cplx a, Cplx b) {
        max_abs = std::max(max_abs, std::abs(a - b));
        max_rel = std::max(max_rel, rel_deviation(a, b));
    }
};

int run_verify(const RunConfig& cfg, const std::string& identity, int trials) {
    const Weight weight(cfg.lambda);
    PointSampler sampler(cfg.seed);
    Deviations dev;
    json extra = json::object();
    bool pass = true;

    if (identity == "det-vs-series" || identity == "sgn-vs-anti" ||
        identity == "cauchy" || identity == "szego-product" ||
        identity == "g2-corollary") {
        if (identity == "g2-corollary" && (cfg.n != 2 || cfg.lambda != 2.0))
            throw CLI::ValidationError("--identity",
                                       "g2-corollary requires --n 2 --lambda 2");
        for (int t = 0; t < trials; ++t) {
            const bool need_nondegenerate =
                identity == "szego-product" || identity == "g2-corollary";
            const CVec z = need_nondegenerate
                               ? sampler.nondegenerate_point(cfg.n, cfg.radius)
                               : sampler.point(cfg.n, cfg.radius);
            const CVec w = need_nondegenerate
                               ? sampler.nondegenerate_point(cfg.n, cfg.radius)
                               : sampler.point(cfg.n, cfg.radius);
            if (identity == "det-vs-series") {
                dev.record(kernel_anti_det(z, w, weight).value,
                           kernel_anti_series(z, w, weight, cfg.max_weight).value);
            } else if (identity == "sgn-vs-anti") {
                dev.record(kernel_sgn(z, w, weight, cfg.max_weight).value,
                           kernel_anti_series(z, w, weight, cfg.max_weight).value);
            } else if (identity == "cauchy") {
                dev.record(
                    szego_kernel_symmetrized(z, w, EvalMethod::product).value,
                    szego_kernel_symmetrized(z, w, EvalMethod::series, cfg.max_weight)
                        .value);
            } else if (identity == "szego-product") {
                dev.record(szego_kernel_symmetrized(z, w, EvalMethod::determinant).value,
                           szego_kernel_symmetrized(z, w, EvalMethod::product).value);
            } else { // g2-corollary
                dev.record(
                    g2_bergman_explicit(symmetrize(z), symmetrize(w)),
                    bergman_kernel_symmetrized(z, w, weight, EvalMethod::determinant)
                        .value);
            }
        }
        pass = dev.max_rel <= cfg.tolerance;
    } else if (identity == "jsnorm") {
        const double closed = js_norm_sq(cfg.n, weight);
        const auto js =
            antisymmetrized_monomial_poly(delta(cfg.n).parts(), Cplx(1.0), cfg.prune);
        const Cplx analytic = inner_product_analytic(js, js, weight);
        dev.record(Cplx(closed), analytic);
        extra["value"] = closed;
        pass = dev.max_rel <= cfg.tolerance;
    } else if (identity == "lemma-ortho") {
        const auto parts = enumerate_strict_partitions(cfg.n, cfg.max_weight);
        std::int64_t pairs = 0, violations = 0;
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = 0; j < parts.size(); ++j) {
                ++pairs;
                if (orbit_disjointness(parts[i], parts[j]) != (i != j)) ++violations;
            }
        extra["pairs_checked"] = pairs;
        extra["violations"] = violations;
        pass = violations == 0;
    } else {
        throw CLI::ValidationError("--identity", "unknown identity '" + identity + "'");
    }

    if (cfg.format == "csv") {
        std::printf("identity,trials,max_abs_deviation,max_rel_deviation,pass\n");
        std::printf("%s,%d,%s,%s,%d\n", identity.c_str(), trials,
                    fmt_double(dev.max_abs).c_str(), fmt_double(dev.max_rel).c_str(),
                    pass ? 1 : 0);
        return pass ? 0 : 1;
    }
    json result{{"identity", identity}, {"trials", trials}};
    for (auto& [k, v] : extra.items()) result[k] = v;
    json out{{"command", "verify"},
             {"config", config_json(cfg)},
             {"result", result},
             {"deviations", json{{"max_abs", dev.max_abs}, {"max_rel", dev.max_rel}}},
             {"pass", pass}};
    std::cout << out.dump() << "\n";
    return pass ? 0 : 1;
}

// ---------------------------------------------------------------- gram --

int run_gram(const RunConfig& cfg, const std::string& method_name) {
    const Weight weight(cfg.lambda);
    GramMethod method;
    if (method_name == "analytic") method = GramMethod::analytic;
    else if (method_name == "quadrature") method = GramMethod::quadrature;
    else method = GramMethod::montecarlo;

    const auto basis = enumerate_strict_partitions(cfg.n, cfg.max_weight);
    GramOptions opts;
    opts.mc_samples = cfg.samples;
    opts.seed = cfg.seed;
    opts.prune_threshold = cfg.prune;
    const GramReport report = gram_matrix(basis, weight, method, opts);

    bool pass;
    double max_sigma_ratio = 0.0;
    if (method == GramMethod::montecarlo) {
        pass = true;
        for (std::size_t i = 0; i < report.matrix.size(); ++i)
            for (std::size_t j = 0; j < report.matrix.size(); ++j) {
                const Cplx want = i == j ? Cplx(1.0) : Cplx(0.0);
                const double err = std::abs(report.matrix[i][j] - want);
                const double se = (*report.stderrs)[i][j];
                if (err > 3.0 * se + 1e-12) pass = false;
                if (se > 0.0) max_sigma_ratio = std::max(max_sigma_ratio, err / se);
            }
    } else {
        pass = std::max(report.max_offdiag, report.max_diag_error) <= cfg.tolerance;
    }

    if (cfg.format == "csv") {
        std::printf("p,q,value_re,value_im%s\n", report.stderrs ? ",stderr" : "");
        for (std::size_t i = 0; i < report.matrix.size(); ++i)
            for (std::size_t j = 0; j < report.matrix.size(); ++j) {
                std::string pi, qj;
                for (int k = 0; k < report.basis_labels[i].length(); ++k)
                    pi += (k ? " " : "") + std::to_string(report.basis_labels[i][k]);
                for (int k = 0; k < report.basis_labels[j].length(); ++k)
                    qj += (k ? " " : "") + std::to_string(report.basis_labels[j][k]);
                std::printf("\"%s\",\"%s\",%s,%s", pi.c_str(), qj.c_str(),
                            fmt_double(report.matrix[i][j].real()).c_str(),
                            fmt_double(report.matrix[i][j].imag()).c_str());
                if (report.stderrs)
                    std::printf(",%s", fmt_double((*report.stderrs)[i][j]).c_str());
                std::printf("\n");
            }
        return pass ? 0 : 1;
    }

    json labels = json::array();
    for (const auto& p : report.basis_labels)
        labels.push_back(std::vector<int>(p.parts().begin(), p.parts().end()));
    json matrix = json::array();
    for (const auto& row : report.matrix) {
        json jrow = json::array();
        for (const Cplx& v : row) jrow.push_back(complex_json(v));
        matrix.push_back(jrow);
    }
    json result{{"method", to_string(report.method)}, {"basis", labels}, {"matrix", matrix}};
    if (report.stderrs) result["stderrs"] = *report.stderrs;
    json deviations{{"max_offdiag", report.max_offdiag},
                    {"max_diag_error", report.max_diag_error}};
    if (method == GramMethod::montecarlo) deviations["max_sigma_ratio"] = max_sigma_ratio;
    json out{{"command", "gram"},
             {"config", config_json(cfg)},
             {"result", result},
             {"deviations", deviations},
             {"pass", pass}};
    std::cout << out.dump() << "\n";
    return pass ? 0 : 1;
}

// --------------------------------------------------------------- basis --

int run_basis(const RunConfig& cfg) {
    const Weight weight(cfg.lambda);
    const auto ms = enumerate_partitions(cfg.n, cfg.max_weight);

    if (cfg.format == "csv") {
        std::printf("m,p,c_p,norm_a_p\n");
        for (const auto& m : ms) {
            const auto p = StrictPartition::from_partition(m);
            std::string mi, pi;
            for (int k = 0; k < cfg.n; ++k) {
                mi += (k ? " " : "") + std::to_string(m[k]);
                pi += (k ? " " : "") + std::to_string(p[k]);
            }
            std::printf("\"%s\",\"%s\",%s,%s\n", mi.c_str(), pi.c_str(),
                        fmt_double(basis_norm_constant(p, weight)).c_str(),
                        fmt_double(antisym_basis_norm(p, weight)).c_str());
        }
        return 0;
    }

    json rows = json::array();
    for (const auto& m : ms) {
        const auto p = StrictPartition::from_partition(m);
        rows.push_back(json{{"m", std::vector<int>(m.parts().begin(), m.parts().end())},
                            {"p", std::vector<int>(p.parts().begin(), p.parts().end())},
                            {"c_p", basis_norm_constant(p, weight)},
                            {"norm_a_p", antisym_basis_norm(p, weight)}});
    }
    json out{{"command", "basis"}, {"config", config_json(cfg)}, {"result", rows}};
    std::cout << out.dump() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"reproducing kernels on the symmetrized polydisc"};
    app.require_subcommand(1);

    RunConfig cfg;
    EvalArgs eval_args;
    std::string identity, gram_method = "analytic";
    int trials = 20;

    CLI::App* eval = app.add_subcommand("eval", "evaluate a kernel at given points");
    add_common_options(eval, cfg);
    eval->add_option("--kernel", eval_args.kernel, "kernel to evaluate")
        ->required()
        ->check(CLI::IsMember(
            {"polydisc", "anti", "bergman-sym", "szego", "hardy-anti", "g2-explicit"}));
    eval->add_option("--method", eval_args.method,
                     "determinant | series | product | explicit");
    eval->add_option("--z", eval_args.z, "first point, coordinates as re,im");
    eval->add_option("--w", eval_args.w, "second point, coordinates as re,im");
    eval->add_option("--u", eval_args.u, "first G_2 point (g2-explicit)");
    eval->add_option("--v", eval_args.v, "second G_2 point (g2-explicit)");

    CLI::App* verify = app.add_subcommand("verify", "check a kernel identity");
    add_common_options(verify, cfg);
    verify->add_option("--identity", identity, "identity to verify")
        ->required()
        ->check(CLI::IsMember({"det-vs-series", "cauchy", "szego-product", "g2-corollary",
                               "sgn-vs-anti", "jsnorm", "lemma-ortho"}));
    verify->add_option("--trials", trials, "number of random point pairs")
        ->check(CLI::PositiveNumber);

    CLI::App* gram = app.add_subcommand("gram", "Gram matrix of the orthonormal basis");
    add_common_options(gram, cfg);
    gram->add_option("--method", gram_method, "analytic | quadrature | montecarlo")
        ->check(CLI::IsMember({"analytic", "quadrature", "montecarlo"}));

    CLI::App* basis = app.add_subcommand("basis", "list basis labels and norm constants");
    add_common_options(basis, cfg);
    (void)basis;

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints the message to stderr
        return 2;
    }

    try {
        if (eval->parsed()) return run_eval(cfg, eval_args);
        if (verify->parsed()) return run_verify(cfg, identity, trials);
        if (gram->parsed()) return run_gram(cfg, gram_method);
        return run_basis(cfg);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const degenerate_point_error& e) {
        std::cerr << e.what() << " (try --method series)\n";
        return 4;
    } catch (const domain_error& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const no_convergence_error& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const singular_evaluation_error& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}
