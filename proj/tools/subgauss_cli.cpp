// subgauss: command-line front end.
//
//   subgauss q        [P...] [--grid a:b:n] [--format csv|json]
//   subgauss bound    (--spec-file F | --probs L [--coeffs L] [--dependent]) [--grid X]
//                     [--seed S] [--mc-samples N] [--mc] [--exact-required] [--tol T]
//   subgauss verify   --suite kearns-saul|sharpness|domination|argmax|all [--grid P] [--tol T]
//   subgauss example32 [--n N] [--grid X]
//
// Exit codes: 0 ok, 1 verification failure, 2 usage or parse error, 3 infeasible request.
// Data goes to stdout, diagnostics to stderr. SUBGAUSS_THREADS caps worker threads.
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "subgauss/subgauss.hpp"

namespace {

using nlohmann::json;
using namespace subgauss;

enum Exit : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kInfeasible = 3 };

struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string cell(const std::optional<double>& v) {
    return v ? detail::fmt17(*v) : std::string();
}

json jcell(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

template <class F>
std::optional<double> try_value(F&& f) {
    try {
        return f();
    } catch (const DomainError&) {
        return std::nullopt;
    }
}

// ---- q ---------------------------------------------------------------------

struct QOptions {
    std::vector<std::string> ps;
    std::string grid;
    std::string format = "csv";
};

int run_q(const QOptions& o) {
    std::vector<double> ps;
    for (const auto& s : o.ps) {
        for (double p : parse_list(s, "p")) ps.push_back(p);
    }
    if (!o.grid.empty()) {
        for (double p : parse_grid(o.grid)) ps.push_back(p);
    }
    if (ps.empty()) throw ParseError("q needs p values or --grid");

    struct Row {
        double p, q;
        std::optional<double> l0, asym, gls;
    };
    std::vector<Row> rows;
    for (double pv : ps) {
        Probability prob(pv);
        const CenteredIndicator ind(prob);
        rows.push_back({pv, q_norm(prob).value(), try_value([&] { return lambda_star(prob); }),
                        try_value([&] { return q_asymptotic(prob); }), gls_norm(ind).value});
    }

    if (o.format == "json") {
        json out = json::array();
        for (const auto& r : rows) {
            out.push_back({{"p", r.p},
                           {"q", r.q},
                           {"lambda0", jcell(r.l0)},
                           {"q_asymptotic", jcell(r.asym)},
                           {"gls_norm", jcell(r.gls)}});
        }
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "p,q,lambda0,q_asymptotic,gls_norm\n";
        for (const auto& r : rows) {
            std::cout << detail::fmt17(r.p) << ',' << detail::fmt17(r.q) << ',' << cell(r.l0) << ','
                      << cell(r.asym) << ',' << cell(r.gls) << '\n';
        }
    }
    return kOk;
}

// ---- bound -----------------------------------------------------------------

struct BoundOptions {
    std::string spec_file;
    std::string probs;
    std::string coeffs;
    bool dependent = false;
    std::string grid;
    std::string format = "csv";
    std::uint64_t seed = 1;
    std::uint64_t mc_samples = 100000;
    bool force_mc = false;
    bool exact_required = false;
    double tol = 1e-12;
    std::size_t cap = oracles::kDefaultPoissonBinomialCap;
};

WeightedIndicatorSum load_sum(const BoundOptions& o) {
    if (!o.spec_file.empty()) {
        if (!o.probs.empty()) throw ParseError("use either --spec-file or --probs, not both");
        std::ifstream in(o.spec_file);
        if (!in) throw ParseError("cannot open spec file '" + o.spec_file + "'");
        return parse_sum_spec(in);
    }
    if (o.probs.empty()) throw ParseError("bound needs --spec-file or --probs");
    const auto ps = parse_list(o.probs, "probability");
    std::vector<double> cs(ps.size(), 1.0);
    if (!o.coeffs.empty()) {
        cs = parse_list(o.coeffs, "coefficient");
        if (cs.size() != ps.size()) throw ParseError("--coeffs and --probs differ in length");
    }
    std::vector<IndicatorTerm> terms;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        try {
            terms.push_back({cs[i], Probability(ps[i])});
        } catch (const DomainError& e) {
            throw ParseError(e.what());
        }
    }
    return WeightedIndicatorSum(std::move(terms),
                                o.dependent ? Dependence::arbitrary : Dependence::independent);
}

int run_bound(const BoundOptions& o) {
    const auto sum = load_sum(o);
    const unsigned threads = detail::thread_count_from_env();
    std::vector<double> xs =
        o.grid.empty() ? detail::linear_grid(0.0, sum.support_radius(), 11) : parse_grid(o.grid);
    for (double x : xs) {
        if (!(x >= 0.0)) throw ParseError("x values must be >= 0");
    }

    std::optional<oracles::DistributionTable> law;
    if (sum.independent()) {
        if (sum.unit_coefficients() && sum.size() <= o.cap) {
            std::vector<Probability> ps;
            for (const auto& t : sum.terms()) ps.push_back(t.prob);
            law = oracles::poisson_binomial_table(ps, o.cap);
        } else if (sum.size() <= oracles::kMaxEnumeratedTerms) {
            law = oracles::enumerate_law(sum);
        }
    }
    if (!law && o.exact_required) {
        throw InfeasibleError(sum.independent()
                                  ? "exact tail infeasible: too many weighted terms"
                                  : "exact tail undefined for arbitrarily dependent terms");
    }
    const bool use_mc = sum.independent() && (o.force_mc || !law);

    const auto nb = applicable_norm_bound(sum);
    BoundReport rep;
    rep.meta.probs_digest = sum_digest(sum);
    rep.meta.n_terms = sum.size();
    rep.meta.dependence = sum.independent() ? "independent" : "arbitrary";
    rep.meta.bound_kind = std::string(to_string(nb.kind));
    rep.meta.norm_bound = nb.value;
    rep.meta.tol = o.tol;
    if (use_mc) rep.meta.seeds.push_back(o.seed);

    for (double x : xs) {
        BoundRow row;
        row.x = x;
        row.subgaussian_bound = sum_tail_bound(sum, x);
        if (law) row.exact_tail = oracles::exact_tail(*law, x, oracles::TailSide::max_both);
        if (use_mc) {
            row.mc_estimate = oracles::monte_carlo_tail(sum, x, o.mc_samples, o.seed,
                                                        oracles::TailSide::max_both, threads);
        }
        if (sum.independent()) row.hoeffding_bound = hoeffding_bound(sum, x);
        rep.rows.push_back(row);
    }

    if (o.format == "json") {
        std::cout << json(rep).dump(2) << '\n';
    } else {
        write_csv(std::cout, rep);
    }

    const auto bad = rep.violations(o.tol);
    if (!bad.empty()) {
        const auto& r = rep.rows[bad.front()];
        std::cerr << "bound violated at x=" << detail::fmt17(r.x) << ": exact "
                  << detail::fmt17(*r.exact_tail) << " > bound " << detail::fmt17(r.subgaussian_bound)
                  << '\n';
        return kVerifyFailed;
    }
    return kOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyOptions {
    std::string suite;
    std::string grid;
    std::optional<double> tol;
    std::uint64_t seed = 20240501;
    std::size_t lambdas = 10000;
    std::size_t sums = 500;
    std::string format = "text";
};

int run_verify(const VerifyOptions& o) {
    VerifyConfig cfg;
    if (!o.grid.empty()) cfg.p_grid = parse_grid(o.grid);
    for (double p : cfg.p_grid) {
        if (!(p >= 0.0 && p <= 1.0)) throw ParseError("p grid values must lie in [0, 1]");
    }
    cfg.tol = o.tol;
    cfg.seed = o.seed;
    cfg.lambda_count = o.lambdas;
    cfg.random_sums = o.sums;
    cfg.threads = detail::thread_count_from_env();

    std::vector<VerifyResult> results;
    const bool all = o.suite == "all";
    if (all || o.suite == "kearns-saul") results.push_back(verify_kearns_saul(cfg));
    if (all || o.suite == "sharpness") results.push_back(verify_sharpness(cfg));
    if (all || o.suite == "argmax") results.push_back(verify_argmax(cfg));
    if (all || o.suite == "domination") results.push_back(verify_domination(cfg));

    bool ok = true;
    json out = json::array();
    for (const auto& r : results) {
        ok = ok && r.passed;
        if (o.format == "json") {
            out.push_back({{"suite", r.suite},
                           {"passed", r.passed},
                           {"checks", r.checks},
                           {"violations", r.violations},
                           {"worst", r.worst},
                           {"threshold", r.threshold},
                           {"witness", r.witness}});
        } else {
            std::cout << r.suite << ": " << (r.passed ? "PASS" : "FAIL") << " checks=" << r.checks
                      << " violations=" << r.violations << " worst=" << detail::fmt17(r.worst)
                      << " threshold=" << detail::fmt17(r.threshold) << " witness: " << r.witness
                      << '\n';
        }
    }
    if (o.format == "json") std::cout << out.dump(2) << '\n';
    return ok ? kOk : kVerifyFailed;
}

// ---- example32 -------------------------------------------------------------

struct Example32Options {
    std::size_t n = 4096;
    std::string grid = "1,1.5,2,2.5";
    std::string format = "csv";
    std::size_t cap = oracles::kDefaultPoissonBinomialCap;
};

int run_example32(const Example32Options& o) {
    if (o.n == 0) throw ParseError("--n must be positive");
    if (o.n > o.cap) {
        throw InfeasibleError("n = " + std::to_string(o.n) + " exceeds the exact table cap " +
                              std::to_string(o.cap));
    }
    std::vector<double> xs;
    for (double x : parse_grid(o.grid)) {
        if (x > 0.0) {
            xs.push_back(x);
        } else {
            std::cerr << "example32: skipping x=" << detail::fmt17(x) << " (ratio needs x > 0)\n";
        }
    }
    const auto law = oracles::poisson_binomial_table(std::vector<double>(o.n, 0.5), o.cap);
    const double half_root_n = 0.5 * std::sqrt(static_cast<double>(o.n));

    struct Row {
        double x, tail, gauss, ratio;
    };
    std::vector<Row> rows;
    bool dominated = true;
    for (double x : xs) {
        // 2 S(n) / sqrt(n) > x  <=>  S(n) > x sqrt(n) / 2
        const double tail = oracles::exact_tail(law, x * half_root_n, oracles::TailSide::upper);
        const double gauss = hoeffding_reference_tail(o.n, x);
        rows.push_back({x, tail, gauss, tail * x * std::exp(0.5 * x * x)});
        dominated = dominated && tail <= gauss;
    }

    if (o.format == "json") {
        json out = json::array();
        for (const auto& r : rows) {
            out.push_back({{"x", r.x}, {"exact_tail", r.tail}, {"gaussian_bound", r.gauss}, {"ratio", r.ratio}});
        }
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "x,exact_tail,gaussian_bound,ratio\n";
        for (const auto& r : rows) {
            std::cout << detail::fmt17(r.x) << ',' << detail::fmt17(r.tail) << ','
                      << detail::fmt17(r.gauss) << ',' << detail::fmt17(r.ratio) << '\n';
        }
    }
    if (!dominated) {
        std::cerr << "example32: exact tail exceeded exp(-x^2/2)\n";
        return kVerifyFailed;
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Subgaussian norms of centered indicators and tail bounds for their sums"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    const std::vector<std::string> formats{"csv", "json"};

    QOptions qo;
    auto* q = app.add_subcommand("q", "Tabulate Q(p), lambda0, the asymptote and the GLS norm");
    q->add_option("p", qo.ps, "probabilities (comma lists allowed)");
    q->add_option("--grid", qo.grid, "p grid as start:stop:count or a,b,c");
    q->add_option("--format", qo.format)->check(CLI::IsMember(formats));

    BoundOptions bo;
    auto* b = app.add_subcommand("bound", "Compare tail bounds with exact and Monte Carlo tails");
    b->add_option("--spec-file", bo.spec_file, "sum spec file ('c p' per line)");
    b->add_option("--probs", bo.probs, "comma-separated probabilities");
    b->add_option("--coeffs", bo.coeffs, "comma-separated coefficients (default all 1)");
    b->add_flag("--dependent", bo.dependent, "terms may be arbitrarily dependent");
    b->add_option("--grid", bo.grid, "x grid as start:stop:count or a,b,c");
    b->add_option("--format", bo.format)->check(CLI::IsMember(formats));
    b->add_option("--seed", bo.seed, "Monte Carlo seed");
    b->add_option("--mc-samples", bo.mc_samples, "Monte Carlo sample count")->check(CLI::Range(100ULL, 1000000000000ULL));
    b->add_flag("--mc", bo.force_mc, "also run Monte Carlo when exact tails are available");
    b->add_flag("--exact-required", bo.exact_required, "fail with exit 3 if exact tails are infeasible");
    b->add_option("--tol", bo.tol, "slack allowed when checking exact tail <= bound");
    b->add_option("--cap", bo.cap, "largest n for the exact Poisson-binomial table");

    VerifyOptions vo;
    auto* v = app.add_subcommand("verify", "Run a verification sweep");
    v->add_option("--suite", vo.suite)
        ->required()
        ->check(CLI::IsMember({"kearns-saul", "sharpness", "domination", "argmax", "all"}));
    v->add_option("--grid", vo.grid, "p grid as start:stop:count or a,b,c");
    v->add_option("--tol", vo.tol, "override the suite threshold");
    v->add_option("--seed", vo.seed);
    v->add_option("--lambdas", vo.lambdas, "kearns-saul: lambda values per p")->check(CLI::PositiveNumber);
    v->add_option("--sums", vo.sums, "domination: number of enumerated random sums");
    v->add_option("--format", vo.format)->check(CLI::IsMember({"text", "json"}));

    Example32Options eo;
    auto* e = app.add_subcommand("example32", "Fair-coin tails of 2 S(n)/sqrt(n) against exp(-x^2/2)");
    e->add_option("--n", eo.n, "number of fair coins");
    e->add_option("--grid", eo.grid, "x grid (x > 0)");
    e->add_option("--format", eo.format)->check(CLI::IsMember(formats));
    e->add_option("--cap", eo.cap, "largest n for the exact table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& ex) {
        return app.exit(ex);
    } catch (const CLI::CallForAllHelp& ex) {
        return app.exit(ex);
    } catch (const CLI::CallForVersion& ex) {
        return app.exit(ex);
    } catch (const CLI::ParseError& ex) {
        app.exit(ex);
        return kUsage;
    }

    try {
        if (*q) return run_q(qo);
        if (*b) return run_bound(bo);
        if (*v) return run_verify(vo);
        if (*e) return run_example32(eo);
    } catch (const InfeasibleError& ex) {
        std::cerr << "infeasible: " << ex.what() << '\n';
        return kInfeasible;
    } catch (const CapacityError& ex) {
        std::cerr << "infeasible: " << ex.what() << '\n';
        return kInfeasible;
    } catch (const ParseError& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return kUsage;
    } catch (const DomainError& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
