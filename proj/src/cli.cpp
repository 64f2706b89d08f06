#include "wilsonid/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>

#include "CLI11.hpp"
#include "wilsonid/combinatorics.hpp"
#include "wilsonid/identity.hpp"
#include "wilsonid/modular.hpp"
#include "wilsonid/report.hpp"
#include "wilsonid/sampling.hpp"

namespace wilsonid {
namespace {

constexpr std::uint64_t kDefaultTrials = 10;
constexpr const char* kDefaultMaxWilson = "10000000";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::int64_t parse_count(const std::string& text, const char* what, std::int64_t min) {
    Integer v;
    try {
        v = Integer::parse(text);
    } catch (const std::invalid_argument&) {
        throw UsageError(std::string(what) + " must be an integer, got '" + text + "'");
    }
    if (!v.fits_int64() || v < Integer(min)) {
        throw UsageError(std::string(what) + " must be an integer >= " + std::to_string(min) +
                         ", got " + text);
    }
    return v.to_int64();
}

std::uint64_t parse_u64(const std::string& text, const char* what) {
    Integer v;
    try {
        v = Integer::parse(text);
    } catch (const std::invalid_argument&) {
        throw UsageError(std::string(what) + " must be a non-negative integer, got '" + text + "'");
    }
    if (v.sign() < 0 || !v.fits_uint64()) {
        throw UsageError(std::string(what) + " out of range: " + text);
    }
    return v.to_uint64();
}

Integer parse_integer(const std::string& text, const char* what) {
    try {
        return Integer::parse(text);
    } catch (const std::invalid_argument&) {
        throw UsageError(std::string(what) + " must be an integer, got '" + text + "'");
    }
}

Rational parse_rational(const std::string& text, const char* what) {
    try {
        return Rational::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(std::string(what) + ": " + e.what());
    }
}

struct GlobalOptions {
    bool json = false;
    std::string seed;
    std::string trials;
    std::string max_wilson = kDefaultMaxWilson;
};

class Emitter {
public:
    Emitter(std::ostream& out, bool json) : out_(out), json_(json) {}

    void emit(const CliReport& r) {
        if (json_) out_ << r.to_json().dump() << '\n';
        else out_ << r.to_text();
        out_.flush();
        if (r.status != Status::holds) violated_ = true;
    }

    void note(const std::string& line) {
        if (!json_) out_ << line << '\n';
    }

    Status worst() const { return violated_ ? Status::violated : Status::holds; }

private:
    std::ostream& out_;
    bool json_;
    bool violated_ = false;
};

// Evaluation points: either the single --x, or `trials` seeded draws.
struct Points {
    std::vector<Rational> xs;
    std::optional<std::uint64_t> seed;
};

Points resolve_points(const std::string& x_text, const GlobalOptions& g, Emitter& em) {
    if (!x_text.empty()) return {{parse_rational(x_text, "--x")}, std::nullopt};
    const std::uint64_t trials = g.trials.empty() ? kDefaultTrials : parse_u64(g.trials, "--trials");
    const std::uint64_t seed = g.seed.empty() ? std::random_device{}() : parse_u64(g.seed, "--seed");
    em.note("seed=" + std::to_string(seed) + " trials=" + std::to_string(trials));
    return {random_rationals(seed, trials), seed};
}

Integer wilson_bound(const GlobalOptions& g) {
    const Integer bound = parse_integer(g.max_wilson, "--max-wilson");
    if (bound < Integer(2)) throw UsageError("--max-wilson must be >= 2");
    return bound;
}

void check_wilson_arg(const Integer& n, const Integer& bound) {
    if (n < Integer(2)) throw UsageError("wilson: n must be >= 2, got " + n.to_string());
    if (n > bound) {
        throw UsageError("wilson: n = " + n.to_string() + " exceeds --max-wilson " + bound.to_string() +
                         " (the test costs n modular multiplications)");
    }
}

}  // namespace

int exit_code_for(Status status) {
    switch (status) {
        case Status::holds: return kExitHolds;
        case Status::violated: return kExitViolated;
        case Status::error: return kExitUsage;
    }
    return kExitUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact checks of the alternating difference identity and the congruences leading to "
                 "Wilson's theorem",
                 "wilsonid"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_flag("--json", g.json, "Emit one JSON object per line");
    app.add_option("--seed", g.seed, "Seed for randomized evaluation points");
    app.add_option("--trials", g.trials, "Number of randomized points (default 10)");
    app.add_option("--max-wilson", g.max_wilson, "Largest n accepted by wilson commands")
        ->capture_default_str();

    std::string n_text, j_text, x_text;
    bool symbolic = false;

    auto* identity = app.add_subcommand("identity", "Check sum (-1)^i C(n,i) (x-i)^n = n!");
    identity->add_option("--n", n_text, "n >= 0")->required();
    identity->add_option("--x", x_text, "Evaluation point, integer or num/den");
    identity->add_flag("--symbolic", symbolic, "Also expand the sum symbolically");

    auto* lower = app.add_subcommand("lower-power", "Check sum (-1)^i C(n,i) (x-i)^(n-j) = 0");
    lower->add_option("--n", n_text, "n >= 1")->required();
    lower->add_option("--j", j_text, "1 <= j <= n")->required();
    lower->add_option("--x", x_text, "Evaluation point, integer or num/den");
    lower->add_flag("--symbolic", symbolic, "Also expand the sum symbolically");

    std::string wilson_n;
    auto* wilson = app.add_subcommand("wilson", "Primality of n from (n-1)! mod n");
    wilson->add_option("n", wilson_n, "n >= 2")->required();

    std::string lo_text, hi_text;
    auto* range = app.add_subcommand("wilson-range", "Wilson test for every n in [lo, hi]");
    range->add_option("lo", lo_text)->required();
    range->add_option("hi", hi_text)->required();

    std::string kind, p_text;
    auto* congruence = app.add_subcommand("congruence", "Congruence report modulo a prime p");
    congruence->add_option("kind", kind, "binom | fermat | power-sum | eq1")
        ->required()
        ->check(CLI::IsMember({"binom", "fermat", "power-sum", "eq1"}));
    congruence->add_option("p", p_text, "prime modulus")->required();

    std::string degree_text, points_text;
    auto* difftable = app.add_subcommand("difftable", "Difference table of x^degree");
    difftable->add_option("--degree", degree_text)->required();
    difftable->add_option("--points", points_text)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitHolds;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitHolds;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    Emitter em(out, g.json);
    try {
        if (*identity) {
            const std::int64_t n = parse_count(n_text, "--n", 0);
            const Points pts = resolve_points(x_text, g, em);
            for (const auto& x : pts.xs) em.emit(make_theorem1_report(verify_theorem1(n, x), pts.seed));
            if (symbolic) {
                em.emit(make_symbolic_report("theorem1-symbolic", {{"n", std::to_string(n)}},
                                             symbolic_difference_poly(n),
                                             Polynomial::constant(Rational(factorial(n)))));
            }
        } else if (*lower) {
            const std::int64_t n = parse_count(n_text, "--n", 1);
            const std::int64_t j = parse_count(j_text, "--j", 1);
            if (j > n) {
                throw UsageError("--j must satisfy 1 <= j <= n (n=" + std::to_string(n) +
                                 ", j=" + std::to_string(j) + ")");
            }
            const Points pts = resolve_points(x_text, g, em);
            for (const auto& x : pts.xs) {
                em.emit(make_corollary2_report(verify_corollary2(n, j, x), pts.seed));
            }
            if (symbolic) {
                em.emit(make_symbolic_report("corollary2-symbolic",
                                             {{"n", std::to_string(n)}, {"j", std::to_string(j)}},
                                             symbolic_lower_power_poly(n, j), Polynomial()));
            }
        } else if (*wilson) {
            const Integer n = parse_integer(wilson_n, "wilson: n");
            check_wilson_arg(n, wilson_bound(g));
            em.emit(make_wilson_report(wilson_test(n)));
        } else if (*range) {
            const Integer lo = parse_integer(lo_text, "wilson-range: lo");
            const Integer hi = parse_integer(hi_text, "wilson-range: hi");
            const Integer bound = wilson_bound(g);
            check_wilson_arg(lo, bound);
            check_wilson_arg(hi, bound);
            if (hi < lo) throw UsageError("wilson-range: hi must be >= lo");
            std::uint64_t primes = 0, composites = 0;
            bool all_agree = true;
            for (Integer n = lo; n <= hi; n += Integer(1)) {
                const auto v = wilson_test(n);
                (v.is_prime ? primes : composites) += 1;
                all_agree = all_agree && v.oracle_agrees;
                em.emit(make_wilson_report(v));
            }
            em.emit(make_wilson_range_summary(lo, hi, primes, composites, all_agree));
        } else if (*congruence) {
            const Integer p = parse_integer(p_text, "congruence: p");
            if (p < Integer(2)) throw UsageError("congruence: p must be a prime >= 2, got " + p.to_string());
            if (kind == "binom") em.emit(make_congruence_report(binomial_row_mod(p)));
            else if (kind == "fermat") em.emit(make_congruence_report(fermat_check(p)));
            else if (kind == "power-sum") em.emit(make_congruence_report(power_sum_mod(p)));
            else em.emit(make_zero_point_report(identity_at_zero_mod(p)));
        } else if (*difftable) {
            const std::int64_t degree = parse_count(degree_text, "--degree", 0);
            const std::int64_t points = parse_count(points_text, "--points", 1);
            if (points <= degree) {
                throw UsageError("--points must exceed --degree (need at least degree + 1 samples)");
            }
            em.emit(make_difftable_report(degree, points));
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        // Preconditions of the library (composite p, p = 2 for odd-prime
        // checks, ...) surface as usage errors.
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitViolated;
    }
    return exit_code_for(em.worst());
}

}  // namespace wilsonid
