/* Acceptance suite: one pass/fail line per criterion, nonzero exit on any
 * failure.  Criteria are pinned here — grids, tolerances and time budgets
 * included — and evaluated through the public library surface. */

#include <chrono>
#include <iostream>

#include "adelic/checks.hpp"
#include "adelic/multinomial.hpp"

using namespace adelic;
using clock_type = std::chrono::steady_clock;

namespace {

int failures = 0;

void line(int criterion, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << "criterion " << criterion << " [" << name << "]: " << (ok ? "PASS" : "FAIL");
    if (!detail.empty())
        std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!ok)
        ++failures;
}

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

bool no_violations(const report& rep, const std::string& prefix) {
    for (const auto& e : rep.entries)
        if (e.statement.rfind(prefix, 0) == 0 && e.v == verdict::violated)
            return false;
    return true;
}

size_t entries_with(const report& rep, const std::string& statement, verdict v) {
    size_t n = 0;
    for (const auto& e : rep.entries)
        if (e.statement == statement && e.v == v)
            ++n;
    return n;
}

}  // namespace

int main() {
    config cfg;
    cfg.seed = 2024;

    // 1. appendix identity: brute force = closed form on 1<=n<=6, 1<=l<=30
    {
        auto t0 = clock_type::now();
        bool ok = true;
        std::string first_bad;
        for (unsigned n = 1; n <= 6 && ok; ++n)
            for (unsigned l = 1; l <= 30 && ok; ++l)
                if (p_bruteforce(n, l, false, cfg.composition_cap).value != p_closed_form(n, l)) {
                    ok = false;
                    first_bad = "n=" + std::to_string(n) + " l=" + std::to_string(l);
                }
        double dt = seconds_since(t0);
        bool in_time = dt < 60.0;
        line(1, "appendix identity", ok && in_time,
             ok ? ("grid complete in " + std::to_string(dt) + "s")
                : ("mismatch at " + first_bad));
    }

    // 2. Williams case: p(2,l)(l+1) = lcm(1..l+1) for l <= 1000
    {
        auto t0 = clock_type::now();
        bool ok = true;
        mpz_class coeff, p, d = 1;
        for (unsigned l = 1; l <= 1000 && ok; ++l) {
            coeff = 1;
            p = 1;
            for (unsigned k = 0; k < l; ++k) {
                coeff *= l - k;
                mpz_divexact_ui(coeff.get_mpz_t(), coeff.get_mpz_t(), k + 1);
                mpz_lcm(p.get_mpz_t(), p.get_mpz_t(), coeff.get_mpz_t());
            }
            mpz_class mz = l + 1;
            mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), mz.get_mpz_t());
            ok = (p * (l + 1) == d);
        }
        double dt = seconds_since(t0);
        line(2, "williams case", ok && dt < 30.0, std::to_string(dt) + "s");
    }

    // 3. divisibility chain: q = r = s for 2<=n<=5, 1<=l<=15
    {
        bool ok = true;
        for (unsigned n = 2; n <= 5 && ok; ++n)
            for (unsigned l = 1; l <= 15 && ok; ++l)
                ok = chain_qrs(n, l, cfg.composition_cap, cfg.tuple_cap).all_equal();
        line(3, "divisibility chain", ok);
    }

    // 4. effective bounds on the criterion-1 grid plus the psi bound to 10^4
    {
        bool ok = true;
        for (unsigned n = 1; n <= 6 && ok; ++n)
            for (unsigned l = 1; l <= 30 && ok; ++l) {
                bounds_result b = bounds_check(n, l);
                ok = b.lower_holds && b.upper_holds;
            }
        unsigned long first_bad = psi_bound_check(10000);
        line(4, "effective bounds", ok && first_bad == 0);
    }

    // 5. slopes: named values and functorial identities on random bundles
    {
        report rep;
        rep.cfg = cfg;
        check_slopes(cfg, rep, 50);
        check_slope_identities(cfg, rep, 100);
        bool ok = no_violations(rep, "slope_");
        // exact log-form equalities only
        for (const auto& e : rep.entries)
            if (e.statement.rfind("slope_", 0) == 0 && e.v != verdict::holds)
                ok = false;
        line(5, "slopes", ok);
    }

    // 6. minima upper bounds: root bundles give sqrt(2), standard gives 1
    {
        bool ok = true;
        for (unsigned n = 1; n <= 10 && ok; ++n) {
            auto s = min_search(standard_bundle(n), cfg.search_radius, cfg.denom_bound,
                                cfg.search_cap);
            ok = s && s->value.is_one();
            if (!ok)
                break;
            bundle an = root_lattice_an(n);
            auto a = min_search(an, 2, cfg.denom_bound, cfg.search_cap);
            ok = a &&
                 a->value.equals(exact_pos_real::from_rational(2).pow(mpq_class(1, 2))) &&
                 height(an, a->witness).value().equals(a->value);
        }
        line(6, "minima upper bounds", ok);
    }

    // 7. counterexample, unconditional parts at q = 1/4
    {
        report rep;
        rep.cfg = cfg;
        check_counterexample(cfg, rep, mpq_class(1, 4));
        bool ok = no_violations(rep, "ce_") && no_violations(rep, "nml_");
        ok = ok && entries_with(rep, "ce_paper_minimum", verdict::consistent_with_paper) == 1;
        ok = ok && entries_with(rep, "ce_lemma_sample", verdict::holds) > 0;
        ok = ok && entries_with(rep, "ce_lemma_scan", verdict::holds) == 1;
        ok = ok && entries_with(rep, "nml_strict", verdict::holds) == 1;
        line(7, "tensor counterexample", ok);
    }

    // 8. explicit large-minimum construction for 2<=n<=6 at eps = 1/100
    {
        report rep;
        rep.cfg = cfg;
        check_mh(cfg, rep, 2, 6);
        bool ok = no_violations(rep, "mh_");
        ok = ok && entries_with(rep, "mh_qinv_factorial", verdict::holds) == 5;
        ok = ok && entries_with(rep, "mh_qinv_sqrt_ne", verdict::holds_numerically) == 5;
        line(8, "explicit construction", ok);
    }

    // 9. symmetric powers on n,l <= 12 (dimension-capped bundle route)
    {
        report rep;
        rep.cfg = cfg;
        check_sym(cfg, rep, 12, 12);
        bool ok = no_violations(rep, "sym_");
        ok = ok && entries_with(rep, "sym_maxslope_formula", verdict::holds) == 144;
        line(9, "symmetric powers", ok);
    }

    // 10. exterior powers: slopes for l<=n<=8, minima for n<=5
    {
        report rep;
        rep.cfg = cfg;
        check_ext(cfg, rep, 8);
        bool ok = no_violations(rep, "ext_");
        ok = ok && entries_with(rep, "ext_slope_an", verdict::holds) == 36;
        ok = ok && entries_with(rep, "ext_min_an", verdict::holds) == 15;
        line(10, "exterior powers", ok);
    }

    // 11. absolute Siegel sandwich on split bundles; harmonic chain to 1000
    {
        report rep;
        rep.cfg = cfg;
        check_zhang(cfg, rep, 12, 1000);
        bool ok = no_violations(rep, "zhang_");
        ok = ok && entries_with(rep, "zhang_chain_scan", verdict::holds) == 1;
        line(11, "siegel sandwich", ok);
    }

    // 12. tensor statements on root x standard products, n,m <= 6
    {
        report rep;
        rep.cfg = cfg;
        check_tensor(cfg, rep, 6, 6);
        bool ok = no_violations(rep, "tensor_");
        ok = ok && entries_with(rep, "tensor_an_min", verdict::holds) == 36;
        ok = ok && entries_with(rep, "tensor_an_min_split", verdict::holds) == 36;
        ok = ok && entries_with(rep, "tensor_an_maxslope", verdict::holds) == 36;
        line(12, "tensor statements", ok);
    }

    // 13. property suites: convexity and product formula on 500 seeded
    // instances; byte-identical reports across two runs
    {
        report rep;
        rep.cfg = cfg;
        check_convexity(cfg, rep, 500);
        check_product_formula(cfg, rep, 500);
        bool ok = no_violations(rep, "convexity") && no_violations(rep, "product_formula");
        ok = ok && rep.count(verdict::undecided) == 0;

        report run1 = run_all(cfg);
        report run2 = run_all(cfg);
        ok = ok && run1.to_json() == run2.to_json() && !run1.any_violated();
        line(13, "property suites", ok,
             "determinism over " + std::to_string(run1.entries.size()) + " entries");
    }

    std::cout << (failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " (" << failures
              << " failing criteria)" << std::endl;
    return failures == 0 ? 0 : 1;
}
