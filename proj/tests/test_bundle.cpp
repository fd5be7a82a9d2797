#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "adelic/checks.hpp"
#include "adelic/gallery.hpp"
#include "adelic/multinomial.hpp"

using namespace adelic;

namespace {

vec_q unit(unsigned dim, unsigned i) {
    vec_q e(dim, 0);
    e[i] = 1;
    return e;
}

exact_pos_real sqrt_int(unsigned long n) {
    return exact_pos_real::from_rational(mpq_class(n)).pow(mpq_class(1, 2));
}

/* Independent oracle for min_search on twist-free bundles: raw box scan
 * through height(). */
std::optional<exact_pos_real> box_min_oracle(const bundle& b, long r) {
    std::optional<exact_pos_real> best;
    std::vector<long> x(b.dim, -r);
    x[b.dim - 1] -= 1;
    while (true) {
        size_t i = b.dim - 1;
        bool done = false;
        while (true) {
            if (x[i] < r) {
                ++x[i];
                break;
            }
            x[i] = -r;
            if (i == 0) {
                done = true;
                break;
            }
            --i;
        }
        if (done)
            return best;
        if (std::all_of(x.begin(), x.end(), [](long v) { return v == 0; }))
            continue;
        vec_q xq(b.dim);
        for (size_t j = 0; j < b.dim; ++j)
            xq[j] = x[j];
        exact_pos_real h = height(b, xq).value();
        if (!best || h.compare(*best).ord == ordering::less)
            best = h;
    }
}

}  // namespace

TEST_CASE("bundle validation") {
    CHECK_THROWS_AS(make_bundle(0, mat_q(), {}), bundle_error);

    mat_q bad(2, 2);
    bad.at(0, 0) = 1;
    bad.at(1, 1) = -1;
    CHECK_THROWS_AS(make_bundle(2, bad, {}), bundle_error);

    local_twist singular{5, mpq_class(1, 2), {}, mat_q(2, 2), {}};
    CHECK_THROWS_AS(make_bundle(2, mat_q(), {singular}), bundle_error);

    // weights 3/4 + 1/2 at p=5 overflow
    local_twist t1{5, mpq_class(3, 4), {}, mat_q::identity(2), {}};
    local_twist t2{5, mpq_class(1, 2), {}, mat_q::identity(2), {}};
    CHECK_THROWS_AS(make_bundle(2, mat_q(), {t1, t2}), bundle_error);
    CHECK_NOTHROW(make_bundle(2, mat_q(), {t1}));
}

TEST_CASE("heights on the standard bundle") {
    for (unsigned n : {1u, 3u, 7u}) {
        bundle b = standard_bundle(n);
        CHECK(height(b, unit(n, 0)).value().is_one());
        vec_q ones(n, 1);
        CHECK(height(b, ones).value().equals(sqrt_int(n)));
    }
    bundle b = standard_bundle(2);
    CHECK_THROWS_AS(height(b, vec_q{0, 0}), bundle_error);
    CHECK_THROWS_AS(height(b, vec_q{1}), bundle_error);
    // i unit coordinates give sqrt(i)
    bundle s5 = standard_bundle(5);
    vec_q x = {1, 1, 1, 0, 0};
    CHECK(height(s5, x).value().equals(sqrt_int(3)));
}

TEST_CASE("heights on the twisted counterexample bundle") {
    mpq_class q(1, 4);
    bundle eq = counterexample_eq(q);
    exact_pos_real five_q = exact_pos_real::prime_power(5, q);
    CHECK(height(eq, unit(2, 0)).value().equals(five_q));
    CHECK(height(eq, unit(2, 1)).value().equals(five_q));

    // both coordinates nonzero: strictly above sqrt(2)
    exact_pos_real root2 = sqrt_int(2);
    for (long x = 1; x <= 3; ++x)
        for (long y = -3; y <= 3; ++y) {
            if (y == 0)
                continue;
            vec_q v = {mpq_class(x), mpq_class(y)};
            CHECK(height(eq, v).value().compare(root2).ord == ordering::greater);
        }

    bundle sq = tensor(eq, eq);
    vec_q split = {1, 0, 0, -1};
    CHECK(height(sq, split).value().equals(root2.mul(five_q)));
}

TEST_CASE("slopes") {
    CHECK(slope(standard_bundle(4)).is_zero());
    CHECK(slope(counterexample_eq(mpq_class(1, 4)))
              .equals(slope_value::log_of(5, mpq_class(-1, 8))));
    for (unsigned n : {1u, 2u, 5u, 12u})
        CHECK(slope(root_lattice_an(n)).equals(slope_value::log_of(n + 1, mpq_class(-1, 2 * n))));
}

TEST_CASE("dual") {
    bundle s = standard_bundle(3);
    CHECK(bundle_to_json(dual(s)) == bundle_to_json(s));

    bundle eq = counterexample_eq(mpq_class(1, 4));
    CHECK(slope(dual(eq)).equals(slope(eq).negated()));
    CHECK(bundle_to_json(dual(dual(eq))) == bundle_to_json(eq));

    std::mt19937_64 rng(23);
    for (int t = 0; t < 30; ++t) {
        bundle b = random_bundle(rng, 3, true, false);
        CHECK(slope(dual(b)).equals(slope(b).negated()));
        CHECK(bundle_to_json(dual(dual(b))) == bundle_to_json(b));
    }
}

TEST_CASE("direct sums") {
    CHECK(bundle_to_json(direct_sum(standard_bundle(2), standard_bundle(3))) ==
          bundle_to_json(standard_bundle(5)));

    bundle an = root_lattice_an(3);
    bundle sum = direct_sum(an, standard_bundle(1));
    CHECK(slope(sum).equals(slope(an).scale(mpq_class(3, 4))));

    // height of (x, 0) matches the component height
    bundle eq = counterexample_eq(mpq_class(1, 4));
    bundle mixed = direct_sum(eq, standard_bundle(2));
    vec_q x = {mpq_class(2), mpq_class(-3)};
    vec_q padded = {mpq_class(2), mpq_class(-3), 0, 0};
    CHECK(height(mixed, padded).value().equals(height(eq, x).value()));
}

TEST_CASE("tensor products") {
    CHECK(bundle_to_json(tensor(standard_bundle(2), standard_bundle(3))) ==
          bundle_to_json(standard_bundle(6)));
    bundle eq = counterexample_eq(mpq_class(1, 4));
    CHECK(slope(tensor(eq, eq)).equals(slope(eq).scale(2)));

    // weight refinement: classes of weights 1/2+1/2 against a single 1/3
    local_twist third{5, mpq_class(1, 3), {}, mat_q::identity(1), {}};
    third.d_left = {mpq_class(1, 2)};
    bundle c = make_bundle(1, mat_q(), {third});
    bundle prod = tensor(eq, c);
    CHECK(slope(prod).equals(slope(eq).add(slope(c))));
    mpq_class total = 0;
    for (const auto& t : prod.twists) {
        CHECK(t.p == 5);
        total += t.weight;
    }
    CHECK(total == 1);
}

TEST_CASE("symmetric powers") {
    CHECK(bundle_to_json(sym_power(standard_bundle(3), 1)) == bundle_to_json(standard_bundle(3)));

    bundle s22 = sym_power(standard_bundle(2), 2);
    REQUIRE(s22.dim == 3);
    // monomial order (2,0), (1,1), (0,2): squared norms 1, 1/2, 1
    CHECK(s22.arch_gram.at(0, 0) == 1);
    CHECK(s22.arch_gram.at(1, 1) == mpq_class(1, 2));
    CHECK(s22.arch_gram.at(2, 2) == 1);
    CHECK(slope(s22).equals(slope_value::log_of(2, mpq_class(1, 6))));

    // split: the slope is the average of the line slopes
    bundle s33 = sym_power(standard_bundle(3), 3);
    slope_value avg;
    for (unsigned i = 0; i < s33.dim; ++i)
        avg = avg.add(subspace_slope(s33, {unit(s33.dim, i)}));
    CHECK(avg.scale(mpq_class(1, s33.dim)).equals(slope(s33)));
}

TEST_CASE("symmetric power of a non-diagonal Gram matches the tensor quotient") {
    // compare against the quotient norm computed inside the tensor square
    bundle an = root_lattice_an(2);
    bundle s = sym_power(an, 2);
    // e_i e_j maps to (e_i x e_j + e_j x e_i)/2 inside the tensor square
    bundle t = tensor(an, an);
    auto embed = [&](unsigned i, unsigned j) {
        vec_q v(t.dim, 0);
        v[i * an.dim + j] += mpq_class(1, 2);
        v[j * an.dim + i] += mpq_class(1, 2);
        return v;
    };
    // order (2,0), (1,1), (0,2) over two variables
    std::vector<std::pair<unsigned, unsigned>> pairs = {{0, 0}, {0, 1}, {1, 1}};
    for (size_t a = 0; a < pairs.size(); ++a)
        for (size_t b = 0; b < pairs.size(); ++b) {
            vec_q va = embed(pairs[a].first, pairs[a].second);
            vec_q vb = embed(pairs[b].first, pairs[b].second);
            mpq_class expect = 0;
            for (size_t i = 0; i < va.size(); ++i)
                for (size_t j = 0; j < vb.size(); ++j)
                    if (va[i] != 0 && vb[j] != 0)
                        expect += va[i] * t.arch_gram.at(i, j) * vb[j];
            CHECK(s.arch_gram.at(a, b) == expect);
        }
}

TEST_CASE("exterior powers") {
    bundle an = root_lattice_an(4);
    CHECK(bundle_to_json(ext_power(an, 1)) == bundle_to_json(an));
    CHECK(bundle_to_json(ext_power(standard_bundle(5), 2)) ==
          bundle_to_json(standard_bundle(10)));
    for (unsigned l = 1; l <= 4; ++l) {
        mpq_class c(-(long)l, 8);
        c.canonicalize();
        CHECK(slope(ext_power(an, l)).equals(slope_value::log_of(5, c)));
    }
    CHECK_THROWS_AS(ext_power(an, 5), bundle_error);
}

TEST_CASE("subspace slopes") {
    bundle s = standard_bundle(4);
    std::vector<vec_q> full;
    for (unsigned i = 0; i < 4; ++i)
        full.push_back(unit(4, i));
    CHECK(subspace_slope(s, full).is_zero());

    bundle an = root_lattice_an(5);
    std::vector<vec_q> an_full;
    for (unsigned i = 0; i < 5; ++i)
        an_full.push_back(unit(5, i));
    CHECK(subspace_slope(an, an_full).equals(slope(an)));

    // coordinate subsets of the root bundle: Gram I_k + ones_k
    for (unsigned k = 1; k <= 5; ++k) {
        std::vector<vec_q> sub;
        for (unsigned i = 0; i < k; ++i)
            sub.push_back(unit(5, i));
        CHECK(subspace_slope(an, sub).equals(slope_value::log_of(k + 1, mpq_class(-1, 2 * k))));
    }

    // coordinate lines of a symmetric power: (1/2) log(l!/i!)
    bundle s23 = sym_power(standard_bundle(2), 3);
    // order (3,0), (2,1), (1,2), (0,3): l!/i! = 1, 3, 3, 1... relative to 6
    CHECK(subspace_slope(s23, {unit(4, 0)}).equals(slope_value::log_of(1, 1)));
    CHECK(subspace_slope(s23, {unit(4, 1)}).equals(slope_value::log_of(3, mpq_class(1, 2))));

    CHECK_THROWS_AS(subspace_slope(s, {unit(4, 0), unit(4, 0)}), dependent_basis);

    std::mt19937_64 rng(29);
    for (int t = 0; t < 20; ++t) {
        // the full-basis identity holds even with nonzero right shifts
        bundle b = random_bundle(rng, 3, true, t % 2 == 0);
        std::vector<vec_q> basis;
        for (unsigned i = 0; i < b.dim; ++i)
            basis.push_back(unit(b.dim, i));
        CHECK(subspace_slope(b, basis).equals(slope(b)));
    }
}

TEST_CASE("split detection and exact maximal slope") {
    CHECK(split_detect(standard_bundle(3)));
    CHECK_FALSE(split_detect(root_lattice_an(2)));
    CHECK(split_detect(sym_power(standard_bundle(2), 3)));

    max_slope_result std_max = max_slope_split(standard_bundle(6));
    CHECK(std_max.value.is_zero());
    CHECK(std_max.kind == certificate::exact);

    // lambda = floor(l/n) formula at n=3, l=4: max = (1/2) log(4!/(1!^3 * 2)) = (1/2) log 12
    bundle s34 = sym_power(standard_bundle(3), 4);
    CHECK(max_slope_split(s34).value.equals(slope_value::log_of(12, mpq_class(1, 2))));

    CHECK_THROWS_AS(max_slope_split(root_lattice_an(2)), bundle_error);
}

TEST_CASE("searched maximal slope is a certified lower bound") {
    bundle an = root_lattice_an(4);
    subspace_family family;
    auto r = max_slope_search(an, family);
    CHECK(r.best.kind == certificate::lower_bound);
    CHECK(r.best.value.equals(slope(an)));  // attained by the full space
    CHECK(r.best.witness_coords.size() == 4);

    // small-integer line spans never beat the full space (semistability)
    subspace_family with_lines;
    with_lines.line_radius = 2;
    auto rl = max_slope_search(root_lattice_an(3), with_lines);
    CHECK(rl.best.value.equals(slope(root_lattice_an(3))));
    CHECK(rl.evaluated > 10);  // the line box was actually enumerated

    // for a split bundle the search over lines matches the exact answer
    bundle s = sym_power(standard_bundle(2), 3);
    subspace_family lines;
    lines.subset_size_cap = 1;
    lines.include_full = false;
    auto via_lines = max_slope_search(s, lines);
    CHECK(via_lines.best.value.equals(max_slope_split(s).value));
    // and no larger coordinate subspace exceeds it
    subspace_family wide;
    wide.subset_size_cap = 3;
    auto via_all = max_slope_search(s, wide);
    CHECK(via_all.best.value.compare(via_lines.best.value).ord != ordering::greater);
}

TEST_CASE("minimum search") {
    auto std_min = min_search(standard_bundle(5), 2);
    REQUIRE(std_min);
    CHECK(std_min->value.is_one());
    CHECK(std_min->certified);

    auto an_min = min_search(root_lattice_an(6), 2);
    REQUIRE(an_min);
    CHECK(an_min->value.equals(sqrt_int(2)));
    // the witness is valid: its height equals the reported value
    CHECK(height(root_lattice_an(6), an_min->witness).value().equals(an_min->value));

    auto eq_min = min_search(counterexample_eq(mpq_class(1, 4)), 3);
    REQUIRE(eq_min);
    CHECK(eq_min->value.equals(exact_pos_real::prime_power(5, mpq_class(1, 4))));

    CHECK_FALSE(min_search(standard_bundle(3), 0));
    CHECK_THROWS_AS(min_search(counterexample_eq(mpq_class(1, 4)), 3, 1, 10), cap_exceeded);
}

TEST_CASE("sphere enumeration agrees with the raw box oracle") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 20; ++t) {
        bundle b = random_bundle(rng, 3, false);
        auto fast = min_search(b, 2);
        auto slow = box_min_oracle(b, 2);
        REQUIRE(fast);
        REQUIRE(slow);
        CHECK(fast->value.equals(*slow));
    }
}

TEST_CASE("lexicographically smallest witness among ties") {
    // standard(3): all unit vectors are minimal; (0,0,1) is lex-least
    auto m = min_search(standard_bundle(3), 1);
    REQUIRE(m);
    CHECK(m->witness == vec_q{0, 0, 1});
}

TEST_CASE("interval heights under tied right-shift groups") {
    local_twist t;
    t.p = 2;
    t.weight = 1;
    t.d_left = {0, 5};
    t.m = mat_q(2, 2);
    t.m.at(0, 0) = 1;
    t.m.at(0, 1) = 1;
    t.m.at(1, 0) = 1;
    t.d_right = {0, 1};
    bundle b = make_bundle(2, mat_q(), {t});

    height_result h = height(b, vec_q{2, -1});
    CHECK_FALSE(h.exact);
    REQUIRE(h.lower);
    // arch sqrt(5), norm between 2^-6 (row 1, exact) and 2^-1 (tied row 0)
    CHECK(h.upper.equals(sqrt_int(5).mul(exact_pos_real::prime_power(2, -1))));
    CHECK(h.lower->equals(sqrt_int(5).mul(exact_pos_real::prime_power(2, -6))));
    CHECK_THROWS_AS(h.value(), arithmetic_error);

    // the same shift pattern leaves subspace slopes uncertifiable
    CHECK_THROWS_AS(subspace_slope(b, {vec_q{2, -1}}), indeterminate_valuation);

    // untwisted coordinates stay exact
    CHECK(height(b, vec_q{1, 0}).exact);
}

TEST_CASE("height interval with no usable lower bound") {
    // both coordinates of the image are tied sums: upper bound only
    local_twist t;
    t.p = 2;
    t.weight = 1;
    t.m = mat_q(2, 2);
    t.m.at(0, 0) = 1;
    t.m.at(0, 1) = 1;
    t.m.at(1, 0) = 1;
    t.m.at(1, 1) = 3;
    t.d_right = {0, 1};
    bundle b = make_bundle(2, mat_q(), {t});
    height_result h = height(b, vec_q{2, -1});
    CHECK_FALSE(h.exact);
    CHECK_FALSE(h.lower.has_value());
    CHECK(h.upper.equals(sqrt_int(5).mul(exact_pos_real::prime_power(2, -1))));
}

TEST_CASE("box search stays certified when interval candidates cannot undercut") {
    local_twist t;
    t.p = 2;
    t.weight = 1;
    t.d_left = {0, 5};
    t.m = mat_q(2, 2);
    t.m.at(0, 0) = 1;
    t.m.at(0, 1) = 1;
    t.m.at(1, 0) = 1;
    t.d_right = {0, 1};
    bundle b = make_bundle(2, mat_q(), {t});
    // (2,-1) and (2,1) have interval heights with upper sqrt(5)/2; the
    // exact minimum 1/2 at (0,1) undercuts them
    auto found = min_search(b, 2);
    REQUIRE(found);
    CHECK(found->certified);
    CHECK(found->value.equals(exact_pos_real::from_rational(mpq_class(1, 2))));
    CHECK(found->witness == vec_q{0, 1});
}

TEST_CASE("lambda lower bounds") {
    CHECK(lambda_lower_bound_split(standard_bundle(7)).is_one());
    // (j!/l!)^{1/2} at n=2, l=3: lambda=1, j! = 2, bound = 3^{-1/2}
    bundle s = sym_power(standard_bundle(2), 3);
    CHECK(lambda_lower_bound_split(s).equals(exact_pos_real::prime_power(3, mpq_class(-1, 2))));
    CHECK(lambda_lower_bound_tensor({standard_bundle(3), standard_bundle(4)}).is_one());
    CHECK_THROWS_AS(lambda_lower_bound_split(root_lattice_an(3)), bundle_error);
}

TEST_CASE("bundle json round trip") {
    CHECK(bundle_to_json(bundle_from_json("{\"dim\": 2}")) ==
          bundle_to_json(standard_bundle(2)));

    std::mt19937_64 rng(37);
    for (int t = 0; t < 30; ++t) {
        bundle b = random_bundle(rng, 3, true, false);
        std::string s = bundle_to_json(b);
        CHECK(bundle_to_json(bundle_from_json(s)) == s);
    }
    bundle eq = counterexample_eq(mpq_class(1, 4));
    std::string s = bundle_to_json(eq);
    CHECK(bundle_to_json(bundle_from_json(s)) == s);
    CHECK_THROWS_AS(bundle_from_json("{\"dim\": 0}"), bundle_error);
}

TEST_CASE("heights are multiplicative on pure tensors") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 30; ++t) {
        bundle a = random_bundle(rng, 3, true, true);
        bundle b = random_bundle(rng, 3, true, true);
        bundle prod = tensor(a, b);
        vec_q x = random_vector(rng, a.dim);
        vec_q y = random_vector(rng, b.dim);
        vec_q xy(prod.dim);
        for (unsigned i = 0; i < a.dim; ++i)
            for (unsigned j = 0; j < b.dim; ++j)
                xy[i * b.dim + j] = x[i] * y[j];
        CHECK(height(prod, xy).value().equals(
            height(a, x).value().mul(height(b, y).value())));
    }
}

TEST_CASE("product formula: heights are scale invariant") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 50; ++t) {
        bundle b = random_bundle(rng, 3, true, true);
        vec_q x = random_vector(rng, b.dim);
        for (const mpq_class& c : {mpq_class(3, 2), mpq_class(-7, 3), mpq_class(10)}) {
            vec_q cx(x);
            for (auto& e : cx)
                e *= c;
            CHECK(height(b, cx).value().equals(height(b, x).value()));
        }
    }
}
