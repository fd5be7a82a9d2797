#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "adelic/exact_real.hpp"
#include "adelic/gallery.hpp"

using namespace adelic;

namespace {

exact_pos_real random_value(std::mt19937_64& rng) {
    static const std::vector<unsigned long> pool = {2, 3, 5, 7, 11, 13};
    std::uniform_int_distribution<int> terms(0, 3), num(-4, 4), den(1, 4);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    log_form f;
    for (int t = terms(rng); t > 0; --t) {
        mpq_class c(num(rng), den(rng));
        c.canonicalize();
        if (c != 0)
            f.logs[mpz_class(pool[pick(rng)])] += c;
    }
    return exact_pos_real(std::move(f));
}

}  // namespace

TEST_CASE("normalize factors bases into primes") {
    // 8^{1/3} = 2
    auto a = exact_pos_real::normalize({{8, mpq_class(1, 3)}});
    CHECK(a.equals(exact_pos_real::from_rational(2)));

    // sqrt(2) * 5^{1/4}
    auto b = exact_pos_real::normalize({{2, mpq_class(1, 2)}, {5, mpq_class(1, 4)}});
    CHECK(b.form().logs.at(2) == mpq_class(1, 2));
    CHECK(b.form().logs.at(5) == mpq_class(1, 4));
    CHECK(b.form().unit == 0);

    // (n+1)^{-1/(2n)} at n=3: 4^{-1/6} = 2^{-1/3}
    auto c = exact_pos_real::normalize({{4, mpq_class(-1, 6)}});
    CHECK(c.form().logs.at(2) == mpq_class(-1, 3));

    CHECK_THROWS_AS(exact_pos_real::normalize({{0, 1}}), arithmetic_error);
    CHECK_THROWS_AS(exact_pos_real::normalize({{-3, 1}}), arithmetic_error);
}

TEST_CASE("normalize is idempotent on random inputs") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        exact_pos_real v = random_value(rng);
        std::vector<std::pair<mpq_class, mpq_class>> raw;
        for (const auto& [p, c] : v.form().logs)
            raw.emplace_back(mpq_class(p), c);
        exact_pos_real again = exact_pos_real::normalize(raw, v.form().unit);
        CHECK(again.equals(v));
    }
}

TEST_CASE("arithmetic in log form") {
    mpq_class q(1, 4);
    auto five_q = exact_pos_real::prime_power(5, q);
    CHECK(five_q.mul(five_q).equals(exact_pos_real::prime_power(5, mpq_class(1, 2))));
    CHECK(exact_pos_real::from_rational(2).pow(mpq_class(1, 2)).form().logs.at(2) ==
          mpq_class(1, 2));
    auto root2 = exact_pos_real::from_rational(2).pow(mpq_class(1, 2));
    auto lhs = root2.mul(five_q).div(exact_pos_real::prime_power(5, 2 * q));
    CHECK(lhs.form().logs.at(2) == mpq_class(1, 2));
    CHECK(lhs.form().logs.at(5) == mpq_class(-1, 4));
}

TEST_CASE("mul is commutative and associative, pow composes") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
    for (int t = 0; t < 200; ++t) {
        auto a = random_value(rng), b = random_value(rng), c = random_value(rng);
        CHECK(a.mul(b).equals(b.mul(a)));
        CHECK(a.mul(b).mul(c).equals(a.mul(b.mul(c))));
        mpq_class r(num(rng), den(rng)), s(num(rng), den(rng));
        r.canonicalize();
        s.canonicalize();
        CHECK(a.pow(r).pow(s).equals(a.pow(r * s)));
    }
}

TEST_CASE("compare: exact prime route") {
    // sqrt(2) 5^{1/4} < 5^{1/2} via 2^2*5 < 5^4
    auto lhs = exact_pos_real::normalize({{2, mpq_class(1, 2)}, {5, mpq_class(1, 4)}});
    auto rhs = exact_pos_real::prime_power(5, mpq_class(1, 2));
    auto out = lhs.compare(rhs);
    CHECK(out.ord == ordering::less);
    CHECK(out.bits == 0);  // decided without numerics

    CHECK(lhs.compare(lhs).ord == ordering::equal);
}

TEST_CASE("compare: numeric route for forms involving e") {
    // e^{(H_3-1)/2} = e^{5/12} < sqrt(3)
    mpq_class h3 = harmonic(3);
    auto lhs = exact_pos_real::euler_power((h3 - 1) / 2);
    auto rhs = exact_pos_real::from_rational(3).pow(mpq_class(1, 2));
    auto out = lhs.compare(rhs);
    CHECK(out.ord == ordering::less);
    CHECK(out.bits >= 128);
}

TEST_CASE("compare antisymmetry on random pairs") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 300; ++t) {
        auto a = random_value(rng), b = random_value(rng);
        auto ab = a.compare(b), ba = b.compare(a);
        if (ab.ord == ordering::less)
            CHECK(ba.ord == ordering::greater);
        if (ab.ord == ordering::greater)
            CHECK(ba.ord == ordering::less);
        if (ab.ord == ordering::equal) {
            CHECK(ba.ord == ordering::equal);
            CHECK(a.equals(b));
        }
        // pure prime forms under the cap never come back undecided
        CHECK(ab.ord != ordering::undecided);
    }
}

TEST_CASE("compare falls back to numerics beyond the integer cap") {
    precision_policy tight;
    tight.integer_cap_bits = 8;
    auto a = exact_pos_real::prime_power(2, 100);
    auto b = exact_pos_real::prime_power(3, 60);  // 3^60 < 2^100 (log2 = 95.1)
    auto out = a.compare(b, tight);
    CHECK(out.ord == ordering::greater);
    CHECK(out.bits >= tight.start_bits);
    // same comparison under the default cap is exact
    auto exact = a.compare(b);
    CHECK(exact.ord == ordering::greater);
    CHECK(exact.bits == 0);
}

TEST_CASE("to_float returns rigorous nested enclosures") {
    auto two = exact_pos_real::from_rational(2);
    enclosure e = two.to_float(64);
    CHECK(e.lo_double() == doctest::Approx(2.0));
    CHECK(e.hi_double() == doctest::Approx(2.0));

    auto root2 = two.pow(mpq_class(1, 2));
    enclosure r = root2.to_float(64);
    CHECK(r.lo_double() <= 1.4142135623730951);
    CHECK(r.hi_double() >= 1.4142135623730949);

    auto euler = exact_pos_real::euler_power(1);
    enclosure ee = euler.to_float(64);
    CHECK(ee.lo_double() <= 2.718281828459045);
    CHECK(ee.hi_double() >= 2.7182818284590455);

    // nesting at increasing precision
    std::mt19937_64 rng(17);
    for (int t = 0; t < 50; ++t) {
        exact_pos_real v = random_value(rng);
        enclosure lo = v.to_float(48), hi = v.to_float(128);
        CHECK(lo.lo.cmp(hi.lo) <= 0);
        CHECK(hi.hi.cmp(lo.hi) <= 0);
        CHECK(hi.lo.cmp(hi.hi) <= 0);
    }

    CHECK_THROWS_AS(two.to_float(16), arithmetic_error);
}

TEST_CASE("serialization round-trips bit-exactly") {
    std::mt19937_64 rng(19);
    for (int t = 0; t < 100; ++t) {
        exact_pos_real v = random_value(rng);
        std::string s = v.to_json();
        exact_pos_real back = exact_pos_real::from_json(s);
        CHECK(back.equals(v));
        CHECK(back.to_json() == s);
    }
    auto v = exact_pos_real::normalize({{2, mpq_class(1, 2)}, {5, mpq_class(1, 4)}});
    CHECK(v.to_json() == R"({"e":"0","logs":{"2":"1/2","5":"1/4"}})");
}

TEST_CASE("slope values share the machinery") {
    slope_value s = slope_value::log_of(5, mpq_class(-1, 8));
    CHECK(s.to_json() == R"({"e":"0","logs":{"5":"-1/8"}})");
    CHECK(s.negated().exp().equals(exact_pos_real::prime_power(5, mpq_class(1, 8))));
    CHECK(s.add(s.negated()).is_zero());
    CHECK(s.compare(slope_value::zero()).ord == ordering::less);
    CHECK(slope_value::from_json(s.to_json()).equals(s));
}
