#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "adelic/matrix.hpp"

using namespace adelic;

namespace {

mat_q random_matrix(std::mt19937_64& rng, size_t n, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> coef(lo, hi);
    mat_q m(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            m.at(i, j) = coef(rng);
    return m;
}

/* Brute-force permanent by permutation expansion. */
mpq_class permanent_brute(const mat_q& m) {
    size_t n = m.rows();
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; ++i)
        perm[i] = i;
    mpq_class total = 0;
    do {
        mpq_class prod = 1;
        for (size_t i = 0; i < n; ++i)
            prod *= m.at(i, perm[i]);
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

}  // namespace

TEST_CASE("determinant and inverse") {
    mat_q m(2, 2);
    m.at(0, 0) = 2;
    m.at(0, 1) = 3;
    m.at(1, 0) = 3;
    m.at(1, 1) = 8;
    CHECK(m.determinant() == 7);
    CHECK(m.inverse().mul(m).is_identity());

    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        mat_q a = random_matrix(rng, 4), b = random_matrix(rng, 4);
        CHECK(a.mul(b).determinant() == a.determinant() * b.determinant());
        if (a.determinant() != 0)
            CHECK(a.inverse().mul(a).is_identity());
        else
            CHECK_THROWS_AS(a.inverse(), singular_matrix);
    }
}

TEST_CASE("rank") {
    mat_q m(3, 2);
    m.at(0, 0) = 1;
    m.at(1, 1) = 1;
    CHECK(m.rank() == 2);
    m.at(1, 1) = 0;
    CHECK(m.rank() == 1);
}

TEST_CASE("positive definiteness by leading minors") {
    mat_q good(2, 2);
    good.at(0, 0) = 2;
    good.at(0, 1) = 1;
    good.at(1, 0) = 1;
    good.at(1, 1) = 2;
    CHECK(good.is_positive_definite());
    mat_q bad = good;
    bad.at(1, 1) = mpq_class(1, 2);  // det = 0 minus epsilon
    CHECK_FALSE(bad.is_positive_definite());
    mat_q asym = good;
    asym.at(0, 1) = 0;
    CHECK_FALSE(asym.is_positive_definite());
}

TEST_CASE("kronecker product") {
    std::mt19937_64 rng(5);
    mat_q a = random_matrix(rng, 2), b = random_matrix(rng, 3);
    mat_q k = a.kronecker(b);
    CHECK(k.rows() == 6);
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j)
            for (size_t r = 0; r < 3; ++r)
                for (size_t c = 0; c < 3; ++c)
                    CHECK(k.at(i * 3 + r, j * 3 + c) == a.at(i, j) * b.at(r, c));
    // mixed-product property
    mat_q a2 = random_matrix(rng, 2), b2 = random_matrix(rng, 3);
    CHECK(a.kronecker(b).mul(a2.kronecker(b2)) == a.mul(a2).kronecker(b.mul(b2)));
}

TEST_CASE("compound matrices are functorial") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 20; ++t) {
        mat_q a = random_matrix(rng, 4), b = random_matrix(rng, 4);
        for (unsigned l = 1; l <= 3; ++l)
            CHECK(a.mul(b).compound(l) == a.compound(l).mul(b.compound(l)));
    }
    CHECK(mat_q::identity(5).compound(2).is_identity());
    // subset-sum diagonal for a diagonal input
    mat_q d(3, 3);
    d.at(0, 0) = 2;
    d.at(1, 1) = 3;
    d.at(2, 2) = 5;
    mat_q c = d.compound(2);
    CHECK(c.is_diagonal());
    CHECK(c.at(0, 0) == 6);   // {0,1}
    CHECK(c.at(1, 1) == 10);  // {0,2}
    CHECK(c.at(2, 2) == 15);  // {1,2}
}

TEST_CASE("symmetric power matrices are functorial") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 15; ++t) {
        mat_q a = random_matrix(rng, 2, -2, 2), b = random_matrix(rng, 2, -2, 2);
        for (unsigned l = 2; l <= 3; ++l)
            CHECK(sym_power_matrix(a.mul(b), l) ==
                  sym_power_matrix(a, l).mul(sym_power_matrix(b, l)));
    }
    mat_q m = random_matrix(rng, 3);
    CHECK(sym_power_matrix(m, 1) == m);
    CHECK(sym_power_matrix(mat_q::identity(4), 3).is_identity());
}

TEST_CASE("monomial detection") {
    mat_q m(3, 3);
    m.at(2, 0) = mpq_class(1, 2);
    m.at(0, 1) = -3;
    m.at(1, 2) = 1;
    std::vector<size_t> rows;
    CHECK(m.is_monomial(&rows));
    CHECK(rows == std::vector<size_t>{2, 0, 1});
    m.at(0, 0) = 1;
    CHECK_FALSE(m.is_monomial());
}

TEST_CASE("permanent against the permutation oracle") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 25; ++t) {
        mat_q m = random_matrix(rng, 4, -2, 2);
        CHECK(permanent(m) == permanent_brute(m));
    }
}

TEST_CASE("subsets are lexicographic") {
    auto s = subsets_of_size(4, 2);
    REQUIRE(s.size() == 6);
    CHECK(s.front() == std::vector<size_t>{0, 1});
    CHECK(s[1] == std::vector<size_t>{0, 2});
    CHECK(s.back() == std::vector<size_t>{2, 3});
}
