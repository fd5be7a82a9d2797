#ifndef ADELIC_MATRIX_HPP
#define ADELIC_MATRIX_HPP

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "adelic/rational.hpp"

namespace adelic {

using vec_q = std::vector<mpq_class>;

/* Dense matrix over Q, row-major. */
class mat_q {
  public:
    mat_q() = default;
    mat_q(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static mat_q identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    mpq_class& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const mpq_class& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const mat_q& o) const = default;

    mat_q transpose() const;
    mat_q mul(const mat_q& o) const;
    vec_q apply(const vec_q& x) const;
    mat_q kronecker(const mat_q& o) const;
    mat_q block_diag(const mat_q& o) const;
    mat_q submatrix(const std::vector<size_t>& rows, const std::vector<size_t>& cols) const;

    mpq_class determinant() const;            // square
    mat_q inverse() const;                     // throws on singular
    size_t rank() const;

    bool is_identity() const;
    bool is_diagonal() const;
    /* One nonzero per row and per column; fills row_of_col[j] = i. */
    bool is_monomial(std::vector<size_t>* row_of_col = nullptr) const;
    bool is_symmetric() const;
    /* Sylvester test: all leading principal minors positive. */
    bool is_positive_definite() const;

    /* l-th compound: C(n,l) x C(m,l) matrix of l x l minors, subsets in
     * lexicographic order. */
    mat_q compound(unsigned l) const;

  private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<mpq_class> a_;
};

struct singular_matrix : arithmetic_error {
    using arithmetic_error::arithmetic_error;
};

/* k-subsets of {0,...,n-1} in lexicographic order. */
std::vector<std::vector<size_t>> subsets_of_size(size_t n, size_t k);

/* Matrix of the induced map on degree-l monomials: row alpha, column beta
 * holds the coefficient of x^alpha in prod_j (Mx)_j^{beta_j}.  Monomial
 * order matches for_each_composition (descending lexicographic). */
mat_q sym_power_matrix(const mat_q& m, unsigned l);

/* Permanent by Ryser's formula. */
mpq_class permanent(const mat_q& m);

}  // namespace adelic

#endif
