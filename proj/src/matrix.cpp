#include "adelic/matrix.hpp"

#include <map>

#include "adelic/multinomial.hpp"

namespace adelic {

mat_q mat_q::identity(size_t n) {
    mat_q m(n, n);
    for (size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

mat_q mat_q::transpose() const {
    mat_q t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

mat_q mat_q::mul(const mat_q& o) const {
    if (cols_ != o.rows_)
        throw arithmetic_error("mat_q::mul: shape mismatch");
    mat_q r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            if (at(i, k) == 0)
                continue;
            for (size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

vec_q mat_q::apply(const vec_q& x) const {
    if (x.size() != cols_)
        throw arithmetic_error("mat_q::apply: dimension mismatch");
    vec_q y(rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0 && x[j] != 0)
                y[i] += at(i, j) * x[j];
    return y;
}

mat_q mat_q::kronecker(const mat_q& o) const {
    mat_q r(rows_ * o.rows_, cols_ * o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            if (at(i, j) == 0)
                continue;
            for (size_t k = 0; k < o.rows_; ++k)
                for (size_t l = 0; l < o.cols_; ++l)
                    r.at(i * o.rows_ + k, j * o.cols_ + l) = at(i, j) * o.at(k, l);
        }
    return r;
}

mat_q mat_q::block_diag(const mat_q& o) const {
    mat_q r(rows_ + o.rows_, cols_ + o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            r.at(i, j) = at(i, j);
    for (size_t i = 0; i < o.rows_; ++i)
        for (size_t j = 0; j < o.cols_; ++j)
            r.at(rows_ + i, cols_ + j) = o.at(i, j);
    return r;
}

mat_q mat_q::submatrix(const std::vector<size_t>& rows, const std::vector<size_t>& cols) const {
    mat_q r(rows.size(), cols.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j)
            r.at(i, j) = at(rows[i], cols[j]);
    return r;
}

mpq_class mat_q::determinant() const {
    if (rows_ != cols_)
        throw arithmetic_error("determinant: square matrix required");
    size_t n = rows_;
    if (n == 0)
        return 1;
    mat_q m(*this);
    mpq_class det = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m.at(pivot, col) == 0)
            ++pivot;
        if (pivot == n)
            return 0;
        if (pivot != col) {
            for (size_t j = col; j < n; ++j)
                std::swap(m.at(pivot, j), m.at(col, j));
            det = -det;
        }
        det *= m.at(col, col);
        for (size_t i = col + 1; i < n; ++i) {
            if (m.at(i, col) == 0)
                continue;
            mpq_class f = m.at(i, col) / m.at(col, col);
            for (size_t j = col; j < n; ++j)
                m.at(i, j) -= f * m.at(col, j);
        }
    }
    return det;
}

mat_q mat_q::inverse() const {
    if (rows_ != cols_)
        throw arithmetic_error("inverse: square matrix required");
    size_t n = rows_;
    mat_q m(*this);
    mat_q inv = identity(n);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m.at(pivot, col) == 0)
            ++pivot;
        if (pivot == n)
            throw singular_matrix("inverse: singular matrix");
        if (pivot != col)
            for (size_t j = 0; j < n; ++j) {
                std::swap(m.at(pivot, j), m.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        mpq_class d = m.at(col, col);
        for (size_t j = 0; j < n; ++j) {
            m.at(col, j) /= d;
            inv.at(col, j) /= d;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || m.at(i, col) == 0)
                continue;
            mpq_class f = m.at(i, col);
            for (size_t j = 0; j < n; ++j) {
                m.at(i, j) -= f * m.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

size_t mat_q::rank() const {
    mat_q m(*this);
    size_t rank = 0;
    for (size_t col = 0; col < cols_ && rank < rows_; ++col) {
        size_t pivot = rank;
        while (pivot < rows_ && m.at(pivot, col) == 0)
            ++pivot;
        if (pivot == rows_)
            continue;
        if (pivot != rank)
            for (size_t j = 0; j < cols_; ++j)
                std::swap(m.at(pivot, j), m.at(rank, j));
        for (size_t i = rank + 1; i < rows_; ++i) {
            if (m.at(i, col) == 0)
                continue;
            mpq_class f = m.at(i, col) / m.at(rank, col);
            for (size_t j = col; j < cols_; ++j)
                m.at(i, j) -= f * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

bool mat_q::is_identity() const {
    if (rows_ != cols_)
        return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0))
                return false;
    return true;
}

bool mat_q::is_diagonal() const {
    if (rows_ != cols_)
        return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (i != j && at(i, j) != 0)
                return false;
    return true;
}

bool mat_q::is_monomial(std::vector<size_t>* row_of_col) const {
    if (rows_ != cols_)
        return false;
    std::vector<size_t> rows(cols_, rows_);
    std::vector<bool> used(rows_, false);
    for (size_t j = 0; j < cols_; ++j) {
        size_t found = rows_;
        for (size_t i = 0; i < rows_; ++i) {
            if (at(i, j) == 0)
                continue;
            if (found != rows_)
                return false;
            found = i;
        }
        if (found == rows_ || used[found])
            return false;
        used[found] = true;
        rows[j] = found;
    }
    if (row_of_col)
        *row_of_col = rows;
    return true;
}

bool mat_q::is_symmetric() const {
    if (rows_ != cols_)
        return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i))
                return false;
    return true;
}

bool mat_q::is_positive_definite() const {
    if (rows_ != cols_ || !is_symmetric())
        return false;
    std::vector<size_t> idx;
    for (size_t k = 1; k <= rows_; ++k) {
        idx.push_back(k - 1);
        if (submatrix(idx, idx).determinant() <= 0)
            return false;
    }
    return true;
}

std::vector<std::vector<size_t>> subsets_of_size(size_t n, size_t k) {
    std::vector<std::vector<size_t>> out;
    if (k > n)
        return out;
    std::vector<size_t> c(k);
    for (size_t i = 0; i < k; ++i)
        c[i] = i;
    while (true) {
        out.push_back(c);
        size_t i = k;
        while (i > 0 && c[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            break;
        ++c[i - 1];
        for (size_t j = i; j < k; ++j)
            c[j] = c[j - 1] + 1;
    }
    return out;
}

mat_q mat_q::compound(unsigned l) const {
    if (l == 0 || l > rows_ || l > cols_)
        throw arithmetic_error("compound: order out of range");
    auto row_sets = subsets_of_size(rows_, l);
    auto col_sets = subsets_of_size(cols_, l);
    mat_q r(row_sets.size(), col_sets.size());
    for (size_t i = 0; i < row_sets.size(); ++i)
        for (size_t j = 0; j < col_sets.size(); ++j)
            r.at(i, j) = submatrix(row_sets[i], col_sets[j]).determinant();
    return r;
}

namespace {

/* Sparse polynomial in n variables, keyed by exponent vector. */
using poly = std::map<std::vector<unsigned>, mpq_class>;

poly poly_mul_linear(const poly& p, const vec_q& linear) {
    poly out;
    for (const auto& [mono, coef] : p)
        for (size_t i = 0; i < linear.size(); ++i) {
            if (linear[i] == 0)
                continue;
            std::vector<unsigned> m2(mono);
            m2[i] += 1;
            out[m2] += coef * linear[i];
        }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace

mat_q sym_power_matrix(const mat_q& m, unsigned l) {
    if (m.rows() != m.cols())
        throw arithmetic_error("sym_power_matrix: square matrix required");
    size_t n = m.rows();
    if (m.is_identity()) {
        mpz_class dim = composition_count(n, l);
        return mat_q::identity(dim.get_ui());
    }

    std::vector<std::vector<unsigned>> monos;
    for_each_composition(n, l, [&](const std::vector<unsigned>& c) { monos.push_back(c); });
    std::map<std::vector<unsigned>, size_t> index;
    for (size_t i = 0; i < monos.size(); ++i)
        index[monos[i]] = i;

    // image of e_j is column j of m
    std::vector<vec_q> col_forms(n);
    for (size_t j = 0; j < n; ++j) {
        col_forms[j].resize(n);
        for (size_t i = 0; i < n; ++i)
            col_forms[j][i] = m.at(i, j);
    }

    mat_q out(monos.size(), monos.size());
    for (size_t bcol = 0; bcol < monos.size(); ++bcol) {
        poly prod;
        prod[std::vector<unsigned>(n, 0)] = 1;
        for (size_t j = 0; j < n; ++j)
            for (unsigned rep = 0; rep < monos[bcol][j]; ++rep)
                prod = poly_mul_linear(prod, col_forms[j]);
        for (const auto& [mono, coef] : prod)
            out.at(index.at(mono), bcol) = coef;
    }
    return out;
}

mpq_class permanent(const mat_q& m) {
    if (m.rows() != m.cols())
        throw arithmetic_error("permanent: square matrix required");
    size_t n = m.rows();
    if (n == 0)
        return 1;
    // Ryser: perm = (-1)^n sum_{S} (-1)^{|S|} prod_i sum_{j in S} a_ij
    mpq_class total = 0;
    for (size_t mask = 1; mask < (size_t(1) << n); ++mask) {
        vec_q colsum(n);
        size_t bits = 0;
        for (size_t j = 0; j < n; ++j)
            if (mask & (size_t(1) << j)) {
                ++bits;
                for (size_t i = 0; i < n; ++i)
                    colsum[i] += m.at(i, j);
            }
        mpq_class prod = 1;
        for (size_t i = 0; i < n; ++i)
            prod *= colsum[i];
        if ((n - bits) % 2 == 0)
            total += prod;
        else
            total -= prod;
    }
    return total;
}

}  // namespace adelic
