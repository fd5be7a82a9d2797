#ifndef ADELIC_BUNDLE_HPP
#define ADELIC_BUNDLE_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "adelic/exact_real.hpp"
#include "adelic/matrix.hpp"

namespace adelic {

struct bundle_error : arithmetic_error {
    using arithmetic_error::arithmetic_error;
};

/* Ultrametric valuations could not be certified from the twist data
 * (tied right-shift groups with possible cancellation). */
struct indeterminate_valuation : arithmetic_error {
    using arithmetic_error::arithmetic_error;
};

/* A group of finite places over the prime p of total weight `weight`,
 * where the norm is |D_L * m * D_R * x|_sup with D_* diagonal matrices of
 * elements of prescribed valuations d_left / d_right. */
struct local_twist {
    mpz_class p;
    mpq_class weight;
    vec_q d_left;
    mat_q m;
    vec_q d_right;
};

/* Twisted-standard adelic hermitian bundle: one archimedean class of
 * weight one with rational Gram matrix, finitely many twisted place
 * classes, and the standard sup norm on the residual weight at every
 * prime. */
struct bundle {
    unsigned dim = 0;
    mat_q arch_gram;
    std::vector<local_twist> twists;
};

/* Validating constructor: positive-definite Gram (exact leading-minor
 * test), invertible twist matrices, per-prime weights summing to <= 1. */
bundle make_bundle(unsigned dim, mat_q arch_gram, std::vector<local_twist> twists);

/* Height of a nonzero rational vector.  Exact whenever every ultrametric
 * minimum is attained by a unique right-shift group; otherwise a certified
 * interval (the lower end may be vacuous, since cancellation only ever
 * shrinks a local norm below its min-rule value). */
struct height_result {
    bool exact = true;
    exact_pos_real upper;                  // the value itself when exact
    std::optional<exact_pos_real> lower;   // equals upper when exact

    const exact_pos_real& value() const;
};

height_result height(const bundle& b, const vec_q& x);

slope_value slope(const bundle& b);

bundle dual(const bundle& b);
bundle direct_sum(const bundle& a, const bundle& b);
bundle tensor(const bundle& a, const bundle& b);
bundle sym_power(const bundle& b, unsigned l, unsigned long dimension_cap = 5000);
bundle ext_power(const bundle& b, unsigned l, unsigned long dimension_cap = 5000);

/* Exact slope of the sub-bundle spanned by independent rational vectors,
 * with induced metrics.  Throws indeterminate_valuation when ultrametric
 * minor valuations cannot be certified, dependent_basis on rank loss. */
struct dependent_basis : arithmetic_error {
    using arithmetic_error::arithmetic_error;
};

slope_value subspace_slope(const bundle& b, const std::vector<vec_q>& basis);

/* True iff the bundle is an orthogonal sum of coordinate lines: diagonal
 * Gram and monomial twist matrices.  witness[t][j] = row of the nonzero
 * entry in column j of twist t. */
bool split_detect(const bundle& b, std::vector<std::vector<size_t>>* witness = nullptr);

enum class certificate { exact, lower_bound };

struct max_slope_result {
    slope_value value;
    certificate kind;
    std::vector<size_t> witness_coords;  // coordinates of the best subspace found
};

/* Exact maximal slope of a split bundle: best coordinate line. */
max_slope_result max_slope_split(const bundle& b);

struct subspace_family {
    unsigned subset_size_cap = 2;       // coordinate subsets up to this size
    unsigned long subset_count_cap = 100000;
    bool include_full = true;
    /* When positive, also the lines spanned by primitive integer vectors
     * in [-line_radius, line_radius]^dim (count-capped). */
    unsigned line_radius = 0;
    std::vector<std::vector<vec_q>> extra_bases;
};

/* Certified lower bound: maximum of subspace_slope over the family.
 * Indeterminate subspaces are skipped (counted in skipped). */
struct max_slope_search_result {
    max_slope_result best;
    unsigned long evaluated = 0;
    unsigned long skipped = 0;
};

max_slope_search_result max_slope_search(const bundle& b, const subspace_family& family);

/* Exhaustive height minimization over sign-normalized primitive integer
 * vectors in [-radius, radius]^dim.  Denominator scalings never change a
 * height (product formula), so denom_bound only documents the requested
 * search; the candidate line set is the box's primitive vectors.  Ties
 * break to the lexicographically smallest witness. */
struct min_search_result {
    exact_pos_real value;
    std::vector<mpq_class> witness;
    unsigned long candidates = 0;
    /* False when an interval-valued height could undercut the minimum. */
    bool certified = true;
};

std::optional<min_search_result> min_search(const bundle& b, unsigned radius,
                                            unsigned denom_bound = 1,
                                            unsigned long node_cap = 20000000);

/* Certified lower bounds for the absolute minimum over Qbar. */
exact_pos_real lambda_lower_bound_split(const bundle& b);
exact_pos_real lambda_lower_bound_tensor(const std::vector<bundle>& split_factors);

/* JSON wire format (bit-exact round trip):
 * {"dim": n, "arch_gram": [["a/b", ...], ...], "twists": [{"p": 5,
 *  "weight": "1/2", "d_left": [...], "m": [[...]], "d_right": [...]}]}
 * Identity arch_gram and zero d_left/d_right are omitted on output and
 * optional on input. */
std::string bundle_to_json(const bundle& b);
bundle bundle_from_json(const std::string& text);

}  // namespace adelic

#endif
