#include "adelic/bundle.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "adelic/multinomial.hpp"

namespace adelic {

const exact_pos_real& height_result::value() const {
    if (!exact)
        throw arithmetic_error("height_result: interval result has no exact value");
    return upper;
}

bundle make_bundle(unsigned dim, mat_q arch_gram, std::vector<local_twist> twists) {
    if (dim == 0)
        throw bundle_error("bundle: dimension must be positive");
    if (arch_gram.rows() == 0)
        arch_gram = mat_q::identity(dim);
    if (arch_gram.rows() != dim || arch_gram.cols() != dim)
        throw bundle_error("bundle: Gram matrix dimension mismatch");
    if (!arch_gram.is_positive_definite())
        throw bundle_error("bundle: Gram matrix is not positive definite");

    std::map<mpz_class, mpq_class> weight_at;
    for (auto& t : twists) {
        if (!is_prime(t.p))
            throw bundle_error("twist: " + t.p.get_str() + " is not prime");
        if (t.weight <= 0 || t.weight > 1)
            throw bundle_error("twist: weight must lie in (0, 1]");
        if (t.d_left.empty())
            t.d_left.assign(dim, 0);
        if (t.d_right.empty())
            t.d_right.assign(dim, 0);
        if (t.m.rows() == 0)
            t.m = mat_q::identity(dim);
        if (t.m.rows() != dim || t.m.cols() != dim || t.d_left.size() != dim ||
            t.d_right.size() != dim)
            throw bundle_error("twist: dimension mismatch");
        if (t.m.determinant() == 0)
            throw bundle_error("twist: singular matrix");
        weight_at[t.p] += t.weight;
        if (weight_at[t.p] > 1)
            throw bundle_error("twists at p=" + t.p.get_str() + " have total weight > 1");
    }
    return bundle{dim, std::move(arch_gram), std::move(twists)};
}

namespace {

struct val_status {
    enum kind_t { exact, at_least, infinite } kind = infinite;
    mpq_class v;  // value or lower bound
};

/* Valuation of a formal sum of rational coefficients attached to symbol
 * groups: exact sums inside a group, min rule across groups, tie across
 * distinct groups -> at_least (cancellation cannot be ruled out). */
val_status valuation_of_groups(const std::map<mpq_class, mpq_class>& coeff_by_shift,
                               const mpz_class& p) {
    val_status st;
    unsigned ties = 0;
    for (const auto& [shift, coeff] : coeff_by_shift) {
        if (coeff == 0)
            continue;
        mpq_class v = mpq_class(valuation(coeff, p)) + shift;
        if (st.kind == val_status::infinite) {
            st = {val_status::exact, v};
            ties = 1;
        } else if (v < st.v) {
            st = {val_status::exact, v};
            ties = 1;
        } else if (v == st.v) {
            ++ties;
        }
    }
    if (st.kind != val_status::infinite && ties > 1)
        st.kind = val_status::at_least;
    return st;
}

val_status twist_coordinate_valuation(const local_twist& t, size_t row, const vec_q& x) {
    std::map<mpq_class, mpq_class> groups;
    for (size_t j = 0; j < x.size(); ++j)
        if (x[j] != 0 && t.m.at(row, j) != 0)
            groups[t.d_right[j]] += t.m.at(row, j) * x[j];
    return valuation_of_groups(groups, t.p);
}

/* Exponent of the twist's local sup norm: norm = p^{exp}, with
 * exp = -min_i (v_i + d_left_i).  Returns (exact flag, lower?, upper). */
struct norm_exponent {
    bool exact;
    std::optional<mpq_class> lower;
    mpq_class upper;
};

norm_exponent twist_norm_exponent(const local_twist& t, const vec_q& x) {
    std::optional<mpq_class> best_exact;   // max over exact coords of -(v+dl)
    std::optional<mpq_class> best_upper;   // max over all coords of -(lb+dl)
    for (size_t i = 0; i < x.size(); ++i) {
        val_status st = twist_coordinate_valuation(t, i, x);
        if (st.kind == val_status::infinite)
            continue;
        mpq_class e = -(st.v + t.d_left[i]);
        if (!best_upper || e > *best_upper)
            best_upper = e;
        if (st.kind == val_status::exact && (!best_exact || e > *best_exact))
            best_exact = e;
    }
    if (!best_upper)
        throw arithmetic_error("twist norm: zero image of a nonzero vector (bug)");
    if (best_exact && *best_exact == *best_upper)
        return {true, best_exact, *best_upper};
    return {false, best_exact, *best_upper};
}

long min_coordinate_valuation(const vec_q& x, const mpz_class& p) {
    bool any = false;
    long best = 0;
    for (const auto& c : x) {
        if (c == 0)
            continue;
        long v = valuation(c, p);
        if (!any || v < best) {
            best = v;
            any = true;
        }
    }
    if (!any)
        throw arithmetic_error("valuation of the zero vector");
    return best;
}

mpq_class quadratic_form(const mat_q& g, const vec_q& x) {
    mpq_class total = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0)
            continue;
        for (size_t j = 0; j < x.size(); ++j)
            if (x[j] != 0)
                total += x[i] * g.at(i, j) * x[j];
    }
    return total;
}

}  // namespace

height_result height(const bundle& b, const vec_q& x) {
    if (x.size() != b.dim)
        throw bundle_error("height: dimension mismatch");
    bool nonzero = std::any_of(x.begin(), x.end(), [](const mpq_class& c) { return c != 0; });
    if (!nonzero)
        throw bundle_error("height: zero vector");

    // archimedean factor (x^T G x)^(1/2), weight one
    log_form upper = exact_pos_real::from_rational(quadratic_form(b.arch_gram, x)).pow(mpq_class(1, 2)).form();
    log_form lower = upper;
    bool exact = true, lower_valid = true;

    // primes in play: twist primes plus divisors of the coordinates
    std::map<mpz_class, mpq_class> twist_weight;
    for (const auto& t : b.twists)
        twist_weight[t.p] += t.weight;
    std::map<mpz_class, long> content;  // min coordinate valuation per prime
    for (const auto& c : x)
        if (c != 0)
            for (const auto& [p, e] : factor(mpq_class(abs(c)))) {
                (void)e;
                content.try_emplace(p, 0);
            }
    for (const auto& [p, w] : twist_weight)
        content.try_emplace(p, 0);
    for (auto& [p, v] : content)
        v = min_coordinate_valuation(x, p);

    for (const auto& [p, minval] : content) {
        auto it = twist_weight.find(p);
        mpq_class residual = 1 - (it == twist_weight.end() ? mpq_class(0) : it->second);
        if (residual != 0 && minval != 0) {
            // standard sup norm p^{-minval} on the residual weight
            mpq_class e = residual * mpq_class(-minval);
            upper.logs[p] += e;
            lower.logs[p] += e;
        }
    }
    for (const auto& t : b.twists) {
        norm_exponent ne = twist_norm_exponent(t, x);
        upper.logs[t.p] += t.weight * ne.upper;
        if (ne.exact) {
            lower.logs[t.p] += t.weight * ne.upper;
        } else {
            exact = false;
            if (ne.lower && lower_valid)
                lower.logs[t.p] += t.weight * *ne.lower;
            else
                lower_valid = false;
        }
    }

    height_result out;
    out.exact = exact;
    out.upper = exact_pos_real(std::move(upper));
    if (exact)
        out.lower = out.upper;
    else if (lower_valid)
        out.lower = exact_pos_real(std::move(lower));
    return out;
}

slope_value slope(const bundle& b) {
    log_form f;
    mpq_class inv_dim(1, b.dim);
    for (const auto& t : b.twists) {
        mpq_class shift_sum = 0;
        for (const auto& d : t.d_left)
            shift_sum += d;
        for (const auto& d : t.d_right)
            shift_sum += d;
        shift_sum += valuation(t.m.determinant(), t.p);
        f.logs[t.p] += inv_dim * t.weight * shift_sum;
    }
    // archimedean: -(1/2n) log det G
    mpq_class det = b.arch_gram.determinant();
    for (const auto& [p, e] : factor(det)) {
        mpq_class half(-e, 2);
        half.canonicalize();
        f.logs[p] += inv_dim * half;
    }
    return slope_value(std::move(f));
}

bundle dual(const bundle& b) {
    std::vector<local_twist> twists;
    twists.reserve(b.twists.size());
    for (const auto& t : b.twists) {
        local_twist d;
        d.p = t.p;
        d.weight = t.weight;
        d.m = t.m.transpose().inverse();
        d.d_left.reserve(b.dim);
        d.d_right.reserve(b.dim);
        for (const auto& v : t.d_left)
            d.d_left.push_back(-v);
        for (const auto& v : t.d_right)
            d.d_right.push_back(-v);
        twists.push_back(std::move(d));
    }
    return make_bundle(b.dim, b.arch_gram.inverse(), std::move(twists));
}

namespace {

local_twist identity_twist(const mpz_class& p, unsigned dim) {
    return {p, 1, vec_q(dim, 0), mat_q::identity(dim), vec_q(dim, 0)};
}

struct aligned_class {
    local_twist a, b;
    mpq_class weight;
};

/* Common refinement of the two weight partitions at one prime, in list
 * order; the shorter side is padded with identity twists. */
std::vector<aligned_class> align_classes(const mpz_class& p,
                                         const std::vector<const local_twist*>& ta, unsigned dim_a,
                                         const std::vector<const local_twist*>& tb,
                                         unsigned dim_b) {
    std::vector<aligned_class> out;
    size_t ia = 0, ib = 0;
    mpq_class rem_a = ta.empty() ? mpq_class(0) : ta[0]->weight;
    mpq_class rem_b = tb.empty() ? mpq_class(0) : tb[0]->weight;
    while (ia < ta.size() || ib < tb.size()) {
        if (ia == ta.size()) {
            out.push_back({identity_twist(p, dim_a), *tb[ib], rem_b});
            if (++ib < tb.size())
                rem_b = tb[ib]->weight;
            continue;
        }
        if (ib == tb.size()) {
            out.push_back({*ta[ia], identity_twist(p, dim_b), rem_a});
            if (++ia < ta.size())
                rem_a = ta[ia]->weight;
            continue;
        }
        mpq_class w = std::min(rem_a, rem_b);
        out.push_back({*ta[ia], *tb[ib], w});
        rem_a -= w;
        rem_b -= w;
        if (rem_a == 0 && ++ia < ta.size())
            rem_a = ta[ia]->weight;
        if (rem_b == 0 && ++ib < tb.size())
            rem_b = tb[ib]->weight;
    }
    return out;
}

template <typename Combine>
std::vector<local_twist> combine_twists(const bundle& a, const bundle& b, Combine&& combine) {
    std::map<mpz_class, std::pair<std::vector<const local_twist*>, std::vector<const local_twist*>>>
        at_prime;
    for (const auto& t : a.twists)
        at_prime[t.p].first.push_back(&t);
    for (const auto& t : b.twists)
        at_prime[t.p].second.push_back(&t);
    std::vector<local_twist> out;
    for (const auto& [p, lists] : at_prime)
        for (const auto& cls : align_classes(p, lists.first, a.dim, lists.second, b.dim)) {
            local_twist t = combine(cls.a, cls.b);
            t.p = p;
            t.weight = cls.weight;
            out.push_back(std::move(t));
        }
    return out;
}

}  // namespace

bundle direct_sum(const bundle& a, const bundle& b) {
    auto twists = combine_twists(a, b, [](const local_twist& ta, const local_twist& tb) {
        local_twist t;
        t.d_left = ta.d_left;
        t.d_left.insert(t.d_left.end(), tb.d_left.begin(), tb.d_left.end());
        t.d_right = ta.d_right;
        t.d_right.insert(t.d_right.end(), tb.d_right.begin(), tb.d_right.end());
        t.m = ta.m.block_diag(tb.m);
        return t;
    });
    return make_bundle(a.dim + b.dim, a.arch_gram.block_diag(b.arch_gram), std::move(twists));
}

bundle tensor(const bundle& a, const bundle& b) {
    auto twists = combine_twists(a, b, [&](const local_twist& ta, const local_twist& tb) {
        local_twist t;
        t.d_left.reserve(size_t(a.dim) * b.dim);
        t.d_right.reserve(size_t(a.dim) * b.dim);
        for (unsigned i = 0; i < a.dim; ++i)
            for (unsigned j = 0; j < b.dim; ++j) {
                t.d_left.push_back(ta.d_left[i] + tb.d_left[j]);
                t.d_right.push_back(ta.d_right[i] + tb.d_right[j]);
            }
        t.m = ta.m.kronecker(tb.m);
        return t;
    });
    return make_bundle(a.dim * b.dim, a.arch_gram.kronecker(b.arch_gram), std::move(twists));
}

namespace {

std::vector<std::vector<unsigned>> compositions_of(unsigned n, unsigned l) {
    std::vector<std::vector<unsigned>> out;
    for_each_composition(n, l, [&](const std::vector<unsigned>& c) { out.push_back(c); });
    return out;
}

mpz_class multi_factorial(const std::vector<unsigned>& parts) {
    mpz_class f = 1, g;
    for (unsigned v : parts) {
        mpz_fac_ui(g.get_mpz_t(), v);
        f *= g;
    }
    return f;
}

}  // namespace

bundle sym_power(const bundle& b, unsigned l, unsigned long dimension_cap) {
    if (l < 1)
        throw bundle_error("sym_power: l >= 1 required");
    mpz_class dim_z = composition_count(b.dim, l);
    if (dim_z > dimension_cap)
        throw cap_exceeded("sym_power: dimension " + dim_z.get_str() + " exceeds the cap");
    size_t dim = dim_z.get_ui();
    auto monos = compositions_of(b.dim, l);

    mpz_class l_fact;
    mpz_fac_ui(l_fact.get_mpz_t(), l);

    mat_q gram(dim, dim);
    if (b.arch_gram.is_diagonal()) {
        for (size_t i = 0; i < dim; ++i) {
            mpq_class g(multi_factorial(monos[i]), l_fact);
            g.canonicalize();
            for (size_t k = 0; k < b.dim; ++k)
                for (unsigned rep = 0; rep < monos[i][k]; ++rep)
                    g *= b.arch_gram.at(k, k);
            gram.at(i, i) = g;
        }
    } else {
        // permanent formula <x_1...x_l, y_1...y_l> = perm(<x_i,y_j>)/l!
        auto expand = [&](const std::vector<unsigned>& mono) {
            std::vector<size_t> reps;
            for (size_t k = 0; k < mono.size(); ++k)
                for (unsigned rep = 0; rep < mono[k]; ++rep)
                    reps.push_back(k);
            return reps;
        };
        std::vector<std::vector<size_t>> reps(dim);
        for (size_t i = 0; i < dim; ++i)
            reps[i] = expand(monos[i]);
        for (size_t i = 0; i < dim; ++i)
            for (size_t j = i; j < dim; ++j) {
                mat_q cross(l, l);
                for (unsigned r = 0; r < l; ++r)
                    for (unsigned c = 0; c < l; ++c)
                        cross.at(r, c) = b.arch_gram.at(reps[i][r], reps[j][c]);
                mpq_class val = permanent(cross) / mpq_class(l_fact);
                val.canonicalize();
                gram.at(i, j) = val;
                gram.at(j, i) = val;
            }
    }

    std::vector<local_twist> twists;
    twists.reserve(b.twists.size());
    for (const auto& t : b.twists) {
        local_twist s;
        s.p = t.p;
        s.weight = t.weight;
        s.m = sym_power_matrix(t.m, l);
        s.d_left.reserve(dim);
        s.d_right.reserve(dim);
        for (const auto& mono : monos) {
            mpq_class dl = 0, dr = 0;
            for (size_t k = 0; k < b.dim; ++k) {
                dl += mpq_class(mono[k]) * t.d_left[k];
                dr += mpq_class(mono[k]) * t.d_right[k];
            }
            s.d_left.push_back(dl);
            s.d_right.push_back(dr);
        }
        twists.push_back(std::move(s));
    }
    return make_bundle(static_cast<unsigned>(dim), std::move(gram), std::move(twists));
}

bundle ext_power(const bundle& b, unsigned l, unsigned long dimension_cap) {
    if (l < 1 || l > b.dim)
        throw bundle_error("ext_power: need 1 <= l <= dim");
    auto sets = subsets_of_size(b.dim, l);
    if (sets.size() > dimension_cap)
        throw cap_exceeded("ext_power: dimension exceeds the cap");

    std::vector<local_twist> twists;
    twists.reserve(b.twists.size());
    for (const auto& t : b.twists) {
        local_twist s;
        s.p = t.p;
        s.weight = t.weight;
        s.m = t.m.compound(l);
        for (const auto& set : sets) {
            mpq_class dl = 0, dr = 0;
            for (size_t k : set) {
                dl += t.d_left[k];
                dr += t.d_right[k];
            }
            s.d_left.push_back(dl);
            s.d_right.push_back(dr);
        }
        twists.push_back(std::move(s));
    }
    return make_bundle(static_cast<unsigned>(sets.size()), b.arch_gram.compound(l),
                       std::move(twists));
}

namespace {

/* Valuation of det(M_{I,J} applied to the twisted columns), i.e. of
 * sum_J det(M_{I,J}) (prod_{j in J} delta_j) det(B_{J,*}): terms with the
 * same multiset of right shifts share their symbol product. */
val_status twist_minor_valuation(const local_twist& t, const std::vector<size_t>& rows,
                                 const std::vector<std::vector<size_t>>& col_sets,
                                 const std::vector<mpq_class>& basis_minors) {
    std::map<std::vector<mpq_class>, std::pair<mpq_class, mpq_class>> groups;  // key -> (sum, shift)
    for (size_t k = 0; k < col_sets.size(); ++k) {
        if (basis_minors[k] == 0)
            continue;
        mpq_class coef = t.m.submatrix(rows, col_sets[k]).determinant() * basis_minors[k];
        if (coef == 0)
            continue;
        std::vector<mpq_class> key;
        mpq_class shift = 0;
        for (size_t j : col_sets[k]) {
            key.push_back(t.d_right[j]);
            shift += t.d_right[j];
        }
        std::sort(key.begin(), key.end());
        auto [it, fresh] = groups.try_emplace(std::move(key), std::make_pair(coef, shift));
        if (!fresh)
            it->second.first += coef;
    }
    val_status st;
    unsigned ties = 0;
    for (const auto& [key, entry] : groups) {
        const auto& [coef, shift] = entry;
        if (coef == 0)
            continue;
        mpq_class v = mpq_class(valuation(coef, t.p)) + shift;
        if (st.kind == val_status::infinite || v < st.v) {
            st = {val_status::exact, v};
            ties = 1;
        } else if (v == st.v) {
            ++ties;
        }
    }
    if (st.kind != val_status::infinite && ties > 1)
        st.kind = val_status::at_least;
    return st;
}

}  // namespace

slope_value subspace_slope(const bundle& b, const std::vector<vec_q>& basis) {
    size_t m = basis.size();
    if (m == 0 || m > b.dim)
        throw dependent_basis("subspace_slope: need 1 <= #basis <= dim");
    mat_q bmat(b.dim, m);
    for (size_t j = 0; j < m; ++j) {
        if (basis[j].size() != b.dim)
            throw bundle_error("subspace_slope: vector dimension mismatch");
        for (size_t i = 0; i < b.dim; ++i)
            bmat.at(i, j) = basis[j][i];
    }
    if (bmat.rank() != m)
        throw dependent_basis("subspace_slope: dependent basis");

    // Pluecker coordinates of the basis wedge
    auto row_sets = subsets_of_size(b.dim, m);
    std::vector<size_t> all_cols(m);
    for (size_t j = 0; j < m; ++j)
        all_cols[j] = j;
    std::vector<mpq_class> pluecker(row_sets.size());
    for (size_t k = 0; k < row_sets.size(); ++k)
        pluecker[k] = bmat.submatrix(row_sets[k], all_cols).determinant();

    log_form log_height;  // log of the wedge height

    // arch part: (1/2) log det(B^T G B)
    mpq_class det_arch = bmat.transpose().mul(b.arch_gram).mul(bmat).determinant();
    if (det_arch <= 0)
        throw dependent_basis("subspace_slope: degenerate induced Gram");
    for (const auto& [p, e] : factor(det_arch)) {
        mpq_class half(e, 2);
        half.canonicalize();
        log_height.logs[p] += half;
    }

    // sup norm of the Pluecker vector on residual weights at every prime
    std::map<mpz_class, mpq_class> twist_weight;
    for (const auto& t : b.twists)
        twist_weight[t.p] += t.weight;
    std::map<mpz_class, long> content;
    for (const auto& c : pluecker)
        if (c != 0)
            for (const auto& [p, e] : factor(mpq_class(abs(c)))) {
                (void)e;
                content.try_emplace(p, 0);
            }
    for (const auto& [p, w] : twist_weight)
        content.try_emplace(p, 0);
    for (const auto& [p, dummy] : content) {
        (void)dummy;
        bool any = false;
        long best = 0;
        for (const auto& c : pluecker) {
            if (c == 0)
                continue;
            long v = valuation(c, p);
            if (!any || v < best) {
                best = v;
                any = true;
            }
        }
        auto it = twist_weight.find(p);
        mpq_class residual = 1 - (it == twist_weight.end() ? mpq_class(0) : it->second);
        if (residual != 0 && best != 0)
            log_height.logs[p] += residual * best * -1;
    }

    // twisted classes: max over row subsets of |minor|_p
    auto col_sets = row_sets;  // subsets of the n rows of B, reused as column picks of M
    for (const auto& t : b.twists) {
        std::optional<mpq_class> best_exact;
        std::optional<mpq_class> best_lb;
        for (const auto& rows : row_sets) {
            mpq_class dl = 0;
            for (size_t i : rows)
                dl += t.d_left[i];
            val_status st = twist_minor_valuation(t, rows, col_sets, pluecker);
            if (st.kind == val_status::infinite)
                continue;
            mpq_class v = st.v + dl;
            if (!best_lb || v < *best_lb)
                best_lb = v;
            if (st.kind == val_status::exact && (!best_exact || v < *best_exact))
                best_exact = v;
        }
        if (!best_lb)
            throw arithmetic_error("subspace_slope: all minors vanish (bug)");
        if (!best_exact || *best_lb < *best_exact)
            throw indeterminate_valuation(
                "subspace_slope: tied right-shift groups at p=" + t.p.get_str() +
                " leave the minimal minor valuation uncertified");
        log_height.logs[t.p] += t.weight * -*best_exact;
    }

    log_height.scale(mpq_class(-1, static_cast<long>(m)));
    return slope_value(std::move(log_height));
}

bool split_detect(const bundle& b, std::vector<std::vector<size_t>>* witness) {
    if (!b.arch_gram.is_diagonal())
        return false;
    std::vector<std::vector<size_t>> rows;
    for (const auto& t : b.twists) {
        std::vector<size_t> perm;
        if (!t.m.is_monomial(&perm))
            return false;
        rows.push_back(std::move(perm));
    }
    if (witness)
        *witness = std::move(rows);
    return true;
}

namespace {

bool lex_less(const std::vector<long>& a, const std::vector<long>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool sign_normalized(const std::vector<long>& x) {
    for (long v : x) {
        if (v > 0)
            return true;
        if (v < 0)
            return false;
    }
    return false;  // zero vector
}

bool primitive(const std::vector<long>& x) {
    mpz_class g = 0;
    for (long v : x)
        mpz_gcd_ui(g.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(v < 0 ? -v : v));
    return g == 1;
}

slope_value coordinate_line_slope(const bundle& b, size_t i,
                                  const std::vector<std::vector<size_t>>& twist_rows) {
    log_form f;
    for (const auto& [p, e] : factor(mpq_class(b.arch_gram.at(i, i)))) {
        mpq_class half(-e, 2);
        half.canonicalize();
        f.logs[p] += half;
    }
    for (size_t t = 0; t < b.twists.size(); ++t) {
        const auto& tw = b.twists[t];
        size_t r = twist_rows[t][i];
        mpq_class val = tw.d_left[r] + valuation(tw.m.at(r, i), tw.p) + tw.d_right[i];
        f.logs[tw.p] += tw.weight * val;
    }
    return slope_value(std::move(f));
}

}  // namespace

max_slope_result max_slope_split(const bundle& b) {
    std::vector<std::vector<size_t>> twist_rows;
    if (!split_detect(b, &twist_rows))
        throw bundle_error("max_slope_split: bundle is not split");
    max_slope_result out;
    out.kind = certificate::exact;
    for (size_t i = 0; i < b.dim; ++i) {
        slope_value s = coordinate_line_slope(b, i, twist_rows);
        if (i == 0 || s.compare(out.value).ord == ordering::greater) {
            out.value = s;
            out.witness_coords = {i};
        }
    }
    return out;
}

max_slope_search_result max_slope_search(const bundle& b, const subspace_family& family) {
    max_slope_search_result out;
    out.best.kind = certificate::lower_bound;
    bool have = false;

    auto consider = [&](const std::vector<vec_q>& basis, std::vector<size_t> label) {
        slope_value s;
        try {
            s = subspace_slope(b, basis);
        } catch (const indeterminate_valuation&) {
            ++out.skipped;
            return;
        }
        ++out.evaluated;
        if (!have || s.compare(out.best.value).ord == ordering::greater) {
            out.best.value = s;
            out.best.witness_coords = std::move(label);
            have = true;
        }
    };

    auto coordinate_basis = [&](const std::vector<size_t>& coords) {
        std::vector<vec_q> basis;
        for (size_t c : coords) {
            vec_q v(b.dim, 0);
            v[c] = 1;
            basis.push_back(std::move(v));
        }
        return basis;
    };

    unsigned long budget = family.subset_count_cap;
    for (unsigned k = 1; k <= family.subset_size_cap && k <= b.dim; ++k) {
        mpz_class count;
        mpz_bin_uiui(count.get_mpz_t(), b.dim, k);
        if (count > budget)
            break;
        for (const auto& set : subsets_of_size(b.dim, k)) {
            if (budget == 0)
                break;
            --budget;
            consider(coordinate_basis(set), set);
        }
    }
    if (family.include_full) {
        std::vector<size_t> all(b.dim);
        for (size_t i = 0; i < b.dim; ++i)
            all[i] = i;
        consider(coordinate_basis(all), all);
    }
    if (family.line_radius > 0) {
        long r = family.line_radius;
        double total = std::pow(2.0 * r + 1, static_cast<double>(b.dim));
        if (total > static_cast<double>(family.subset_count_cap))
            throw cap_exceeded("max_slope_search: line box exceeds the cap");
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
                break;
            if (!sign_normalized(x) || !primitive(x))
                continue;
            vec_q v(b.dim);
            for (size_t j = 0; j < b.dim; ++j)
                v[j] = x[j];
            consider({v}, {});
        }
    }
    for (const auto& basis : family.extra_bases)
        consider(basis, {});
    if (!have)
        throw bundle_error("max_slope_search: empty subspace family");
    return out;
}

exact_pos_real lambda_lower_bound_split(const bundle& b) {
    return max_slope_split(b).value.negated().exp();
}

exact_pos_real lambda_lower_bound_tensor(const std::vector<bundle>& split_factors) {
    slope_value total;
    for (const auto& f : split_factors)
        total = total.add(max_slope_split(f).value);
    return total.negated().exp();
}

namespace {

/* Box-constrained exact sphere enumeration (twist-free bundles only):
 * Q(x) = sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2 from the LDL^T
 * decomposition of the Gram matrix. */
struct sphere_search {
    size_t n;
    long radius;
    std::vector<mpq_class> d;
    mat_q u;
    unsigned long node_cap, nodes = 0;

    std::optional<mpq_class> best;
    std::vector<long> witness;
    unsigned long leaves = 0;

    void offer(const std::vector<long>& x, const mpq_class& q) {
        ++leaves;
        if (!sign_normalized(x) || !primitive(x))
            return;
        if (!best || q < *best) {
            best = q;
            witness = x;
        } else if (q == *best && lex_less(x, witness)) {
            witness = x;
        }
    }

    void descend(std::vector<long>& x, size_t level, const mpq_class& partial) {
        if (++nodes > node_cap)
            throw cap_exceeded("min_search: node cap exceeded");
        size_t i = level - 1;
        // offset s = sum_{j>i} u_ij x_j
        mpq_class s = 0;
        for (size_t j = i + 1; j < n; ++j)
            if (x[j] != 0)
                s += u.at(i, j) * x[j];
        for (long xi = -radius; xi <= radius; ++xi) {
            mpq_class term = mpq_class(xi) + s;
            mpq_class q = partial + d[i] * term * term;
            if (best && q > *best)
                continue;
            x[i] = xi;
            if (i == 0) {
                bool zero = std::all_of(x.begin(), x.end(), [](long v) { return v == 0; });
                if (!zero)
                    offer(x, q);
            } else {
                descend(x, i, q);
            }
        }
        x[i] = 0;
    }
};

std::optional<min_search_result> min_search_sphere(const bundle& b, unsigned radius,
                                                   unsigned long node_cap) {
    size_t n = b.dim;
    sphere_search s;
    s.n = n;
    s.radius = radius;
    s.node_cap = node_cap;
    s.u = mat_q(n, n);
    s.d.assign(n, 0);
    // LDL^T of the Gram matrix
    for (size_t i = 0; i < n; ++i) {
        mpq_class di = b.arch_gram.at(i, i);
        for (size_t k = 0; k < i; ++k)
            di -= s.d[k] * s.u.at(k, i) * s.u.at(k, i);
        s.d[i] = di;
        for (size_t j = i + 1; j < n; ++j) {
            mpq_class uij = b.arch_gram.at(i, j);
            for (size_t k = 0; k < i; ++k)
                uij -= s.d[k] * s.u.at(k, i) * s.u.at(k, j);
            s.u.at(i, j) = uij / di;
        }
    }
    // seed with the best coordinate vector so pruning bites immediately
    for (size_t i = 0; i < n; ++i) {
        std::vector<long> e(n, 0);
        e[i] = 1;
        mpq_class q = b.arch_gram.at(i, i);
        if (!s.best || q < *s.best || (q == *s.best && lex_less(e, s.witness))) {
            s.best = q;
            s.witness = e;
        }
    }
    std::vector<long> x(n, 0);
    s.descend(x, n, 0);

    min_search_result out;
    out.value = exact_pos_real::from_rational(*s.best).pow(mpq_class(1, 2));
    out.witness.assign(s.witness.begin(), s.witness.end());
    out.candidates = s.leaves;
    return out;
}

std::optional<min_search_result> min_search_box(const bundle& b, unsigned radius,
                                                unsigned long node_cap) {
    size_t n = b.dim;
    double total = std::pow(2.0 * radius + 1, static_cast<double>(n));
    if (total > static_cast<double>(node_cap))
        throw cap_exceeded("min_search: box of " + std::to_string(total) +
                           " candidates exceeds the cap");
    std::optional<exact_pos_real> best;
    std::vector<long> witness;
    bool certified = true;
    unsigned long candidates = 0;

    std::vector<long> x(n, -static_cast<long>(radius));
    x[n - 1] -= 1;  // odometer start
    while (true) {
        size_t i = n - 1;
        while (true) {
            if (x[i] < static_cast<long>(radius)) {
                ++x[i];
                break;
            }
            x[i] = -static_cast<long>(radius);
            if (i == 0)
                return [&]() -> std::optional<min_search_result> {
                    if (!best)
                        return std::nullopt;
                    min_search_result out;
                    out.value = *best;
                    out.witness.assign(witness.begin(), witness.end());
                    out.candidates = candidates;
                    out.certified = certified;
                    return out;
                }();
            --i;
        }
        if (!sign_normalized(x) || !primitive(x))
            continue;
        ++candidates;
        vec_q xq(n);
        for (size_t j = 0; j < n; ++j)
            xq[j] = x[j];
        height_result h = height(b, xq);
        if (!h.exact) {
            // an uncertified height below the running minimum taints the result
            if (!best || h.upper.compare(*best).ord == ordering::less)
                certified = false;
            continue;
        }
        if (!best) {
            best = h.value();
            witness = x;
            continue;
        }
        auto cmp = h.value().compare(*best);
        if (cmp.ord == ordering::less) {
            best = h.value();
            witness = x;
        } else if (cmp.ord == ordering::equal && lex_less(x, witness)) {
            witness = x;
        }
    }
}

}  // namespace

std::optional<min_search_result> min_search(const bundle& b, unsigned radius, unsigned denom_bound,
                                            unsigned long node_cap) {
    (void)denom_bound;  // heights are scale-invariant; see header
    if (radius == 0)
        return std::nullopt;
    if (b.twists.empty())
        return min_search_sphere(b, radius, node_cap);
    return min_search_box(b, radius, node_cap);
}

}  // namespace adelic
