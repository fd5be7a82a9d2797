#ifndef ADELIC_CHECKS_HPP
#define ADELIC_CHECKS_HPP

#include <random>

#include "adelic/bundle.hpp"
#include "adelic/gallery.hpp"
#include "adelic/report.hpp"

namespace adelic {

/* Seeded generators for the property suites.  exact_heights keeps all
 * right shifts zero so that every height is a single ultrametric group
 * and therefore exact. */
bundle random_bundle(std::mt19937_64& rng, unsigned max_dim, bool with_twists,
                     bool exact_heights = true, bool split_only = false);
vec_q random_vector(std::mt19937_64& rng, unsigned dim);

/* One check per statement family; each appends entries to the report. */
void check_appendix_identity(const config& cfg, report& rep, unsigned n_max = 6,
                             unsigned l_max = 30);
void check_williams(const config& cfg, report& rep, unsigned l_max = 1000);
void check_chain(const config& cfg, report& rep, unsigned n_max = 5, unsigned l_max = 15);
void check_lemma_divisibility(const config& cfg, report& rep, unsigned n_max = 5,
                              unsigned l_max = 15);
void check_bounds(const config& cfg, report& rep, unsigned n_max = 6, unsigned l_max = 30);
void check_psi(const config& cfg, report& rep, unsigned long x_max = 10000);
void check_slopes(const config& cfg, report& rep, unsigned n_max = 50);
void check_slope_identities(const config& cfg, report& rep, unsigned trials = 100);
void check_minima(const config& cfg, report& rep, unsigned n_max = 10);
void check_counterexample(const config& cfg, report& rep, const mpq_class& q = mpq_class(1, 4));
void check_mh(const config& cfg, report& rep, unsigned n_min = 2, unsigned n_max = 6);
void check_sym(const config& cfg, report& rep, unsigned n_max = 12, unsigned l_max = 12);
void check_ext(const config& cfg, report& rep, unsigned n_max = 8);
void check_zhang(const config& cfg, report& rep, unsigned dim_max = 12,
                 unsigned chain_n_max = 1000);
void check_tensor(const config& cfg, report& rep, unsigned n_max = 6, unsigned m_max = 6);
void check_convexity(const config& cfg, report& rep, unsigned trials = 500);
void check_product_formula(const config& cfg, report& rep, unsigned trials = 500);

/* Check-group ids accepted by run_all's filter. */
std::vector<std::string> check_group_ids();

/* Execute every group (or the named ones), order-normalize, return. */
report run_all(const config& cfg, const std::vector<std::string>& only = {});

}  // namespace adelic

#endif
