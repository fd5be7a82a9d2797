#ifndef ADELIC_CONFIG_HPP
#define ADELIC_CONFIG_HPP

#include <cstdint>
#include <string>

#include "adelic/exact_real.hpp"

namespace adelic {

/* Runtime knobs shared by the CLI and the verification suite.  Every
 * field can be overridden through ADELIC_* environment variables. */
struct config {
    unsigned precision_bits = 128;
    unsigned max_precision_bits = 4096;
    unsigned search_radius = 3;
    unsigned denom_bound = 4;
    unsigned long dimension_cap = 5000;
    unsigned long integer_cap_bits = 1000000;
    unsigned long composition_cap = 5000000;
    unsigned long tuple_cap = 1000000;
    unsigned long search_cap = 20000000;
    unsigned subset_size_cap = 2;
    std::string output_format = "md";  // md | csv | json
    std::uint64_t seed = 0;

    precision_policy policy() const {
        return {precision_bits, max_precision_bits, integer_cap_bits};
    }
};

/* Apply ADELIC_PRECISION_BITS, ADELIC_SEARCH_RADIUS, ... from the
 * environment on top of the given defaults. */
config apply_env_overrides(config base);

void validate(const config& c);

}  // namespace adelic

#endif
