#include "adelic/config.hpp"

#include <cstdlib>
#include <stdexcept>

namespace adelic {

namespace {

template <typename T>
void read_env(const char* name, T& field) {
    const char* raw = std::getenv(name);
    if (!raw)
        return;
    field = static_cast<T>(std::stoull(raw));
}

}  // namespace

config apply_env_overrides(config c) {
    read_env("ADELIC_PRECISION_BITS", c.precision_bits);
    read_env("ADELIC_MAX_PRECISION_BITS", c.max_precision_bits);
    read_env("ADELIC_SEARCH_RADIUS", c.search_radius);
    read_env("ADELIC_DENOM_BOUND", c.denom_bound);
    read_env("ADELIC_DIMENSION_CAP", c.dimension_cap);
    read_env("ADELIC_INTEGER_CAP_BITS", c.integer_cap_bits);
    read_env("ADELIC_COMPOSITION_CAP", c.composition_cap);
    read_env("ADELIC_TUPLE_CAP", c.tuple_cap);
    read_env("ADELIC_SEARCH_CAP", c.search_cap);
    read_env("ADELIC_SUBSET_SIZE_CAP", c.subset_size_cap);
    read_env("ADELIC_SEED", c.seed);
    if (const char* fmt = std::getenv("ADELIC_FORMAT"))
        c.output_format = fmt;
    return c;
}

void validate(const config& c) {
    if (c.precision_bits < 32 || c.precision_bits > c.max_precision_bits)
        throw std::invalid_argument("config: need 32 <= precision_bits <= max_precision_bits");
    if (c.output_format != "md" && c.output_format != "csv" && c.output_format != "json")
        throw std::invalid_argument("config: format must be md, csv or json");
    if (c.dimension_cap == 0 || c.integer_cap_bits == 0)
        throw std::invalid_argument("config: caps must be positive");
}

}  // namespace adelic
