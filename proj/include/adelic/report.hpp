#ifndef ADELIC_REPORT_HPP
#define ADELIC_REPORT_HPP

#include <string>
#include <vector>

#include "adelic/config.hpp"
#include "adelic/exact_real.hpp"

namespace adelic {

enum class verdict { holds, holds_numerically, violated, undecided, consistent_with_paper };

std::string verdict_str(verdict v);

/* One checked relation.  lhs/rhs are serialized operands: a log-form JSON
 * object ({"e": ..., "logs": ...}) or a plain integer/rational string, so
 * that the relation can be re-verified from the entry alone. */
struct report_entry {
    std::string statement;  // stable id, e.g. "thmppcm"
    std::string instance;   // e.g. "n=2 l=4"
    std::string relation;   // eq | le | lt | ge | gt | divides
    std::string lhs, rhs;
    verdict v = verdict::holds;
    unsigned precision_bits = 0;  // recorded for numeric verdicts
    std::string witness;          // reproduction data / notes
};

struct report {
    config cfg;
    std::vector<report_entry> entries;

    void add(report_entry e) { entries.push_back(std::move(e)); }
    /* Order-normalize: sort by (statement, instance). */
    void normalize();
    bool any_violated() const;
    size_t count(verdict v) const;

    std::string to_json() const;
    std::string to_markdown() const;
    std::string to_csv() const;

    /* Re-verify every exact entry from its serialized operands; numeric
     * entries are re-checked at their recorded precision.  Returns the
     * number of entries that failed re-verification. */
    size_t recheck() const;
};

/* Re-evaluate a single entry's relation from the serialized operands.
 * Returns false when the operands are parseable and the relation fails. */
bool recheck_entry(const report_entry& e, const precision_policy& policy);

}  // namespace adelic

#endif
