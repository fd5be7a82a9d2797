#include "adelic/report.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <sstream>

namespace adelic {

using ordered_json = nlohmann::ordered_json;

std::string verdict_str(verdict v) {
    switch (v) {
        case verdict::holds: return "Holds";
        case verdict::holds_numerically: return "HoldsNumerically";
        case verdict::violated: return "Violated";
        case verdict::undecided: return "Undecided";
        case verdict::consistent_with_paper: return "ConsistentWithPaper";
    }
    return "?";
}

void report::normalize() {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const report_entry& a, const report_entry& b) {
                         if (a.statement != b.statement)
                             return a.statement < b.statement;
                         return a.instance < b.instance;
                     });
}

bool report::any_violated() const {
    return std::any_of(entries.begin(), entries.end(),
                       [](const report_entry& e) { return e.v == verdict::violated; });
}

size_t report::count(verdict v) const {
    return std::count_if(entries.begin(), entries.end(),
                         [v](const report_entry& e) { return e.v == v; });
}

namespace {

ordered_json config_json(const config& c) {
    ordered_json j;
    j["precision_bits"] = c.precision_bits;
    j["max_precision_bits"] = c.max_precision_bits;
    j["search_radius"] = c.search_radius;
    j["denom_bound"] = c.denom_bound;
    j["dimension_cap"] = c.dimension_cap;
    j["integer_cap_bits"] = c.integer_cap_bits;
    j["composition_cap"] = c.composition_cap;
    j["tuple_cap"] = c.tuple_cap;
    j["search_cap"] = c.search_cap;
    j["subset_size_cap"] = c.subset_size_cap;
    j["seed"] = c.seed;
    return j;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += "\"\"";
        else
            out += c;
    }
    out += "\"";
    return out;
}

}  // namespace

std::string report::to_json() const {
    ordered_json j;
    j["config"] = config_json(cfg);
    ordered_json arr = ordered_json::array();
    for (const auto& e : entries) {
        ordered_json ej;
        ej["statement"] = e.statement;
        ej["instance"] = e.instance;
        ej["relation"] = e.relation;
        ej["lhs"] = e.lhs;
        ej["rhs"] = e.rhs;
        ej["verdict"] = verdict_str(e.v);
        if (e.precision_bits)
            ej["precision_bits"] = e.precision_bits;
        if (!e.witness.empty())
            ej["witness"] = e.witness;
        arr.push_back(std::move(ej));
    }
    j["entries"] = std::move(arr);
    ordered_json totals;
    for (verdict v : {verdict::holds, verdict::holds_numerically, verdict::violated,
                      verdict::undecided, verdict::consistent_with_paper})
        totals[verdict_str(v)] = count(v);
    j["totals"] = std::move(totals);
    return j.dump(2);
}

std::string report::to_markdown() const {
    std::ostringstream os;
    os << "config: " << config_json(cfg).dump() << "\n\n";
    os << "| statement | instance | relation | lhs | rhs | verdict | bits | witness |\n";
    os << "|---|---|---|---|---|---|---|---|\n";
    auto cell = [](const std::string& s) {
        std::string out;
        for (char c : s)
            out += (c == '|') ? '!' : c;
        return out;
    };
    for (const auto& e : entries) {
        os << "| " << cell(e.statement) << " | " << cell(e.instance) << " | " << e.relation
           << " | " << cell(e.lhs) << " | " << cell(e.rhs) << " | " << verdict_str(e.v) << " | "
           << (e.precision_bits ? std::to_string(e.precision_bits) : "") << " | "
           << cell(e.witness) << " |\n";
    }
    os << "\ntotals: Holds=" << count(verdict::holds)
       << " HoldsNumerically=" << count(verdict::holds_numerically)
       << " Violated=" << count(verdict::violated) << " Undecided=" << count(verdict::undecided)
       << " ConsistentWithPaper=" << count(verdict::consistent_with_paper) << "\n";
    return os.str();
}

std::string report::to_csv() const {
    std::ostringstream os;
    os << "# config " << config_json(cfg).dump() << "\n";
    os << "statement,instance,relation,lhs,rhs,verdict,precision_bits,witness\n";
    for (const auto& e : entries) {
        os << csv_escape(e.statement) << ',' << csv_escape(e.instance) << ',' << e.relation << ','
           << csv_escape(e.lhs) << ',' << csv_escape(e.rhs) << ',' << verdict_str(e.v) << ','
           << (e.precision_bits ? std::to_string(e.precision_bits) : "") << ','
           << csv_escape(e.witness) << "\n";
    }
    return os.str();
}

namespace {

/* Parse an operand: log-form JSON or integer/rational literal. */
std::optional<log_form> parse_operand(const std::string& s) {
    if (s.empty())
        return std::nullopt;
    try {
        if (s.front() == '{')
            return log_form_from_json(s);
        mpq_class q = parse_rat(s);
        if (q <= 0)
            return std::nullopt;
        return exact_pos_real::from_rational(q).form();
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace

bool recheck_entry(const report_entry& e, const precision_policy& policy) {
    if (e.v == verdict::undecided || e.v == verdict::consistent_with_paper)
        return true;
    if (e.relation == "divides") {
        try {
            mpz_class a(e.lhs), b(e.rhs);
            return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
        } catch (const std::exception&) {
            return true;  // not parseable as integers
        }
    }
    auto lhs = parse_operand(e.lhs);
    auto rhs = parse_operand(e.rhs);
    if (!lhs || !rhs)
        return true;  // free-form operands are not machine-checkable
    precision_policy p = policy;
    if (e.v == verdict::holds_numerically && e.precision_bits)
        p.start_bits = e.precision_bits;
    compare_outcome c = exact_pos_real(*lhs).compare(exact_pos_real(*rhs), p);
    if (e.relation == "eq")
        return c.ord == ordering::equal;
    if (e.relation == "le")
        return c.ord == ordering::less || c.ord == ordering::equal;
    if (e.relation == "lt")
        return c.ord == ordering::less;
    if (e.relation == "ge")
        return c.ord == ordering::greater || c.ord == ordering::equal;
    if (e.relation == "gt")
        return c.ord == ordering::greater;
    return true;
}

size_t report::recheck() const {
    precision_policy p = cfg.policy();
    size_t failures = 0;
    for (const auto& e : entries)
        if (!recheck_entry(e, p))
            ++failures;
    return failures;
}

}  // namespace adelic
