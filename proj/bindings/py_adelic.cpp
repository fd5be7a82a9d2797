/* Python bindings for the main operations.  Bundles and exact values
 * cross the boundary as their JSON wire forms; big integers as decimal
 * strings. */

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "adelic/checks.hpp"
#include "adelic/multinomial.hpp"

namespace py = pybind11;
using namespace adelic;

namespace {

vec_q to_vec(const std::vector<std::string>& coords) {
    vec_q x;
    for (const auto& c : coords)
        x.push_back(parse_rat(c));
    return x;
}

std::vector<std::string> from_vec(const vec_q& x) {
    std::vector<std::string> out;
    for (const auto& c : x)
        out.push_back(rat_str(c));
    return out;
}

}  // namespace

PYBIND11_MODULE(_adelic, m) {
    m.doc() = "exact heights, slopes and multinomial lcm computations";

    m.def(
        "pnl",
        [](unsigned n, unsigned l, const std::string& method) {
            if (method == "brute")
                return p_bruteforce(n, l).value.get_str();
            if (method == "closed")
                return p_closed_form(n, l).get_str();
            mpz_class brute = p_bruteforce(n, l).value;
            mpz_class closed = p_closed_form(n, l);
            if (brute != closed)
                throw std::runtime_error("p(n,l) routes disagree (bug)");
            return brute.get_str();
        },
        py::arg("n"), py::arg("l"), py::arg("method") = "both",
        "lcm of the multinomial coefficients of degree l in n variables");

    m.def(
        "lcm_upto", [](unsigned long n) { return lcm_upto(n).get_str(); }, py::arg("n"));

    m.def(
        "chain_qrs",
        [](unsigned n, unsigned l) {
            chain_values c = chain_qrs(n, l);
            return py::make_tuple(c.q.get_str(), c.r.get_str(), c.s.get_str());
        },
        py::arg("n"), py::arg("l"));

    m.def(
        "compare",
        [](const std::string& lhs, const std::string& rhs) {
            auto a = exact_pos_real::from_json(lhs);
            auto b = exact_pos_real::from_json(rhs);
            switch (a.compare(b).ord) {
                case ordering::less: return std::string("less");
                case ordering::equal: return std::string("equal");
                case ordering::greater: return std::string("greater");
                default: return std::string("undecided");
            }
        },
        py::arg("lhs"), py::arg("rhs"),
        "compare two serialized exact values ({'e': ..., 'logs': ...} JSON)");

    m.def(
        "to_float",
        [](const std::string& value, unsigned bits) {
            enclosure e = exact_pos_real::from_json(value).to_float(bits);
            return py::make_tuple(e.lo_double(), e.hi_double());
        },
        py::arg("value"), py::arg("bits") = 64);

    m.def("standard", [](unsigned n) { return bundle_to_json(standard_bundle(n)); },
          py::arg("n"));
    m.def("root_lattice_an", [](unsigned n) { return bundle_to_json(root_lattice_an(n)); },
          py::arg("n"));
    m.def(
        "counterexample_eq",
        [](const std::string& q) { return bundle_to_json(counterexample_eq(parse_rat(q))); },
        py::arg("q") = "1/4");

    m.def(
        "height",
        [](const std::string& bundle_json, const std::vector<std::string>& coords) {
            height_result h = height(bundle_from_json(bundle_json), to_vec(coords));
            py::dict out;
            out["exact"] = h.exact;
            out["upper"] = h.upper.to_json();
            if (h.lower)
                out["lower"] = h.lower->to_json();
            return out;
        },
        py::arg("bundle"), py::arg("coords"));

    m.def(
        "slope",
        [](const std::string& bundle_json) {
            return slope(bundle_from_json(bundle_json)).to_json();
        },
        py::arg("bundle"));

    m.def(
        "dual",
        [](const std::string& bundle_json) {
            return bundle_to_json(dual(bundle_from_json(bundle_json)));
        },
        py::arg("bundle"));

    m.def(
        "tensor",
        [](const std::string& a, const std::string& b) {
            return bundle_to_json(tensor(bundle_from_json(a), bundle_from_json(b)));
        },
        py::arg("a"), py::arg("b"));

    m.def(
        "sym_power",
        [](const std::string& b, unsigned l) {
            return bundle_to_json(sym_power(bundle_from_json(b), l));
        },
        py::arg("bundle"), py::arg("l"));

    m.def(
        "ext_power",
        [](const std::string& b, unsigned l) {
            return bundle_to_json(ext_power(bundle_from_json(b), l));
        },
        py::arg("bundle"), py::arg("l"));

    m.def(
        "subspace_slope",
        [](const std::string& bundle_json, const std::vector<std::vector<std::string>>& basis) {
            std::vector<vec_q> vectors;
            for (const auto& coords : basis)
                vectors.push_back(to_vec(coords));
            return subspace_slope(bundle_from_json(bundle_json), vectors).to_json();
        },
        py::arg("bundle"), py::arg("basis"),
        "exact slope of the span of the given rational vectors");

    m.def(
        "max_slope",
        [](const std::string& bundle_json, unsigned subset_size_cap) {
            bundle b = bundle_from_json(bundle_json);
            py::dict out;
            if (split_detect(b)) {
                max_slope_result ms = max_slope_split(b);
                out["value"] = ms.value.to_json();
                out["certificate"] = "Exact";
                out["line"] = ms.witness_coords.empty() ? 0 : ms.witness_coords[0];
            } else {
                subspace_family family;
                family.subset_size_cap = subset_size_cap;
                auto search = max_slope_search(b, family);
                out["value"] = search.best.value.to_json();
                out["certificate"] = "LowerBound";
                out["evaluated"] = search.evaluated;
            }
            return out;
        },
        py::arg("bundle"), py::arg("subset_size_cap") = 2);

    m.def(
        "mh_construct",
        [](unsigned n, const std::string& eps) {
            auto [b, cert] = mh_construct(n, parse_rat(eps));
            py::dict out;
            out["bundle"] = bundle_to_json(b);
            out["p"] = cert.p.get_str();
            std::vector<std::string> exps;
            for (const auto& c : cert.exponents)
                exps.push_back(rat_str(c));
            out["exponents"] = exps;
            out["q_invariant"] = cert.q_invariant.to_json();
            return out;
        },
        py::arg("n"), py::arg("eps") = "1/100",
        "explicit bundle with unit minimum and large positive slope");

    m.def(
        "min_search",
        [](const std::string& bundle_json, unsigned radius) -> py::object {
            auto found = min_search(bundle_from_json(bundle_json), radius);
            if (!found)
                return py::none();
            py::dict out;
            out["value"] = found->value.to_json();
            out["witness"] = from_vec(found->witness);
            out["candidates"] = found->candidates;
            out["certified"] = found->certified;
            return out;
        },
        py::arg("bundle"), py::arg("radius") = 3);

    m.def(
        "verify",
        [](const std::vector<std::string>& only, std::uint64_t seed, const std::string& format) {
            config cfg = apply_env_overrides(config{});
            cfg.seed = seed;
            report rep = run_all(cfg, only);
            if (format == "csv")
                return rep.to_csv();
            if (format == "md")
                return rep.to_markdown();
            return rep.to_json();
        },
        py::arg("only") = std::vector<std::string>{}, py::arg("seed") = 0,
        py::arg("format") = "json");

    m.def("check_groups", [] { return check_group_ids(); });
}
