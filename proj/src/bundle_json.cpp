#include <nlohmann/json.hpp>

#include "adelic/bundle.hpp"

namespace adelic {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json vec_to_json(const vec_q& v) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : v)
        arr.push_back(rat_str(c));
    return arr;
}

ordered_json mat_to_json(const mat_q& m) {
    ordered_json rows = ordered_json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (size_t j = 0; j < m.cols(); ++j)
            row.push_back(rat_str(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

vec_q vec_from_json(const ordered_json& arr) {
    vec_q v;
    for (const auto& c : arr)
        v.push_back(c.is_string() ? parse_rat(c.get<std::string>())
                                  : mpq_class(c.get<long>()));
    return v;
}

mat_q mat_from_json(const ordered_json& rows) {
    size_t r = rows.size();
    size_t c = r ? rows[0].size() : 0;
    mat_q m(r, c);
    for (size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw bundle_error("bundle json: ragged matrix");
        for (size_t j = 0; j < c; ++j) {
            const auto& cell = rows[i][j];
            m.at(i, j) = cell.is_string() ? parse_rat(cell.get<std::string>())
                                          : mpq_class(cell.get<long>());
        }
    }
    return m;
}

bool all_zero(const vec_q& v) {
    return std::all_of(v.begin(), v.end(), [](const mpq_class& c) { return c == 0; });
}

}  // namespace

std::string bundle_to_json(const bundle& b) {
    ordered_json j;
    j["dim"] = b.dim;
    if (!b.arch_gram.is_identity())
        j["arch_gram"] = mat_to_json(b.arch_gram);
    if (!b.twists.empty()) {
        ordered_json twists = ordered_json::array();
        for (const auto& t : b.twists) {
            ordered_json tw;
            if (t.p.fits_ulong_p())
                tw["p"] = t.p.get_ui();
            else
                tw["p"] = t.p.get_str();
            tw["weight"] = rat_str(t.weight);
            if (!all_zero(t.d_left))
                tw["d_left"] = vec_to_json(t.d_left);
            tw["m"] = mat_to_json(t.m);
            if (!all_zero(t.d_right))
                tw["d_right"] = vec_to_json(t.d_right);
            twists.push_back(std::move(tw));
        }
        j["twists"] = std::move(twists);
    }
    return j.dump();
}

bundle bundle_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    if (!j.contains("dim"))
        throw bundle_error("bundle json: missing dim");
    unsigned dim = j["dim"].get<unsigned>();
    mat_q gram;
    if (j.contains("arch_gram"))
        gram = mat_from_json(j["arch_gram"]);
    std::vector<local_twist> twists;
    if (j.contains("twists")) {
        for (const auto& tw : j["twists"]) {
            local_twist t;
            if (!tw.contains("p") || !tw.contains("weight"))
                throw bundle_error("bundle json: twist needs p and weight");
            if (tw["p"].is_string())
                t.p = mpz_class(tw["p"].get<std::string>());
            else
                t.p = mpz_class(tw["p"].get<unsigned long>());
            t.weight = parse_rat(tw["weight"].get<std::string>());
            if (tw.contains("d_left"))
                t.d_left = vec_from_json(tw["d_left"]);
            if (tw.contains("d_right"))
                t.d_right = vec_from_json(tw["d_right"]);
            if (tw.contains("m"))
                t.m = mat_from_json(tw["m"]);
            twists.push_back(std::move(t));
        }
    }
    return make_bundle(dim, std::move(gram), std::move(twists));
}

}  // namespace adelic
