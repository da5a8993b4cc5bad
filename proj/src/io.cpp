#include "hkdv/io.hpp"

namespace hkdv {

nlohmann::json exppoly_json(const ExpPoly& p) {
    nlohmann::json out = nlohmann::json::array();
    if (p.is_exponential_sum()) {
        for (const auto& [key, c] : p.terms())
            out.push_back({key.first, rat_str(c)});
    } else {
        for (const auto& [key, c] : p.terms())
            out.push_back({key.first, key.second, rat_str(c)});
    }
    return out;
}

std::string p_mono_str(const Mono& m) { return m.str("p_"); }
std::string t_mono_str(const Mono& m) { return m.str("t_"); }

nlohmann::json tpoly_json(const TPoly& poly) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [m, c] : poly.terms())
        rows.push_back({{"monomial", t_mono_str(m)}, {"coeff", rat_str(c)}});
    return rows;
}

}  // namespace hkdv
