#include "hkdv/exp_poly.hpp"

namespace hkdv {

std::string ExpPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [key, c] : terms_) {
        auto [freq, pow] = key;
        std::string t = rat_str(c);
        if (pow != 0) t += "*b^" + std::to_string(pow);
        if (freq != 0) t += "*e^(" + std::to_string(freq) + "b)";
        if (!s.empty()) s += " + ";
        s += t;
    }
    return s;
}

}  // namespace hkdv
