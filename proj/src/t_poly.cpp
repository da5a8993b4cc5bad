#include "hkdv/t_poly.hpp"

namespace hkdv {

std::optional<long> tau_monomial_genus(const Mono& t) {
    long n = t.degree();
    long sum = t.weight();
    long three_g = sum - n + 3;
    if (three_g < 0 || three_g % 3 != 0) return std::nullopt;
    return three_g / 3;
}

bool tau_monomial_valid(const Mono& t) {
    long n = t.degree();
    if (n < 1) return false;
    auto g = tau_monomial_genus(t);
    if (!g) return false;
    return !(*g == 0 && n < 3);
}

}  // namespace hkdv
