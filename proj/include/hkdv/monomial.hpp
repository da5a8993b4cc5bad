#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace hkdv {

// Sparse monomial in an indexed variable family: sorted (index, exponent)
// pairs with positive exponents.  Used both for the p-variables (index >= 1,
// weight of p_i is i) and the t-variables (index >= 0, weight of t_d is d).
// Map ordering is lexicographic on the sorted pair list, which gives the
// canonical deterministic iteration order everywhere.
struct Mono {
    std::vector<std::pair<int, int>> e;

    Mono() = default;
    Mono(std::initializer_list<std::pair<int, int>> init) : e(init) { normalize(); }

    static Mono var(int idx, int exp = 1) {
        Mono m;
        if (exp != 0) m.e.emplace_back(idx, exp);
        return m;
    }
    // Monomial x_{v1} x_{v2} ... from an unsorted (possibly repeating) index list.
    static Mono from_indices(const std::vector<int>& idx) {
        Mono m;
        for (int v : idx) m.e.emplace_back(v, 1);
        m.normalize();
        return m;
    }

    bool is_unit() const { return e.empty(); }

    long weight() const {
        long w = 0;
        for (auto [v, k] : e) w += static_cast<long>(v) * k;
        return w;
    }
    long degree() const {
        long d = 0;
        for (auto [v, k] : e) d += k;
        return d;
    }

    int exponent(int idx) const {
        for (auto [v, k] : e)
            if (v == idx) return k;
        return 0;
    }

    Mono times(const Mono& o) const {
        Mono r;
        r.e.reserve(e.size() + o.e.size());
        auto a = e.begin();
        auto b = o.e.begin();
        while (a != e.end() && b != o.e.end()) {
            if (a->first < b->first) {
                r.e.push_back(*a++);
            } else if (b->first < a->first) {
                r.e.push_back(*b++);
            } else {
                r.e.emplace_back(a->first, a->second + b->second);
                ++a;
                ++b;
            }
        }
        r.e.insert(r.e.end(), a, e.end());
        r.e.insert(r.e.end(), b, o.e.end());
        return r;
    }

    Mono times_var(int idx, int exp = 1) const { return times(var(idx, exp)); }

    // *this / x_idx; exponent must be positive.
    Mono div_var(int idx) const {
        Mono r = *this;
        for (auto it = r.e.begin(); it != r.e.end(); ++it) {
            if (it->first == idx) {
                if (--it->second == 0) r.e.erase(it);
                return r;
            }
        }
        throw std::invalid_argument("Mono::div_var: variable absent");
    }

    bool divides(const Mono& o) const {
        for (auto [v, k] : e)
            if (o.exponent(v) < k) return false;
        return true;
    }
    Mono quotient_of(const Mono& o) const {  // o / *this
        Mono r;
        for (auto [v, k] : o.e) {
            int rem = k - exponent(v);
            if (rem < 0) throw std::invalid_argument("Mono::quotient_of: not divisible");
            if (rem > 0) r.e.emplace_back(v, rem);
        }
        return r;
    }

    // All ordered factorizations *this = d * (this/d); yields each divisor d once.
    std::vector<Mono> divisors() const {
        std::vector<Mono> out{Mono{}};
        for (auto [v, k] : e) {
            std::vector<Mono> next;
            next.reserve(out.size() * (k + 1));
            for (const auto& d : out)
                for (int j = 0; j <= k; ++j) next.push_back(d.times(var(v, j)));
            out = std::move(next);
        }
        return out;
    }

    std::string str(const std::string& base) const {
        if (e.empty()) return "1";
        std::string s;
        for (auto [v, k] : e) {
            if (!s.empty()) s += "*";
            s += base + std::to_string(v);
            if (k > 1) s += "^" + std::to_string(k);
        }
        return s;
    }

    auto operator<=>(const Mono&) const = default;

private:
    void normalize() {
        std::sort(e.begin(), e.end());
        std::vector<std::pair<int, int>> out;
        for (auto [v, k] : e) {
            if (!out.empty() && out.back().first == v)
                out.back().second += k;
            else
                out.emplace_back(v, k);
        }
        std::erase_if(out, [](auto& p) { return p.second == 0; });
        e = std::move(out);
    }
};

}  // namespace hkdv
