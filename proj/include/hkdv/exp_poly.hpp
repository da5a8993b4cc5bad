#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hkdv/rational.hpp"

namespace hkdv {

// Finite sums  sum c_{k,a} * beta^a * e^{k*beta}  with integer frequency k,
// nonnegative integer power a and exact rational c.  Closed under sum,
// product and d/dbeta, with exact Taylor expansion in beta to any order.
//
// The generating series H and e^H live in the pure exponential part (a = 0
// throughout); the beta-power terms carry the closed-form unstable pieces
// H_{0;1}, H_{0;2} and the beta^2 term of the modified KP equation, which
// are polynomials in beta rather than exponential sums.
class ExpPoly {
public:
    // (frequency k, beta power a) -> coefficient
    using Key = std::pair<long, long>;

    ExpPoly() = default;
    // implicit: rationals embed as the frequency-0 constant
    ExpPoly(long c) { add_term(0, 0, Rat(c)); }
    ExpPoly(const Rat& c) { add_term(0, 0, c); }

    static ExpPoly exp_term(long freq, const Rat& c = Rat(1)) {
        ExpPoly p;
        p.add_term(freq, 0, c);
        return p;
    }
    static ExpPoly beta_power(long pow, const Rat& c = Rat(1)) {
        ExpPoly p;
        p.add_term(0, pow, c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    // True when the value is a plain exponential sum (no beta-power factors).
    bool is_exponential_sum() const {
        for (const auto& [k, c] : terms_)
            if (k.second != 0) return false;
        return true;
    }

    void add_term(long freq, long pow, const Rat& c) {
        if (pow < 0) throw std::invalid_argument("ExpPoly: negative beta power");
        if (hkdv::is_zero(c)) return;
        auto it = terms_.find({freq, pow});
        if (it == terms_.end()) {
            terms_.emplace(Key{freq, pow}, c);
        } else {
            it->second += c;
            if (hkdv::is_zero(it->second)) terms_.erase(it);
        }
    }

    ExpPoly& operator+=(const ExpPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
        return *this;
    }
    ExpPoly& operator-=(const ExpPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
        return *this;
    }
    friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
    friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }
    friend ExpPoly operator-(const ExpPoly& a) {
        ExpPoly r;
        for (const auto& [k, c] : a.terms_) r.terms_.emplace(k, -c);
        return r;
    }

    friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
        ExpPoly r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }
    ExpPoly& operator*=(const ExpPoly& o) { return *this = *this * o; }

    ExpPoly& operator*=(const Rat& s) {
        if (hkdv::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }
    friend ExpPoly operator*(ExpPoly a, const Rat& s) { return a *= s; }
    friend ExpPoly operator*(const Rat& s, ExpPoly a) { return a *= s; }
    ExpPoly& operator/=(const Rat& s) {
        if (hkdv::is_zero(s)) throw std::invalid_argument("ExpPoly: division by zero");
        for (auto& [k, c] : terms_) c /= s;
        return *this;
    }
    friend ExpPoly operator/(ExpPoly a, const Rat& s) { return a /= s; }

    bool operator==(const ExpPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const ExpPoly& o) const { return !(*this == o); }

    // d/dbeta (c beta^a e^{k beta}) = c k beta^a e^{k beta} + c a beta^{a-1} e^{k beta}
    ExpPoly d_beta() const {
        ExpPoly r;
        for (const auto& [k, c] : terms_) {
            if (k.first != 0) r.add_term(k.first, k.second, c * Rat(k.first));
            if (k.second > 0) r.add_term(k.first, k.second - 1, c * Rat(k.second));
        }
        return r;
    }

    // Exact coefficient of beta^m in the Taylor expansion at beta = 0:
    // beta^a e^{k beta} contributes k^{m-a}/(m-a)! for m >= a.
    Rat taylor_coeff(long m) const {
        Rat acc(0);
        for (const auto& [k, c] : terms_) {
            long rem = m - k.second;
            if (rem < 0) continue;
            if (k.first == 0) {
                if (rem == 0) acc += c;
            } else {
                acc += c * rat(int_pow(k.first, rem) * sgn_fix(k.first, rem), factorial(rem));
            }
        }
        return acc;
    }

    // Coefficients of beta^0 .. beta^order.
    std::vector<Rat> taylor(long order) const {
        if (order < 0) throw std::invalid_argument("ExpPoly::taylor: negative order");
        std::vector<Rat> out;
        out.reserve(static_cast<size_t>(order) + 1);
        for (long m = 0; m <= order; ++m) out.push_back(taylor_coeff(m));
        return out;
    }

    // Value at beta = 0 (sum of coefficients with a = 0).
    Rat at_beta_zero() const { return taylor_coeff(0); }

    const std::map<Key, Rat>& terms() const { return terms_; }

    // "e^{2b} - 2 + b^3*e^{-b}" style debug form; wire serialization lives in io.
    std::string str() const;

private:
    // int_pow takes |k|; reapply the sign of k^rem here.
    static Int sgn_fix(long k, long rem) {
        if (k >= 0 || rem % 2 == 0) return Int(1);
        return Int(-1);
    }
    // int_pow(base,...) requires base >= 0 given how sign is handled above.
    static Int int_pow(long base, long e) { return hkdv::int_pow(base < 0 ? -base : base, e); }

    std::map<Key, Rat> terms_;
};

inline bool is_zero(const ExpPoly& p) { return p.is_zero(); }

}  // namespace hkdv
