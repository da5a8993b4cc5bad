#pragma once

#include <map>
#include <optional>

#include "hkdv/monomial.hpp"
#include "hkdv/rational.hpp"

namespace hkdv {

// Polynomial in t_0, t_1, ... with exact rational coefficients.  Unlike the
// p-series there is no single truncation grade; callers track the covered
// (max degree, max sum-of-indices) window themselves.
class TPoly {
public:
    TPoly() = default;

    bool is_zero() const { return terms_.empty(); }
    const std::map<Mono, Rat>& terms() const { return terms_; }

    void add_term(const Mono& m, const Rat& c) {
        if (hkdv::is_zero(c)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (hkdv::is_zero(it->second)) terms_.erase(it);
        }
    }

    Rat coeff(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }
    void set_coeff(const Mono& m, const Rat& c) {
        terms_.erase(m);
        add_term(m, c);
    }

    TPoly& operator+=(const TPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    TPoly& operator-=(const TPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
    friend TPoly operator*(const TPoly& a, const TPoly& b) {
        TPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), ca * cb);
        return r;
    }

    TPoly scaled(const Rat& s) const {
        TPoly r;
        for (const auto& [m, c] : terms_) r.add_term(m, c * s);
        return r;
    }

    // d/dt_d
    TPoly dt(int d) const {
        TPoly r;
        for (const auto& [m, c] : terms_) {
            int k = m.exponent(d);
            if (k == 0) continue;
            r.add_term(m.div_var(d), c * Rat(k));
        }
        return r;
    }

    bool operator==(const TPoly& o) const { return terms_ == o.terms_; }

private:
    std::map<Mono, Rat> terms_;
};

// Genus of the tau-index monomial t_{d_1}...t_{d_n}: the g >= 0 with
// sum d_i = 3g - 3 + n, when it exists.
std::optional<long> tau_monomial_genus(const Mono& t);

// True when the monomial indexes a (potentially nonzero) stable intersection
// number: integral g >= 0 and not (g, n) = (0, 1), (0, 2).  Coefficients of
// invalid monomials vanish identically in F.
bool tau_monomial_valid(const Mono& t);

}  // namespace hkdv
