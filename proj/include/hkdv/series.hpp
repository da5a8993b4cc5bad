#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hkdv/exp_poly.hpp"
#include "hkdv/monomial.hpp"
#include "hkdv/rational.hpp"

namespace hkdv {

// Sparse multivariate series in p_1, p_2, ... truncated at a weight bound
// (weight of p_i is i), with coefficients in an exact domain C (Rat or
// ExpPoly).  Arithmetic propagates the tightest valid bound: add/mul of
// bounds W1, W2 yields min(W1, W2), d/dp_b yields W - b.  Coefficients of
// weight beyond the bound are never stored and never reported.
template <class C>
class Series {
public:
    explicit Series(long bound) : bound_(bound) {}

    static Series zero(long bound) { return Series(bound); }
    static Series one(long bound) {
        Series s(bound);
        s.add_term(Mono{}, C(1));
        return s;
    }
    static Series monomial(const Mono& m, const C& c, long bound) {
        Series s(bound);
        s.add_term(m, c);
        return s;
    }

    long bound() const { return bound_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Mono, C>& terms() const { return terms_; }

    void add_term(const Mono& m, const C& c) {
        if (m.weight() > bound_ || is_zero_coeff(c)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (is_zero_coeff(it->second)) terms_.erase(it);
        }
    }

    // Coefficient of m; zero when absent.  Asking beyond the bound is a
    // truncation bug in the caller, so it throws rather than returning 0.
    C coeff(const Mono& m) const {
        if (m.weight() > bound_)
            throw std::out_of_range("Series::coeff: monomial beyond weight bound");
        auto it = terms_.find(m);
        return it == terms_.end() ? C(0) : it->second;
    }

    C constant_term() const { return coeff(Mono{}); }

    Series truncated(long new_bound) const {
        Series r(new_bound < bound_ ? new_bound : bound_);
        for (const auto& [m, c] : terms_) r.add_term(m, c);
        return r;
    }

    // Re-tag with an arbitrary bound.  Only valid when the caller knows the
    // series is exact beyond the recorded bound (e.g. homogeneous polynomials).
    Series rebounded(long new_bound) const {
        Series r(new_bound);
        for (const auto& [m, c] : terms_) r.add_term(m, c);
        return r;
    }

    Series& operator+=(const Series& o) {
        if (o.bound_ < bound_) *this = truncated(o.bound_);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Series& operator-=(const Series& o) {
        if (o.bound_ < bound_) *this = truncated(o.bound_);
        for (const auto& [m, c] : o.terms_) add_term(m, negate(c));
        return *this;
    }
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator-(const Series& a) {
        Series r(a.bound_);
        for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, negate(c));
        return r;
    }

    friend Series operator*(const Series& a, const Series& b) {
        Series r(a.bound_ < b.bound_ ? a.bound_ : b.bound_);
        for (const auto& [ma, ca] : a.terms_) {
            long wa = ma.weight();
            if (wa > r.bound_) continue;
            for (const auto& [mb, cb] : b.terms_) {
                if (wa + mb.weight() > r.bound_) continue;
                r.add_term(ma.times(mb), ca * cb);
            }
        }
        return r;
    }
    Series& operator*=(const Series& o) { return *this = *this * o; }

    Series scaled(const C& s) const {
        Series r(bound_);
        for (const auto& [m, c] : terms_) r.add_term(m, c * s);
        return r;
    }
    Series mul_monomial(const Mono& mm, const Rat& s) const {
        Series r(bound_);
        for (const auto& [m, c] : terms_) r.add_term(m.times(mm), c * s);
        return r;
    }

    // Formal partial derivative d/dp_b; the result bound is W - b.
    Series partial(int b) const {
        if (b < 1) throw std::invalid_argument("Series::partial: variable index must be >= 1");
        Series r(bound_ - b);
        for (const auto& [m, c] : terms_) {
            int k = m.exponent(b);
            if (k == 0) continue;
            r.add_term(m.div_var(b), c * Rat(k));
        }
        return r;
    }

    bool operator==(const Series& o) const { return bound_ == o.bound_ && terms_ == o.terms_; }
    bool operator!=(const Series& o) const { return !(*this == o); }

    // exp(a) for a with zero constant term, exact up to the weight bound.
    // Computed stratum by stratum from w*tau_w = sum_{u=1..w} u a_u tau_{w-u},
    // the weight-graded form of tau' = a' tau.
    Series exp() const {
        if (bound_ < 0) return Series(bound_);
        if (!is_zero_coeff(constant_term()))
            throw std::domain_error("Series::exp: nonzero constant term");
        auto A = strata();
        std::vector<std::map<Mono, C>> T(static_cast<size_t>(bound_ < 0 ? 0 : bound_) + 1);
        Series r(bound_);
        if (bound_ < 0) return r;
        T[0].emplace(Mono{}, C(1));
        for (long w = 1; w <= bound_; ++w) {
            std::map<Mono, C> acc;
            for (long u = 1; u <= w; ++u) {
                if (A[static_cast<size_t>(u)].empty()) continue;
                convolve_into(acc, A[static_cast<size_t>(u)], T[static_cast<size_t>(w - u)], Rat(u));
            }
            for (auto& [m, c] : acc) {
                c /= Rat(w);
                if (!is_zero_coeff(c)) T[static_cast<size_t>(w)].emplace(m, c);
            }
        }
        for (const auto& S : T)
            for (const auto& [m, c] : S) r.add_term(m, c);
        return r;
    }

    // log(a) for a with constant term 1; inverse of exp at every truncation.
    Series log() const {
        if (bound_ < 0 || !(constant_term() == C(1)))
            throw std::domain_error("Series::log: constant term must be 1");
        auto A = strata();
        std::vector<std::map<Mono, C>> G(static_cast<size_t>(bound_) + 1);
        Series r(bound_);
        for (long w = 1; w <= bound_; ++w) {
            std::map<Mono, C> acc;
            for (const auto& [m, c] : A[static_cast<size_t>(w)]) acc.emplace(m, c * Rat(w));
            for (long u = 1; u < w; ++u) {
                if (G[static_cast<size_t>(u)].empty()) continue;
                convolve_into(acc, G[static_cast<size_t>(u)], A[static_cast<size_t>(w - u)], Rat(-1));
            }
            std::erase_if(acc, [](const auto& kv) { return is_zero_coeff(kv.second); });
            G[static_cast<size_t>(w)] = std::move(acc);
            for (const auto& [m, c] : G[static_cast<size_t>(w)]) r.add_term(m, c / Rat(w));
        }
        return r;
    }

private:
    static bool is_zero_coeff(const C& c) { return hkdv::is_zero(c); }
    static C negate(const C& c) { return C(0) - c; }

    std::vector<std::map<Mono, C>> strata() const {
        std::vector<std::map<Mono, C>> out(static_cast<size_t>(bound_ < 0 ? 0 : bound_) + 1);
        for (const auto& [m, c] : terms_) out[static_cast<size_t>(m.weight())].emplace(m, c);
        return out;
    }

    static void convolve_into(std::map<Mono, C>& acc, const std::map<Mono, C>& a,
                              const std::map<Mono, C>& b, const Rat& scale) {
        for (const auto& [ma, ca] : a)
            for (const auto& [mb, cb] : b) {
                C v = ca * cb * scale;
                if (is_zero_coeff(v)) continue;
                Mono m = ma.times(mb);
                auto it = acc.find(m);
                if (it == acc.end())
                    acc.emplace(std::move(m), std::move(v));
                else
                    it->second += v;
            }
    }

    long bound_;
    std::map<Mono, C> terms_;
};

using RSeries = Series<Rat>;
using ESeries = Series<ExpPoly>;

}  // namespace hkdv
