#include "hkdv/kp_kdv.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace hkdv {

ESeries kp_residual(long W) { return kp_residual_of(h_series(W)); }

ESeries h_stable_of(const ESeries& h, const ESeries& unstable) { return h - unstable; }

ESeries h_stable(long W) { return h_stable_of(h_series(W), h_unstable(W)); }

ESeries modified_kp_residual_of(const ESeries& h_st) {
    auto d11 = h_st.partial(1).partial(1);
    return h_st.partial(2).partial(2) - h_st.partial(3).partial(1) +
           (d11 * d11).scaled(rat(1, 2)) + d11.scaled(ExpPoly::beta_power(2, rat(1, 2))) +
           d11.partial(1).partial(1).scaled(rat(1, 12));
}

ESeries modified_kp_residual(long W) { return modified_kp_residual_of(h_stable(W)); }

// --- TrackedLaurent -------------------------------------------------------

namespace {

void enumerate_rec(const LaurentCaps& caps, int var, Mono cur, std::vector<Mono>& out) {
    out.push_back(cur);
    if (cur.degree() >= caps.max_degree) return;
    for (int d = var; d <= caps.max_index; ++d) {
        if (cur.weight() + d > caps.max_weight) break;
        enumerate_rec(caps, d, cur.times_var(d), out);
    }
}

long gmin(long parts) { return parts >= 3 ? 0 : 1; }

}  // namespace

std::vector<Mono> TrackedLaurent::enumerate_monomials(const LaurentCaps& caps) {
    std::vector<Mono> out;
    enumerate_rec(caps, 0, Mono{}, out);
    return out;
}

TrackedLaurent::TrackedLaurent(const LaurentCaps& caps) : caps_(caps) {
    for (const auto& t : enumerate_monomials(caps)) rows_.emplace(t, LaurentRow{});
}

TrackedLaurent TrackedLaurent::dt(int d) const {
    TrackedLaurent out(caps_);
    for (auto& [t, row] : out.rows_) {
        Mono src = t.times_var(d);
        auto it = rows_.find(src);
        if (it == rows_.end()) continue;  // derivative reads beyond the caps
        const LaurentRow& s = it->second;
        row.covered = s.covered;
        row.lo = s.lo;
        row.hi = s.hi;
        Rat mult(t.exponent(d) + 1);
        for (const auto& [e, v] : s.vals) row.vals.emplace(e, v * mult);
    }
    return out;
}

TrackedLaurent TrackedLaurent::times(const TrackedLaurent& o) const {
    TrackedLaurent out(caps_);
    for (auto& [t, row] : out.rows_) {
        auto divs = t.divisors();
        bool covered = true;
        long hi = std::numeric_limits<long>::max();
        long lo = std::numeric_limits<long>::max();
        for (const auto& d1 : divs) {
            const LaurentRow& r1 = rows_.at(d1);
            const LaurentRow& r2 = o.rows_.at(d1.quotient_of(t));
            if (!r1.covered || !r2.covered) {
                covered = false;
                break;
            }
            hi = std::min({hi, r1.hi + r2.lo, r2.hi + r1.lo});
            lo = std::min(lo, r1.lo + r2.lo);
        }
        if (!covered) continue;
        row.covered = true;
        row.hi = hi;
        row.lo = lo;
        for (const auto& d1 : divs) {
            const LaurentRow& r1 = rows_.at(d1);
            const LaurentRow& r2 = o.rows_.at(d1.quotient_of(t));
            for (const auto& [e1, v1] : r1.vals) {
                if (e1 + r2.lo > hi) continue;
                for (const auto& [e2, v2] : r2.vals) {
                    long e = e1 + e2;
                    if (e > hi) continue;
                    auto [it, fresh] = row.vals.emplace(e, v1 * v2);
                    if (!fresh) it->second += v1 * v2;
                }
            }
        }
        std::erase_if(row.vals, [](const auto& kv) { return is_zero(kv.second); });
    }
    return out;
}

TrackedLaurent TrackedLaurent::plus(const TrackedLaurent& o) const {
    TrackedLaurent out(caps_);
    for (auto& [t, row] : out.rows_) {
        const LaurentRow& r1 = rows_.at(t);
        const LaurentRow& r2 = o.rows_.at(t);
        if (!r1.covered || !r2.covered) continue;
        row.covered = true;
        row.hi = std::min(r1.hi, r2.hi);
        row.lo = std::min(r1.lo, r2.lo);
        for (const auto& [e, v] : r1.vals)
            if (e <= row.hi) row.vals.emplace(e, v);
        for (const auto& [e, v] : r2.vals) {
            if (e > row.hi) continue;
            auto [it, fresh] = row.vals.emplace(e, v);
            if (!fresh) {
                it->second += v;
                if (is_zero(it->second)) row.vals.erase(it);
            }
        }
    }
    return out;
}

TrackedLaurent TrackedLaurent::minus(const TrackedLaurent& o) const {
    return plus(o.scaled(Rat(-1)));
}

TrackedLaurent TrackedLaurent::scaled(const Rat& s) const {
    TrackedLaurent out(caps_);
    for (auto& [t, row] : out.rows_) {
        const LaurentRow& r = rows_.at(t);
        row.covered = r.covered;
        row.hi = r.hi;
        row.lo = r.lo;
        if (is_zero(s)) continue;
        for (const auto& [e, v] : r.vals) row.vals.emplace(e, v * s);
    }
    return out;
}

TrackedLaurent TrackedLaurent::beta_shifted(long thirds) const {
    TrackedLaurent out(caps_);
    for (auto& [t, row] : out.rows_) {
        const LaurentRow& r = rows_.at(t);
        row.covered = r.covered;
        row.hi = r.hi + thirds;
        row.lo = r.lo + thirds;
        for (const auto& [e, v] : r.vals) row.vals.emplace(e + thirds, v);
    }
    return out;
}

LaurentScan first_nonzero(const TrackedLaurent& s) {
    LaurentScan scan;
    for (const auto& [t, row] : s.rows()) {
        if (!row.covered) continue;
        if (row.hi >= row.lo) scan.slots += row.hi - row.lo + 1;
        for (const auto& [e, v] : row.vals) {
            if (is_zero(v)) continue;
            if (!scan.offender) scan.offender = LaurentEntry{t, e, v};
        }
    }
    return scan;
}

LaurentDiff first_difference(const TrackedLaurent& a, const TrackedLaurent& b) {
    LaurentDiff diff;
    for (const auto& [t, ra] : a.rows()) {
        if (!b.has_row(t)) continue;
        const LaurentRow& rb = b.row(t);
        if (!ra.covered || !rb.covered) continue;
        long hi = std::min(ra.hi, rb.hi);
        long lo = std::min(ra.lo, rb.lo);
        if (hi >= lo) diff.slots += hi - lo + 1;
        auto ia = ra.vals.begin();
        auto ib = rb.vals.begin();
        while (!diff.offender && (ia != ra.vals.end() || ib != rb.vals.end())) {
            long ea = ia != ra.vals.end() ? ia->first : std::numeric_limits<long>::max();
            long eb = ib != rb.vals.end() ? ib->first : std::numeric_limits<long>::max();
            long e = std::min(ea, eb);
            if (e > hi) break;
            Rat va = ea == e ? (ia++)->second : Rat(0);
            Rat vb = eb == e ? (ib++)->second : Rat(0);
            if (va != vb) diff.offender = LaurentEntry{t, e, va - vb};
        }
        if (diff.offender) break;
    }
    return diff;
}

// --- substitution ----------------------------------------------------------

Rat substitution_coeff(long b, long d) {
    if (b < 1 || d < b - 1) throw std::invalid_argument("substitution_coeff: need d >= b - 1");
    Rat r = rat(Int(1), factorial(d - b + 1) * int_pow(b, b - 1));
    return (d - b + 1) % 2 == 0 ? r : -r;
}

namespace {

// Expansion of prod_i (p_{b_i} substituted) as a t-polynomial; the beta
// exponent is a single offset per output monomial, handled by the caller.
void expand_factors(const std::vector<int>& factors, size_t i, const SubstitutionPlan& plan,
                    Mono cur, const Rat& coef, std::map<Mono, Rat>& out) {
    if (i == factors.size()) {
        auto [it, fresh] = out.emplace(cur, coef);
        if (!fresh) it->second += coef;
        return;
    }
    int b = factors[i];
    for (long d = b - 1; d <= plan.D; ++d) {
        if (cur.weight() + d > plan.caps.max_weight) break;
        expand_factors(factors, i + 1, plan, cur.times_var(static_cast<int>(d)),
                       coef * substitution_coeff(b, d), out);
    }
}

}  // namespace

TrackedLaurent substitute(const ESeries& X, const SubstitutionPlan& plan, int deriv_count,
                          long deriv_weight) {
    if (plan.caps.max_index != plan.D)
        throw std::invalid_argument("substitute: caps.max_index must equal the plan's D");
    TrackedLaurent out(plan.caps);

    for (auto& [t, row] : out.rows_mut()) {
        long n = t.degree();
        long sd = t.weight();
        if (sd + n > X.bound()) continue;  // a contributing p-monomial may be truncated
        row.covered = true;
        row.hi = 3 * plan.taylor_order - 5 * sd - 4 * n;
        long k = n + deriv_count;
        row.lo = k == 0 ? 0 : 6 * gmin(k) - 6 + 2 * n + 3 * deriv_count + 3 * deriv_weight - 2 * sd;
    }

    for (const auto& [P, c] : X.terms()) {
        long n = P.degree();
        long B = P.weight();
        if (n > plan.caps.max_degree || B - n > plan.caps.max_weight) continue;
        std::vector<int> factors;
        for (auto [b, e] : P.e)
            for (int r = 0; r < e; ++r) factors.push_back(b);
        std::map<Mono, Rat> expansion;
        expand_factors(factors, 0, plan, Mono{}, Rat(1), expansion);
        if (expansion.empty()) continue;
        std::vector<Rat> tc = c.taylor(plan.taylor_order);
        for (const auto& [t, r] : expansion) {
            auto it_row = out.rows_mut().find(t);
            if (it_row == out.rows_mut().end()) continue;
            LaurentRow& row = it_row->second;
            if (!row.covered) continue;
            long base = -3 * B - 2 * t.weight() - n;
            for (long m = 0; m <= plan.taylor_order; ++m) {
                if (is_zero(tc[static_cast<size_t>(m)])) continue;
                long e = 3 * m + base;
                if (e > row.hi) break;
                if (e < row.lo)
                    throw std::logic_error("substitute: contribution below the structural bound");
                Rat v = tc[static_cast<size_t>(m)] * r;
                auto [it, fresh] = row.vals.emplace(e, v);
                if (!fresh) it->second += v;
            }
        }
    }
    for (auto& [t, row] : out.rows_mut())
        std::erase_if(row.vals, [](const auto& kv) { return is_zero(kv.second); });
    return out;
}

TrackedLaurent g_stable(const ESeries& h_st, const SubstitutionPlan& plan) {
    TrackedLaurent G = substitute(h_st, plan);
    // Contract: the plan and the input weight must determine every requested
    // monomial at least through beta^0.
    for (const auto& [t, row] : G.rows()) {
        if (!row.covered)
            throw std::invalid_argument(
                "g_stable: input weight bound too small to cover " + t.str("t_") +
                " (need p-weight >= " + std::to_string(t.weight() + t.degree()) + ")");
        if (row.hi < 0)
            throw std::invalid_argument("g_stable: taylor_order too small to determine " +
                                        t.str("t_") + " at beta^0");
    }
    return G;
}

NegativePart negative_beta_part(const TrackedLaurent& g) {
    NegativePart out;
    for (const auto& [t, row] : g.rows()) {
        if (!row.covered) continue;
        long top = std::min(row.hi, -1L);
        if (top >= row.lo) out.slots += top - row.lo + 1;
        for (const auto& [e, v] : row.vals)
            if (e < 0 && !is_zero(v)) out.entries.push_back(LaurentEntry{t, e, v});
    }
    return out;
}

BetaZeroSlice beta_zero_part(const TrackedLaurent& g) {
    BetaZeroSlice out;
    for (const auto& [t, row] : g.rows()) {
        if (!row.covered || row.hi < 0) continue;
        out.covered.push_back(t);
        auto it = row.vals.find(0);
        if (it != row.vals.end()) out.poly.add_term(t, it->second);
    }
    return out;
}

std::vector<TransformCheck> derivative_transform_check(const ESeries& h_st,
                                                       const SubstitutionPlan& plan) {
    TrackedLaurent G = substitute(h_st, plan);
    auto d0 = G.dt(0);
    auto d1 = G.dt(1);
    auto d2 = G.dt(2);

    std::vector<TrackedLaurent> rhs;
    rhs.push_back(d0.beta_shifted(4));
    rhs.push_back(d1.beta_shifted(9).scaled(Rat(2)).plus(d0.beta_shifted(7).scaled(Rat(2))));
    rhs.push_back(d2.beta_shifted(14).scaled(Rat(9))
                      .plus(d1.beta_shifted(12).scaled(Rat(9)))
                      .plus(d0.beta_shifted(10).scaled(rat(9, 2))));

    std::vector<TransformCheck> out;
    for (int b = 1; b <= 3; ++b) {
        TrackedLaurent lhs = substitute(h_st.partial(b), plan, 1, b);
        auto diff = first_difference(lhs, rhs[static_cast<size_t>(b - 1)]);
        TransformCheck chk;
        chk.pass = !diff.offender.has_value();
        chk.slots = diff.slots;
        chk.offender = diff.offender;
        out.push_back(std::move(chk));
    }
    return out;
}

TrackedLaurent pre_kdv_residual(const TrackedLaurent& g) {
    auto d0 = g.dt(0);
    auto d00 = d0.dt(0);
    auto d10 = d0.dt(1);
    auto d20 = d0.dt(2);
    auto d11 = g.dt(1).dt(1);
    auto d0000 = d00.dt(0).dt(0);

    TrackedLaurent first = d10.minus(d00.times(d00).scaled(rat(1, 2)))
                               .minus(d0000.scaled(rat(1, 12)));
    TrackedLaurent second = d20.scaled(Rat(9)).minus(d11.scaled(Rat(4)));
    return first.plus(second.beta_shifted(2));
}

// --- KdV -------------------------------------------------------------------

namespace {

// F-coefficient needed by the residual: determined when the index is invalid
// (identically zero) or inside the computed window.
bool f_determined(const Mono& t, long D, long S) {
    if (!tau_monomial_valid(t)) return true;
    return t.degree() <= D && t.weight() <= S;
}

}  // namespace

KdvReport kdv_residual(const TPoly& F, long D, long S) {
    TPoly U = F.dt(0).dt(0);
    TPoly residual = U.dt(1) - U * U.dt(0) - U.dt(0).dt(0).dt(0).scaled(rat(1, 12));

    KdvReport report;
    LaurentCaps caps{D, S, S};
    for (const auto& t : TrackedLaurent::enumerate_monomials(caps)) {
        Mono t00 = t.times_var(0, 2);
        if (!f_determined(t00.times_var(1), D, S)) continue;
        if (!f_determined(t.times_var(0, 5), D, S)) continue;
        bool ok = true;
        for (const auto& t1 : t.divisors()) {
            if (!f_determined(t1.times_var(0, 2), D, S) ||
                !f_determined(t1.quotient_of(t).times_var(0, 3), D, S)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        report.determined.push_back(t);
    }
    for (const auto& t : report.determined) {
        Rat v = residual.coeff(t);
        if (!is_zero(v)) report.residual.add_term(t, v);
    }
    return report;
}

}  // namespace hkdv
