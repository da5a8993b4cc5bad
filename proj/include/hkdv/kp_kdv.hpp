#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hkdv/hurwitz.hpp"
#include "hkdv/t_poly.hpp"

namespace hkdv {

// LHS - RHS of the KP equation
//   d2H/dp2^2 = d2H/dp3 dp1 - 1/2 (d2H/dp1^2)^2 - 1/12 d4H/dp1^4,
// exact on every monomial of weight <= bound(H) - 4.
template <class C>
Series<C> kp_residual_of(const Series<C>& H) {
    auto d11 = H.partial(1).partial(1);
    return H.partial(2).partial(2) - H.partial(3).partial(1) + (d11 * d11).scaled(rat(1, 2)) +
           d11.partial(1).partial(1).scaled(rat(1, 12));
}

ESeries kp_residual(long W);  // on h_series(W)

// H_st = H - H_{0;1} - H_{0;2}
ESeries h_stable_of(const ESeries& h, const ESeries& unstable);
ESeries h_stable(long W);

// Residual of the modified KP equation satisfied by the stable part:
//   d2/dp2^2 - d2/dp3dp1 + 1/2 (d2/dp1^2)^2 + 1/2 beta^2 d2/dp1^2 + 1/12 d4/dp1^4.
ESeries modified_kp_residual_of(const ESeries& h_st);
ESeries modified_kp_residual(long W);

// ---------------------------------------------------------------------------
// Laurent series in beta^{1/3} over t-monomials, with explicit per-monomial
// determinacy windows.  Exponents are stored in thirds.  For every t-monomial
// within the caps a row records:
//   covered — whether the truncated inputs reach this monomial at all,
//   lo      — structural lower bound: no contribution lands below it,
//   hi      — largest fully determined exponent; vals holds only e <= hi.
// Anything outside a window is "undetermined", never silently zero.
// ---------------------------------------------------------------------------

struct LaurentCaps {
    long max_degree;  // max number of t factors
    long max_weight;  // max sum of t indices
    long max_index;   // largest t index available (the substitution's D)
};

struct LaurentRow {
    std::map<long, Rat> vals;  // thirds exponent -> coefficient, e <= hi only
    long lo = 0;
    long hi = -1;
    bool covered = false;
};

class TrackedLaurent {
public:
    explicit TrackedLaurent(const LaurentCaps& caps);

    const LaurentCaps& caps() const { return caps_; }
    const std::map<Mono, LaurentRow>& rows() const { return rows_; }
    std::map<Mono, LaurentRow>& rows_mut() { return rows_; }
    LaurentRow& row(const Mono& t) { return rows_.at(t); }
    const LaurentRow& row(const Mono& t) const { return rows_.at(t); }
    bool has_row(const Mono& t) const { return rows_.count(t) != 0; }

    static std::vector<Mono> enumerate_monomials(const LaurentCaps& caps);

    TrackedLaurent dt(int d) const;
    TrackedLaurent times(const TrackedLaurent& o) const;
    TrackedLaurent plus(const TrackedLaurent& o) const;
    TrackedLaurent minus(const TrackedLaurent& o) const;
    TrackedLaurent scaled(const Rat& s) const;
    TrackedLaurent beta_shifted(long thirds) const;

private:
    LaurentCaps caps_;
    std::map<Mono, LaurentRow> rows_;
};

struct LaurentEntry {
    Mono t;
    long thirds = 0;
    Rat value;
};

// First nonzero determined entry, scanning rows in canonical order; also
// reports how many determined slots were inspected.
struct LaurentScan {
    std::optional<LaurentEntry> offender;
    long slots = 0;
};
LaurentScan first_nonzero(const TrackedLaurent& s);

// Pointwise comparison over the intersection of determined windows.
struct LaurentDiff {
    std::optional<LaurentEntry> offender;  // value = lhs - rhs at the slot
    long slots = 0;
};
LaurentDiff first_difference(const TrackedLaurent& a, const TrackedLaurent& b);

// ---------------------------------------------------------------------------
// The change of variables (beta exponents in thirds: -3b - (2d+1) at t_d):
//   p_b = sum_{d=b-1}^{D} (-1)^{d-b+1} / ((d-b+1)! b^{b-1}) beta^{-b-(2d+1)/3} t_d.
// ---------------------------------------------------------------------------

struct SubstitutionPlan {
    long D;             // highest t index kept in every p_b expansion
    long taylor_order;  // beta-Taylor order applied to the coefficients
    LaurentCaps caps;   // reporting window
};

// Coefficient of t_d in the expansion of p_b.
Rat substitution_coeff(long b, long d);

// Apply the change of variables to X, which must be H_st differentiated
// deriv_count times by p-variables of total weight deriv_weight (0, 0 for
// H_st itself); the offsets feed the structural window bookkeeping.
TrackedLaurent substitute(const ESeries& X, const SubstitutionPlan& plan, int deriv_count = 0,
                          long deriv_weight = 0);

// G_st: the change of variables applied to the stable part.
TrackedLaurent g_stable(const ESeries& h_st, const SubstitutionPlan& plan);

// All determined entries with negative beta exponent (the Laurent
// positivity statement expects none), plus the number of negative
// determined slots inspected.
struct NegativePart {
    std::vector<LaurentEntry> entries;
    long slots = 0;
};
NegativePart negative_beta_part(const TrackedLaurent& g);

// The beta^0 slice (which must equal F), restricted to rows whose
// window determines it; the covered list reports those rows.
struct BetaZeroSlice {
    TPoly poly;
    std::vector<Mono> covered;
};
BetaZeroSlice beta_zero_part(const TrackedLaurent& g);

// Checks the three displayed derivative identities
//   d/dp_1 = beta^{4/3} d/dt_0
//   d/dp_2 = 2 beta^{9/3} d/dt_1 + 2 beta^{7/3} d/dt_0
//   d/dp_3 = 9 beta^{14/3} d/dt_2 + 9 beta^{12/3} d/dt_1 + 9/2 beta^{10/3} d/dt_0
// by substituting-then-differentiating vs differentiating-then-substituting.
struct TransformCheck {
    bool pass = false;
    long slots = 0;
    std::optional<LaurentEntry> offender;
};
std::vector<TransformCheck> derivative_transform_check(const ESeries& h_st,
                                                       const SubstitutionPlan& plan);

// The combination obtained from the modified KP equation by the change of
// variables and division by beta^{16/3}:
//   (d2G/dt1dt0 - 1/2 (d2G/dt0^2)^2 - 1/12 d4G/dt0^4)
//     + beta^{2/3} (9 d2G/dt0dt2 - 4 d2G/dt1^2) = 0.
// The beta^{14/3} terms of the substituted equation cancel exactly
// (4 - 9/2 + 1/2 = 0), and the second bracket's final term is the t_1
// second derivative.
TrackedLaurent pre_kdv_residual(const TrackedLaurent& g);

// ---------------------------------------------------------------------------
// KdV on the intersection generating function.
// ---------------------------------------------------------------------------

// Residual of dU/dt_1 = U dU/dt_0 + 1/12 d3U/dt_0^3 with U = d2F/dt_0^2,
// restricted to monomials fully determined by F data covering degree <= D
// and index sum <= S (monomials whose index is invalid count as determined
// zeros).  Reported monomials satisfy degree <= D and weight <= S.
struct KdvReport {
    TPoly residual;
    std::vector<Mono> determined;
};
KdvReport kdv_residual(const TPoly& F, long D, long S);

}  // namespace hkdv
