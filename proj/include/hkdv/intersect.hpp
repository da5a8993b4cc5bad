#pragma once

#include <map>
#include <memory>
#include <vector>

#include "hkdv/hurwitz.hpp"
#include "hkdv/t_poly.hpp"

namespace hkdv {

// c_b^d = (-1)^{d-b+1} / ((d-b+1)! (b-1)!) for 1 <= b <= d+1.
Rat c_coeff(long d, long b);

// Coefficients 0..order of  sum_{b=1}^{d+1} c_b^d/(1 - b psi)  -  psi^d.
// The first d+1 entries must vanish.  Requires order >= d+1.
std::vector<Rat> lk_residual(long d, long order);

// Multiset (d_1,...,d_n) of nonnegative integers indexing <tau_{d_1}...tau_{d_n}>.
struct TauIndex {
    std::vector<long> ds;

    explicit TauIndex(std::vector<long> d);

    long n() const { return static_cast<long>(ds.size()); }
    long sum() const;
    // The genus with sum = 3g - 3 + n; throws when g is non-integral,
    // negative, or (g, n) is unstable.
    long genus() const;
    // Hurwitz weight needed to evaluate the inversion sum: sum (d_i + 1).
    long required_weight() const { return sum() + n(); }
};

// Shared, lazily grown store of Hurwitz numbers keyed by (genus, profile).
class HurwitzCache {
public:
    // Ensure the underlying engine covers profiles of weight up to W.
    void ensure_weight(long W);
    long weight() const { return engine_ ? engine_->weight_bound() : -1; }
    const HurwitzEngine& engine() const;

    Rat number(long genus, const std::vector<long>& profile);

private:
    std::unique_ptr<HurwitzEngine> engine_;
    std::map<std::pair<long, std::vector<long>>, Rat> memo_;
};

// The inversion of the Hurwitz-to-Hodge relation:
//   <tau_{d_1}...tau_{d_n}> = sum_{b_i=1..d_i+1} (1/m!)
//       prod_i (-1)^{d_i+1-b_i} / ((d_i+1-b_i)! b_i^{b_i-1})  h_{g;b_1,...,b_n},
// with m = 2g - 2 + B + n depending on B = sum b_i.
Rat tau_intersection(const TauIndex& idx, HurwitzCache& cache);

// F truncated to t-monomials with at most max_degree factors and index sum
// at most max_weight; coefficient of each monomial is <tau...>/|Aut|.
struct FSeries {
    TPoly poly;
    long max_degree = 0;
    long max_weight = 0;
};

FSeries f_series(long max_degree, long max_weight, HurwitzCache& cache);

}  // namespace hkdv
