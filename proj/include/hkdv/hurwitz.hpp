#pragma once

#include <vector>

#include "hkdv/partition.hpp"
#include "hkdv/schur.hpp"
#include "hkdv/series.hpp"

namespace hkdv {

// (g; b_1,...,b_n) with B = sum b_i and m = 2g - 2 + n + B simple branch points.
struct HurwitzIndex {
    long genus = 0;
    std::vector<long> profile;

    HurwitzIndex(long g, std::vector<long> prof);

    long n() const { return static_cast<long>(profile.size()); }
    long B() const;
    long m() const { return 2 * genus - 2 + n() + B(); }
};

// Cut-and-join operator
//   A = 1/2 sum_{i,j>=1} [ (i+j) p_i p_j d/dp_{i+j} + i j p_{i+j} d^2/dp_i dp_j ],
// applied term by term; preserves the p-weight, so the result carries the
// input bound.
template <class C>
Series<C> cut_and_join(const Series<C>& phi) {
    Series<C> out(phi.bound());
    for (const auto& [m, c] : phi.terms()) {
        // cut: (i+j) p_i p_j d/dp_k over i+j = k
        for (auto [k, ek] : m.e) {
            Mono base = m.div_var(k);
            for (int i = 1; 2 * i <= k; ++i) {
                int j = k - i;
                // ordered pairs (i,j),(j,i) both contribute 1/2 * k * e_k
                Rat f = Rat(k) * Rat(ek) * (i == j ? rat(1, 2) : Rat(1));
                out.add_term(base.times_var(i).times_var(j), c * f);
            }
        }
        // join: i j p_{i+j} d^2/dp_i dp_j
        for (size_t a = 0; a < m.e.size(); ++a) {
            auto [i, ei] = m.e[a];
            // i == j: 1/2 i^2 e_i (e_i - 1)
            if (ei >= 2) {
                Rat f = rat(static_cast<long>(i) * i, 2) * Rat(ei) * Rat(ei - 1);
                out.add_term(m.div_var(i).div_var(i).times_var(2 * i), c * f);
            }
            // i < j: the two ordered pairs cancel the 1/2
            for (size_t b = a + 1; b < m.e.size(); ++b) {
                auto [j, ej] = m.e[b];
                Rat f = Rat(static_cast<long>(i) * j) * Rat(ei) * Rat(ej);
                out.add_term(m.div_var(i).div_var(j).times_var(i + j), c * f);
            }
        }
    }
    return out;
}

// e^H = sum_lambda s_lambda(1,0,...) s_lambda e^{f(lambda) beta}, |lambda| <= W.
ESeries tau_hurwitz(long W);

// H = log e^H; coefficients are exact exponential sums in beta.
ESeries h_series(long W);

// H_{0;1} + H_{0;2}: the genus-zero one- and two-part closed forms,
//   H_{0;1} = sum_b (b^{b-2}/b!) p_b beta^{b-1},
//   H_{0;2} = 1/2 sum_{b1,b2} b1^{b1} b2^{b2} / ((b1+b2) b1! b2!) p_{b1} p_{b2} beta^{b1+b2},
// carried as beta-power terms of the coefficient domain.
ESeries h_unstable(long W);

// Extract h_{g;b_1,...,b_n} from an H series: the coefficient of
// prod p_b^{m_b} at Taylor order beta^m is sum_g h * beta^m/(m! prod m_b!).
// Requires B <= bound of h; returns 0 when m < 0.
Rat hurwitz_number(const ESeries& h, const HurwitzIndex& idx);

// Brute-force oracle: enumerates tuples (tau_1,...,tau_m) of transpositions
// of {1..B} whose product has the profile's cycle type and whose group acts
// transitively, weighting cycle labelings; returns the count over B!.
// Enumeration budget: B <= 6, m <= 8.
Rat hurwitz_oracle(const HurwitzIndex& idx);

// One engine instance per weight bound: builds e^H, H and the unstable part
// once and answers extraction queries.
class HurwitzEngine {
public:
    explicit HurwitzEngine(long W);

    long weight_bound() const { return W_; }
    const ESeries& tau() const { return tau_; }
    const ESeries& h() const { return h_; }
    const ESeries& unstable() const { return unstable_; }
    ESeries stable() const { return h_ - unstable_; }

    Rat number(const HurwitzIndex& idx) const { return hurwitz_number(h_, idx); }

private:
    long W_;
    ESeries tau_;
    ESeries h_;
    ESeries unstable_;
};

}  // namespace hkdv
