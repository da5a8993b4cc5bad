#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "hkdv/schur.hpp"
#include "hkdv/series.hpp"

namespace hkdv {

// Rows phi_j = z^j + lower-order terms for j = 1..N; entry (j, i) holds the
// coefficient of z^i with i <= j, a_{j,j} = 1, and terms below L dropped.
template <class C>
struct WedgeBasis {
    long N = 0;
    long L = 0;
    std::vector<std::map<long, C>> rows;  // rows[j-1] : i -> a_{j,i}

    const std::map<long, C>& row(long j) const { return rows.at(static_cast<size_t>(j - 1)); }
};

// phi_j(z) = sum_{i<=j} 1/(j-i)! e^{(i(i-1)-j(j-1)) beta/2} z^i; the
// frequencies are integers since consecutive products are even.
WedgeBasis<ExpPoly> phi_basis(long N, long L);

// The beta = 0 specialization phi_j = z^j e^{z^{-1}}: a_{j,i} = 1/(j-i)!.
WedgeBasis<Rat> phi_basis_beta_zero(long N, long L);

// phi_j = z^j.
WedgeBasis<Rat> vacuum_basis(long N);

// Unit diagonal plus sparse random rational entries below it; deterministic
// in the seed across platforms.
WedgeBasis<Rat> random_wedge_basis(std::uint64_t seed, long N, long L);

namespace detail {

template <class C>
C coeff_inverse(const C& c);

template <>
inline Rat coeff_inverse<Rat>(const Rat& c) {
    if (is_zero(c)) throw std::domain_error("coeff_inverse: zero");
    return Rat(1) / c;
}

// Invertible ExpPolys are the monomials c beta^0 e^{k beta}.
template <>
inline ExpPoly coeff_inverse<ExpPoly>(const ExpPoly& c) {
    if (c.terms().size() != 1 || c.terms().begin()->first.second != 0)
        throw std::domain_error("coeff_inverse: ExpPoly not invertible");
    const auto& [key, v] = *c.terms().begin();
    return ExpPoly::exp_term(-key.first, Rat(1) / v);
}

}  // namespace detail

// tau = det || sum_k a_{i,k} s_{j-k} ||_{i,j=1..N} truncated at weight W,
// normalized to constant term 1.
template <class C>
Series<C> tau_from_basis(const WedgeBasis<C>& basis, long W) {
    size_t N = static_cast<size_t>(basis.N);
    std::vector<std::vector<Series<C>>> M(N, std::vector<Series<C>>(N, Series<C>(W)));
    for (size_t i = 1; i <= N; ++i)
        for (const auto& [k, a] : basis.row(static_cast<long>(i))) {
            for (size_t j = 1; j <= N; ++j) {
                long deg = static_cast<long>(j) - k;
                if (deg < 0 || deg > W) continue;
                for (const auto& [m, rc] : one_part_schur(static_cast<int>(deg)).terms())
                    M[i - 1][j - 1].add_term(m, a * rc);
            }
        }
    Series<C> tau = det_series(M, W);
    C c0 = tau.constant_term();
    if (is_zero(c0)) throw std::domain_error("tau_from_basis: vanishing constant term");
    if (!(c0 == C(1))) tau = tau.scaled(detail::coeff_inverse<C>(c0));
    return tau;
}

// Recomputes at cutoff N+1 and fails loudly unless every weight <= W
// coefficient agrees.
template <class C, class MakeBasis>
Series<C> tau_stabilized(MakeBasis&& make, long N, long W) {
    Series<C> at_n = tau_from_basis<C>(make(N), W);
    Series<C> at_n1 = tau_from_basis<C>(make(N + 1), W);
    if (!(at_n == at_n1))
        throw std::runtime_error("tau_from_basis: determinant not stabilized between N and N+1");
    return at_n;
}

// Dense determinant over the coefficient domain (column DP, as det_series).
template <class C>
C det_coeffs(const std::vector<std::vector<C>>& M) {
    size_t n = M.size();
    std::map<std::uint32_t, C> dp;
    dp.emplace(0u, C(1));
    for (size_t col = 0; col < n; ++col) {
        std::map<std::uint32_t, C> next;
        for (const auto& [mask, sub] : dp) {
            for (size_t r = 0; r < n; ++r) {
                if (mask & (1u << r)) continue;
                if (is_zero(M[r][col])) continue;
                C term = sub * M[r][col];
                if (__builtin_popcount(mask >> (r + 1)) & 1) term = C(0) - term;
                auto it = next.find(mask | (1u << r));
                if (it == next.end())
                    next.emplace(mask | (1u << r), std::move(term));
                else
                    it->second += term;
            }
        }
        dp = std::move(next);
    }
    auto it = dp.find((1u << n) - 1);
    return it == dp.end() ? C(0) : it->second;
}

// Schur-sum form of the wedge determinant: sum_lambda det || a_{i, j - lambda_j} || s_lambda
// over |lambda| <= W (requires W <= N so the finite determinant is exact).
template <class C>
Series<C> tau_via_schur_sum(const WedgeBasis<C>& basis, long W) {
    if (W > basis.N) throw std::invalid_argument("tau_via_schur_sum: need N >= W");
    size_t N = static_cast<size_t>(basis.N);
    Series<C> tau(W);
    for (const auto& lambda : partitions_up_to(W)) {
        std::vector<std::vector<C>> M(N, std::vector<C>(N, C(0)));
        for (size_t i = 1; i <= N; ++i) {
            const auto& row = basis.row(static_cast<long>(i));
            for (size_t j = 1; j <= N; ++j) {
                long lj = j <= static_cast<size_t>(lambda.length())
                              ? lambda.parts()[j - 1]
                              : 0;
                auto it = row.find(static_cast<long>(j) - lj);
                if (it != row.end()) M[i - 1][j - 1] = it->second;
            }
        }
        C c = det_coeffs(M);
        if (is_zero(c)) continue;
        RSeries sp = schur_polynomial(lambda, W);
        for (const auto& [m, rc] : sp.terms()) tau.add_term(m, c * rc);
    }
    return tau;
}

// Random Grassmannian point -> tau -> log -> KP residual; the theorem says
// the determined part of the residual vanishes.
struct KpMembershipReport {
    std::uint64_t seed = 0;
    bool pass = false;
    long residual_weight = 0;  // residual checked on monomials up to this weight
    std::optional<Mono> offender;
};
KpMembershipReport random_basis_kp_check(std::uint64_t seed, long N, long W);

}  // namespace hkdv
