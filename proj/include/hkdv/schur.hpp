#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hkdv/partition.hpp"
#include "hkdv/series.hpp"

namespace hkdv {

// One-part Schur polynomial s_k(p), the weight-k piece of
// exp(p_1 z + p_2 z^2/2 + p_3 z^3/3 + ...); s_0 = 1, s_k = 0 for k < 0.
const RSeries& one_part_schur(int k);

// Jacobi-Trudi: s_lambda = det || s_{lambda_j - j + i} ||, matrix size equal
// to the number of parts.  Weighted-homogeneous of degree |lambda|.
// Rejects |lambda| > W.
RSeries schur_polynomial(const Partition& lambda, long W);

// s_lambda at p = (1, 0, 0, ...): det || 1/(lambda_j - j + i)! || with
// 1/r! = 0 for r < 0.  Equals dim R_lambda / |lambda|!.
Rat schur_at_exp_point(const Partition& lambda);

// The p-monomial p_{lambda_1} ... p_{lambda_l} attached to a partition.
Mono mono_of_partition(const Partition& lambda);

// Determinant of a square matrix of series by column-by-column Laplace
// expansion, memoized on the set of used rows.
template <class C>
Series<C> det_series(const std::vector<std::vector<Series<C>>>& M, long bound) {
    size_t n = M.size();
    if (n > 20) throw std::invalid_argument("det_series: matrix too large");
    std::map<std::uint32_t, Series<C>> dp;
    dp.emplace(0u, Series<C>::one(bound));
    for (size_t col = 0; col < n; ++col) {
        std::map<std::uint32_t, Series<C>> next;
        for (const auto& [mask, sub] : dp) {
            for (size_t r = 0; r < n; ++r) {
                if (mask & (1u << r)) continue;
                const Series<C>& entry = M[r][col];
                if (entry.is_zero()) continue;
                int flips = __builtin_popcount(mask >> (r + 1));
                Series<C> term = sub * entry;
                if (flips & 1) term = -term;
                auto it = next.find(mask | (1u << r));
                if (it == next.end())
                    next.emplace(mask | (1u << r), std::move(term));
                else
                    it->second += term;
            }
        }
        dp = std::move(next);
    }
    auto it = dp.find(n == 32 ? ~0u : ((1u << n) - 1));
    return it == dp.end() ? Series<C>::zero(bound) : it->second;
}

// Exact determinant of a rational matrix (Gaussian elimination over Q).
Rat det_rat(std::vector<std::vector<Rat>> M);

// Solve A x = b with rational A and right-hand side in the coefficient
// domain C; A must be invertible.
template <class C>
std::vector<C> solve_rat_system(std::vector<std::vector<Rat>> A, std::vector<C> b) {
    size_t n = A.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && is_zero(A[piv][col])) ++piv;
        if (piv == n) throw std::domain_error("solve_rat_system: singular matrix");
        std::swap(A[piv], A[col]);
        std::swap(b[piv], b[col]);
        for (size_t r = 0; r < n; ++r) {
            if (r == col || is_zero(A[r][col])) continue;
            Rat f = A[r][col] / A[col][col];
            for (size_t c = col; c < n; ++c) A[r][c] -= f * A[col][c];
            b[r] -= b[col] * f;
        }
    }
    std::vector<C> x;
    x.reserve(n);
    for (size_t i = 0; i < n; ++i) x.push_back(b[i] / A[i][i]);
    return x;
}

// Expand a series into the Schur basis, stratum by stratum, by solving the
// triangular transition against schur_polynomial outputs.  Covers weights
// 0..max_weight; max_weight must not exceed the series bound.
template <class C>
std::map<Partition, C> schur_expand(const Series<C>& s, long max_weight) {
    if (max_weight > s.bound())
        throw std::invalid_argument("schur_expand: weight beyond series bound");
    std::map<Partition, C> out;
    for (long n = 0; n <= max_weight; ++n) {
        auto lambdas = partitions_of(n);
        size_t k = lambdas.size();
        std::vector<Mono> monos;
        monos.reserve(k);
        for (const auto& mu : lambdas) monos.push_back(mono_of_partition(mu));
        std::vector<std::vector<Rat>> A(k, std::vector<Rat>(k));
        std::vector<C> rhs;
        rhs.reserve(k);
        for (size_t i = 0; i < k; ++i) {
            auto sp = schur_polynomial(lambdas[i], n);
            for (size_t r = 0; r < k; ++r) A[r][i] = sp.coeff(monos[r]);
        }
        for (size_t r = 0; r < k; ++r) rhs.push_back(s.coeff(monos[r]));
        auto x = solve_rat_system<C>(std::move(A), std::move(rhs));
        for (size_t i = 0; i < k; ++i)
            if (!is_zero(x[i])) out.emplace(lambdas[i], std::move(x[i]));
    }
    return out;
}

}  // namespace hkdv
