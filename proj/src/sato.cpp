#include "hkdv/sato.hpp"

#include <random>

#include "hkdv/kp_kdv.hpp"

namespace hkdv {

WedgeBasis<ExpPoly> phi_basis(long N, long L) {
    if (L > 1 || N < 1) throw std::invalid_argument("phi_basis: need L <= 1 <= N");
    WedgeBasis<ExpPoly> basis;
    basis.N = N;
    basis.L = L;
    basis.rows.resize(static_cast<size_t>(N));
    for (long j = 1; j <= N; ++j) {
        auto& row = basis.rows[static_cast<size_t>(j - 1)];
        for (long i = L; i <= j; ++i) {
            long freq = (i * (i - 1) - j * (j - 1)) / 2;
            row.emplace(i, ExpPoly::exp_term(freq, inv_factorial(j - i)));
        }
    }
    return basis;
}

WedgeBasis<Rat> phi_basis_beta_zero(long N, long L) {
    if (L > 1 || N < 1) throw std::invalid_argument("phi_basis_beta_zero: need L <= 1 <= N");
    WedgeBasis<Rat> basis;
    basis.N = N;
    basis.L = L;
    basis.rows.resize(static_cast<size_t>(N));
    for (long j = 1; j <= N; ++j)
        for (long i = L; i <= j; ++i)
            basis.rows[static_cast<size_t>(j - 1)].emplace(i, inv_factorial(j - i));
    return basis;
}

WedgeBasis<Rat> vacuum_basis(long N) {
    WedgeBasis<Rat> basis;
    basis.N = N;
    basis.L = 1;
    basis.rows.resize(static_cast<size_t>(N));
    for (long j = 1; j <= N; ++j) basis.rows[static_cast<size_t>(j - 1)].emplace(j, Rat(1));
    return basis;
}

WedgeBasis<Rat> random_wedgebasis_impl(std::uint64_t seed, long N, long L) {
    std::mt19937_64 rng(seed);
    WedgeBasis<Rat> basis;
    basis.N = N;
    basis.L = L;
    basis.rows.resize(static_cast<size_t>(N));
    for (long j = 1; j <= N; ++j) {
        auto& row = basis.rows[static_cast<size_t>(j - 1)];
        row.emplace(j, Rat(1));
        for (long i = j - 1; i >= L; --i) {
            // ~1/2 density; entries num/den with num in [-5,5], den in [1,4].
            // Raw modular draws keep the stream identical across platforms.
            if (rng() % 2 == 0) continue;
            long num = static_cast<long>(rng() % 11) - 5;
            long den = static_cast<long>(rng() % 4) + 1;
            if (num == 0) continue;
            row.emplace(i, rat(num, den));
        }
    }
    return basis;
}

WedgeBasis<Rat> random_wedge_basis(std::uint64_t seed, long N, long L) {
    return random_wedgebasis_impl(seed, N, L);
}

KpMembershipReport random_basis_kp_check(std::uint64_t seed, long N, long W) {
    if (N < W + 2) throw std::invalid_argument("random_basis_kp_check: need N >= W + 2");
    KpMembershipReport report;
    report.seed = seed;
    report.residual_weight = W - 4;
    auto make = [&](long cutoff) {
        // rows beyond N extend by identity, so cutoffs N and N+1 describe the
        // same subspace
        WedgeBasis<Rat> b = random_wedgebasis_impl(seed, N, 1 - W);
        for (long j = N + 1; j <= cutoff; ++j) {
            b.rows.emplace_back();
            b.rows.back().emplace(j, Rat(1));
        }
        b.N = cutoff;
        return b;
    };
    RSeries tau = tau_stabilized<Rat>(make, N, W);
    RSeries residual = kp_residual_of(tau.log());
    report.pass = residual.is_zero();
    if (!report.pass) report.offender = residual.terms().begin()->first;
    return report;
}

}  // namespace hkdv
