#include "hkdv/hurwitz.hpp"

#include <stdexcept>

namespace hkdv {

HurwitzIndex::HurwitzIndex(long g, std::vector<long> prof) : genus(g), profile(std::move(prof)) {
    if (genus < 0) throw std::invalid_argument("HurwitzIndex: negative genus");
    if (profile.empty()) throw std::invalid_argument("HurwitzIndex: empty profile");
    for (long b : profile)
        if (b < 1) throw std::invalid_argument("HurwitzIndex: profile entries must be >= 1");
}

long HurwitzIndex::B() const {
    long s = 0;
    for (long b : profile) s += b;
    return s;
}

ESeries tau_hurwitz(long W) {
    if (W < 0) throw std::invalid_argument("tau_hurwitz: negative weight bound");
    ESeries tau(W);
    for (const auto& lambda : partitions_up_to(W)) {
        Rat c = schur_at_exp_point(lambda);
        ExpPoly factor = ExpPoly::exp_term(f_lambda(lambda), c);
        RSeries sp = schur_polynomial(lambda, W);
        for (const auto& [m, s] : sp.terms()) tau.add_term(m, factor * s);
    }
    return tau;
}

ESeries h_series(long W) { return tau_hurwitz(W).log(); }

ESeries h_unstable(long W) {
    if (W < 0) throw std::invalid_argument("h_unstable: negative weight bound");
    ESeries u(W);
    for (long b = 1; b <= W; ++b) {
        // b^{b-2}/b!; for b = 1 the power is 1^{-1} = 1
        Rat v = rat_pow(Rat(b), b - 2) / Rat(factorial(b));
        u.add_term(Mono::var(static_cast<int>(b)), ExpPoly::beta_power(b - 1, v));
    }
    for (long b1 = 1; b1 <= W; ++b1)
        for (long b2 = b1; b1 + b2 <= W; ++b2) {
            Rat v = rat(int_pow(b1, b1) * int_pow(b2, b2),
                        Int(b1 + b2) * factorial(b1) * factorial(b2));
            if (b1 == b2) v /= 2;  // the 1/2 in front survives only on the diagonal
            Mono m = Mono::var(static_cast<int>(b1)).times_var(static_cast<int>(b2));
            u.add_term(m, ExpPoly::beta_power(b1 + b2, v));
        }
    return u;
}

Rat hurwitz_number(const ESeries& h, const HurwitzIndex& idx) {
    long B = idx.B();
    if (B > h.bound())
        throw std::out_of_range("hurwitz_number: profile weight exceeds engine bound");
    long m = idx.m();
    if (m < 0) return Rat(0);
    std::vector<int> vars(idx.profile.begin(), idx.profile.end());
    Mono mono = Mono::from_indices(vars);
    Rat c = h.coeff(mono).taylor_coeff(m);
    // coefficient stored is sum_g h beta^m/(m! prod m_b!)
    Rat scale(factorial(m));
    for (auto [v, k] : mono.e) scale *= Rat(factorial(k));
    return c * scale;
}

HurwitzEngine::HurwitzEngine(long W)
    : W_(W), tau_(tau_hurwitz(W)), h_(tau_.log()), unstable_(h_unstable(W)) {}

}  // namespace hkdv
