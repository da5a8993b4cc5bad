#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hkdv/hurwitz.hpp"

using namespace hkdv;

namespace {

ExpPoly combo(std::initializer_list<std::pair<long, Rat>> terms) {
    ExpPoly p;
    for (const auto& [k, c] : terms) p.add_term(k, 0, c);
    return p;
}

// d/dbeta applied coefficient-wise.
ESeries d_beta(const ESeries& s) {
    ESeries out(s.bound());
    for (const auto& [m, c] : s.terms()) out.add_term(m, c.d_beta());
    return out;
}

}  // namespace

TEST_CASE("cut-and-join on small schur polynomials") {
    RSeries s2 = schur_polynomial(Partition{2}, 2);
    CHECK(cut_and_join(s2) == s2);
    RSeries s11 = schur_polynomial(Partition{1, 1}, 2);
    CHECK(cut_and_join(s11) == -s11);
    CHECK(cut_and_join(RSeries::one(4)).is_zero());
}

TEST_CASE("schur polynomials are eigenvectors of cut-and-join") {
    for (const auto& lambda : partitions_up_to(6)) {
        RSeries s = schur_polynomial(lambda, 6);
        CHECK(cut_and_join(s) == s.scaled(Rat(f_lambda(lambda))));
    }
}

TEST_CASE("tau_hurwitz low-order coefficients") {
    ESeries tau = tau_hurwitz(3);
    CHECK(tau.coeff(Mono{}) == ExpPoly(1));
    CHECK(tau.coeff(Mono::var(1)) == ExpPoly(1));
    CHECK(tau.coeff(Mono::var(2)) == combo({{1, rat(1, 4)}, {-1, rat(-1, 4)}}));
}

TEST_CASE("cut-and-join equation holds exactly") {
    for (long W : {4L, 6L}) {
        ESeries tau = tau_hurwitz(W);
        CHECK((d_beta(tau) - cut_and_join(tau)).is_zero());
    }
}

TEST_CASE("printed expansion of H") {
    ESeries h = h_series(4);
    CHECK(h.coeff(Mono{}).is_zero());
    CHECK(h.coeff(Mono::var(1)) == ExpPoly(1));
    CHECK(h.coeff(Mono::var(1, 2)) ==
          combo({{1, rat(1, 4)}, {0, rat(-1, 2)}, {-1, rat(1, 4)}}));
    CHECK(h.coeff(Mono::var(2)) == combo({{1, rat(1, 4)}, {-1, rat(-1, 4)}}));
    CHECK(h.coeff(Mono::var(1, 3)) == combo({{3, rat(1, 36)},
                                             {1, rat(-9, 36)},
                                             {0, rat(16, 36)},
                                             {-1, rat(-9, 36)},
                                             {-3, rat(1, 36)}}));
    CHECK(h.coeff({{1, 1}, {2, 1}}) == combo({{3, rat(1, 12)},
                                              {1, rat(-3, 12)},
                                              {-1, rat(3, 12)},
                                              {-3, rat(-1, 12)}}));
    CHECK(h.coeff(Mono::var(3)) == combo({{3, rat(1, 18)}, {0, rat(-2, 18)}, {-3, rat(1, 18)}}));
}

TEST_CASE("initial value H at beta = 0 is p_1") {
    ESeries h = h_series(5);
    for (const auto& [m, c] : h.terms()) {
        Rat expected = (m == Mono::var(1)) ? Rat(1) : Rat(0);
        CHECK(c.at_beta_zero() == expected);
    }
}

TEST_CASE("unstable closed forms") {
    ESeries u = h_unstable(6);
    CHECK(u.coeff(Mono::var(1)) == ExpPoly(1));
    CHECK(u.coeff(Mono::var(2)) == ExpPoly::beta_power(1, rat(1, 2)));
    // the three displayed second derivatives
    CHECK(u.partial(1).partial(1).coeff(Mono{}) == ExpPoly::beta_power(2, rat(1, 2)));
    CHECK(u.partial(2).partial(2).coeff(Mono{}) == ExpPoly::beta_power(4, Rat(1)));
    CHECK(u.partial(1).partial(3).coeff(Mono{}) == ExpPoly::beta_power(4, rat(9, 8)));
}

TEST_CASE("hurwitz number extraction") {
    ESeries h = h_series(6);
    CHECK(hurwitz_number(h, HurwitzIndex(0, {1})) == Rat(1));
    CHECK(hurwitz_number(h, HurwitzIndex(0, {2})) == rat(1, 2));
    CHECK(hurwitz_number(h, HurwitzIndex(0, {3})) == Rat(1));
    CHECK(hurwitz_number(h, HurwitzIndex(0, {1, 1})) == Rat(1));
    CHECK(hurwitz_number(h, HurwitzIndex(1, {2})) == rat(1, 2));
    CHECK(hurwitz_number(h, HurwitzIndex(0, {1, 1, 1})) == Rat(24));
    CHECK(hurwitz_number(h, HurwitzIndex(1, {1})) == Rat(0));  // m > 0 but no coverings
    // h_{g;(1,1)} = 1 for every reachable genus
    for (long g = 0; g <= 3; ++g) CHECK(hurwitz_number(h, HurwitzIndex(g, {1, 1})) == Rat(1));
    CHECK_THROWS(hurwitz_number(h, HurwitzIndex(0, {7})));
    CHECK_THROWS(HurwitzIndex(0, {}));
    CHECK_THROWS(HurwitzIndex(-1, {1}));
    CHECK_THROWS(HurwitzIndex(0, {0, 2}));
}

TEST_CASE("unstable part carries exactly the genus-0 one- and two-part data") {
    ESeries h = h_series(6);
    ESeries u = h_unstable(6);
    for (long b = 1; b <= 6; ++b) {
        HurwitzIndex idx(0, {b});
        Mono m = Mono::var(static_cast<int>(b));
        CHECK(h.coeff(m).taylor_coeff(idx.m()) == u.coeff(m).taylor_coeff(idx.m()));
    }
    for (long b1 = 1; b1 <= 3; ++b1)
        for (long b2 = b1; b1 + b2 <= 6; ++b2) {
            HurwitzIndex idx(0, {b1, b2});
            Mono m = Mono::var(static_cast<int>(b1)).times_var(static_cast<int>(b2));
            CHECK(h.coeff(m).taylor_coeff(idx.m()) == u.coeff(m).taylor_coeff(idx.m()));
        }
}

TEST_CASE("oracle spot values") {
    CHECK(hurwitz_oracle(HurwitzIndex(0, {2})) == rat(1, 2));
    CHECK(hurwitz_oracle(HurwitzIndex(0, {3})) == Rat(1));
    CHECK(hurwitz_oracle(HurwitzIndex(0, {1, 1, 1})) == Rat(24));
    CHECK_THROWS(hurwitz_oracle(HurwitzIndex(0, {7})));
    CHECK_THROWS(hurwitz_oracle(HurwitzIndex(3, {1, 1, 1})));  // m = 10 over budget
}

TEST_CASE("oracle calibration against the closed forms") {
    // genus-0 one- and two-part values pin the enumeration's normalization
    for (long b = 1; b <= 4; ++b)
        CHECK(hurwitz_oracle(HurwitzIndex(0, {b})) == rat_pow(Rat(b), b - 3));
    // h_{0;b1,b2} = b1^{b1} b2^{b2} (b1+b2-1)! / (b1! b2!), from the H_{0;2}
    // closed form with m = b1 + b2
    for (long b1 = 1; b1 <= 2; ++b1)
        for (long b2 = b1; b1 + b2 <= 4; ++b2) {
            Rat expect = rat(int_pow(b1, b1) * int_pow(b2, b2) * factorial(b1 + b2 - 1),
                             factorial(b1) * factorial(b2));
            CHECK(hurwitz_oracle(HurwitzIndex(0, {b1, b2})) == expect);
        }
}

TEST_CASE("oracle agrees with the eigenbasis engine") {
    ESeries h = h_series(4);
    long checked = 0;
    for (long B = 1; B <= 4; ++B)
        for (const auto& profile : partitions_of(B))
            for (long g = 0;; ++g) {
                std::vector<long> prof(profile.parts().begin(), profile.parts().end());
                HurwitzIndex idx(g, prof);
                if (idx.m() > 6) break;
                CHECK(hurwitz_number(h, idx) == hurwitz_oracle(idx));
                ++checked;
            }
    CHECK(checked >= 20);
}
