#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>

#include "hkdv/intersect.hpp"

using namespace hkdv;

TEST_CASE("inversion coefficients c_b^d") {
    CHECK(c_coeff(0, 1) == Rat(1));
    CHECK(c_coeff(1, 1) == Rat(-1));
    CHECK(c_coeff(1, 2) == Rat(1));
    CHECK(c_coeff(3, 2) == rat(1, 2));
    CHECK_THROWS(c_coeff(2, 0));
    CHECK_THROWS(c_coeff(2, 4));
}

TEST_CASE("one-variable identity: sum c_b^d/(1 - b psi) = psi^d + O(psi^{d+1})") {
    auto r0 = lk_residual(0, 3);
    CHECK(r0[0] == Rat(0));

    auto r1 = lk_residual(1, 4);
    CHECK(r1[0] == Rat(0));
    CHECK(r1[1] == Rat(0));
    CHECK(r1[2] == Rat(3));  // (2^2 - 1) - 0

    auto r3 = lk_residual(3, 6);
    for (int i = 0; i <= 3; ++i) CHECK(r3[static_cast<size_t>(i)] == Rat(0));
    CHECK(r3[4] != Rat(0));

    for (long d = 0; d <= 8; ++d) {
        auto r = lk_residual(d, d + 2);
        for (long i = 0; i <= d; ++i) CHECK(r[static_cast<size_t>(i)] == Rat(0));
    }
    CHECK_THROWS(lk_residual(2, 2));
}

TEST_CASE("theorem-1 prefactor absorbs the ELSV weights") {
    // c_b^d b!/b^b = (-1)^{d+1-b} / ((d+1-b)! b^{b-1})
    for (long d = 0; d <= 8; ++d)
        for (long b = 1; b <= d + 1; ++b) {
            Rat lhs = c_coeff(d, b) * Rat(factorial(b)) / rat(int_pow(b, b), Int(1));
            Rat rhs = rat(Int(1), factorial(d + 1 - b) * int_pow(b, b - 1));
            if ((d + 1 - b) % 2 != 0) rhs = -rhs;
            CHECK(lhs == rhs);
        }
}

TEST_CASE("tau index validation") {
    CHECK(TauIndex({0, 0, 0}).genus() == 0);
    CHECK(TauIndex({1}).genus() == 1);
    CHECK(TauIndex({2, 3}).genus() == 2);
    CHECK_THROWS(TauIndex({0}).genus());      // g = 2/3
    CHECK_THROWS(TauIndex({0, 0}).genus());   // (0, 2) unstable
    CHECK(TauIndex({1, 1}).genus() == 1);
    CHECK_THROWS(TauIndex(std::vector<long>{}));
    CHECK_THROWS(TauIndex({-1, 2}));
}

TEST_CASE("theorem-1 spot chain for <tau_1>") {
    HurwitzCache cache;
    cache.ensure_weight(2);
    Rat h11 = cache.number(1, {1});
    Rat h12 = cache.number(1, {2});
    CHECK(h11 == Rat(0));
    CHECK(h12 == rat(1, 2));
    CHECK(-h11 / 2 + h12 / 12 == rat(1, 24));
    CHECK(tau_intersection(TauIndex({1}), cache) == rat(1, 24));
}

TEST_CASE("printed intersection numbers") {
    HurwitzCache cache;
    CHECK(tau_intersection(TauIndex({0, 0, 0}), cache) == Rat(1));
    CHECK(tau_intersection(TauIndex({0, 1, 0, 0}), cache) == Rat(1));  // <tau_0^3 tau_1>
    CHECK_THROWS(tau_intersection(TauIndex({2}), cache));             // 2 = 3g - 2 has no g
    CHECK(tau_intersection(TauIndex({2, 3}), cache) == rat(29, 5760));
}

TEST_CASE("genus-zero closed form (n-3)!/prod d_i!") {
    HurwitzCache cache;
    // every stable genus-0 index with n <= 6, computed through Hurwitz numbers
    long checked = 0;
    std::function<void(std::vector<long>&, long, long)> rec = [&](std::vector<long>& ds,
                                                                  long min_d, long n_left) {
        if (n_left == 0) {
            long n = static_cast<long>(ds.size());
            long sum = std::accumulate(ds.begin(), ds.end(), 0L);
            if (n < 3 || sum != n - 3) return;
            Rat expect(factorial(n - 3));
            for (long d : ds) expect /= Rat(factorial(d));
            CHECK(tau_intersection(TauIndex(ds), cache) == expect);
            ++checked;
            return;
        }
        for (long d = min_d; d <= 3; ++d) {
            ds.push_back(d);
            rec(ds, d, n_left - 1);
            ds.pop_back();
        }
    };
    for (long n = 3; n <= 6; ++n) {
        std::vector<long> ds;
        rec(ds, 0, n);
    }
    CHECK(checked >= 7);
}

TEST_CASE("permutation symmetry of tau_intersection") {
    HurwitzCache cache;
    std::vector<long> ds{0, 1, 2};
    std::sort(ds.begin(), ds.end());
    Rat ref = tau_intersection(TauIndex(ds), cache);
    do {
        CHECK(tau_intersection(TauIndex(ds), cache) == ref);
    } while (std::next_permutation(ds.begin(), ds.end()));
}

TEST_CASE("f_series small window") {
    HurwitzCache cache;
    FSeries F = f_series(3, 3, cache);
    CHECK(F.poly.coeff(Mono::var(1)) == rat(1, 24));
    CHECK(F.poly.coeff(Mono::var(0, 3)) == rat(1, 6));
    CHECK(F.poly.coeff(Mono::var(1, 2)) == rat(1, 48));
    CHECK(F.poly.coeff(Mono::var(0).times_var(2)) == rat(1, 24));
    // invalid indices never appear
    for (const auto& [m, c] : F.poly.terms()) CHECK(tau_monomial_valid(m));
    CHECK_THROWS(f_series(0, 3, cache));
}
