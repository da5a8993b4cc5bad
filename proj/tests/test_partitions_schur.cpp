#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hkdv/partition.hpp"
#include "hkdv/schur.hpp"

using namespace hkdv;

namespace {

// Euler's pentagonal-number recurrence; independent of the enumerator.
std::vector<long> partition_counts(long N) {
    std::vector<long> p(static_cast<size_t>(N) + 1, 0);
    p[0] = 1;
    for (long n = 1; n <= N; ++n) {
        long s = 0;
        for (long k = 1;; ++k) {
            long g1 = k * (3 * k - 1) / 2;
            long g2 = k * (3 * k + 1) / 2;
            if (g1 > n && g2 > n) break;
            long sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= n) s += sign * p[static_cast<size_t>(n - g1)];
            if (g2 <= n) s += sign * p[static_cast<size_t>(n - g2)];
        }
        p[static_cast<size_t>(n)] = s;
    }
    return p;
}

// Sum of cell contents j - i over the Young diagram, the second formula for f.
long content_sum(const Partition& lambda) {
    long s = 0;
    const auto& parts = lambda.parts();
    for (size_t i = 1; i <= parts.size(); ++i)
        for (long j = 1; j <= parts[i - 1]; ++j) s += j - static_cast<long>(i);
    return s;
}

// Evaluate a p-polynomial at p = (1, 0, 0, ...).
Rat eval_at_exp_point(const RSeries& s) {
    Rat acc(0);
    for (const auto& [m, c] : s.terms()) {
        bool pure_p1 = true;
        for (auto [v, k] : m.e)
            if (v != 1) pure_p1 = false;
        if (pure_p1) acc += c;
    }
    return acc;
}

}  // namespace

TEST_CASE("partition enumeration counts match the pentagonal recurrence") {
    auto counts = partition_counts(12);
    for (long n = 0; n <= 12; ++n)
        CHECK(partitions_of(n).size() == static_cast<size_t>(counts[static_cast<size_t>(n)]));
    CHECK(partitions_up_to(3).size() == 7);
    CHECK(partitions_up_to(8).size() == 67);
    CHECK(partitions_up_to(0).size() == 1);
    CHECK(partitions_up_to(0)[0].empty());
    CHECK_THROWS(partitions_up_to(-1));
}

TEST_CASE("enumeration order and uniqueness") {
    auto all = partitions_up_to(9);
    std::set<Partition> seen(all.begin(), all.end());
    CHECK(seen.size() == all.size());
    long last_size = 0;
    for (const auto& p : all) {
        CHECK(p.size() >= last_size);
        last_size = p.size();
    }
    // reverse-lexicographic within a size: largest first part first
    auto of4 = partitions_of(4);
    REQUIRE(of4.size() == 5);
    CHECK(of4[0] == Partition{4});
    CHECK(of4[1] == Partition{3, 1});
    CHECK(of4[2] == Partition{2, 2});
    CHECK(of4[3] == Partition{2, 1, 1});
    CHECK(of4[4] == Partition{1, 1, 1, 1});
}

TEST_CASE("partition validation and serialization") {
    CHECK_THROWS(Partition({1, 2}));
    CHECK_THROWS(Partition({0}));
    CHECK(Partition({3, 1, 1}).str() == "3,1,1");
    CHECK(Partition{}.str() == "");
    CHECK(Partition::parse("3,1,1") == Partition({3, 1, 1}));
    CHECK(Partition::parse("") == Partition{});
}

TEST_CASE("f_lambda values and content-sum identity") {
    CHECK(f_lambda(Partition{}) == 0);
    CHECK(f_lambda(Partition{2}) == 1);
    CHECK(f_lambda(Partition{1, 1}) == -1);
    CHECK(f_lambda(Partition{2, 1}) == 0);
    for (const auto& lambda : partitions_up_to(10)) CHECK(f_lambda(lambda) == content_sum(lambda));
}

TEST_CASE("schur_at_exp_point") {
    for (int k = 0; k <= 6; ++k) {
        std::vector<int> parts;
        if (k > 0) parts.push_back(k);
        CHECK(schur_at_exp_point(Partition(parts)) == inv_factorial(k));
    }
    CHECK(schur_at_exp_point(Partition{2, 1}) == rat(1, 3));
    CHECK(schur_at_exp_point(Partition{1, 1}) == rat(1, 2));
    for (const auto& lambda : partitions_up_to(8))
        CHECK(schur_at_exp_point(lambda) == eval_at_exp_point(schur_polynomial(lambda, lambda.size())));
}

TEST_CASE("printed schur polynomials") {
    RSeries s2 = schur_polynomial(Partition{2}, 2);
    CHECK(s2.coeff(Mono::var(1, 2)) == rat(1, 2));
    CHECK(s2.coeff(Mono::var(2)) == rat(1, 2));

    RSeries s3 = schur_polynomial(Partition{3}, 3);
    CHECK(s3.coeff(Mono::var(1, 3)) == rat(1, 6));
    CHECK(s3.coeff({{1, 1}, {2, 1}}) == rat(1, 2));
    CHECK(s3.coeff(Mono::var(3)) == rat(1, 3));

    RSeries s111 = schur_polynomial(Partition{1, 1, 1}, 3);
    CHECK(s111.coeff(Mono::var(1, 3)) == rat(1, 6));
    CHECK(s111.coeff({{1, 1}, {2, 1}}) == rat(-1, 2));
    CHECK(s111.coeff(Mono::var(3)) == rat(1, 3));

    RSeries s21 = schur_polynomial(Partition{2, 1}, 3);
    CHECK(s21.coeff(Mono::var(1, 3)) == rat(1, 3));
    CHECK(s21.coeff({{1, 1}, {2, 1}}) == Rat(0));
    CHECK(s21.coeff(Mono::var(3)) == rat(-1, 3));

    RSeries s11 = schur_polynomial(Partition{1, 1}, 2);
    CHECK(s11.coeff(Mono::var(1, 2)) == rat(1, 2));
    CHECK(s11.coeff(Mono::var(2)) == rat(-1, 2));

    CHECK(schur_polynomial(Partition{}, 0) == RSeries::one(0));
    CHECK_THROWS(schur_polynomial(Partition{3}, 2));
}

TEST_CASE("weighted homogeneity") {
    for (const auto& lambda : partitions_up_to(8)) {
        RSeries s = schur_polynomial(lambda, 8);
        for (const auto& [m, c] : s.terms()) CHECK(m.weight() == lambda.size());
    }
}

TEST_CASE("burnside cross-check of the dimension interpretation") {
    // sum over |lambda| = n of (n! s_lambda(1,0,...))^2 = n!
    for (long n = 0; n <= 6; ++n) {
        Rat acc(0);
        for (const auto& lambda : partitions_of(n)) {
            Rat d = Rat(factorial(n)) * schur_at_exp_point(lambda);
            acc += d * d;
        }
        CHECK(acc == Rat(factorial(n)));
    }
}

TEST_CASE("aut_order") {
    CHECK(aut_order({0, 0, 0}) == 6);
    CHECK(aut_order({2, 3}) == 1);
    CHECK(aut_order({0, 0, 3}) == 2);
    CHECK_THROWS(aut_order({}));
}

TEST_CASE("schur basis expansion round trip") {
    // 2 s_{2,1} - 1/3 s_{1,1} + 5 s_{}  recovered exactly
    RSeries mix = schur_polynomial(Partition{2, 1}, 3).scaled(Rat(2)) -
                  schur_polynomial(Partition{1, 1}, 3).scaled(rat(1, 3)) +
                  RSeries::one(3).scaled(Rat(5));
    auto coeffs = schur_expand(mix, 3);
    CHECK(coeffs.size() == 3);
    CHECK(coeffs.at(Partition{2, 1}) == Rat(2));
    CHECK(coeffs.at(Partition{1, 1}) == rat(-1, 3));
    CHECK(coeffs.at(Partition{}) == Rat(5));
}
