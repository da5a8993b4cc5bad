#include <algorithm>
#include <array>
#include <stdexcept>

#include "hkdv/hurwitz.hpp"

namespace hkdv {

namespace {

constexpr int kMaxDegree = 6;

struct Dsu {
    std::array<int, kMaxDegree> parent{};
    int components = 0;

    void init(int n) {
        components = n;
        for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[static_cast<size_t>(a)] = b;
            --components;
        }
    }
};

struct Search {
    int B = 0;
    int m = 0;
    int target_cycles = 0;
    std::vector<int> target_type;                    // sorted descending
    std::vector<std::pair<int, int>> transpositions;  // all (a < b) in 0..B-1
    long count = 0;

    int cycle_count(const std::array<int, kMaxDegree>& perm) const {
        std::array<bool, kMaxDegree> seen{};
        int c = 0;
        for (int i = 0; i < B; ++i) {
            if (seen[static_cast<size_t>(i)]) continue;
            ++c;
            for (int j = i; !seen[static_cast<size_t>(j)]; j = perm[static_cast<size_t>(j)])
                seen[static_cast<size_t>(j)] = true;
        }
        return c;
    }

    bool has_target_type(const std::array<int, kMaxDegree>& perm) const {
        std::array<bool, kMaxDegree> seen{};
        std::vector<int> lens;
        for (int i = 0; i < B; ++i) {
            if (seen[static_cast<size_t>(i)]) continue;
            int len = 0;
            for (int j = i; !seen[static_cast<size_t>(j)]; j = perm[static_cast<size_t>(j)]) {
                seen[static_cast<size_t>(j)] = true;
                ++len;
            }
            lens.push_back(len);
        }
        std::sort(lens.rbegin(), lens.rend());
        return lens == target_type;
    }

    void dfs(int depth, const std::array<int, kMaxDegree>& perm, const Dsu& dsu, int cycles) {
        int remaining = m - depth;
        // each transposition changes the cycle count by exactly 1 and merges
        // at most one pair of components
        int dist = cycles > target_cycles ? cycles - target_cycles : target_cycles - cycles;
        if (dist > remaining || (remaining - dist) % 2 != 0) return;
        if (dsu.components - 1 > remaining) return;
        if (depth == m) {
            if (dsu.components == 1 && has_target_type(perm)) ++count;
            return;
        }
        for (auto [a, b] : transpositions) {
            std::array<int, kMaxDegree> next = perm;
            std::swap(next[static_cast<size_t>(a)], next[static_cast<size_t>(b)]);
            Dsu d2 = dsu;
            d2.unite(a, b);
            dfs(depth + 1, next, d2, cycle_count(next));
        }
    }
};

}  // namespace

Rat hurwitz_oracle(const HurwitzIndex& idx) {
    long B = idx.B();
    long m = idx.m();
    if (B > kMaxDegree || m > 8)
        throw std::out_of_range("hurwitz_oracle: enumeration budget exceeded (B <= 6, m <= 8)");
    if (m < 0) return Rat(0);

    Search s;
    s.B = static_cast<int>(B);
    s.m = static_cast<int>(m);
    s.target_type.assign(idx.profile.begin(), idx.profile.end());
    std::sort(s.target_type.rbegin(), s.target_type.rend());
    s.target_cycles = static_cast<int>(s.target_type.size());
    for (int a = 0; a < s.B; ++a)
        for (int b = a + 1; b < s.B; ++b) s.transpositions.emplace_back(a, b);

    std::array<int, kMaxDegree> id{};
    for (int i = 0; i < s.B; ++i) id[static_cast<size_t>(i)] = i;
    Dsu dsu;
    dsu.init(s.B);
    s.dfs(0, id, dsu, s.B);

    // labeled cycles: every assignment of labels 1..n to equal-length cycles
    // is a distinct covering, hence the multiplicity factor; then divide by
    // the B! sheet relabelings
    return Rat(s.count) * Rat(aut_order(idx.profile)) / Rat(factorial(B));
}

}  // namespace hkdv
