#include "hkdv/schur.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>

namespace hkdv {

const RSeries& one_part_schur(int k) {
    static std::mutex mu;
    static std::deque<RSeries> cache;  // stable references across growth
    if (k < 0) throw std::invalid_argument("one_part_schur: negative index");
    std::scoped_lock lock(mu);
    if (cache.empty()) cache.push_back(RSeries::one(0));
    while (static_cast<int>(cache.size()) <= k) {
        // m s_m = sum_{i=1..m} p_i s_{m-i}
        int m = static_cast<int>(cache.size());
        RSeries s(m);
        for (int i = 1; i <= m; ++i)
            s += cache[static_cast<size_t>(m - i)].rebounded(m).mul_monomial(Mono::var(i), Rat(1));
        s = s.scaled(rat(1, m));
        cache.push_back(std::move(s));
    }
    return cache[static_cast<size_t>(k)];
}

Mono mono_of_partition(const Partition& lambda) {
    std::vector<int> idx(lambda.parts().begin(), lambda.parts().end());
    return Mono::from_indices(idx);
}

RSeries schur_polynomial(const Partition& lambda, long W) {
    if (lambda.size() > W)
        throw std::invalid_argument("schur_polynomial: |lambda| exceeds weight bound");
    static std::mutex mu;
    static std::map<Partition, RSeries> cache;
    {
        std::scoped_lock lock(mu);
        auto it = cache.find(lambda);
        if (it != cache.end()) return it->second.rebounded(W);
    }
    long n = lambda.size();
    int l = lambda.length();
    std::vector<std::vector<RSeries>> M(static_cast<size_t>(l),
                                        std::vector<RSeries>(static_cast<size_t>(l), RSeries(n)));
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j) {
            int idx = lambda.parts()[static_cast<size_t>(j - 1)] - j + i;
            if (idx >= 0) M[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
                one_part_schur(idx).rebounded(n);
        }
    RSeries det = l == 0 ? RSeries::one(n) : det_series(M, n);
    {
        std::scoped_lock lock(mu);
        cache.emplace(lambda, det);
    }
    return det.rebounded(W);
}

Rat det_rat(std::vector<std::vector<Rat>> M) {
    size_t n = M.size();
    Rat det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && is_zero(M[piv][col])) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(M[piv], M[col]);
            det = -det;
        }
        det *= M[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (is_zero(M[r][col])) continue;
            Rat f = M[r][col] / M[col][col];
            for (size_t c = col; c < n; ++c) M[r][c] -= f * M[col][c];
        }
    }
    return det;
}

Rat schur_at_exp_point(const Partition& lambda) {
    int l = lambda.length();
    if (l == 0) return Rat(1);
    std::vector<std::vector<Rat>> M(static_cast<size_t>(l), std::vector<Rat>(static_cast<size_t>(l)));
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j)
            M[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
                inv_factorial(lambda.parts()[static_cast<size_t>(j - 1)] - j + i);
    return det_rat(std::move(M));
}

}  // namespace hkdv
