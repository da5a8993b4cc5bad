#include "hkdv/intersect.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hkdv {

Rat c_coeff(long d, long b) {
    if (d < 0) throw std::invalid_argument("c_coeff: d must be nonnegative");
    if (b < 1 || b > d + 1) throw std::invalid_argument("c_coeff: b out of range 1..d+1");
    Rat r = rat(Int(1), factorial(d - b + 1) * factorial(b - 1));
    return (d - b + 1) % 2 == 0 ? r : -r;
}

std::vector<Rat> lk_residual(long d, long order) {
    if (order < d + 1) throw std::invalid_argument("lk_residual: order must exceed d");
    std::vector<Rat> out(static_cast<size_t>(order) + 1, Rat(0));
    // 1/(1 - b psi) = sum_i b^i psi^i
    for (long b = 1; b <= d + 1; ++b) {
        Rat c = c_coeff(d, b);
        Rat p(1);
        for (long i = 0; i <= order; ++i) {
            out[static_cast<size_t>(i)] += c * p;
            p *= Rat(b);
        }
    }
    out[static_cast<size_t>(d)] -= 1;
    return out;
}

TauIndex::TauIndex(std::vector<long> d) : ds(std::move(d)) {
    if (ds.empty()) throw std::invalid_argument("TauIndex: empty index");
    for (long v : ds)
        if (v < 0) throw std::invalid_argument("TauIndex: entries must be nonnegative");
}

long TauIndex::sum() const { return std::accumulate(ds.begin(), ds.end(), 0L); }

long TauIndex::genus() const {
    long three_g = sum() - n() + 3;
    if (three_g < 0 || three_g % 3 != 0)
        throw std::domain_error("TauIndex: sum d_i = 3g - 3 + n has no nonnegative integer solution");
    long g = three_g / 3;
    if (g == 0 && n() < 3)
        throw std::domain_error("TauIndex: unstable index; need g > 0, n >= 1 or g = 0, n >= 3");
    return g;
}

void HurwitzCache::ensure_weight(long W) {
    if (!engine_ || engine_->weight_bound() < W) engine_ = std::make_unique<HurwitzEngine>(W);
}

const HurwitzEngine& HurwitzCache::engine() const {
    if (!engine_) throw std::logic_error("HurwitzCache: engine not initialized");
    return *engine_;
}

Rat HurwitzCache::number(long genus, const std::vector<long>& profile) {
    std::vector<long> key = profile;
    std::sort(key.begin(), key.end());
    auto it = memo_.find({genus, key});
    if (it != memo_.end()) return it->second;
    long B = std::accumulate(key.begin(), key.end(), 0L);
    ensure_weight(B);
    Rat v = engine_->number(HurwitzIndex(genus, key));
    memo_.emplace(std::make_pair(genus, std::move(key)), v);
    return v;
}

namespace {

void sum_over_profiles(const TauIndex& idx, long g, size_t i, std::vector<long>& bs,
                       const Rat& partial, HurwitzCache& cache, Rat& acc) {
    if (i == idx.ds.size()) {
        long B = std::accumulate(bs.begin(), bs.end(), 0L);
        long m = 2 * g - 2 + B + idx.n();
        acc += partial * cache.number(g, bs) / Rat(factorial(m));
        return;
    }
    long d = idx.ds[i];
    for (long b = 1; b <= d + 1; ++b) {
        Rat f = rat(Int(1), factorial(d + 1 - b) * int_pow(b, b - 1));
        if ((d + 1 - b) % 2 != 0) f = -f;
        bs.push_back(b);
        sum_over_profiles(idx, g, i + 1, bs, partial * f, cache, acc);
        bs.pop_back();
    }
}

}  // namespace

Rat tau_intersection(const TauIndex& idx, HurwitzCache& cache) {
    long g = idx.genus();
    cache.ensure_weight(idx.required_weight());
    Rat acc(0);
    std::vector<long> bs;
    bs.reserve(idx.ds.size());
    sum_over_profiles(idx, g, 0, bs, Rat(1), cache, acc);
    return acc;
}

namespace {

void enumerate_indices(long max_degree, long max_weight, std::vector<long>& cur, long min_d,
                       std::vector<std::vector<long>>& out) {
    if (!cur.empty()) out.push_back(cur);
    if (static_cast<long>(cur.size()) == max_degree) return;
    long used = std::accumulate(cur.begin(), cur.end(), 0L);
    for (long d = min_d; used + d <= max_weight; ++d) {
        cur.push_back(d);
        enumerate_indices(max_degree, max_weight, cur, d, out);
        cur.pop_back();
    }
}

}  // namespace

FSeries f_series(long max_degree, long max_weight, HurwitzCache& cache) {
    if (max_degree < 1 || max_weight < 0)
        throw std::invalid_argument("f_series: need max_degree >= 1 and max_weight >= 0");
    std::vector<std::vector<long>> all;
    std::vector<long> cur;
    enumerate_indices(max_degree, max_weight, cur, 0, all);

    long W = 0;
    std::vector<TauIndex> valid;
    for (auto& ds : all) {
        TauIndex idx(ds);
        Mono t = Mono::from_indices(std::vector<int>(ds.begin(), ds.end()));
        if (!tau_monomial_valid(t)) continue;
        W = std::max(W, idx.required_weight());
        valid.push_back(std::move(idx));
    }
    cache.ensure_weight(W);

    FSeries F;
    F.max_degree = max_degree;
    F.max_weight = max_weight;
    for (const auto& idx : valid) {
        Rat v = tau_intersection(idx, cache);
        if (is_zero(v)) continue;
        Mono t = Mono::from_indices(std::vector<int>(idx.ds.begin(), idx.ds.end()));
        F.poly.add_term(t, v / Rat(aut_order(idx.ds)));
    }
    return F;
}

}  // namespace hkdv
