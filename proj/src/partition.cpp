#include "hkdv/partition.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hkdv {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be nonincreasing");
    }
}

long Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

std::string Partition::str() const {
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s;
}

Partition Partition::parse(const std::string& s) {
    if (s.empty()) return Partition{};
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) parts.push_back(std::stoi(tok));
    return Partition(std::move(parts));
}

namespace {

void gen_partitions(long n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int k = static_cast<int>(std::min<long>(max_part, n)); k >= 1; --k) {
        cur.push_back(k);
        gen_partitions(n - k, k, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(long n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative size");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, n > 0 ? static_cast<int>(n) : 1, cur, out);
    return out;
}

std::vector<Partition> partitions_up_to(long N) {
    if (N < 0) throw std::invalid_argument("partitions_up_to: negative bound");
    std::vector<Partition> out;
    for (long n = 0; n <= N; ++n) {
        auto pn = partitions_of(n);
        out.insert(out.end(), pn.begin(), pn.end());
    }
    return out;
}

long f_lambda(const Partition& p) {
    long s = 0;
    const auto& parts = p.parts();
    for (size_t i = 0; i < parts.size(); ++i) {
        long li = parts[i];
        s += li * (li - 2 * static_cast<long>(i + 1) + 1);
    }
    // li(li - 2i + 1) sums to an even number: it is twice the content sum.
    return s / 2;
}

Int aut_order(const std::vector<long>& seq) {
    if (seq.empty()) throw std::invalid_argument("aut_order: empty sequence");
    std::map<long, long> mult;
    for (long v : seq) ++mult[v];
    Int r(1);
    for (const auto& [v, k] : mult) r *= factorial(k);
    return r;
}

}  // namespace hkdv
