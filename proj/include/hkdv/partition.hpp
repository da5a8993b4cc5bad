#pragma once

#include <string>
#include <vector>

#include "hkdv/rational.hpp"

namespace hkdv {

// Nonincreasing sequence of positive integers; the empty partition is valid.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    long size() const;                     // |lambda| = sum of parts
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // "3,1,1"; the empty partition serializes as "".
    std::string str() const;
    static Partition parse(const std::string& s);

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// All partitions of exactly n, largest first part first (reverse-lexicographic).
std::vector<Partition> partitions_of(long n);

// Every partition of every size 0..N, ordered by size then reverse-lex.
// Rejects N < 0.
std::vector<Partition> partitions_up_to(long N);

// Eigenvalue of the cut-and-join operator on s_lambda:
// f(lambda) = 1/2 sum_i lambda_i (lambda_i - 2i + 1); always an integer.
long f_lambda(const Partition& p);

// |Aut(d_1,...,d_n)| = product of factorials of value multiplicities.
// Rejects the empty sequence.
Int aut_order(const std::vector<long>& seq);

}  // namespace hkdv
