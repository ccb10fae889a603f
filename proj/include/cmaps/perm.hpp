#pragma once

// Permutations on 0-based contiguous integer ground sets, cycle structure,
// conjugacy-class arithmetic and small number-theoretic helpers.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cmaps {

using BigInt = boost::multiprecision::cpp_int;

class Permutation {
public:
    Permutation() = default;

    static Permutation identity(std::size_t m) {
        Permutation p;
        p.img_.resize(m);
        std::iota(p.img_.begin(), p.img_.end(), 0u);
        return p;
    }

    // Builds a permutation from disjoint cycles; unlisted points are fixed.
    static Permutation from_cycles(const std::vector<std::vector<uint32_t>>& cycles,
                                   std::size_t m);

    // Takes ownership of an image table; validates bijectivity.
    static Permutation from_images(std::vector<uint32_t> images);

    std::size_t size() const { return img_.size(); }
    uint32_t operator()(uint32_t i) const { return img_[i]; }
    const std::vector<uint32_t>& images() const { return img_; }

    bool is_identity() const;
    bool operator==(const Permutation&) const = default;

    // (p * q)(i) = p(q(i))
    Permutation operator*(const Permutation& q) const;
    Permutation inverse() const;
    Permutation power(long long e) const;

    // Cycles in canonical form: each cycle starts at its least element,
    // cycles sorted by least element, fixed points included.
    std::vector<std::vector<uint32_t>> cycles() const;

    uint64_t order() const;  // lcm of cycle lengths
    bool is_semi_regular() const;

private:
    std::vector<uint32_t> img_;
};

// Multiset of cycle lengths (partition of the ground-set size), stored sorted
// ascending.  Names conjugacy classes of the symmetric group.
class CycleType {
public:
    CycleType() = default;
    explicit CycleType(std::vector<uint32_t> parts);
    static CycleType of(const Permutation& p);

    const std::vector<uint32_t>& parts() const { return parts_; }
    uint32_t total() const { return total_; }

    bool operator==(const CycleType&) const = default;
    bool operator<(const CycleType& o) const;

    std::string to_string() const;           // e.g. "[1,2,2]"
    static CycleType parse(const std::string& s, uint32_t expected_total);

    // Number of elements of S_n (n = total) with this cycle type.
    BigInt conjugacy_class_size() const;

    // A canonical representative: consecutive blocks, each block one cycle.
    Permutation representative() const;

private:
    std::vector<uint32_t> parts_;
    uint32_t total_ = 0;
};

uint64_t euler_phi(uint64_t k);
BigInt factorial(uint32_t n);

// All partitions of n, each sorted ascending, in a fixed deterministic order
// (lexicographic on the descending representation).
std::vector<CycleType> all_cycle_types(uint32_t n);

}  // namespace cmaps
