#include "cmaps/perm.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cmaps {

Permutation Permutation::from_cycles(const std::vector<std::vector<uint32_t>>& cycles,
                                     std::size_t m) {
    Permutation p = identity(m);
    std::vector<bool> seen(m, false);
    for (const auto& c : cycles) {
        for (std::size_t k = 0; k < c.size(); ++k) {
            uint32_t a = c[k];
            if (a >= m) throw std::invalid_argument("cycle entry " + std::to_string(a) +
                                                    " out of range for ground set of size " +
                                                    std::to_string(m));
            if (seen[a]) throw std::invalid_argument("element " + std::to_string(a) +
                                                     " repeated across cycles");
            seen[a] = true;
            p.img_[a] = c[(k + 1) % c.size()];
        }
    }
    return p;
}

Permutation Permutation::from_images(std::vector<uint32_t> images) {
    std::vector<bool> seen(images.size(), false);
    for (uint32_t v : images) {
        if (v >= images.size() || seen[v])
            throw std::invalid_argument("image table is not a bijection");
        seen[v] = true;
    }
    Permutation p;
    p.img_ = std::move(images);
    return p;
}

bool Permutation::is_identity() const {
    for (uint32_t i = 0; i < img_.size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Permutation Permutation::operator*(const Permutation& q) const {
    if (size() != q.size()) throw std::invalid_argument("size mismatch in composition");
    Permutation r;
    r.img_.resize(size());
    for (uint32_t i = 0; i < size(); ++i) r.img_[i] = img_[q.img_[i]];
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.img_.resize(size());
    for (uint32_t i = 0; i < size(); ++i) r.img_[img_[i]] = i;
    return r;
}

Permutation Permutation::power(long long e) const {
    Permutation base = e < 0 ? inverse() : *this;
    unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e)
                                 : static_cast<unsigned long long>(e);
    Permutation acc = identity(size());
    while (k) {
        if (k & 1) acc = base * acc;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

std::vector<std::vector<uint32_t>> Permutation::cycles() const {
    std::vector<std::vector<uint32_t>> out;
    std::vector<bool> seen(size(), false);
    for (uint32_t i = 0; i < size(); ++i) {
        if (seen[i]) continue;
        std::vector<uint32_t> c;
        uint32_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            c.push_back(j);
            j = img_[j];
        }
        out.push_back(std::move(c));
    }
    return out;
}

uint64_t Permutation::order() const {
    uint64_t l = 1;
    for (const auto& c : cycles()) l = std::lcm(l, static_cast<uint64_t>(c.size()));
    return l;
}

bool Permutation::is_semi_regular() const {
    auto cs = cycles();
    for (const auto& c : cs)
        if (c.size() != cs.front().size()) return false;
    return true;
}

CycleType::CycleType(std::vector<uint32_t> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end());
    for (uint32_t p : parts_) {
        if (p == 0) throw std::invalid_argument("zero part in cycle type");
        total_ += p;
    }
}

CycleType CycleType::of(const Permutation& p) {
    std::vector<uint32_t> parts;
    for (const auto& c : p.cycles()) parts.push_back(static_cast<uint32_t>(c.size()));
    return CycleType(std::move(parts));
}

bool CycleType::operator<(const CycleType& o) const {
    return parts_ < o.parts_;
}

std::string CycleType::to_string() const {
    std::ostringstream ss;
    ss << '[';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) ss << ',';
        ss << parts_[i];
    }
    ss << ']';
    return ss.str();
}

CycleType CycleType::parse(const std::string& s, uint32_t expected_total) {
    std::vector<uint32_t> parts;
    std::string tok;
    for (char ch : s) {
        if (ch >= '0' && ch <= '9') tok += ch;
        else {
            if (!tok.empty()) parts.push_back(static_cast<uint32_t>(std::stoul(tok)));
            tok.clear();
        }
    }
    if (!tok.empty()) parts.push_back(static_cast<uint32_t>(std::stoul(tok)));
    CycleType t{std::move(parts)};
    if (expected_total && t.total() != expected_total)
        throw std::invalid_argument("cycle type " + t.to_string() + " does not sum to " +
                                    std::to_string(expected_total));
    return t;
}

BigInt CycleType::conjugacy_class_size() const {
    std::map<uint32_t, uint32_t> mult;
    for (uint32_t p : parts_) ++mult[p];
    BigInt denom = 1;
    for (auto [k, a] : mult) {
        for (uint32_t i = 0; i < a; ++i) denom *= k;
        denom *= factorial(a);
    }
    return factorial(total_) / denom;
}

Permutation CycleType::representative() const {
    std::vector<std::vector<uint32_t>> cyc;
    uint32_t base = 0;
    for (uint32_t len : parts_) {
        std::vector<uint32_t> c(len);
        std::iota(c.begin(), c.end(), base);
        cyc.push_back(std::move(c));
        base += len;
    }
    return Permutation::from_cycles(cyc, total_);
}

uint64_t euler_phi(uint64_t k) {
    uint64_t result = k;
    for (uint64_t p = 2; p * p <= k; ++p) {
        if (k % p == 0) {
            while (k % p == 0) k /= p;
            result -= result / p;
        }
    }
    if (k > 1) result -= result / k;
    return result;
}

BigInt factorial(uint32_t n) {
    BigInt r = 1;
    for (uint32_t i = 2; i <= n; ++i) r *= i;
    return r;
}

static void partitions_rec(uint32_t n, uint32_t maxp, std::vector<uint32_t>& cur,
                           std::vector<CycleType>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (uint32_t p = std::min(n, maxp); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<CycleType> all_cycle_types(uint32_t n) {
    std::vector<CycleType> out;
    std::vector<uint32_t> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

}  // namespace cmaps
