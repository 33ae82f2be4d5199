#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace mono {

// Small dynamic bitset sized at construction. Used for adjacency rows and
// vertex sets, so intersection/containment tests are word-parallel.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }

    void set(int i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : w_) if (w) return true;
        return false;
    }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool is_subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    // this &= ~o
    Bitset& subtract(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    bool operator==(const Bitset& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }

    // First set bit at position >= from, or -1.
    int next(int from = 0) const {
        if (from >= nbits_) return -1;
        int word = from >> 6;
        std::uint64_t cur = w_[word] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (cur) {
                int bit = (word << 6) + std::countr_zero(cur);
                return bit < nbits_ ? bit : -1;
            }
            if (++word >= static_cast<int>(w_.size())) return -1;
            cur = w_[word];
        }
    }

    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    int nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace mono
