#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mono {

// Exact binomial coefficient; the ranges used here (n <= ~40) fit in 64 bits.
inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

// A vertex labeled by an r-subset of the ground set [1..ground_n].
// Elements are kept strictly ascending.
struct SubsetVertex {
    std::vector<int> elements;
    int ground_n = 0;

    int r() const { return static_cast<int>(elements.size()); }
    bool operator==(const SubsetVertex& o) const {
        return elements == o.elements && ground_n == o.ground_n;
    }
};

inline void validate_subset(const std::vector<int>& elems, int ground_n) {
    int prev = 0;
    for (int e : elems) {
        if (e < 1 || e > ground_n)
            throw std::invalid_argument("subset element " + std::to_string(e) +
                                        " outside ground set [1.." + std::to_string(ground_n) + "]");
        if (e <= prev) throw std::invalid_argument("subset elements must be strictly ascending");
        prev = e;
    }
}

// Colexicographic rank of an ascending r-subset of [1..n]:
// rank(S) = sum_i C(s_i - 1, i) over 1-based positions i.
inline std::uint64_t colex_rank(const std::vector<int>& elems) {
    std::uint64_t rank = 0;
    for (int i = 0; i < static_cast<int>(elems.size()); ++i)
        rank += binomial(elems[i] - 1, i + 1);
    return rank;
}

// Inverse of colex_rank for r-subsets (elements 1-based).
inline std::vector<int> colex_unrank(std::uint64_t rank, int r) {
    std::vector<int> out(r);
    for (int i = r; i >= 1; --i) {
        int c = i;  // smallest candidate with C(c-1, i) = 0
        while (binomial(c, i) <= rank) ++c;
        out[i - 1] = c;
        rank -= binomial(c - 1, i);
    }
    return out;
}

// Sorted-vector set algebra used by the induced-path constructions.
inline std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline std::vector<int> set_intersection(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline std::vector<int> set_difference(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
    int count = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else { ++count; ++ia; ++ib; }
    }
    return count;
}

inline std::string subset_to_string(const std::vector<int>& elems) {
    std::string s = "{";
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(elems[i]);
    }
    s += '}';
    return s;
}

}  // namespace mono
