#pragma once
#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "matdec/errors.hpp"

namespace matdec {

// Subsets of a ground set are bitmasks: bit i stands for the i-th smallest
// element id. Exhaustive loops iterate masks in increasing numeric order,
// which visits elements in ascending id order within each subset.
using subset_t = uint32_t;

inline int popcount(subset_t x) { return __builtin_popcount(x); }
inline subset_t lowbit(subset_t x) { return x & (~x + 1u); }

struct GroundSet {
    std::vector<int> ids;  // strictly ascending, non-negative

    GroundSet() = default;

    explicit GroundSet(std::vector<int> given) : ids(std::move(given)) {
        std::sort(ids.begin(), ids.end());
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (ids[i] < 0) throw std::domain_error("element ids must be non-negative");
            if (i && ids[i] == ids[i - 1])
                throw std::domain_error("duplicate element id " + std::to_string(ids[i]));
        }
        if (ids.size() > 31u) throw std::domain_error("ground set exceeds 31 elements");
    }

    int size() const { return static_cast<int>(ids.size()); }
    subset_t full() const { return size() == 0 ? 0u : (subset_t{1} << size()) - 1u; }

    int index_of(int id) const {
        auto it = std::lower_bound(ids.begin(), ids.end(), id);
        if (it == ids.end() || *it != id) return -1;
        return static_cast<int>(it - ids.begin());
    }

    subset_t mask_of(const std::vector<int>& elems) const {
        subset_t m = 0;
        for (int id : elems) {
            int i = index_of(id);
            if (i < 0) throw std::domain_error("unknown element id " + std::to_string(id));
            m |= subset_t{1} << i;
        }
        return m;
    }

    std::vector<int> ids_of(subset_t mask) const {
        std::vector<int> out;
        for (int i = 0; i < size(); ++i)
            if (mask >> i & 1u) out.push_back(ids[i]);
        return out;
    }

    bool operator==(const GroundSet& o) const { return ids == o.ids; }
};

inline GroundSet iota_ground(int n, int first = 0) {
    std::vector<int> ids(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ids[i] = first + i;
    return GroundSet(std::move(ids));
}

// Order on subsets used wherever a canonical representative is needed:
// lexicographic on the ascending element sequences, shorter prefix first.
// E.g. {} < {1} < {1,3} < {2}. Works directly on index masks.
inline bool lex_subset_less(subset_t a, subset_t b) {
    if (a == b) return false;
    subset_t diff = a ^ b;
    subset_t low = lowbit(diff);
    subset_t above = ~(low | (low - 1u));
    if (a & low) return (b & above) != 0;  // b continues past the difference?
    return (a & above) == 0;               // a is the ended prefix?
}

// Every subset of the mask in increasing numeric order (2^popcount entries).
inline std::vector<subset_t> all_subsets(subset_t m) {
    std::vector<subset_t> out;
    subset_t s = 0;
    while (true) {
        out.push_back(s);
        if (s == m) break;
        s = (s - m) & m;  // next subset of m
    }
    return out;
}

inline std::string subset_to_string(const GroundSet& g, subset_t mask) {
    std::string s = "{";
    bool first = true;
    for (int id : g.ids_of(mask)) {
        if (!first) s += ",";
        s += std::to_string(id);
        first = false;
    }
    return s + "}";
}

}  // namespace matdec
