#pragma once

// Test-only isomorphism oracle: no refinement, no pruning, just all n! labelings.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "k4census/graph.hpp"

namespace brute {

/// Edge mask over pairs (i < j) in colex order: pair index of (i, j) is j(j-1)/2 + i.
inline int pair_index(int i, int j) {
    if (i > j) std::swap(i, j);
    return j * (j - 1) / 2 + i;
}

inline std::uint64_t mask_of(const k4c::Graph& g) {
    std::uint64_t m = 0;
    g.for_each_edge([&](k4c::Vertex u, k4c::Vertex v) { m |= std::uint64_t{1} << pair_index(int(u), int(v)); });
    return m;
}

inline k4c::Graph graph_of(int n, std::uint64_t mask) {
    k4c::GraphBuilder b(static_cast<std::size_t>(n));
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((mask >> pair_index(i, j)) & 1U) b.add_edge(k4c::Vertex(i), k4c::Vertex(j));
    return b.build();
}

inline bool triangle_free(int n, std::uint64_t mask) {
    auto e = [&](int i, int j) { return (mask >> pair_index(i, j)) & 1U; };
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (e(a, b))
                for (int c = b + 1; c < n; ++c)
                    if (e(a, c) && e(b, c)) return false;
    return true;
}

/// For every permutation, the table mapping old pair index -> new pair index.
inline std::vector<std::vector<int>> pair_maps(int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> maps;
    do {
        std::vector<int> m(static_cast<std::size_t>(n * (n - 1) / 2));
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) m[pair_index(i, j)] = pair_index(perm[i], perm[j]);
        maps.push_back(std::move(m));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return maps;
}

inline std::uint64_t apply(const std::vector<int>& map, std::uint64_t mask) {
    std::uint64_t out = 0;
    while (mask) {
        int k = __builtin_ctzll(mask);
        mask &= mask - 1;
        out |= std::uint64_t{1} << map[k];
    }
    return out;
}

/// Least mask over all relabelings: a complete invariant.
inline std::uint64_t min_key(std::uint64_t mask, const std::vector<std::vector<int>>& maps) {
    std::uint64_t best = mask;
    for (const auto& m : maps) best = std::min(best, apply(m, mask));
    return best;
}

/// Isomorphism classes of triangle-free graphs of order n by marking every
/// relabeling of each unseen labeled graph. Returns the class min-keys.
inline std::set<std::uint64_t> triangle_free_classes(int n) {
    const auto maps = pair_maps(n);
    const int pairs = n * (n - 1) / 2;
    std::vector<bool> seen(std::size_t{1} << pairs, false);
    std::set<std::uint64_t> classes;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        if (seen[mask] || !triangle_free(n, mask)) continue;
        std::uint64_t best = mask;
        for (const auto& m : maps) {
            auto image = apply(m, mask);
            seen[image] = true;
            best = std::min(best, image);
        }
        classes.insert(best);
    }
    return classes;
}

}  // namespace brute
