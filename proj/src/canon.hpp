#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "k4census/graph.hpp"
#include "k4census/search.hpp"

namespace k4c::detail {

using Mask = std::uint32_t;
using Key = unsigned __int128;
using Labeling = std::array<std::uint8_t, kCanonicalLimit>;

/// Dense adjacency for graphs of order <= kCanonicalLimit.
struct SmallGraph {
    int n = 0;
    std::array<Mask, kCanonicalLimit> adj{};

    bool adjacent(int u, int v) const { return (adj[u] >> v) & 1U; }
    int degree(int v) const { return std::popcount(adj[v]); }
    Mask all() const { return n == 32 ? ~Mask{0} : (Mask{1} << n) - 1; }
};

SmallGraph to_small(const Graph& g);
Graph from_small(const SmallGraph& g);

/// Ordered partition of the vertex set; cells[0..count) in order.
struct Partition {
    std::array<Mask, kCanonicalLimit> cells{};
    int count = 0;

    static Partition unit(const SmallGraph& g) {
        Partition p;
        if (g.n > 0) {
            p.cells[0] = g.all();
            p.count = 1;
        }
        return p;
    }
};

struct CanonResult {
    /// Graph6 bit string of the canonical relabeling, left-aligned (MSB first).
    Key key = 0;
    Labeling labeling{};
    std::vector<Labeling> automorphisms;
};

/// Individualization-refinement search for the least leaf key reachable from
/// `initial`. Any isomorphism-invariant initial partition gives an invariant result.
CanonResult canonize(const SmallGraph& g, const Partition& initial);
CanonResult canonize(const SmallGraph& g);

/// Graph6 text of g relabeled by `labeling`.
std::string graph6_of(const SmallGraph& g, const Labeling& labeling);

bool same_orbit(const SmallGraph& g, int u, int v, const std::vector<Labeling>& known_automorphisms);

}  // namespace k4c::detail
