#pragma once

#include <cstdint>
#include <vector>

#include "k4census/count.hpp"
#include "k4census/graph.hpp"

namespace k4c {

/// Order-3 and order-4 induced-subgraph statistics of one graph.
struct CensusRecord {
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    Count t3 = 0;    // triangles
    Count t3p = 0;   // induced 3-sets with exactly 2 edges
    Count t3pp = 0;  // induced 3-sets with exactly 1 edge
    Count i3 = 0;    // independent 3-sets
    Count t4 = 0;    // 4-cliques
    Count t4p = 0;   // induced 4-sets with exactly 5 edges (K4 minus an edge)

    friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

/// t[i] = number of triangles through vertex i = e(G[N_i]).
struct VertexTriangleProfile {
    std::vector<Count> t;
};

/// Census plus the per-vertex profile, produced in one pass.
struct FullCensus {
    CensusRecord record;
    VertexTriangleProfile profile;
};

/// Bitset census. Work is split into contiguous vertex ranges over `threads`
/// workers; the integer partial sums make the result thread-count independent.
CensusRecord census(const Graph& g, unsigned threads = 1);
FullCensus full_census(const Graph& g, unsigned threads = 1);

/// Enumerates every 3- and 4-subset. Test oracle; cost C(n,4).
CensusRecord census_bruteforce(const Graph& g);

VertexTriangleProfile vertex_triangles(const Graph& g, unsigned threads = 1);

/// |N_i ∩ N_j|. Throws DomainError when i == j.
std::uint32_t codegree(const Graph& g, Vertex i, Vertex j);

/// Sum over edges {i,j} of d_i * d_j.
Count edge_degree_product_sum(const Graph& g);

/// Number of edges of g induced on the vertex set `mask` (a row-shaped bitset).
Count induced_edge_count(const Graph& g, std::span<const Word> mask);

}  // namespace k4c
