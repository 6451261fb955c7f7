#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "k4census/constructions.hpp"
#include "k4census/count.hpp"
#include "k4census/graph.hpp"

namespace k4c {

inline constexpr std::size_t kCanonicalLimit = 16;
inline constexpr std::size_t kExhaustiveLimit = 11;
inline constexpr std::size_t kWitnessCap = 100;

/// Canonical graph6 string: isomorphic graphs, and only those, share it.
///
/// The string is the lexicographically least graph6 over every labeling that
/// respects the equitable ordered partition obtained by degree refinement
/// plus individualization. Orbit pruning with discovered automorphisms keeps
/// the search tree small.
struct CanonicalForm {
    std::string graph6;
    /// labeling[i] is the original vertex placed at canonical position i.
    std::vector<Vertex> labeling;

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) { return a.graph6 == b.graph6; }
    friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) { return a.graph6 <=> b.graph6; }
};

/// Throws CapabilityError for n > kCanonicalLimit.
CanonicalForm canonical_form(const Graph& g);

/// True iff u and v lie in the same orbit of Aut(g). n <= kCanonicalLimit.
bool same_orbit(const Graph& g, Vertex u, Vertex v);

/// Visits one representative per isomorphism class of triangle-free graphs
/// of order n (canonical augmentation). Throws CapabilityError for n > kExhaustiveLimit.
void for_each_triangle_free(std::size_t n, const std::function<void(const Graph&)>& visit);
std::vector<Graph> enumerate_triangle_free(std::size_t n);

struct SearchResult {
    std::uint64_t n = 0;
    Count f_value = 0;
    bool exhaustive = false;
    std::vector<std::string> witnesses;  // canonical graph6, ascending, at most kWitnessCap
    Count graphs_examined = 0;
    std::uint64_t elapsed_ms = 0;
};

/// Minimum t4 over all graphs of order n with triangle-free complement.
/// Results are identical for every thread count.
SearchResult f_exact(std::size_t n, unsigned threads = 1);

struct LocalSearchOptions {
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::uint64_t step_budget = 0;
    std::uint32_t restarts = 0;
};

/// Toggle search on the triangle-free complement H: each step picks a random
/// pair; an H-non-edge closing no triangle is added, an H-edge removed, and the
/// move is kept when t4 of the complement does not increase. Runs once from the
/// most balanced pentagon blow-up and once per restart from a seeded random
/// start; the best final state wins (fewer K4s, then smaller canonical graph6).
SearchResult local_search_min_t4(const LocalSearchOptions& options);

struct BlowupOptimum {
    BlowupSpec spec;
    Count t4 = 0;
};

/// Minimizes the closed-form K4 count over all 5-part compositions of n.
/// Ties prefer the smallest sum of squared parts, then the lexicographically
/// smallest part list (which is also the least dihedral image).
BlowupOptimum blowup_optimize(std::size_t n);

/// Most balanced parts: n / 5 each, the first n % 5 parts one larger.
BlowupSpec balanced_blowup_spec(std::size_t n);

}  // namespace k4c
