#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace k4c {

using Vertex = std::uint32_t;
using Word = std::uint64_t;

inline constexpr std::size_t kMaxOrder = std::size_t{1} << 16;

class GraphBuilder;

/// Immutable simple graph. Each vertex owns one row of `words()` 64-bit
/// words holding its neighbor bitset; rows are symmetric and loop-free.
class Graph {
public:
    Graph() = default;

    std::size_t order() const noexcept { return n_; }
    std::uint64_t size() const noexcept { return m_; }
    std::size_t words() const noexcept { return words_; }

    std::span<const Word> row(Vertex v) const noexcept {
        return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
    }

    bool adjacent(Vertex u, Vertex v) const noexcept {
        return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1U;
    }

    std::uint32_t degree(Vertex v) const noexcept { return degrees_[v]; }
    std::span<const std::uint32_t> degrees() const noexcept { return degrees_; }

    std::vector<Vertex> neighbors(Vertex v) const;

    /// Calls f(u, v) for every edge with u < v, in row-major order.
    template <typename F>
    void for_each_edge(F&& f) const {
        for (Vertex u = 0; u < n_; ++u) {
            auto r = row(u);
            for (std::size_t w = (u + 1) >> 6; w < words_; ++w) {
                Word bits = r[w];
                if (w == ((u + 1) >> 6)) bits &= ~Word{0} << ((u + 1) & 63);
                while (bits) {
                    Vertex v = static_cast<Vertex>(w * 64 + std::countr_zero(bits));
                    bits &= bits - 1;
                    f(u, v);
                }
            }
        }
    }

    bool is_regular() const noexcept;

    friend bool operator==(const Graph& a, const Graph& b) noexcept {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

private:
    friend class GraphBuilder;

    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::uint64_t m_ = 0;
    std::vector<Word> bits_;
    std::vector<std::uint32_t> degrees_;
};

/// Mutable staging area for a Graph. `build()` snapshots the current state.
class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t n);
    explicit GraphBuilder(const Graph& g);

    std::size_t order() const noexcept { return n_; }

    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const;

    std::span<const Word> row(Vertex v) const noexcept {
        return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
    }

    Graph build() const;

private:
    void check_pair(Vertex u, Vertex v) const;

    std::size_t n_;
    std::size_t words_;
    std::vector<Word> bits_;
};

/// Popcount of the intersection of two equal-length rows.
inline std::uint32_t intersection_count(std::span<const Word> a, std::span<const Word> b) noexcept {
    std::uint32_t c = 0;
    for (std::size_t w = 0; w < a.size(); ++w) c += static_cast<std::uint32_t>(std::popcount(a[w] & b[w]));
    return c;
}

/// Tags which hypothesis a graph is known to satisfy.
enum class GraphFamily { arbitrary, complement_triangle_free };

Graph complement(const Graph& g);
bool is_triangle_free(const Graph& g);

/// True iff g has no three pairwise nonadjacent vertices. Scans pairs of
/// non-neighbors directly, independent of `complement`/`is_triangle_free`.
bool has_independence_at_most_2(const Graph& g);

GraphFamily classify(const Graph& g);

Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Relabels g so that new vertex i is old vertex perm[i].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

Graph make_cycle(std::size_t n);
Graph make_complete(std::size_t n);
Graph make_path(std::size_t n);
Graph make_star(std::size_t leaves);
Graph make_petersen();
Graph make_empty(std::size_t n);

/// Uniform G(n, 1/2)-style graph with edge probability num/den, seeded.
Graph random_graph(std::size_t n, std::uint64_t seed, std::uint64_t num = 1, std::uint64_t den = 2);

/// Complement of a seeded maximal triangle-free graph. Non-edges are visited
/// in a seeded shuffled order; each is added with probability
/// `target_density` when it closes no triangle, then a second greedy pass in
/// the same order makes the triangle-free graph maximal.
Graph random_complement_triangle_free(std::size_t n, std::uint64_t seed, const mpq_class& target_density);

}  // namespace k4c
