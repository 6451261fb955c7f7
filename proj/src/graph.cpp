#include "k4census/graph.hpp"

#include <algorithm>
#include <numeric>

#include "k4census/errors.hpp"
#include "rng.hpp"

namespace k4c {

namespace {

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

constexpr std::string_view kGraph6Header = ">>graph6<<";

}  // namespace

// ---------------------------------------------------------------------------
// Graph / GraphBuilder

std::vector<Vertex> Graph::neighbors(Vertex v) const {
    std::vector<Vertex> out;
    out.reserve(degrees_[v]);
    auto r = row(v);
    for (std::size_t w = 0; w < words_; ++w) {
        Word bits = r[w];
        while (bits) {
            out.push_back(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

bool Graph::is_regular() const noexcept {
    return std::adjacent_find(degrees_.begin(), degrees_.end(), std::not_equal_to<>()) == degrees_.end();
}

GraphBuilder::GraphBuilder(std::size_t n) : n_(n), words_(words_for(n)), bits_(n * words_for(n), 0) {
    if (n > kMaxOrder) throw CapabilityError("graph order " + std::to_string(n) + " exceeds 65536");
}

GraphBuilder::GraphBuilder(const Graph& g) : n_(g.n_), words_(g.words_), bits_(g.bits_) {}

void GraphBuilder::check_pair(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_) throw DomainError("vertex out of range");
    if (u == v) throw DomainError("loops are not allowed");
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    bits_[u * words_ + (v >> 6)] |= Word{1} << (v & 63);
    bits_[v * words_ + (u >> 6)] |= Word{1} << (u & 63);
}

void GraphBuilder::remove_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    bits_[u * words_ + (v >> 6)] &= ~(Word{1} << (v & 63));
    bits_[v * words_ + (u >> 6)] &= ~(Word{1} << (u & 63));
}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const {
    check_pair(u, v);
    return (bits_[u * words_ + (v >> 6)] >> (v & 63)) & 1U;
}

Graph GraphBuilder::build() const {
    Graph g;
    g.n_ = n_;
    g.words_ = words_;
    g.bits_ = bits_;
    g.degrees_.resize(n_);
    std::uint64_t total = 0;
    for (std::size_t v = 0; v < n_; ++v) {
        std::uint32_t d = 0;
        for (std::size_t w = 0; w < words_; ++w) d += static_cast<std::uint32_t>(std::popcount(bits_[v * words_ + w]));
        g.degrees_[v] = d;
        total += d;
    }
    g.m_ = total / 2;
    return g;
}

// ---------------------------------------------------------------------------
// Structure

Graph complement(const Graph& g) {
    const std::size_t n = g.order();
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) b.add_edge(u, v);
    return b.build();
}

bool is_triangle_free(const Graph& g) {
    bool found = false;
    g.for_each_edge([&](Vertex u, Vertex v) {
        if (!found && intersection_count(g.row(u), g.row(v)) != 0) found = true;
    });
    return !found;
}

bool has_independence_at_most_2(const Graph& g) {
    const std::size_t n = g.order();
    const std::size_t words = g.words();
    // For each non-adjacent pair u < v, look for a w that is adjacent to neither.
    std::vector<Word> common(words);
    for (Vertex u = 0; u < n; ++u) {
        auto ru = g.row(u);
        for (Vertex v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v)) continue;
            auto rv = g.row(v);
            for (std::size_t w = 0; w < words; ++w) common[w] = ~(ru[w] | rv[w]);
            common[u >> 6] &= ~(Word{1} << (u & 63));
            common[v >> 6] &= ~(Word{1} << (v & 63));
            if (n % 64) common[words - 1] &= (Word{1} << (n % 64)) - 1;
            for (Word w : common)
                if (w) return false;
        }
    }
    return true;
}

GraphFamily classify(const Graph& g) {
    return has_independence_at_most_2(g) ? GraphFamily::complement_triangle_free : GraphFamily::arbitrary;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    const std::size_t n = g.order();
    if (perm.size() != n) throw DomainError("permutation length differs from graph order");
    GraphBuilder b(n);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (g.adjacent(perm[i], perm[j])) b.add_edge(i, j);
    return b.build();
}

// ---------------------------------------------------------------------------
// graph6

std::string to_graph6(const Graph& g) {
    const std::size_t n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    out.reserve(out.size() + (n * (n - (n ? 1 : 0)) / 2 + 5) / 6);
    int acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

Graph from_graph6(std::string_view text) {
    if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
    if (text.ends_with('\n')) text.remove_suffix(1);
    if (text.ends_with('\r')) text.remove_suffix(1);

    std::size_t pos = 0;
    auto next = [&](const char* what) -> int {
        if (pos >= text.size()) throw ParseError(pos, std::string("unexpected end of input in ") + what);
        int c = static_cast<unsigned char>(text[pos]);
        if (c < 63 || c > 126) throw ParseError(pos, "byte outside 63..126");
        ++pos;
        return c - 63;
    };

    std::size_t n = 0;
    int first = next("length");
    if (first < 63) {
        n = static_cast<std::size_t>(first);
    } else {
        int second = next("length");
        if (second == 63) {
            for (int k = 0; k < 6; ++k) n = (n << 6) | static_cast<std::size_t>(next("length"));
        } else {
            n = static_cast<std::size_t>(second);
            for (int k = 0; k < 2; ++k) n = (n << 6) | static_cast<std::size_t>(next("length"));
        }
        if (n <= 62) throw ParseError(0, "non-minimal length prefix");
    }
    if (n > kMaxOrder) throw CapabilityError("graph order " + std::to_string(n) + " exceeds 65536");

    const std::size_t bits = n * (n ? n - 1 : 0) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    const std::size_t header = pos;
    if (text.size() - header < bytes) throw ParseError(text.size(), "edge data truncated");
    if (text.size() - header > bytes) throw ParseError(header + bytes, "trailing garbage");

    std::vector<int> data(bytes);
    for (auto& value : data) value = next("edge data");

    GraphBuilder b(n);
    std::size_t k = 0;
    auto bit_at = [&](std::size_t idx) { return (data[idx / 6] >> (5 - idx % 6)) & 1; };
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++k)
            if (bit_at(k)) b.add_edge(i, j);
    for (; k < bytes * 6; ++k)
        if (bit_at(k)) throw ParseError(header + k / 6, "nonzero padding bits");
    return b.build();
}

// ---------------------------------------------------------------------------
// Named graphs and generators

Graph make_empty(std::size_t n) { return GraphBuilder(n).build(); }

Graph make_cycle(std::size_t n) {
    GraphBuilder b(n);
    if (n >= 3)
        for (Vertex v = 0; v < n; ++v) b.add_edge(v, static_cast<Vertex>((v + 1) % n));
    return b.build();
}

Graph make_complete(std::size_t n) {
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
    return b.build();
}

Graph make_path(std::size_t n) {
    GraphBuilder b(n);
    for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
    return b.build();
}

Graph make_star(std::size_t leaves) {
    GraphBuilder b(leaves + 1);
    for (Vertex v = 1; v <= leaves; ++v) b.add_edge(0, v);
    return b.build();
}

Graph make_petersen() {
    GraphBuilder b(10);
    for (Vertex v = 0; v < 5; ++v) {
        b.add_edge(v, (v + 1) % 5);
        b.add_edge(v, v + 5);
        b.add_edge(v + 5, (v + 2) % 5 + 5);
    }
    return b.build();
}

Graph random_graph(std::size_t n, std::uint64_t seed, std::uint64_t num, std::uint64_t den) {
    if (den == 0 || num > den) throw DomainError("edge probability must lie in [0, 1]");
    detail::Rng rng(seed);
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.bernoulli(num, den)) b.add_edge(u, v);
    return b.build();
}

Graph random_complement_triangle_free(std::size_t n, std::uint64_t seed, const mpq_class& target_density) {
    if (target_density < 0 || target_density > 1) throw DomainError("target density must lie in [0, 1]");
    mpz_class num_z = target_density.get_num();
    mpz_class den_z = target_density.get_den();
    if (!den_z.fits_ulong_p()) throw DomainError("target density denominator too large");
    const std::uint64_t num = num_z.get_ui();
    const std::uint64_t den = den_z.get_ui();

    detail::Rng rng(seed);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    pairs.reserve(n * (n ? n - 1 : 0) / 2);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    rng.shuffle(pairs);

    GraphBuilder h(n);
    auto closes_triangle = [&](Vertex u, Vertex v) { return intersection_count(h.row(u), h.row(v)) != 0; };
    for (auto [u, v] : pairs)
        if (rng.bernoulli(num, den) && !closes_triangle(u, v)) h.add_edge(u, v);
    for (auto [u, v] : pairs)
        if (!h.has_edge(u, v) && !closes_triangle(u, v)) h.add_edge(u, v);
    return complement(h.build());
}

}  // namespace k4c
