#include "k4census/census.hpp"

#include <algorithm>
#include <thread>

#include "k4census/errors.hpp"

namespace k4c {

namespace {

struct Partial {
    Count edge_clique_sum = 0;     // sum over edges of e(G[N_u ∩ N_v]) = 6 t4
    Count nonedge_clique_sum = 0;  // sum over non-edges of e(G[N_u ∩ N_v]) = t4'
};

// Runs body(worker) on `threads` workers and waits. threads <= 1 runs inline.
template <typename Body>
void run_workers(unsigned threads, Body&& body) {
    if (threads <= 1) {
        body(0U);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back([&body, w] { body(w); });
}

unsigned clamp_threads(unsigned threads, std::size_t n) {
    if (threads == 0) threads = 1;
    return static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
}

std::vector<Count> triangle_profile(const Graph& g, unsigned threads) {
    const std::size_t n = g.order();
    std::vector<Count> t(n, 0);
    threads = clamp_threads(threads, n);
    run_workers(threads, [&](unsigned worker) {
        for (Vertex v = worker; v < n; v += threads) {
            auto rv = g.row(v);
            std::uint64_t twice = 0;
            for (Vertex u : g.neighbors(v)) twice += intersection_count(rv, g.row(u));
            t[v] = twice / 2;
        }
    });
    return t;
}

}  // namespace

Count induced_edge_count(const Graph& g, std::span<const Word> mask) {
    std::uint64_t twice = 0;
    for (std::size_t w = 0; w < mask.size(); ++w) {
        Word bits = mask[w];
        while (bits) {
            auto k = static_cast<Vertex>(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
            twice += intersection_count(g.row(k), mask);
        }
    }
    return twice / 2;
}

VertexTriangleProfile vertex_triangles(const Graph& g, unsigned threads) {
    return {triangle_profile(g, threads)};
}

FullCensus full_census(const Graph& g, unsigned threads) {
    const std::size_t n = g.order();
    const std::size_t words = g.words();
    threads = clamp_threads(threads, n);

    FullCensus out;
    out.profile.t = triangle_profile(g, threads);

    std::vector<Partial> partial(threads);
    run_workers(threads, [&](unsigned worker) {
        std::vector<Word> mask(words);
        Partial acc;
        for (Vertex u = worker; u < n; u += threads) {
            auto ru = g.row(u);
            for (Vertex v = u + 1; v < n; ++v) {
                auto rv = g.row(v);
                bool any = false;
                for (std::size_t w = 0; w < words; ++w) {
                    mask[w] = ru[w] & rv[w];
                    any |= mask[w] != 0;
                }
                if (!any) continue;
                Count e = induced_edge_count(g, mask);
                if (g.adjacent(u, v))
                    acc.edge_clique_sum = checked_add(acc.edge_clique_sum, e);
                else
                    acc.nonedge_clique_sum = checked_add(acc.nonedge_clique_sum, e);
            }
        }
        partial[worker] = acc;
    });

    Count edge_sum = 0;
    Count nonedge_sum = 0;
    for (const auto& p : partial) {
        edge_sum = checked_add(edge_sum, p.edge_clique_sum);
        nonedge_sum = checked_add(nonedge_sum, p.nonedge_clique_sum);
    }
    if (edge_sum % 6 != 0) throw Error("internal: edge clique sum " + to_string(edge_sum) + " not divisible by 6");

    Count triangle_sum = 0;
    for (Count ti : out.profile.t) triangle_sum = checked_add(triangle_sum, ti);
    if (triangle_sum % 3 != 0) throw Error("internal: vertex triangle sum not divisible by 3");

    // Cherries: each triangle has 3 centers, each induced path one.
    Count cherries = 0;
    for (std::uint32_t d : g.degrees()) cherries = checked_add(cherries, binomial(d, 2));

    CensusRecord& r = out.record;
    r.n = n;
    r.m = g.size();
    r.t3 = triangle_sum / 3;
    r.t4 = edge_sum / 6;
    r.t4p = nonedge_sum;
    r.t3p = checked_sub(cherries, checked_mul(3, r.t3));
    // Sum over 3-sets of their edge count is (n-2)m = 3 t3 + 2 t3' + t3''.
    const Count edge_incidences = n >= 2 ? checked_mul(n - 2, r.m) : 0;
    r.t3pp = checked_sub(edge_incidences, checked_add(checked_mul(3, r.t3), checked_mul(2, r.t3p)));
    r.i3 = checked_sub(binomial(n, 3), checked_add(checked_add(r.t3, r.t3p), r.t3pp));
    return out;
}

CensusRecord census(const Graph& g, unsigned threads) { return full_census(g, threads).record; }

CensusRecord census_bruteforce(const Graph& g) {
    const auto n = static_cast<Vertex>(g.order());
    CensusRecord r;
    r.n = n;
    r.m = g.size();
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) {
            const int ab = g.adjacent(a, b);
            for (Vertex c = b + 1; c < n; ++c) {
                const int abc = ab + g.adjacent(a, c) + g.adjacent(b, c);
                switch (abc) {
                    case 3: ++r.t3; break;
                    case 2: ++r.t3p; break;
                    case 1: ++r.t3pp; break;
                    default: ++r.i3; break;
                }
                for (Vertex d = c + 1; d < n; ++d) {
                    const int abcd = abc + g.adjacent(a, d) + g.adjacent(b, d) + g.adjacent(c, d);
                    if (abcd == 6) ++r.t4;
                    else if (abcd == 5) ++r.t4p;
                }
            }
        }
    return r;
}

std::uint32_t codegree(const Graph& g, Vertex i, Vertex j) {
    if (i == j) throw DomainError("codegree requires distinct vertices");
    if (i >= g.order() || j >= g.order()) throw DomainError("vertex out of range");
    return intersection_count(g.row(i), g.row(j));
}

Count edge_degree_product_sum(const Graph& g) {
    Count s = 0;
    g.for_each_edge([&](Vertex u, Vertex v) {
        s = checked_add(s, checked_mul(g.degree(u), g.degree(v)));
    });
    return s;
}

}  // namespace k4c
