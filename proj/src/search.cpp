#include "k4census/search.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <set>
#include <thread>
#include <tuple>

#include "canon.hpp"
#include "k4census/census.hpp"
#include "k4census/errors.hpp"
#include "rng.hpp"

namespace k4c {

using detail::Key;
using detail::Mask;
using detail::SmallGraph;

CanonicalForm canonical_form(const Graph& g) {
    const SmallGraph s = detail::to_small(g);
    const auto result = detail::canonize(s);
    CanonicalForm out;
    out.graph6 = detail::graph6_of(s, result.labeling);
    out.labeling.assign(result.labeling.begin(), result.labeling.begin() + s.n);
    return out;
}

bool same_orbit(const Graph& g, Vertex u, Vertex v) {
    const SmallGraph s = detail::to_small(g);
    if (u >= g.order() || v >= g.order()) throw DomainError("vertex out of range");
    return detail::same_orbit(s, static_cast<int>(u), static_cast<int>(v), {});
}

// ---------------------------------------------------------------------------
// Canonical augmentation over triangle-free graphs

namespace {

void check_exhaustive_limit(std::size_t n) {
    if (n > kExhaustiveLimit)
        throw CapabilityError("exhaustive enumeration supports n <= " + std::to_string(kExhaustiveLimit) + ", got " +
                              std::to_string(n));
}

SmallGraph with_new_vertex(const SmallGraph& parent, Mask neighborhood) {
    SmallGraph child = parent;
    const int v = parent.n;
    child.n = parent.n + 1;
    child.adj[v] = neighborhood;
    for (Mask rest = neighborhood; rest; rest &= rest - 1) child.adj[std::countr_zero(rest)] |= Mask{1} << v;
    return child;
}

// The new (last) vertex must share an Aut-orbit with the vertex placed last by
// the canonical labeling (always a maximum-degree vertex). Returns the child's
// canonical key when accepted.
std::optional<Key> canonical_extension_key(const SmallGraph& child) {
    const int v = child.n - 1;
    const auto canon = detail::canonize(child);
    const int w = canon.labeling[child.n - 1];
    if (w == v || detail::same_orbit(child, v, w, canon.automorphisms)) return canon.key;
    return std::nullopt;
}

template <typename Visit>
void extend(const SmallGraph& parent, int target, Visit& visit) {
    if (parent.n == target) {
        visit(parent);
        return;
    }
    int max_degree = 0;
    for (int u = 0; u < parent.n; ++u) max_degree = std::max(max_degree, parent.degree(u));

    std::set<Key> seen;
    // Independent sets S of the parent, built in increasing vertex order.
    auto each_independent = [&](auto&& self, int from, Mask chosen, Mask allowed) -> void {
        const int size = std::popcount(chosen);
        const Mask open = allowed & ~((Mask{1} << from) - 1);
        if (size + std::popcount(open) < max_degree) return;
        // The new vertex (degree |S|) must reach the child's maximum degree.
        bool feasible = size >= max_degree;
        for (int u = 0; u < parent.n && feasible; ++u)
            feasible = parent.degree(u) + static_cast<int>((chosen >> u) & 1U) <= size;
        if (feasible) {
            const SmallGraph child = with_new_vertex(parent, chosen);
            if (auto key = canonical_extension_key(child); key && seen.insert(*key).second)
                extend(child, target, visit);
        }
        for (int u = from; u < parent.n; ++u) {
            if (!((allowed >> u) & 1U)) continue;
            self(self, u + 1, chosen | (Mask{1} << u), allowed & ~parent.adj[u] & ~(Mask{1} << u));
        }
    };
    each_independent(each_independent, 0, 0, parent.all());
}

template <typename Visit>
void enumerate_small(int n, Visit& visit) {
    if (n == 0) {
        visit(SmallGraph{});
        return;
    }
    SmallGraph root;
    root.n = 1;
    extend(root, n, visit);
}

std::vector<SmallGraph> collect_level(int n) {
    std::vector<SmallGraph> out;
    auto keep = [&](const SmallGraph& g) { out.push_back(g); };
    enumerate_small(n, keep);
    return out;
}

// Number of independent 4-sets of h, i.e. K4s of its complement.
Count independent_quadruples(const SmallGraph& h) {
    const Mask all = h.all();
    std::array<Mask, kCanonicalLimit> non{};
    for (int v = 0; v < h.n; ++v) non[v] = all & ~h.adj[v] & ~(Mask{1} << v);
    auto above = [](int v) { return ~((Mask{2} << v) - 1); };
    std::uint64_t count = 0;
    for (int a = 0; a < h.n; ++a) {
        const Mask sa = non[a] & above(a);
        for (Mask rb = sa; rb; rb &= rb - 1) {
            const int b = std::countr_zero(rb);
            const Mask sb = sa & non[b] & above(b);
            for (Mask rc = sb; rc; rc &= rc - 1) {
                const int c = std::countr_zero(rc);
                count += static_cast<std::uint64_t>(std::popcount(sb & non[c] & above(c)));
            }
        }
    }
    return count;
}

SmallGraph complement_small(const SmallGraph& h) {
    SmallGraph g = h;
    for (int v = 0; v < h.n; ++v) g.adj[v] = h.all() & ~h.adj[v] & ~(Mask{1} << v);
    return g;
}

struct MinTracker {
    bool any = false;
    Count best = 0;
    std::set<std::string> witnesses;
    Count examined = 0;

    void offer(Count value, const std::function<std::string()>& witness) {
        if (any && value > best) return;
        if (!any || value < best) {
            any = true;
            best = value;
            witnesses.clear();
        }
        witnesses.insert(witness());
        if (witnesses.size() > kWitnessCap) witnesses.erase(std::prev(witnesses.end()));
    }

    void merge(const MinTracker& other) {
        examined += other.examined;
        if (!other.any) return;
        if (!any || other.best < best) {
            any = true;
            best = other.best;
            witnesses = other.witnesses;
        } else if (other.best == best) {
            witnesses.insert(other.witnesses.begin(), other.witnesses.end());
        }
        while (witnesses.size() > kWitnessCap) witnesses.erase(std::prev(witnesses.end()));
    }
};

}  // namespace

void for_each_triangle_free(std::size_t n, const std::function<void(const Graph&)>& visit) {
    check_exhaustive_limit(n);
    auto adapter = [&](const SmallGraph& s) { visit(detail::from_small(s)); };
    enumerate_small(static_cast<int>(n), adapter);
}

std::vector<Graph> enumerate_triangle_free(std::size_t n) {
    std::vector<Graph> out;
    for_each_triangle_free(n, [&](const Graph& g) { out.push_back(g); });
    return out;
}

SearchResult f_exact(std::size_t n, unsigned threads) {
    check_exhaustive_limit(n);
    const auto start = std::chrono::steady_clock::now();
    const int target = static_cast<int>(n);

    auto examine = [](MinTracker& tracker) {
        return [&tracker](const SmallGraph& h) {
            ++tracker.examined;
            tracker.offer(independent_quadruples(h), [&h] {
                const SmallGraph g = complement_small(h);
                return detail::graph6_of(g, detail::canonize(g).labeling);
            });
        };
    };

    MinTracker total;
    if (threads <= 1 || target < 4) {
        auto visit = examine(total);
        enumerate_small(target, visit);
    } else {
        // Subtrees below a fixed level are independent; round-robin them.
        const auto roots = collect_level(target - 2);
        std::vector<MinTracker> partial(threads);
        {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < threads; ++w)
                pool.emplace_back([&, w] {
                    auto visit = examine(partial[w]);
                    for (std::size_t i = w; i < roots.size(); i += threads) extend(roots[i], target, visit);
                });
        }
        for (const auto& p : partial) total.merge(p);
    }

    SearchResult r;
    r.n = n;
    r.exhaustive = true;
    r.f_value = total.best;
    r.witnesses.assign(total.witnesses.begin(), total.witnesses.end());
    r.graphs_examined = total.examined;
    r.elapsed_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
    return r;
}

// ---------------------------------------------------------------------------
// Local search

namespace {

class ToggleState {
public:
    explicit ToggleState(const Graph& g) : b_(g), n_(g.order()), mask_(g.words()) { t4_ = census(g).t4; }

    Count t4() const { return t4_; }
    Graph graph() const { return b_.build(); }

    // One random pair toggle; returns true when the move was kept.
    bool step(detail::Rng& rng) {
        if (n_ < 2) return false;
        auto u = static_cast<Vertex>(rng.below(n_));
        auto v = static_cast<Vertex>(rng.below(n_ - 1));
        if (v >= u) ++v;
        const Count cliques = common_clique_edges(u, v);
        if (b_.has_edge(u, v)) {
            // Dropping uv from G adds it to H; H must stay triangle-free.
            if (has_common_non_neighbor(u, v)) return false;
            b_.remove_edge(u, v);
            t4_ -= cliques;
            return true;
        }
        if (cliques != 0) return false;
        b_.add_edge(u, v);
        return true;
    }

private:
    Count common_clique_edges(Vertex u, Vertex v) {
        auto ru = b_.row(u);
        auto rv = b_.row(v);
        for (std::size_t w = 0; w < mask_.size(); ++w) mask_[w] = ru[w] & rv[w];
        std::uint64_t twice = 0;
        for (std::size_t w = 0; w < mask_.size(); ++w)
            for (Word bits = mask_[w]; bits; bits &= bits - 1)
                twice += intersection_count(b_.row(static_cast<Vertex>(w * 64 + std::countr_zero(bits))), mask_);
        return twice / 2;
    }

    bool has_common_non_neighbor(Vertex u, Vertex v) const {
        auto ru = b_.row(u);
        auto rv = b_.row(v);
        const std::size_t words = ru.size();
        for (std::size_t w = 0; w < words; ++w) {
            Word free = ~(ru[w] | rv[w]);
            if (w == words - 1 && n_ % 64) free &= (Word{1} << (n_ % 64)) - 1;
            if (w == (u >> 6)) free &= ~(Word{1} << (u & 63));
            if (w == (v >> 6)) free &= ~(Word{1} << (v & 63));
            if (free) return true;
        }
        return false;
    }

    GraphBuilder b_;
    std::size_t n_;
    std::vector<Word> mask_;
    Count t4_ = 0;
};

std::string tie_key(const Graph& g) {
    return g.order() <= kCanonicalLimit ? canonical_form(g).graph6 : to_graph6(g);
}

}  // namespace

BlowupSpec balanced_blowup_spec(std::size_t n) {
    BlowupSpec spec;
    for (std::size_t k = 0; k < 5; ++k) spec.parts[k] = static_cast<std::uint32_t>(n / 5 + (k < n % 5 ? 1 : 0));
    return spec;
}

SearchResult local_search_min_t4(const LocalSearchOptions& options) {
    if (options.n == 0) throw DomainError("local search needs n >= 1");
    const auto start = std::chrono::steady_clock::now();

    std::vector<Graph> starts;
    starts.push_back(c5_blowup(balanced_blowup_spec(options.n)));
    for (std::uint32_t r = 0; r < options.restarts; ++r)
        starts.push_back(random_complement_triangle_free(options.n, options.seed + r, mpq_class(1, 2)));

    SearchResult result;
    result.n = options.n;
    result.exhaustive = false;
    bool have = false;
    std::string best_key;
    for (std::size_t i = 0; i < starts.size(); ++i) {
        ToggleState state(starts[i]);
        detail::Rng rng(options.seed ^ (0x9E3779B97F4A7C15ULL * (i + 1)));
        for (std::uint64_t s = 0; s < options.step_budget; ++s) state.step(rng);
        result.graphs_examined = checked_add(result.graphs_examined, Count{options.step_budget} + 1);

        const Graph g = state.graph();
        std::string key = tie_key(g);
        const Count t4 = state.t4();
        if (!have || std::tie(t4, key) < std::tie(result.f_value, best_key)) {
            have = true;
            result.f_value = t4;
            best_key = std::move(key);
        }
    }
    result.witnesses = {best_key};
    result.elapsed_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
    return result;
}

// ---------------------------------------------------------------------------
// Blow-up part optimizer

BlowupOptimum blowup_optimize(std::size_t n) {
    if (n > kMaxOrder) throw CapabilityError("blow-up order exceeds 65536");
    const auto total = static_cast<std::uint32_t>(n);
    bool have = false;
    std::tuple<Count, std::uint64_t, BlowupSpec> best;
    BlowupSpec spec;
    auto& p = spec.parts;
    for (p[0] = 0; p[0] <= total; ++p[0])
        for (p[1] = 0; p[0] + p[1] <= total; ++p[1])
            for (p[2] = 0; p[0] + p[1] + p[2] <= total; ++p[2])
                for (p[3] = 0; p[0] + p[1] + p[2] + p[3] <= total; ++p[3]) {
                    p[4] = total - p[0] - p[1] - p[2] - p[3];
                    std::uint64_t squares = 0;
                    for (auto x : p) squares += static_cast<std::uint64_t>(x) * x;
                    auto candidate = std::make_tuple(blowup_t4_closed_form(spec), squares, spec);
                    if (!have || candidate < best) {
                        have = true;
                        best = candidate;
                    }
                }
    return {std::get<2>(best), std::get<0>(best)};
}

}  // namespace k4c
