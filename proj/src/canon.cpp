#include "canon.hpp"

#include <algorithm>

#include "k4census/errors.hpp"

namespace k4c::detail {

namespace {

constexpr int kMax = static_cast<int>(kCanonicalLimit);

// Splitter queue for counting refinement. Holds cell masks; small enough
// that linear scans beat any indexing.
struct SplitQueue {
    std::array<Mask, kCanonicalLimit * 2> items{};
    int head = 0;
    int tail = 0;

    bool empty() const { return head == tail; }
    Mask pop() { return items[head++]; }
    void push(Mask m) { items[tail++] = m; }
    // Replaces a pending splitter `old` by `parts`; returns false if not pending.
    bool replace(Mask old, const Mask* parts, int count) {
        for (int i = head; i < tail; ++i) {
            if (items[i] != old) continue;
            items[i] = parts[0];
            for (int k = 1; k < count; ++k) push(parts[k]);
            return true;
        }
        return false;
    }
};

// Counting refinement to the coarsest equitable partition finer than p.
// Split parts are ordered by ascending neighbor count into the splitter,
// so the outcome depends only on the graph structure and the input order.
void refine(const SmallGraph& g, Partition& p, SplitQueue& queue) {
    while (!queue.empty() && p.count < g.n) {
        const Mask splitter = queue.pop();
        for (int c = 0; c < p.count; ++c) {
            const Mask cell = p.cells[c];
            if (std::popcount(cell) < 2) continue;
            std::array<Mask, kCanonicalLimit + 1> by_count{};
            int lo = kMax + 1;
            int hi = -1;
            for (Mask rest = cell; rest; rest &= rest - 1) {
                const int v = std::countr_zero(rest);
                const int k = std::popcount(g.adj[v] & splitter);
                by_count[k] |= Mask{1} << v;
                lo = std::min(lo, k);
                hi = std::max(hi, k);
            }
            if (lo == hi) continue;

            std::array<Mask, kCanonicalLimit> parts{};
            int nparts = 0;
            for (int k = lo; k <= hi; ++k)
                if (by_count[k]) parts[nparts++] = by_count[k];

            for (int i = p.count - 1; i > c; --i) p.cells[i + nparts - 1] = p.cells[i];
            for (int k = 0; k < nparts; ++k) p.cells[c + k] = parts[k];
            p.count += nparts - 1;

            if (!queue.replace(cell, parts.data(), nparts)) {
                int largest = 0;
                for (int k = 1; k < nparts; ++k)
                    if (std::popcount(parts[k]) > std::popcount(parts[largest])) largest = k;
                for (int k = 0; k < nparts; ++k)
                    if (k != largest) queue.push(parts[k]);
            }
            c += nparts - 1;
        }
    }
}

void refine_all(const SmallGraph& g, Partition& p) {
    SplitQueue queue;
    for (int c = 0; c < p.count; ++c) queue.push(p.cells[c]);
    refine(g, p, queue);
}

Key leaf_key(const SmallGraph& g, const Labeling& lab) {
    Key key = 0;
    int idx = 0;
    for (int j = 1; j < g.n; ++j) {
        const Mask row = g.adj[lab[j]];
        for (int i = 0; i < j; ++i, ++idx)
            if ((row >> lab[i]) & 1U) key |= Key{1} << (127 - idx);
    }
    return key;
}

struct UnionFind {
    std::array<std::uint8_t, kCanonicalLimit> parent{};

    explicit UnionFind(int n) {
        for (int i = 0; i < n; ++i) parent[i] = static_cast<std::uint8_t>(i);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = static_cast<std::uint8_t>(std::min(a, b));
    }
};

class Search {
public:
    explicit Search(const SmallGraph& g) : g_(g) {}

    CanonResult run(Partition p) {
        refine_all(g_, p);
        node(p);
        return std::move(result_);
    }

private:
    void node(const Partition& p) {
        const int depth = static_cast<int>(path_.size());
        int target = -1;
        int target_size = kMax + 1;
        for (int c = 0; c < p.count; ++c) {
            const int s = std::popcount(p.cells[c]);
            if (s > 1 && s < target_size) {
                target = c;
                target_size = s;
            }
        }
        if (target < 0) {
            leaf(p);
            return;
        }

        std::array<int, kCanonicalLimit> tried{};
        int ntried = 0;
        for (Mask rest = p.cells[target]; rest; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            if (ntried > 0 && pruned(v, tried.data(), ntried)) continue;
            tried[ntried++] = v;

            Partition child = p;
            for (int i = child.count - 1; i > target; --i) child.cells[i + 1] = child.cells[i];
            child.cells[target] = Mask{1} << v;
            child.cells[target + 1] = p.cells[target] & ~(Mask{1} << v);
            ++child.count;
            SplitQueue queue;
            queue.push(Mask{1} << v);
            refine(g_, child, queue);

            path_.push_back(v);
            node(child);
            path_.pop_back();
            if (jump_ >= 0) {
                if (jump_ < depth) return;
                jump_ = -1;
            }
        }
    }

    // v is skipped when an automorphism fixing the current path pointwise
    // maps it onto an already explored sibling.
    bool pruned(int v, const int* tried, int ntried) {
        if (result_.automorphisms.empty()) return false;
        UnionFind uf(g_.n);
        for (const auto& gamma : result_.automorphisms) {
            bool fixes = std::all_of(path_.begin(), path_.end(), [&](int x) { return gamma[x] == x; });
            if (!fixes) continue;
            for (int x = 0; x < g_.n; ++x) uf.unite(x, gamma[x]);
        }
        const int root = uf.find(v);
        for (int i = 0; i < ntried; ++i)
            if (uf.find(tried[i]) == root) return true;
        return false;
    }

    void leaf(const Partition& p) {
        Labeling lab{};
        for (int i = 0; i < g_.n; ++i) lab[i] = static_cast<std::uint8_t>(std::countr_zero(p.cells[i]));
        const Key key = leaf_key(g_, lab);

        if (!have_first_) {
            have_first_ = true;
            first_key_ = key;
            first_lab_ = lab;
            first_path_ = path_;
            result_.key = key;
            result_.labeling = lab;
            best_path_ = path_;
            return;
        }
        if (key == first_key_) {
            record(first_lab_, lab);
            jump_ = common_prefix(first_path_);
            return;
        }
        if (key == result_.key) {
            record(result_.labeling, lab);
            jump_ = common_prefix(best_path_);
            return;
        }
        if (key < result_.key) {
            result_.key = key;
            result_.labeling = lab;
            best_path_ = path_;
        }
    }

    void record(const Labeling& from, const Labeling& to) {
        Labeling gamma{};
        for (int i = 0; i < g_.n; ++i) gamma[from[i]] = to[i];
        result_.automorphisms.push_back(gamma);
    }

    int common_prefix(const std::vector<int>& other) const {
        std::size_t k = 0;
        while (k < path_.size() && k < other.size() && path_[k] == other[k]) ++k;
        return static_cast<int>(k);
    }

    const SmallGraph& g_;
    CanonResult result_;
    bool have_first_ = false;
    Key first_key_ = 0;
    Labeling first_lab_{};
    std::vector<int> first_path_;
    std::vector<int> best_path_;
    std::vector<int> path_;
    int jump_ = -1;
};

}  // namespace

SmallGraph to_small(const Graph& g) {
    if (g.order() > kCanonicalLimit)
        throw CapabilityError("canonical labeling supports n <= " + std::to_string(kCanonicalLimit) + ", got " +
                              std::to_string(g.order()));
    SmallGraph s;
    s.n = static_cast<int>(g.order());
    for (int v = 0; v < s.n; ++v) s.adj[v] = g.order() ? static_cast<Mask>(g.row(v)[0]) : 0;
    return s;
}

Graph from_small(const SmallGraph& g) {
    GraphBuilder b(static_cast<std::size_t>(g.n));
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.adjacent(u, v)) b.add_edge(u, v);
    return b.build();
}

CanonResult canonize(const SmallGraph& g, const Partition& initial) {
    if (g.n == 0) return {};
    return Search(g).run(initial);
}

CanonResult canonize(const SmallGraph& g) { return canonize(g, Partition::unit(g)); }

std::string graph6_of(const SmallGraph& g, const Labeling& labeling) {
    std::string out(1, static_cast<char>(g.n + 63));
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(labeling[i], labeling[j]) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

bool same_orbit(const SmallGraph& g, int u, int v, const std::vector<Labeling>& known_automorphisms) {
    if (u == v) return true;
    UnionFind uf(g.n);
    for (const auto& gamma : known_automorphisms)
        for (int x = 0; x < g.n; ++x) uf.unite(x, gamma[x]);
    if (uf.find(u) == uf.find(v)) return true;

    // Canonical forms with u (resp. v) individualized first coincide exactly
    // when some automorphism carries u to v.
    auto pinned = [&](int x) {
        Partition p;
        p.cells[0] = Mask{1} << x;
        p.cells[1] = g.all() & ~(Mask{1} << x);
        p.count = p.cells[1] ? 2 : 1;
        return canonize(g, p).key;
    };
    return pinned(u) == pinned(v);
}

}  // namespace k4c::detail
