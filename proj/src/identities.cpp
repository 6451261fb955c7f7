#include "k4census/identities.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "k4census/census.hpp"
#include "k4census/errors.hpp"

namespace k4c {

namespace {

using Int = __int128;

mpz_class to_mpz_signed(Int v) {
    if (v >= 0) return to_mpz(static_cast<Count>(v));
    return -to_mpz(static_cast<Count>(-v));
}

mpq_class q(Count v) { return mpq_class(to_mpz(v)); }
mpq_class q(std::uint64_t v) { return mpq_class(mpz_class(static_cast<unsigned long>(v))); }
mpq_class q(Int v) { return mpq_class(to_mpz_signed(v)); }

Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("128-bit pair sum overflow");
    return r;
}

// Lazily computed per-graph quantities shared by the verifiers.
class Context {
public:
    Context(const Graph& g, unsigned threads) : g_(g), threads_(threads) {
        n_ = q(static_cast<std::uint64_t>(g.order()));
        m_ = q(g.size());
        for (std::uint32_t d : g.degrees()) {
            const mpq_class dq = q(static_cast<std::uint64_t>(d));
            sum_d2_ += dq * dq;
        }
        ctf_ = has_independence_at_most_2(g);
    }

    const Graph& graph() const { return g_; }
    const mpq_class& n() const { return n_; }
    const mpq_class& m() const { return m_; }
    const mpq_class& sum_d2() const { return sum_d2_; }
    bool complement_triangle_free() const { return ctf_; }

    const FullCensus& full() {
        if (!census_) census_ = full_census(g_, threads_);
        return *census_;
    }

    const mpq_class& edge_degree_products() {
        if (!s_) s_ = q(edge_degree_product_sum(g_));
        return *s_;
    }

    struct PairSums {
        Int codegree = 0;             // sum of |N_i ∩ N_j|
        Int le4_formula = 0;          // sum of d_i + d_j - n + 2
        Int le4_max_violation = 0;    // max |codegree - (d_i + d_j - n + 2)|
        Int codegree_pairs = 0;       // sum of C(|N_i ∩ N_j|, 2)
        Int weighted_codegree = 0;    // sum of (d_i + d_j) |N_i ∩ N_j|
        Int eq3_product = 0;          // sum of (d_i + d_j - n + 2)(3d_i + 3d_j - 2n + 2)
        Int degree_products = 0;      // sum of d_i d_j
    };

    // All sums run over unordered non-adjacent pairs.
    const PairSums& nonadjacent() {
        if (pairs_) return *pairs_;
        PairSums s;
        const auto n = static_cast<Int>(g_.order());
        for (Vertex i = 0; i < g_.order(); ++i) {
            const Int di = g_.degree(i);
            for (Vertex j = i + 1; j < g_.order(); ++j) {
                if (g_.adjacent(i, j)) continue;
                const Int dj = g_.degree(j);
                const Int c = intersection_count(g_.row(i), g_.row(j));
                const Int formula = di + dj - n + 2;
                const Int dev = c > formula ? c - formula : formula - c;
                s.codegree = checked_add(s.codegree, c);
                s.le4_formula = checked_add(s.le4_formula, formula);
                s.le4_max_violation = std::max(s.le4_max_violation, dev);
                s.codegree_pairs = checked_add(s.codegree_pairs, c * (c - 1) / 2);
                s.weighted_codegree = checked_add(s.weighted_codegree, (di + dj) * c);
                s.eq3_product = checked_add(s.eq3_product, formula * (3 * di + 3 * dj - 2 * n + 2));
                s.degree_products = checked_add(s.degree_products, di * dj);
            }
        }
        pairs_ = s;
        return *pairs_;
    }

    // t4' counted from the spine side: each K4-minus-edge is seen once from
    // its unique edge whose common neighborhood holds the missing pair.
    mpq_class spine_side_t4p() {
        Count total = 0;
        std::vector<Word> mask(g_.words());
        g_.for_each_edge([&](Vertex u, Vertex v) {
            auto ru = g_.row(u);
            auto rv = g_.row(v);
            for (std::size_t w = 0; w < mask.size(); ++w) mask[w] = ru[w] & rv[w];
            const std::uint32_t c = intersection_count(ru, rv);
            total = k4c::checked_add(total, binomial(c, 2) - induced_edge_count(g_, mask));
        });
        return q(total);
    }

private:
    const Graph& g_;
    unsigned threads_;
    mpq_class n_;
    mpq_class m_;
    mpq_class sum_d2_;
    bool ctf_ = false;
    std::optional<FullCensus> census_;
    std::optional<mpq_class> s_;
    std::optional<PairSums> pairs_;
};

bool compare(const mpq_class& slack, Relation kind) {
    switch (kind) {
        case Relation::equality: return slack == 0;
        case Relation::geq: return slack >= 0;
        case Relation::leq: return slack <= 0;
    }
    return false;
}

IdentityCertificate make(IdentityId id, Relation kind, Hypothesis hyp, const Context& ctx, mpq_class lhs, mpq_class rhs) {
    IdentityCertificate c;
    c.identity = id;
    c.kind = kind;
    c.hypothesis_required = hyp;
    c.hypothesis_satisfied = hyp == Hypothesis::any_graph || ctx.complement_triangle_free();
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
    c.slack = c.lhs - c.rhs;
    c.holds = compare(c.slack, kind);
    return c;
}

// Sum over vertices of poly(d) with rational coefficients.
template <typename F>
mpq_class degree_sum(const Graph& g, F&& poly) {
    mpq_class s = 0;
    for (std::uint32_t d : g.degrees()) s += poly(mpq_class(static_cast<unsigned long>(d)));
    return s;
}

IdentityCertificate le00(Context& ctx) {
    if (ctx.graph().order() == 0) throw DomainError("LE00 needs n >= 1");
    const mpq_class& n = ctx.n();
    const mpq_class& m = ctx.m();
    mpq_class rhs = 4 * m * m * m / (n * n);
    return make(IdentityId::LE00, Relation::geq, Hypothesis::any_graph, ctx, ctx.edge_degree_products(), rhs);
}

IdentityCertificate le0(Context& ctx) {
    const mpq_class& n = ctx.n();
    mpq_class lhs = 6 * q(ctx.full().record.t3);
    mpq_class rhs = n * n * n - 3 * n * n + 2 * n +
                    degree_sum(ctx.graph(), [&](const mpq_class& d) -> mpq_class { return 3 * d * d - 3 * n * d + 3 * d; });
    return make(IdentityId::LE0, Relation::equality, Hypothesis::complement_triangle_free, ctx, lhs, rhs);
}

IdentityCertificate eq1(Context& ctx) {
    const auto& r = ctx.full().record;
    const mpq_class& n = ctx.n();
    mpq_class lhs = 2 * q(r.t3) + q(r.t3p);
    mpq_class rhs = (n - 2) * ctx.m() - n * (n - 1) * (n - 2) / 6;
    return make(IdentityId::EQ1, Relation::equality, Hypothesis::complement_triangle_free, ctx, lhs, rhs);
}

IdentityCertificate eq2(Context& ctx) {
    const auto& full = ctx.full();
    const Graph& g = ctx.graph();
    mpq_class lhs = 8 * q(full.record.t4) + 2 * q(full.record.t4p);
    mpq_class rhs = 0;
    for (Vertex i = 0; i < g.order(); ++i) {
        const mpq_class d(static_cast<unsigned long>(g.degree(i)));
        rhs += (d - 2) * q(full.profile.t[i]) - d * (d - 1) * (d - 2) / 6;
    }
    return make(IdentityId::EQ2, Relation::equality, Hypothesis::complement_triangle_free, ctx, lhs, rhs);
}

IdentityCertificate le3(Context& ctx) {
    const auto& pairs = ctx.nonadjacent();
    const mpq_class t4p = q(ctx.full().record.t4p);
    auto c = make(IdentityId::LE3, Relation::leq, Hypothesis::any_graph, ctx, t4p, q(pairs.codegree_pairs));
    IntermediateCheck inter;
    inter.label = "t4p_edge_count_equality";
    inter.lhs = ctx.spine_side_t4p();
    inter.rhs = t4p;
    inter.kind = Relation::equality;
    inter.holds = inter.lhs == inter.rhs;
    c.intermediate = std::move(inter);
    return c;
}

IdentityCertificate le4(Context& ctx) {
    const auto& pairs = ctx.nonadjacent();
    auto c = make(IdentityId::LE4, Relation::equality, Hypothesis::complement_triangle_free, ctx, q(pairs.codegree),
                  q(pairs.le4_formula));
    IntermediateCheck inter;
    inter.label = "max_pair_violation";
    inter.lhs = q(pairs.le4_max_violation);
    inter.rhs = 0;
    inter.kind = Relation::equality;
    inter.holds = pairs.le4_max_violation == 0;
    // Per-pair deviations can cancel in the aggregate; the pairwise maximum decides.
    c.holds = c.holds && inter.holds;
    c.intermediate = std::move(inter);
    return c;
}

IdentityCertificate le5(Context& ctx) {
    const auto& full = ctx.full();
    const Graph& g = ctx.graph();
    mpq_class lhs = 0;
    for (Vertex i = 0; i < g.order(); ++i) lhs += mpq_class(static_cast<unsigned long>(g.degree(i))) * q(full.profile.t[i]);
    mpq_class rhs = ctx.edge_degree_products() - ctx.sum_d2() / 2 - q(ctx.nonadjacent().weighted_codegree) / 2;
    return make(IdentityId::LE5, Relation::equality, Hypothesis::any_graph, ctx, lhs, rhs);
}

IdentityCertificate eq3(Context& ctx) {
    const auto& r = ctx.full().record;
    mpq_class lhs = 8 * q(r.t4);
    mpq_class rhs = ctx.edge_degree_products() - q(ctx.nonadjacent().eq3_product) / 2 -
                    degree_sum(ctx.graph(), [](const mpq_class& d) -> mpq_class { return d * d * d + 2 * d; }) / 6 - 6 * q(r.t3);
    return make(IdentityId::EQ3, Relation::geq, Hypothesis::complement_triangle_free, ctx, lhs, rhs);
}

IdentityCertificate final_exact(Context& ctx) {
    const mpq_class& n = ctx.n();
    const mpq_class& m = ctx.m();
    mpq_class lhs = 8 * q(ctx.full().record.t4);
    const mpq_class n2 = n * n;
    mpq_class rhs = 4 * ctx.edge_degree_products() - 6 * m * m - n2 * n2 / 2 + n2 * n + n2 / 2 - n +
                    degree_sum(ctx.graph(), [&](const mpq_class& d) -> mpq_class {
                        return mpq_class(4, 3) * d * d * d - 4 * n * d * d + 4 * d * d + 3 * n2 * d - 5 * n * d +
                               mpq_class(5, 3) * d;
                    });
    return make(IdentityId::FINAL_EXACT, Relation::geq, Hypothesis::complement_triangle_free, ctx, lhs, rhs);
}

IdentityCertificate edge_nonedge(Context& ctx) {
    const mpq_class& s = ctx.edge_degree_products();
    const mpq_class& m = ctx.m();
    mpq_class lhs = s - 3 * q(ctx.nonadjacent().degree_products);
    mpq_class rhs = 4 * s - 6 * m * m + mpq_class(3, 2) * ctx.sum_d2();
    return make(IdentityId::EDGE_NONEDGE, Relation::equality, Hypothesis::any_graph, ctx, lhs, rhs);
}

IdentityCertificate dispatch(Context& ctx, IdentityId id) {
    switch (id) {
        case IdentityId::LE00: return le00(ctx);
        case IdentityId::LE0: return le0(ctx);
        case IdentityId::EQ1: return eq1(ctx);
        case IdentityId::EQ2: return eq2(ctx);
        case IdentityId::LE3: return le3(ctx);
        case IdentityId::LE4: return le4(ctx);
        case IdentityId::LE5: return le5(ctx);
        case IdentityId::EQ3: return eq3(ctx);
        case IdentityId::FINAL_EXACT: return final_exact(ctx);
        case IdentityId::EDGE_NONEDGE: return edge_nonedge(ctx);
    }
    throw Error("unknown identity");
}

}  // namespace

bool IdentityCertificate::falsified() const noexcept { return hypothesis_satisfied && !holds; }

std::string_view identity_name(IdentityId id) noexcept {
    switch (id) {
        case IdentityId::LE00: return "LE00";
        case IdentityId::LE0: return "LE0";
        case IdentityId::EQ1: return "EQ1";
        case IdentityId::EQ2: return "EQ2";
        case IdentityId::LE3: return "LE3";
        case IdentityId::LE4: return "LE4";
        case IdentityId::LE5: return "LE5";
        case IdentityId::EQ3: return "EQ3";
        case IdentityId::FINAL_EXACT: return "FINAL_EXACT";
        case IdentityId::EDGE_NONEDGE: return "EDGE_NONEDGE";
    }
    return "?";
}

std::optional<IdentityId> parse_identity(std::string_view text) {
    std::string upper(text);
    std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
    for (IdentityId id : kAllIdentities)
        if (identity_name(id) == upper) return id;
    return std::nullopt;
}

std::string_view relation_name(Relation r) noexcept {
    switch (r) {
        case Relation::equality: return "equality";
        case Relation::geq: return "inequality-geq";
        case Relation::leq: return "inequality-leq";
    }
    return "?";
}

std::string_view hypothesis_name(Hypothesis h) noexcept {
    return h == Hypothesis::any_graph ? "any-graph" : "complement-triangle-free";
}

IdentityCertificate verify(const Graph& g, IdentityId id) {
    Context ctx(g, 1);
    return dispatch(ctx, id);
}

IdentityCertificate verify_le00(const Graph& g) { return verify(g, IdentityId::LE00); }
IdentityCertificate verify_le0(const Graph& g) { return verify(g, IdentityId::LE0); }
IdentityCertificate verify_eq1(const Graph& g) { return verify(g, IdentityId::EQ1); }
IdentityCertificate verify_eq2(const Graph& g) { return verify(g, IdentityId::EQ2); }
IdentityCertificate verify_le3(const Graph& g) { return verify(g, IdentityId::LE3); }
IdentityCertificate verify_le4(const Graph& g) { return verify(g, IdentityId::LE4); }
IdentityCertificate verify_le5(const Graph& g) { return verify(g, IdentityId::LE5); }
IdentityCertificate verify_eq3(const Graph& g) { return verify(g, IdentityId::EQ3); }
IdentityCertificate verify_final_exact(const Graph& g) { return verify(g, IdentityId::FINAL_EXACT); }
IdentityCertificate verify_edge_nonedge_identity(const Graph& g) { return verify(g, IdentityId::EDGE_NONEDGE); }

std::vector<IdentityCertificate> verify_all(const Graph& g, unsigned threads) {
    Context ctx(g, threads);
    std::vector<IdentityCertificate> out;
    out.reserve(kAllIdentities.size());
    for (IdentityId id : kAllIdentities) {
        if (id == IdentityId::LE00 && g.order() == 0) continue;
        out.push_back(dispatch(ctx, id));
    }
    return out;
}

}  // namespace k4c
