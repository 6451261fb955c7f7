#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "brute.hpp"
#include "k4census/census.hpp"
#include "k4census/constructions.hpp"
#include "k4census/errors.hpp"
#include "k4census/identities.hpp"
#include "k4census/search.hpp"
#include "support.hpp"

using namespace k4c;
using testing::C;

namespace {

Graph shuffled(const Graph& g, std::uint64_t seed) {
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    return relabel(g, perm);
}

Graph rook4x4() {
    GraphBuilder b(16);
    for (Vertex u = 0; u < 16; ++u)
        for (Vertex v = u + 1; v < 16; ++v)
            if (u / 4 == v / 4 || u % 4 == v % 4) b.add_edge(u, v);
    return b.build();
}

Graph shrikhande() {
    GraphBuilder b(16);
    for (Vertex u = 0; u < 16; ++u)
        for (Vertex v = u + 1; v < 16; ++v) {
            int da = (int(v / 4) - int(u / 4) + 4) % 4;
            int db = (int(v % 4) - int(u % 4) + 4) % 4;
            bool adj = (da == 0 && (db == 1 || db == 3)) || (db == 0 && (da == 1 || da == 3)) ||
                       (da == db && (da == 1 || da == 3));
            if (adj) b.add_edge(u, v);
        }
    return b.build();
}

}  // namespace

TEST_CASE("canonical form is invariant under relabeling") {
    std::vector<Graph> graphs = {make_petersen(), rook4x4(), shrikhande(), make_cycle(16), make_empty(9),
                                 make_complete(12), c5_blowup({{3, 3, 3, 3, 3}}), make_star(15)};
    for (std::uint64_t s = 0; s < 20; ++s) graphs.push_back(random_graph(4 + s % 13, s, 1 + s % 4, 5));
    for (const auto& g : graphs) {
        const auto base = canonical_form(g);
        CHECK(from_graph6(base.graph6).order() == g.order());
        // the labeling realises the canonical graph
        CHECK(to_graph6(relabel(g, base.labeling)) == base.graph6);
        for (std::uint64_t seed = 0; seed < 6; ++seed) CHECK(canonical_form(shuffled(g, seed)).graph6 == base.graph6);
    }
}

TEST_CASE("strongly regular twins are told apart") {
    auto a = rook4x4();
    auto b = shrikhande();
    CHECK(a.size() == b.size());
    CHECK(a.is_regular());
    CHECK(b.is_regular());
    CHECK(census(a).t3 == census(b).t3);
    CHECK(census(a).t4 == C(8));  // rows and columns
    CHECK(census(b).t4 == C(0));
    CHECK(canonical_form(a).graph6 != canonical_form(b).graph6);
}

TEST_CASE("canonical form separates exactly the brute-force classes (n = 6)") {
    const int n = 6;
    const auto maps = brute::pair_maps(n);
    std::map<std::uint64_t, std::string> by_key;
    std::map<std::string, std::uint64_t> by_canon;
    for (std::uint64_t mask = 0; mask < (1U << 15); mask += 7) {
        auto key = brute::min_key(mask, maps);
        auto canon = canonical_form(brute::graph_of(n, mask)).graph6;
        auto [it, fresh] = by_key.emplace(key, canon);
        CHECK(it->second == canon);
        auto [jt, fresh2] = by_canon.emplace(canon, key);
        CHECK(jt->second == key);
    }
}

TEST_CASE("capability limit on canonical labeling") {
    CHECK_THROWS_AS((void)canonical_form(make_empty(17)), CapabilityError);
}

TEST_CASE("orbits") {
    auto p = make_petersen();
    for (Vertex v = 0; v < 10; ++v) CHECK(same_orbit(p, 0, v));
    auto star = make_star(4);
    CHECK_FALSE(same_orbit(star, 0, 1));
    CHECK(same_orbit(star, 1, 4));
    auto path = make_path(5);
    CHECK(same_orbit(path, 0, 4));
    CHECK(same_orbit(path, 1, 3));
    CHECK_FALSE(same_orbit(path, 0, 1));
    CHECK_FALSE(same_orbit(path, 2, 1));
}

TEST_CASE("enumeration matches brute-force dedup for n <= 6") {
    for (int n = 0; n <= 6; ++n) {
        CAPTURE(n);
        const auto expected = brute::triangle_free_classes(n);
        const auto maps = brute::pair_maps(n);
        std::set<std::uint64_t> got;
        std::size_t count = 0;
        for_each_triangle_free(static_cast<std::size_t>(n), [&](const Graph& g) {
            ++count;
            CHECK(is_triangle_free(g));
            got.insert(brute::min_key(brute::mask_of(g), maps));
        });
        CHECK(count == expected.size());
        CHECK(got == expected);
    }
}

TEST_CASE("enumeration counts through n = 9") {
    const std::size_t known[] = {1, 1, 2, 3, 7, 14, 38, 107, 410, 1897};
    for (std::size_t n = 0; n <= 9; ++n) CHECK(enumerate_triangle_free(n).size() == known[n]);
    CHECK_THROWS_AS(enumerate_triangle_free(12), CapabilityError);
}

TEST_CASE("f_exact small values and witnesses") {
    for (std::size_t n = 1; n <= 9; ++n) {
        auto r = f_exact(n);
        CAPTURE(n);
        CHECK(r.exhaustive);
        CHECK(r.f_value == C(n <= 8 ? 0 : 1));
        CHECK(std::is_sorted(r.witnesses.begin(), r.witnesses.end()));
        CHECK(!r.witnesses.empty());
        CHECK(r.witnesses.size() <= kWitnessCap);
        for (const auto& w : r.witnesses) {
            auto g = from_graph6(w);
            CHECK(g.order() == n);
            CHECK(has_independence_at_most_2(g));
            CHECK(census(g).t4 == r.f_value);
            CHECK(canonical_form(g).graph6 == w);
            CHECK(verify_eq3(g).holds);
            CHECK(verify_final_exact(g).holds);
        }
    }
    CHECK(f_exact(9).witnesses == std::vector<std::string>{"HJ]lmZR"});
    CHECK_THROWS_AS(f_exact(12), CapabilityError);
}

TEST_CASE("f_exact is thread-count independent") {
    auto one = f_exact(9, 1);
    auto four = f_exact(9, 4);
    CHECK(one.f_value == four.f_value);
    CHECK(one.witnesses == four.witnesses);
    CHECK(one.graphs_examined == four.graphs_examined);
}

TEST_CASE("local search is seeded, valid, and bounded below by f_exact") {
    LocalSearchOptions o{10, 42, 2000, 3};
    auto a = local_search_min_t4(o);
    auto b = local_search_min_t4(o);
    CHECK(a.f_value == b.f_value);
    CHECK(a.witnesses == b.witnesses);
    CHECK_FALSE(a.exhaustive);
    REQUIRE(a.witnesses.size() == 1);
    auto g = from_graph6(a.witnesses[0]);
    CHECK(has_independence_at_most_2(g));
    CHECK(census(g).t4 == a.f_value);
    CHECK(a.f_value >= C(5));  // f_exact(10)
    CHECK(a.f_value <= blowup_optimize(10).t4);

    auto big = local_search_min_t4({40, 1, 500, 1});
    CHECK(big.f_value <= blowup_optimize(40).t4);
    CHECK(census(from_graph6(big.witnesses[0])).t4 == big.f_value);
}

TEST_CASE("sandwich: f_exact <= best blow-up") {
    for (std::size_t n = 1; n <= 9; ++n) CHECK(f_exact(n).f_value <= blowup_optimize(n).t4);
}
