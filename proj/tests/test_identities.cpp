#include "k4census/constructions.hpp"
#include "k4census/errors.hpp"
#include "k4census/identities.hpp"
#include "support.hpp"

using namespace k4c;

namespace {

std::string dump(const IdentityCertificate& c) {
    return std::string(identity_name(c.identity)) + " lhs=" + c.lhs.get_str() + " rhs=" + c.rhs.get_str() +
           " slack=" + c.slack.get_str();
}

bool is_ctf(IdentityId id) {
    switch (id) {
        case IdentityId::LE0:
        case IdentityId::EQ1:
        case IdentityId::EQ2:
        case IdentityId::LE4:
        case IdentityId::EQ3:
        case IdentityId::FINAL_EXACT: return true;
        default: return false;
    }
}

}  // namespace

TEST_CASE("names round-trip and parse case-insensitively") {
    for (auto id : kAllIdentities) {
        auto name = identity_name(id);
        CHECK(parse_identity(name) == id);
        std::string lower(name);
        for (auto& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        CHECK(parse_identity(lower) == id);
    }
    CHECK_FALSE(parse_identity("eq9").has_value());
    CHECK(relation_name(Relation::geq) == "inequality-geq");
    CHECK(hypothesis_name(Hypothesis::complement_triangle_free) == "complement-triangle-free");
}

TEST_CASE("hypotheses are assigned as stated") {
    auto certs = verify_all(make_cycle(5));
    REQUIRE(certs.size() == kAllIdentities.size());
    for (const auto& c : certs) {
        CAPTURE(identity_name(c.identity));
        CHECK((c.hypothesis_required == Hypothesis::complement_triangle_free) == is_ctf(c.identity));
        CHECK(c.hypothesis_satisfied);
        CHECK(c.holds);
        CHECK(c.slack == c.lhs - c.rhs);
    }
}

TEST_CASE("all identities hold on complement-triangle-free graphs") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto g = random_complement_triangle_free(5 + seed % 30, seed, mpq_class(1 + seed % 3, 4));
        for (const auto& c : verify_all(g)) {
            INFO(dump(c));
            CHECK(c.hypothesis_satisfied);
            CHECK(c.holds);
        }
    }
}

TEST_CASE("any-graph identities hold on arbitrary graphs") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        auto g = random_graph(1 + seed % 25, seed, seed % 5 + 1, 6);
        for (const auto& c : verify_all(g)) {
            INFO(dump(c));
            CHECK_FALSE(c.falsified());
            if (!is_ctf(c.identity)) CHECK(c.holds);
        }
    }
}

TEST_CASE("equalities are tight on the pentagon family") {
    for (std::uint32_t p = 1; p <= 4; ++p) {
        auto g = c5_blowup(BlowupSpec::balanced(p));
        CHECK(verify_eq3(g).slack == 0);
        CHECK(verify_final_exact(g).slack == 0);
        CHECK(verify_eq2(g).slack == 0);
    }
    auto c = verify_eq3(c5_blowup(BlowupSpec::balanced(2)));
    CHECK(c.lhs == 40);
}

TEST_CASE("EQ2 on C5[K2] balances with t4' = 20") {
    auto c = verify_eq2(c5_blowup(BlowupSpec::balanced(2)));
    // 8*5 + 2*20 = 80 = 10 * (3*6 - C(5,3))
    CHECK(c.lhs == 80);
    CHECK(c.rhs == 80);
}

TEST_CASE("intermediate checks") {
    auto g = random_graph(18, 4);
    auto le3 = verify_le3(g);
    REQUIRE(le3.intermediate.has_value());
    CHECK(le3.intermediate->holds);
    CHECK(le3.intermediate->lhs == le3.intermediate->rhs);

    auto le4 = verify_le4(c5_blowup({{3, 1, 2, 4, 2}}));
    REQUIRE(le4.intermediate.has_value());
    CHECK(le4.intermediate->lhs == 0);
    CHECK(le4.holds);
}

TEST_CASE("conditional identities fail off-hypothesis without counting as falsified") {
    // E5: three independent vertices, the complement K5 has triangles.
    auto g = make_empty(5);
    auto eq1 = verify_eq1(g);
    CHECK_FALSE(eq1.hypothesis_satisfied);
    CHECK_FALSE(eq1.holds);
    CHECK_FALSE(eq1.falsified());
    auto le4 = verify_le4(make_path(5));
    CHECK_FALSE(le4.hypothesis_satisfied);
    CHECK_FALSE(le4.holds);
    CHECK(le4.intermediate->lhs > 0);
}

TEST_CASE("LE00 is an inequality with equality on regular graphs") {
    auto c = verify_le00(make_petersen());
    CHECK(c.kind == Relation::geq);
    CHECK(c.slack == 0);
    auto star = verify_le00(make_star(5));
    CHECK(star.holds);
    CHECK(star.slack > 0);
    CHECK_THROWS_AS((void)verify_le00(make_empty(0)), DomainError);
    CHECK(verify_all(make_empty(0)).size() == kAllIdentities.size() - 1);
}
