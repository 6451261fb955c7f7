#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "k4census/graph.hpp"

namespace k4c {

enum class IdentityId { LE00, LE0, EQ1, EQ2, LE3, LE4, LE5, EQ3, FINAL_EXACT, EDGE_NONEDGE };

inline constexpr std::array kAllIdentities = {
    IdentityId::LE00, IdentityId::LE0, IdentityId::EQ1, IdentityId::EQ2,         IdentityId::LE3,
    IdentityId::LE4,  IdentityId::LE5, IdentityId::EQ3, IdentityId::FINAL_EXACT, IdentityId::EDGE_NONEDGE,
};

enum class Relation { equality, geq, leq };
enum class Hypothesis { any_graph, complement_triangle_free };

/// A secondary exact comparison carried alongside the main verdict: the
/// K4-minus-edge double count for LE3, the worst single-pair deviation for LE4.
struct IntermediateCheck {
    std::string label;
    mpq_class lhs;
    mpq_class rhs;
    Relation kind = Relation::equality;
    bool holds = false;
};

struct IdentityCertificate {
    IdentityId identity{};
    mpq_class lhs;
    mpq_class rhs;
    mpq_class slack;  // lhs - rhs
    Relation kind = Relation::equality;
    bool holds = false;
    Hypothesis hypothesis_required = Hypothesis::any_graph;
    bool hypothesis_satisfied = false;
    std::optional<IntermediateCheck> intermediate;

    /// The statement failed on a graph meeting its hypothesis.
    bool falsified() const noexcept;
};

std::string_view identity_name(IdentityId id) noexcept;
/// Accepts the enumerator spelling in any case ("eq1", "FINAL_EXACT", "edge_nonedge").
std::optional<IdentityId> parse_identity(std::string_view text);
std::string_view relation_name(Relation r) noexcept;
std::string_view hypothesis_name(Hypothesis h) noexcept;

/// Sum over edges of d_i d_j >= 4 m^3 / n^2. Throws DomainError for n = 0.
IdentityCertificate verify_le00(const Graph& g);
/// 6 t3 = n^3 - 3n^2 + 2n + sum(3 d_i^2 - 3 n d_i + 3 d_i).
IdentityCertificate verify_le0(const Graph& g);
/// 2 t3 + t3' = (n - 2) m - C(n, 3).
IdentityCertificate verify_eq1(const Graph& g);
/// 8 t4 + 2 t4' = sum (d_i - 2) t_i - sum C(d_i, 3).
IdentityCertificate verify_eq2(const Graph& g);
/// t4' <= sum over non-adjacent pairs of C(codegree, 2).
IdentityCertificate verify_le3(const Graph& g);
/// codegree(i, j) = d_i + d_j - n + 2 for every non-adjacent pair, aggregated.
IdentityCertificate verify_le4(const Graph& g);
/// sum d_i t_i = S - 1/2 sum d_i^2 - 1/2 sum_{i !~ j} (d_i + d_j) codegree(i, j).
IdentityCertificate verify_le5(const Graph& g);
IdentityCertificate verify_eq3(const Graph& g);
IdentityCertificate verify_final_exact(const Graph& g);
/// S - 3 sum_{i !~ j} d_i d_j = 4 S - 6 m^2 + 3/2 sum d_i^2.
IdentityCertificate verify_edge_nonedge_identity(const Graph& g);

IdentityCertificate verify(const Graph& g, IdentityId id);

/// Every identity on one graph, sharing the census and pair sums.
std::vector<IdentityCertificate> verify_all(const Graph& g, unsigned threads = 1);

}  // namespace k4c
