#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "k4census/count.hpp"
#include "k4census/graph.hpp"

namespace k4c {

/// n^4/200 + n^3/100 - 17n^2/200 - 13n/100 + 1/5.
mpq_class upper_bound_poly(std::uint64_t n);

/// 5 (C(2p,4) - C(p,4)) with p = ceil(n/5): the K4 count of the balanced
/// pentagon blow-up on the smallest multiple of five that is >= n.
Count construction_upper_bound(std::uint64_t n);

/// (80/3) m^3 / n^2 - 22 m^2 + 6 m n^2 - n^4 / 2. Throws DomainError for n = 0.
mpq_class lower_cubic(std::uint64_t n, const mpq_class& m);

struct CubicMinimizer {
    mpq_class argmin;            // 3n^2/10
    mpq_class local_max;         // n^2/4, the other critical point
    mpq_class three_term_value;  // (80/3)m^3/n^2 - 22m^2 + 6mn^2 at argmin = 27n^4/50
    mpq_class value;             // lower_cubic at argmin = n^4/25
    mpq_class implied_t4_bound;  // value / 8 = n^4/200
    mpz_class discriminant;      // of 80x^2 - 44x + 6 in x = m/n^2
    std::uint64_t best_integer_m = 0;  // the better of floor/ceil(3n^2/10)
};

/// Critical points of the cubic from its derivative 80m^2/n^2 - 44m + 6n^2.
CubicMinimizer lower_cubic_minimizer(std::uint64_t n);

/// sum_i |d_i - 2m/n|. Throws DomainError for n = 0.
mpq_class regularity_deviation(const Graph& g);

struct RatioRow {
    std::uint64_t p = 0;
    std::uint64_t n = 0;
    Count t4 = 0;
    mpq_class ratio;  // 200 t4 / n^4
};

/// One row per balanced blow-up C5[K_p], p = 1..p_max.
std::vector<RatioRow> asymptotic_ratio_report(std::uint64_t p_max);

/// 1 - (14/5)/p + (11/5)/p^2 - (2/5)/p^3.
mpq_class balanced_ratio_closed_form(std::uint64_t p);

struct GraphBoundTerms {
    std::uint64_t m = 0;
    mpq_class regularity_deviation;
    mpq_class lower_cubic_at_m;
    Count t4 = 0;
};

struct BoundReport {
    std::uint64_t n = 0;
    mpq_class upper_poly;
    Count construction_value = 0;
    CubicMinimizer minimizer;
    std::optional<GraphBoundTerms> per_graph;
};

BoundReport bound_report(std::uint64_t n);
/// Report for g.order(), with the per-graph block filled in.
BoundReport bound_report(const Graph& g, unsigned threads = 1);

}  // namespace k4c
