#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "k4census/count.hpp"
#include "k4census/graph.hpp"

namespace k4c {

/// Part sizes of a blow-up of the pentagon; part k sits at pentagon vertex k
/// and parts k, k+1 (mod 5) are completely joined.
struct BlowupSpec {
    std::array<std::uint32_t, 5> parts{};

    std::uint64_t order() const noexcept {
        std::uint64_t n = 0;
        for (auto p : parts) n += p;
        return n;
    }

    static BlowupSpec balanced(std::uint32_t p) { return {{p, p, p, p, p}}; }

    friend bool operator==(const BlowupSpec&, const BlowupSpec&) = default;
    friend auto operator<=>(const BlowupSpec&, const BlowupSpec&) = default;
};

/// "p1,p2,p3,p4,p5" -> spec. Throws ParseError.
BlowupSpec parse_blowup_spec(const std::string& text);
std::string format_blowup_spec(const BlowupSpec& spec);

/// Block-major vertex order: all of part 0, then part 1, and so on.
Graph c5_blowup(const BlowupSpec& spec);

/// sum_k C(p_k + p_{k+1}, 4) - sum_k C(p_k, 4). Every K4 lies inside the
/// union of two consecutive parts; K4s inside a single part are seen twice.
Count blowup_t4_closed_form(const BlowupSpec& spec);

/// Each vertex of g becomes a p-clique; cliques of adjacent vertices are
/// completely joined. Vertex (i, x) gets index i * p + x. Throws DomainError for p = 0.
Graph lex_product_with_clique(const Graph& g, std::uint32_t p);

}  // namespace k4c
