#include "k4census/constructions.hpp"

#include <charconv>

#include "k4census/errors.hpp"

namespace k4c {

BlowupSpec parse_blowup_spec(const std::string& text) {
    BlowupSpec spec;
    std::size_t pos = 0;
    for (std::size_t k = 0; k < 5; ++k) {
        if (k > 0) {
            if (pos >= text.size() || text[pos] != ',') throw ParseError(pos, "expected ',' between parts");
            ++pos;
        }
        const char* first = text.data() + pos;
        const char* last = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(first, last, spec.parts[k]);
        if (ec != std::errc{} || ptr == first) throw ParseError(pos, "expected a nonnegative part size");
        pos = static_cast<std::size_t>(ptr - text.data());
    }
    if (pos != text.size()) throw ParseError(pos, "expected exactly five parts");
    if (spec.order() > kMaxOrder) throw CapabilityError("blow-up order exceeds 65536");
    return spec;
}

std::string format_blowup_spec(const BlowupSpec& spec) {
    std::string s;
    for (std::size_t k = 0; k < 5; ++k) {
        if (k) s += ',';
        s += std::to_string(spec.parts[k]);
    }
    return s;
}

Graph c5_blowup(const BlowupSpec& spec) {
    const std::uint64_t n = spec.order();
    if (n > kMaxOrder) throw CapabilityError("blow-up order exceeds 65536");
    std::array<Vertex, 6> start{};
    for (std::size_t k = 0; k < 5; ++k) start[k + 1] = start[k] + spec.parts[k];

    GraphBuilder b(n);
    for (std::size_t k = 0; k < 5; ++k) {
        const std::size_t next = (k + 1) % 5;
        for (Vertex u = start[k]; u < start[k + 1]; ++u) {
            for (Vertex v = u + 1; v < start[k + 1]; ++v) b.add_edge(u, v);
            for (Vertex v = start[next]; v < start[next + 1]; ++v) b.add_edge(u, v);
        }
    }
    return b.build();
}

Count blowup_t4_closed_form(const BlowupSpec& spec) {
    Count pairs = 0;
    Count singles = 0;
    for (std::size_t k = 0; k < 5; ++k) {
        const std::uint64_t p = spec.parts[k];
        const std::uint64_t q = spec.parts[(k + 1) % 5];
        pairs = checked_add(pairs, binomial(p + q, 4));
        singles = checked_add(singles, binomial(p, 4));
    }
    return checked_sub(pairs, singles);
}

Graph lex_product_with_clique(const Graph& g, std::uint32_t p) {
    if (p == 0) throw DomainError("clique factor p must be positive");
    const std::uint64_t n = static_cast<std::uint64_t>(g.order()) * p;
    if (n > kMaxOrder) throw CapabilityError("lexicographic product order exceeds 65536");
    GraphBuilder b(n);
    for (Vertex i = 0; i < g.order(); ++i) {
        for (std::uint32_t x = 0; x < p; ++x) {
            const Vertex u = i * p + x;
            for (std::uint32_t y = x + 1; y < p; ++y) b.add_edge(u, i * p + y);
        }
    }
    g.for_each_edge([&](Vertex i, Vertex j) {
        for (std::uint32_t x = 0; x < p; ++x)
            for (std::uint32_t y = 0; y < p; ++y) b.add_edge(i * p + x, j * p + y);
    });
    return b.build();
}

}  // namespace k4c
