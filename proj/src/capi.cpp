#include "k4census.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "k4census/bounds.hpp"
#include "k4census/census.hpp"
#include "k4census/constructions.hpp"
#include "k4census/errors.hpp"
#include "k4census/graph.hpp"
#include "k4census/identities.hpp"
#include "k4census/json_io.hpp"
#include "k4census/search.hpp"

struct k4c_graph {
    k4c::Graph graph;
};

namespace {

thread_local std::string last_error;

template <typename F>
k4c_status guarded(F&& body) {
    try {
        last_error.clear();
        body();
        return K4C_OK;
    } catch (const k4c::ParseError& e) {
        last_error = e.what();
        return K4C_ERR_PARSE;
    } catch (const k4c::DomainError& e) {
        last_error = e.what();
        return K4C_ERR_DOMAIN;
    } catch (const k4c::CapabilityError& e) {
        last_error = e.what();
        return K4C_ERR_CAPABILITY;
    } catch (const k4c::OverflowError& e) {
        last_error = e.what();
        return K4C_ERR_OVERFLOW;
    } catch (const std::invalid_argument& e) {
        last_error = e.what();
        return K4C_ERR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        last_error = e.what();
        return K4C_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return K4C_ERR_INTERNAL;
    }
}

char* duplicate(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename T>
void require(T* p, const char* name) {
    if (!p) throw std::invalid_argument(std::string(name) + " must not be null");
}

k4c::BlowupSpec spec_from(const uint32_t parts[5]) {
    require(parts, "parts");
    k4c::BlowupSpec spec;
    for (int k = 0; k < 5; ++k) spec.parts[k] = parts[k];
    return spec;
}

void emit_graph(k4c::Graph g, k4c_graph** out) { *out = new k4c_graph{std::move(g)}; }

}  // namespace

extern "C" {

const char* k4c_version(void) { return "1.0.0"; }

const char* k4c_status_name(k4c_status status) {
    switch (status) {
        case K4C_OK: return "ok";
        case K4C_ERR_PARSE: return "parse error";
        case K4C_ERR_DOMAIN: return "domain error";
        case K4C_ERR_CAPABILITY: return "capability error";
        case K4C_ERR_OVERFLOW: return "overflow error";
        case K4C_ERR_INVALID_ARGUMENT: return "invalid argument";
        case K4C_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* k4c_last_error(void) { return last_error.c_str(); }

void k4c_string_free(char* s) { std::free(s); }

k4c_status k4c_graph_from_graph6(const char* text, size_t length, k4c_graph** out) {
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        emit_graph(k4c::from_graph6(std::string_view(text, length)), out);
    });
}

k4c_status k4c_graph_to_graph6(const k4c_graph* g, char** out) {
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = duplicate(k4c::to_graph6(g->graph));
    });
}

void k4c_graph_free(k4c_graph* g) { delete g; }

k4c_status k4c_graph_order(const k4c_graph* g, size_t* n) {
    return guarded([&] {
        require(g, "graph");
        require(n, "n");
        *n = g->graph.order();
    });
}

k4c_status k4c_graph_size(const k4c_graph* g, uint64_t* m) {
    return guarded([&] {
        require(g, "graph");
        require(m, "m");
        *m = g->graph.size();
    });
}

k4c_status k4c_graph_complement(const k4c_graph* g, k4c_graph** out) {
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        emit_graph(k4c::complement(g->graph), out);
    });
}

k4c_status k4c_graph_is_triangle_free(const k4c_graph* g, int* out) {
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = k4c::is_triangle_free(g->graph) ? 1 : 0;
    });
}

k4c_status k4c_graph_has_independence_at_most_2(const k4c_graph* g, int* out) {
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = k4c::has_independence_at_most_2(g->graph) ? 1 : 0;
    });
}

k4c_status k4c_graph_blowup(const uint32_t parts[5], k4c_graph** out) {
    return guarded([&] {
        require(out, "out");
        emit_graph(k4c::c5_blowup(spec_from(parts)), out);
    });
}

k4c_status k4c_graph_random_complement_triangle_free(size_t n, uint64_t seed, uint64_t density_num,
                                                     uint64_t density_den, k4c_graph** out) {
    return guarded([&] {
        require(out, "out");
        if (density_den == 0) throw k4c::DomainError("density denominator must be positive");
        mpq_class density(mpz_class(static_cast<unsigned long>(density_num)),
                          mpz_class(static_cast<unsigned long>(density_den)));
        density.canonicalize();
        emit_graph(k4c::random_complement_triangle_free(n, seed, density), out);
    });
}

k4c_status k4c_census_json(const k4c_graph* g, unsigned threads, char** out_json) {
    return guarded([&] {
        require(g, "graph");
        require(out_json, "out_json");
        *out_json = duplicate(k4c::io::to_json(k4c::census(g->graph, threads)).dump());
    });
}

k4c_status k4c_verify_json(const k4c_graph* g, const char* identity, unsigned threads, char** out_json,
                           int* falsified) {
    return guarded([&] {
        require(g, "graph");
        require(identity, "identity");
        require(out_json, "out_json");
        std::vector<k4c::IdentityCertificate> certs;
        if (std::string_view(identity) == "all") {
            certs = k4c::verify_all(g->graph, threads);
        } else {
            auto id = k4c::parse_identity(identity);
            if (!id) throw std::invalid_argument(std::string("unknown identity '") + identity + "'");
            certs.push_back(k4c::verify(g->graph, *id));
        }
        nlohmann::json arr = nlohmann::json::array();
        bool any_falsified = false;
        for (const auto& c : certs) {
            arr.push_back(k4c::io::to_json(c));
            any_falsified |= c.falsified();
        }
        *out_json = duplicate(arr.dump());
        if (falsified) *falsified = any_falsified ? 1 : 0;
    });
}

k4c_status k4c_construct_json(const uint32_t parts[5], char** out_json) {
    return guarded([&] {
        require(out_json, "out_json");
        *out_json = duplicate(k4c::io::construction_json(spec_from(parts)).dump());
    });
}

k4c_status k4c_blowup_optimize_json(size_t n, char** out_json) {
    return guarded([&] {
        require(out_json, "out_json");
        *out_json = duplicate(k4c::io::to_json(k4c::blowup_optimize(n)).dump());
    });
}

k4c_status k4c_search_exact_json(size_t n, unsigned threads, int timing, char** out_json) {
    return guarded([&] {
        require(out_json, "out_json");
        auto r = k4c::f_exact(n, threads);
        if (!timing) r.elapsed_ms = 0;
        *out_json = duplicate(k4c::io::to_json(r).dump());
    });
}

k4c_status k4c_search_local_json(size_t n, uint64_t seed, uint64_t steps, uint32_t restarts, int timing,
                                 char** out_json) {
    return guarded([&] {
        require(out_json, "out_json");
        auto r = k4c::local_search_min_t4({n, seed, steps, restarts});
        if (!timing) r.elapsed_ms = 0;
        *out_json = duplicate(k4c::io::to_json(r).dump());
    });
}

k4c_status k4c_bound_json(size_t n, const k4c_graph* g, unsigned threads, char** out_json) {
    return guarded([&] {
        require(out_json, "out_json");
        k4c::BoundReport report;
        if (g) {
            if (g->graph.order() != n)
                throw k4c::DomainError("graph order " + std::to_string(g->graph.order()) + " differs from n = " +
                                       std::to_string(n));
            report = k4c::bound_report(g->graph, threads);
        } else {
            report = k4c::bound_report(n);
        }
        *out_json = duplicate(k4c::io::to_json(report).dump());
    });
}

k4c_status k4c_bound_csv(size_t n, char** out_csv) {
    return guarded([&] {
        require(out_csv, "out_csv");
        *out_csv = duplicate(k4c::io::bound_csv({k4c::bound_report(n)}));
    });
}

k4c_status k4c_ratio_csv(uint64_t p_max, char** out_csv) {
    return guarded([&] {
        require(out_csv, "out_csv");
        *out_csv = duplicate(k4c::io::ratio_csv(k4c::asymptotic_ratio_report(p_max)));
    });
}

}  // extern "C"
