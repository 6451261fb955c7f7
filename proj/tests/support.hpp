#pragma once

#include <string>
#include <vector>

#include <doctest.h>

#include "k4census/count.hpp"
#include "k4census/graph.hpp"

namespace doctest {
template <>
struct StringMaker<unsigned __int128> {
    static String convert(unsigned __int128 v) { return k4c::to_string(v).c_str(); }
};
}  // namespace doctest

namespace testing {

inline k4c::Count C(unsigned long long v) { return v; }

/// The small fixed corpus used across suites.
struct Named {
    std::string name;
    k4c::Graph graph;
};

std::vector<Named> corpus();

}  // namespace testing
