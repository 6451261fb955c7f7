#include "support.hpp"

#include "k4census/constructions.hpp"

namespace testing {

std::vector<Named> corpus() {
    using namespace k4c;
    return {
        {"C5", make_cycle(5)},
        {"K4", make_complete(4)},
        {"K5", make_complete(5)},
        {"P4", make_path(4)},
        {"Petersen", make_petersen()},
        {"C5[K2]", c5_blowup(BlowupSpec::balanced(2))},
    };
}

}  // namespace testing
