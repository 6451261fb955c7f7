#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace k4c::detail {

// std::uniform_int_distribution is implementation-defined; seeded outputs
// must be identical across standard libraries, so draws go through here.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound); bound > 0. Lemire's multiply-shift with rejection.
    std::uint64_t below(std::uint64_t bound) {
        unsigned __int128 prod = static_cast<unsigned __int128>(engine_()) * bound;
        auto low = static_cast<std::uint64_t>(prod);
        if (low < bound) {
            std::uint64_t threshold = -bound % bound;
            while (low < threshold) {
                prod = static_cast<unsigned __int128>(engine_()) * bound;
                low = static_cast<std::uint64_t>(prod);
            }
        }
        return static_cast<std::uint64_t>(prod >> 64);
    }

    bool bernoulli(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace k4c::detail
