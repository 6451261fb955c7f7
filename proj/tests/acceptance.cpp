// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "brute.hpp"
#include "k4census/bounds.hpp"
#include "k4census/census.hpp"
#include "k4census/constructions.hpp"
#include "k4census/identities.hpp"
#include "k4census/json_io.hpp"
#include "k4census/search.hpp"

using namespace k4c;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            if (ok) detail << what;
            ok = false;
        }
    }
};

int failures = 0;

void criterion(int id, const char* title, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto start = Clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail << "exception: " << e.what();
    }
    const double secs = seconds_since(start);
    std::printf("[%s] %2d %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title, secs, o.ok ? "" : ": ",
                o.ok ? "" : o.detail.str().c_str());
    std::fflush(stdout);
    if (!o.ok) ++failures;
}

std::string str(Count c) { return to_string(c); }

}  // namespace

int main() {
    criterion(1, "census equals brute force on 200 random graphs and the fixed corpus", [](Outcome& o) {
        const auto start = Clock::now();
        std::vector<std::pair<std::string, Graph>> graphs = {
            {"C5", make_cycle(5)},   {"K4", make_complete(4)},       {"K5", make_complete(5)},
            {"P4", make_path(4)},    {"Petersen", make_petersen()}, {"C5[K2]", c5_blowup(BlowupSpec::balanced(2))},
        };
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            const std::size_t n = 1 + seed % 12;
            graphs.emplace_back("random seed " + std::to_string(seed), random_graph(n, 7919 * seed + 1, 1 + seed % 5, 6));
        }
        for (const auto& [name, g] : graphs) {
            const auto fast = census(g);
            const auto slow = census_bruteforce(g);
            o.expect(fast == slow, "mismatch on " + name + " (" + to_graph6(g) + ")");
        }
        o.expect(seconds_since(start) < 60.0, "exceeded 60 s");
    });

    criterion(2, "identity suite holds exactly (100 complement-triangle-free, 500 arbitrary)", [](Outcome& o) {
        auto check = [&](const Graph& g, bool conditional) {
            for (const auto& c : verify_all(g)) {
                const bool wanted = (c.hypothesis_required == Hypothesis::complement_triangle_free) == conditional;
                if (!wanted) continue;
                bool good = c.hypothesis_satisfied && c.holds && !c.falsified();
                if (c.intermediate) good = good && c.intermediate->holds;
                if (!good) {
                    o.expect(false, "certificate " + io::to_json(c).dump() + " on " + to_graph6(g));
                    std::cerr << io::to_json(c).dump(2) << "\n";
                }
            }
        };
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const std::size_t n = 5 + (seed * 37) % 56;
            const mpq_class density(static_cast<long>(1 + seed % 4), 5);
            check(random_complement_triangle_free(n, 1000 + seed, density), true);
        }
        for (std::uint64_t seed = 0; seed < 500; ++seed) {
            const std::size_t n = 1 + seed % 30;
            check(random_graph(n, 5000 + seed, 1 + seed % 7, 8), false);
        }
    });

    criterion(3, "blow-up closed form equals census and the quartic for p = 1..12", [](Outcome& o) {
        for (std::uint32_t p = 1; p <= 12; ++p) {
            const auto spec = BlowupSpec::balanced(p);
            const auto g = c5_blowup(spec);
            const Count closed = blowup_t4_closed_form(spec);
            const Count counted = census(g).t4;
            const mpq_class x(p);
            const mpq_class quartic = mpq_class(25, 8) * x * x * x * x - mpq_class(35, 4) * x * x * x +
                                      mpq_class(55, 8) * x * x - mpq_class(5, 4) * x;
            const std::string at = " at p = " + std::to_string(p);
            o.expect(closed == counted, "closed " + str(closed) + " != census " + str(counted) + at);
            o.expect(mpq_class(to_mpz(closed)) == quartic, "quartic " + quartic.get_str() + at);
            o.expect(has_independence_at_most_2(g), "independence > 2" + at);
        }
    });

    criterion(4, "construction bound <= upper polynomial for n = 1..10000", [](Outcome& o) {
        const auto start = Clock::now();
        // Not weakened: p <= (n + 4) / 5 is substituted into a quartic that
        // decreases near p = 1, so the polynomial is negative at n = 2, 3.
        std::string violations;
        for (std::uint64_t n = 1; n <= 10000; ++n) {
            const mpq_class construction(to_mpz(construction_upper_bound(n)));
            const mpq_class poly = upper_bound_poly(n);
            if (!(construction <= poly))
                violations += (violations.empty() ? "" : "; ") + std::string("n = ") + std::to_string(n) +
                              ": construction " + construction.get_str() + " > polynomial " + poly.get_str();
        }
        o.expect(violations.empty(), violations);
        o.expect(seconds_since(start) < 1.0, "exceeded 1 s");
    });

    criterion(5, "exhaustive f(n): zero through 8, positive at 9, monotone, pinned f(10) = 5, f(11) = 11", [](Outcome& o) {
        const auto start = Clock::now();
        std::vector<Count> f;
        for (std::size_t n = 1; n <= 9; ++n) f.push_back(f_exact(n).f_value);
        o.expect(seconds_since(start) < 300.0, "n <= 9 exceeded 5 minutes");
        for (std::size_t n = 10; n <= 11; ++n) f.push_back(f_exact(n).f_value);
        for (std::size_t n = 1; n <= f.size(); ++n) {
            const Count v = f[n - 1];
            const std::string at = " at n = " + std::to_string(n) + " (f = " + str(v) + ")";
            if (n <= 8) o.expect(v == 0, "nonzero" + at);
            if (n == 9) o.expect(v >= 1, "zero" + at);
            if (n > 1) o.expect(f[n - 2] <= v, "not monotone" + at);
            o.expect(v <= construction_upper_bound(n), "above construction bound" + at);
            o.expect(v <= blowup_optimize(n).t4, "above best blow-up" + at);
        }
        o.expect(f[9] == 5, "regression f(10) = " + str(f[9]) + ", pinned 5");
        o.expect(f[10] == 11, "regression f(11) = " + str(f[10]) + ", pinned 11");
        for (const auto& w : f_exact(11).witnesses) {
            const auto g = from_graph6(w);
            o.expect(census(g).t4 == 11 && verify_eq3(g).holds && verify_final_exact(g).holds, "bad witness " + w);
        }
    });

    criterion(6, "triangle-free class counts for n <= 7 equal brute-force dedup", [](Outcome& o) {
        for (int n = 1; n <= 7; ++n) {
            const auto expected = brute::triangle_free_classes(n);
            const auto maps = brute::pair_maps(n);
            std::set<std::uint64_t> got;
            std::size_t count = 0;
            for_each_triangle_free(static_cast<std::size_t>(n), [&](const Graph& g) {
                ++count;
                got.insert(brute::min_key(brute::mask_of(g), maps));
            });
            const std::string at = " at n = " + std::to_string(n);
            o.expect(count == expected.size(),
                     "count " + std::to_string(count) + " != " + std::to_string(expected.size()) + at);
            o.expect(got == expected, "class sets differ" + at);
        }
    });

    criterion(7, "cubic minimizer is 3n^2/10 with t4 bound n^4/200; integer sweeps agree", [](Outcome& o) {
        for (std::uint64_t n : {10U, 100U, 1000U}) {
            const auto r = lower_cubic_minimizer(n);
            const mpq_class n2 = mpq_class(n) * n;
            const std::string at = " at n = " + std::to_string(n);
            o.expect(r.argmin == mpq_class(3, 10) * n2, "argmin " + r.argmin.get_str() + at);
            o.expect(r.implied_t4_bound == n2 * n2 / 200, "bound " + r.implied_t4_bound.get_str() + at);
        }
        for (std::uint64_t n : {10U, 20U, 50U}) {
            const std::uint64_t lo = (n * n + 3) / 4;
            const std::uint64_t hi = n * (n - 1) / 2;
            const std::uint64_t target = 3 * n * n / 10;
            const mpq_class best = lower_cubic(n, target);
            for (std::uint64_t m = lo; m <= hi; ++m)
                if (m != target && !(lower_cubic(n, m) > best))
                    o.expect(false, "m = " + std::to_string(m) + " not above the minimum at n = " + std::to_string(n));
            o.expect(lower_cubic_minimizer(n).best_integer_m == target, "best integer m at n = " + std::to_string(n));
        }
    });

    criterion(8, "balanced ratio equals the closed form, lies in (1 - 3/p, 1], increases", [](Outcome& o) {
        const auto rows = asymptotic_ratio_report(100);
        for (const auto& row : rows) {
            const std::string at = " at p = " + std::to_string(row.p);
            o.expect(row.ratio == balanced_ratio_closed_form(row.p), "closed form" + at);
            o.expect(row.ratio > 1 - mpq_class(3, static_cast<long>(row.p)) && row.ratio <= 1, "interval" + at);
            if (row.p >= 3) o.expect(rows[row.p - 2].ratio < row.ratio, "not increasing" + at);
        }
    });

    criterion(9, "EQ3 slack is zero on C5 and C5[K2]", [](Outcome& o) {
        const auto c5 = verify_eq3(make_cycle(5));
        const auto c10 = verify_eq3(c5_blowup(BlowupSpec::balanced(2)));
        o.expect(c5.slack == 0, "C5 slack " + c5.slack.get_str());
        o.expect(c10.slack == 0, "C5[K2] slack " + c10.slack.get_str());
        o.expect(c10.lhs == 40, "C5[K2] 8 t4 = " + c10.lhs.get_str());
    });

    criterion(10, "n = 500 full census under 10 s single-threaded; identical for 1, 4, 8 threads", [](Outcome& o) {
        const auto g = random_complement_triangle_free(500, 2024, mpq_class(1, 2));
        const auto start = Clock::now();
        const auto one = full_census(g, 1);
        const double secs = seconds_since(start);
        o.expect(secs < 10.0, "single-threaded census took " + std::to_string(secs) + " s");
        for (unsigned t : {4U, 8U}) {
            const auto many = full_census(g, t);
            o.expect(many.record == one.record && many.profile.t == one.profile.t,
                     "differs with " + std::to_string(t) + " threads");
        }
    });

    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
