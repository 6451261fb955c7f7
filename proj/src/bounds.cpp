#include "k4census/bounds.hpp"

#include "k4census/census.hpp"
#include "k4census/errors.hpp"

namespace k4c {

namespace {

mpq_class q(std::uint64_t v) { return mpq_class(mpz_class(static_cast<unsigned long>(v))); }

}  // namespace

mpq_class upper_bound_poly(std::uint64_t n) {
    const mpq_class x = q(n);
    const mpq_class x2 = x * x;
    return x2 * x2 / 200 + x2 * x / 100 - 17 * x2 / 200 - 13 * x / 100 + mpq_class(1, 5);
}

Count construction_upper_bound(std::uint64_t n) {
    if (n == 0) throw DomainError("construction bound needs n >= 1");
    const std::uint64_t p = (n + 4) / 5;
    return checked_mul(5, checked_sub(binomial(2 * p, 4), binomial(p, 4)));
}

mpq_class lower_cubic(std::uint64_t n, const mpq_class& m) {
    if (n == 0) throw DomainError("lower cubic needs n >= 1");
    const mpq_class x = q(n);
    const mpq_class x2 = x * x;
    return mpq_class(80, 3) * m * m * m / x2 - 22 * m * m + 6 * m * x2 - x2 * x2 / 2;
}

CubicMinimizer lower_cubic_minimizer(std::uint64_t n) {
    if (n == 0) throw DomainError("lower cubic needs n >= 1");
    const mpq_class x2 = q(n) * q(n);
    CubicMinimizer r;
    // 80 y^2 - 44 y + 6 = 0 with y = m / n^2: roots (44 -+ 4) / 160 = 1/4, 3/10.
    r.discriminant = mpz_class(44) * 44 - mpz_class(4) * 80 * 6;
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), r.discriminant.get_mpz_t());
    r.local_max = mpq_class(44 - root, 160) * x2;
    r.argmin = mpq_class(44 + root, 160) * x2;
    r.local_max.canonicalize();
    r.argmin.canonicalize();
    r.value = lower_cubic(n, r.argmin);
    r.three_term_value = r.value + x2 * x2 / 2;
    r.implied_t4_bound = r.value / 8;

    mpz_class lo;
    mpz_fdiv_q(lo.get_mpz_t(), r.argmin.get_num_mpz_t(), r.argmin.get_den_mpz_t());
    const mpz_class hi = lo + (r.argmin == mpq_class(lo) ? 0 : 1);
    const mpq_class at_lo = lower_cubic(n, mpq_class(lo));
    const mpq_class at_hi = lower_cubic(n, mpq_class(hi));
    r.best_integer_m = (at_hi < at_lo ? hi : lo).get_ui();
    return r;
}

mpq_class regularity_deviation(const Graph& g) {
    if (g.order() == 0) throw DomainError("regularity deviation needs n >= 1");
    const mpq_class mean = q(2 * g.size()) / q(g.order());
    mpq_class total = 0;
    for (std::uint32_t d : g.degrees()) total += abs(mpq_class(static_cast<unsigned long>(d)) - mean);
    return total;
}

mpq_class balanced_ratio_closed_form(std::uint64_t p) {
    if (p == 0) throw DomainError("ratio needs p >= 1");
    const mpq_class x = q(p);
    return 1 - mpq_class(14, 5) / x + mpq_class(11, 5) / (x * x) - mpq_class(2, 5) / (x * x * x);
}

std::vector<RatioRow> asymptotic_ratio_report(std::uint64_t p_max) {
    if (p_max == 0) throw DomainError("ratio table needs p_max >= 1");
    std::vector<RatioRow> rows;
    rows.reserve(p_max);
    for (std::uint64_t p = 1; p <= p_max; ++p) {
        RatioRow row;
        row.p = p;
        row.n = 5 * p;
        row.t4 = checked_mul(5, checked_sub(binomial(2 * p, 4), binomial(p, 4)));
        const mpq_class n = q(row.n);
        row.ratio = 200 * mpq_class(to_mpz(row.t4)) / (n * n * n * n);
        rows.push_back(std::move(row));
    }
    return rows;
}

BoundReport bound_report(std::uint64_t n) {
    BoundReport r;
    r.n = n;
    r.upper_poly = upper_bound_poly(n);
    r.construction_value = construction_upper_bound(n);
    r.minimizer = lower_cubic_minimizer(n);
    return r;
}

BoundReport bound_report(const Graph& g, unsigned threads) {
    BoundReport r = bound_report(g.order());
    GraphBoundTerms terms;
    terms.m = g.size();
    terms.regularity_deviation = regularity_deviation(g);
    terms.lower_cubic_at_m = lower_cubic(g.order(), q(g.size()));
    terms.t4 = census(g, threads).t4;
    r.per_graph = std::move(terms);
    return r;
}

}  // namespace k4c
