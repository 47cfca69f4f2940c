#include "boxdist/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace boxdist {

BigInt count_monomials(unsigned n, unsigned q, std::uint64_t s) {
    if (n < 1) throw std::invalid_argument("count_monomials: n must be >= 1");
    if (q < 2) throw std::invalid_argument("count_monomials: q must be >= 2");
    const std::uint64_t cap = static_cast<std::uint64_t>(n) * (q - 1);
    if (s >= cap) {
        BigInt full;
        mpz_ui_pow_ui(full.get_mpz_t(), q, n);
        return full;
    }
    // ways[j] = number of exponent vectors over the first coordinates with sum j
    std::vector<BigInt> ways(static_cast<std::size_t>(s) + 1);
    ways[0] = 1;
    std::vector<BigInt> prefix(ways.size() + 1);
    for (unsigned coord = 0; coord < n; ++coord) {
        prefix[0] = 0;
        for (std::size_t j = 0; j < ways.size(); ++j) prefix[j + 1] = prefix[j] + ways[j];
        for (std::size_t j = ways.size(); j-- > 0;) {
            const std::size_t lo = j >= q ? j - (q - 1) : 0;
            ways[j] = prefix[j + 1] - prefix[lo];
        }
    }
    BigInt total = 0;
    for (const auto& w : ways) total += w;
    return total;
}

namespace {

BigInt binom(std::uint64_t n, std::uint64_t k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace

BigInt bbs_bound(unsigned n, std::uint64_t s) {
    if (n < 1) throw std::invalid_argument("bbs_bound: n must be >= 1");
    return binom(n + s, s);
}

BigInt dgs_bound(unsigned n, std::uint64_t s) {
    if (n < 2) throw std::invalid_argument("dgs_bound: n must be >= 2");
    if (s < 1) throw std::invalid_argument("dgs_bound: s must be >= 1");
    return binom(n + s - 1, s) + binom(n + s - 2, s - 1);
}

BigInt deza_frankl_bound(unsigned n, std::uint64_t s) {
    if (n < 1) throw std::invalid_argument("deza_frankl_bound: n must be >= 1");
    return binom(n + s, s);
}

BigInt clp_threshold(unsigned n, std::uint64_t d) {
    if (n < 1) throw std::invalid_argument("clp_threshold: n must be >= 1");
    BigInt sum = 0;
    const std::uint64_t half = d / 2;
    for (std::uint64_t i = 0; i <= half && i <= n; ++i) sum += binom(n, i);
    return 2 * sum;
}

BigInt main_theorem_bound(unsigned n, unsigned q, std::uint64_t s) {
    return 2 * count_monomials(n, q, s);
}

BigInt dfrank_box_bound(unsigned n, unsigned q, std::uint64_t s) {
    return count_monomials(n, q, s);
}

// ---------------------------------------------------------------------------
// J(t,d) machinery
// ---------------------------------------------------------------------------

namespace {

struct SweepResult {
    enum class Pattern { all_nonpositive, single_change, inconsistent } pattern;
    double last_negative = 0;   // rightmost grid point with h < 0
    double first_positive = 0;  // leftmost grid point with h > 0
};

// Signs of h over a uniform grid on (lo, hi). Clean patterns are either
// "no positive value" or "a negative run, then a nonnegative run".
SweepResult sweep_signs(const std::function<double(double)>& h, double lo, double hi,
                        std::size_t n_points) {
    SweepResult r{SweepResult::Pattern::all_nonpositive, lo, hi};
    bool seen_pos = false, seen_neg = false;
    double last_neg = lo, first_pos = hi;
    for (std::size_t i = 1; i <= n_points; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) /
                                  static_cast<double>(n_points + 1);
        const double v = h(x);
        if (v > 0) {
            if (!seen_pos) first_pos = x;
            seen_pos = true;
        } else if (v < 0) {
            if (seen_pos) {
                r.pattern = SweepResult::Pattern::inconsistent;
                return r;
            }
            seen_neg = true;
            last_neg = x;
        }
    }
    if (!seen_pos) {
        r.pattern = SweepResult::Pattern::all_nonpositive;
        return r;
    }
    r.pattern = SweepResult::Pattern::single_change;
    r.last_negative = seen_neg ? last_neg : lo;
    r.first_positive = first_pos;
    return r;
}

// Golden-section shrink of a minimizer bracket for a unimodal f on [a, b].
// Returns [xl, xr] containing the minimizer, of width <= target_width.
std::pair<double, double> golden_bracket(const std::function<double(double)>& f, double a,
                                         double b, double target_width,
                                         std::size_t max_iter = 400) {
    static const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;   // 0.618...
    static const double invphi2 = (3.0 - std::sqrt(5.0)) / 2.0;  // 0.382...
    double h = b - a;
    double x1 = a + invphi2 * h, x2 = a + invphi * h;
    double f1 = f(x1), f2 = f(x2);
    for (std::size_t i = 0; i < max_iter && h > target_width; ++i) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            h = b - a;
            x1 = a + invphi2 * h;
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            h = b - a;
            x2 = a + invphi * h;
            f2 = f(x2);
        }
    }
    return {a, b};
}

// Interval Horner evaluation of sum_{k=0}^{t-1} x^k.
Interval geometric_sum(const Interval& x, int t) {
    Interval acc(1.0);
    for (int k = 1; k < t; ++k) acc = acc * x + Interval(1.0);
    return acc;
}

}  // namespace

JValue compute_J(const JParams& p, double tol) {
    if (p.t < 2) throw std::invalid_argument("compute_J: t must be >= 2");
    if (!(p.d > 0) || !std::isfinite(p.d))
        throw std::invalid_argument("compute_J: d must be positive and finite");
    if (!(tol > 0)) throw std::invalid_argument("compute_J: tolerance must be positive");

    const int t = p.t;
    const double c = static_cast<double>(t - 1) / p.d;

    // h carries the sign of f'; its coefficients (k - c) change sign at most
    // once, so the sweep below is expected to be clean.
    auto h = [&](double x) {
        double acc = 0.0;
        for (int k = t - 1; k >= 0; --k) acc = acc * x + (static_cast<double>(k) - c);
        return acc;
    };
    auto f = [&](double x) {
        double acc = 0.0;
        for (int k = 0; k < t; ++k) acc = acc * x + 1.0;
        return acc * std::pow(x, -c) / static_cast<double>(t);
    };

    // h(1) = t(t-1)(1/2 - 1/d): nonpositive exactly when the infimum is the
    // boundary limit f(1-) = 1.
    const double h_at_one =
        static_cast<double>(t) * static_cast<double>(t - 1) * (0.5 - 1.0 / p.d);
    if (h_at_one <= 0) {
        SweepResult sw = sweep_signs(h, 0.0, 1.0, 512);
        if (sw.pattern != SweepResult::Pattern::all_nonpositive)
            throw std::runtime_error("compute_J: failed to certify boundary infimum");
        return JValue{Interval(1.0), 1.0, false};
    }

    std::size_t grid = 512;
    SweepResult sw = sweep_signs(h, 0.0, 1.0, grid);
    while (sw.pattern != SweepResult::Pattern::single_change) {
        grid *= 2;
        if (grid > (1u << 16))
            throw std::runtime_error("compute_J: derivative sign sweep did not stabilize");
        sw = sweep_signs(h, 0.0, 1.0, grid);
    }

    const double bracket_width =
        std::max(1e-12, tol / (200.0 * static_cast<double>(t) * static_cast<double>(t) *
                               std::max(1.0, c)));
    auto [xl, xr] = golden_bracket(f, sw.last_negative, sw.first_positive, bracket_width);

    const Interval x(xl, xr);
    Interval value = geometric_sum(x, t) * Interval::pow_real(x, -c) /
                     Interval(static_cast<double>(t));
    if (value.width() > tol)
        throw std::runtime_error("compute_J: enclosure wider than requested tolerance");
    return JValue{value, 0.5 * (xl + xr), true};
}

Interval j_limit_d3() {
    auto g = [](double z) { return (z - 1.0 / (z * z)) / (3.0 * std::log(z)); };
    // numerator of g'; same sign as g' for z > 1
    auto psi = [](double z) {
        const double z3 = z * z * z;
        return (1.0 + 2.0 / z3) * 3.0 * std::log(z) - (z - 1.0 / (z * z)) * 3.0 / z;
    };

    double z_max = 8.0;
    const double z_lo = 1.0 + 1e-3;
    SweepResult sw = sweep_signs(psi, z_lo, z_max, 1024);
    while (sw.pattern != SweepResult::Pattern::single_change) {
        z_max *= 2.0;
        if (z_max > 1e6) throw std::runtime_error("j_limit_d3: minimum not bracketed");
        sw = sweep_signs(psi, z_lo, z_max, 1024);
    }

    auto [zl, zr] = golden_bracket(g, sw.last_negative, sw.first_positive, 1e-9);
    const Interval z(zl, zr);
    const Interval num = z - Interval(1.0) / (z * z);
    const Interval den = Interval(3.0) * Interval::log(z);
    Interval value = num / den;
    if (value.width() > 1e-6)
        throw std::runtime_error("j_limit_d3: enclosure wider than 1e-6");
    return value;
}

namespace {

Interval power_bound(unsigned n, unsigned base, const JValue& j) {
    Interval inner = Interval(static_cast<double>(base)) * j.value;
    return Interval(2.0) * Interval::pow_int(inner, n);
}

}  // namespace

Interval corollary_bound(unsigned n, unsigned q, std::uint64_t s, double tol) {
    if (s == 0) throw std::invalid_argument("corollary_bound: s must be >= 1");
    if (n < 1) throw std::invalid_argument("corollary_bound: n must be >= 1");
    // d = n(q-1)/s as an exact rational, then rounded once to double
    const Scalar d_exact(BigInt(static_cast<unsigned long>(n)) * (q - 1),
                         BigInt(static_cast<unsigned long>(s)));
    JValue j = compute_J(JParams{static_cast<int>(q), d_exact.to_double()}, tol);
    return power_bound(n, q, j);
}

Interval maincor2_bound(unsigned n, unsigned t, std::uint64_t deg_p, double tol) {
    if (deg_p == 0) throw std::invalid_argument("maincor2_bound: deg(P) must be >= 1");
    if (n < 1) throw std::invalid_argument("maincor2_bound: n must be >= 1");
    const Scalar d_exact(BigInt(2) * static_cast<unsigned long>(n) * (t - 1),
                         BigInt(static_cast<unsigned long>(deg_p)));
    JValue j = compute_J(JParams{static_cast<int>(t), d_exact.to_double()}, tol);
    return power_bound(n, t, j);
}

}  // namespace boxdist
