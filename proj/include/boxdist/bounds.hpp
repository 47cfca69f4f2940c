#pragma once

/**
 * @file bounds.hpp
 * @brief Cardinality bounds for few-distance and scalar-product sets in
 *        boxes: exact combinatorial counts plus certified enclosures of the
 *        J(t,d) optimization constant.
 *
 * Combinatorial bounds return arbitrary-precision integers. Real-valued
 * bounds built on J return Interval enclosures so downstream comparisons
 * stay sound under floating point.
 */

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "boxdist/interval.hpp"
#include "boxdist/rational.hpp"

namespace boxdist {

/// Number of exponent vectors a in {0,...,q-1}^n with sum(a) <= s, by a
/// running truncated convolution with the length-q all-ones sequence
/// (O(n*s) big-int additions). s > n(q-1) saturates to q^n.
BigInt count_monomials(unsigned n, unsigned q, std::uint64_t s);

/// C(n+s, s).
BigInt bbs_bound(unsigned n, std::uint64_t s);

/// C(n+s-1, s) + C(n+s-2, s-1). Requires n >= 2 and s >= 1.
BigInt dgs_bound(unsigned n, std::uint64_t s);

/// Same value as bbs_bound; kept as a distinct named report for provenance.
BigInt deza_frankl_bound(unsigned n, std::uint64_t s);

/// 2 * sum_{i=0}^{floor(d/2)} C(n, i).
BigInt clp_threshold(unsigned n, std::uint64_t d);

/// 2 * count_monomials(n, q, s).
BigInt main_theorem_bound(unsigned n, unsigned q, std::uint64_t s);

/// count_monomials(n, q, s), no factor 2 (scalar-product variant).
BigInt dfrank_box_bound(unsigned n, unsigned q, std::uint64_t s);

/// Parameters of J(t,d) = (1/t) * inf_{0<x<1} (1-x^t)/(1-x) * x^{-(t-1)/d}.
/// d may be any positive real: the bound formulas use d = n(q-1)/s, which
/// need not be an integer, and the minimand is well-defined for all d > 0.
struct JParams {
    int t;     // >= 2
    double d;  // > 0
};

struct JValue {
    Interval value;
    double argmin_estimate;  // in (0, 1]
    bool attained_interior;  // false when the infimum is the limit at x -> 1
};

/// Encloses J(t,d) to width <= tol. Strategy: the sign of f' equals the sign
/// of h(x) = sum_k (k - (t-1)/d) x^k, whose coefficient sequence has at most
/// one sign change, so f is decreasing-then-increasing. A grid sweep of h
/// certifies the sign pattern (refining on inconsistency), golden-section
/// narrows the minimizer bracket, and interval evaluation of f over the
/// final bracket yields the enclosure. When h <= 0 on (0,1) (exactly when
/// d <= 2) the infimum is the boundary limit 1, reported with
/// attained_interior = false.
JValue compute_J(const JParams& p, double tol);

/// Encloses lim_{q->inf} J(q,3) = inf_{z>1} (z - z^{-2}) / (3 log z) to
/// width <= 1e-6, by the same sweep/golden/interval scheme on (1, Z_max]
/// with Z_max grown until the minimum is interior.
Interval j_limit_d3();

/// 2 * (q * J(q, n(q-1)/s))^n, s >= 1.
Interval corollary_bound(unsigned n, unsigned q, std::uint64_t s, double tol);

/// 2 * (t * J(t, 2n(t-1)/deg_p))^n, deg_p >= 1.
Interval maincor2_bound(unsigned n, unsigned t, std::uint64_t deg_p, double tol);

/// A named bound evaluation, for tables and JSON output.
struct BoundReport {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;
    std::variant<BigInt, Interval> value;
};

}  // namespace boxdist
