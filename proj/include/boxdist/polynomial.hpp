#pragma once

/**
 * @file polynomial.hpp
 * @brief Sparse multivariate polynomials over the rationals, the
 *        distance-palette witness construction, and the checkable
 *        conditions of the slice-rank cardinality bounds.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "boxdist/bounds.hpp"
#include "boxdist/geometry.hpp"
#include "boxdist/rational.hpp"

namespace boxdist {

/// Sparse polynomial: exponent vector -> nonzero rational coefficient.
/// Term storage is an ordered map keyed by exponent vectors, so iteration
/// order (and everything derived from it) is deterministic.
class MultiPoly {
public:
    using Exponents = std::vector<std::uint32_t>;
    using TermMap = std::map<Exponents, Scalar>;

    explicit MultiPoly(std::size_t nvars);  // zero polynomial

    static MultiPoly constant(std::size_t nvars, const Scalar& c);
    static MultiPoly monomial(std::size_t nvars, Exponents exps, const Scalar& coef);

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    /// Maximum exponent sum over stored terms; 0 for the zero polynomial.
    std::size_t total_degree() const { return total_degree_; }
    /// Every exponent <= 1.
    bool is_multilinear() const;

    /// Adds c * x^exps, dropping the term if the coefficient cancels.
    void add_term(const Exponents& exps, const Scalar& c);

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;

    /// Exact evaluation at one rational value per variable.
    Scalar evaluate_at(std::span<const Scalar> values) const;

    bool operator==(const MultiPoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

private:
    void recompute_degree();

    std::size_t nvars_;
    std::size_t total_degree_ = 0;
    TermMap terms_;
};

/// The witness for an s-palette in dimension n:
///   P(x, y) = prod_i ( sum_j (x_j - y_j)^2 - v_i ),
/// expanded, in 2n variables (x_1..x_n, y_1..y_n). Palette values are
/// squared distances, used as-is. deg(P) = 2 * |palette|.
MultiPoly build_distance_polynomial(std::size_t n, const SquaredDistancePalette& palette);

/// P(a, b) for a polynomial in 2n variables. Throws on dimension mismatch.
Scalar evaluate(const MultiPoly& P, const Point& a, const Point& b);

struct WitnessCheckResult {
    bool condition_i_ok;   // P(a,a) != 0 for every a in F
    bool condition_ii_ok;  // P(a,b) == 0 for all ordered distinct pairs
    /// First violating pair in lexicographic point order; (a,a) for a
    /// condition-(i) violation. Engaged only when a condition failed.
    std::optional<std::pair<Point, Point>> first_violation;
    BigInt bound_maincor;      // 2 * count_monomials(n, t, floor(deg/2))
    Interval bound_maincor2;   // 2 * (t * J(t, 2n(t-1)/deg))^n
};

/// Checks conditions (i) and (ii) of the slice-rank bound for P against F,
/// and reports both cardinality bounds. The bounds are reported regardless
/// of the flags (they are hypotheses when the flags fail, flagged as such by
/// the caller). Requires deg(P) >= 1 and the box side size to equal t.
WitnessCheckResult verify_witness(const MultiPoly& P, const PointSet& F, unsigned t);

enum class ClpStatus {
    verified,             // hypotheses hold and P(0) == 0
    counterexample,       // hypotheses hold and P(0) != 0 (impossible if sound)
    cardinality_not_met,  // |F| <= 2 * sum_{i<=deg/2} C(n,i)
    vanishing_not_met,    // some P(a-b) != 0
};

struct ClpCheckResult {
    ClpStatus status;
    bool zero_at_origin;  // P(0) == 0, reported in every status
    BigInt threshold;
};

/// Instance check of the multilinear vanishing lemma: P multilinear in n
/// variables; if |F| exceeds the threshold and P vanishes on all pairwise
/// differences, then P must vanish at the origin. Throws if P is not
/// multilinear or dimensions mismatch.
ClpCheckResult clp_check(const MultiPoly& P, const PointSet& F);

}  // namespace boxdist
