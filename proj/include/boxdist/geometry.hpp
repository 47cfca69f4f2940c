#pragma once

/**
 * @file geometry.hpp
 * @brief Exact boxes, point sets, squared-distance palettes and scalar
 *        products — the shared substrate for bounds, witnesses and search.
 *
 * All coordinates are exact rationals. Distances are kept squared: squared
 * distances of rational points are rational, and t -> t^2 is injective on
 * nonnegative reals, so palette sizes match the sizes of the distance sets.
 * Every type here is immutable after construction and every operation is a
 * pure function.
 */

#include <cstddef>
#include <cstdint>
#include <vector>

#include "boxdist/rational.hpp"

namespace boxdist {

class Point {
public:
    explicit Point(std::vector<Scalar> coords);

    std::size_t dimension() const { return coords_.size(); }
    const Scalar& operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<Scalar>& coords() const { return coords_; }

    bool operator==(const Point& o) const { return coords_ == o.coords_; }
    bool operator!=(const Point& o) const { return !(*this == o); }
    /// Lexicographic order on coordinate tuples; the canonical point order.
    bool operator<(const Point& o) const;

private:
    std::vector<Scalar> coords_;
};

class Box {
public:
    /// Coordinate sets may be given in any order; they are sorted here.
    /// Duplicate values inside a set, unequal set sizes, q < 2 or n < 1 are
    /// rejected.
    explicit Box(std::vector<std::vector<Scalar>> coords);

    std::size_t dimension() const { return coords_.size(); }           // n
    std::size_t side_size() const { return coords_.front().size(); }   // q
    const std::vector<Scalar>& coordinate_set(std::size_t i) const { return coords_[i]; }

    bool contains(const Point& p) const;
    BigInt point_count() const;  // q^n

    /// All q^n points in lexicographic order. Throws if q^n > max_points.
    std::vector<Point> all_points(std::uint64_t max_points = (1u << 20)) const;

    /// Integer grid {0,...,q-1}^n.
    static Box integer_grid(std::size_t n, std::size_t q);

    bool operator==(const Box& o) const { return coords_ == o.coords_; }

private:
    std::vector<std::vector<Scalar>> coords_;
};

class SquaredDistancePalette {
public:
    SquaredDistancePalette() = default;
    /// Values are sorted and deduplicated; non-positive values are rejected.
    explicit SquaredDistancePalette(std::vector<Scalar> values);

    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }
    const std::vector<Scalar>& values() const { return values_; }
    bool contains(const Scalar& v) const;

    bool operator==(const SquaredDistancePalette& o) const { return values_ == o.values_; }

private:
    std::vector<Scalar> values_;
};

class ScalarProductSet {
public:
    ScalarProductSet() = default;
    explicit ScalarProductSet(std::vector<Scalar> values);  // sorted, deduplicated

    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }
    const std::vector<Scalar>& values() const { return values_; }
    bool contains(const Scalar& v) const;

private:
    std::vector<Scalar> values_;
};

class PointSet {
public:
    /// Points are kept in the order given. Duplicates are an error, not a
    /// silent dedup: silently merging masks caller bugs in search code.
    /// Every point must lie in the box.
    PointSet(Box box, std::vector<Point> points);

    const Box& box() const { return box_; }
    const std::vector<Point>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }

    bool operator==(const PointSet& o) const {
        return box_ == o.box_ && points_ == o.points_;
    }

private:
    Box box_;
    std::vector<Point> points_;
};

/// Sum over coordinates of (a_j - b_j)^2, exact. Throws on dimension mismatch.
Scalar squared_distance(const Point& a, const Point& b);

/// Standard scalar product, exact. Throws on dimension mismatch.
Scalar dot_product(const Point& a, const Point& b);

/// Distinct squared distances over unordered distinct pairs of F.
/// Empty palette for a single point; throws on an empty set.
SquaredDistancePalette distance_palette(const PointSet& F);

/// |distance_palette(F)| <= s.
bool is_s_distance_set(const PointSet& F, std::size_t s);

/// Distinct scalar products over distinct pairs of F (symmetric, so
/// unordered pairs suffice). Throws on an empty set.
ScalarProductSet scalar_product_set(const PointSet& F);

/// Conditions of the scalar-product box bound:
///   (i)  (f,f) not in s(F) for every f in F,
///   (ii) |s(F)| <= s.
bool check_df_conditions(const PointSet& F, std::size_t s);

/**
 * Interned pairwise squared distances of a fixed point list.
 *
 * Distinct values are sorted ascending and addressed by dense ids; id order
 * equals value order. When all coordinates share a common denominator small
 * enough for the scaled integer coordinates to fit 64 bits, distances are
 * computed in machine integers; otherwise exact rational arithmetic is used.
 * Either way the interned values are exact.
 */
class DistanceTable {
public:
    explicit DistanceTable(const std::vector<Point>& pts);

    std::size_t point_count() const { return n_; }
    std::uint32_t value_count() const { return static_cast<std::uint32_t>(values_.size()); }
    const std::vector<Scalar>& values() const { return values_; }
    const Scalar& value(std::uint32_t id) const { return values_[id]; }

    /// Palette id of the squared distance between points i and j, i != j.
    std::uint32_t id(std::size_t i, std::size_t j) const {
        if (i > j) std::swap(i, j);
        return ids_[j * (j - 1) / 2 + i];
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint32_t> ids_;  // triangular, indexed by (i<j)
    std::vector<Scalar> values_;
};

}  // namespace boxdist
