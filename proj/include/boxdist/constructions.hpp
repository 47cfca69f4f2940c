#pragma once

/// Lower-bound constructions and their validated parameters.

#include <cstddef>

#include "boxdist/geometry.hpp"
#include "boxdist/rational.hpp"

namespace boxdist {

struct ConstructionReport {
    PointSet points;
    BigInt claimed_size;
    SquaredDistancePalette palette;  // computed by enumeration, not assumed
    std::size_t s_achieved;          // |palette|
};

/// Characteristic vectors of all s-subsets of [n] inside {0,1}^n: C(n,s)
/// points whose squared distances are {2, 4, ..., 2*min(s, n-s)}. The set
/// realizes exactly min(s, n-s) distances, so it is an s-distance set with
/// s attained precisely when s <= n/2. Requires 0 < s <= n.
ConstructionReport characteristic_vector_set(std::size_t n, std::size_t s);

/// The whole box as the baseline construction: s_achieved is the size of
/// the global palette.
ConstructionReport full_box_report(const Box& box);

}  // namespace boxdist
