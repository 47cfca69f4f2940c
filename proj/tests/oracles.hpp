#pragma once

// Independent brute-force oracles used to freeze expected values. These must
// stay naive: they validate the library by a different route, never by
// calling into the code paths they check.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "boxdist/geometry.hpp"
#include "boxdist/rational.hpp"

namespace oracle {

// Exhaustive count of exponent vectors in {0..q-1}^n with sum <= s.
inline std::uint64_t count_monomials_brute(unsigned n, unsigned q, std::uint64_t s) {
    std::vector<unsigned> e(n, 0);
    std::uint64_t count = 0;
    for (;;) {
        std::uint64_t sum = 0;
        for (unsigned x : e) sum += x;
        if (sum <= s) ++count;
        std::size_t i = n;
        bool done = true;
        while (i-- > 0) {
            if (++e[i] < q) {
                done = false;
                break;
            }
            e[i] = 0;
        }
        if (done) return count;
    }
}

// Maximum subset size with at most s distinct pairwise squared distances,
// by enumerating all 2^N subsets. For each s the best size is recorded, so
// one pass serves every cap.
inline std::vector<std::size_t> best_by_palette_size(const std::vector<boxdist::Point>& pts) {
    const std::size_t N = pts.size();
    boxdist::DistanceTable table(pts);
    const std::size_t U = table.value_count();
    std::vector<std::size_t> best(U + 1, 0);  // best[s]: max size with palette <= s
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << N); ++mask) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < N; ++i)
            if (mask & (std::uint64_t{1} << i)) members.push_back(i);
        std::set<std::uint32_t> palette;
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                palette.insert(table.id(members[i], members[j]));
        const std::size_t s = palette.size();
        if (s <= U && members.size() > best[s]) best[s] = std::max(best[s], members.size());
    }
    // palette <= s admits every smaller palette too
    for (std::size_t s = 1; s <= U; ++s) best[s] = std::max(best[s], best[s - 1]);
    return best;
}

// Uniform random rational with numerator in [-bound, bound], denominator in
// [1, max_den].
inline boxdist::Scalar random_rational(std::mt19937& rng, long bound = 20, long max_den = 8) {
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, max_den);
    return boxdist::Scalar(num(rng), den(rng));
}

inline boxdist::Point random_point(std::mt19937& rng, std::size_t dim, long bound = 20,
                                   long max_den = 8) {
    std::vector<boxdist::Scalar> c;
    c.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) c.push_back(random_rational(rng, bound, max_den));
    return boxdist::Point(std::move(c));
}

// k distinct points sampled from the box's point list.
inline std::vector<boxdist::Point> sample_points(std::mt19937& rng,
                                                 const std::vector<boxdist::Point>& all,
                                                 std::size_t k) {
    std::vector<std::size_t> idx(all.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<boxdist::Point> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) out.push_back(all[idx[i]]);
    return out;
}

// High-resolution grid minimization of f(x) = (sum_{k<t} x^k) x^{-(t-1)/d}/t
// over (0,1); an enclosure-free double estimate, independent of the
// library's sweep/golden machinery.
inline double grid_min_J(int t, double d, std::size_t grid = 2'000'000) {
    const double c = static_cast<double>(t - 1) / d;
    double best = 1.0;  // boundary value at x -> 1
    for (std::size_t i = 1; i < grid; ++i) {
        const double x = static_cast<double>(i) / static_cast<double>(grid);
        double acc = 0.0;
        for (int k = 0; k < t; ++k) acc = acc * x + 1.0;
        const double v = acc * std::pow(x, -c) / static_cast<double>(t);
        if (v < best) best = v;
    }
    return best;
}

}  // namespace oracle
