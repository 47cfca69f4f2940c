#include "boxdist/geometry.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace boxdist {

Point::Point(std::vector<Scalar> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw std::invalid_argument("Point: empty coordinate list");
}

bool Point::operator<(const Point& o) const {
    return std::lexicographical_compare(coords_.begin(), coords_.end(),
                                        o.coords_.begin(), o.coords_.end());
}

Box::Box(std::vector<std::vector<Scalar>> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw std::invalid_argument("Box: dimension must be >= 1");
    std::size_t q = coords_.front().size();
    for (auto& set : coords_) {
        if (set.size() != q)
            throw std::invalid_argument("Box: coordinate sets must all have the same size");
        std::sort(set.begin(), set.end());
        if (std::adjacent_find(set.begin(), set.end()) != set.end())
            throw std::invalid_argument("Box: duplicate value in a coordinate set");
    }
    if (q < 2) throw std::invalid_argument("Box: coordinate sets must have size >= 2");
}

bool Box::contains(const Point& p) const {
    if (p.dimension() != dimension()) return false;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        const auto& set = coords_[i];
        if (!std::binary_search(set.begin(), set.end(), p[i])) return false;
    }
    return true;
}

BigInt Box::point_count() const {
    BigInt c;
    mpz_ui_pow_ui(c.get_mpz_t(), static_cast<unsigned long>(side_size()),
                  static_cast<unsigned long>(dimension()));
    return c;
}

std::vector<Point> Box::all_points(std::uint64_t max_points) const {
    if (point_count() > BigInt(static_cast<unsigned long>(max_points)))
        throw std::invalid_argument("Box: too many points to enumerate");
    const std::size_t n = dimension(), q = side_size();
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(mpz_get_ui(point_count().get_mpz_t())));
    std::vector<std::size_t> idx(n, 0);
    for (;;) {
        std::vector<Scalar> c(n);
        for (std::size_t i = 0; i < n; ++i) c[i] = coords_[i][idx[i]];
        out.emplace_back(std::move(c));
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (++idx[i] < q) break;
            idx[i] = 0;
            if (i == 0) return out;
        }
    }
}

Box Box::integer_grid(std::size_t n, std::size_t q) {
    std::vector<Scalar> side;
    side.reserve(q);
    for (std::size_t v = 0; v < q; ++v) side.emplace_back(static_cast<long>(v));
    return Box(std::vector<std::vector<Scalar>>(n, side));
}

SquaredDistancePalette::SquaredDistancePalette(std::vector<Scalar> values)
    : values_(std::move(values)) {
    for (const auto& v : values_)
        if (v.sgn() <= 0)
            throw std::invalid_argument("SquaredDistancePalette: values must be positive");
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

bool SquaredDistancePalette::contains(const Scalar& v) const {
    return std::binary_search(values_.begin(), values_.end(), v);
}

ScalarProductSet::ScalarProductSet(std::vector<Scalar> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

bool ScalarProductSet::contains(const Scalar& v) const {
    return std::binary_search(values_.begin(), values_.end(), v);
}

PointSet::PointSet(Box box, std::vector<Point> points)
    : box_(std::move(box)), points_(std::move(points)) {
    for (const auto& p : points_) {
        if (p.dimension() != box_.dimension())
            throw std::invalid_argument("PointSet: point dimension does not match box");
        if (!box_.contains(p))
            throw std::invalid_argument("PointSet: point outside box");
    }
    std::set<Point> seen;
    for (const auto& p : points_)
        if (!seen.insert(p).second)
            throw std::invalid_argument("PointSet: duplicate point");
}

Scalar squared_distance(const Point& a, const Point& b) {
    if (a.dimension() != b.dimension())
        throw std::invalid_argument("squared_distance: dimension mismatch");
    Scalar acc;
    for (std::size_t j = 0; j < a.dimension(); ++j) {
        Scalar d = a[j] - b[j];
        acc += d * d;
    }
    return acc;
}

Scalar dot_product(const Point& a, const Point& b) {
    if (a.dimension() != b.dimension())
        throw std::invalid_argument("dot_product: dimension mismatch");
    Scalar acc;
    for (std::size_t j = 0; j < a.dimension(); ++j) acc += a[j] * b[j];
    return acc;
}

SquaredDistancePalette distance_palette(const PointSet& F) {
    if (F.size() == 0) throw std::invalid_argument("distance_palette: empty point set");
    DistanceTable table(F.points());
    return SquaredDistancePalette(table.values());
}

bool is_s_distance_set(const PointSet& F, std::size_t s) {
    return distance_palette(F).size() <= s;
}

ScalarProductSet scalar_product_set(const PointSet& F) {
    if (F.size() == 0) throw std::invalid_argument("scalar_product_set: empty point set");
    std::vector<Scalar> vals;
    const auto& pts = F.points();
    vals.reserve(pts.size() * (pts.size() - 1) / 2);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            vals.push_back(dot_product(pts[i], pts[j]));
    return ScalarProductSet(std::move(vals));
}

bool check_df_conditions(const PointSet& F, std::size_t s) {
    if (F.size() == 0) throw std::invalid_argument("check_df_conditions: empty point set");
    ScalarProductSet sp = F.size() > 1 ? scalar_product_set(F) : ScalarProductSet();
    if (sp.size() > s) return false;
    for (const auto& f : F.points())
        if (sp.contains(dot_product(f, f))) return false;
    return true;
}

namespace {

// Scaled-integer fast path: with L = lcm of all coordinate denominators and
// u = L*x, squared distances are (integer value) / L^2. Usable when the
// scaled coordinates and the worst-case sum of squares fit in int64.
bool try_scaled_int64(const std::vector<Point>& pts, std::vector<std::int64_t>& flat,
                      BigInt& scale_out) {
    BigInt lcm(1);
    for (const auto& p : pts)
        for (const auto& c : p.coords())
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
    const std::size_t dim = pts.front().dimension();
    flat.clear();
    flat.reserve(pts.size() * dim);
    BigInt max_abs(0);
    for (const auto& p : pts) {
        for (const auto& c : p.coords()) {
            BigInt u = c.numerator() * (lcm / c.denominator());
            BigInt a = ::abs(u);
            if (a > max_abs) max_abs = a;
            if (!u.fits_slong_p()) return false;
            flat.push_back(static_cast<std::int64_t>(u.get_si()));
        }
    }
    // worst pair term: dim * (2*max_abs)^2 must fit comfortably
    BigInt worst = BigInt(static_cast<unsigned long>(dim)) * 4 * max_abs * max_abs;
    if (worst > BigInt("4611686018427387903")) return false;  // 2^62 - 1
    scale_out = lcm;
    return true;
}

}  // namespace

DistanceTable::DistanceTable(const std::vector<Point>& pts) : n_(pts.size()) {
    if (n_ == 0) throw std::invalid_argument("DistanceTable: empty point list");
    const std::size_t dim = pts.front().dimension();
    for (const auto& p : pts)
        if (p.dimension() != dim)
            throw std::invalid_argument("DistanceTable: mixed dimensions");
    if (n_ == 1) return;
    ids_.resize(n_ * (n_ - 1) / 2);

    std::vector<std::int64_t> flat;
    BigInt scale;
    if (try_scaled_int64(pts, flat, scale)) {
        std::unordered_map<std::int64_t, std::uint32_t> intern;
        std::vector<std::int64_t> raw_values;
        std::size_t k = 0;
        for (std::size_t j = 1; j < n_; ++j) {
            const std::int64_t* pj = &flat[j * dim];
            for (std::size_t i = 0; i < j; ++i, ++k) {
                const std::int64_t* pi = &flat[i * dim];
                std::int64_t acc = 0;
                for (std::size_t t = 0; t < dim; ++t) {
                    std::int64_t d = pi[t] - pj[t];
                    acc += d * d;
                }
                auto [it, fresh] =
                    intern.emplace(acc, static_cast<std::uint32_t>(raw_values.size()));
                if (fresh) raw_values.push_back(acc);
                ids_[k] = it->second;
            }
        }
        // remap interned ids so that id order is value order
        std::vector<std::uint32_t> order(raw_values.size());
        for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
            return raw_values[a] < raw_values[b];
        });
        std::vector<std::uint32_t> rank(raw_values.size());
        for (std::uint32_t r = 0; r < order.size(); ++r) rank[order[r]] = r;
        for (auto& id : ids_) id = rank[id];
        const Scalar denom{BigInt(scale * scale)};
        values_.reserve(raw_values.size());
        for (std::uint32_t r = 0; r < order.size(); ++r)
            values_.push_back(Scalar(BigInt(static_cast<long>(raw_values[order[r]]))) / denom);
        return;
    }

    // exact rational fallback
    std::map<Scalar, std::uint32_t> intern;
    std::vector<Scalar> raw_values;
    std::size_t k = 0;
    for (std::size_t j = 1; j < n_; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++k) {
            Scalar d2 = squared_distance(pts[i], pts[j]);
            auto [it, fresh] = intern.emplace(d2, static_cast<std::uint32_t>(raw_values.size()));
            if (fresh) raw_values.push_back(d2);
            ids_[k] = it->second;
        }
    }
    std::vector<std::uint32_t> order(raw_values.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return raw_values[a] < raw_values[b];
    });
    std::vector<std::uint32_t> rank(raw_values.size());
    for (std::uint32_t r = 0; r < order.size(); ++r) rank[order[r]] = r;
    for (auto& id : ids_) id = rank[id];
    values_.reserve(raw_values.size());
    for (std::uint32_t r = 0; r < order.size(); ++r) values_.push_back(raw_values[order[r]]);
}

}  // namespace boxdist
