#include "boxdist/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace boxdist {

MultiPoly::MultiPoly(std::size_t nvars) : nvars_(nvars) {
    if (nvars_ == 0) throw std::invalid_argument("MultiPoly: nvars must be >= 1");
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Scalar& c) {
    MultiPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::monomial(std::size_t nvars, Exponents exps, const Scalar& coef) {
    if (exps.size() != nvars) throw std::invalid_argument("MultiPoly: exponent length mismatch");
    MultiPoly p(nvars);
    p.add_term(exps, coef);
    return p;
}

bool MultiPoly::is_multilinear() const {
    for (const auto& [e, c] : terms_)
        for (auto x : e)
            if (x > 1) return false;
    return true;
}

void MultiPoly::add_term(const Exponents& exps, const Scalar& c) {
    if (exps.size() != nvars_) throw std::invalid_argument("MultiPoly: exponent length mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
        std::size_t d = std::accumulate(exps.begin(), exps.end(), std::size_t{0});
        total_degree_ = std::max(total_degree_, d);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) {
        terms_.erase(it);
        recompute_degree();
    }
}

void MultiPoly::recompute_degree() {
    total_degree_ = 0;
    for (const auto& [e, c] : terms_) {
        std::size_t d = std::accumulate(e.begin(), e.end(), std::size_t{0});
        total_degree_ = std::max(total_degree_, d);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("MultiPoly: mixed variable counts");
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("MultiPoly: mixed variable counts");
    MultiPoly r(nvars_);
    Exponents e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, -c);
    return r;
}

Scalar MultiPoly::evaluate_at(std::span<const Scalar> values) const {
    if (values.size() != nvars_) throw std::invalid_argument("MultiPoly: value count mismatch");
    // per-variable power tables up to the needed exponent
    std::vector<std::uint32_t> max_exp(nvars_, 0);
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < nvars_; ++i) max_exp[i] = std::max(max_exp[i], e[i]);
    std::vector<std::vector<Scalar>> pow(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
        pow[i].resize(max_exp[i] + 1);
        pow[i][0] = Scalar(1);
        for (std::uint32_t k = 1; k <= max_exp[i]; ++k) pow[i][k] = pow[i][k - 1] * values[i];
    }
    Scalar acc;
    for (const auto& [e, c] : terms_) {
        Scalar term = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            if (e[i] > 0) term *= pow[i][e[i]];
        acc += term;
    }
    return acc;
}

MultiPoly build_distance_polynomial(std::size_t n, const SquaredDistancePalette& palette) {
    if (n == 0) throw std::invalid_argument("build_distance_polynomial: n must be >= 1");
    if (palette.empty()) throw std::invalid_argument("build_distance_polynomial: empty palette");
    const std::size_t nv = 2 * n;

    // one factor: sum_j (x_j - y_j)^2 - v
    auto factor = [&](const Scalar& v) {
        MultiPoly f(nv);
        MultiPoly::Exponents e(nv, 0);
        for (std::size_t j = 0; j < n; ++j) {
            e.assign(nv, 0);
            e[j] = 2;
            f.add_term(e, Scalar(1));  // x_j^2
            e.assign(nv, 0);
            e[n + j] = 2;
            f.add_term(e, Scalar(1));  // y_j^2
            e.assign(nv, 0);
            e[j] = 1;
            e[n + j] = 1;
            f.add_term(e, Scalar(-2));  // -2 x_j y_j
        }
        f.add_term(MultiPoly::Exponents(nv, 0), -v);
        return f;
    };

    MultiPoly p = MultiPoly::constant(nv, Scalar(1));
    for (const auto& v : palette.values()) p = p * factor(v);
    return p;
}

namespace {

// 128-bit integer fast path for repeated evaluations of one polynomial at
// integral points. Falls back to exact rationals when coefficients or
// coordinates do not fit, or when the worst-case magnitude could overflow.
class FastEvaluator {
public:
    FastEvaluator(const MultiPoly& p, const std::vector<Point>& pts) : poly_(p) {
        usable_ = prepare(pts);
    }

    bool usable() const { return usable_; }

    // index pair (a_idx, b_idx) into the prepared point list; variables are
    // split as (x = pts[a], y = pts[b])
    bool is_zero_at(std::size_t a_idx, std::size_t b_idx) const {
        return eval(a_idx, b_idx) == 0;
    }

private:
    using I128 = __int128;

    bool prepare(const std::vector<Point>& pts) {
        const std::size_t n = pts.empty() ? 0 : pts.front().dimension();
        if (poly_.nvars() != 2 * n) return false;
        std::int64_t max_abs_coord = 0;
        coords_.reserve(pts.size());
        for (const auto& p : pts) {
            std::vector<std::int64_t> row(n);
            for (std::size_t j = 0; j < n; ++j) {
                const Scalar& c = p[j];
                if (!c.is_integer() || !c.numerator().fits_slong_p()) return false;
                row[j] = static_cast<std::int64_t>(c.numerator().get_si());
                max_abs_coord = std::max(max_abs_coord, std::abs(row[j]));
            }
            coords_.push_back(std::move(row));
        }
        double log2_max_term = 0.0;
        const double log2_coord = std::log2(static_cast<double>(std::max<std::int64_t>(
            2, max_abs_coord)));
        for (const auto& [e, c] : poly_.terms()) {
            if (!c.is_integer() || !c.numerator().fits_slong_p()) return false;
            std::size_t deg = std::accumulate(e.begin(), e.end(), std::size_t{0});
            const double lc = std::log2(std::max(
                2.0, std::abs(static_cast<double>(c.numerator().get_si()))));
            log2_max_term = std::max(log2_max_term,
                                     lc + static_cast<double>(deg) * log2_coord);
            exps_.push_back(e);
            coefs_.push_back(static_cast<std::int64_t>(c.numerator().get_si()));
        }
        const double log2_terms =
            std::log2(static_cast<double>(std::max<std::size_t>(2, poly_.term_count())));
        return log2_max_term + log2_terms < 120.0;
    }

    I128 eval(std::size_t a_idx, std::size_t b_idx) const {
        const std::size_t n = coords_[a_idx].size();
        I128 acc = 0;
        for (std::size_t t = 0; t < exps_.size(); ++t) {
            I128 term = coefs_[t];
            const auto& e = exps_[t];
            for (std::size_t j = 0; j < n; ++j) {
                for (std::uint32_t k = 0; k < e[j]; ++k) term *= coords_[a_idx][j];
                for (std::uint32_t k = 0; k < e[n + j]; ++k) term *= coords_[b_idx][j];
            }
            acc += term;
        }
        return acc;
    }

    const MultiPoly& poly_;
    std::vector<std::vector<std::int64_t>> coords_;
    std::vector<MultiPoly::Exponents> exps_;
    std::vector<std::int64_t> coefs_;
    bool usable_ = false;
};

std::vector<Scalar> joined_coords(const Point& a, const Point& b) {
    std::vector<Scalar> v;
    v.reserve(a.dimension() + b.dimension());
    for (std::size_t j = 0; j < a.dimension(); ++j) v.push_back(a[j]);
    for (std::size_t j = 0; j < b.dimension(); ++j) v.push_back(b[j]);
    return v;
}

}  // namespace

Scalar evaluate(const MultiPoly& P, const Point& a, const Point& b) {
    if (P.nvars() != a.dimension() + b.dimension() || a.dimension() != b.dimension())
        throw std::invalid_argument("evaluate: dimension mismatch");
    auto vals = joined_coords(a, b);
    return P.evaluate_at(vals);
}

WitnessCheckResult verify_witness(const MultiPoly& P, const PointSet& F, unsigned t) {
    const std::size_t n = F.box().dimension();
    if (P.nvars() != 2 * n)
        throw std::invalid_argument("verify_witness: polynomial must have 2n variables");
    if (F.box().side_size() != t)
        throw std::invalid_argument("verify_witness: box side size does not equal t");
    if (P.total_degree() == 0)
        throw std::invalid_argument("verify_witness: deg(P) must be >= 1");

    // canonical scan order: points sorted lexicographically
    std::vector<std::size_t> order(F.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return F.points()[i] < F.points()[j];
    });

    WitnessCheckResult res{true, true, std::nullopt, BigInt(0), Interval(0.0)};
    FastEvaluator fast(P, F.points());
    auto zero_at = [&](std::size_t i, std::size_t j) {
        if (fast.usable()) return fast.is_zero_at(i, j);
        return evaluate(P, F.points()[i], F.points()[j]).is_zero();
    };

    for (std::size_t i : order) {
        if (zero_at(i, i)) {
            res.condition_i_ok = false;
            if (!res.first_violation)
                res.first_violation = std::make_pair(F.points()[i], F.points()[i]);
            break;
        }
    }
    for (std::size_t i : order) {
        for (std::size_t j : order) {
            if (i == j) continue;
            if (!zero_at(i, j)) {
                res.condition_ii_ok = false;
                if (!res.first_violation)
                    res.first_violation = std::make_pair(F.points()[i], F.points()[j]);
                break;
            }
        }
        if (!res.condition_ii_ok) break;
    }

    const std::uint64_t deg = P.total_degree();
    res.bound_maincor = 2 * count_monomials(static_cast<unsigned>(n), t, deg / 2);
    res.bound_maincor2 = maincor2_bound(static_cast<unsigned>(n), t, deg, 1e-9);
    return res;
}

ClpCheckResult clp_check(const MultiPoly& P, const PointSet& F) {
    if (!P.is_multilinear())
        throw std::invalid_argument("clp_check: polynomial must be multilinear");
    const std::size_t n = F.box().dimension();
    if (P.nvars() != n)
        throw std::invalid_argument("clp_check: polynomial must have n variables");

    std::vector<Scalar> origin(n, Scalar(0));
    const bool zero_at_origin = P.evaluate_at(origin).is_zero();
    const BigInt threshold =
        clp_threshold(static_cast<unsigned>(n), P.total_degree());

    ClpCheckResult res{ClpStatus::verified, zero_at_origin, threshold};
    if (BigInt(static_cast<unsigned long>(F.size())) <= threshold) {
        res.status = ClpStatus::cardinality_not_met;
        return res;
    }

    std::vector<std::size_t> order(F.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return F.points()[i] < F.points()[j];
    });
    std::vector<Scalar> diff(n);
    for (std::size_t i : order) {
        for (std::size_t j : order) {
            if (i == j) continue;
            for (std::size_t k = 0; k < n; ++k)
                diff[k] = F.points()[i][k] - F.points()[j][k];
            if (!P.evaluate_at(diff).is_zero()) {
                res.status = ClpStatus::vanishing_not_met;
                return res;
            }
        }
    }
    res.status = zero_at_origin ? ClpStatus::verified : ClpStatus::counterexample;
    return res;
}

}  // namespace boxdist
