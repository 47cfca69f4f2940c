#pragma once

/**
 * @file interval.hpp
 * @brief Closed double intervals with outward rounding slack.
 *
 * Arithmetic runs in round-to-nearest and every derived endpoint is widened
 * outward by a fixed ulp slack, so an Interval computed from enclosing inputs
 * remains a sound enclosure. Slack is 4 ulps per operation, which dominates
 * the <= 1 ulp error of the basic operations and of the libm calls used here.
 */

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace boxdist {

class Interval {
public:
    Interval() : lo_(0.0), hi_(0.0) {}
    Interval(double exact) : lo_(exact), hi_(exact) {}
    Interval(double lo, double hi) : lo_(lo), hi_(hi) {
        if (!(lo <= hi)) throw std::invalid_argument("Interval: lo > hi");
    }

    double lower() const { return lo_; }
    double upper() const { return hi_; }
    double width() const { return hi_ - lo_; }
    double midpoint() const { return 0.5 * (lo_ + hi_); }
    bool contains(double x) const { return lo_ <= x && x <= hi_; }
    bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }

    Interval operator-() const { return Interval(-hi_, -lo_); }

    friend Interval operator+(const Interval& a, const Interval& b) {
        return widened(a.lo_ + b.lo_, a.hi_ + b.hi_);
    }
    friend Interval operator-(const Interval& a, const Interval& b) {
        return widened(a.lo_ - b.hi_, a.hi_ - b.lo_);
    }
    friend Interval operator*(const Interval& a, const Interval& b) {
        double p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_;
        double p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
        return widened(std::min(std::min(p1, p2), std::min(p3, p4)),
                       std::max(std::max(p1, p2), std::max(p3, p4)));
    }
    friend Interval operator/(const Interval& a, const Interval& b) {
        if (b.lo_ <= 0.0 && 0.0 <= b.hi_)
            throw std::domain_error("Interval: division by interval containing zero");
        double p1 = a.lo_ / b.lo_, p2 = a.lo_ / b.hi_;
        double p3 = a.hi_ / b.lo_, p4 = a.hi_ / b.hi_;
        return widened(std::min(std::min(p1, p2), std::min(p3, p4)),
                       std::max(std::max(p1, p2), std::max(p3, p4)));
    }

    /// a^k for integer k >= 0, by repeated interval multiplication.
    static Interval pow_int(const Interval& a, unsigned k) {
        Interval acc(1.0);
        Interval base = a;
        while (k > 0) {
            if (k & 1u) acc = acc * base;
            k >>= 1u;
            if (k > 0) base = base * base;
        }
        return acc;
    }

    /// a^e for real e, requires a > 0. Monotone in the base.
    static Interval pow_real(const Interval& a, double e) {
        if (a.lo_ <= 0.0) throw std::domain_error("Interval: pow_real needs positive base");
        double u = std::pow(a.lo_, e), v = std::pow(a.hi_, e);
        return widened(std::min(u, v), std::max(u, v));
    }

    /// Natural log, requires a > 0.
    static Interval log(const Interval& a) {
        if (a.lo_ <= 0.0) throw std::domain_error("Interval: log needs positive argument");
        return widened(std::log(a.lo_), std::log(a.hi_));
    }

    static Interval hull(const Interval& a, const Interval& b) {
        return Interval(std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_));
    }

private:
    static constexpr int kSlackUlps = 4;

    static double step_down(double x) {
        for (int i = 0; i < kSlackUlps; ++i)
            x = std::nextafter(x, -std::numeric_limits<double>::infinity());
        return x;
    }
    static double step_up(double x) {
        for (int i = 0; i < kSlackUlps; ++i)
            x = std::nextafter(x, std::numeric_limits<double>::infinity());
        return x;
    }
    static Interval widened(double lo, double hi) {
        Interval r;
        r.lo_ = step_down(lo);
        r.hi_ = step_up(hi);
        return r;
    }

    double lo_, hi_;
};

}  // namespace boxdist
