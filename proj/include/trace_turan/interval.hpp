#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace trace_turan {

/// Closed interval of doubles with outward rounding: every operation widens
/// its result by one ulp per side (two for log, whose libm rounding is not
/// guaranteed), so the true real value is always enclosed.
class Interval {
 public:
  Interval(double v) : lo_(v), hi_(v) {}  // NOLINT: exact point
  Interval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!(lo <= hi)) throw std::invalid_argument("Interval: lo > hi");
  }

  double lo() const { return lo_; }
  double hi() const { return hi_; }

  friend Interval operator+(Interval a, Interval b) { return widen(a.lo_ + b.lo_, a.hi_ + b.hi_, 1); }
  friend Interval operator-(Interval a, Interval b) { return widen(a.lo_ - b.hi_, a.hi_ - b.lo_, 1); }
  friend Interval operator*(Interval a, Interval b) {
    const double p[] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
    return widen(std::fmin(std::fmin(p[0], p[1]), std::fmin(p[2], p[3])),
                 std::fmax(std::fmax(p[0], p[1]), std::fmax(p[2], p[3])), 1);
  }
  friend Interval operator/(Interval a, Interval b) {
    if (b.lo_ <= 0.0 && b.hi_ >= 0.0) throw std::domain_error("Interval: division by an interval containing 0");
    return a * widen(1.0 / b.hi_, 1.0 / b.lo_, 1);
  }

  friend Interval sqrt(Interval a) {
    if (a.lo_ < 0.0) throw std::domain_error("Interval: sqrt of negative");
    return widen(std::sqrt(a.lo_), std::sqrt(a.hi_), 1);
  }
  friend Interval log(Interval a) {
    if (a.lo_ <= 0.0) throw std::domain_error("Interval: log of nonpositive");
    return widen(std::log(a.lo_), std::log(a.hi_), 2);
  }
  /// a^{3/2} for a >= 0.
  friend Interval pow_three_halves(Interval a) { return a * sqrt(a); }

 private:
  static Interval widen(double lo, double hi, int ulps) {
    for (int i = 0; i < ulps; ++i) {
      lo = std::nextafter(lo, -std::numeric_limits<double>::infinity());
      hi = std::nextafter(hi, std::numeric_limits<double>::infinity());
    }
    return Interval(lo, hi);
  }

  double lo_;
  double hi_;
};

}  // namespace trace_turan
