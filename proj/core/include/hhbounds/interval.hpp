#ifndef HHBOUNDS_INTERVAL_HPP
#define HHBOUNDS_INTERVAL_HPP

#include <cmath>
#include <string>

#include "hhbounds/errors.hpp"

namespace hhb {

/// Closed integration interval [a, b] with finite a < b.
class Interval {
public:
  Interval(double a, double b) : a_(a), b_(b) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
      throw ParameterError("interval requires finite a < b, got [" + std::to_string(a) + ", " +
                           std::to_string(b) + "]");
    }
  }

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double width() const noexcept { return b_ - a_; }
  double midpoint() const noexcept { return 0.5 * (a_ + b_); }

  /// Point t*b + (1-t)*a of the unit parametrisation.
  double at(double t) const noexcept { return t * b_ + (1.0 - t) * a_; }

  bool contains(double x) const noexcept { return a_ <= x && x <= b_; }

  friend bool operator==(const Interval&, const Interval&) = default;

private:
  double a_;
  double b_;
};

}  // namespace hhb

#endif  // HHBOUNDS_INTERVAL_HPP
