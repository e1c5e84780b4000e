#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace banach {

// A Hoelder exponent p in [1, inf], stored together with its conjugate p'
// (1/p + 1/p' = 1).  Keeping both members means conjugate() is an exact swap,
// so conjugate(conjugate(p)) == p bit-for-bit and quantities like 1/p + 1/p'
// never drift from repeated division.
class Exponent {
 public:
  static constexpr double inf = std::numeric_limits<double>::infinity();

  Exponent() : value_(2.0), conj_(2.0) {}

  explicit Exponent(double p) : value_(p), conj_(conjugate_of(p)) {
    if (!(p >= 1.0))  // also rejects NaN
      throw std::invalid_argument("Exponent: p must satisfy p >= 1");
  }

  double value() const { return value_; }
  Exponent conjugate() const { return Exponent(conj_, value_); }

  bool is_one() const { return value_ == 1.0; }
  bool is_two() const { return value_ == 2.0; }
  bool is_inf() const { return std::isinf(value_); }
  bool is_finite() const { return !std::isinf(value_); }

  // 1/p with the convention 1/inf = 0.
  double reciprocal() const { return is_inf() ? 0.0 : 1.0 / value_; }

  friend bool operator==(const Exponent& a, const Exponent& b) {
    return a.value_ == b.value_;
  }
  friend bool operator!=(const Exponent& a, const Exponent& b) {
    return !(a == b);
  }

 private:
  Exponent(double v, double c) : value_(v), conj_(c) {}

  static double conjugate_of(double p) {
    if (p == 1.0) return inf;
    if (std::isinf(p)) return 1.0;
    return p / (p - 1.0);
  }

  double value_;
  double conj_;
};

inline Exponent exponent_inf() { return Exponent(Exponent::inf); }

}  // namespace banach
