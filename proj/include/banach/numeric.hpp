#pragma once

#include <cmath>
#include <cstdint>

namespace banach {

// Neumaier's improved Kahan summation: the running compensation also catches
// the case where the next term is larger than the partial sum.  Used for all
// moment/probability accumulations where 1e-12 .. 1e-14 tolerances must hold.
struct NeumaierSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }

  double value() const { return sum + comp; }
};

inline double sqr(double x) { return x * x; }

// sign with sign(0) = 0; used by duality maps where a zero coordinate may
// stay zero.
inline double sgn(double x) { return (x > 0.0) - (x < 0.0); }

// sign with sign(0) = +1; used where a deterministic unit sign is required.
inline double sgn1(double x) { return x < 0.0 ? -1.0 : 1.0; }

}  // namespace banach
