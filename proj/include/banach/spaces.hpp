#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "banach/exponent.hpp"

#include "json.hpp"

namespace banach {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Overflow/underflow-safe l_p norm: the largest magnitude is factored out
// before powers are taken, terms are accumulated with compensated summation.
double lp_norm(const Vector& x, const Exponent& p);

// max(||x||_{p'}, v ||x||_2): the norm whose unit ball is the intersection of
// the l_{p'} ball with the l_2 ball of radius 1/v.
double emax_norm(const Vector& x, const Exponent& p_prime, double v);

// A finite-dimensional space description.  Vectors are always handed around
// in coordinate representation:
//   lp        dim coordinates, norm = l_p
//   emax      dim coordinates, norm = max(l_{p'}, v l_2)
//   fspan     n coefficients a_1..a_n against a three-valued system (p, v);
//             the ambient space is l_p^{3^n} (2^n when v = 1)
//   blocksum  concatenated block coordinates, outer l_p sum of block norms
struct SpaceSpec {
  enum class Kind { lp, emax, fspan, blocksum };

  Kind kind = Kind::lp;
  int dim = 0;          // lp/emax: coordinate count; fspan: n
  Exponent p;           // lp: p; emax: p'; fspan: p; blocksum: outer exponent
  double v = 1.0;       // emax, fspan
  std::vector<SpaceSpec> blocks;  // blocksum only

  static SpaceSpec make_lp(int dim, const Exponent& p);
  static SpaceSpec make_emax(int dim, const Exponent& p_prime, double v);
  static SpaceSpec make_fspan(int n, const Exponent& p, double v);
  static SpaceSpec make_blocksum(const Exponent& outer,
                                 std::vector<SpaceSpec> blocks);
};

// Number of coordinates a vector in this space carries.
int coordinate_dim(const SpaceSpec& spec);

// Dimension of the ambient sequence space the spec embeds into (equals
// coordinate_dim except for fspan, where it is 3^n / 2^n).
std::int64_t ambient_dim(const SpaceSpec& spec);

// Norm dispatch on the coordinate representation.
double space_norm(const SpaceSpec& spec, const Vector& coords);

// JSON round-trip.  Exponents serialize as numbers, infinity as the string
// "inf".
nlohmann::json space_to_json(const SpaceSpec& spec);
SpaceSpec space_from_json(const nlohmann::json& j);

// Helpers shared by the serializers.
nlohmann::json exponent_to_json(const Exponent& p);
Exponent exponent_from_json(const nlohmann::json& j);

}  // namespace banach
