#include "banach/spaces.hpp"

#include <cmath>

#include "banach/errors.hpp"
#include "banach/numeric.hpp"
#include "banach/three_valued.hpp"

namespace banach {

double lp_norm(const Vector& x, const Exponent& p) {
  if (x.size() == 0) return 0.0;
  double m = x.cwiseAbs().maxCoeff();
  if (m == 0.0 || p.is_inf()) return m;
  if (p.is_one()) {
    NeumaierSum s;
    for (Eigen::Index i = 0; i < x.size(); ++i) s.add(std::abs(x[i]) / m);
    return m * s.value();
  }
  if (p.is_two()) {
    NeumaierSum s;
    for (Eigen::Index i = 0; i < x.size(); ++i) s.add(sqr(x[i] / m));
    return m * std::sqrt(s.value());
  }
  double pv = p.value();
  NeumaierSum s;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    double t = std::abs(x[i]) / m;
    if (t > 0.0) s.add(std::pow(t, pv));
  }
  return m * std::pow(s.value(), 1.0 / pv);
}

double emax_norm(const Vector& x, const Exponent& p_prime, double v) {
  return std::max(lp_norm(x, p_prime), v * lp_norm(x, Exponent(2.0)));
}

SpaceSpec SpaceSpec::make_lp(int dim, const Exponent& p) {
  if (dim < 0) throw ConfigError("SpaceSpec: dim must be >= 0");
  SpaceSpec s;
  s.kind = Kind::lp;
  s.dim = dim;
  s.p = p;
  return s;
}

SpaceSpec SpaceSpec::make_emax(int dim, const Exponent& p_prime, double v) {
  if (dim < 0) throw ConfigError("SpaceSpec: dim must be >= 0");
  if (!(v > 0.0)) throw ConfigError("SpaceSpec: emax needs v > 0");
  SpaceSpec s;
  s.kind = Kind::emax;
  s.dim = dim;
  s.p = p_prime;
  s.v = v;
  return s;
}

SpaceSpec SpaceSpec::make_fspan(int n, const Exponent& p, double v) {
  // three_valued_system validates p and v.
  (void)three_valued_system(n, p, v);
  SpaceSpec s;
  s.kind = Kind::fspan;
  s.dim = n;
  s.p = p;
  s.v = v;
  return s;
}

SpaceSpec SpaceSpec::make_blocksum(const Exponent& outer,
                                   std::vector<SpaceSpec> blocks) {
  SpaceSpec s;
  s.kind = Kind::blocksum;
  s.p = outer;
  s.blocks = std::move(blocks);
  for (const auto& b : s.blocks) s.dim += coordinate_dim(b);
  return s;
}

int coordinate_dim(const SpaceSpec& spec) {
  if (spec.kind == SpaceSpec::Kind::blocksum) {
    int d = 0;
    for (const auto& b : spec.blocks) d += coordinate_dim(b);
    return d;
  }
  return spec.dim;
}

std::int64_t ambient_dim(const SpaceSpec& spec) {
  switch (spec.kind) {
    case SpaceSpec::Kind::lp:
    case SpaceSpec::Kind::emax:
      return spec.dim;
    case SpaceSpec::Kind::fspan: {
      std::int64_t d = 1;
      int base = (spec.v == 1.0) ? 2 : 3;
      for (int i = 0; i < spec.dim; ++i) d *= base;
      return d;
    }
    case SpaceSpec::Kind::blocksum: {
      std::int64_t d = 0;
      for (const auto& b : spec.blocks) d += ambient_dim(b);
      return d;
    }
  }
  return 0;
}

double space_norm(const SpaceSpec& spec, const Vector& coords) {
  if (coords.size() != coordinate_dim(spec))
    throw ConfigError("space_norm: coordinate count mismatch");
  switch (spec.kind) {
    case SpaceSpec::Kind::lp:
      return lp_norm(coords, spec.p);
    case SpaceSpec::Kind::emax:
      return emax_norm(coords, spec.p, spec.v);
    case SpaceSpec::Kind::fspan: {
      ThreeValuedSystem sys = three_valued_system(spec.dim, spec.p, spec.v);
      return fspan_norm(sys, coords);
    }
    case SpaceSpec::Kind::blocksum: {
      Vector block_norms(static_cast<Eigen::Index>(spec.blocks.size()));
      Eigen::Index off = 0;
      for (size_t b = 0; b < spec.blocks.size(); ++b) {
        Eigen::Index d = coordinate_dim(spec.blocks[b]);
        block_norms[static_cast<Eigen::Index>(b)] =
            space_norm(spec.blocks[b], coords.segment(off, d));
        off += d;
      }
      return lp_norm(block_norms, spec.p);
    }
  }
  return 0.0;
}

nlohmann::json exponent_to_json(const Exponent& p) {
  if (p.is_inf()) return "inf";
  return p.value();
}

Exponent exponent_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return exponent_inf();
    throw ConfigError("exponent: expected a number or \"inf\"");
  }
  if (!j.is_number()) throw ConfigError("exponent: expected a number or \"inf\"");
  return Exponent(j.get<double>());
}

nlohmann::json space_to_json(const SpaceSpec& spec) {
  nlohmann::json j;
  switch (spec.kind) {
    case SpaceSpec::Kind::lp:
      j["kind"] = "lp";
      j["dim"] = spec.dim;
      j["p"] = exponent_to_json(spec.p);
      break;
    case SpaceSpec::Kind::emax:
      j["kind"] = "emax";
      j["dim"] = spec.dim;
      j["pPrime"] = exponent_to_json(spec.p);
      j["v"] = spec.v;
      break;
    case SpaceSpec::Kind::fspan:
      j["kind"] = "fspan";
      j["n"] = spec.dim;
      j["p"] = exponent_to_json(spec.p);
      j["v"] = spec.v;
      break;
    case SpaceSpec::Kind::blocksum:
      j["kind"] = "blocksum";
      j["outer"] = exponent_to_json(spec.p);
      j["blocks"] = nlohmann::json::array();
      for (const auto& b : spec.blocks) j["blocks"].push_back(space_to_json(b));
      break;
  }
  return j;
}

SpaceSpec space_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw ConfigError("space: expected an object with a \"kind\" field");
  std::string kind = j.at("kind").get<std::string>();
  try {
    if (kind == "lp")
      return SpaceSpec::make_lp(j.at("dim").get<int>(),
                                exponent_from_json(j.at("p")));
    if (kind == "emax")
      return SpaceSpec::make_emax(j.at("dim").get<int>(),
                                  exponent_from_json(j.at("pPrime")),
                                  j.at("v").get<double>());
    if (kind == "fspan")
      return SpaceSpec::make_fspan(j.at("n").get<int>(),
                                   exponent_from_json(j.at("p")),
                                   j.at("v").get<double>());
    if (kind == "blocksum") {
      std::vector<SpaceSpec> blocks;
      for (const auto& b : j.at("blocks")) blocks.push_back(space_from_json(b));
      return SpaceSpec::make_blocksum(exponent_from_json(j.at("outer")),
                                      std::move(blocks));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("space: malformed JSON: ") + e.what());
  }
  throw ConfigError("space: unknown kind \"" + kind + "\"");
}

}  // namespace banach
