#include "banach/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "banach/errors.hpp"
#include "banach/numeric.hpp"

namespace banach {

// --------------------------------------------------------------------------
// Weight sequences
// --------------------------------------------------------------------------

WeightSeq::WeightSeq(Exponent p, std::vector<WeightAnchor> anchors)
    : p_(p), anchors_(std::move(anchors)) {
  double pv = p_.value();
  if (!(pv > 1.0 && pv < 2.0))
    throw ConfigError("WeightSeq: p must lie in (1, 2)");
  eta_ = 1.0 / pv - 0.5;
  for (size_t i = 1; i < anchors_.size(); ++i)
    if (anchors_[i].m <= anchors_[i - 1].m)
      throw ConfigError("WeightSeq: anchors must be strictly increasing");
}

namespace {

// 3^m as a long double: exact through m = 40 (3^40 < 2^64), where the anchor
// index exponents are integers; approximate beyond, which only ever serves as
// a far-away interpolation endpoint.
long double pow3_log2_index(std::uint64_t m) {
  if (m <= 40) {
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < m; ++i) v *= 3ULL;
    return static_cast<long double>(v);
  }
  return std::pow(3.0L, static_cast<long double>(m));
}

}  // namespace

WeightSeq weight_seq(const std::vector<std::uint64_t>& m_elements,
                     const Exponent& p) {
  if (m_elements.empty()) throw ConfigError("weight_seq: empty index set");
  double pv = p.value();
  if (!(pv > 1.0 && pv < 2.0))
    throw ConfigError("weight_seq: p must lie in (1, 2)");
  double eta = 1.0 / pv - 0.5;
  std::vector<WeightAnchor> anchors;
  anchors.reserve(m_elements.size());
  int k = 0;
  for (std::uint64_t m : m_elements) {
    if (m < 1) throw ConfigError("weight_seq: elements must be >= 1");
    ++k;
    WeightAnchor a;
    a.m = m;
    a.log2_index = pow3_log2_index(m);  // the anchor sits at index 2^{3^m}
    a.value = std::exp2(-eta * k);
    anchors.push_back(a);
  }
  return WeightSeq(p, anchors);
}

double WeightSeq::eval_log2(double log2n) const {
  if (!(log2n == log2n)) throw ConfigError("WeightSeq: NaN index");
  if (log2n <= 0.0) return 1.0;  // indices at or below 1

  long double x = log2n;

  // Snap to anchors: relative log2 distance below 1e-13 means the caller
  // intended the anchor index itself (anchor gaps are >= log2(3)).
  for (const WeightAnchor& a : anchors_) {
    long double d = x - a.log2_index;
    if (d < 0) d = -d;
    if (d <= 1e-13L * std::max<long double>(1.0L, a.log2_index))
      return a.value;
  }

  // Floor convention: w(t) = w_{floor(t)} where the index is representable.
  // Applied exactly up to 2^40 (with a tiny snap absorbing exp2/log2
  // round-trip error); above that, skipping the floor changes the value by
  // less than 1e-12 relative because consecutive raw indices are that close
  // in the interpolation plane.
  if (log2n <= 40.0) {
    double nr = std::exp2(log2n);
    double rounded = std::round(nr);
    double n = (std::abs(nr - rounded) <= 1e-6) ? rounded : std::floor(nr);
    if (n <= 1.0) return 1.0;
    x = std::log2(static_cast<long double>(n));
    for (const WeightAnchor& a : anchors_) {
      long double d = x - a.log2_index;
      if (d < 0) d = -d;
      if (d <= 1e-13L * std::max<long double>(1.0L, a.log2_index))
        return a.value;
    }
  }

  // Locate the surrounding anchors; (0, 1) is the implied leading anchor.
  long double a_log = 0.0L;
  double a_val = 1.0;
  for (size_t i = 0; i <= anchors_.size(); ++i) {
    if (i == anchors_.size())
      throw ConfigError("WeightSeq: evaluation beyond the last anchor");
    const WeightAnchor& b = anchors_[i];
    if (x < b.log2_index) {
      // rho = (2^x - 2^a) / (2^b - 2^a)
      //     = 2^{x-b} (1 - 2^{a-x}) / (1 - 2^{a-b}),  all exponents <= 0.
      const long double ln2 = 0.693147180559945309417232121458L;
      long double num = -std::expm1((a_log - x) * ln2);
      long double den = -std::expm1((a_log - b.log2_index) * ln2);
      long double rho = std::exp2(x - b.log2_index) * (num / den);
      long double w = static_cast<long double>(a_val) +
                      rho * (static_cast<long double>(b.value) - a_val);
      return static_cast<double>(w);
    }
    a_log = b.log2_index;
    a_val = b.value;
  }
  return a_val;
}

double WeightSeq::eval(double n) const {
  if (!(n >= 1.0)) return 1.0;
  return eval_log2(std::log2(n));
}

double weight_ratio(const WeightSeq& v, const WeightSeq& w, double c,
                    double log2n) {
  if (!(c > 0.0)) throw ConfigError("weight_ratio: c must be > 0");
  double arg = 0.5 * (std::log2(c) + log2n);  // log2 of sqrt(c n)
  return v.eval_log2(arg) / w.eval_log2(log2n);
}

// --------------------------------------------------------------------------
// Chain subsets
// --------------------------------------------------------------------------

namespace {

// Parses "0.3", ".25" or "3/10" into an exact rational in (0, 1).
void parse_ratio(const std::string& s, std::int64_t& num, std::int64_t& den) {
  auto fail = [&]() {
    throw ConfigError("chain ratio: expected a decimal in (0,1) like 0.3, got \"" +
                      s + "\"");
  };
  std::size_t slash = s.find('/');
  if (slash != std::string::npos) {
    try {
      std::size_t used_num = 0, used_den = 0;
      num = std::stoll(s.substr(0, slash), &used_num);
      den = std::stoll(s.substr(slash + 1), &used_den);
      if (used_num != slash || used_den != s.size() - slash - 1) fail();
    } catch (const ConfigError&) {
      throw;
    } catch (...) {
      fail();
    }
    if (den <= 0 || num < 0) fail();
  } else {
    std::size_t dot = s.find('.');
    if (dot == std::string::npos) fail();
    std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
    if (head != "" && head != "0") fail();
    if (tail.empty() || tail.size() > 17) fail();
    num = 0;
    den = 1;
    for (char ch : tail) {
      if (ch < '0' || ch > '9') fail();
      num = num * 10 + (ch - '0');
      den *= 10;
    }
  }
  if (!(num > 0 && num < den)) fail();
}

bool only_two_five(std::int64_t b) {
  while (b % 2 == 0) b /= 2;
  while (b % 5 == 0) b /= 5;
  return b == 1;
}

}  // namespace

ChainSubset::ChainSubset(const std::string& r_decimal) {
  parse_ratio(r_decimal, num_, den_);
}

bool ChainSubset::contains(std::uint64_t z) const {
  if (z < 1) return false;
  // Invert f(a/b) = pair(a,b) + 1 with pair(a,b) = (a+b)(a+b+1)/2 + b.
  unsigned __int128 k = z - 1;
  unsigned __int128 disc = 8 * k + 1;
  std::uint64_t t = static_cast<std::uint64_t>(
      (std::sqrt(static_cast<long double>(disc)) - 1.0L) / 2.0L);
  // Fix up floating-point slop: want the unique t with tri(t) <= k < tri(t+1).
  auto tri = [](unsigned __int128 x) { return x * (x + 1) / 2; };
  while (t > 0 && tri(t) > k) --t;
  while (tri(t + 1) <= k) ++t;
  unsigned __int128 b128 = k - tri(t);
  if (b128 > t) return false;
  std::int64_t b = static_cast<std::int64_t>(b128);
  std::int64_t a = static_cast<std::int64_t>(t) - b;
  if (b < 1 || a < 0) return false;
  if (std::gcd(a, b) != 1) return false;    // only reduced fractions are hit
  if (!only_two_five(b)) return false;      // decimal denominators only
  // a/b < r  <=>  a * r_den < r_num * b, exactly.
  return static_cast<__int128>(a) * den_ < static_cast<__int128>(num_) * b;
}

std::vector<std::uint64_t> ChainSubset::window(std::uint64_t limit) const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t z = 1; z <= limit; ++z)
    if (contains(z)) out.push_back(z);
  return out;
}

std::vector<std::uint64_t> ChainSubset::first(int count) const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t z = 1; static_cast<int>(out.size()) < count; ++z) {
    if (z > 100000000ULL)
      throw SolverError("ChainSubset::first: scan limit exceeded", 0, 0);
    if (contains(z)) out.push_back(z);
  }
  return out;
}

// --------------------------------------------------------------------------
// Fundamental functions
// --------------------------------------------------------------------------

double fundamental_phi(const ThreeValuedSystem& sys, int k) {
  return fspan_norm_indicator(sys, k);
}

double fundamental_phi_bruteforce(const ThreeValuedSystem& sys, int k) {
  if (sys.n > 6)
    throw ConfigError("fundamental_phi_bruteforce: supports n <= 6");
  if (k < 0 || k > sys.n)
    throw ConfigError("fundamental_phi_bruteforce: k out of range");
  double best = 0.0;
  for (std::uint32_t mask = 0; mask < (1u << sys.n); ++mask) {
    int bits = 0;
    for (int i = 0; i < sys.n; ++i) bits += (mask >> i) & 1;
    if (bits > k) continue;
    Vector a = Vector::Zero(sys.n);
    for (int i = 0; i < sys.n; ++i)
      if ((mask >> i) & 1) a[i] = 1.0;
    best = std::max(best, fspan_norm(sys, a));
  }
  return best;
}

namespace {

// Shared fundamental-value table: g[b][j] = phi_b(j).
std::vector<std::vector<double>> phi_table(
    const std::vector<ThreeValuedSystem>& blocks) {
  std::vector<std::vector<double>> g;
  for (const auto& sys : blocks) {
    std::vector<double> row(static_cast<size_t>(sys.n) + 1, 0.0);
    for (int j = 1; j <= sys.n; ++j)
      row[static_cast<size_t>(j)] = fundamental_phi(sys, j);
    g.push_back(std::move(row));
  }
  return g;
}

}  // namespace

double lower_fundamental_lambda(const std::vector<ThreeValuedSystem>& blocks,
                                const Exponent& outer, int k) {
  int total = 0;
  for (const auto& b : blocks) total += b.n;
  if (k < 0 || k > total)
    throw ConfigError("lower_fundamental_lambda: k out of range");
  if (k == 0) return 0.0;

  auto g = phi_table(blocks);
  const double INF = std::numeric_limits<double>::infinity();
  const bool max_mode = outer.is_inf();
  const double pv = outer.value();

  // dp[t] = best accumulated cost over the blocks processed so far with t
  // basis vectors used.  Costs are sums of phi^p (or running maxima), folded
  // block-by-block in ascending order -- the exact arithmetic the brute-force
  // scan uses, so ties and results agree bit-for-bit.
  std::vector<double> dp(static_cast<size_t>(k) + 1, INF);
  dp[0] = 0.0;
  for (size_t b = 0; b < blocks.size(); ++b) {
    std::vector<double> nx(static_cast<size_t>(k) + 1, INF);
    int nb = blocks[b].n;
    for (int t = 0; t <= k; ++t) {
      if (dp[static_cast<size_t>(t)] == INF) continue;
      for (int j = 0; j <= nb && t + j <= k; ++j) {
        double cost;
        if (max_mode)
          cost = std::max(dp[static_cast<size_t>(t)], g[b][static_cast<size_t>(j)]);
        else
          cost = dp[static_cast<size_t>(t)] +
                 std::pow(g[b][static_cast<size_t>(j)], pv);
        size_t tt = static_cast<size_t>(t + j);
        if (cost < nx[tt]) nx[tt] = cost;
      }
    }
    dp = std::move(nx);
  }
  double best = dp[static_cast<size_t>(k)];
  if (best == INF)
    throw SolverError("lower_fundamental_lambda: no allocation found", 0, 0);
  return max_mode ? best : std::pow(best, 1.0 / pv);
}

double lower_fundamental_lambda_bruteforce(
    const std::vector<ThreeValuedSystem>& blocks, const Exponent& outer,
    int k) {
  int total = 0;
  for (const auto& b : blocks) total += b.n;
  if (total > 20)
    throw ConfigError(
        "lower_fundamental_lambda_bruteforce: total basis size must be <= 20");
  if (k < 0 || k > total)
    throw ConfigError("lower_fundamental_lambda_bruteforce: k out of range");
  if (k == 0) return 0.0;

  auto g = phi_table(blocks);
  const bool max_mode = outer.is_inf();
  const double pv = outer.value();
  double best = std::numeric_limits<double>::infinity();

  for (std::uint32_t mask = 0; mask < (1u << total); ++mask) {
    int bits = 0;
    for (int i = 0; i < total; ++i) bits += (mask >> i) & 1;
    if (bits != k) continue;
    // Count picks per block (the basis is laid out block after block), then
    // fold the per-block costs in ascending block order.
    double cost = 0.0;
    int offset = 0;
    for (size_t b = 0; b < blocks.size(); ++b) {
      int nb = blocks[b].n;
      int j = 0;
      for (int i = 0; i < nb; ++i) j += (mask >> (offset + i)) & 1;
      offset += nb;
      if (max_mode)
        cost = std::max(cost, g[b][static_cast<size_t>(j)]);
      else
        cost = cost + std::pow(g[b][static_cast<size_t>(j)], pv);
    }
    if (cost < best) best = cost;
  }
  return max_mode ? best : std::pow(best, 1.0 / pv);
}

}  // namespace banach
