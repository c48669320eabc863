#pragma once

#include <string>
#include <vector>

#include "homat/matrix.hpp"
#include "homat/rational.hpp"
#include "homat/report.hpp"

namespace homat {

// The affine map y -> r*y + center on D^1 = [-1,1], recorded by its
// center and radius.
struct LittleInterval {
  Rational center;
  Rational radius;

  Rational left() const { return center - radius; }
  Rational right() const { return center + radius; }

  // T_{y,r} after T_{y',r'} is T_{y + r y', r r'}.
  friend LittleInterval operator*(const LittleInterval& outer, const LittleInterval& inner) {
    return {outer.center + outer.radius * inner.center, outer.radius * inner.radius};
  }

  friend bool operator==(const LittleInterval&, const LittleInterval&) = default;
};

// An ordered configuration of disjoint little intervals; a point of the
// n-th space of the non-symmetric operad.
struct IntervalConfig {
  std::vector<LittleInterval> intervals;

  std::size_t arity() const { return intervals.size(); }

  // The identity transformation, admitted as the distinguished unit of
  // the arity-1 space even though its radius sits on the excluded
  // boundary r = 1.
  static IntervalConfig unit() { return {{LittleInterval{0, 1}}}; }

  bool is_unit() const {
    return intervals.size() == 1 && intervals[0].center == 0 && intervals[0].radius == 1;
  }

  friend bool operator==(const IntervalConfig&, const IntervalConfig&) = default;
};

// Membership in the operad space: radii in [0,1), images inside D^1,
// closed images pairwise disjoint, and left-to-right ordering.
inline Report validate_config(const IntervalConfig& c) {
  Report report;
  if (c.intervals.empty()) {
    report.add("arity", "configuration must contain at least one interval");
    return report;
  }
  for (std::size_t i = 0; i < c.intervals.size(); ++i) {
    const auto& t = c.intervals[i];
    if (t.radius < 0 || t.radius >= 1)
      report.add("radius", "interval " + std::to_string(i + 1) + " has radius " +
                               format_rational(t.radius) + " outside [0,1)");
    if (t.left() < -1 || t.right() > 1)
      report.add("image", "interval " + std::to_string(i + 1) + " image [" +
                              format_rational(t.left()) + "," + format_rational(t.right()) +
                              "] leaves [-1,1]");
  }
  for (std::size_t i = 0; i + 1 < c.intervals.size(); ++i) {
    if (c.intervals[i].center >= c.intervals[i + 1].center)
      report.add("ordering", "intervals " + std::to_string(i + 1) + "," + std::to_string(i + 2) +
                                 " are not in increasing position order");
    if (c.intervals[i].right() >= c.intervals[i + 1].left())
      report.add("overlap", "closed images of intervals " + std::to_string(i + 1) + "," +
                                std::to_string(i + 2) + " intersect");
  }
  return report;
}

inline bool config_admissible(const IntervalConfig& c) {
  return c.is_unit() || validate_config(c).ok();
}

// Operadic substitution: route inner configuration i through the i-th
// outer interval. Arities add.
inline IntervalConfig operad_compose(const IntervalConfig& outer,
                                     const std::vector<IntervalConfig>& inners) {
  if (!config_admissible(outer)) throw ConfigInvalid("outer configuration is not valid");
  if (inners.size() != outer.arity())
    throw ConfigInvalid("expected " + std::to_string(outer.arity()) +
                        " inner configurations, got " + std::to_string(inners.size()));
  IntervalConfig out;
  for (std::size_t i = 0; i < inners.size(); ++i) {
    if (!config_admissible(inners[i]))
      throw ConfigInvalid("inner configuration " + std::to_string(i + 1) + " is not valid");
    for (const auto& t : inners[i].intervals) out.intervals.push_back(outer.intervals[i] * t);
  }
  return out;
}

// Point-level composition over a configuration: folds the matrix product
// over the chain. Homology-level composition forgets the configuration,
// so the result never depends on c beyond its arity.
inline HomMatrix theta_compose(const IntervalConfig& c, const std::vector<HomMatrix>& chain) {
  if (!config_admissible(c)) throw ConfigInvalid("configuration is not valid");
  if (chain.empty()) throw IndexMismatch("theta requires at least one matrix");
  if (c.arity() != chain.size())
    throw ConfigInvalid("configuration arity " + std::to_string(c.arity()) +
                        " != chain length " + std::to_string(chain.size()));
  HomMatrix out = chain.front();
  for (std::size_t i = 1; i < chain.size(); ++i) out = hg_product(out, chain[i]);
  return out;
}

}  // namespace homat
