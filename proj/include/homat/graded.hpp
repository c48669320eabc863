#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "homat/errors.hpp"
#include "homat/rational.hpp"

namespace homat {

using Symbol = std::string;

// Basis elements are identified by a sequence of symbols. Lexicographic
// order on these sequences is the single global tie-breaker used for
// canonical forms and serialization throughout the library.
using BasisKey = std::vector<Symbol>;

inline std::string format_key(const BasisKey& k) {
  if (k.empty()) return "()";
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i) os << ".";
    os << k[i];
  }
  os << ")";
  return os.str();
}

struct GradedBasisElement {
  BasisKey key;
  int degree = 0;

  friend bool operator==(const GradedBasisElement&, const GradedBasisElement&) = default;
};

// An immutable declaration of a graded basis: distinct keys, each with an
// integer degree. Spaces (hom-spaces, module fibers, chain complexes)
// hand out shared pointers to their Basis so that vectors can detect
// ambient mismatches.
class Basis {
 public:
  Basis() = default;

  explicit Basis(std::vector<GradedBasisElement> elements) {
    for (auto& e : elements) {
      auto [it, fresh] = degrees_.emplace(std::move(e.key), e.degree);
      if (!fresh) throw SchemaError("duplicate basis key " + format_key(it->first));
    }
  }

  std::size_t size() const { return degrees_.size(); }
  bool contains(const BasisKey& k) const { return degrees_.count(k) != 0; }

  int degree_of(const BasisKey& k) const {
    auto it = degrees_.find(k);
    if (it == degrees_.end())
      throw AmbientMismatch("key " + format_key(k) + " not in ambient basis");
    return it->second;
  }

  // Keys in lexicographic order.
  const std::map<BasisKey, int>& elements() const { return degrees_; }

  // Same keys, every degree lowered by n (the degree-shift regrading: an
  // element of old degree d sits in new degree d - n).
  std::shared_ptr<const Basis> shifted(int n) const {
    Basis b;
    for (const auto& [k, d] : degrees_) b.degrees_.emplace(k, d - n);
    return std::make_shared<const Basis>(std::move(b));
  }

  friend bool operator==(const Basis& a, const Basis& b) { return a.degrees_ == b.degrees_; }

 private:
  std::map<BasisKey, int> degrees_;
};

using BasisPtr = std::shared_ptr<const Basis>;

inline BasisPtr make_basis(std::vector<GradedBasisElement> elements) {
  return std::make_shared<const Basis>(std::move(elements));
}

inline bool same_basis(const BasisPtr& a, const BasisPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// Sparse exact-rational combination of basis elements of one ambient
// basis. Zero coefficients are never stored.
class GradedVector {
 public:
  GradedVector() = default;

  explicit GradedVector(BasisPtr ambient) : ambient_(std::move(ambient)) {}

  GradedVector(BasisPtr ambient, std::map<BasisKey, Rational> terms)
      : ambient_(std::move(ambient)), terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (!ambient_->contains(it->first))
        throw AmbientMismatch("key " + format_key(it->first) + " not in ambient basis");
      if (it->second == 0)
        it = terms_.erase(it);
      else
        ++it;
    }
  }

  static GradedVector zero(BasisPtr ambient) { return GradedVector(std::move(ambient)); }

  static GradedVector unit(BasisPtr ambient, const BasisKey& key) {
    GradedVector v(std::move(ambient));
    v.add_term(key, 1);
    return v;
  }

  const BasisPtr& ambient() const { return ambient_; }
  const std::map<BasisKey, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const BasisKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  // Accumulate c on the key's coefficient, dropping it when the sum is 0.
  void add_term(const BasisKey& key, const Rational& c) {
    if (c == 0) return;
    if (!ambient_->contains(key))
      throw AmbientMismatch("key " + format_key(key) + " not in ambient basis");
    auto [it, fresh] = terms_.emplace(key, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add_scaled(const Rational& c, const GradedVector& v) {
    if (c == 0) return;
    if (!same_basis(ambient_, v.ambient_))
      throw AmbientMismatch("linear combination across distinct ambient bases");
    for (const auto& [k, x] : v.terms_) add_term(k, c * x);
  }

  // The common degree of all terms, when one exists. The zero vector has
  // no recorded degree.
  std::optional<int> homogeneous_degree() const {
    std::optional<int> deg;
    for (const auto& [k, c] : terms_) {
      int d = ambient_->degree_of(k);
      if (!deg)
        deg = d;
      else if (*deg != d)
        return std::nullopt;
    }
    return deg;
  }

  friend GradedVector operator*(const Rational& c, const GradedVector& v) {
    GradedVector out(v.ambient_);
    out.add_scaled(c, v);
    return out;
  }

  friend GradedVector operator+(const GradedVector& a, const GradedVector& b) {
    GradedVector out = a;
    out.add_scaled(1, b);
    return out;
  }

  friend GradedVector operator-(const GradedVector& a, const GradedVector& b) {
    GradedVector out = a;
    out.add_scaled(-1, b);
    return out;
  }

  // Equality is equality of normalized sparse forms over matching bases.
  friend bool operator==(const GradedVector& a, const GradedVector& b) {
    return same_basis(a.ambient_, b.ambient_) && a.terms_ == b.terms_;
  }

 private:
  BasisPtr ambient_;
  std::map<BasisKey, Rational> terms_;
};

// Deterministic content order on vectors sharing an ambient space; used
// wherever composite values need a canonical arrangement.
inline int compare_vectors(const GradedVector& a, const GradedVector& b) {
  auto ia = a.terms().begin(), ib = b.terms().begin();
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
    if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
  }
  if (ia != a.terms().end()) return 1;
  if (ib != b.terms().end()) return -1;
  return 0;
}

inline GradedVector linear_combine(std::span<const std::pair<Rational, GradedVector>> pairs) {
  if (pairs.empty()) throw AmbientMismatch("linear_combine of an empty list has no ambient basis");
  GradedVector out(pairs.front().second.ambient());
  for (const auto& [c, v] : pairs) out.add_scaled(c, v);
  return out;
}

inline GradedVector linear_combine(
    std::initializer_list<std::pair<Rational, GradedVector>> pairs) {
  return linear_combine(std::span<const std::pair<Rational, GradedVector>>(pairs.begin(), pairs.size()));
}

// Regrade: a term of degree d moves to degree d - n; keys and
// coefficients are untouched.
inline GradedVector shift_degrees(const GradedVector& v, int n) {
  std::map<BasisKey, Rational> terms = v.terms();
  return GradedVector(v.ambient()->shifted(n), std::move(terms));
}

}  // namespace homat
