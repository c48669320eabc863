#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "homat/matrix.hpp"

namespace homat {

// A bijection of {0,..,m-1}.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t v : images_) {
      if (v >= images_.size() || seen[v]) throw SchemaError("permutation images are not a bijection");
      seen[v] = true;
    }
  }

  static Permutation identity(std::size_t m) {
    std::vector<std::size_t> v(m);
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
  }

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_.at(i); }
  const std::vector<std::size_t>& images() const { return images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<std::size_t> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
    return Permutation(std::move(inv));
  }

  // (p * q)(i) = p(q(i))
  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw ArityMismatch("composing permutations of different sizes");
    std::vector<std::size_t> v(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) v[i] = p(q(i));
    return Permutation(std::move(v));
  }

  // All m! permutations, in lexicographic image order.
  static std::vector<Permutation> all(std::size_t m) {
    std::vector<std::size_t> v(m);
    std::iota(v.begin(), v.end(), 0);
    std::vector<Permutation> out;
    do {
      out.push_back(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

// A 1-dimensional cobordism morphism over an index map c: a permutation
// alpha together with hom-space elements t_i in hom(c(i), c(alpha(i))).
struct CobordismElement {
  CategoryPtr category;
  IndexMap index;
  Permutation alpha;
  std::vector<GradedVector> entries;  // entries[i] in hom(c(i), c(alpha(i)))

  static CobordismElement make(const CategoryPtr& cat, const IndexMap& c, Permutation alpha,
                               std::vector<GradedVector> entries) {
    check_index_map(cat, c);
    if (alpha.size() != c.size() || entries.size() != c.size())
      throw ArityMismatch("cobordism permutation and entry list must match the index map size");
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!same_basis(entries[i].ambient(), cat->hom_basis(c.at(i), c.at(alpha(i)))))
        throw CompositionMismatch("cobordism entry " + std::to_string(i + 1) +
                                  " does not live in hom(" + c.at(i) + "," + c.at(alpha(i)) + ")");
    return {cat, c, std::move(alpha), std::move(entries)};
  }

  static CobordismElement identity(const CategoryPtr& cat, const IndexMap& c) {
    std::vector<GradedVector> entries;
    for (const auto& x : c.objects)
      entries.push_back(GradedVector::unit(cat->hom_basis(x, x), BasisKey{}));
    return make(cat, c, Permutation::identity(c.size()), std::move(entries));
  }

  friend bool operator==(const CobordismElement& a, const CobordismElement& b) {
    return same_category(a.category, b.category) && a.index == b.index && a.alpha == b.alpha &&
           a.entries == b.entries;
  }
};

// (beta, s) after (alpha, t): the composite is (beta * alpha, u) with
// u_i = s_{alpha(i)} * t_i.
inline CobordismElement cob_compose(const CobordismElement& second,
                                    const CobordismElement& first) {
  if (!same_category(second.category, first.category) || second.index != first.index)
    throw CompositionMismatch("cobordism elements live over different index maps");
  const IndexMap& c = first.index;
  const auto& cat = *first.category;
  std::vector<GradedVector> entries;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const std::size_t mid = first.alpha(i);
    const Symbol& x = c.at(i);
    const Symbol& y = c.at(mid);
    const Symbol& z = c.at(second.alpha(mid));
    GradedVector sum = GradedVector::zero(cat.hom_basis(x, z));
    for (const auto& [gk, gc] : second.entries[mid].terms())
      for (const auto& [fk, fc] : first.entries[i].terms())
        sum.add_scaled(gc * fc, cat.compose_basis(x, y, z, gk, fk));
    entries.push_back(std::move(sum));
  }
  return CobordismElement::make(first.category, c, second.alpha * first.alpha,
                                std::move(entries));
}

// The generalized permutation matrix with t_i placed at (alpha(i), i).
inline HomMatrix cob_to_matrix(const CobordismElement& e) {
  HomMatrix m(e.category, e.index, e.index);
  for (std::size_t i = 0; i < e.index.size(); ++i)
    if (!e.entries[i].is_zero()) m.set_entry(e.alpha(i), i, e.entries[i]);
  return m;
}

}  // namespace homat
