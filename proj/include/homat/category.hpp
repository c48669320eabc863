#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "homat/graded.hpp"
#include "homat/report.hpp"

namespace homat {

// An object of the category, standing for a submanifold of the ambient
// space; dim feeds the degree-shift bookkeeping of matrix entries.
struct ObjectDecl {
  Symbol id;
  int dim = 0;

  friend bool operator==(const ObjectDecl&, const ObjectDecl&) = default;
};

struct MorphGenerator {
  Symbol id;
  Symbol source;
  Symbol target;
  int degree = 0;

  friend bool operator==(const MorphGenerator&, const MorphGenerator&) = default;
};

class GradedCategory;
using CategoryPtr = std::shared_ptr<const GradedCategory>;

// A finitely presented graded category: objects with dimensions and, for
// every ordered object pair, a graded hom-space basis with a
// degree-additive composition law.
//
// Two presentations feed the same interface: the free path category on a
// quiver (composition is path concatenation, truncated at a hard length
// bound) and a direct structure-constant table. Identity morphisms are
// reserved basis elements with the empty key in every hom(x,x).
class GradedCategory {
 public:
  // Composition of hom-space basis pairs: in hom(y,z) x hom(x,y), keyed
  // by (x, y, z, key of g, key of f). Keys alone would be ambiguous in
  // tabled mode, where distinct hom-spaces may reuse key names.
  using PairKey = std::tuple<Symbol, Symbol, Symbol, BasisKey, BasisKey>;

  struct TableEntry {
    Symbol x, y, z;
    BasisKey g, f;  // g in hom(y,z), f in hom(x,y)
    std::vector<std::pair<BasisKey, Rational>> result;  // element of hom(x,z)
  };

  // All composable generator paths of length <= max_path_length, plus an
  // identity in every hom(x,x). Composition concatenates paths; going
  // past the bound is a hard error, never zero.
  static CategoryPtr free_category(std::vector<ObjectDecl> objects,
                                   std::vector<MorphGenerator> generators, int max_path_length) {
    if (max_path_length < 1) throw SchemaError("max_path_length must be >= 1");
    auto cat = std::make_shared<GradedCategory>(Private{});
    cat->init_objects(std::move(objects));
    cat->free_ = true;
    cat->max_path_length_ = max_path_length;
    std::set<Symbol> gen_ids;
    for (const auto& g : generators) {
      if (!gen_ids.insert(g.id).second)
        throw SchemaError("duplicate generator id '" + g.id + "'");
      if (!cat->dims_.count(g.source))
        throw UnknownObject("generator '" + g.id + "' has undeclared source '" + g.source + "'");
      if (!cat->dims_.count(g.target))
        throw UnknownObject("generator '" + g.id + "' has undeclared target '" + g.target + "'");
    }
    cat->generators_ = std::move(generators);
    cat->build_free_homs();
    return cat;
  }

  // Structure-constant presentation. Hom bases are given directly; the
  // table lists composites per basis pair, absent pairs composing to
  // zero. Identity composites that the table leaves out are filled in
  // with the identity law; explicitly given ones are kept as stated so
  // that validation can still catch deliberate or accidental breakage.
  static CategoryPtr from_table(
      std::vector<ObjectDecl> objects,
      const std::map<std::pair<Symbol, Symbol>, std::vector<GradedBasisElement>>& homs,
      const std::vector<TableEntry>& entries) {
    auto cat = std::make_shared<GradedCategory>(Private{});
    cat->init_objects(std::move(objects));
    cat->free_ = false;

    for (const auto& [pair, elements] : homs) {
      if (!cat->dims_.count(pair.first)) throw UnknownObject("undeclared object '" + pair.first + "'");
      if (!cat->dims_.count(pair.second)) throw UnknownObject("undeclared object '" + pair.second + "'");
      for (const auto& e : elements)
        if (e.key.empty())
          throw SchemaError("the empty key is reserved for identities");
      cat->declared_homs_[pair] = elements;
    }
    int longest = 1;
    for (const auto& [pair, elements] : homs)
      for (const auto& e : elements) longest = std::max<int>(longest, (int)e.key.size());
    cat->max_path_length_ = longest;
    cat->build_declared_homs();

    for (const auto& e : entries) {
      const BasisPtr target_hom = cat->hom_basis(e.x, e.z);
      if (!cat->hom_basis(e.y, e.z)->contains(e.g))
        throw SchemaError("table references unknown morphism " + format_key(e.g) + " in hom(" +
                          e.y + "," + e.z + ")");
      if (!cat->hom_basis(e.x, e.y)->contains(e.f))
        throw SchemaError("table references unknown morphism " + format_key(e.f) + " in hom(" +
                          e.x + "," + e.y + ")");
      GradedVector value(target_hom);
      for (const auto& [k, c] : e.result) value.add_term(k, c);
      cat->table_[PairKey{e.x, e.y, e.z, e.g, e.f}] = std::move(value);
    }
    cat->fill_identity_composites();
    return cat;
  }

  const std::vector<ObjectDecl>& objects() const { return objects_; }
  const std::vector<MorphGenerator>& generators() const { return generators_; }
  bool is_free() const { return free_; }
  int max_path_length() const { return max_path_length_; }

  bool has_object(const Symbol& x) const { return dims_.count(x) != 0; }

  int dim_of(const Symbol& x) const {
    auto it = dims_.find(x);
    if (it == dims_.end()) throw UnknownObject("undeclared object '" + x + "'");
    return it->second;
  }

  BasisPtr hom_basis(const Symbol& x, const Symbol& y) const {
    dim_of(x);
    dim_of(y);
    auto it = homs_.find({x, y});
    return it == homs_.end() ? empty_basis_ : it->second;
  }

  // Composite of basis morphisms g in hom(y,z), f in hom(x,y), as an
  // element of hom(x,z).
  GradedVector compose_basis(const Symbol& x, const Symbol& y, const Symbol& z,
                             const BasisKey& g, const BasisKey& f) const {
    if (free_) {
      if ((int)(g.size() + f.size()) > max_path_length_)
        throw TruncationOverflow("path " + format_key(g) + "*" + format_key(f) + " has length " +
                                 std::to_string(g.size() + f.size()) + " > bound " +
                                 std::to_string(max_path_length_));
      BasisKey joined = g;
      joined.insert(joined.end(), f.begin(), f.end());
      return GradedVector::unit(hom_basis(x, z), joined);
    }
    auto it = table_.find(PairKey{x, y, z, g, f});
    return it == table_.end() ? GradedVector::zero(hom_basis(x, z)) : it->second;
  }

  friend bool operator==(const GradedCategory& a, const GradedCategory& b) {
    if (a.objects_ != b.objects_ || a.free_ != b.free_) return false;
    if (a.free_)
      return a.generators_ == b.generators_ && a.max_path_length_ == b.max_path_length_;
    if (a.declared_homs_ != b.declared_homs_) return false;
    return a.table_ == b.table_;
  }

  // not for direct use; see free_category / from_table
  struct Private {};
  explicit GradedCategory(Private) {}

 private:
  void init_objects(std::vector<ObjectDecl> objects) {
    objects_ = std::move(objects);
    for (const auto& o : objects_) {
      if (o.dim < 0) throw SchemaError("object '" + o.id + "' has negative dimension");
      if (!dims_.emplace(o.id, o.dim).second)
        throw SchemaError("duplicate object id '" + o.id + "'");
    }
    empty_basis_ = make_basis({});
  }

  void build_free_homs() {
    // paths[(x,y)] accumulates keys with degrees, per length layer
    std::map<std::pair<Symbol, Symbol>, std::vector<GradedBasisElement>> paths;
    std::vector<std::pair<std::pair<Symbol, Symbol>, GradedBasisElement>> layer;
    for (const auto& g : generators_) {
      GradedBasisElement e{{g.id}, g.degree};
      paths[{g.source, g.target}].push_back(e);
      layer.push_back({{g.source, g.target}, e});
    }
    for (int len = 2; len <= max_path_length_; ++len) {
      std::vector<std::pair<std::pair<Symbol, Symbol>, GradedBasisElement>> next;
      for (const auto& [ends, path] : layer)
        for (const auto& g : generators_) {
          if (g.source != ends.second) continue;
          GradedBasisElement e{{g.id}, g.degree + path.degree};
          e.key.insert(e.key.end(), path.key.begin(), path.key.end());
          paths[{ends.first, g.target}].push_back(e);
          next.push_back({{ends.first, g.target}, e});
        }
      layer = std::move(next);
    }
    for (const auto& o : objects_) paths[{o.id, o.id}].push_back({BasisKey{}, 0});
    for (auto& [ends, elements] : paths)
      if (!elements.empty()) homs_[ends] = make_basis(std::move(elements));
  }

  void build_declared_homs() {
    for (auto [pair, elements] : declared_homs_) {
      if (pair.first == pair.second) elements.push_back({BasisKey{}, 0});
      homs_[pair] = make_basis(std::move(elements));
    }
    for (const auto& o : objects_) {
      if (!homs_.count({o.id, o.id}))
        homs_[{o.id, o.id}] = make_basis({{BasisKey{}, 0}});
    }
  }

  void fill_identity_composites() {
    for (const auto& [ends, basis] : homs_) {
      const auto& [x, y] = ends;
      for (const auto& [key, deg] : basis->elements()) {
        GradedVector self = GradedVector::unit(basis, key);
        table_.try_emplace(PairKey{x, y, y, BasisKey{}, key}, self);
        table_.try_emplace(PairKey{x, x, y, key, BasisKey{}}, self);
      }
    }
  }

  std::vector<ObjectDecl> objects_;
  std::map<Symbol, int> dims_;
  std::vector<MorphGenerator> generators_;  // free mode
  std::map<std::pair<Symbol, Symbol>, std::vector<GradedBasisElement>> declared_homs_;  // tabled
  std::map<std::pair<Symbol, Symbol>, BasisPtr> homs_;
  std::map<PairKey, GradedVector> table_;  // tabled mode
  BasisPtr empty_basis_;
  bool free_ = true;
  int max_path_length_ = 1;
};

inline bool same_category(const CategoryPtr& a, const CategoryPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// An element of one hom-space, tagged with its endpoints.
struct Morphism {
  CategoryPtr category;
  Symbol src, dst;
  GradedVector value;

  bool is_zero() const { return value.is_zero(); }

  friend bool operator==(const Morphism& a, const Morphism& b) {
    return same_category(a.category, b.category) && a.src == b.src && a.dst == b.dst &&
           a.value == b.value;
  }
};

inline Morphism identity_morphism(const CategoryPtr& cat, const Symbol& x) {
  return {cat, x, x, GradedVector::unit(cat->hom_basis(x, x), BasisKey{})};
}

inline Morphism zero_morphism(const CategoryPtr& cat, const Symbol& x, const Symbol& y) {
  return {cat, x, y, GradedVector::zero(cat->hom_basis(x, y))};
}

inline Morphism basis_morphism(const CategoryPtr& cat, const Symbol& x, const Symbol& y,
                               const BasisKey& key) {
  return {cat, x, y, GradedVector::unit(cat->hom_basis(x, y), key)};
}

// g after f: the bilinear extension of the basis-level composition law.
// Degrees add on homogeneous inputs.
inline Morphism compose(const Morphism& g, const Morphism& f) {
  if (!same_category(g.category, f.category))
    throw CompositionMismatch("morphisms from different categories");
  if (f.dst != g.src)
    throw CompositionMismatch("cannot compose: hom(" + f.src + "," + f.dst + ") then hom(" +
                              g.src + "," + g.dst + ")");
  const auto& cat = *g.category;
  GradedVector out = GradedVector::zero(cat.hom_basis(f.src, g.dst));
  for (const auto& [gk, gc] : g.value.terms())
    for (const auto& [fk, fc] : f.value.terms())
      out.add_scaled(gc * fc, cat.compose_basis(f.src, f.dst, g.dst, gk, fk));
  return {g.category, f.src, g.dst, std::move(out)};
}

// Degree additivity, identity laws, then associativity over every
// composable basis triple whose full composite stays within the
// truncation bound. Stops at the first violation.
inline Report validate_category(const CategoryPtr& cat) {
  Report report;
  std::vector<Symbol> ids;
  for (const auto& o : cat->objects()) ids.push_back(o.id);

  const int bound = cat->is_free() ? cat->max_path_length() : -1;
  auto fits = [&](std::size_t total) { return bound < 0 || (int)total <= bound; };

  for (const auto& x : ids)
    for (const auto& y : ids)
      for (const auto& z : ids) {
        const BasisPtr hf = cat->hom_basis(x, y), hg = cat->hom_basis(y, z);
        for (const auto& [gk, gd] : hg->elements())
          for (const auto& [fk, fd] : hf->elements()) {
            if (!fits(gk.size() + fk.size())) continue;
            const GradedVector c = cat->compose_basis(x, y, z, gk, fk);
            const auto deg = c.homogeneous_degree();
            if (!c.is_zero() && (!deg || *deg != gd + fd)) {
              report.add("degree-additivity",
                         "|g*f| != |g|+|f| for g=" + format_key(gk) + " in hom(" + y + "," + z +
                             "), f=" + format_key(fk) + " in hom(" + x + "," + y + ")");
              return report;
            }
          }
      }

  for (const auto& x : ids)
    for (const auto& y : ids) {
      const BasisPtr hf = cat->hom_basis(x, y);
      for (const auto& [fk, fd] : hf->elements()) {
        const GradedVector f = GradedVector::unit(hf, fk);
        if (cat->compose_basis(x, y, y, BasisKey{}, fk) != f) {
          report.add("identity-law", "id*f != f for f=" + format_key(fk) + " in hom(" + x + "," +
                                         y + ")");
          return report;
        }
        if (cat->compose_basis(x, x, y, fk, BasisKey{}) != f) {
          report.add("identity-law", "f*id != f for f=" + format_key(fk) + " in hom(" + x + "," +
                                         y + ")");
          return report;
        }
      }
    }

  for (const auto& w : ids)
    for (const auto& x : ids)
      for (const auto& y : ids)
        for (const auto& z : ids) {
          const BasisPtr hf = cat->hom_basis(w, x);
          const BasisPtr hg = cat->hom_basis(x, y);
          const BasisPtr hh = cat->hom_basis(y, z);
          for (const auto& [hk, hd] : hh->elements())
            for (const auto& [gk, gd] : hg->elements())
              for (const auto& [fk, fd] : hf->elements()) {
                if (!fits(hk.size() + gk.size() + fk.size())) continue;
                const Morphism f = basis_morphism(cat, w, x, fk);
                const Morphism g = basis_morphism(cat, x, y, gk);
                const Morphism h = basis_morphism(cat, y, z, hk);
                if (compose(compose(h, g), f) != compose(h, compose(g, f))) {
                  report.add("associativity", "(h*g)*f != h*(g*f) for h=" + format_key(hk) +
                                                  ", g=" + format_key(gk) +
                                                  ", f=" + format_key(fk));
                  return report;
                }
              }
        }

  return report;
}

}  // namespace homat
