#pragma once

#include <map>
#include <memory>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "homat/category.hpp"

namespace homat {

// c: [n] -> objects; the block index of a homological matrix.
struct IndexMap {
  std::vector<Symbol> objects;

  std::size_t size() const { return objects.size(); }
  const Symbol& at(std::size_t i) const { return objects.at(i); }

  friend bool operator==(const IndexMap&, const IndexMap&) = default;
};

inline void check_index_map(const CategoryPtr& cat, const IndexMap& c) {
  if (c.objects.empty()) throw SchemaError("index map must be nonempty");
  for (const auto& x : c.objects) cat->dim_of(x);
}

// Block matrix over a graded category: entry (i,j) is an element of
// hom(source(j), target(i)); absent entries are zero. The effective
// degree of a homogeneous entry at row i is its intrinsic degree minus
// dim(target(i)); the shift feeds sign bookkeeping downstream and never
// touches composition.
class HomMatrix {
 public:
  HomMatrix(CategoryPtr cat, IndexMap source, IndexMap target)
      : cat_(std::move(cat)), source_(std::move(source)), target_(std::move(target)) {
    check_index_map(cat_, source_);
    check_index_map(cat_, target_);
  }

  static HomMatrix identity(const CategoryPtr& cat, const IndexMap& c) {
    HomMatrix m(cat, c, c);
    for (std::size_t i = 0; i < c.size(); ++i)
      m.set_entry(i, i, GradedVector::unit(cat->hom_basis(c.at(i), c.at(i)), BasisKey{}));
    return m;
  }

  const CategoryPtr& category() const { return cat_; }
  const IndexMap& source() const { return source_; }
  const IndexMap& target() const { return target_; }
  std::size_t rows() const { return target_.size(); }
  std::size_t cols() const { return source_.size(); }
  bool is_zero() const { return entries_.empty(); }
  bool is_square() const { return source_ == target_; }

  const std::map<std::pair<std::size_t, std::size_t>, GradedVector>& entries() const {
    return entries_;
  }

  GradedVector entry(std::size_t row, std::size_t col) const {
    auto it = entries_.find({row, col});
    return it == entries_.end() ? GradedVector::zero(hom_of(row, col)) : it->second;
  }

  void set_entry(std::size_t row, std::size_t col, const GradedVector& value) {
    if (row >= rows() || col >= cols()) throw IndexMismatch("entry position out of range");
    if (!same_basis(value.ambient(), hom_of(row, col)))
      throw AmbientMismatch("entry (" + std::to_string(row + 1) + "," + std::to_string(col + 1) +
                            ") does not live in hom(" + source_.at(col) + "," + target_.at(row) +
                            ")");
    if (value.is_zero())
      entries_.erase({row, col});
    else
      entries_[{row, col}] = value;
  }

  void add_entry(std::size_t row, std::size_t col, const GradedVector& value) {
    set_entry(row, col, entry(row, col) + value);
  }

  friend HomMatrix operator*(const Rational& c, const HomMatrix& m) {
    HomMatrix out(m.cat_, m.source_, m.target_);
    for (const auto& [pos, v] : m.entries_) out.set_entry(pos.first, pos.second, c * v);
    return out;
  }

  friend HomMatrix operator+(const HomMatrix& a, const HomMatrix& b) {
    if (!same_category(a.cat_, b.cat_) || a.source_ != b.source_ || a.target_ != b.target_)
      throw IndexMismatch("matrix sum requires matching index maps");
    HomMatrix out = a;
    for (const auto& [pos, v] : b.entries_) out.add_entry(pos.first, pos.second, v);
    return out;
  }

  friend bool operator==(const HomMatrix& a, const HomMatrix& b) {
    return same_category(a.cat_, b.cat_) && a.source_ == b.source_ && a.target_ == b.target_ &&
           a.entries_ == b.entries_;
  }

 private:
  BasisPtr hom_of(std::size_t row, std::size_t col) const {
    return cat_->hom_basis(source_.at(col), target_.at(row));
  }

  CategoryPtr cat_;
  IndexMap source_, target_;
  std::map<std::pair<std::size_t, std::size_t>, GradedVector> entries_;
};

inline int compare_matrices(const HomMatrix& a, const HomMatrix& b) {
  if (a.source().objects != b.source().objects)
    return a.source().objects < b.source().objects ? -1 : 1;
  if (a.target().objects != b.target().objects)
    return a.target().objects < b.target().objects ? -1 : 1;
  auto ia = a.entries().begin(), ib = b.entries().begin();
  for (; ia != a.entries().end() && ib != b.entries().end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
    if (int c = compare_vectors(ia->second, ib->second); c != 0) return c;
  }
  if (ia != a.entries().end()) return 1;
  if (ib != b.entries().end()) return -1;
  return 0;
}

// (AB)_{ki} = sum over j of A_{kj} * B_{ji}, demanding A.source == B.target.
inline HomMatrix hg_product(const HomMatrix& a, const HomMatrix& b) {
  if (!same_category(a.category(), b.category()))
    throw IndexMismatch("matrix product across different categories");
  if (a.source() != b.target())
    throw IndexMismatch("matrix product requires A.source == B.target");
  HomMatrix out(a.category(), b.source(), a.target());
  const auto& cat = *a.category();
  for (const auto& [apos, av] : a.entries()) {
    const auto [k, j] = apos;
    for (const auto& [bpos, bv] : b.entries()) {
      if (bpos.first != j) continue;
      const std::size_t i = bpos.second;
      const Symbol& x = b.source().at(i);
      const Symbol& y = a.source().at(j);
      const Symbol& z = a.target().at(k);
      GradedVector sum = GradedVector::zero(cat.hom_basis(x, z));
      for (const auto& [gk, gc] : av.terms())
        for (const auto& [fk, fc] : bv.terms())
          sum.add_scaled(gc * fc, cat.compose_basis(x, y, z, gk, fk));
      out.add_entry(k, i, sum);
    }
  }
  return out;
}

inline HomMatrix hg_identity(const CategoryPtr& cat, const IndexMap& c) {
  return HomMatrix::identity(cat, c);
}

// Common effective degree of all nonzero entries: intrinsic degree minus
// the row object's dimension. Zero matrices carry no degree.
inline std::optional<int> effective_degree(const HomMatrix& m) {
  std::optional<int> deg;
  for (const auto& [pos, v] : m.entries()) {
    const auto intrinsic = v.homogeneous_degree();
    if (!intrinsic)
      throw NotHomogeneous("matrix entry (" + std::to_string(pos.first + 1) + "," +
                           std::to_string(pos.second + 1) + ") mixes degrees");
    const int eff = *intrinsic - m.category()->dim_of(m.target().at(pos.first));
    if (!deg)
      deg = eff;
    else if (*deg != eff)
      throw NotHomogeneous("matrix entries have distinct effective degrees");
  }
  return deg;
}

// Fibers H(x) (with degrees stored already shifted down by dim(x)) and a
// basis-level action of hom-space morphisms, one validated table per
// source object. Absent action rows act as zero; identity rows left out
// are filled in with the identity action.
class CategoryModule {
 public:
  using ActKey = std::tuple<Symbol, Symbol, BasisKey, BasisKey>;  // x, y, morphism, fiber elem

  struct ActionEntry {
    Symbol x, y;
    BasisKey morphism;  // basis key in hom(x,y)
    BasisKey on;        // basis key in fiber(x)
    std::vector<std::pair<BasisKey, Rational>> to;  // element of fiber(y)
  };

  CategoryModule(CategoryPtr cat, std::map<Symbol, std::vector<GradedBasisElement>> fibers,
                 const std::vector<ActionEntry>& entries)
      : cat_(std::move(cat)) {
    for (auto& [obj, elements] : fibers) {
      cat_->dim_of(obj);
      fibers_[obj] = make_basis(std::move(elements));
    }
    for (const auto& e : entries) {
      if (!cat_->hom_basis(e.x, e.y)->contains(e.morphism))
        throw SchemaError("action references unknown morphism " + format_key(e.morphism) +
                          " in hom(" + e.x + "," + e.y + ")");
      if (!fiber(e.x)->contains(e.on))
        throw SchemaError("action references unknown fiber element " + format_key(e.on) +
                          " over '" + e.x + "'");
      GradedVector value(fiber(e.y));
      for (const auto& [k, c] : e.to) value.add_term(k, c);
      action_[ActKey{e.x, e.y, e.morphism, e.on}] = std::move(value);
    }
    for (const auto& [obj, basis] : fibers_)
      for (const auto& [k, d] : basis->elements())
        action_.try_emplace(ActKey{obj, obj, BasisKey{}, k}, GradedVector::unit(basis, k));
  }

  const CategoryPtr& category() const { return cat_; }
  bool covers(const Symbol& x) const { return fibers_.count(x) != 0; }

  BasisPtr fiber(const Symbol& x) const {
    auto it = fibers_.find(x);
    if (it == fibers_.end()) throw ModuleUndefined("no module fiber declared over '" + x + "'");
    return it->second;
  }

  const std::map<Symbol, BasisPtr>& fibers() const { return fibers_; }

  GradedVector act_basis(const Symbol& x, const Symbol& y, const BasisKey& morphism,
                         const BasisKey& v) const {
    auto it = action_.find(ActKey{x, y, morphism, v});
    return it == action_.end() ? GradedVector::zero(fiber(y)) : it->second;
  }

  // Bilinear extension of the table to hom-space and fiber elements.
  GradedVector act(const Symbol& x, const Symbol& y, const GradedVector& morphism,
                   const GradedVector& v) const {
    GradedVector out = GradedVector::zero(fiber(y));
    for (const auto& [mk, mc] : morphism.terms())
      for (const auto& [vk, vc] : v.terms()) out.add_scaled(mc * vc, act_basis(x, y, mk, vk));
    return out;
  }

 private:
  CategoryPtr cat_;
  std::map<Symbol, BasisPtr> fibers_;
  std::map<ActKey, GradedVector> action_;
};

using ModulePtr = std::shared_ptr<const CategoryModule>;

// Identity action and compatibility with composition, checked over every
// composable basis pair whose composite stays within truncation and
// whose fibers are covered. Stops at the first violation.
inline Report validate_module(const ModulePtr& mod) {
  Report report;
  const CategoryPtr& cat = mod->category();

  for (const auto& [obj, basis] : mod->fibers())
    for (const auto& [vk, vd] : basis->elements()) {
      if (mod->act_basis(obj, obj, BasisKey{}, vk) != GradedVector::unit(basis, vk)) {
        report.add("identity-action",
                   "id does not fix " + format_key(vk) + " over '" + obj + "'");
        return report;
      }
    }

  const int bound = cat->is_free() ? cat->max_path_length() : -1;
  for (const auto& ow : cat->objects())
    for (const auto& ox : cat->objects())
      for (const auto& oy : cat->objects()) {
        const Symbol &w = ow.id, &x = ox.id, &y = oy.id;
        if (!mod->covers(w) || !mod->covers(x) || !mod->covers(y)) continue;
        const BasisPtr hf = cat->hom_basis(w, x), hg = cat->hom_basis(x, y);
        for (const auto& [gk, gd] : hg->elements())
          for (const auto& [fk, fd] : hf->elements()) {
            if (bound >= 0 && (int)(gk.size() + fk.size()) > bound) continue;
            const GradedVector composite = cat->compose_basis(w, x, y, gk, fk);
            for (const auto& [vk, vd] : mod->fiber(w)->elements()) {
              const GradedVector lhs =
                  mod->act(w, y, composite, GradedVector::unit(mod->fiber(w), vk));
              const GradedVector rhs = mod->act(
                  x, y, GradedVector::unit(hg, gk),
                  mod->act_basis(w, x, fk, vk));
              if (lhs != rhs) {
                report.add("action-compatibility",
                           "(g*f)v != g(fv) for g=" + format_key(gk) + ", f=" + format_key(fk) +
                               ", v=" + format_key(vk) + " over '" + w + "'");
                return report;
              }
            }
          }
      }
  return report;
}

// For a free category, the compatible action is determined by one linear
// map per generator: a path acts by composing its generators' maps.
// generator_action maps (generator id, source fiber key) to an element of
// the target fiber; absent rows act as zero.
inline ModulePtr module_from_generator_action(
    const CategoryPtr& cat, std::map<Symbol, std::vector<GradedBasisElement>> fibers,
    const std::map<std::pair<Symbol, BasisKey>, std::vector<std::pair<BasisKey, Rational>>>&
        generator_action) {
  if (!cat->is_free())
    throw SchemaError("generator-level actions require a free category presentation");
  std::map<Symbol, const MorphGenerator*> gen_by_id;
  for (const auto& g : cat->generators()) gen_by_id[g.id] = &g;

  auto mod = std::make_shared<CategoryModule>(cat, std::move(fibers),
                                              std::vector<CategoryModule::ActionEntry>{});
  // Resolve generator maps against the freshly built fibers.
  std::vector<CategoryModule::ActionEntry> entries;
  for (const auto& ox : cat->objects())
    for (const auto& oy : cat->objects()) {
      if (!mod->covers(ox.id) || !mod->covers(oy.id)) continue;
      const BasisPtr hom = cat->hom_basis(ox.id, oy.id);
      for (const auto& [path, deg] : hom->elements()) {
        if (path.empty()) continue;  // identity rows are implied
        for (const auto& [vk, vd] : mod->fiber(ox.id)->elements()) {
          GradedVector value = GradedVector::unit(mod->fiber(ox.id), vk);
          Symbol at = ox.id;
          // the path key lists generators outermost first
          for (auto it = path.rbegin(); it != path.rend(); ++it) {
            const MorphGenerator& g = *gen_by_id.at(*it);
            GradedVector next = GradedVector::zero(mod->fiber(g.target));
            for (const auto& [k, c] : value.terms()) {
              auto row = generator_action.find({g.id, k});
              if (row == generator_action.end()) continue;
              for (const auto& [tk, tc] : row->second) next.add_term(tk, c * tc);
            }
            value = std::move(next);
            at = g.target;
          }
          if (!value.is_zero()) {
            CategoryModule::ActionEntry e;
            e.x = ox.id;
            e.y = oy.id;
            e.morphism = path;
            e.on = vk;
            for (const auto& [k, c] : value.terms()) e.to.push_back({k, c});
            entries.push_back(std::move(e));
          }
        }
      }
    }
  std::map<Symbol, std::vector<GradedBasisElement>> fiber_decls;
  for (const auto& [obj, basis] : mod->fibers())
    for (const auto& [k, d] : basis->elements()) fiber_decls[obj].push_back({k, d});
  return std::make_shared<CategoryModule>(cat, std::move(fiber_decls), entries);
}

// Element of the direct sum of fibers over an index map: component j
// lives in fiber(c(j)).
struct ModuleVector {
  ModulePtr module;
  IndexMap index;
  std::vector<GradedVector> components;

  static ModuleVector zero(const ModulePtr& mod, const IndexMap& c) {
    ModuleVector v{mod, c, {}};
    for (const auto& x : c.objects) v.components.push_back(GradedVector::zero(mod->fiber(x)));
    return v;
  }

  bool is_zero() const {
    for (const auto& c : components)
      if (!c.is_zero()) return false;
    return true;
  }

  friend ModuleVector operator+(const ModuleVector& a, const ModuleVector& b) {
    if (a.index != b.index) throw IndexMismatch("module vector sum over distinct index maps");
    ModuleVector out = a;
    for (std::size_t i = 0; i < out.components.size(); ++i)
      out.components[i] = out.components[i] + b.components[i];
    return out;
  }

  friend ModuleVector operator*(const Rational& c, const ModuleVector& v) {
    ModuleVector out = v;
    for (auto& comp : out.components) comp = c * comp;
    return out;
  }

  friend bool operator==(const ModuleVector& a, const ModuleVector& b) {
    return a.index == b.index && a.components == b.components;
  }
};

inline int compare_module_vectors(const ModuleVector& a, const ModuleVector& b) {
  if (a.index.objects != b.index.objects) return a.index.objects < b.index.objects ? -1 : 1;
  for (std::size_t i = 0; i < a.components.size(); ++i)
    if (int c = compare_vectors(a.components[i], b.components[i]); c != 0) return c;
  return 0;
}

// Common stored degree across all nonzero component terms.
inline std::optional<int> stored_degree(const ModuleVector& v) {
  std::optional<int> deg;
  for (std::size_t j = 0; j < v.components.size(); ++j) {
    const auto d = v.components[j].homogeneous_degree();
    if (v.components[j].is_zero()) continue;
    if (!d) throw NotHomogeneous("module vector component " + std::to_string(j + 1) +
                                 " mixes degrees");
    if (!deg)
      deg = d;
    else if (*deg != *d)
      throw NotHomogeneous("module vector components have distinct degrees");
  }
  return deg;
}

// (Av)_i = sum over j of A_{ij} acting on v_j; linear in both arguments.
inline ModuleVector hg_act(const HomMatrix& a, const ModuleVector& v) {
  if (!a.is_square()) throw IndexMismatch("action requires a square matrix over one index map");
  if (a.source() != v.index) throw IndexMismatch("matrix and vector index maps differ");
  if (!same_category(a.category(), v.module->category()))
    throw IndexMismatch("matrix and module built over different categories");
  const IndexMap& c = v.index;
  for (const auto& x : c.objects) v.module->fiber(x);  // ModuleUndefined if any is missing
  ModuleVector out = ModuleVector::zero(v.module, c);
  for (const auto& [pos, morphism] : a.entries()) {
    const auto [i, j] = pos;
    if (v.components[j].is_zero()) continue;
    out.components[i] = out.components[i] +
                        v.module->act(c.at(j), c.at(i), morphism, v.components[j]);
  }
  return out;
}

}  // namespace homat
