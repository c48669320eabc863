#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "homat/cobordism.hpp"
#include "homat/complex.hpp"
#include "homat/intervals.hpp"
#include "homat/matrix.hpp"
#include "homat/sympower.hpp"

// JSON wire formats. Every document carries a "kind" discriminator;
// rationals travel as "p/q" strings; basis keys as arrays of symbols;
// row/column/slot indices and permutation images are 1-based. Artifacts
// that live over a category reference its file by relative path under
// "category". Serialization is canonical: object keys are emitted in
// sorted order and collections follow the global key order, so equal
// values serialize to identical bytes.

namespace homat::io {

using json = nlohmann::json;

inline std::string canonical_dump(const json& doc) { return doc.dump(2) + "\n"; }

namespace detail {

inline const json& field(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end())
    throw SchemaError("missing field '" + std::string(name) + "'");
  return *it;
}

inline std::string str(const json& v, const char* what) {
  if (!v.is_string()) throw SchemaError(std::string(what) + " must be a string");
  return v.get<std::string>();
}

inline int integer(const json& v, const char* what) {
  if (!v.is_number_integer()) throw SchemaError(std::string(what) + " must be an integer");
  return v.get<int>();
}

inline Rational coeff(const json& v) { return parse_rational(str(v, "coeff")); }

inline BasisKey key(const json& v) {
  if (!v.is_array()) throw SchemaError("basis key must be an array of symbols");
  BasisKey k;
  for (const auto& s : v) k.push_back(str(s, "key symbol"));
  return k;
}

inline json key_json(const BasisKey& k) {
  json out = json::array();
  for (const auto& s : k) out.push_back(s);
  return out;
}

inline json terms_json(const GradedVector& v, const char* keyname) {
  json out = json::array();
  for (const auto& [k, c] : v.terms())
    out.push_back({{keyname, key_json(k)}, {"coeff", format_rational(c)}});
  return out;
}

inline GradedVector terms_from_json(const json& arr, const BasisPtr& ambient,
                                    const char* keyname) {
  if (!arr.is_array()) throw SchemaError("terms must be an array");
  GradedVector v(ambient);
  for (const auto& t : arr) {
    try {
      v.add_term(key(field(t, keyname)), coeff(field(t, "coeff")));
    } catch (const AmbientMismatch& e) {
      throw SchemaError(e.what());
    }
  }
  return v;
}

inline void expect_kind(const json& doc, const char* kind) {
  if (str(field(doc, "kind"), "kind") != kind)
    throw SchemaError("expected a document of kind '" + std::string(kind) + "'");
}

}  // namespace detail

// ---- category ----

inline json category_to_json(const GradedCategory& cat) {
  if (!cat.is_free())
    throw SchemaError("only free category presentations have a file form");
  json objects = json::array();
  for (const auto& o : cat.objects()) objects.push_back({{"id", o.id}, {"dim", o.dim}});
  json generators = json::array();
  for (const auto& g : cat.generators())
    generators.push_back(
        {{"id", g.id}, {"src", g.source}, {"dst", g.target}, {"degree", g.degree}});
  return {{"kind", "category"},
          {"objects", objects},
          {"generators", generators},
          {"max_path_length", cat.max_path_length()}};
}

inline CategoryPtr category_from_json(const json& doc) {
  detail::expect_kind(doc, "category");
  std::vector<ObjectDecl> objects;
  for (const auto& o : detail::field(doc, "objects"))
    objects.push_back({detail::str(detail::field(o, "id"), "object id"),
                       detail::integer(detail::field(o, "dim"), "object dim")});
  std::vector<MorphGenerator> generators;
  for (const auto& g : detail::field(doc, "generators"))
    generators.push_back({detail::str(detail::field(g, "id"), "generator id"),
                          detail::str(detail::field(g, "src"), "generator src"),
                          detail::str(detail::field(g, "dst"), "generator dst"),
                          detail::integer(detail::field(g, "degree"), "generator degree")});
  const int bound = detail::integer(detail::field(doc, "max_path_length"), "max_path_length");
  try {
    return GradedCategory::free_category(std::move(objects), std::move(generators), bound);
  } catch (const UnknownObject& e) {
    throw SchemaError(e.what());
  }
}

// ---- chain complex ----

inline json complex_to_json(const ChainComplex& c) {
  json basis = json::array();
  for (const auto& [k, d] : c.basis()->elements())
    basis.push_back({{"key", detail::key_json(k)}, {"degree", d}});
  json differential = json::array();
  for (const auto& [k, d] : c.basis()->elements()) {
    const GradedVector dv = c.differential(k);
    if (dv.is_zero()) continue;
    differential.push_back({{"from", detail::key_json(k)}, {"terms", detail::terms_json(dv, "key")}});
  }
  return {{"kind", "complex"}, {"basis", basis}, {"differential", differential}};
}

inline ChainComplex complex_from_json(const json& doc) {
  detail::expect_kind(doc, "complex");
  std::vector<GradedBasisElement> basis;
  for (const auto& b : detail::field(doc, "basis"))
    basis.push_back({detail::key(detail::field(b, "key")),
                     detail::integer(detail::field(b, "degree"), "degree")});
  const BasisPtr ambient = make_basis(basis);
  std::map<BasisKey, GradedVector> differential;
  for (const auto& row : detail::field(doc, "differential")) {
    BasisKey from = detail::key(detail::field(row, "from"));
    if (!ambient->contains(from))
      throw SchemaError("differential source " + format_key(from) + " is not a basis key");
    if (differential.count(from))
      throw SchemaError("duplicate differential row for " + format_key(from));
    differential.emplace(std::move(from),
                         detail::terms_from_json(detail::field(row, "terms"), ambient, "key"));
  }
  return ChainComplex(std::move(basis), std::move(differential));
}

// ---- interval configurations ----

inline json config_to_json(const IntervalConfig& c) {
  json intervals = json::array();
  for (const auto& t : c.intervals)
    intervals.push_back(
        {{"center", format_rational(t.center)}, {"radius", format_rational(t.radius)}});
  return {{"kind", "config"}, {"intervals", intervals}};
}

inline IntervalConfig config_from_json(const json& doc) {
  detail::expect_kind(doc, "config");
  IntervalConfig c;
  for (const auto& t : detail::field(doc, "intervals"))
    c.intervals.push_back({parse_rational(detail::str(detail::field(t, "center"), "center")),
                           parse_rational(detail::str(detail::field(t, "radius"), "radius"))});
  return c;
}

// ---- morphisms ----

inline json morphism_to_json(const Morphism& m, const std::string& category_ref) {
  return {{"kind", "morphism"},
          {"category", category_ref},
          {"src", m.src},
          {"dst", m.dst},
          {"terms", detail::terms_json(m.value, "path")}};
}

inline Morphism morphism_from_json(const json& doc, const CategoryPtr& cat) {
  detail::expect_kind(doc, "morphism");
  const Symbol src = detail::str(detail::field(doc, "src"), "src");
  const Symbol dst = detail::str(detail::field(doc, "dst"), "dst");
  if (!cat->has_object(src) || !cat->has_object(dst))
    throw SchemaError("morphism endpoints must be declared objects");
  return {cat, src, dst,
          detail::terms_from_json(detail::field(doc, "terms"), cat->hom_basis(src, dst), "path")};
}

// ---- homological matrices ----

inline json index_map_json(const IndexMap& c) {
  json out = json::array();
  for (const auto& x : c.objects) out.push_back(x);
  return out;
}

inline IndexMap index_map_from_json(const json& arr, const CategoryPtr& cat) {
  if (!arr.is_array() || arr.empty())
    throw SchemaError("an index map must be a nonempty array of object ids");
  IndexMap c;
  for (const auto& x : arr) {
    const Symbol id = detail::str(x, "object id");
    if (!cat->has_object(id)) throw SchemaError("index map references undeclared object '" + id + "'");
    c.objects.push_back(id);
  }
  return c;
}

inline json matrix_entries_json(const HomMatrix& m) {
  json entries = json::array();
  for (const auto& [pos, v] : m.entries())
    entries.push_back({{"row", pos.first + 1},
                       {"col", pos.second + 1},
                       {"terms", detail::terms_json(v, "path")}});
  return entries;
}

inline json matrix_to_json(const HomMatrix& m, const std::string& category_ref) {
  return {{"kind", "matrix"},
          {"category", category_ref},
          {"source", index_map_json(m.source())},
          {"target", index_map_json(m.target())},
          {"entries", matrix_entries_json(m)}};
}

inline void matrix_entries_from_json(const json& entries, HomMatrix& m) {
  if (!entries.is_array()) throw SchemaError("entries must be an array");
  for (const auto& e : entries) {
    const int row = detail::integer(detail::field(e, "row"), "row");
    const int col = detail::integer(detail::field(e, "col"), "col");
    if (row < 1 || (std::size_t)row > m.rows() || col < 1 || (std::size_t)col > m.cols())
      throw SchemaError("entry position (" + std::to_string(row) + "," + std::to_string(col) +
                        ") is out of range");
    const GradedVector v = detail::terms_from_json(
        detail::field(e, "terms"),
        m.category()->hom_basis(m.source().at(col - 1), m.target().at(row - 1)), "path");
    m.add_entry(row - 1, col - 1, v);
  }
}

inline HomMatrix matrix_from_json(const json& doc, const CategoryPtr& cat) {
  detail::expect_kind(doc, "matrix");
  HomMatrix m(cat, index_map_from_json(detail::field(doc, "source"), cat),
              index_map_from_json(detail::field(doc, "target"), cat));
  matrix_entries_from_json(detail::field(doc, "entries"), m);
  return m;
}

// ---- modules ----

// One module file declares the fiber over a single object together with
// the action rows of morphisms out of that object.
struct ModuleFile {
  Symbol object;
  std::vector<GradedBasisElement> basis;
  std::vector<CategoryModule::ActionEntry> action;
};

inline json module_to_json(const ModuleFile& f, const std::string& category_ref) {
  json basis = json::array();
  for (const auto& e : f.basis)
    basis.push_back({{"key", detail::key_json(e.key)}, {"degree", e.degree}});
  json action = json::array();
  for (const auto& a : f.action) {
    json to = json::array();
    for (const auto& [k, c] : a.to)
      to.push_back({{"key", detail::key_json(k)}, {"coeff", format_rational(c)}});
    action.push_back({{"morphism", detail::key_json(a.morphism)},
                      {"on", detail::key_json(a.on)},
                      {"to", to}});
  }
  return {{"kind", "module"},
          {"category", category_ref},
          {"object", f.object},
          {"basis", basis},
          {"action", action}};
}

// Walks a free-category path key to its target object.
inline Symbol path_target(const CategoryPtr& cat, const Symbol& src, const BasisKey& path) {
  std::map<Symbol, const MorphGenerator*> by_id;
  for (const auto& g : cat->generators()) by_id[g.id] = &g;
  Symbol at = src;
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    auto g = by_id.find(*it);
    if (g == by_id.end() || g->second->source != at)
      throw SchemaError("path " + format_key(path) + " does not start at '" + src + "'");
    at = g->second->target;
  }
  return at;
}

inline ModuleFile module_file_from_json(const json& doc, const CategoryPtr& cat) {
  detail::expect_kind(doc, "module");
  ModuleFile f;
  f.object = detail::str(detail::field(doc, "object"), "object");
  if (!cat->has_object(f.object))
    throw SchemaError("module over undeclared object '" + f.object + "'");
  for (const auto& b : detail::field(doc, "basis"))
    f.basis.push_back({detail::key(detail::field(b, "key")),
                       detail::integer(detail::field(b, "degree"), "degree")});
  for (const auto& a : detail::field(doc, "action")) {
    CategoryModule::ActionEntry e;
    e.x = f.object;
    e.morphism = detail::key(detail::field(a, "morphism"));
    e.y = path_target(cat, f.object, e.morphism);
    if (!cat->hom_basis(e.x, e.y)->contains(e.morphism))
      throw SchemaError("action references unknown morphism " + format_key(e.morphism));
    e.on = detail::key(detail::field(a, "on"));
    for (const auto& t : detail::field(a, "to"))
      e.to.push_back({detail::key(detail::field(t, "key")),
                      detail::coeff(detail::field(t, "coeff"))});
    f.action.push_back(std::move(e));
  }
  return f;
}

// Aggregates per-object module files into one functor. Action rows may
// land in fibers declared by other files, so resolution happens here.
inline ModulePtr combine_module_files(const CategoryPtr& cat,
                                      const std::vector<ModuleFile>& files) {
  std::map<Symbol, std::vector<GradedBasisElement>> fibers;
  std::vector<CategoryModule::ActionEntry> entries;
  for (const auto& f : files) {
    if (fibers.count(f.object))
      throw SchemaError("two module files declare the fiber over '" + f.object + "'");
    fibers[f.object] = f.basis;
    entries.insert(entries.end(), f.action.begin(), f.action.end());
  }
  try {
    return std::make_shared<CategoryModule>(cat, std::move(fibers), entries);
  } catch (const ModuleUndefined& e) {
    throw SchemaError(e.what());
  }
}

// ---- module vectors ----

inline json vector_to_json(const ModuleVector& v, const std::string& category_ref) {
  json components = json::array();
  for (std::size_t i = 0; i < v.components.size(); ++i) {
    if (v.components[i].is_zero()) continue;
    components.push_back(
        {{"slot", i + 1}, {"terms", detail::terms_json(v.components[i], "key")}});
  }
  return {{"kind", "vector"},
          {"category", category_ref},
          {"objects", index_map_json(v.index)},
          {"components", components}};
}

inline ModuleVector vector_from_json(const json& doc, const CategoryPtr& cat,
                                     const ModulePtr& mod) {
  detail::expect_kind(doc, "vector");
  const IndexMap c = index_map_from_json(detail::field(doc, "objects"), cat);
  ModuleVector v = ModuleVector::zero(mod, c);
  for (const auto& comp : detail::field(doc, "components")) {
    const int slot = detail::integer(detail::field(comp, "slot"), "slot");
    if (slot < 1 || (std::size_t)slot > c.size())
      throw SchemaError("component slot " + std::to_string(slot) + " is out of range");
    v.components[slot - 1] =
        v.components[slot - 1] +
        detail::terms_from_json(detail::field(comp, "terms"), mod->fiber(c.at(slot - 1)), "key");
  }
  return v;
}

// ---- cobordism elements ----

inline json cobordism_to_json(const CobordismElement& e, const std::string& category_ref) {
  json alpha = json::array();
  for (std::size_t i = 0; i < e.alpha.size(); ++i) alpha.push_back(e.alpha(i) + 1);
  json entries = json::array();
  for (std::size_t i = 0; i < e.entries.size(); ++i) {
    if (e.entries[i].is_zero()) continue;
    entries.push_back({{"slot", i + 1}, {"terms", detail::terms_json(e.entries[i], "path")}});
  }
  return {{"kind", "cobordism"},
          {"category", category_ref},
          {"objects", index_map_json(e.index)},
          {"alpha", alpha},
          {"entries", entries}};
}

inline CobordismElement cobordism_from_json(const json& doc, const CategoryPtr& cat) {
  detail::expect_kind(doc, "cobordism");
  const IndexMap c = index_map_from_json(detail::field(doc, "objects"), cat);
  const json& alpha_json = detail::field(doc, "alpha");
  if (!alpha_json.is_array() || alpha_json.size() != c.size())
    throw SchemaError("alpha must list one 1-based image per slot");
  std::vector<std::size_t> images;
  for (const auto& v : alpha_json) {
    const int img = detail::integer(v, "alpha image");
    if (img < 1 || (std::size_t)img > c.size())
      throw SchemaError("alpha image " + std::to_string(img) + " is out of range");
    images.push_back((std::size_t)img - 1);
  }
  Permutation alpha(std::move(images));
  std::vector<GradedVector> entries;
  for (std::size_t i = 0; i < c.size(); ++i)
    entries.push_back(GradedVector::zero(cat->hom_basis(c.at(i), c.at(alpha(i)))));
  for (const auto& row : detail::field(doc, "entries")) {
    const int slot = detail::integer(detail::field(row, "slot"), "slot");
    if (slot < 1 || (std::size_t)slot > c.size())
      throw SchemaError("entry slot " + std::to_string(slot) + " is out of range");
    const std::size_t i = (std::size_t)slot - 1;
    entries[i] = entries[i] + detail::terms_from_json(detail::field(row, "terms"),
                                                      cat->hom_basis(c.at(i), c.at(alpha(i))),
                                                      "path");
  }
  return CobordismElement::make(cat, c, std::move(alpha), std::move(entries));
}

// ---- symmetric-power elements ----

inline json sym_matrix_to_json(const SymElement<HomMatrix>& s, const IndexMap& c,
                               const std::string& category_ref) {
  json terms = json::array();
  for (const auto& [tensor, coeff] : s.terms()) {
    json factors = json::array();
    for (const auto& f : tensor.factors) factors.push_back({{"entries", matrix_entries_json(f)}});
    terms.push_back({{"coeff", format_rational(coeff)}, {"factors", factors}});
  }
  return {{"kind", "sym-matrix"},
          {"category", category_ref},
          {"objects", index_map_json(c)},
          {"arity", s.arity()},
          {"terms", terms}};
}

inline std::pair<SymElement<HomMatrix>, IndexMap> sym_matrix_from_json(const json& doc,
                                                                       const CategoryPtr& cat,
                                                                       Convention convention) {
  detail::expect_kind(doc, "sym-matrix");
  const IndexMap c = index_map_from_json(detail::field(doc, "objects"), cat);
  const int arity = detail::integer(detail::field(doc, "arity"), "arity");
  if (arity < 1) throw SchemaError("arity must be positive");
  SymElement<HomMatrix> s(convention, (std::size_t)arity);
  for (const auto& term : detail::field(doc, "terms")) {
    SymTensor<HomMatrix> tensor;
    for (const auto& f : detail::field(term, "factors")) {
      HomMatrix m(cat, c, c);
      matrix_entries_from_json(detail::field(f, "entries"), m);
      tensor.factors.push_back(std::move(m));
    }
    if (tensor.factors.size() != (std::size_t)arity)
      throw SchemaError("every term must carry exactly 'arity' factors");
    s.add_term(detail::coeff(detail::field(term, "coeff")), std::move(tensor));
  }
  return {std::move(s), c};
}

inline json sym_vector_to_json(const SymElement<ModuleVector>& s, const IndexMap& c,
                               const std::string& category_ref) {
  json terms = json::array();
  for (const auto& [tensor, coeff] : s.terms()) {
    json factors = json::array();
    for (const auto& f : tensor.factors) {
      json components = json::array();
      for (std::size_t i = 0; i < f.components.size(); ++i) {
        if (f.components[i].is_zero()) continue;
        components.push_back(
            {{"slot", i + 1}, {"terms", detail::terms_json(f.components[i], "key")}});
      }
      factors.push_back({{"components", components}});
    }
    terms.push_back({{"coeff", format_rational(coeff)}, {"factors", factors}});
  }
  return {{"kind", "sym-vector"},
          {"category", category_ref},
          {"objects", index_map_json(c)},
          {"arity", s.arity()},
          {"terms", terms}};
}

inline std::pair<SymElement<ModuleVector>, IndexMap> sym_vector_from_json(
    const json& doc, const CategoryPtr& cat, const ModulePtr& mod, Convention convention) {
  detail::expect_kind(doc, "sym-vector");
  const IndexMap c = index_map_from_json(detail::field(doc, "objects"), cat);
  const int arity = detail::integer(detail::field(doc, "arity"), "arity");
  if (arity < 1) throw SchemaError("arity must be positive");
  SymElement<ModuleVector> s(convention, (std::size_t)arity);
  for (const auto& term : detail::field(doc, "terms")) {
    SymTensor<ModuleVector> tensor;
    for (const auto& f : detail::field(term, "factors")) {
      ModuleVector v = ModuleVector::zero(mod, c);
      for (const auto& comp : detail::field(f, "components")) {
        const int slot = detail::integer(detail::field(comp, "slot"), "slot");
        if (slot < 1 || (std::size_t)slot > c.size())
          throw SchemaError("component slot " + std::to_string(slot) + " is out of range");
        v.components[slot - 1] =
            v.components[slot - 1] + detail::terms_from_json(detail::field(comp, "terms"),
                                                             mod->fiber(c.at(slot - 1)), "key");
      }
      tensor.factors.push_back(std::move(v));
    }
    if (tensor.factors.size() != (std::size_t)arity)
      throw SchemaError("every term must carry exactly 'arity' factors");
    s.add_term(detail::coeff(detail::field(term, "coeff")), std::move(tensor));
  }
  return {std::move(s), c};
}

// ---- file loading ----

// Reads documents from a session directory, resolving "category"
// references relative to the referencing file and caching categories per
// normalized path. Referenced categories are validated once at load.
class Loader {
 public:
  json read(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw SchemaError("cannot open '" + file.string() + "'");
    json doc;
    try {
      in >> doc;
    } catch (const json::exception& e) {
      throw SchemaError("parse error in '" + file.string() + "': " + e.what());
    }
    if (!doc.is_object()) throw SchemaError("'" + file.string() + "' is not a JSON object");
    return doc;
  }

  CategoryPtr load_category(const std::filesystem::path& file) {
    const std::string canonical = std::filesystem::weakly_canonical(file).string();
    auto it = cache_.find(canonical);
    if (it != cache_.end()) return it->second;
    const CategoryPtr cat = category_from_json(read(file));
    const Report r = validate_category(cat);
    if (!r.ok())
      throw MathError("category '" + file.string() + "' is invalid: " +
                      r.violations.front().rule + " — " + r.violations.front().detail);
    cache_.emplace(canonical, cat);
    return cat;
  }

  // Follows the document's "category" reference relative to its file.
  CategoryPtr referenced_category(const json& doc, const std::filesystem::path& file) {
    const std::string ref = detail::str(detail::field(doc, "category"), "category");
    return load_category(file.parent_path() / ref);
  }

  static std::string category_ref(const json& doc) {
    return detail::str(detail::field(doc, "category"), "category");
  }

 private:
  std::map<std::string, CategoryPtr> cache_;
};

}  // namespace homat::io
