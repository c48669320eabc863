#pragma once

#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "homat/complex.hpp"
#include "homat/intervals.hpp"
#include "homat/sympower.hpp"

// Seeded randomized checks of the algebraic laws the library promises.
// Every generator draws from an explicit mt19937_64 stream, so a (seed,
// trials) pair pins the entire run.

namespace homat::laws {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::size_t pick(std::size_t n) { return n == 0 ? 0 : (std::size_t)(engine_() % n); }
  int range(int lo, int hi) { return lo + (int)pick((std::size_t)(hi - lo + 1)); }
  bool chance(int percent) { return (int)pick(100) < percent; }

  // small nonzero rational, denominators 1..3
  Rational coeff() {
    const int num = range(1, 4) * (chance(50) ? 1 : -1);
    return Rational(num) / Rational(range(1, 3));
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

struct LawResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0; }
};

namespace gen {

struct CategoryOpts {
  std::size_t max_objects = 4;
  std::size_t max_generators = 3;
  int min_bound = 2;
  int max_bound = 4;
  bool even = false;
  std::optional<int> uniform_dim;
  std::size_t max_hom = 20;
};

inline CategoryPtr category(Rng& rng, const CategoryOpts& opts) {
  const std::size_t n_objects = 1 + rng.pick(opts.max_objects);
  std::vector<ObjectDecl> objects;
  for (std::size_t i = 0; i < n_objects; ++i) {
    int dim = opts.even ? 2 * rng.range(0, 2) : rng.range(0, 3);
    if (opts.uniform_dim) dim = *opts.uniform_dim;
    objects.push_back({"o" + std::to_string(i), dim});
  }
  std::size_t n_gens = 1 + rng.pick(opts.max_generators);
  int bound = rng.range(opts.min_bound, opts.max_bound);
  for (;;) {
    std::vector<MorphGenerator> gens;
    for (std::size_t i = 0; i < n_gens; ++i) {
      const Symbol src = objects[rng.pick(n_objects)].id;
      const Symbol dst = objects[rng.pick(n_objects)].id;
      const int degree = opts.even ? 2 * rng.range(0, 2) : rng.range(0, 4);
      gens.push_back({"g" + std::to_string(i), src, dst, degree});
    }
    const CategoryPtr cat = GradedCategory::free_category(objects, gens, bound);
    std::size_t biggest = 0;
    for (const auto& a : objects)
      for (const auto& b : objects) biggest = std::max(biggest, cat->hom_basis(a.id, b.id)->size());
    if (biggest <= opts.max_hom) return cat;
    if (bound > opts.min_bound)
      --bound;
    else if (n_gens > 1)
      --n_gens;
    else
      return cat;  // one generator at the minimum bound always fits
  }
}

inline IndexMap index_map(Rng& rng, const CategoryPtr& cat, std::size_t size) {
  IndexMap c;
  for (std::size_t i = 0; i < size; ++i)
    c.objects.push_back(cat->objects()[rng.pick(cat->objects().size())].id);
  return c;
}

// keys of hom(x,y) no longer than max_len
inline std::vector<BasisKey> short_keys(const CategoryPtr& cat, const Symbol& x, const Symbol& y,
                                        std::size_t max_len) {
  std::vector<BasisKey> keys;
  for (const auto& [k, d] : cat->hom_basis(x, y)->elements())
    if (k.size() <= max_len) keys.push_back(k);
  return keys;
}

inline GradedVector hom_element(Rng& rng, const CategoryPtr& cat, const Symbol& x,
                                const Symbol& y, std::size_t max_len) {
  GradedVector v(cat->hom_basis(x, y));
  const auto keys = short_keys(cat, x, y, max_len);
  if (keys.empty()) return v;
  const std::size_t n_terms = 1 + rng.pick(2);
  for (std::size_t i = 0; i < n_terms; ++i) v.add_term(keys[rng.pick(keys.size())], rng.coeff());
  return v;
}

// homogeneous element of prescribed intrinsic degree (zero when the
// hom-space has nothing at that degree)
inline GradedVector homog_element(Rng& rng, const CategoryPtr& cat, const Symbol& x,
                                  const Symbol& y, int degree, std::size_t max_len) {
  GradedVector v(cat->hom_basis(x, y));
  std::vector<BasisKey> keys;
  for (const auto& [k, d] : cat->hom_basis(x, y)->elements())
    if (d == degree && k.size() <= max_len) keys.push_back(k);
  if (keys.empty()) return v;
  const std::size_t n_terms = 1 + rng.pick(2);
  for (std::size_t i = 0; i < n_terms; ++i) v.add_term(keys[rng.pick(keys.size())], rng.coeff());
  return v;
}

inline HomMatrix matrix(Rng& rng, const CategoryPtr& cat, const IndexMap& src,
                        const IndexMap& dst, std::size_t max_len) {
  HomMatrix m(cat, src, dst);
  for (std::size_t i = 0; i < dst.size(); ++i)
    for (std::size_t j = 0; j < src.size(); ++j)
      if (rng.chance(60)) m.add_entry(i, j, hom_element(rng, cat, src.at(j), dst.at(i), max_len));
  return m;
}

// square matrix whose entries share one effective degree
inline HomMatrix eff_homog_matrix(Rng& rng, const CategoryPtr& cat, const IndexMap& c,
                                  std::size_t max_len) {
  std::vector<int> available;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j)
      for (const auto& [k, d] : cat->hom_basis(c.at(j), c.at(i))->elements())
        if (k.size() <= max_len) available.push_back(d - cat->dim_of(c.at(i)));
  if (available.empty()) return HomMatrix(cat, c, c);
  const int eff = available[rng.pick(available.size())];
  HomMatrix m(cat, c, c);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j)
      if (rng.chance(60))
        m.add_entry(i, j, homog_element(rng, cat, c.at(j), c.at(i),
                                        eff + cat->dim_of(c.at(i)), max_len));
  if (m.is_zero()) {
    for (std::size_t i = 0; i < c.size() && m.is_zero(); ++i)
      for (std::size_t j = 0; j < c.size() && m.is_zero(); ++j)
        m.add_entry(i, j, homog_element(rng, cat, c.at(j), c.at(i),
                                        eff + cat->dim_of(c.at(i)), max_len));
  }
  return m;
}

// Module with fibers on an even degree grid and degree-additive
// generator maps; compatibility holds by construction.
inline ModulePtr module(Rng& rng, const CategoryPtr& cat, int degree_step = 1) {
  const int top = 8;
  std::map<Symbol, std::vector<GradedBasisElement>> fibers;
  for (const auto& o : cat->objects()) {
    std::vector<GradedBasisElement> basis;
    for (int d = 0; d <= top; d += degree_step)
      basis.push_back({{"v_" + o.id + "_" + std::to_string(d)}, d});
    fibers[o.id] = basis;
  }
  std::map<std::pair<Symbol, BasisKey>, std::vector<std::pair<BasisKey, Rational>>> action;
  for (const auto& g : cat->generators())
    for (int d = 0; d <= top; d += degree_step) {
      if (d + g.degree > top) continue;  // truncated to zero above the grid
      if (rng.chance(25)) continue;
      action[{g.id, {"v_" + g.source + "_" + std::to_string(d)}}] = {
          {{"v_" + g.target + "_" + std::to_string(d + g.degree)}, rng.coeff()}};
    }
  return module_from_generator_action(cat, std::move(fibers), action);
}

inline ModuleVector module_vector(Rng& rng, const ModulePtr& mod, const IndexMap& c) {
  ModuleVector v = ModuleVector::zero(mod, c);
  for (std::size_t j = 0; j < c.size(); ++j) {
    std::vector<BasisKey> keys;
    for (const auto& [k, d] : mod->fiber(c.at(j))->elements()) keys.push_back(k);
    const std::size_t n_terms = 1 + rng.pick(2);
    for (std::size_t i = 0; i < n_terms; ++i)
      v.components[j].add_term(keys[rng.pick(keys.size())], rng.coeff());
  }
  return v;
}

// module vector all of whose component terms sit at one stored degree
inline ModuleVector homog_module_vector(Rng& rng, const ModulePtr& mod, const IndexMap& c,
                                        int degree) {
  ModuleVector v = ModuleVector::zero(mod, c);
  for (std::size_t j = 0; j < c.size(); ++j) {
    std::vector<BasisKey> keys;
    for (const auto& [k, d] : mod->fiber(c.at(j))->elements())
      if (d == degree) keys.push_back(k);
    if (!keys.empty() && rng.chance(85))
      v.components[j].add_term(keys[rng.pick(keys.size())], rng.coeff());
  }
  return v;
}

inline CobordismElement cobordism(Rng& rng, const CategoryPtr& cat, const IndexMap& c,
                                  bool even, std::size_t max_len) {
  const auto perms = Permutation::all(c.size());
  const Permutation alpha = perms[rng.pick(perms.size())];
  std::vector<GradedVector> entries;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Symbol& x = c.at(i);
    const Symbol& y = c.at(alpha(i));
    std::vector<int> degrees;
    for (const auto& [k, d] : cat->hom_basis(x, y)->elements())
      if (k.size() <= max_len && (!even || d % 2 == 0)) degrees.push_back(d);
    if (degrees.empty()) {
      entries.push_back(GradedVector::zero(cat->hom_basis(x, y)));
      continue;
    }
    entries.push_back(
        homog_element(rng, cat, x, y, degrees[rng.pick(degrees.size())], max_len));
  }
  return CobordismElement::make(cat, c, alpha, std::move(entries));
}

inline SymElement<HomMatrix> sym_matrix_element(Rng& rng, const CategoryPtr& cat,
                                                const IndexMap& c, std::size_t arity,
                                                Convention conv, std::size_t max_len) {
  SymElement<HomMatrix> s(conv, arity);
  const std::size_t n_terms = 1 + rng.pick(2);
  for (std::size_t t = 0; t < n_terms; ++t) {
    SymTensor<HomMatrix> tensor;
    for (std::size_t i = 0; i < arity; ++i)
      tensor.factors.push_back(eff_homog_matrix(rng, cat, c, max_len));
    bool zero = false;
    for (const auto& f : tensor.factors) zero = zero || factor_is_zero(f);
    if (zero) continue;
    s.add_term(rng.coeff(), std::move(tensor));
  }
  return s;
}

inline SymElement<ModuleVector> sym_module_element(Rng& rng, const ModulePtr& mod,
                                                   const IndexMap& c, std::size_t arity,
                                                   Convention conv, int degree_step) {
  SymElement<ModuleVector> s(conv, arity);
  const std::size_t n_terms = 1 + rng.pick(2);
  for (std::size_t t = 0; t < n_terms; ++t) {
    SymTensor<ModuleVector> tensor;
    bool zero = false;
    for (std::size_t i = 0; i < arity; ++i) {
      const int degree = degree_step * rng.range(0, 4);
      tensor.factors.push_back(homog_module_vector(rng, mod, c, degree));
      zero = zero || factor_is_zero(tensor.factors.back());
    }
    if (zero) continue;
    s.add_term(rng.coeff(), std::move(tensor));
  }
  return s;
}

// Valid complex by construction: per degree, "cycle" elements carry no
// differential and "killer" elements map into the cycle span one degree
// below; d*d = 0 holds term by term.
inline ChainComplex complex(Rng& rng) {
  std::vector<GradedBasisElement> basis;
  std::map<int, std::vector<BasisKey>> cycles;
  std::map<BasisKey, int> degree_of;
  for (int d = 0; d <= 3; ++d) {
    const std::size_t n = rng.pick(4) + (d == 0 ? 1 : 0);
    for (std::size_t i = 0; i < n; ++i) {
      const BasisKey k = {"c" + std::to_string(d) + "_" + std::to_string(i)};
      basis.push_back({k, d});
      degree_of[k] = d;
    }
  }
  // mark cycles: everything in degree 0, a random subset above
  std::map<BasisKey, bool> is_cycle;
  for (const auto& e : basis)
    is_cycle[e.key] = e.degree == 0 || rng.chance(50);
  for (const auto& e : basis)
    if (is_cycle[e.key]) cycles[e.degree].push_back(e.key);

  const BasisPtr ambient = make_basis(basis);
  std::map<BasisKey, GradedVector> differential;
  for (const auto& e : basis) {
    if (is_cycle[e.key]) continue;
    const auto below = cycles.find(e.degree - 1);
    if (below == cycles.end() || below->second.empty()) continue;
    GradedVector dv(ambient);
    for (const auto& target : below->second)
      if (rng.chance(60)) dv.add_term(target, rng.coeff());
    if (!dv.is_zero()) differential.emplace(e.key, std::move(dv));
  }
  return ChainComplex(std::move(basis), std::move(differential));
}

// Mutant with a guaranteed d*d != 0: a fresh 3-step chain is grafted on,
// and the fresh bottom element can cancel against nothing.
inline ChainComplex broken_complex(Rng& rng) {
  const ChainComplex valid = complex(rng);
  std::vector<GradedBasisElement> basis;
  for (const auto& [k, d] : valid.basis()->elements()) basis.push_back({k, d});
  const int top = 2 + (int)rng.pick(2);
  basis.push_back({{"m_top"}, top});
  basis.push_back({{"m_mid"}, top - 1});
  basis.push_back({{"m_bot"}, top - 2});
  const BasisPtr ambient = make_basis(basis);
  std::map<BasisKey, GradedVector> differential;
  for (const auto& [k, d] : valid.basis()->elements()) {
    const GradedVector dv = valid.differential(k);
    if (dv.is_zero()) continue;
    std::map<BasisKey, Rational> terms = dv.terms();
    differential.emplace(k, GradedVector(ambient, std::move(terms)));
  }
  GradedVector dtop(ambient), dmid(ambient);
  dtop.add_term({"m_mid"}, rng.coeff());
  dmid.add_term({"m_bot"}, rng.coeff());
  differential.emplace(BasisKey{"m_top"}, dtop);
  differential.emplace(BasisKey{"m_mid"}, dmid);
  return ChainComplex(std::move(basis), std::move(differential));
}

inline IntervalConfig config(Rng& rng, std::size_t arity) {
  IntervalConfig c;
  const Rational width = Rational(2) / Rational((int)arity);
  for (std::size_t i = 0; i < arity; ++i) {
    const Rational left = Rational(-1) + width * (int)i;
    const Rational mid = left + width / 2;
    const Rational jitter = width * Rational(rng.range(-2, 2)) / Rational(16);
    const Rational radius = width * Rational(rng.range(1, 3)) / Rational(16);
    c.intervals.push_back({mid + jitter, radius});
  }
  return c;
}

}  // namespace gen

// One named law, checked trial by trial.
inline LawResult check(const std::string& name, std::uint64_t seed, std::size_t trials,
                       const std::function<bool(Rng&, std::string&)>& trial) {
  LawResult result{name, trials, 0, ""};
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    std::string detail;
    bool ok = false;
    try {
      ok = trial(rng, detail);
    } catch (const Error& e) {
      detail = e.what();
    }
    if (!ok) {
      ++result.failures;
      if (result.first_failure.empty())
        result.first_failure = "trial " + std::to_string(t + 1) +
                               (detail.empty() ? "" : ": " + detail);
    }
  }
  return result;
}

// ---- individual laws ----

inline LawResult rational_ring_laws(std::uint64_t seed, std::size_t trials) {
  return check("rational-ring", seed, trials, [](Rng& rng, std::string&) {
    auto draw = [&rng]() {
      Integer num = Integer(rng.engine()()) * Integer(rng.engine()()) - Integer(rng.engine()());
      Integer den = Integer(rng.engine()()) + 1;
      return Rational(num) / Rational(den);
    };
    const Rational a = draw(), b = draw(), c = draw();
    return (a + b) + c == a + (b + c) && a * (b + c) == a * b + a * c &&
           parse_rational(format_rational(a)) == a;
  });
}

inline LawResult shift_regrading(std::uint64_t seed, std::size_t trials) {
  return check("shift-regrading", seed, trials, [](Rng& rng, std::string&) {
    std::vector<GradedBasisElement> elements;
    const std::size_t n = 1 + rng.pick(6);
    for (std::size_t i = 0; i < n; ++i)
      elements.push_back({{"e" + std::to_string(i)}, rng.range(-4, 4)});
    const BasisPtr basis = make_basis(elements);
    GradedVector v(basis);
    for (const auto& e : elements)
      if (rng.chance(70)) v.add_term(e.key, rng.coeff());
    const int shift = rng.range(-5, 5);
    const GradedVector shifted = shift_degrees(v, shift);
    if (shifted.terms() != v.terms()) return false;
    for (const auto& [k, c] : v.terms())
      if (shifted.ambient()->degree_of(k) != v.ambient()->degree_of(k) - shift) return false;
    return shift_degrees(shifted, -shift) == v;
  });
}

inline LawResult euler_identity(std::uint64_t seed, std::size_t trials) {
  return check("complex-euler-identity", seed, trials, [](Rng& rng, std::string& detail) {
    const ChainComplex c = gen::complex(rng);
    if (!validate_complex(c).ok()) {
      detail = "generator produced an invalid complex";
      return false;
    }
    const auto betti = homology_betti(c);
    const auto by_degree = c.basis_by_degree();
    long chi_dim = 0, chi_betti = 0;
    for (const auto& [d, keys] : by_degree) {
      const long sign = (d % 2 == 0) ? 1 : -1;
      chi_dim += sign * (long)keys.size();
      if (betti.at(d) > keys.size()) {
        detail = "betti exceeds the chain dimension";
        return false;
      }
    }
    for (const auto& [d, b] : betti) chi_betti += ((d % 2 == 0) ? 1 : -1) * (long)b;
    return chi_dim == chi_betti;
  });
}

inline LawResult mutant_detection(std::uint64_t seed, std::size_t trials) {
  return check("complex-mutant-detection", seed, trials, [](Rng& rng, std::string& detail) {
    const ChainComplex broken = gen::broken_complex(rng);
    const Report r = validate_complex(broken);
    if (r.ok()) {
      detail = "a d*d != 0 mutant validated";
      return false;
    }
    return r.violations.front().rule == "d-squared";
  });
}

inline LawResult free_word_count(std::uint64_t seed, std::size_t trials) {
  return check("free-word-count", seed, trials, [](Rng& rng, std::string&) {
    const std::size_t loops = 1 + rng.pick(3);
    const int bound = rng.range(1, 4);
    std::vector<MorphGenerator> gens;
    for (std::size_t i = 0; i < loops; ++i)
      gens.push_back({"g" + std::to_string(i), "x", "x", 0});
    const CategoryPtr cat = GradedCategory::free_category({{"x", 0}}, gens, bound);
    std::size_t expected = 0, power = 1;
    for (int l = 0; l <= bound; ++l, power *= loops) expected += power;
    return cat->hom_basis("x", "x")->size() == expected;
  });
}

inline LawResult category_laws(std::uint64_t seed, std::size_t trials) {
  return check("category-validation", seed, trials, [](Rng& rng, std::string& detail) {
    const CategoryPtr cat = gen::category(rng, {});
    const Report r = validate_category(cat);
    if (!r.ok()) detail = r.violations.front().rule + ": " + r.violations.front().detail;
    return r.ok();
  });
}

inline LawResult compose_bilinearity(std::uint64_t seed, std::size_t trials) {
  return check("compose-bilinearity", seed, trials, [](Rng& rng, std::string&) {
    const CategoryPtr cat = gen::category(rng, {});
    const auto& objs = cat->objects();
    const Symbol x = objs[rng.pick(objs.size())].id;
    const Symbol y = objs[rng.pick(objs.size())].id;
    const Symbol z = objs[rng.pick(objs.size())].id;
    const std::size_t half = (std::size_t)cat->max_path_length() / 2;
    const Morphism f1{cat, x, y, gen::hom_element(rng, cat, x, y, half)};
    const Morphism f2{cat, x, y, gen::hom_element(rng, cat, x, y, half)};
    const Morphism g1{cat, y, z, gen::hom_element(rng, cat, y, z, half)};
    const Morphism g2{cat, y, z, gen::hom_element(rng, cat, y, z, half)};
    const Rational s = rng.coeff(), t = rng.coeff();
    const Morphism gmix{cat, y, z, s * g1.value + t * g2.value};
    const Morphism fmix{cat, x, y, s * f1.value + t * f2.value};
    return compose(gmix, f1).value == s * compose(g1, f1).value + t * compose(g2, f1).value &&
           compose(g1, fmix).value == s * compose(g1, f1).value + t * compose(g1, f2).value;
  });
}

inline LawResult hg_associativity(std::uint64_t seed, std::size_t trials) {
  return check("hg-associativity", seed, trials, [](Rng& rng, std::string&) {
    const CategoryPtr cat = gen::category(rng, {.min_bound = 3});
    IndexMap maps[4];
    for (auto& m : maps) m = gen::index_map(rng, cat, 1 + rng.pick(3));
    const HomMatrix a = gen::matrix(rng, cat, maps[2], maps[3], 1);
    const HomMatrix b = gen::matrix(rng, cat, maps[1], maps[2], 1);
    const HomMatrix c = gen::matrix(rng, cat, maps[0], maps[1], 1);
    return hg_product(hg_product(a, b), c) == hg_product(a, hg_product(b, c));
  });
}

inline LawResult hg_degree_bookkeeping(std::uint64_t seed, std::size_t trials) {
  return check("hg-degree-bookkeeping", seed, trials, [](Rng& rng, std::string&) {
    const CategoryPtr cat = gen::category(rng, {.min_bound = 2});
    const IndexMap c = gen::index_map(rng, cat, 1 + rng.pick(3));
    const IndexMap d = gen::index_map(rng, cat, 1 + rng.pick(3));
    const IndexMap e = gen::index_map(rng, cat, 1 + rng.pick(3));
    // single-entry homogeneous factors pin the expected intrinsic degree
    HomMatrix a(cat, d, e), b(cat, c, d);
    const std::size_t k = rng.pick(e.size()), j = rng.pick(d.size()), i = rng.pick(c.size());
    const GradedVector av = gen::hom_element(rng, cat, d.at(j), e.at(k), 1);
    const GradedVector bv = gen::hom_element(rng, cat, c.at(i), d.at(j), 1);
    const auto adeg = av.homogeneous_degree(), bdeg = bv.homogeneous_degree();
    if (!adeg || !bdeg) return true;  // inhomogeneous draw; nothing to pin
    a.set_entry(k, j, av);
    b.set_entry(j, i, bv);
    const HomMatrix ab = hg_product(a, b);
    if (ab.is_zero()) return true;
    return ab.entry(k, i).homogeneous_degree() == *adeg + *bdeg;
  });
}

inline LawResult hg_representation(std::uint64_t seed, std::size_t trials) {
  return check("hg-representation", seed, trials, [](Rng& rng, std::string&) {
    const CategoryPtr cat = gen::category(rng, {.max_objects = 3, .min_bound = 2});
    const ModulePtr mod = gen::module(rng, cat);
    const IndexMap c = gen::index_map(rng, cat, 1 + rng.pick(3));
    const HomMatrix a = gen::matrix(rng, cat, c, c, 1);
    const HomMatrix b = gen::matrix(rng, cat, c, c, 1);
    const ModuleVector v = gen::module_vector(rng, mod, c);
    return hg_act(hg_product(a, b), v) == hg_act(a, hg_act(b, v));
  });
}

inline LawResult cob_functoriality(std::uint64_t seed, std::size_t trials) {
  return check("cob-functoriality", seed, trials, [](Rng& rng, std::string&) {
    const CategoryPtr cat = gen::category(rng, {.max_objects = 3, .min_bound = 2});
    const IndexMap c = gen::index_map(rng, cat, 1 + rng.pick(3));
    const CobordismElement a = gen::cobordism(rng, cat, c, false, 1);
    const CobordismElement b = gen::cobordism(rng, cat, c, false, 1);
    const CobordismElement ab = cob_compose(a, b);
    if (!(cob_to_matrix(ab) == hg_product(cob_to_matrix(a), cob_to_matrix(b)))) return false;
    // generalized-permutation structure: at most one entry per row/column
    const HomMatrix m = cob_to_matrix(ab);
    std::map<std::size_t, int> rows, cols;
    for (const auto& [pos, val] : m.entries()) {
      if (++rows[pos.first] > 1 || ++cols[pos.second] > 1) return false;
    }
    return true;
  });
}

inline LawResult koszul_agreement(std::uint64_t seed, std::size_t trials) {
  return check("koszul-canonicalize-agreement", seed, trials, [](Rng& rng, std::string&) {
    const std::size_t m = 2 + rng.pick(5);
    std::vector<int> degrees;
    std::vector<GradedBasisElement> elements;
    for (std::size_t i = 0; i < m; ++i) {
      degrees.push_back(rng.range(0, 3));
      elements.push_back({{"b" + std::to_string(i)}, degrees.back()});
    }
    const CategoryPtr cat =
        GradedCategory::from_table({{"x", 0}}, {{{"x", "x"}, elements}}, {});
    std::vector<std::size_t> pi(m);
    for (std::size_t i = 0; i < m; ++i) pi[i] = i;
    for (std::size_t i = m; i > 1; --i) std::swap(pi[i - 1], pi[rng.pick(i)]);
    SymTensor<HomMatrix> tensor;
    std::vector<int> listed;
    for (std::size_t i = 0; i < m; ++i) {
      HomMatrix f(cat, IndexMap{{"x"}}, IndexMap{{"x"}});
      f.set_entry(0, 0,
                  GradedVector::unit(cat->hom_basis("x", "x"), {"b" + std::to_string(pi[i])}));
      tensor.factors.push_back(std::move(f));
      listed.push_back(degrees[pi[i]]);
    }
    const auto canonical = canonicalize(tensor);
    if (!canonical) return false;  // distinct factors never cancel
    return canonical->sign == koszul_sign_oracle(listed, Permutation(pi));
  });
}

inline LawResult odd_square_vanishes(std::uint64_t seed, std::size_t trials) {
  return check("odd-square-vanishes", seed, trials, [](Rng& rng, std::string&) {
    const int degree = 2 * rng.range(0, 3) + 1;
    const CategoryPtr cat =
        GradedCategory::from_table({{"x", 0}}, {{{"x", "x"}, {{{"b"}, degree}}}}, {});
    HomMatrix f(cat, IndexMap{{"x"}}, IndexMap{{"x"}});
    f.set_entry(0, 0, GradedVector::unit(cat->hom_basis("x", "x"), {"b"}));
    SymTensor<HomMatrix> tensor{{f, f}};
    return !canonicalize(tensor).has_value();
  });
}

inline LawResult even_sign_trivial(std::uint64_t seed, std::size_t trials) {
  return check("even-printed-sign", seed, trials, [](Rng& rng, std::string&) {
    const std::size_t m = 1 + rng.pick(4);
    std::vector<int> adeg, bdeg;
    for (std::size_t i = 0; i < m; ++i) {
      adeg.push_back(2 * rng.range(0, 4));
      bdeg.push_back(2 * rng.range(0, 4));
    }
    for (const auto& sigma : Permutation::all(m))
      if (printed_sign(adeg, bdeg, sigma) != 1) return false;
    return true;
  });
}

namespace detail {

inline gen::CategoryOpts sym_category_opts(Rng& rng) {
  gen::CategoryOpts opts;
  opts.max_objects = 2;
  opts.max_generators = 3;
  opts.min_bound = 3;
  opts.max_bound = 4;
  opts.even = true;
  opts.uniform_dim = 2 * rng.range(0, 1);
  return opts;
}

}  // namespace detail

inline LawResult sym_associativity(std::uint64_t seed, std::size_t trials, Convention conv,
                                   std::size_t arity) {
  const std::string name = std::string("sym-associativity-") + convention_name(conv) + "-m" +
                           std::to_string(arity);
  return check(name, seed, trials, [conv, arity](Rng& rng, std::string&) {
    const CategoryPtr cat = gen::category(rng, detail::sym_category_opts(rng));
    const IndexMap c = gen::index_map(rng, cat, 1 + rng.pick(2));
    const auto a = gen::sym_matrix_element(rng, cat, c, arity, conv, 1);
    const auto b = gen::sym_matrix_element(rng, cat, c, arity, conv, 1);
    const auto d = gen::sym_matrix_element(rng, cat, c, arity, conv, 1);
    return sym_product(sym_product(a, b), d) == sym_product(a, sym_product(b, d));
  });
}

inline LawResult sym_module_law(std::uint64_t seed, std::size_t trials, Convention conv,
                                std::size_t arity) {
  const std::string name = std::string("sym-module-law-") + convention_name(conv) + "-m" +
                           std::to_string(arity);
  return check(name, seed, trials, [conv, arity](Rng& rng, std::string&) {
    gen::CategoryOpts opts = detail::sym_category_opts(rng);
    opts.uniform_dim = 2 * rng.range(0, 1);
    const CategoryPtr cat = gen::category(rng, opts);
    const ModulePtr mod = gen::module(rng, cat, 2);
    const IndexMap c = gen::index_map(rng, cat, 1 + rng.pick(2));
    const auto a = gen::sym_matrix_element(rng, cat, c, arity, conv, 1);
    const auto b = gen::sym_matrix_element(rng, cat, c, arity, conv, 1);
    const auto v = gen::sym_module_element(rng, mod, c, arity, conv, 2);
    return sym_act(sym_product(a, b), v) == sym_act(a, sym_act(b, v));
  });
}

inline LawResult schur_inclusion(std::uint64_t seed, std::size_t trials, std::size_t arity) {
  const std::string name = "schur-inclusion-m" + std::to_string(arity);
  return check(name, seed, trials, [arity](Rng& rng, std::string&) {
    gen::CategoryOpts opts;
    opts.max_objects = 3;
    opts.max_generators = 3;
    opts.min_bound = 2;
    opts.max_bound = 4;
    opts.even = true;  // dims may differ; single-entry factors stay homogeneous
    const CategoryPtr cat = gen::category(rng, opts);
    const IndexMap c = gen::index_map(rng, cat, arity);
    const CobordismElement a = gen::cobordism(rng, cat, c, true, 1);
    const CobordismElement b = gen::cobordism(rng, cat, c, true, 1);
    const CobordismElement ab = cob_compose(a, b);

    const auto orbit = Convention::orbit_sum;
    if (!(sym_product(schur_include(a, arity, orbit), schur_include(b, arity, orbit)) ==
          schur_include(ab, arity, orbit)))
      return false;

    const auto avg = Convention::averaged;
    const auto lhs = sym_product(schur_include(a, arity, avg), schur_include(b, arity, avg));
    return lhs == (Rational(1) / factorial(arity)) * schur_include(ab, arity, avg);
  });
}

inline LawResult operad_associativity(std::uint64_t seed, std::size_t trials) {
  return check("operad-associativity", seed, trials, [](Rng& rng, std::string&) {
    const std::size_t k = 1 + rng.pick(3);
    const IntervalConfig outer = gen::config(rng, k);
    std::vector<IntervalConfig> mids;
    std::vector<std::vector<IntervalConfig>> inners;
    std::size_t total = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t n = 1 + rng.pick(3);
      mids.push_back(gen::config(rng, n));
      std::vector<IntervalConfig> level;
      for (std::size_t j = 0; j < n; ++j) level.push_back(gen::config(rng, 1 + rng.pick(2)));
      total += n;
      inners.push_back(std::move(level));
    }
    std::vector<IntervalConfig> flat;
    for (const auto& level : inners) flat.insert(flat.end(), level.begin(), level.end());
    const IntervalConfig lhs = operad_compose(operad_compose(outer, mids), flat);
    std::vector<IntervalConfig> composed;
    for (std::size_t i = 0; i < k; ++i) composed.push_back(operad_compose(mids[i], inners[i]));
    const IntervalConfig rhs = operad_compose(outer, composed);
    return lhs == rhs && validate_config(lhs).ok();
  });
}

inline LawResult operad_unit(std::uint64_t seed, std::size_t trials) {
  return check("operad-unit", seed, trials, [](Rng& rng, std::string&) {
    const std::size_t k = 1 + rng.pick(4);
    const IntervalConfig c = gen::config(rng, k);
    if (!(operad_compose(IntervalConfig::unit(), {c}) == c)) return false;
    std::vector<IntervalConfig> units(k, IntervalConfig::unit());
    return operad_compose(c, units) == c;
  });
}

inline LawResult operad_ordering(std::uint64_t seed, std::size_t trials) {
  return check("operad-ordering", seed, trials, [](Rng& rng, std::string&) {
    const std::size_t k = 1 + rng.pick(3);
    const IntervalConfig outer = gen::config(rng, k);
    std::vector<IntervalConfig> inners;
    for (std::size_t i = 0; i < k; ++i) inners.push_back(gen::config(rng, 1 + rng.pick(3)));
    const IntervalConfig composed = operad_compose(outer, inners);
    if (!validate_config(composed).ok()) return false;
    // block boundaries respect the outer order
    std::size_t at = 0;
    for (std::size_t i = 0; i + 1 < k; ++i) {
      at += inners[i].arity();
      if (!(composed.intervals[at - 1].right() < composed.intervals[at].left())) return false;
    }
    return true;
  });
}

inline LawResult theta_laws(std::uint64_t seed, std::size_t trials) {
  return check("theta-composition", seed, trials, [](Rng& rng, std::string&) {
    const CategoryPtr cat = gen::category(rng, {.max_objects = 3, .min_bound = 3});
    const std::size_t k = 1 + rng.pick(3);
    std::vector<IndexMap> maps;
    for (std::size_t i = 0; i <= k; ++i) maps.push_back(gen::index_map(rng, cat, 1 + rng.pick(2)));
    std::vector<HomMatrix> chain;
    for (std::size_t i = 0; i < k; ++i)
      chain.push_back(gen::matrix(rng, cat, maps[i + 1], maps[i], 1));
    HomMatrix expected = chain.front();
    for (std::size_t i = 1; i < k; ++i) expected = hg_product(expected, chain[i]);
    const IntervalConfig c1 = gen::config(rng, k);
    const IntervalConfig c2 = gen::config(rng, k);
    if (!(theta_compose(c1, chain) == expected)) return false;
    if (!(theta_compose(c2, chain) == expected)) return false;
    if (k == 1 && !(theta_compose(IntervalConfig::unit(), chain) == chain.front())) return false;
    return true;
  });
}

// Informational: where the printed product sign departs from the
// textbook Koszul shuffle sign on odd-degree data.
struct SignComparison {
  std::size_t trials = 0;
  std::size_t disagreements = 0;
  std::string first_disagreement;
};

inline SignComparison compare_printed_vs_koszul(std::uint64_t seed, std::size_t trials) {
  SignComparison out;
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t m = 2 + rng.pick(3);
    std::vector<int> adeg, bdeg;
    for (std::size_t i = 0; i < m; ++i) {
      adeg.push_back(rng.range(0, 3));
      bdeg.push_back(rng.range(0, 3));
    }
    const auto perms = Permutation::all(m);
    const Permutation sigma = perms[rng.pick(perms.size())];
    ++out.trials;
    if (printed_sign(adeg, bdeg, sigma) != standard_shuffle_sign(adeg, bdeg, sigma)) {
      ++out.disagreements;
      if (out.first_disagreement.empty()) {
        std::ostringstream os;
        os << "m=" << m << " adeg=[";
        for (std::size_t i = 0; i < m; ++i) os << (i ? "," : "") << adeg[i];
        os << "] bdeg=[";
        for (std::size_t i = 0; i < m; ++i) os << (i ? "," : "") << bdeg[i];
        os << "] sigma=[";
        for (std::size_t i = 0; i < m; ++i) os << (i ? "," : "") << sigma(i) + 1;
        os << "]";
        out.first_disagreement = os.str();
      }
    }
  }
  return out;
}

// The full suite, as run by the command-line `axioms` subcommand.
inline std::vector<LawResult> run_all(std::uint64_t seed, std::size_t trials) {
  std::vector<LawResult> results;
  std::uint64_t s = seed;
  auto next_seed = [&s]() { return s += 0x9e3779b97f4a7c15ULL; };
  results.push_back(rational_ring_laws(next_seed(), trials));
  results.push_back(shift_regrading(next_seed(), trials));
  results.push_back(euler_identity(next_seed(), trials));
  results.push_back(mutant_detection(next_seed(), trials));
  results.push_back(free_word_count(next_seed(), trials));
  results.push_back(category_laws(next_seed(), std::max<std::size_t>(1, trials / 10)));
  results.push_back(compose_bilinearity(next_seed(), trials));
  results.push_back(hg_associativity(next_seed(), trials));
  results.push_back(hg_degree_bookkeeping(next_seed(), trials));
  results.push_back(hg_representation(next_seed(), trials));
  results.push_back(cob_functoriality(next_seed(), trials));
  results.push_back(koszul_agreement(next_seed(), trials));
  results.push_back(odd_square_vanishes(next_seed(), trials));
  results.push_back(even_sign_trivial(next_seed(), trials));
  for (const Convention conv : {Convention::averaged, Convention::orbit_sum})
    for (std::size_t arity : {2, 3})
      results.push_back(sym_associativity(next_seed(), std::max<std::size_t>(1, trials / 4),
                                          conv, arity));
  for (const Convention conv : {Convention::averaged, Convention::orbit_sum})
    for (std::size_t arity : {2, 3})
      results.push_back(
          sym_module_law(next_seed(), std::max<std::size_t>(1, trials / 4), conv, arity));
  for (std::size_t arity : {2, 3})
    results.push_back(schur_inclusion(next_seed(), std::max<std::size_t>(1, trials / 2), arity));
  results.push_back(operad_associativity(next_seed(), trials));
  results.push_back(operad_unit(next_seed(), trials));
  results.push_back(operad_ordering(next_seed(), trials));
  results.push_back(theta_laws(next_seed(), trials));
  return results;
}

}  // namespace homat::laws
