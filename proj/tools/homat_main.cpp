// Command-line surface over the graded matrix-algebra library: validate
// session files, compose morphisms and matrices, act on modules, take
// symmetric-power products, embed cobordism elements, compose interval
// configurations, compute Betti numbers and run the randomized law suite.
//
// Exit codes: 0 success, 1 mathematical validation failure (a report
// document is emitted), 2 parse or schema error.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "homat/homat.hpp"
#include "homat/io.hpp"
#include "homat/laws.hpp"

namespace fs = std::filesystem;
using namespace homat;
using json = io::json;

namespace {

struct Session {
  Convention convention = Convention::averaged;
  bool even_mode = false;
  std::size_t max_sym_arity = kDefaultMaxSymArity;
  io::Loader loader;

  CategoryPtr category_for(const json& doc, const fs::path& file) {
    const CategoryPtr cat = loader.referenced_category(doc, file);
    if (even_mode) require_even(cat, io::Loader::category_ref(doc));
    return cat;
  }

  void require_even(const CategoryPtr& cat, const std::string& name) const {
    for (const auto& o : cat->objects())
      if (o.dim % 2 != 0)
        throw ParityViolation("even mode: object '" + o.id + "' in '" + name +
                              "' has odd dimension");
    for (const auto& g : cat->generators())
      if (g.degree % 2 != 0)
        throw ParityViolation("even mode: generator '" + g.id + "' in '" + name +
                              "' has odd degree");
  }
};

const char* error_code(const MathError& e) {
  if (dynamic_cast<const AmbientMismatch*>(&e)) return "ambient-mismatch";
  if (dynamic_cast<const UnknownObject*>(&e)) return "unknown-object";
  if (dynamic_cast<const CompositionMismatch*>(&e)) return "composition-mismatch";
  if (dynamic_cast<const TruncationOverflow*>(&e)) return "truncation-overflow";
  if (dynamic_cast<const IndexMismatch*>(&e)) return "index-mismatch";
  if (dynamic_cast<const ModuleUndefined*>(&e)) return "module-undefined";
  if (dynamic_cast<const ComplexInvalid*>(&e)) return "complex-invalid";
  if (dynamic_cast<const ConfigInvalid*>(&e)) return "config-invalid";
  if (dynamic_cast<const NotHomogeneous*>(&e)) return "not-homogeneous";
  if (dynamic_cast<const ArityCapExceeded*>(&e)) return "arity-cap-exceeded";
  if (dynamic_cast<const ArityMismatch*>(&e)) return "arity-mismatch";
  if (dynamic_cast<const ParityViolation*>(&e)) return "parity-violation";
  return "math-error";
}

int emit_report(const Report& report) {
  json violations = json::array();
  for (const auto& v : report.violations)
    violations.push_back({{"rule", v.rule}, {"detail", v.detail}});
  std::cout << io::canonical_dump(
      {{"kind", "report"}, {"ok", report.ok()}, {"violations", violations}});
  return report.ok() ? 0 : 1;
}

void emit(const json& doc) { std::cout << io::canonical_dump(doc); }

ModulePtr load_modules(Session& session, const CategoryPtr& cat,
                       const std::vector<std::string>& files) {
  if (files.empty()) throw SchemaError("at least one --module file is required");
  std::vector<io::ModuleFile> parts;
  for (const auto& f : files) {
    const json doc = session.loader.read(f);
    const CategoryPtr ref = session.category_for(doc, f);
    if (!same_category(ref, cat))
      throw IndexMismatch("module '" + f + "' is built over a different category");
    parts.push_back(io::module_file_from_json(doc, cat));
    if (session.even_mode)
      for (const auto& e : parts.back().basis)
        if (e.degree % 2 != 0)
          throw ParityViolation("even mode: fiber element " + format_key(e.key) + " in '" + f +
                                "' has odd degree");
  }
  const ModulePtr mod = io::combine_module_files(cat, parts);
  const Report r = validate_module(mod);
  if (!r.ok())
    throw MathError("module set is invalid: " + r.violations.front().rule + " — " +
                    r.violations.front().detail);
  return mod;
}

int cmd_validate(Session& session, const std::vector<std::string>& files) {
  Report combined;
  std::vector<io::ModuleFile> module_parts;
  CategoryPtr module_category;
  for (const auto& f : files) {
    const json doc = session.loader.read(f);
    const std::string kind = doc.at("kind").get<std::string>();
    Report r;
    if (kind == "category") {
      const CategoryPtr cat = io::category_from_json(doc);
      if (session.even_mode) session.require_even(cat, f);
      r = validate_category(cat);
    } else if (kind == "complex") {
      r = validate_complex(io::complex_from_json(doc));
    } else if (kind == "config") {
      r = validate_config(io::config_from_json(doc));
    } else if (kind == "module") {
      const CategoryPtr cat = session.category_for(doc, f);
      if (module_category && !same_category(module_category, cat))
        throw IndexMismatch("module files reference different categories");
      module_category = cat;
      module_parts.push_back(io::module_file_from_json(doc, cat));
    } else if (kind == "matrix") {
      io::matrix_from_json(doc, session.category_for(doc, f));
    } else if (kind == "morphism") {
      io::morphism_from_json(doc, session.category_for(doc, f));
    } else if (kind == "cobordism") {
      io::cobordism_from_json(doc, session.category_for(doc, f));
    } else if (kind == "sym-matrix") {
      io::sym_matrix_from_json(doc, session.category_for(doc, f), session.convention);
    } else {
      throw SchemaError("'" + f + "': no validator for kind '" + kind + "'");
    }
    for (const auto& v : r.violations)
      combined.add(v.rule, fs::path(f).filename().string() + ": " + v.detail);
  }
  if (!module_parts.empty()) {
    const ModulePtr mod = io::combine_module_files(module_category, module_parts);
    for (const auto& v : validate_module(mod).violations) combined.add(v.rule, v.detail);
  }
  return emit_report(combined);
}

int cmd_compose(Session& session, const std::string& gf, const std::string& ff) {
  const json gdoc = session.loader.read(gf), fdoc = session.loader.read(ff);
  const CategoryPtr cat = session.category_for(gdoc, gf);
  const CategoryPtr cat2 = session.category_for(fdoc, ff);
  const Morphism g = io::morphism_from_json(gdoc, cat);
  const Morphism f = io::morphism_from_json(fdoc, cat2);
  emit(io::morphism_to_json(compose(g, f), io::Loader::category_ref(gdoc)));
  return 0;
}

int cmd_hg_mul(Session& session, const std::string& af, const std::string& bf) {
  const json adoc = session.loader.read(af), bdoc = session.loader.read(bf);
  const HomMatrix a = io::matrix_from_json(adoc, session.category_for(adoc, af));
  const HomMatrix b = io::matrix_from_json(bdoc, session.category_for(bdoc, bf));
  emit(io::matrix_to_json(hg_product(a, b), io::Loader::category_ref(adoc)));
  return 0;
}

int cmd_hg_act(Session& session, const std::string& af, const std::string& vf,
               const std::vector<std::string>& modules) {
  const json adoc = session.loader.read(af);
  const CategoryPtr cat = session.category_for(adoc, af);
  const HomMatrix a = io::matrix_from_json(adoc, cat);
  const ModulePtr mod = load_modules(session, cat, modules);
  const json vdoc = session.loader.read(vf);
  const ModuleVector v = io::vector_from_json(vdoc, cat, mod);
  emit(io::vector_to_json(hg_act(a, v), io::Loader::category_ref(adoc)));
  return 0;
}

int cmd_cob_compose(Session& session, const std::string& second_f, const std::string& first_f) {
  const json sdoc = session.loader.read(second_f), fdoc = session.loader.read(first_f);
  const CobordismElement second =
      io::cobordism_from_json(sdoc, session.category_for(sdoc, second_f));
  const CobordismElement first =
      io::cobordism_from_json(fdoc, session.category_for(fdoc, first_f));
  emit(io::cobordism_to_json(cob_compose(second, first), io::Loader::category_ref(sdoc)));
  return 0;
}

int cmd_cob_embed(Session& session, const std::string& ef) {
  const json doc = session.loader.read(ef);
  const CobordismElement e = io::cobordism_from_json(doc, session.category_for(doc, ef));
  emit(io::matrix_to_json(cob_to_matrix(e), io::Loader::category_ref(doc)));
  return 0;
}

int cmd_sym_mul(Session& session, const std::string& af, const std::string& bf) {
  const json adoc = session.loader.read(af), bdoc = session.loader.read(bf);
  const auto [a, ca] = io::sym_matrix_from_json(adoc, session.category_for(adoc, af),
                                                session.convention);
  const auto [b, cb] = io::sym_matrix_from_json(bdoc, session.category_for(bdoc, bf),
                                                session.convention);
  emit(io::sym_matrix_to_json(sym_product(a, b, session.max_sym_arity), ca,
                              io::Loader::category_ref(adoc)));
  return 0;
}

int cmd_sym_act(Session& session, const std::string& af, const std::string& vf,
                const std::vector<std::string>& modules) {
  const json adoc = session.loader.read(af);
  const CategoryPtr cat = session.category_for(adoc, af);
  const auto [a, ca] = io::sym_matrix_from_json(adoc, cat, session.convention);
  const ModulePtr mod = load_modules(session, cat, modules);
  const json vdoc = session.loader.read(vf);
  const auto [v, cv] = io::sym_vector_from_json(vdoc, cat, mod, session.convention);
  emit(io::sym_vector_to_json(sym_act(a, v, session.max_sym_arity), cv,
                              io::Loader::category_ref(adoc)));
  return 0;
}

int cmd_schur_include(Session& session, const std::string& ef, int arity) {
  const json doc = session.loader.read(ef);
  const CategoryPtr cat = session.category_for(doc, ef);
  const CobordismElement e = io::cobordism_from_json(doc, cat);
  const std::size_t m = arity > 0 ? (std::size_t)arity : e.index.size();
  emit(io::sym_matrix_to_json(schur_include(e, m, session.convention, session.max_sym_arity),
                              e.index, io::Loader::category_ref(doc)));
  return 0;
}

int cmd_operad_compose(Session& session, const std::vector<std::string>& files) {
  if (files.size() < 2)
    throw SchemaError("operad compose needs an outer and at least one inner configuration");
  const IntervalConfig outer = io::config_from_json(session.loader.read(files[0]));
  std::vector<IntervalConfig> inners;
  for (std::size_t i = 1; i < files.size(); ++i)
    inners.push_back(io::config_from_json(session.loader.read(files[i])));
  emit(io::config_to_json(operad_compose(outer, inners)));
  return 0;
}

int cmd_betti(Session& session, const std::string& cf) {
  const ChainComplex c = io::complex_from_json(session.loader.read(cf));
  const Report r = validate_complex(c);
  if (!r.ok()) return emit_report(r);
  json ranks = json::array();
  for (const auto& [degree, rank] : homology_betti(c))
    ranks.push_back({{"degree", degree}, {"rank", rank}});
  emit({{"kind", "betti"}, {"ranks", ranks}});
  return 0;
}

int cmd_axioms(std::uint64_t seed, std::size_t trials) {
  const auto results = laws::run_all(seed, trials);
  std::size_t failed = 0;
  for (const auto& r : results) {
    if (r.ok()) {
      std::printf("ok    %-38s trials=%zu\n", r.name.c_str(), r.trials);
    } else {
      ++failed;
      std::printf("FAIL  %-38s trials=%zu failures=%zu (%s)\n", r.name.c_str(), r.trials,
                  r.failures, r.first_failure.c_str());
    }
  }
  const auto cmp = laws::compare_printed_vs_koszul(seed, trials * 4);
  std::printf("note  printed-vs-koszul-sign: %zu/%zu odd-degree disagreements", cmp.disagreements,
              cmp.trials);
  if (!cmp.first_disagreement.empty())
    std::printf(" (first: %s)", cmp.first_disagreement.c_str());
  std::printf("\n%zu/%zu laws hold\n", results.size() - failed, results.size());
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic engine for graded-category matrix algebra"};
  app.require_subcommand(1);

  Session session;
  std::string convention_name = "averaged";
  app.add_option("--convention", convention_name, "normalization convention")
      ->check(CLI::IsMember({"averaged", "orbit-sum"}))
      ->capture_default_str();
  app.add_flag("--even-mode", session.even_mode, "reject odd dimensions and degrees at load");
  app.add_option("--max-sym-arity", session.max_sym_arity,
                 "cap on the factorial symmetric-power enumeration")
      ->capture_default_str();

  std::vector<std::string> validate_files;
  auto* validate = app.add_subcommand("validate", "check category/complex/config/module files");
  validate->add_option("files", validate_files, "session files")->required()->expected(-1);

  std::string lhs, rhs, vec_file, cob_file, complex_file;
  std::vector<std::string> module_files, operad_files;

  auto* compose_cmd = app.add_subcommand("compose", "compose two morphisms (g after f)");
  compose_cmd->add_option("g", lhs)->required();
  compose_cmd->add_option("f", rhs)->required();

  auto* hg = app.add_subcommand("hg", "homological matrix operations");
  hg->require_subcommand(1);
  auto* hg_mul = hg->add_subcommand("mul", "matrix product A*B");
  hg_mul->add_option("a", lhs)->required();
  hg_mul->add_option("b", rhs)->required();
  auto* hg_act_cmd = hg->add_subcommand("act", "act with a square matrix on a module vector");
  hg_act_cmd->add_option("a", lhs)->required();
  hg_act_cmd->add_option("v", vec_file)->required();
  hg_act_cmd->add_option("--module", module_files, "module file (repeatable)")->required();

  auto* cob = app.add_subcommand("cob", "cobordism elements");
  cob->require_subcommand(1);
  auto* cob_compose_cmd = cob->add_subcommand("compose", "compose cobordisms (second first)");
  cob_compose_cmd->add_option("second", lhs)->required();
  cob_compose_cmd->add_option("first", rhs)->required();
  auto* cob_embed = cob->add_subcommand("embed", "generalized permutation matrix of an element");
  cob_embed->add_option("e", cob_file)->required();

  auto* sym = app.add_subcommand("sym", "symmetric-power operations");
  sym->require_subcommand(1);
  auto* sym_mul = sym->add_subcommand("mul", "symmetric-power product");
  sym_mul->add_option("a", lhs)->required();
  sym_mul->add_option("b", rhs)->required();
  auto* sym_act_cmd = sym->add_subcommand("act", "symmetric-power action on module tensors");
  sym_act_cmd->add_option("a", lhs)->required();
  sym_act_cmd->add_option("v", vec_file)->required();
  sym_act_cmd->add_option("--module", module_files, "module file (repeatable)")->required();

  int include_arity = 0;
  auto* schur = app.add_subcommand("schur", "Schur algebra operations");
  schur->require_subcommand(1);
  auto* schur_inc = schur->add_subcommand("include", "embed a cobordism element");
  schur_inc->add_option("e", cob_file)->required();
  schur_inc->add_option("--arity", include_arity, "symmetric power arity (default: strand count)");

  auto* operad = app.add_subcommand("operad", "little-intervals operad");
  operad->require_subcommand(1);
  auto* operad_compose_cmd = operad->add_subcommand("compose", "substitute inner configurations");
  operad_compose_cmd->add_option("configs", operad_files, "outer followed by the inners")
      ->required()
      ->expected(-1);

  auto* betti = app.add_subcommand("betti", "Betti numbers of a chain complex");
  betti->add_option("complex", complex_file)->required();

  std::uint64_t seed = 0;
  std::size_t trials = 100;
  auto* axioms = app.add_subcommand("axioms", "randomized law suite");
  axioms->add_option("--seed", seed, "rng seed")->capture_default_str();
  axioms->add_option("--trials", trials, "trials per law")->capture_default_str();

  CLI11_PARSE(app, argc, argv);
  session.convention =
      convention_name == "orbit-sum" ? Convention::orbit_sum : Convention::averaged;

  try {
    if (*validate) return cmd_validate(session, validate_files);
    if (*compose_cmd) return cmd_compose(session, lhs, rhs);
    if (*hg_mul) return cmd_hg_mul(session, lhs, rhs);
    if (*hg_act_cmd) return cmd_hg_act(session, lhs, vec_file, module_files);
    if (*cob_compose_cmd) return cmd_cob_compose(session, lhs, rhs);
    if (*cob_embed) return cmd_cob_embed(session, cob_file);
    if (*sym_mul) return cmd_sym_mul(session, lhs, rhs);
    if (*sym_act_cmd) return cmd_sym_act(session, lhs, vec_file, module_files);
    if (*schur_inc) return cmd_schur_include(session, cob_file, include_arity);
    if (*operad_compose_cmd) return cmd_operad_compose(session, operad_files);
    if (*betti) return cmd_betti(session, complex_file);
    if (*axioms) return cmd_axioms(seed, trials);
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return 2;
  } catch (const MathError& e) {
    Report r;
    r.add(error_code(e), e.what());
    return emit_report(r);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
