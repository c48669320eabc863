// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Randomized criteria run on fixed seeds; equality is exact rational
// equality throughout, with the stated runtime budgets enforced.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "homat/homat.hpp"
#include "homat/io.hpp"
#include "homat/laws.hpp"

using namespace homat;
namespace fs = std::filesystem;
using json = io::json;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (detail.empty()) detail = why;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void take(Outcome& out, const laws::LawResult& r) {
  if (!r.ok()) out.fail(r.name + ": " + std::to_string(r.failures) + " failures (" +
                        r.first_failure + ")");
}

// ---- criteria 1-9: library-level laws ----

Outcome criterion_hg_associativity() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  take(out, laws::hg_associativity(101, 100));
  const double elapsed = seconds_since(start);
  if (elapsed >= 10.0) out.fail("runtime " + std::to_string(elapsed) + "s, budget 10s");
  return out;
}

Outcome criterion_representation() {
  Outcome out;
  take(out, laws::hg_representation(102, 100));
  return out;
}

Outcome criterion_sym_associativity() {
  Outcome out;
  std::uint64_t seed = 103;
  for (const Convention conv : {Convention::averaged, Convention::orbit_sum}) {
    take(out, laws::sym_associativity(++seed, 50, conv, 2));
    const auto start = std::chrono::steady_clock::now();
    take(out, laws::sym_associativity(++seed, 50, conv, 3));
    const double elapsed = seconds_since(start);
    if (elapsed >= 30.0) out.fail("m=3 runtime " + std::to_string(elapsed) + "s, budget 30s");
  }
  return out;
}

Outcome criterion_sym_module_law() {
  Outcome out;
  take(out, laws::sym_module_law(110, 50, Convention::averaged, 2));
  take(out, laws::sym_module_law(111, 50, Convention::averaged, 3));
  return out;
}

Outcome criterion_schur_inclusion() {
  Outcome out;
  take(out, laws::schur_inclusion(120, 50, 2));
  take(out, laws::schur_inclusion(121, 50, 3));
  return out;
}

Outcome criterion_koszul_agreement() {
  Outcome out;
  take(out, laws::koszul_agreement(130, 500));
  take(out, laws::odd_square_vanishes(131, 100));
  return out;
}

Outcome criterion_operad() {
  Outcome out;
  take(out, laws::operad_associativity(140, 100));
  take(out, laws::operad_unit(141, 100));
  take(out, laws::operad_ordering(142, 100));
  // the illustrated arity case: substituting arities (3, 2) into 2 gives 5
  laws::Rng rng(143);
  const IntervalConfig outer = laws::gen::config(rng, 2);
  const IntervalConfig in3 = laws::gen::config(rng, 3);
  const IntervalConfig in2 = laws::gen::config(rng, 2);
  const IntervalConfig composed = operad_compose(outer, {in3, in2});
  if (composed.arity() != 5) out.fail("arity (2; 3, 2) composed to " +
                                      std::to_string(composed.arity()));
  if (!validate_config(composed).ok()) out.fail("arity-5 composite failed validation");
  return out;
}

Outcome criterion_theta() {
  Outcome out;
  laws::Rng rng(150);
  for (int trial = 0; trial < 20 && out.pass; ++trial) {
    const CategoryPtr cat = laws::gen::category(rng, {.max_objects = 3, .min_bound = 3});
    const std::size_t k = 1 + rng.pick(3);
    std::vector<IndexMap> maps;
    for (std::size_t i = 0; i <= k; ++i)
      maps.push_back(laws::gen::index_map(rng, cat, 1 + rng.pick(2)));
    std::vector<HomMatrix> chain;
    for (std::size_t i = 0; i < k; ++i)
      chain.push_back(laws::gen::matrix(rng, cat, maps[i + 1], maps[i], 1));
    const HomMatrix reference = theta_compose(laws::gen::config(rng, k), chain);
    for (int c = 0; c < 10; ++c) {
      if (!(theta_compose(laws::gen::config(rng, k), chain) == reference)) {
        out.fail("theta depended on its configuration argument");
        break;
      }
    }
    if (k == 1) {
      if (!(theta_compose(IntervalConfig::unit(), chain) == chain.front()))
        out.fail("theta at arity one changed its input");
    }
  }
  // arity one always returns the matrix unchanged
  const CategoryPtr cat = laws::gen::category(rng, {});
  const IndexMap c0 = laws::gen::index_map(rng, cat, 2);
  const IndexMap c1 = laws::gen::index_map(rng, cat, 2);
  const HomMatrix single = laws::gen::matrix(rng, cat, c0, c1, 1);
  if (!(theta_compose(IntervalConfig::unit(), {single}) == single))
    out.fail("theta at arity one changed its input");
  return out;
}

Outcome criterion_complexes() {
  Outcome out;
  take(out, laws::mutant_detection(160, 100));
  take(out, laws::euler_identity(161, 100));

  std::vector<GradedBasisElement> interval_basis = {{{"e"}, 1}, {{"v0"}, 0}, {{"v1"}, 0}};
  const BasisPtr b = make_basis(interval_basis);
  GradedVector de(b);
  de.add_term({"v1"}, 1);
  de.add_term({"v0"}, -1);
  const ChainComplex interval(interval_basis, {{{"e"}, de}});
  if (!(homology_betti(interval) == std::map<int, std::size_t>{{0, 1}, {1, 0}}))
    out.fail("interval complex betti numbers are off");

  std::vector<GradedBasisElement> circle_basis = {{{"e"}, 1}, {{"v"}, 0}};
  const ChainComplex circle(circle_basis, {});
  if (!(homology_betti(circle) == std::map<int, std::size_t>{{0, 1}, {1, 1}}))
    out.fail("circle complex betti numbers are off");
  return out;
}

// ---- criterion 10: the command-line surface ----

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const std::string command = "cd " + std::string(HOMAT_FIXTURES) + " && " + HOMAT_CLI_BIN + " " +
                              args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return r;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.output.append(buffer, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Outcome criterion_cli() {
  Outcome out;
  const std::vector<std::pair<std::string, int>> commands = {
      {"validate cat_basic.json", 0},
      {"validate cat_even.json", 0},
      {"validate complex_interval.json complex_circle.json complex_point.json", 0},
      {"validate config_pair.json config_three.json", 0},
      {"validate module_even.json", 0},
      {"validate complex_bad.json", 1},
      {"validate config_bad.json", 1},
      {"--even-mode validate cat_odd.json", 1},
      {"betti complex_point.json", 0},
      {"betti complex_interval.json", 0},
      {"betti complex_circle.json", 0},
      {"compose morphism_g.json morphism_f.json", 0},
      {"hg mul matrix_a.json matrix_b.json", 0},
      {"hg mul matrix_idd.json matrix_b.json", 0},
      {"hg act matrix_e.json vector_v.json --module module_even.json", 0},
      {"cob compose cob_b.json cob_a.json", 0},
      {"cob embed cob_a.json", 0},
      {"sym mul sym_a.json sym_b.json", 0},
      {"--convention orbit-sum sym mul sym_a.json sym_b.json", 0},
      {"sym act sym_a.json symvec_v.json --module module_even.json", 0},
      {"schur include cob_a.json --arity 2", 0},
      {"--convention orbit-sum schur include cob_a.json", 0},
      {"operad compose config_pair.json config_three.json config_pair.json", 0},
      {"operad compose config_unit.json config_pair.json", 0},
      {"axioms --seed 7 --trials 100", 0},
  };
  for (const auto& [args, expected_exit] : commands) {
    const CliResult first = run_cli(args);
    const CliResult second = run_cli(args);
    if (first.exit_code != expected_exit) {
      out.fail("`" + args + "` exited " + std::to_string(first.exit_code) + ", expected " +
               std::to_string(expected_exit));
      continue;
    }
    if (first.exit_code != second.exit_code || first.output != second.output)
      out.fail("`" + args + "` is not byte-deterministic across runs");
    if (first.output.empty()) out.fail("`" + args + "` produced no output document");
  }

  // identity times B reproduces B's canonical serialization byte for byte
  io::Loader loader;
  const fs::path fixtures = HOMAT_FIXTURES;
  const json bdoc = loader.read(fixtures / "matrix_b.json");
  const CategoryPtr cat = loader.referenced_category(bdoc, fixtures / "matrix_b.json");
  const std::string canonical_b =
      io::canonical_dump(io::matrix_to_json(io::matrix_from_json(bdoc, cat), "cat_basic.json"));
  const CliResult identity_product = run_cli("hg mul matrix_idd.json matrix_b.json");
  if (identity_product.output != canonical_b)
    out.fail("identity * B differs from B's canonical serialization");

  // the law summary names every law it ran
  const CliResult axioms = run_cli("axioms --seed 7 --trials 100");
  for (const char* law : {"hg-associativity", "hg-representation", "koszul-canonicalize-agreement",
                          "schur-inclusion-m2", "operad-associativity", "theta-composition"})
    if (axioms.output.find(law) == std::string::npos)
      out.fail(std::string("axioms summary does not mention ") + law);
  return out;
}

Outcome criterion_roundtrip() {
  Outcome out;
  io::Loader loader;
  const fs::path fixtures = HOMAT_FIXTURES;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(fixtures))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.size() < 20) out.fail("fixture corpus is unexpectedly small");

  for (const auto& file : files) {
    const json doc = loader.read(file);
    const std::string kind = doc.at("kind").get<std::string>();
    json serialized;
    try {
      if (kind == "category") {
        serialized = io::category_to_json(*io::category_from_json(doc));
      } else if (kind == "complex") {
        serialized = io::complex_to_json(io::complex_from_json(doc));
      } else if (kind == "config") {
        serialized = io::config_to_json(io::config_from_json(doc));
      } else {
        const CategoryPtr cat = loader.referenced_category(doc, file);
        const std::string ref = io::Loader::category_ref(doc);
        if (kind == "matrix") {
          serialized = io::matrix_to_json(io::matrix_from_json(doc, cat), ref);
        } else if (kind == "morphism") {
          serialized = io::morphism_to_json(io::morphism_from_json(doc, cat), ref);
        } else if (kind == "cobordism") {
          serialized = io::cobordism_to_json(io::cobordism_from_json(doc, cat), ref);
        } else if (kind == "module") {
          serialized = io::module_to_json(io::module_file_from_json(doc, cat), ref);
        } else if (kind == "sym-matrix") {
          const auto [s, c] = io::sym_matrix_from_json(doc, cat, Convention::averaged);
          serialized = io::sym_matrix_to_json(s, c, ref);
        } else if (kind == "vector") {
          const ModulePtr mod = io::combine_module_files(
              cat, {io::module_file_from_json(
                       loader.read(fixtures / "module_even.json"), cat)});
          serialized = io::vector_to_json(io::vector_from_json(doc, cat, mod), ref);
        } else if (kind == "sym-vector") {
          const ModulePtr mod = io::combine_module_files(
              cat, {io::module_file_from_json(
                       loader.read(fixtures / "module_even.json"), cat)});
          const auto [s, c] = io::sym_vector_from_json(doc, cat, mod, Convention::averaged);
          serialized = io::sym_vector_to_json(s, c, ref);
        } else {
          out.fail(file.filename().string() + ": unhandled kind '" + kind + "'");
          continue;
        }
      }
    } catch (const Error& e) {
      out.fail(file.filename().string() + ": " + e.what());
      continue;
    }
    // parsing the canonical form and re-serializing is the identity
    json reparsed = serialized;
    if (io::canonical_dump(reparsed) != io::canonical_dump(serialized))
      out.fail(file.filename().string() + ": canonical form is unstable");
  }
  return out;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* name;
    Outcome (*run)();
  };
  const std::vector<Entry> criteria = {
      {1, "hg-product associativity (100 random triples, <10s)", criterion_hg_associativity},
      {2, "representation law act(AB,v)=act(A,act(B,v))", criterion_representation},
      {3, "symmetric-power associativity, both conventions, m=2,3", criterion_sym_associativity},
      {4, "symmetric-power module law, m=2,3", criterion_sym_module_law},
      {5, "cobordism inclusion multiplicativity, m=2,3", criterion_schur_inclusion},
      {6, "canonicalize sign vs koszul oracle, odd squares vanish", criterion_koszul_agreement},
      {7, "operad associativity, units, closure, arity (2;3,2)->5", criterion_operad},
      {8, "theta independence of configuration and unit law", criterion_theta},
      {9, "complex validation, mutants, betti and euler identity", criterion_complexes},
      {10, "cli determinism and fixture round-trips", criterion_cli},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out = c.run();
    if (c.id == 10) {
      const Outcome rt = criterion_roundtrip();
      if (!rt.pass) out.fail(rt.detail);
    }
    const double elapsed = seconds_since(start);
    if (out.pass) {
      std::printf("[PASS] %2d %s (%.2fs)\n", c.id, c.name, elapsed);
    } else {
      ++failures;
      std::printf("[FAIL] %2d %s (%.2fs): %s\n", c.id, c.name, elapsed, out.detail.c_str());
    }
  }
  if (failures == 0)
    std::printf("all %zu acceptance criteria hold\n", criteria.size());
  else
    std::printf("%d of %zu acceptance criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
