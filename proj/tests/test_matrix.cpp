#include <catch2/catch_amalgamated.hpp>

#include "homat/matrix.hpp"

using namespace homat;

namespace {

// x --f--> y --g--> x, plus a loop h at x.
CategoryPtr sample_category() {
  return GradedCategory::free_category(
      {{"x", 0}, {"y", 0}}, {{"f", "x", "y", 2}, {"g", "y", "x", 4}, {"h", "x", "x", 0}}, 3);
}

HomMatrix single_entry(const CategoryPtr& cat, const IndexMap& src, const IndexMap& dst,
                       std::size_t row, std::size_t col, const BasisKey& key) {
  HomMatrix m(cat, src, dst);
  m.set_entry(row, col, GradedVector::unit(cat->hom_basis(src.at(col), dst.at(row)), key));
  return m;
}

}  // namespace

TEST_CASE("identity matrix has identity entries on the diagonal") {
  const CategoryPtr cat = sample_category();
  const IndexMap c{{"x"}};
  const HomMatrix id = hg_identity(cat, c);
  CHECK(id.entries().size() == 1);
  CHECK(id.entry(0, 0) == GradedVector::unit(cat->hom_basis("x", "x"), BasisKey{}));
}

TEST_CASE("identity matrices are left and right units") {
  const CategoryPtr cat = sample_category();
  const IndexMap c{{"x", "y"}}, d{{"y", "x"}};
  HomMatrix b(cat, c, d);
  b.set_entry(0, 0, GradedVector::unit(cat->hom_basis("x", "y"), {"f"}));
  b.set_entry(1, 1, Rational(3) * GradedVector::unit(cat->hom_basis("y", "x"), {"g"}));
  b.set_entry(1, 0, GradedVector::unit(cat->hom_basis("x", "x"), {"h"}));
  CHECK(hg_product(hg_identity(cat, d), b) == b);
  CHECK(hg_product(b, hg_identity(cat, c)) == b);
}

TEST_CASE("single-entry matrices multiply like matrix units") {
  const CategoryPtr cat = sample_category();
  const IndexMap c{{"x", "x"}}, d{{"y", "y"}}, e{{"x", "x"}};
  // A = E_{k=1,j=0}(g), B = E_{j=0,i=1}(f): product is E_{1,1}(g*f)
  const HomMatrix a = single_entry(cat, d, e, 1, 0, {"g"});
  const HomMatrix b = single_entry(cat, c, d, 0, 1, {"f"});
  const HomMatrix ab = hg_product(a, b);
  CHECK(ab.entries().size() == 1);
  CHECK(ab.entry(1, 1) == GradedVector::unit(cat->hom_basis("x", "x"), {"g", "f"}));

  // mismatched middle index: E_{k,j} * E_{j',i} with j != j' vanishes
  const HomMatrix b2 = single_entry(cat, c, d, 1, 1, {"f"});
  CHECK(hg_product(a, b2).is_zero());
}

TEST_CASE("diagonal product expands entrywise") {
  const CategoryPtr cat = sample_category();
  const IndexMap xx{{"x", "x"}};
  HomMatrix a(cat, xx, xx), b(cat, xx, xx);
  a.set_entry(0, 0, GradedVector::unit(cat->hom_basis("x", "x"), {"h"}));
  a.set_entry(1, 1, GradedVector::unit(cat->hom_basis("x", "x"), {"h", "h"}));
  b.set_entry(0, 0, GradedVector::unit(cat->hom_basis("x", "x"), {"h", "h"}));
  b.set_entry(1, 1, GradedVector::unit(cat->hom_basis("x", "x"), {"h"}));
  const HomMatrix ab = hg_product(a, b);
  CHECK(ab.entry(0, 0) == GradedVector::unit(cat->hom_basis("x", "x"), {"h", "h", "h"}));
  CHECK(ab.entry(1, 1) == GradedVector::unit(cat->hom_basis("x", "x"), {"h", "h", "h"}));
  CHECK(ab.entries().size() == 2);
}

TEST_CASE("zero times anything is zero") {
  const CategoryPtr cat = sample_category();
  const IndexMap c{{"x"}}, d{{"y"}};
  const HomMatrix zero(cat, c, d);
  HomMatrix b(cat, c, c);
  b.set_entry(0, 0, GradedVector::unit(cat->hom_basis("x", "x"), {"h"}));
  CHECK(hg_product(zero, b).is_zero());
}

TEST_CASE("products need matching inner index maps") {
  const CategoryPtr cat = sample_category();
  const IndexMap c{{"x"}}, d{{"y"}};
  const HomMatrix a(cat, c, d), b(cat, c, d);
  CHECK_THROWS_AS(hg_product(a, b), IndexMismatch);
}

TEST_CASE("entry composition past the truncation bound propagates as an error") {
  const CategoryPtr cat =
      GradedCategory::free_category({{"x", 0}}, {{"f", "x", "x", 0}}, 2);
  const IndexMap c{{"x"}};
  const HomMatrix ff = single_entry(cat, c, c, 0, 0, {"f", "f"});
  CHECK_THROWS_AS(hg_product(ff, ff), TruncationOverflow);
}

TEST_CASE("product terms carry the sum of intrinsic degrees") {
  const CategoryPtr cat = sample_category();
  const IndexMap xs{{"x"}}, ys{{"y"}};
  const HomMatrix a = single_entry(cat, ys, xs, 0, 0, {"g"});
  const HomMatrix b = single_entry(cat, xs, ys, 0, 0, {"f"});
  const HomMatrix ab = hg_product(a, b);
  CHECK(ab.entry(0, 0).homogeneous_degree() == 2 + 4);
}

TEST_CASE("effective degree subtracts the row object dimension") {
  const CategoryPtr cat = GradedCategory::free_category(
      {{"x", 0}, {"y", 2}}, {{"f", "x", "y", 6}}, 2);
  const HomMatrix m = single_entry(cat, IndexMap{{"x"}}, IndexMap{{"y"}}, 0, 0, {"f"});
  CHECK(effective_degree(m) == 4);
  CHECK_FALSE(effective_degree(HomMatrix(cat, IndexMap{{"x"}}, IndexMap{{"y"}})).has_value());
}

TEST_CASE("mixed-degree entries have no effective degree") {
  const CategoryPtr cat = sample_category();
  GradedVector v(cat->hom_basis("x", "x"));
  v.add_term({"h"}, 1);         // degree 0
  v.add_term({"g", "f"}, 1);    // degree 6
  HomMatrix m(cat, IndexMap{{"x"}}, IndexMap{{"x"}});
  m.set_entry(0, 0, v);
  CHECK_THROWS_AS(effective_degree(m), NotHomogeneous);
}

TEST_CASE("entries must live in the hom space dictated by the index maps") {
  const CategoryPtr cat = sample_category();
  HomMatrix m(cat, IndexMap{{"x"}}, IndexMap{{"y"}});
  CHECK_THROWS_AS(m.set_entry(0, 0, GradedVector::unit(cat->hom_basis("y", "x"), {"g"})),
                  AmbientMismatch);
}

namespace {

// One loop f at x acting nilpotently on a two-dimensional fiber.
struct NilpotentSetup {
  CategoryPtr cat;
  ModulePtr mod;
  IndexMap c;
};

NilpotentSetup nilpotent_setup() {
  const CategoryPtr cat = GradedCategory::free_category({{"x", 0}}, {{"f", "x", "x", 0}}, 3);
  const ModulePtr mod = module_from_generator_action(
      cat, {{"x", {{{"v0"}, 0}, {{"v1"}, 0}}}},
      {{{"f", {"v0"}}, {{{"v1"}, 1}}}});  // f: v0 -> v1, v1 -> 0
  return {cat, mod, IndexMap{{"x", "x"}}};
}

}  // namespace

TEST_CASE("generator-built modules validate") {
  const auto setup = nilpotent_setup();
  CHECK(validate_module(setup.mod).ok());
}

TEST_CASE("identity matrix acts as the identity") {
  const auto [cat, mod, c] = nilpotent_setup();
  ModuleVector v = ModuleVector::zero(mod, c);
  v.components[0].add_term({"v0"}, 2);
  v.components[1].add_term({"v1"}, parse_rational("1/3"));
  CHECK(hg_act(hg_identity(cat, c), v) == v);
}

TEST_CASE("action is linear and kills the zero vector") {
  const auto [cat, mod, c] = nilpotent_setup();
  HomMatrix a(cat, c, c);
  a.set_entry(0, 1, GradedVector::unit(cat->hom_basis("x", "x"), {"f"}));
  CHECK(hg_act(a, ModuleVector::zero(mod, c)).is_zero());
}

TEST_CASE("matrix action expands over entries and fibers") {
  const auto [cat, mod, c] = nilpotent_setup();
  // A = [[0, f],[f, 0]], v = (v0, v0): Av = (f v0, f v0) = (v1, v1)
  HomMatrix a(cat, c, c);
  a.set_entry(0, 1, GradedVector::unit(cat->hom_basis("x", "x"), {"f"}));
  a.set_entry(1, 0, GradedVector::unit(cat->hom_basis("x", "x"), {"f"}));
  ModuleVector v = ModuleVector::zero(mod, c);
  v.components[0].add_term({"v0"}, 1);
  v.components[1].add_term({"v0"}, 1);
  const ModuleVector av = hg_act(a, v);
  CHECK(av.components[0] == GradedVector::unit(mod->fiber("x"), {"v1"}));
  CHECK(av.components[1] == GradedVector::unit(mod->fiber("x"), {"v1"}));
}

TEST_CASE("representation law on the nilpotent example") {
  const auto [cat, mod, c] = nilpotent_setup();
  HomMatrix a(cat, c, c), b(cat, c, c);
  a.set_entry(0, 0, GradedVector::unit(cat->hom_basis("x", "x"), {"f"}));
  a.set_entry(0, 1, Rational(2) * GradedVector::unit(cat->hom_basis("x", "x"), BasisKey{}));
  b.set_entry(1, 0, GradedVector::unit(cat->hom_basis("x", "x"), {"f"}));
  b.set_entry(1, 1, GradedVector::unit(cat->hom_basis("x", "x"), {"f", "f"}));
  ModuleVector v = ModuleVector::zero(mod, c);
  v.components[0].add_term({"v0"}, 3);
  v.components[1].add_term({"v1"}, -1);
  CHECK(hg_act(hg_product(a, b), v) == hg_act(a, hg_act(b, v)));
}

TEST_CASE("incompatible hand-built action tables are caught") {
  const CategoryPtr cat = GradedCategory::free_category({{"x", 0}}, {{"f", "x", "x", 0}}, 2);
  // f*f should act as f twice (v0 -> v1 -> 0) but the table says ff: v0 -> v0
  std::vector<CategoryModule::ActionEntry> entries = {
      {"x", "x", {"f"}, {"v0"}, {{{"v1"}, 1}}},
      {"x", "x", {"f", "f"}, {"v0"}, {{{"v0"}, 1}}}};
  auto mod = std::make_shared<CategoryModule>(
      cat, std::map<Symbol, std::vector<GradedBasisElement>>{
               {"x", {{{"v0"}, 0}, {{"v1"}, 0}}}},
      entries);
  const Report r = validate_module(mod);
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations.front().rule == "action-compatibility");
}

TEST_CASE("acting without a declared fiber is ModuleUndefined") {
  const CategoryPtr cat = GradedCategory::free_category({{"x", 0}, {"y", 0}}, {}, 2);
  auto mod = std::make_shared<CategoryModule>(
      cat, std::map<Symbol, std::vector<GradedBasisElement>>{{"x", {{{"v"}, 0}}}},
      std::vector<CategoryModule::ActionEntry>{});
  CHECK_THROWS_AS(mod->fiber("y"), ModuleUndefined);
  CHECK_THROWS_AS(ModuleVector::zero(mod, IndexMap{{"x", "y"}}), ModuleUndefined);
}
