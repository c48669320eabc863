#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "homat/category.hpp"

using namespace homat;

namespace {

CategoryPtr two_loop_category(int bound) {
  return GradedCategory::free_category({{"x", 0}},
                                       {{"f", "x", "x", 0}, {"g", "x", "x", 0}}, bound);
}

}  // namespace

TEST_CASE("empty quiver gives identity-only hom spaces") {
  const CategoryPtr cat = GradedCategory::free_category({{"x", 0}}, {}, 3);
  CHECK(cat->hom_basis("x", "x")->size() == 1);
  CHECK(cat->hom_basis("x", "x")->contains(BasisKey{}));
}

TEST_CASE("single edge quiver") {
  const CategoryPtr cat =
      GradedCategory::free_category({{"x", 0}, {"y", 0}}, {{"f", "x", "y", 2}}, 2);
  CHECK(cat->hom_basis("x", "y")->size() == 1);
  CHECK(cat->hom_basis("x", "y")->degree_of({"f"}) == 2);
  CHECK(cat->hom_basis("x", "x")->size() == 1);
  CHECK(cat->hom_basis("y", "y")->size() == 1);
  CHECK(cat->hom_basis("y", "x")->size() == 0);
}

TEST_CASE("two loops with bound 2 give the seven words of length at most 2") {
  const CategoryPtr cat = two_loop_category(2);
  CHECK(cat->hom_basis("x", "x")->size() == 7);
  for (const BasisKey& k : std::vector<BasisKey>{
           {}, {"f"}, {"g"}, {"f", "f"}, {"f", "g"}, {"g", "f"}, {"g", "g"}})
    CHECK(cat->hom_basis("x", "x")->contains(k));
}

TEST_CASE("free hom-basis size matches the word-count formula") {
  // independent oracle: a one-object quiver with k loops has
  // sum over l = 0..L of k^l composable words of length <= L
  for (int k = 1; k <= 3; ++k)
    for (int bound = 1; bound <= 4; ++bound) {
      std::vector<MorphGenerator> gens;
      for (int i = 0; i < k; ++i)
        gens.push_back({"g" + std::to_string(i), "x", "x", 0});
      const CategoryPtr cat = GradedCategory::free_category({{"x", 0}}, gens, bound);
      std::size_t expected = 0, power = 1;
      for (int l = 0; l <= bound; ++l, power *= k) expected += power;
      CHECK(cat->hom_basis("x", "x")->size() == expected);
    }
}

TEST_CASE("free generators must have declared endpoints") {
  CHECK_THROWS_AS(GradedCategory::free_category({{"x", 0}}, {{"f", "x", "y", 0}}, 2),
                  UnknownObject);
}

TEST_CASE("composition concatenates paths and adds degrees") {
  const CategoryPtr cat = GradedCategory::free_category(
      {{"x", 0}, {"y", 0}, {"z", 0}}, {{"f", "y", "z", 2}, {"g", "x", "y", 3}}, 2);
  const Morphism gf = compose(basis_morphism(cat, "y", "z", {"f"}),
                              basis_morphism(cat, "x", "y", {"g"}));
  CHECK(gf.src == "x");
  CHECK(gf.dst == "z");
  CHECK(gf.value == GradedVector::unit(cat->hom_basis("x", "z"), {"f", "g"}));
  CHECK(gf.value.homogeneous_degree() == 5);
}

TEST_CASE("identity laws at the element level") {
  const CategoryPtr cat = two_loop_category(3);
  const Morphism f = basis_morphism(cat, "x", "x", {"f", "g"});
  CHECK(compose(identity_morphism(cat, "x"), f) == f);
  CHECK(compose(f, identity_morphism(cat, "x")) == f);
}

TEST_CASE("composition is bilinear over the rationals") {
  const CategoryPtr cat = GradedCategory::free_category(
      {{"x", 0}, {"y", 0}, {"z", 0}},
      {{"f", "y", "z", 0}, {"g", "x", "y", 0}, {"h", "x", "y", 0}}, 2);
  const Morphism two_f = {cat, "y", "z",
                          Rational(2) * GradedVector::unit(cat->hom_basis("y", "z"), {"f"})};
  GradedVector mix = Rational(3) * GradedVector::unit(cat->hom_basis("x", "y"), {"g"});
  mix.add_term({"h"}, 1);
  const Morphism gh = {cat, "x", "y", mix};

  const Morphism result = compose(two_f, gh);
  GradedVector expected(cat->hom_basis("x", "z"));
  expected.add_term({"f", "g"}, 6);
  expected.add_term({"f", "h"}, 2);
  CHECK(result.value == expected);
}

TEST_CASE("non-composable morphisms are rejected") {
  const CategoryPtr cat =
      GradedCategory::free_category({{"x", 0}, {"y", 0}}, {{"f", "x", "y", 0}}, 2);
  const Morphism f = basis_morphism(cat, "x", "y", {"f"});
  CHECK_THROWS_AS(compose(f, f), CompositionMismatch);
}

TEST_CASE("overflowing the truncation bound is a hard error") {
  const CategoryPtr cat = two_loop_category(2);
  const Morphism ff = basis_morphism(cat, "x", "x", {"f", "f"});
  const Morphism g = basis_morphism(cat, "x", "x", {"g"});
  CHECK_THROWS_AS(compose(ff, g), TruncationOverflow);
  CHECK_THROWS_AS(compose(g, ff), TruncationOverflow);
}

TEST_CASE("free categories validate clean") {
  CHECK(validate_category(two_loop_category(3)).ok());
  const CategoryPtr cat = GradedCategory::free_category(
      {{"x", 2}, {"y", 0}, {"z", 4}}, {{"f", "x", "y", 1}, {"g", "y", "z", 2}, {"h", "z", "x", 0}},
      4);
  CHECK(validate_category(cat).ok());
}

TEST_CASE("tabled categories can break associativity and are caught") {
  std::map<std::pair<Symbol, Symbol>, std::vector<GradedBasisElement>> homs = {
      {{"x", "x"}, {{{"a"}, 0}, {{"b"}, 0}, {{"c"}, 0}}}};
  std::vector<GradedCategory::TableEntry> table = {
      {"x", "x", "x", {"a"}, {"a"}, {{{"b"}, 1}}},
      {"x", "x", "x", {"a"}, {"b"}, {{{"c"}, 1}}}};
  // (a*a)*a = b*a = 0 but a*(a*a) = a*b = c
  const CategoryPtr cat = GradedCategory::from_table({{"x", 0}}, homs, table);
  const Report r = validate_category(cat);
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations.front().rule == "associativity");
  CHECK(r.violations.front().detail.find("(a)") != std::string::npos);
}

TEST_CASE("tabled categories with non-additive degrees are caught") {
  std::map<std::pair<Symbol, Symbol>, std::vector<GradedBasisElement>> homs = {
      {{"x", "x"}, {{{"f"}, 1}, {{"g"}, 1}, {{"h"}, 3}}}};
  std::vector<GradedCategory::TableEntry> table = {
      {"x", "x", "x", {"f"}, {"g"}, {{{"h"}, 1}}}};
  const CategoryPtr cat = GradedCategory::from_table({{"x", 0}}, homs, table);
  const Report r = validate_category(cat);
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations.front().rule == "degree-additivity");
}

TEST_CASE("tabled categories with a broken identity row are caught") {
  std::map<std::pair<Symbol, Symbol>, std::vector<GradedBasisElement>> homs = {
      {{"x", "x"}, {{{"a"}, 0}}}};
  std::vector<GradedCategory::TableEntry> table = {
      {"x", "x", "x", BasisKey{}, {"a"}, {{{"a"}, 2}}}};  // id*a = 2a
  const CategoryPtr cat = GradedCategory::from_table({{"x", 0}}, homs, table);
  const Report r = validate_category(cat);
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations.front().rule == "identity-law");
}

TEST_CASE("a consistent table validates and composes bilinearly") {
  // hom(x,x) spanned by id and a nilpotent n with n*n = 0
  std::map<std::pair<Symbol, Symbol>, std::vector<GradedBasisElement>> homs = {
      {{"x", "x"}, {{{"n"}, 0}}}};
  std::vector<GradedCategory::TableEntry> table = {};
  const CategoryPtr cat = GradedCategory::from_table({{"x", 0}}, homs, table);
  CHECK(validate_category(cat).ok());
  const Morphism n = basis_morphism(cat, "x", "x", {"n"});
  CHECK(compose(n, n).is_zero());
  CHECK(compose(identity_morphism(cat, "x"), n) == n);
}

TEST_CASE("associativity holds on all triples of a free category") {
  const CategoryPtr cat = GradedCategory::free_category(
      {{"x", 0}, {"y", 0}}, {{"f", "x", "y", 1}, {"g", "y", "x", 1}, {"h", "x", "x", 2}}, 3);
  REQUIRE(validate_category(cat).ok());
  const Morphism f = basis_morphism(cat, "x", "y", {"f"});
  const Morphism g = basis_morphism(cat, "y", "x", {"g"});
  const Morphism h = basis_morphism(cat, "x", "x", {"h"});
  CHECK(compose(compose(g, f), h) == compose(g, compose(f, h)));
}
