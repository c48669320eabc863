#include <catch2/catch_amalgamated.hpp>

#include "homat/complex.hpp"

using namespace homat;

namespace {

// C_1 = <e>, C_0 = <v0, v1>, d(e) = v1 - v0.
ChainComplex interval_complex() {
  std::vector<GradedBasisElement> basis = {{{"e"}, 1}, {{"v0"}, 0}, {{"v1"}, 0}};
  const BasisPtr b = make_basis(basis);
  GradedVector de(b);
  de.add_term({"v1"}, 1);
  de.add_term({"v0"}, -1);
  return ChainComplex(basis, {{{"e"}, de}});
}

ChainComplex circle_complex() {
  std::vector<GradedBasisElement> basis = {{{"e"}, 1}, {{"v"}, 0}};
  return ChainComplex(basis, {});
}

}  // namespace

TEST_CASE("zero differential validates") {
  CHECK(validate_complex(circle_complex()).ok());
}

TEST_CASE("interval complex validates") {
  CHECK(validate_complex(interval_complex()).ok());
}

TEST_CASE("d squared violations are reported at the offending element") {
  std::vector<GradedBasisElement> basis = {{{"e"}, 2}, {{"v"}, 1}, {{"w"}, 0}};
  const BasisPtr b = make_basis(basis);
  ChainComplex c(basis, {{{"e"}, GradedVector::unit(b, {"v"})},
                         {{"v"}, GradedVector::unit(b, {"w"})}});
  const Report r = validate_complex(c);
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations.front().rule == "d-squared");
  CHECK(r.violations.front().detail.find("(e)") != std::string::npos);
  CHECK(r.violations.front().detail.find("(w)") != std::string::npos);
}

TEST_CASE("differential must drop degree by exactly one") {
  std::vector<GradedBasisElement> basis = {{{"e"}, 2}, {{"w"}, 0}};
  const BasisPtr b = make_basis(basis);
  ChainComplex c(basis, {{{"e"}, GradedVector::unit(b, {"w"})}});
  const Report r = validate_complex(c);
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations.front().rule == "degree-drop");
}

TEST_CASE("betti numbers of the point, interval and circle complexes") {
  std::vector<GradedBasisElement> point = {{{"p"}, 0}};
  CHECK(homology_betti(ChainComplex(point, {})) == std::map<int, std::size_t>{{0, 1}});
  CHECK(homology_betti(interval_complex()) == std::map<int, std::size_t>{{0, 1}, {1, 0}});
  CHECK(homology_betti(circle_complex()) == std::map<int, std::size_t>{{0, 1}, {1, 1}});
}

TEST_CASE("homology refuses invalid complexes") {
  std::vector<GradedBasisElement> basis = {{{"e"}, 2}, {{"v"}, 1}, {{"w"}, 0}};
  const BasisPtr b = make_basis(basis);
  ChainComplex c(basis, {{{"e"}, GradedVector::unit(b, {"v"})},
                         {{"v"}, GradedVector::unit(b, {"w"})}});
  CHECK_THROWS_AS(homology_betti(c), ComplexInvalid);
}

TEST_CASE("betti of a two-step exact-ish complex with rational coefficients") {
  // d(e1) = 2 v0 - 2 v1, d(e2) = (1/3)(v1 - v0): rank 1 differential
  std::vector<GradedBasisElement> basis = {{{"e1"}, 1}, {{"e2"}, 1}, {{"v0"}, 0}, {{"v1"}, 0}};
  const BasisPtr b = make_basis(basis);
  GradedVector d1(b), d2(b);
  d1.add_term({"v0"}, 2);
  d1.add_term({"v1"}, -2);
  d2.add_term({"v1"}, parse_rational("1/3"));
  d2.add_term({"v0"}, parse_rational("-1/3"));
  ChainComplex c(basis, {{{"e1"}, d1}, {{"e2"}, d2}});
  REQUIRE(validate_complex(c).ok());
  CHECK(homology_betti(c) == std::map<int, std::size_t>{{0, 1}, {1, 1}});
}
