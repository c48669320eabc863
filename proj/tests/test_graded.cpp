#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "homat/graded.hpp"

using namespace homat;

namespace {

BasisPtr small_basis() {
  return make_basis({{{"e1"}, 0}, {{"e2"}, 0}, {{"u"}, 3}, {{"w"}, -2}});
}

}  // namespace

TEST_CASE("linear_combine cancels exactly and drops zeros") {
  const BasisPtr b = small_basis();
  const GradedVector v = GradedVector::unit(b, {"e1"});
  const GradedVector w = GradedVector::unit(b, {"e2"});

  SECTION("additive inverse gives the empty term map") {
    const GradedVector z = linear_combine({{Rational(1), v}, {Rational(-1), v}});
    CHECK(z.is_zero());
    CHECK(z.terms().empty());
  }

  SECTION("zero scalar contributes nothing") {
    CHECK(linear_combine({{Rational(1), v}, {Rational(0), w}}) == v);
  }

  SECTION("exact rational scaling") {
    const GradedVector two_e1 = Rational(2) * v;
    const GradedVector three_e2 = Rational(3) * w;
    const GradedVector sum =
        linear_combine({{parse_rational("1/2"), two_e1}, {parse_rational("1/3"), three_e2}});
    CHECK(sum == v + w);
  }
}

TEST_CASE("linear_combine rejects mixed ambient bases") {
  const GradedVector v = GradedVector::unit(small_basis(), {"e1"});
  const GradedVector other = GradedVector::unit(make_basis({{{"z"}, 1}}), {"z"});
  CHECK_THROWS_AS(linear_combine({{Rational(1), v}, {Rational(1), other}}), AmbientMismatch);
}

TEST_CASE("structurally equal bases are interchangeable ambients") {
  const GradedVector v = GradedVector::unit(small_basis(), {"e1"});
  const GradedVector w = GradedVector::unit(small_basis(), {"e1"});
  CHECK(v == w);
  CHECK((v + w).coeff({"e1"}) == 2);
}

TEST_CASE("shift_degrees moves a degree-3 element to degree 0 under n=3") {
  const BasisPtr b = small_basis();
  const GradedVector u = GradedVector::unit(b, {"u"});
  CHECK(u.homogeneous_degree() == 3);
  CHECK(shift_degrees(u, 0).ambient()->degree_of({"u"}) == 3);
  CHECK(shift_degrees(u, 3).ambient()->degree_of({"u"}) == 0);
  CHECK(shift_degrees(shift_degrees(u, 5), -5) == u);
  CHECK(shift_degrees(shift_degrees(u, 5), -5).ambient()->degree_of({"u"}) == 3);
}

TEST_CASE("shift_degrees is a uniform regrading of terms") {
  std::mt19937_64 rng(7);
  const BasisPtr b = small_basis();
  for (int trial = 0; trial < 50; ++trial) {
    GradedVector v(b);
    for (const auto& [k, d] : b->elements())
      if (rng() % 2) v.add_term(k, Rational((long)(rng() % 19)) - 9);
    const int n = (int)(rng() % 11) - 5;
    const GradedVector shifted = shift_degrees(v, n);
    CHECK(shifted.terms() == v.terms());
    for (const auto& [k, c] : v.terms())
      CHECK(shifted.ambient()->degree_of(k) == v.ambient()->degree_of(k) - n);
  }
}

TEST_CASE("homogeneous degree queries") {
  const BasisPtr b = small_basis();
  GradedVector v = GradedVector::unit(b, {"e1"});
  CHECK(v.homogeneous_degree() == 0);
  v.add_term({"e2"}, 5);
  CHECK(v.homogeneous_degree() == 0);
  v.add_term({"u"}, 1);
  CHECK_FALSE(v.homogeneous_degree().has_value());
  CHECK_FALSE(GradedVector::zero(b).homogeneous_degree().has_value());
}

TEST_CASE("vectors reject keys outside the ambient basis") {
  GradedVector v(small_basis());
  CHECK_THROWS_AS(v.add_term({"nope"}, 1), AmbientMismatch);
}
