#include <catch2/catch_amalgamated.hpp>

#include "shapelab/abgroup.hpp"
#include "shapelab/random_instances.hpp"

using shapelab::Int;
using shapelab::ValidationError;
using namespace shapelab::abgroup;
using shapelab::exactla::IntMatrix;
namespace ri = shapelab::random_instances;

namespace {
FpAbGroup presented(long gens, std::initializer_list<std::initializer_list<long>> rows) {
  return FpAbGroup(gens, IntMatrix::from_rows(rows));
}
}  // namespace

TEST_CASE("canonical forms", "[abgroup]") {
  CHECK(canonical_form(FpAbGroup::trivial()).to_string() == "0");
  CHECK(canonical_form(FpAbGroup::free(2)).to_string() == "Z^2");
  CHECK(canonical_form(FpAbGroup::free(1)).to_string() == "Z");
  CHECK(canonical_form(FpAbGroup::cyclic(12)).to_string() == "Z/12");
  CHECK(canonical_form(FpAbGroup::cyclic(1)).to_string() == "0");

  // Z/2 + Z/3 collapses to Z/6.
  CHECK(canonical_form(presented(2, {{2, 0}, {0, 3}})).to_string() == "Z/6");
  // Unit factors are dropped, zero columns are harmless.
  CHECK(canonical_form(presented(2, {{1, 0, 0}, {0, 4, 0}})).to_string() ==
        "Z/4");
  CHECK(canonical_form(presented(2, {{2, 4}, {6, 8}})).to_string() ==
        "Z/2 + Z/4");
  auto mixed = canonical_form(presented(3, {{2, 0}, {0, 0}, {0, 3}}));
  CHECK(mixed.free_rank == 1);
  CHECK(mixed.to_string() == "Z + Z/6");
  CHECK(FpAbGroup(2, IntMatrix(2, 0)) == FpAbGroup::free(2));
}

TEST_CASE("hom construction and well-definedness", "[abgroup]") {
  FpAbGroup z = FpAbGroup::free(1);
  FpAbGroup z4 = FpAbGroup::cyclic(4);
  FpAbGroup z8 = FpAbGroup::cyclic(8);

  CHECK_THROWS_AS(GroupHom(z, z, IntMatrix(2, 1)), std::invalid_argument);

  GroupHom twice(z4, z8, IntMatrix::from_rows({{2}}));
  CHECK(hom_well_defined(twice));
  GroupHom bad(z4, z8, IntMatrix::from_rows({{1}}));
  CHECK_FALSE(hom_well_defined(bad));

  // Maps into a quotient are compared modulo the target relations.
  GroupHom p1(z, z4, IntMatrix::from_rows({{1}}));
  GroupHom p5(z, z4, IntMatrix::from_rows({{5}}));
  CHECK(hom_equal(p1, p5));
  CHECK_FALSE(hom_equal(p1, GroupHom(z, z4, IntMatrix::from_rows({{2}}))));
  CHECK_THROWS_AS(hom_equal(p1, GroupHom(z, z8, IntMatrix::from_rows({{1}}))),
                  std::invalid_argument);

  CHECK(is_zero_hom(zero_hom(z4, z8)));
  CHECK(is_zero_hom(GroupHom(z4, z8, IntMatrix::from_rows({{8}}))));
  CHECK_FALSE(is_zero_hom(twice));

  GroupHom idz = identity_hom(z);
  CHECK(compose(idz, idz).matrix == IntMatrix::identity(1));
}

TEST_CASE("kernel image cokernel", "[abgroup]") {
  FpAbGroup z = FpAbGroup::free(1);
  GroupHom twice(z, z, IntMatrix::from_rows({{2}}));

  SECTION("multiplication by two on Z") {
    CHECK(canonical_form(kernel(twice).group).to_string() == "0");
    auto im = image(twice);
    CHECK(canonical_form(im.group).to_string() == "Z");
    CHECK(hom_well_defined(im.inclusion));
    CHECK(canonical_form(cokernel(twice).group).to_string() == "Z/2");
  }
  SECTION("zero map") {
    GroupHom zero = zero_hom(z, z);
    CHECK(canonical_form(kernel(zero).group).to_string() == "Z");
    CHECK(canonical_form(image(zero).group).to_string() == "0");
    CHECK(canonical_form(cokernel(zero).group).to_string() == "Z");
  }
  SECTION("torsion groups") {
    FpAbGroup z4 = FpAbGroup::cyclic(4);
    FpAbGroup z8 = FpAbGroup::cyclic(8);
    // Doubling into the larger group is injective: 2x = 0 mod 8 has no
    // nonzero solution with x ranging over Z/4.
    GroupHom twice48(z4, z8, IntMatrix::from_rows({{2}}));
    CHECK(canonical_form(kernel(twice48).group).is_trivial());
    CHECK(canonical_form(image(twice48).group).to_string() == "Z/4");
    CHECK(canonical_form(cokernel(twice48).group).to_string() == "Z/2");
    CHECK(hom_well_defined(kernel(twice48).inclusion));
    CHECK(is_zero_hom(compose(twice48, kernel(twice48).inclusion)));

    // Doubling inside Z/4 kills the order two subgroup.
    GroupHom twice44(z4, z4, IntMatrix::from_rows({{2}}));
    CHECK(canonical_form(kernel(twice44).group).to_string() == "Z/2");
    CHECK(canonical_form(image(twice44).group).to_string() == "Z/2");
    CHECK(canonical_form(cokernel(twice44).group).to_string() == "Z/2");
  }
}

TEST_CASE("direct sums", "[abgroup]") {
  FpAbGroup z2 = FpAbGroup::cyclic(2);
  FpAbGroup z3 = FpAbGroup::cyclic(3);
  DirectSum s = direct_sum(z2, z3);
  CHECK(canonical_form(s.group).to_string() == "Z/6");
  CHECK(hom_equal(compose(s.project_left, s.inject_left), identity_hom(z2)));
  CHECK(hom_equal(compose(s.project_right, s.inject_right), identity_hom(z3)));
  CHECK(is_zero_hom(compose(s.project_left, s.inject_right)));
  CHECK(is_zero_hom(compose(s.project_right, s.inject_left)));
}

TEST_CASE("exactness checks", "[abgroup]") {
  FpAbGroup z = FpAbGroup::free(1);
  FpAbGroup z2 = FpAbGroup::cyclic(2);
  GroupHom twice(z, z, IntMatrix::from_rows({{2}}));
  GroupHom proj(z, z2, IntMatrix::from_rows({{1}}));

  CHECK(is_exact_at(twice, proj));
  // Two doublings in a row leave 2Z / 0 unaccounted for.
  CHECK_FALSE(is_exact_at(twice, twice));
  // Kernel too big: the zero map's kernel is everything.
  CHECK_FALSE(is_exact_at(twice, zero_hom(z, z)));
  CHECK_THROWS_AS(is_exact_at(proj, proj), std::invalid_argument);
}

TEST_CASE("isomorphisms and inverses", "[abgroup]") {
  FpAbGroup z = FpAbGroup::free(1);
  CHECK(is_isomorphism(identity_hom(z)));
  CHECK_FALSE(is_isomorphism(GroupHom(z, z, IntMatrix::from_rows({{2}}))));
  CHECK_FALSE(is_isomorphism(zero_hom(z, z)));

  SECTION("negation inverts to itself") {
    GroupHom neg(z, z, IntMatrix::from_rows({{-1}}));
    REQUIRE(is_isomorphism(neg));
    GroupHom inv = inverse_hom(neg);
    CHECK(hom_equal(compose(inv, neg), identity_hom(z)));
  }
  SECTION("chinese remainder map") {
    FpAbGroup z6 = FpAbGroup::cyclic(6);
    DirectSum s = direct_sum(FpAbGroup::cyclic(2), FpAbGroup::cyclic(3));
    GroupHom crt(z6, s.group, IntMatrix::from_rows({{1}, {1}}));
    REQUIRE(hom_well_defined(crt));
    REQUIRE(is_isomorphism(crt));
    GroupHom inv = inverse_hom(crt);
    CHECK(hom_well_defined(inv));
    CHECK(hom_equal(compose(inv, crt), identity_hom(z6)));
    CHECK(hom_equal(compose(crt, inv), identity_hom(s.group)));
  }
  SECTION("iso between different presentations of the same group") {
    // Z/4 presented on two generators: e0 + e1 = 0 and 2 e0 = 2 e1,
    // so e1 = -e0 and 4 e0 = 0.
    FpAbGroup a = FpAbGroup::cyclic(4);
    FpAbGroup b(2, IntMatrix::from_rows({{1, 2}, {1, -2}}));
    CHECK(canonical_form(b).to_string() == "Z/4");
    GroupHom f(a, b, IntMatrix::from_rows({{1}, {0}}));
    REQUIRE(hom_well_defined(f));
    REQUIRE(is_isomorphism(f));
    GroupHom inv = inverse_hom(f);
    CHECK(hom_equal(compose(inv, f), identity_hom(a)));
    CHECK(hom_equal(compose(f, inv), identity_hom(b)));
  }
  SECTION("inverse of a non-isomorphism is refused") {
    GroupHom twice(z, z, IntMatrix::from_rows({{2}}));
    CHECK_THROWS_AS(inverse_hom(twice), ValidationError);
    try {
      inverse_hom(twice);
    } catch (const ValidationError& e) {
      CHECK(e.code() == "not-an-isomorphism");
    }
  }
}

TEST_CASE("presentation simplification", "[abgroup]") {
  SECTION("unit invariant factors drop their generators") {
    // Relations e1 = 0 and 4 e0 = 0 on three generators leave Z + Z/4.
    FpAbGroup g = presented(3, {{0, 4}, {1, 0}, {0, 0}});
    auto s = simplify_presentation(g);
    CHECK(s.group.gens() == 2);
    CHECK(canonical_form(s.group).to_string() == "Z + Z/4");
  }

  SECTION("already minimal presentations keep their size") {
    CHECK(simplify_presentation(FpAbGroup::free(3)).group.gens() == 3);
    CHECK(simplify_presentation(FpAbGroup::trivial()).group.gens() == 0);
    CHECK(simplify_presentation(presented(2, {{1, 0}, {0, 1}})).group.gens() ==
          0);
  }

  SECTION("the two directions are mutually inverse isomorphisms") {
    ri::Rng rng(61);
    for (int iter = 0; iter < 40; ++iter) {
      long gens = ri::pick(rng, 0, 5);
      IntMatrix rels = ri::random_matrix(rng, gens, ri::pick(rng, 0, 6), 6);
      FpAbGroup g(gens, std::move(rels));
      auto s = simplify_presentation(g);

      CHECK(s.group.gens() <= g.gens());
      CHECK(canonical_form(s.group) == canonical_form(g));
      CHECK(hom_well_defined(s.to_simple));
      CHECK(hom_well_defined(s.from_simple));
      CHECK(hom_equal(compose(s.to_simple, s.from_simple),
                      identity_hom(s.group)));
      CHECK(hom_equal(compose(s.from_simple, s.to_simple), identity_hom(g)));
    }
  }
}
