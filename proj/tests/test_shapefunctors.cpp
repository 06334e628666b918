#include <catch2/catch_amalgamated.hpp>

#include "shapelab/random_instances.hpp"
#include "shapelab/shapefunctors.hpp"

using shapelab::ValidationError;
using namespace shapelab::shapefunctors;
using shapelab::abgroup::canonical_form;
using shapelab::abgroup::FpAbGroup;
using shapelab::abgroup::GroupHom;
using shapelab::abgroup::identity_hom;
using shapelab::abgroup::is_isomorphism;
using shapelab::abgroup::is_zero_hom;
using shapelab::exactla::IntMatrix;
using shapelab::posets::find_top;
using shapelab::simplicial::SimplicialMap;
namespace ri = shapelab::random_instances;

namespace {

SimplicialComplex circle() {
  return SimplicialComplex::from_simplices({{"a", "b"}, {"b", "c"}, {"a", "c"}});
}

SimplicialComplex arc_ab_ac() {
  return SimplicialComplex::from_simplices({{"a", "b"}, {"a", "c"}});
}

SimplicialComplex arc_bc() {
  return SimplicialComplex::from_simplices({{"b", "c"}});
}

FilteredModel circle_model() {
  return build_filtered_model(circle(), {arc_ab_ac(), arc_bc(), circle()});
}

// Two triangles glued along an edge, relative to one of them.
SimplicialPair two_triangle_pair() {
  return SimplicialPair(
      SimplicialComplex::from_simplices({{"a", "b", "c"}, {"b", "c", "d"}}),
      SimplicialComplex::from_simplices({{"a", "b", "c"}}));
}

std::map<std::string, std::string> identity_vm(const SimplicialComplex& k) {
  std::map<std::string, std::string> vm;
  for (const auto& v : k.vertices()) vm[v] = v;
  return vm;
}

}  // namespace

TEST_CASE("model validation failure codes", "[shapefunctors]") {
  auto total = SimplicialPair::absolute(circle());

  SECTION("empty family") {
    CHECK(check_model(total, {}).code == "empty-family");
  }
  SECTION("member outside the total pair") {
    auto big = SimplicialPair::absolute(
        SimplicialComplex::from_simplices({{"a", "b", "c"}}));
    auto r = check_model(total, {total, big});
    CHECK(r.code == "member-not-subpair");
    CHECK(r.witness == std::vector<long>{1});
  }
  SECTION("two arcs with no common enclosing member") {
    auto r = check_model(total, {SimplicialPair::absolute(arc_ab_ac()),
                                 SimplicialPair::absolute(arc_bc())});
    CHECK(r.code == "family-not-directed");
  }
  SECTION("family that fails to cover") {
    auto r = check_model(total, {SimplicialPair::absolute(arc_ab_ac())});
    CHECK(r.code == "family-union-total");
  }
  SECTION("family that fails to cover the subcomplex") {
    SimplicialPair rel(circle(),
                       SimplicialComplex::from_simplices({{"a", "b"}}));
    SimplicialPair member(circle(),
                          SimplicialComplex::from_simplices({{"a"}}));
    auto r = check_model(rel, {member});
    CHECK(r.code == "family-union-sub");
  }
  SECTION("build_filtered_model enforces validity") {
    CHECK_THROWS_AS(build_filtered_model(circle(), {arc_ab_ac()}),
                    ValidationError);
  }
}

TEST_CASE("member order is derived from inclusion", "[shapefunctors]") {
  FilteredModel m = circle_model();
  CHECK(m.order.size() == 3);
  CHECK(m.order.leq(0, 2));
  CHECK(m.order.leq(1, 2));
  CHECK_FALSE(m.order.leq(0, 1));
  CHECK_FALSE(m.order.leq(2, 0));
  auto top = find_top(m.order);
  REQUIRE(top.has_value());
  CHECK(*top == 2);
}

TEST_CASE("member systems of the circle model", "[shapefunctors]") {
  Coeff z = Coeff::integers();
  FilteredModel m = circle_model();

  GroupSystem hs = homology_system(m, 1, z);
  REQUIRE(shapelab::systems::check_system(hs).ok);
  CHECK(hs.variance == Variance::direct);
  CHECK(canonical_form(hs.object(0)).is_trivial());
  CHECK(canonical_form(hs.object(1)).is_trivial());
  CHECK(canonical_form(hs.object(2)).to_string() == "Z");

  GroupSystem cs = cohomology_system(m, 0, z);
  REQUIRE(shapelab::systems::check_system(cs).ok);
  CHECK(cs.variance == Variance::inverse);
  for (long a = 0; a < 3; ++a)
    CHECK(canonical_form(cs.object(a)).to_string() == "Z");
}

TEST_CASE("shape groups of the circle model", "[shapefunctors]") {
  Coeff z = Coeff::integers();
  FilteredModel m = circle_model();

  SECTION("homology side") {
    ShapeGroupResult r1 = shape_homology(m, 1, z);
    CHECK(canonical_form(r1.limit.group).to_string() == "Z");
    CHECK(canonical_form(r1.reference).to_string() == "Z");
    CHECK(is_isomorphism(r1.comparison));

    ShapeGroupResult r0 = shape_homology(m, 0, z);
    CHECK(canonical_form(r0.limit.group).to_string() == "Z");
    CHECK(is_isomorphism(r0.comparison));
  }
  SECTION("cohomology side") {
    ShapeGroupResult r1 = shape_cohomology(m, 1, z);
    CHECK(canonical_form(r1.limit.group).to_string() == "Z");
    CHECK(is_isomorphism(r1.comparison));

    ShapeGroupResult r0 = shape_cohomology(m, 0, z);
    CHECK(canonical_form(r0.limit.group).to_string() == "Z");
    CHECK(is_isomorphism(r0.comparison));
  }
  SECTION("coefficients pass through") {
    Coeff two = Coeff::mod(2);
    ShapeGroupResult r = shape_homology(m, 1, two);
    CHECK(canonical_form(r.limit.group).to_string() == "Z/2");
    CHECK(is_isomorphism(r.comparison));
  }
}

TEST_CASE("maps between models induce system morphisms", "[shapefunctors]") {
  Coeff z = Coeff::integers();
  FilteredModel src = circle_model();
  SimplicialComplex disk =
      SimplicialComplex::from_simplices({{"a", "b", "c"}});
  FilteredModel tgt = build_filtered_model(disk, {disk});
  PairMap inc(SimplicialPair::absolute(circle()),
              SimplicialPair::absolute(disk), identity_vm(circle()));

  SECTION("homology variance") {
    SystemMorphism m =
        induced_system_morphism(inc, src, tgt, 1, z, Variance::direct);
    REQUIRE(shapelab::systems::check_morphism(m).ok);
    auto ml = shapelab::systems::limit_of_morphism(m);
    CHECK(canonical_form(ml.source.group).to_string() == "Z");
    CHECK(canonical_form(ml.target.group).is_trivial());
    CHECK(is_zero_hom(ml.map));
  }
  SECTION("cohomology variance runs backwards") {
    SystemMorphism m =
        induced_system_morphism(inc, src, tgt, 1, z, Variance::inverse);
    REQUIRE(shapelab::systems::check_morphism(m).ok);
    auto ml = shapelab::systems::limit_of_morphism(m);
    CHECK(canonical_form(ml.source.group).is_trivial());
    CHECK(canonical_form(ml.target.group).to_string() == "Z");
  }
  SECTION("endpoint mismatches are rejected") {
    CHECK_THROWS_AS(
        induced_system_morphism(inc, tgt, src, 0, z, Variance::direct),
        std::invalid_argument);
  }
}

TEST_CASE("image assignment tie-breaking is deterministic", "[shapefunctors]") {
  auto point_b = SimplicialPair::absolute(
      SimplicialComplex::from_simplices({{"b"}}));
  std::vector<SimplicialPair> family{
      SimplicialPair::absolute(arc_bc()),
      SimplicialPair::absolute(
          SimplicialComplex::from_simplices({{"a", "b"}}))};
  // Both members contain the point and have equal size; the smaller
  // canonical description wins regardless of position.
  CHECK(detail::smallest_containing(family, point_b) == 1);
  std::swap(family[0], family[1]);
  CHECK(detail::smallest_containing(family, point_b) == 0);
}

TEST_CASE("system equivalence certificates", "[shapefunctors]") {
  using shapelab::systems::GroupSystem;
  using shapelab::systems::identity_morphism;
  using shapelab::systems::SystemMorphism;

  auto one_object = [](long modulus) {
    GroupSystem s;
    s.variance = Variance::inverse;
    s.index = shapelab::posets::DirectedPoset::singleton();
    s.objects = {FpAbGroup::cyclic(modulus)};
    return s;
  };

  SECTION("doubling is self-inverse modulo three") {
    GroupSystem s = one_object(3);
    SystemMorphism f{s, s, shapelab::posets::identity_order_map(s.index),
                     {GroupHom(s.object(0), s.object(0),
                               IntMatrix::from_rows({{2}}))}};
    CHECK(verify_system_equivalence(f, f).accepted());
  }
  SECTION("doubling is not self-inverse modulo five") {
    GroupSystem s = one_object(5);
    SystemMorphism f{s, s, shapelab::posets::identity_order_map(s.index),
                     {GroupHom(s.object(0), s.object(0),
                               IntMatrix::from_rows({{2}}))}};
    CHECK_FALSE(verify_system_equivalence(f, f).accepted());
  }
  SECTION("mismatched endpoints are rejected") {
    GroupSystem s = one_object(3);
    GroupSystem t = one_object(5);
    CHECK_THROWS_AS(
        verify_system_equivalence(identity_morphism(s), identity_morphism(t)),
        std::invalid_argument);
  }
}

TEST_CASE("excision pipeline on glued triangles", "[shapefunctors]") {
  Coeff z = Coeff::integers();
  SimplicialPair p = two_triangle_pair();

  SECTION("single member model") {
    FilteredModel m = build_filtered_model(p, {p});
    ExcisionReport r = excision_pipeline(m, {"a"}, 2, z);
    CHECK(r.passed());
    REQUIRE(r.degrees.size() == 3);
    for (const auto& d : r.degrees) {
      CHECK(d.excisable == std::vector<long>{0});
      CHECK(d.member_criterion.holds);
      CHECK(d.relabel_criterion.holds);
      CHECK(d.member_limit_iso);
      CHECK(d.relabel_limit_iso);
      CHECK(d.composition_ok);
      CHECK(d.excision_iso);
    }
  }
  SECTION("two member model") {
    SimplicialPair inner(p.sub, p.sub);
    FilteredModel m = build_filtered_model(p, {inner, p});
    ExcisionReport r = excision_pipeline(m, {"a"}, 1, z);
    CHECK(r.passed());
    CHECK(r.degrees[0].excisable == std::vector<long>{0, 1});
  }
  SECTION("stars poking out of the subcomplex are rejected") {
    FilteredModel m = build_filtered_model(circle(), {circle()});
    CHECK_THROWS_AS(excision_pipeline(m, {"a"}, 1, z), ValidationError);
    CHECK_THROWS_AS(excision_pipeline(m, {"zzz"}, 1, z), ValidationError);
  }
}

TEST_CASE("naturality of the coboundary", "[shapefunctors]") {
  Coeff z = Coeff::integers();

  SECTION("identity on the glued triangles") {
    SimplicialPair p = two_triangle_pair();
    FilteredModel m = build_filtered_model(p, {p});
    PairMap id(p, p, identity_vm(p.total));
    for (long degree : {0L, 1L}) {
      NaturalityReport r = naturality_audit(id, m, m, degree, z);
      CHECK(r.passed());
    }
  }
  SECTION("swapping the shared edge endpoints") {
    SimplicialPair p = two_triangle_pair();
    FilteredModel m = build_filtered_model(p, {p});
    PairMap swap(p, p, {{"a", "a"}, {"b", "c"}, {"c", "b"}, {"d", "d"}});
    NaturalityReport r = naturality_audit(swap, m, m, 0, z);
    CHECK(r.passed());
  }
  SECTION("identity on the disk modulo its boundary") {
    SimplicialPair p(SimplicialComplex::from_simplices({{"a", "b", "c"}}),
                     circle());
    FilteredModel m = build_filtered_model(p, {p});
    PairMap id(p, p, identity_vm(p.total));
    NaturalityReport r = naturality_audit(id, m, m, 1, z);
    CHECK(r.passed());
    CHECK(r.source_delta_ok.ok);
    CHECK(r.target_delta_ok.ok);
    CHECK(r.system_square.equivalent);
    CHECK(r.limit_square_ok);
  }
  SECTION("rotation between absolute circle models") {
    FilteredModel m = circle_model();
    PairMap rot(SimplicialPair::absolute(circle()),
                SimplicialPair::absolute(circle()),
                {{"a", "b"}, {"b", "c"}, {"c", "a"}});
    NaturalityReport r = naturality_audit(rot, m, m, 0, z);
    CHECK(r.passed());
  }
  SECTION("maps must connect the models") {
    FilteredModel m = circle_model();
    SimplicialComplex disk =
        SimplicialComplex::from_simplices({{"a", "b", "c"}});
    FilteredModel d = build_filtered_model(disk, {disk});
    PairMap id(SimplicialPair::absolute(circle()),
               SimplicialPair::absolute(circle()), identity_vm(circle()));
    CHECK_THROWS_AS(naturality_audit(id, m, d, 0, z), std::invalid_argument);
  }
}

TEST_CASE("random models have isomorphic shape comparisons", "[shapefunctors]") {
  ri::Rng rng(58);
  Coeff z = Coeff::integers();
  for (int iter = 0; iter < 4; ++iter) {
    FilteredModel m = ri::random_model(rng, 8, 5, 2, 4);
    REQUIRE(check_model(m.total, m.family).ok);
    for (long degree = 0; degree <= 1; ++degree) {
      CHECK(is_isomorphism(shape_homology(m, degree, z).comparison));
      CHECK(is_isomorphism(shape_cohomology(m, degree, z).comparison));
    }
  }
}
