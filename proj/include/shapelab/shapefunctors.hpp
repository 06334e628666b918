#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "shapelab/simplicial.hpp"
#include "shapelab/systems.hpp"

namespace shapelab::shapefunctors {

using abgroup::FpAbGroup;
using abgroup::GroupHom;
using posets::DirectedPoset;
using posets::OrderMap;
using simplicial::Coeff;
using simplicial::PairMap;
using simplicial::SimplicialComplex;
using simplicial::SimplicialPair;
using systems::GroupSystem;
using systems::SystemMorphism;
using systems::Variance;

// A pair together with a finite directed family of subpairs covering
// it. The order on the family is inclusion of subpairs, derived rather
// than user-supplied; validity forces the family to contain the total
// pair as its maximum.
struct FilteredModel {
  SimplicialPair total = SimplicialPair::absolute(SimplicialComplex());
  std::vector<SimplicialPair> family;
  DirectedPoset order = DirectedPoset::singleton();
};

namespace detail {

inline DirectedPoset inclusion_order(const std::vector<SimplicialPair>& family) {
  const long n = static_cast<long>(family.size());
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      leq[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)] =
          family[static_cast<std::size_t>(i)].subpair_of(
              family[static_cast<std::size_t>(j)])
              ? 1
              : 0;
  return DirectedPoset::create(n, std::move(leq));
}

// Deterministic description of a pair, used only for tie-breaking.
inline std::string pair_key(const SimplicialPair& p) {
  std::string out;
  for (const auto& s : p.total.simplices()) out += simplicial::simplex_name(s);
  out += "|";
  for (const auto& s : p.sub.simplices()) out += simplicial::simplex_name(s);
  return out;
}

}  // namespace detail

inline ValidationReport check_model(const SimplicialPair& total,
                                    const std::vector<SimplicialPair>& family) {
  const long n = static_cast<long>(family.size());
  if (n == 0)
    return ValidationReport::fail("empty-family", "a model needs at least one member");
  for (long a = 0; a < n; ++a)
    if (!family[static_cast<std::size_t>(a)].subpair_of(total))
      return ValidationReport::fail(
          "member-not-subpair",
          "member " + std::to_string(a) + " is not a subpair of the total pair",
          {a});
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      bool bounded = false;
      for (long k = 0; k < n && !bounded; ++k)
        bounded = family[static_cast<std::size_t>(i)].subpair_of(
                      family[static_cast<std::size_t>(k)]) &&
                  family[static_cast<std::size_t>(j)].subpair_of(
                      family[static_cast<std::size_t>(k)]);
      if (!bounded)
        return ValidationReport::fail(
            "family-not-directed",
            "members " + std::to_string(i) + " and " + std::to_string(j) +
                " have no common enclosing member",
            {i, j});
    }
  SimplicialComplex union_total, union_sub;
  for (const auto& m : family) {
    union_total = union_total.union_with(m.total);
    union_sub = union_sub.union_with(m.sub);
  }
  for (const auto& s : total.total.simplices())
    if (!union_total.contains(s))
      return ValidationReport::fail(
          "family-union-total",
          "simplex " + simplicial::simplex_name(s) + " is covered by no member");
  for (const auto& s : total.sub.simplices())
    if (!union_sub.contains(s))
      return ValidationReport::fail(
          "family-union-sub",
          "subcomplex simplex " + simplicial::simplex_name(s) +
              " is covered by no member subcomplex");
  return ValidationReport::pass();
}

inline FilteredModel build_filtered_model(SimplicialPair total,
                                          std::vector<SimplicialPair> family) {
  check_model(total, family).require();
  DirectedPoset order = detail::inclusion_order(family);
  return FilteredModel{std::move(total), std::move(family), std::move(order)};
}

inline FilteredModel build_filtered_model(SimplicialComplex total,
                                          std::vector<SimplicialComplex> family) {
  std::vector<SimplicialPair> pairs;
  pairs.reserve(family.size());
  for (auto& k : family) pairs.push_back(SimplicialPair::absolute(std::move(k)));
  return build_filtered_model(SimplicialPair::absolute(std::move(total)),
                              std::move(pairs));
}

namespace detail {

// One graded piece per family member, computed in a single pass so the
// bond builders below never rederive them.
inline std::vector<simplicial::GradedPiece> member_homology_pieces(
    const FilteredModel& m, long degree, const Coeff& c) {
  std::vector<simplicial::GradedPiece> out;
  out.reserve(m.family.size());
  for (const auto& member : m.family)
    out.push_back(simplicial::homology_piece(member, degree, c));
  return out;
}

inline std::vector<simplicial::GradedPiece> member_cohomology_pieces(
    const FilteredModel& m, long degree, const Coeff& c) {
  std::vector<simplicial::GradedPiece> out;
  out.reserve(m.family.size());
  for (const auto& member : m.family)
    out.push_back(simplicial::cohomology_piece(member, degree, c));
  return out;
}

inline GroupSystem homology_system_from(
    const FilteredModel& m, long degree,
    const std::vector<simplicial::GradedPiece>& pieces) {
  GroupSystem s;
  s.variance = Variance::direct;
  s.index = m.order;
  for (const auto& p : pieces) s.objects.push_back(p.group);
  for (long a = 0; a < m.order.size(); ++a)
    for (long b = 0; b < m.order.size(); ++b)
      if (a != b && m.order.leq(a, b))
        s.bonds.emplace(
            std::make_pair(a, b),
            simplicial::induced_hom(
                simplicial::inclusion_map(m.family[static_cast<std::size_t>(a)],
                                          m.family[static_cast<std::size_t>(b)]),
                degree, pieces[static_cast<std::size_t>(a)],
                pieces[static_cast<std::size_t>(b)]));
  return s;
}

inline GroupSystem cohomology_system_from(
    const FilteredModel& m, long degree,
    const std::vector<simplicial::GradedPiece>& pieces) {
  GroupSystem s;
  s.variance = Variance::inverse;
  s.index = m.order;
  for (const auto& p : pieces) s.objects.push_back(p.group);
  for (long a = 0; a < m.order.size(); ++a)
    for (long b = 0; b < m.order.size(); ++b)
      if (a != b && m.order.leq(a, b))
        s.bonds.emplace(
            std::make_pair(a, b),
            simplicial::induced_cohom(
                simplicial::inclusion_map(m.family[static_cast<std::size_t>(a)],
                                          m.family[static_cast<std::size_t>(b)]),
                degree, pieces[static_cast<std::size_t>(a)],
                pieces[static_cast<std::size_t>(b)]));
  return s;
}

}  // namespace detail

// Direct system of member homology groups, bonded by inclusions.
inline GroupSystem homology_system(const FilteredModel& m, long degree,
                                   const Coeff& c) {
  return detail::homology_system_from(
      m, degree, detail::member_homology_pieces(m, degree, c));
}

// Inverse system of member cohomology groups; the bond keyed (a, b)
// restricts from the larger member b to the smaller member a.
inline GroupSystem cohomology_system(const FilteredModel& m, long degree,
                                     const Coeff& c) {
  return detail::cohomology_system_from(
      m, degree, detail::member_cohomology_pieces(m, degree, c));
}

// Shape homology of a model: colimit of the member homology system,
// with the mediating comparison to the homology of the total pair.
// For a valid model (total pair on top) the comparison is an
// isomorphism; callers can verify rather than trust.
struct ShapeGroupResult {
  GroupSystem system;
  systems::LimitResult limit;
  FpAbGroup reference = FpAbGroup::trivial();  // plain (co)homology of the total pair
  GroupHom comparison;                         // homology: colim -> reference;
                                               // cohomology: reference -> lim
};

inline ShapeGroupResult shape_homology(const FilteredModel& m, long degree,
                                       const Coeff& c) {
  auto pieces = detail::member_homology_pieces(m, degree, c);
  GroupSystem sys = detail::homology_system_from(m, degree, pieces);
  systems::LimitResult col = systems::colimit(sys);
  simplicial::GradedPiece total = simplicial::homology_piece(m.total, degree, c);
  std::vector<GroupHom> cocone;
  for (long a = 0; a < sys.index.size(); ++a)
    cocone.push_back(simplicial::induced_hom(
        simplicial::inclusion_map(m.family[static_cast<std::size_t>(a)], m.total),
        degree, pieces[static_cast<std::size_t>(a)], total));
  GroupHom cmp = systems::mediating_morphism(sys, col, cocone);
  return ShapeGroupResult{std::move(sys), std::move(col), std::move(total.group),
                          std::move(cmp)};
}

inline ShapeGroupResult shape_cohomology(const FilteredModel& m, long degree,
                                         const Coeff& c) {
  auto pieces = detail::member_cohomology_pieces(m, degree, c);
  GroupSystem sys = detail::cohomology_system_from(m, degree, pieces);
  systems::LimitResult lim = systems::limit(sys);
  simplicial::GradedPiece total = simplicial::cohomology_piece(m.total, degree, c);
  std::vector<GroupHom> cone;
  for (long a = 0; a < sys.index.size(); ++a)
    cone.push_back(simplicial::induced_cohom(
        simplicial::inclusion_map(m.family[static_cast<std::size_t>(a)], m.total),
        degree, pieces[static_cast<std::size_t>(a)], total));
  GroupHom cmp = systems::mediating_morphism(sys, lim, cone);
  return ShapeGroupResult{std::move(sys), std::move(lim), std::move(total.group),
                          std::move(cmp)};
}

namespace detail {

inline SimplicialPair image_pair(const PairMap& f, const SimplicialPair& p) {
  std::vector<simplicial::Simplex> total_img, sub_img;
  for (const auto& s : p.total.simplices()) total_img.push_back(f.image_simplex(s));
  for (const auto& s : p.sub.simplices()) sub_img.push_back(f.image_simplex(s));
  return SimplicialPair(SimplicialComplex::from_simplices(total_img),
                        SimplicialComplex::from_simplices(sub_img));
}

// Smallest family member (by size, then key, then index) containing
// the given pair.
inline long smallest_containing(const std::vector<SimplicialPair>& family,
                                const SimplicialPair& p) {
  long best = -1;
  std::size_t best_size = 0;
  std::string best_key;
  for (long k = 0; k < static_cast<long>(family.size()); ++k) {
    const SimplicialPair& cand = family[static_cast<std::size_t>(k)];
    if (!p.subpair_of(cand)) continue;
    std::size_t size = cand.total.size() + cand.sub.size();
    std::string key = pair_key(cand);
    if (best == -1 || size < best_size ||
        (size == best_size && key < best_key)) {
      best = k;
      best_size = size;
      best_key = key;
    }
  }
  if (best == -1)
    throw std::logic_error("no family member contains the image pair");
  return best;
}

// Raise assignments until they respect the member order. Each step
// replaces a violating value by a strict upper bound, so the loop
// terminates on a finite family.
inline void promote_monotone(const std::vector<SimplicialPair>& family,
                             const DirectedPoset& order, std::vector<long>& u) {
  const long n = order.size();
  bool changed = true;
  while (changed) {
    changed = false;
    for (long a = 0; a < n; ++a)
      for (long b = 0; b < n; ++b) {
        if (!order.leq(a, b)) continue;
        long ua = u[static_cast<std::size_t>(a)];
        long ub = u[static_cast<std::size_t>(b)];
        // Target order: indices of the family the values live in.
        if (family[static_cast<std::size_t>(ua)].subpair_of(
                family[static_cast<std::size_t>(ub)]))
          continue;
        long pick = -1;
        std::size_t pick_size = 0;
        std::string pick_key;
        for (long k = 0; k < static_cast<long>(family.size()); ++k) {
          const SimplicialPair& cand = family[static_cast<std::size_t>(k)];
          if (!family[static_cast<std::size_t>(ua)].subpair_of(cand) ||
              !family[static_cast<std::size_t>(ub)].subpair_of(cand))
            continue;
          std::size_t size = cand.total.size() + cand.sub.size();
          std::string key = pair_key(cand);
          if (pick == -1 || size < pick_size ||
              (size == pick_size && key < pick_key)) {
            pick = k;
            pick_size = size;
            pick_key = key;
          }
        }
        if (pick == -1)
          throw std::logic_error("directed family without upper bound");
        u[static_cast<std::size_t>(b)] = pick;
        changed = true;
      }
  }
}

}  // namespace detail

// System morphism induced by a map of total pairs between two models.
// Each source member is sent into the smallest target member containing
// its image; the assignment is then promoted to a monotone one. With
// homology this yields a morphism of direct systems from the source
// model's system to the target model's; with cohomology, a morphism of
// inverse systems from the target model's system to the source
// model's.
inline SystemMorphism induced_system_morphism(const PairMap& f,
                                              const FilteredModel& source_model,
                                              const FilteredModel& target_model,
                                              long degree, const Coeff& c,
                                              Variance variance) {
  if (f.source != source_model.total)
    throw std::invalid_argument("map source is not the source model's total pair");
  if (f.target != target_model.total)
    throw std::invalid_argument("map target is not the target model's total pair");

  const long n = source_model.order.size();
  std::vector<long> u(static_cast<std::size_t>(n));
  for (long a = 0; a < n; ++a)
    u[static_cast<std::size_t>(a)] = detail::smallest_containing(
        target_model.family,
        detail::image_pair(f, source_model.family[static_cast<std::size_t>(a)]));
  detail::promote_monotone(target_model.family, source_model.order, u);

  std::vector<PairMap> corestrictions;
  corestrictions.reserve(static_cast<std::size_t>(n));
  for (long a = 0; a < n; ++a) {
    const SimplicialPair& src = source_model.family[static_cast<std::size_t>(a)];
    const SimplicialPair& tgt =
        target_model.family[static_cast<std::size_t>(u[static_cast<std::size_t>(a)])];
    std::map<std::string, std::string> vm;
    for (const auto& v : src.total.vertices()) vm[v] = f.vertex_map.at(v);
    corestrictions.emplace_back(src, tgt, std::move(vm));
  }

  OrderMap idx(source_model.order, target_model.order, std::move(u));
  if (variance == Variance::direct) {
    auto px = detail::member_homology_pieces(source_model, degree, c);
    auto py = detail::member_homology_pieces(target_model, degree, c);
    GroupSystem sx = detail::homology_system_from(source_model, degree, px);
    GroupSystem sy = detail::homology_system_from(target_model, degree, py);
    std::vector<GroupHom> comps;
    for (long a = 0; a < n; ++a)
      comps.push_back(simplicial::induced_hom(
          corestrictions[static_cast<std::size_t>(a)], degree,
          px[static_cast<std::size_t>(a)],
          py[static_cast<std::size_t>(idx.map[static_cast<std::size_t>(a)])]));
    return SystemMorphism{std::move(sx), std::move(sy), std::move(idx),
                          std::move(comps)};
  }
  auto px = detail::member_cohomology_pieces(source_model, degree, c);
  auto py = detail::member_cohomology_pieces(target_model, degree, c);
  GroupSystem sx = detail::cohomology_system_from(source_model, degree, px);
  GroupSystem sy = detail::cohomology_system_from(target_model, degree, py);
  std::vector<GroupHom> comps;
  for (long a = 0; a < n; ++a)
    comps.push_back(simplicial::induced_cohom(
        corestrictions[static_cast<std::size_t>(a)], degree,
        px[static_cast<std::size_t>(a)],
        py[static_cast<std::size_t>(idx.map[static_cast<std::size_t>(a)])]));
  return SystemMorphism{std::move(sy), std::move(sx), std::move(idx),
                        std::move(comps)};
}

// Mutually inverse pair of system morphisms up to equivalence: the
// certificate records both round trips against the identities.
struct EquivalenceCertificate {
  systems::EquivalenceResult round_trip_source;
  systems::EquivalenceResult round_trip_target;

  bool accepted() const {
    return round_trip_source.equivalent && round_trip_target.equivalent;
  }
};

inline EquivalenceCertificate verify_system_equivalence(const SystemMorphism& f,
                                                        const SystemMorphism& g) {
  if (g.source != f.target || g.target != f.source)
    throw std::invalid_argument("verify_system_equivalence: maps do not round-trip");
  EquivalenceCertificate cert;
  cert.round_trip_source = systems::morphisms_equivalent(
      systems::compose_morphisms(g, f), systems::identity_morphism(f.source));
  cert.round_trip_target = systems::morphisms_equivalent(
      systems::compose_morphisms(f, g), systems::identity_morphism(f.target));
  return cert;
}

// One degree of the excision audit. The pipeline compares three
// inverse systems: the member cohomology system of the model, the
// system of cut-down members over the same index set, and the system
// of the cut-down model on its own index set. `member_criterion`
// applies the limit-isomorphism test to the first comparison along the
// members where cutting is locally legal; `relabel_criterion` applies
// it to the second. The final verdicts concern the induced maps of
// limits and their compatibility.
struct ExcisionDegreeReport {
  long degree = 0;
  std::vector<long> excisable;
  systems::CriterionReport member_criterion;
  systems::CriterionReport relabel_criterion;
  bool member_limit_iso = false;
  bool relabel_limit_iso = false;
  bool composition_ok = false;
  bool excision_iso = false;

  bool passed() const {
    return member_criterion.holds && relabel_criterion.holds &&
           member_limit_iso && relabel_limit_iso && composition_ok &&
           excision_iso;
  }
};

struct ExcisionReport {
  std::vector<std::string> removed;
  std::vector<ExcisionDegreeReport> degrees;

  bool passed() const {
    for (const auto& d : degrees)
      if (!d.passed()) return false;
    return !degrees.empty();
  }
};

namespace detail {

inline SimplicialPair cut_pair(const SimplicialPair& p,
                               const std::set<std::string>& w) {
  return SimplicialPair(p.total.without_vertices(w), p.sub.without_vertices(w));
}

// Does the member satisfy the star condition for every removed vertex
// it contains?
inline bool locally_excisable(const SimplicialPair& p,
                              const std::set<std::string>& w) {
  for (const auto& v : w) {
    if (!p.total.has_vertex(v)) continue;
    for (const auto& s : p.total.simplices())
      if (std::binary_search(s.begin(), s.end(), v) && !p.sub.contains(s))
        return false;
  }
  return true;
}

}  // namespace detail

inline ExcisionReport excision_pipeline(const FilteredModel& m,
                                        const std::vector<std::string>& removed,
                                        long max_degree, const Coeff& c) {
  // Global legality first; throws with a witness if the stars poke out.
  simplicial::ExcisionResult cut_total = simplicial::excise(m.total, removed);
  std::set<std::string> w(removed.begin(), removed.end());

  std::vector<SimplicialPair> cut_members;
  cut_members.reserve(m.family.size());
  for (const auto& member : m.family)
    cut_members.push_back(detail::cut_pair(member, w));

  std::vector<long> excisable;
  for (long a = 0; a < m.order.size(); ++a)
    if (detail::locally_excisable(m.family[static_cast<std::size_t>(a)], w))
      excisable.push_back(a);

  // Deduplicate the cut members into a model of the cut pair.
  std::vector<SimplicialPair> dedup;
  std::vector<long> where(m.family.size());
  for (std::size_t a = 0; a < cut_members.size(); ++a) {
    long found = -1;
    for (long b = 0; b < static_cast<long>(dedup.size()); ++b)
      if (dedup[static_cast<std::size_t>(b)] == cut_members[a]) {
        found = b;
        break;
      }
    if (found == -1) {
      dedup.push_back(cut_members[a]);
      found = static_cast<long>(dedup.size()) - 1;
    }
    where[a] = found;
  }
  FilteredModel cut_model = build_filtered_model(cut_total.pair, dedup);

  ExcisionReport report;
  report.removed = removed;
  std::vector<long> everything;
  for (long a = 0; a < m.order.size(); ++a) everything.push_back(a);

  for (long degree = 0; degree <= max_degree; ++degree) {
    ExcisionDegreeReport dr;
    dr.degree = degree;
    dr.excisable = excisable;

    auto pa = detail::member_cohomology_pieces(m, degree, c);
    std::vector<simplicial::GradedPiece> pc;
    pc.reserve(cut_members.size());
    for (const auto& p : cut_members)
      pc.push_back(simplicial::cohomology_piece(p, degree, c));

    GroupSystem sa = detail::cohomology_system_from(m, degree, pa);

    GroupSystem sc;
    sc.variance = Variance::inverse;
    sc.index = m.order;
    for (const auto& p : pc) sc.objects.push_back(p.group);
    for (long a = 0; a < m.order.size(); ++a)
      for (long b = 0; b < m.order.size(); ++b)
        if (a != b && m.order.leq(a, b))
          sc.bonds.emplace(
              std::make_pair(a, b),
              simplicial::induced_cohom(
                  simplicial::inclusion_map(cut_members[static_cast<std::size_t>(a)],
                                            cut_members[static_cast<std::size_t>(b)]),
                  degree, pc[static_cast<std::size_t>(a)],
                  pc[static_cast<std::size_t>(b)]));

    std::vector<GroupHom> j_comps;
    for (long a = 0; a < m.order.size(); ++a)
      j_comps.push_back(simplicial::induced_cohom(
          simplicial::inclusion_map(cut_members[static_cast<std::size_t>(a)],
                                    m.family[static_cast<std::size_t>(a)]),
          degree, pc[static_cast<std::size_t>(a)],
          pa[static_cast<std::size_t>(a)]));
    SystemMorphism j{sa, sc, posets::identity_order_map(m.order),
                     std::move(j_comps)};
    dr.member_criterion = systems::check_limit_iso_criterion(j, excisable);

    GroupSystem sb = cohomology_system(cut_model, degree, c);
    std::vector<GroupHom> phi_comps;
    for (long a = 0; a < m.order.size(); ++a)
      phi_comps.push_back(
          abgroup::identity_hom(sb.object(where[static_cast<std::size_t>(a)])));
    OrderMap relabel(m.order, cut_model.order,
                     std::vector<long>(where.begin(), where.end()));
    SystemMorphism phi{sb, sc, std::move(relabel), std::move(phi_comps)};
    dr.relabel_criterion = systems::check_limit_iso_criterion(phi, everything);

    systems::MorphismLimit jhat = systems::limit_of_morphism(j);
    systems::MorphismLimit phihat = systems::limit_of_morphism(phi);
    SystemMorphism incl = induced_system_morphism(
        cut_total.inclusion, cut_model, m, degree, c, Variance::inverse);
    systems::MorphismLimit ihat = systems::limit_of_morphism(incl);

    dr.member_limit_iso = abgroup::is_isomorphism(jhat.map);
    dr.relabel_limit_iso = abgroup::is_isomorphism(phihat.map);
    dr.composition_ok =
        abgroup::hom_equal(abgroup::compose(phihat.map, ihat.map), jhat.map);
    dr.excision_iso = abgroup::is_isomorphism(ihat.map);

    report.degrees.push_back(std::move(dr));
  }
  return report;
}

// Naturality of the coboundary against a map of models: the square of
// system morphisms built from member coboundaries must commute up to
// equivalence, and so must the induced square of limit maps.
struct NaturalityReport {
  ValidationReport source_delta_ok;
  ValidationReport target_delta_ok;
  systems::EquivalenceResult system_square;
  bool limit_square_ok = false;

  bool passed() const {
    return source_delta_ok.ok && target_delta_ok.ok && system_square.equivalent &&
           limit_square_ok;
  }
};

namespace detail {

inline FilteredModel sub_model(const FilteredModel& m) {
  std::vector<SimplicialPair> fam;
  fam.reserve(m.family.size());
  for (const auto& member : m.family)
    fam.push_back(SimplicialPair::absolute(member.sub));
  return build_filtered_model(SimplicialPair::absolute(m.total.sub),
                              std::move(fam));
}

// Coboundary members assembled into a morphism from the sub-model
// system in degree n to the relative system in degree n+1.
inline SystemMorphism delta_morphism(const FilteredModel& m,
                                     const FilteredModel& subm, long degree,
                                     const Coeff& c) {
  auto p_sub = member_cohomology_pieces(subm, degree, c);
  auto p_rel = member_cohomology_pieces(m, degree + 1, c);
  GroupSystem s_sub = cohomology_system_from(subm, degree, p_sub);
  GroupSystem s_rel = cohomology_system_from(m, degree + 1, p_rel);
  std::vector<long> idx;
  for (long a = 0; a < m.order.size(); ++a) idx.push_back(a);
  OrderMap om(m.order, subm.order, std::move(idx));
  std::vector<GroupHom> comps;
  for (long a = 0; a < m.order.size(); ++a)
    comps.push_back(simplicial::coboundary_hom(
        m.family[static_cast<std::size_t>(a)], degree, c,
        p_sub[static_cast<std::size_t>(a)], p_rel[static_cast<std::size_t>(a)]));
  return SystemMorphism{std::move(s_sub), std::move(s_rel), std::move(om),
                        std::move(comps)};
}

}  // namespace detail

inline NaturalityReport naturality_audit(const PairMap& f,
                                         const FilteredModel& source_model,
                                         const FilteredModel& target_model,
                                         long degree, const Coeff& c) {
  if (f.source != source_model.total || f.target != target_model.total)
    throw std::invalid_argument("naturality_audit: map does not connect the models");

  FilteredModel sub_src = detail::sub_model(source_model);
  FilteredModel sub_tgt = detail::sub_model(target_model);

  SystemMorphism delta_src =
      detail::delta_morphism(source_model, sub_src, degree, c);
  SystemMorphism delta_tgt =
      detail::delta_morphism(target_model, sub_tgt, degree, c);

  NaturalityReport report;
  report.source_delta_ok = systems::check_morphism(delta_src);
  report.target_delta_ok = systems::check_morphism(delta_tgt);

  std::map<std::string, std::string> vm0;
  for (const auto& v : source_model.total.sub.vertices())
    vm0[v] = f.vertex_map.at(v);
  PairMap f0(SimplicialPair::absolute(source_model.total.sub),
             SimplicialPair::absolute(target_model.total.sub), std::move(vm0));

  SystemMorphism rel_map = induced_system_morphism(
      f, source_model, target_model, degree + 1, c, Variance::inverse);
  SystemMorphism sub_map =
      induced_system_morphism(f0, sub_src, sub_tgt, degree, c, Variance::inverse);

  SystemMorphism around_src = systems::compose_morphisms(delta_src, sub_map);
  SystemMorphism around_tgt = systems::compose_morphisms(rel_map, delta_tgt);
  report.system_square = systems::morphisms_equivalent(around_src, around_tgt);

  GroupHom lim_src = systems::limit_of_morphism(around_src).map;
  GroupHom lim_tgt = systems::limit_of_morphism(around_tgt).map;
  report.limit_square_ok = abgroup::hom_equal(lim_src, lim_tgt);
  return report;
}

}  // namespace shapelab::shapefunctors
