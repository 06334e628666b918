#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "shapelab/abgroup.hpp"
#include "shapelab/posets.hpp"

namespace shapelab::systems {

using abgroup::FpAbGroup;
using abgroup::GroupHom;
using exactla::IntMatrix;
using posets::DirectedPoset;
using posets::OrderMap;

enum class Variance { direct, inverse };

inline std::string to_string(Variance v) {
  return v == Variance::direct ? "direct" : "inverse";
}

// A system of groups over a finite directed preorder. For a <= b the
// bond keyed (a, b) points X_a -> X_b in a direct system and
// X_b -> X_a in an inverse one. Diagonal bonds are implicit
// identities; an explicitly stored diagonal entry is allowed so that
// sources claiming a non-identity self-bond can be rejected by
// check_system rather than silently ignored.
struct GroupSystem {
  Variance variance = Variance::direct;
  DirectedPoset index = DirectedPoset::singleton();
  std::vector<FpAbGroup> objects;
  std::map<std::pair<long, long>, GroupHom> bonds;

  const FpAbGroup& object(long a) const {
    return objects[static_cast<std::size_t>(a)];
  }

  GroupHom bond(long a, long b) const {
    if (!index.leq(a, b))
      throw std::invalid_argument("bond requested for unrelated indices");
    auto it = bonds.find({a, b});
    if (it != bonds.end()) return it->second;
    if (a == b) return abgroup::identity_hom(object(a));
    throw ValidationError("missing-bond",
                          "no bond stored for " + std::to_string(a) + " <= " +
                              std::to_string(b),
                          {a, b});
  }

  bool operator==(const GroupSystem& o) const {
    return variance == o.variance && index == o.index && objects == o.objects &&
           bonds == o.bonds;
  }
  bool operator!=(const GroupSystem& o) const { return !(*this == o); }
};

inline ValidationReport check_system(const GroupSystem& s) {
  const long n = s.index.size();
  if (static_cast<long>(s.objects.size()) != n)
    return ValidationReport::fail("bad-objects",
                                  "object count does not match index size");
  for (const auto& [key, hom] : s.bonds) {
    auto [a, b] = key;
    if (a < 0 || a >= n || b < 0 || b >= n || !s.index.leq(a, b))
      return ValidationReport::fail(
          "bad-bond-key",
          "bond stored for unrelated pair (" + std::to_string(a) + ", " +
              std::to_string(b) + ")",
          {a, b});
    const FpAbGroup& lo = s.object(a);
    const FpAbGroup& hi = s.object(b);
    const FpAbGroup& want_src = s.variance == Variance::direct ? lo : hi;
    const FpAbGroup& want_tgt = s.variance == Variance::direct ? hi : lo;
    if (hom.source != want_src || hom.target != want_tgt)
      return ValidationReport::fail(
          "bond-endpoints",
          "bond (" + std::to_string(a) + ", " + std::to_string(b) +
              ") has wrong source or target",
          {a, b});
    if (!abgroup::hom_well_defined(hom))
      return ValidationReport::fail(
          "bond-not-well-defined",
          "bond (" + std::to_string(a) + ", " + std::to_string(b) +
              ") does not respect relations",
          {a, b});
  }
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      if (a != b && s.index.leq(a, b) && !s.bonds.count({a, b}))
        return ValidationReport::fail(
            "missing-bond",
            "no bond for " + std::to_string(a) + " <= " + std::to_string(b),
            {a, b});
  for (long a = 0; a < n; ++a) {
    auto it = s.bonds.find({a, a});
    if (it != s.bonds.end() &&
        !abgroup::hom_equal(it->second, abgroup::identity_hom(s.object(a))))
      return ValidationReport::fail(
          "identity-bond",
          "self-bond at " + std::to_string(a) + " is not the identity", {a});
  }
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) {
      if (!s.index.leq(a, b)) continue;
      for (long c = 0; c < n; ++c) {
        if (!s.index.leq(b, c)) continue;
        GroupHom through = s.variance == Variance::direct
                               ? abgroup::compose(s.bond(b, c), s.bond(a, b))
                               : abgroup::compose(s.bond(a, b), s.bond(b, c));
        if (!abgroup::hom_equal(through, s.bond(a, c)))
          return ValidationReport::fail(
              "bond-composition",
              "bonds along " + std::to_string(a) + " <= " + std::to_string(b) +
                  " <= " + std::to_string(c) + " do not compose",
              {a, b, c});
      }
    }
  return ValidationReport::pass();
}

inline const GroupSystem& validate_system(const GroupSystem& s) {
  check_system(s).require();
  return s;
}

// Morphism of systems of one shared variance. For direct systems the
// index map runs source index -> target index and component a maps
// X_a -> Y_{f(a)}. For inverse systems the index map runs target
// index -> source index and component b maps X_{f(b)} -> Y_b; in both
// cases `components` is indexed by index_map.source.
struct SystemMorphism {
  GroupSystem source;
  GroupSystem target;
  OrderMap index_map;
  std::vector<GroupHom> components;
};

inline ValidationReport check_morphism(const SystemMorphism& m) {
  if (m.source.variance != m.target.variance)
    return ValidationReport::fail("variance-mismatch",
                                  "source and target have different variance");
  const bool direct = m.source.variance == Variance::direct;
  const DirectedPoset& dom = direct ? m.source.index : m.target.index;
  const DirectedPoset& cod = direct ? m.target.index : m.source.index;
  if (m.index_map.source != dom || m.index_map.target != cod)
    return ValidationReport::fail("bad-index-map",
                                  "index map endpoints do not match variance");
  if (static_cast<long>(m.components.size()) != dom.size())
    return ValidationReport::fail("bad-components",
                                  "one component per index of " +
                                      std::string(direct ? "the source" : "the target") +
                                      " is required");
  for (long a = 0; a < dom.size(); ++a) {
    const GroupHom& c = m.components[static_cast<std::size_t>(a)];
    const FpAbGroup& want_src =
        direct ? m.source.object(a) : m.source.object(m.index_map(a));
    const FpAbGroup& want_tgt =
        direct ? m.target.object(m.index_map(a)) : m.target.object(a);
    if (c.source != want_src || c.target != want_tgt)
      return ValidationReport::fail(
          "component-endpoints",
          "component " + std::to_string(a) + " has wrong source or target",
          {a});
    if (!abgroup::hom_well_defined(c))
      return ValidationReport::fail(
          "component-not-well-defined",
          "component " + std::to_string(a) + " does not respect relations",
          {a});
  }
  // Compatibility squares with the bonds.
  for (long a = 0; a < dom.size(); ++a)
    for (long b = 0; b < dom.size(); ++b) {
      if (!dom.leq(a, b)) continue;
      GroupHom lhs = direct
                         ? abgroup::compose(
                               m.target.bond(m.index_map(a), m.index_map(b)),
                               m.components[static_cast<std::size_t>(a)])
                         : abgroup::compose(
                               m.components[static_cast<std::size_t>(a)],
                               m.source.bond(m.index_map(a), m.index_map(b)));
      GroupHom rhs = direct
                         ? abgroup::compose(
                               m.components[static_cast<std::size_t>(b)],
                               m.source.bond(a, b))
                         : abgroup::compose(
                               m.target.bond(a, b),
                               m.components[static_cast<std::size_t>(b)]);
      if (!abgroup::hom_equal(lhs, rhs))
        return ValidationReport::fail(
            "square-broken",
            "components at " + std::to_string(a) + " <= " + std::to_string(b) +
                " do not commute with the bonds",
            {a, b});
    }
  return ValidationReport::pass();
}

inline const SystemMorphism& validate_morphism(const SystemMorphism& m) {
  check_morphism(m).require();
  return m;
}

inline SystemMorphism identity_morphism(const GroupSystem& s) {
  std::vector<GroupHom> comps;
  comps.reserve(static_cast<std::size_t>(s.index.size()));
  for (long a = 0; a < s.index.size(); ++a)
    comps.push_back(abgroup::identity_hom(s.object(a)));
  return SystemMorphism{s, s, posets::identity_order_map(s.index),
                        std::move(comps)};
}

inline SystemMorphism compose_morphisms(const SystemMorphism& g,
                                        const SystemMorphism& f) {
  if (f.target != g.source)
    throw std::invalid_argument("compose_morphisms: inner systems differ");
  const bool direct = f.source.variance == Variance::direct;
  if (direct) {
    OrderMap idx = posets::compose(g.index_map, f.index_map);
    std::vector<GroupHom> comps;
    for (long a = 0; a < f.source.index.size(); ++a)
      comps.push_back(abgroup::compose(
          g.components[static_cast<std::size_t>(f.index_map(a))],
          f.components[static_cast<std::size_t>(a)]));
    return SystemMorphism{f.source, g.target, std::move(idx), std::move(comps)};
  }
  OrderMap idx = posets::compose(f.index_map, g.index_map);
  std::vector<GroupHom> comps;
  for (long c = 0; c < g.target.index.size(); ++c)
    comps.push_back(abgroup::compose(
        g.components[static_cast<std::size_t>(c)],
        f.components[static_cast<std::size_t>(g.index_map(c))]));
  return SystemMorphism{f.source, g.target, std::move(idx), std::move(comps)};
}

// Outcome of the equivalence test. On success `witnesses[a]` records
// the index at which the two branches were reconciled; on failure
// `failed_index` is the first index where no reconciling bound exists.
struct EquivalenceResult {
  bool equivalent = true;
  long failed_index = -1;
  std::vector<long> witnesses;
};

// Two morphisms are equivalent when at every index their components
// agree after pushing along bonds to a common deeper stage (for direct
// systems) or after restricting along bonds from a common earlier
// stage (for inverse systems).
inline EquivalenceResult morphisms_equivalent(const SystemMorphism& f,
                                              const SystemMorphism& g) {
  if (f.source != g.source || f.target != g.target)
    throw std::invalid_argument("morphisms_equivalent: endpoints differ");
  const bool direct = f.source.variance == Variance::direct;
  EquivalenceResult r;
  const long dom = direct ? f.source.index.size() : f.target.index.size();
  for (long a = 0; a < dom; ++a) {
    const long fa = f.index_map(a);
    const long ga = g.index_map(a);
    bool reconciled = false;
    if (direct) {
      const DirectedPoset& t = f.target.index;
      for (long u = 0; u < t.size() && !reconciled; ++u) {
        if (!t.leq(fa, u) || !t.leq(ga, u)) continue;
        GroupHom lhs = abgroup::compose(
            f.target.bond(fa, u), f.components[static_cast<std::size_t>(a)]);
        GroupHom rhs = abgroup::compose(
            g.target.bond(ga, u), g.components[static_cast<std::size_t>(a)]);
        if (abgroup::hom_equal(lhs, rhs)) {
          r.witnesses.push_back(u);
          reconciled = true;
        }
      }
    } else {
      const DirectedPoset& sidx = f.source.index;
      for (long u = 0; u < sidx.size() && !reconciled; ++u) {
        if (!sidx.leq(fa, u) || !sidx.leq(ga, u)) continue;
        GroupHom lhs = abgroup::compose(
            f.components[static_cast<std::size_t>(a)], f.source.bond(fa, u));
        GroupHom rhs = abgroup::compose(
            g.components[static_cast<std::size_t>(a)], g.source.bond(ga, u));
        if (abgroup::hom_equal(lhs, rhs)) {
          r.witnesses.push_back(u);
          reconciled = true;
        }
      }
    }
    if (!reconciled) {
      r.equivalent = false;
      r.failed_index = a;
      r.witnesses.clear();
      return r;
    }
  }
  return r;
}

// Colimit or limit of a system, together with enough construction data
// to produce mediating morphisms afterwards. `legs` are the canonical
// injections X_a -> L (direct) or projections L -> X_a (inverse).
struct LimitResult {
  Variance variance = Variance::direct;
  FpAbGroup group = FpAbGroup::trivial();
  std::vector<GroupHom> legs;
  std::vector<long> offsets;        // direct: generator block offset per index
  IntMatrix family_basis;           // inverse: stacked thread generators
  IntMatrix member_relations;       // inverse: block diagonal of object relations
};

namespace detail {

inline std::vector<std::pair<long, long>> comparable_pairs(const DirectedPoset& p) {
  std::vector<std::pair<long, long>> ps;
  for (long a = 0; a < p.size(); ++a)
    for (long b = 0; b < p.size(); ++b)
      if (a != b && p.leq(a, b)) ps.emplace_back(a, b);
  return ps;
}

inline IntMatrix drop_zero_columns(const IntMatrix& m) {
  std::vector<long> keep;
  for (long j = 0; j < m.cols(); ++j) {
    bool zero = true;
    for (long i = 0; i < m.rows() && zero; ++i) zero = m.at(i, j) == 0;
    if (!zero) keep.push_back(j);
  }
  IntMatrix out(m.rows(), static_cast<long>(keep.size()));
  for (long k = 0; k < out.cols(); ++k)
    for (long i = 0; i < m.rows(); ++i)
      out.at(i, k) = m.at(i, keep[static_cast<std::size_t>(k)]);
  return out;
}

}  // namespace detail

// Colimit of a direct system: stack all object presentations and glue
// each generator to its image under every bond.
inline LimitResult colimit(const GroupSystem& s) {
  if (s.variance != Variance::direct)
    throw std::invalid_argument("colimit requires a direct system");
  const long n = s.index.size();
  std::vector<long> off(static_cast<std::size_t>(n) + 1, 0);
  for (long a = 0; a < n; ++a)
    off[static_cast<std::size_t>(a) + 1] =
        off[static_cast<std::size_t>(a)] + s.object(a).gens();
  const long total = off[static_cast<std::size_t>(n)];

  std::vector<IntMatrix> rels;
  for (long a = 0; a < n; ++a) rels.push_back(s.object(a).relations());
  IntMatrix block = exactla::block_diag(rels);
  // block has `total` rows already; pad with gluing columns.
  auto pairs = detail::comparable_pairs(s.index);
  long glue_cols = 0;
  for (auto& [a, b] : pairs) glue_cols += s.object(a).gens();
  IntMatrix glue(total, glue_cols);
  long col = 0;
  for (auto& [a, b] : pairs) {
    IntMatrix m = s.bond(a, b).matrix;  // X_a -> X_b on generators
    for (long j = 0; j < s.object(a).gens(); ++j, ++col) {
      for (long i = 0; i < m.rows(); ++i)
        glue.at(off[static_cast<std::size_t>(b)] + i, col) = m.at(i, j);
      glue.at(off[static_cast<std::size_t>(a)] + j, col) -= 1;
    }
  }
  FpAbGroup g(total, exactla::hstack(block, glue));

  LimitResult out;
  out.variance = Variance::direct;
  out.group = g;
  out.offsets.assign(off.begin(), off.end() - 1);
  for (long a = 0; a < n; ++a) {
    IntMatrix inj(total, s.object(a).gens());
    for (long j = 0; j < s.object(a).gens(); ++j)
      inj.at(off[static_cast<std::size_t>(a)] + j, j) = 1;
    out.legs.push_back(GroupHom(s.object(a), g, std::move(inj)));
  }
  return out;
}

// Limit of an inverse system: compatible threads. A thread assigns a
// chain vector to every index such that each bond carries the deeper
// entry onto the shallower one modulo relations; slack variables absorb
// the "modulo relations" part.
inline LimitResult limit(const GroupSystem& s) {
  if (s.variance != Variance::inverse)
    throw std::invalid_argument("limit requires an inverse system");
  const long n = s.index.size();
  std::vector<long> off(static_cast<std::size_t>(n) + 1, 0);
  for (long a = 0; a < n; ++a)
    off[static_cast<std::size_t>(a) + 1] =
        off[static_cast<std::size_t>(a)] + s.object(a).gens();
  const long total = off[static_cast<std::size_t>(n)];

  auto pairs = detail::comparable_pairs(s.index);
  long rows = 0, slack = 0;
  for (auto& [a, b] : pairs) {
    rows += s.object(a).gens();
    slack += s.object(a).relations().cols();
  }
  IntMatrix eq(rows, total + slack);
  long ro = 0, so = total;
  for (auto& [a, b] : pairs) {
    const IntMatrix& m = s.bond(a, b).matrix;  // X_b -> X_a on generators
    const IntMatrix& ra = s.object(a).relations();
    for (long i = 0; i < s.object(a).gens(); ++i) {
      eq.at(ro + i, off[static_cast<std::size_t>(a)] + i) = 1;
      for (long j = 0; j < m.cols(); ++j)
        if (m.at(i, j) != 0)
          eq.at(ro + i, off[static_cast<std::size_t>(b)] + j) = -m.at(i, j);
      for (long j = 0; j < ra.cols(); ++j)
        if (ra.at(i, j) != 0) eq.at(ro + i, so + j) = -ra.at(i, j);
    }
    ro += s.object(a).gens();
    so += ra.cols();
  }

  IntMatrix threads = exactla::kernel_basis(eq).take_rows(0, total);
  IntMatrix basis = detail::drop_zero_columns(threads);

  std::vector<IntMatrix> rels;
  for (long a = 0; a < n; ++a) rels.push_back(s.object(a).relations());
  IntMatrix block = exactla::block_diag(rels);

  IntMatrix rel_full = exactla::kernel_basis(exactla::hstack(basis, block));
  FpAbGroup g(basis.cols(), rel_full.take_rows(0, basis.cols()));

  LimitResult out;
  out.variance = Variance::inverse;
  out.group = g;
  out.family_basis = basis;
  out.member_relations = block;
  for (long a = 0; a < n; ++a)
    out.legs.push_back(GroupHom(
        g, s.object(a),
        basis.take_rows(off[static_cast<std::size_t>(a)],
                        off[static_cast<std::size_t>(a) + 1])));
  return out;
}

// Factor a compatible family through the (co)limit. For a direct
// system the family is a cocone f_a : X_a -> Y; for an inverse system
// a cone f_a : Y -> X_a. Incompatible families are rejected with the
// offending index pair.
inline GroupHom mediating_morphism(const GroupSystem& s, const LimitResult& l,
                                   const std::vector<GroupHom>& family) {
  const long n = s.index.size();
  if (static_cast<long>(family.size()) != n)
    throw std::invalid_argument("mediating_morphism: one map per index required");
  if (l.variance != s.variance)
    throw std::invalid_argument("mediating_morphism: variance mismatch");

  if (s.variance == Variance::direct) {
    const FpAbGroup& y = family.empty() ? FpAbGroup::trivial() : family[0].target;
    for (long a = 0; a < n; ++a) {
      if (family[static_cast<std::size_t>(a)].target != y)
        throw std::invalid_argument("mediating_morphism: cocone targets differ");
      if (family[static_cast<std::size_t>(a)].source != s.object(a))
        throw std::invalid_argument("mediating_morphism: cocone source mismatch");
    }
    for (long a = 0; a < n; ++a)
      for (long b = 0; b < n; ++b)
        if (a != b && s.index.leq(a, b) &&
            !abgroup::hom_equal(
                abgroup::compose(family[static_cast<std::size_t>(b)],
                                 s.bond(a, b)),
                family[static_cast<std::size_t>(a)]))
          throw ValidationError("incompatible-family",
                                "cocone breaks at " + std::to_string(a) +
                                    " <= " + std::to_string(b),
                                {a, b});
    IntMatrix m(y.gens(), l.group.gens());
    for (long a = 0; a < n; ++a) {
      const IntMatrix& fa = family[static_cast<std::size_t>(a)].matrix;
      for (long j = 0; j < fa.cols(); ++j)
        for (long i = 0; i < fa.rows(); ++i)
          m.at(i, l.offsets[static_cast<std::size_t>(a)] + j) = fa.at(i, j);
    }
    return GroupHom(l.group, y, std::move(m));
  }

  const FpAbGroup& y = family.empty() ? FpAbGroup::trivial() : family[0].source;
  for (long a = 0; a < n; ++a) {
    if (family[static_cast<std::size_t>(a)].source != y)
      throw std::invalid_argument("mediating_morphism: cone sources differ");
    if (family[static_cast<std::size_t>(a)].target != s.object(a))
      throw std::invalid_argument("mediating_morphism: cone target mismatch");
  }
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      if (a != b && s.index.leq(a, b) &&
          !abgroup::hom_equal(
              abgroup::compose(s.bond(a, b), family[static_cast<std::size_t>(b)]),
              family[static_cast<std::size_t>(a)]))
        throw ValidationError("incompatible-family",
                              "cone breaks at " + std::to_string(a) + " <= " +
                                  std::to_string(b),
                              {a, b});
  exactla::LinearSolver solver(
      exactla::hstack(l.family_basis, l.member_relations));
  IntMatrix m(l.group.gens(), y.gens());
  for (long k = 0; k < y.gens(); ++k) {
    std::vector<Int> stacked;
    stacked.reserve(static_cast<std::size_t>(l.family_basis.rows()));
    for (long a = 0; a < n; ++a) {
      const IntMatrix& fa = family[static_cast<std::size_t>(a)].matrix;
      for (long i = 0; i < fa.rows(); ++i) stacked.push_back(fa.at(i, k));
    }
    auto t = solver.solve(stacked);
    if (!t)
      throw std::logic_error("compatible cone fails to factor through limit");
    for (long i = 0; i < l.group.gens(); ++i)
      m.at(i, k) = (*t)[static_cast<std::size_t>(i)];
  }
  return GroupHom(y, l.group, std::move(m));
}

// The map a morphism of systems induces between colimits (direct) or
// limits (inverse), packaged with both ends.
struct MorphismLimit {
  LimitResult source;
  LimitResult target;
  GroupHom map;
};

inline MorphismLimit limit_of_morphism(const SystemMorphism& f) {
  check_morphism(f).require();
  if (f.source.variance == Variance::direct) {
    LimitResult ls = colimit(f.source);
    LimitResult lt = colimit(f.target);
    std::vector<GroupHom> cocone;
    for (long a = 0; a < f.source.index.size(); ++a)
      cocone.push_back(abgroup::compose(
          lt.legs[static_cast<std::size_t>(f.index_map(a))],
          f.components[static_cast<std::size_t>(a)]));
    GroupHom m = mediating_morphism(f.source, ls, cocone);
    return MorphismLimit{std::move(ls), std::move(lt), std::move(m)};
  }
  LimitResult ls = limit(f.source);
  LimitResult lt = limit(f.target);
  std::vector<GroupHom> cone;
  for (long b = 0; b < f.target.index.size(); ++b)
    cone.push_back(abgroup::compose(
        f.components[static_cast<std::size_t>(b)],
        ls.legs[static_cast<std::size_t>(f.index_map(b))]));
  GroupHom m = mediating_morphism(f.target, lt, cone);
  return MorphismLimit{std::move(ls), std::move(lt), std::move(m)};
}

// Restriction of a system to a directed cofinal subset, with the
// canonical comparison morphism (into the original system for direct
// variance, out of it for inverse variance).
struct CofinalRestriction {
  GroupSystem subsystem;
  SystemMorphism comparison;
  std::vector<long> elements;
};

inline CofinalRestriction restrict_to_cofinal(const GroupSystem& s,
                                              const std::vector<long>& sub) {
  for (long a : sub)
    for (long b : sub) {
      bool bounded = false;
      for (long c : sub)
        if (s.index.leq(a, c) && s.index.leq(b, c)) {
          bounded = true;
          break;
        }
      if (!bounded)
        throw ValidationError("subset-not-directed",
                              "no bound for " + std::to_string(a) + " and " +
                                  std::to_string(b) + " inside the subset",
                              {a, b});
    }
  for (long a = 0; a < s.index.size(); ++a) {
    bool dominated = false;
    for (long c : sub)
      if (s.index.leq(a, c)) {
        dominated = true;
        break;
      }
    if (!dominated)
      throw ValidationError("subset-not-cofinal",
                            "element " + std::to_string(a) +
                                " is not below the subset",
                            {a});
  }

  DirectedPoset q = posets::restrict_poset(s.index, sub);
  GroupSystem sub_sys;
  sub_sys.variance = s.variance;
  sub_sys.index = q;
  for (long i = 0; i < q.size(); ++i)
    sub_sys.objects.push_back(s.object(sub[static_cast<std::size_t>(i)]));
  for (long i = 0; i < q.size(); ++i)
    for (long j = 0; j < q.size(); ++j)
      if (i != j && q.leq(i, j))
        sub_sys.bonds.emplace(std::make_pair(i, j),
                              s.bond(sub[static_cast<std::size_t>(i)],
                                     sub[static_cast<std::size_t>(j)]));

  std::vector<GroupHom> comps;
  for (long i = 0; i < q.size(); ++i)
    comps.push_back(abgroup::identity_hom(sub_sys.object(i)));
  OrderMap inclusion(q, s.index, std::vector<long>(sub.begin(), sub.end()));
  SystemMorphism cmp =
      s.variance == Variance::direct
          ? SystemMorphism{sub_sys, s, inclusion, std::move(comps)}
          : SystemMorphism{s, sub_sys, inclusion, std::move(comps)};
  return CofinalRestriction{std::move(sub_sys), std::move(cmp), sub};
}

// Transport of a system along an order isomorphism of index sets with
// an isomorphism chosen at every object; the comparison morphism
// relates the original system to the transported one.
struct Reindexing {
  GroupSystem system;
  SystemMorphism comparison;
};

inline Reindexing reindex_along(const GroupSystem& s, const OrderMap& j,
                                const std::vector<GroupHom>& isos) {
  if (j.source != s.index)
    throw std::invalid_argument("reindex_along: map source is not the index");
  const long n = s.index.size();
  if (j.target.size() != n)
    throw ValidationError("not-an-order-iso", "index sets have different sizes");
  std::vector<long> inv(static_cast<std::size_t>(n), -1);
  for (long a = 0; a < n; ++a) {
    if (inv[static_cast<std::size_t>(j(a))] != -1)
      throw ValidationError("not-an-order-iso",
                            "map is not injective at " + std::to_string(a), {a});
    inv[static_cast<std::size_t>(j(a))] = a;
  }
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      if (s.index.leq(a, b) != j.target.leq(j(a), j(b)))
        throw ValidationError("not-an-order-iso",
                              "order is not reflected at (" + std::to_string(a) +
                                  ", " + std::to_string(b) + ")",
                              {a, b});
  if (static_cast<long>(isos.size()) != n)
    throw std::invalid_argument("reindex_along: one isomorphism per index");
  for (long a = 0; a < n; ++a) {
    if (isos[static_cast<std::size_t>(a)].source != s.object(a))
      throw std::invalid_argument("reindex_along: isomorphism source mismatch");
    if (!abgroup::is_isomorphism(isos[static_cast<std::size_t>(a)]))
      throw ValidationError("component-not-iso",
                            "map at index " + std::to_string(a) +
                                " is not an isomorphism",
                            {a});
  }

  GroupSystem out;
  out.variance = s.variance;
  out.index = j.target;
  out.objects.reserve(static_cast<std::size_t>(n));
  for (long q = 0; q < n; ++q)
    out.objects.push_back(isos[static_cast<std::size_t>(inv[static_cast<std::size_t>(q)])].target);
  for (long q = 0; q < n; ++q)
    for (long r = 0; r < n; ++r) {
      if (q == r || !j.target.leq(q, r)) continue;
      long a = inv[static_cast<std::size_t>(q)];
      long b = inv[static_cast<std::size_t>(r)];
      GroupHom conj =
          s.variance == Variance::direct
              ? abgroup::compose(
                    isos[static_cast<std::size_t>(b)],
                    abgroup::compose(s.bond(a, b),
                                     abgroup::inverse_hom(
                                         isos[static_cast<std::size_t>(a)])))
              : abgroup::compose(
                    isos[static_cast<std::size_t>(a)],
                    abgroup::compose(s.bond(a, b),
                                     abgroup::inverse_hom(
                                         isos[static_cast<std::size_t>(b)])));
      out.bonds.emplace(std::make_pair(q, r), std::move(conj));
    }

  if (s.variance == Variance::direct) {
    SystemMorphism cmp{s, out, j, isos};
    return Reindexing{std::move(out), std::move(cmp)};
  }
  std::vector<long> invmap(inv.begin(), inv.end());
  OrderMap back(j.target, s.index, std::move(invmap));
  std::vector<GroupHom> comps;
  for (long q = 0; q < n; ++q)
    comps.push_back(isos[static_cast<std::size_t>(inv[static_cast<std::size_t>(q)])]);
  SystemMorphism cmp{s, out, std::move(back), std::move(comps)};
  return Reindexing{std::move(out), std::move(cmp)};
}

// Sufficient criterion for a morphism of inverse systems to induce an
// isomorphism of limits: a directed cofinal set of target indices with
// isomorphic components, with the index map hitting a cofinal part of
// the source index.
struct CriterionReport {
  bool holds = true;
  std::string failed_condition;
  std::vector<long> witness;
};

inline CriterionReport check_limit_iso_criterion(const SystemMorphism& f,
                                                 const std::vector<long>& bprime) {
  if (f.source.variance != Variance::inverse)
    throw std::invalid_argument(
        "check_limit_iso_criterion applies to inverse systems");
  CriterionReport r;
  if (!posets::is_directed_subset(bprime, f.target.index)) {
    r.holds = false;
    r.failed_condition = "subset-not-directed";
    return r;
  }
  for (long a = 0; a < f.target.index.size(); ++a) {
    bool dominated = false;
    for (long c : bprime)
      if (f.target.index.leq(a, c)) {
        dominated = true;
        break;
      }
    if (!dominated) {
      r.holds = false;
      r.failed_condition = "subset-not-cofinal";
      r.witness = {a};
      return r;
    }
  }
  std::vector<long> image;
  for (long b = 0; b < f.target.index.size(); ++b) {
    long v = f.index_map(b);
    bool seen = false;
    for (long w : image) seen = seen || w == v;
    if (!seen) image.push_back(v);
  }
  for (long a = 0; a < f.source.index.size(); ++a) {
    bool dominated = false;
    for (long c : image)
      if (f.source.index.leq(a, c)) {
        dominated = true;
        break;
      }
    if (!dominated) {
      r.holds = false;
      r.failed_condition = "image-not-cofinal";
      r.witness = {a};
      return r;
    }
  }
  for (long b : bprime)
    if (!abgroup::is_isomorphism(f.components[static_cast<std::size_t>(b)])) {
      r.holds = false;
      r.failed_condition = "component-not-iso";
      r.witness = {b};
      return r;
    }
  return r;
}

}  // namespace shapelab::systems
