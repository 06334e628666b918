#pragma once

#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "shapelab/shapefunctors.hpp"
#include "shapelab/systems.hpp"

// Seeded generators of valid random instances: directed preorders,
// systems with honestly composing bonds, morphisms, equivalent
// perturbations, complexes and filtered models. Used by the randomized
// audits of the command line tool and by the test suite.
namespace shapelab::random_instances {

using abgroup::FpAbGroup;
using abgroup::GroupHom;
using exactla::IntMatrix;
using posets::DirectedPoset;
using posets::OrderMap;
using simplicial::SimplicialComplex;
using simplicial::SimplicialPair;
using systems::GroupSystem;
using systems::SystemMorphism;
using systems::Variance;

using Rng = std::mt19937_64;

// Uniform in [lo, hi]; plain modulo keeps the stream identical across
// standard library implementations.
inline long pick(Rng& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

inline IntMatrix random_matrix(Rng& rng, long rows, long cols, long max_abs) {
  IntMatrix m(rows, cols);
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) m.at(i, j) = pick(rng, -max_abs, max_abs);
  return m;
}

// Unimodular matrix built from elementary operations, returned with
// its exact inverse.
struct UnimodularPair {
  IntMatrix u, uinv;
};

inline UnimodularPair random_unimodular(Rng& rng, long n, long ops) {
  UnimodularPair p{IntMatrix::identity(n), IntMatrix::identity(n)};
  for (long k = 0; k < ops && n > 0; ++k) {
    long kind = pick(rng, 0, 2);
    long i = pick(rng, 0, n - 1);
    long j = pick(rng, 0, n - 1);
    if (kind == 0 && i != j) {
      p.u.swap_rows(i, j);
      p.uinv.swap_cols(i, j);
    } else if (kind == 1 && i != j) {
      Int c = pick(rng, -2, 2);
      p.u.add_row_multiple(i, j, c);
      // (I + c e_ij)^-1 = I - c e_ij, applied on the right.
      p.uinv.add_col_multiple(j, i, -c);
    } else {
      p.u.negate_row(i);
      for (long r = 0; r < n; ++r) p.uinv.at(r, i) = -p.uinv.at(r, i);
    }
  }
  return p;
}

inline DirectedPoset random_directed_poset(Rng& rng, long max_size) {
  long n = pick(rng, 1, max_size);
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  auto set = [&](long a, long b) {
    leq[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)] = 1;
  };
  for (long a = 0; a < n; ++a) set(a, a);
  for (long a = 0; a < n; ++a)
    for (long b = a + 1; b < n; ++b)
      if (pick(rng, 0, 99) < 35) set(a, b);
  // Occasionally identify a pair, making the preorder genuinely
  // non-antisymmetric.
  if (n > 1 && pick(rng, 0, 3) == 0) {
    long a = pick(rng, 0, n - 2);
    long b = pick(rng, a + 1, n - 1);
    set(a, b);
    set(b, a);
  }
  // Everything sits below the last element, so upper bounds exist.
  for (long a = 0; a < n; ++a) set(a, n - 1);
  // Transitive closure.
  for (long k = 0; k < n; ++k)
    for (long a = 0; a < n; ++a)
      for (long b = 0; b < n; ++b)
        if (leq[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(k)] &&
            leq[static_cast<std::size_t>(k) * n + static_cast<std::size_t>(b)])
          set(a, b);
  return DirectedPoset::create(n, std::move(leq));
}

// Monotone height: the number of elements at or below each index.
inline std::vector<long> level_function(const DirectedPoset& p) {
  std::vector<long> lv(static_cast<std::size_t>(p.size()), 0);
  for (long a = 0; a < p.size(); ++a)
    for (long b = 0; b < p.size(); ++b)
      if (p.leq(b, a)) ++lv[static_cast<std::size_t>(a)];
  return lv;
}

// Random valid system. All objects are change-of-basis copies of one
// core presentation; the bond from level l to level l' multiplies by
// s^(l'-l) in core coordinates. Composition then holds exactly and
// every bond respects the relations.
inline GroupSystem random_system(Rng& rng, Variance variance, long max_poset,
                                 long max_rank, long max_torsion) {
  GroupSystem s;
  s.variance = variance;
  s.index = random_directed_poset(rng, max_poset);
  const long n = s.index.size();
  const long g = pick(rng, 1, max_rank);
  const long torsion_count = pick(rng, 0, g);
  IntMatrix core(g, torsion_count);
  for (long i = 0; i < torsion_count; ++i) core.at(i, i) = pick(rng, 2, max_torsion);
  const Int scalar = pick(rng, 1, 3);
  std::vector<long> lv = level_function(s.index);

  std::vector<UnimodularPair> u;
  u.reserve(static_cast<std::size_t>(n));
  for (long a = 0; a < n; ++a) {
    u.push_back(random_unimodular(rng, g, pick(rng, 0, 4)));
    s.objects.push_back(FpAbGroup(g, u.back().u * core));
  }
  auto power = [&](long e) {
    Int v = 1;
    for (long k = 0; k < e; ++k) v *= scalar;
    return v;
  };
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) {
      if (a == b || !s.index.leq(a, b)) continue;
      long diff = lv[static_cast<std::size_t>(b)] - lv[static_cast<std::size_t>(a)];
      if (diff < 0) diff = 0;  // equivalent elements share a level
      Int f = power(diff);
      IntMatrix scaled(g, g);
      for (long i = 0; i < g; ++i) scaled.at(i, i) = f;
      if (variance == Variance::direct) {
        IntMatrix m = u[static_cast<std::size_t>(b)].u * scaled *
                      u[static_cast<std::size_t>(a)].uinv;
        s.bonds.emplace(std::make_pair(a, b),
                        GroupHom(s.object(a), s.object(b), std::move(m)));
      } else {
        IntMatrix m = u[static_cast<std::size_t>(a)].u * scaled *
                      u[static_cast<std::size_t>(b)].uinv;
        s.bonds.emplace(std::make_pair(a, b),
                        GroupHom(s.object(b), s.object(a), std::move(m)));
      }
    }
  return s;
}

// Monotone map with u(a) >= a: identity below a random level
// threshold, the top element at or above it.
inline std::vector<long> random_inflationary(Rng& rng, const DirectedPoset& p) {
  std::vector<long> lv = level_function(p);
  long top = *posets::find_top(p);
  long max_lv = 0;
  for (long v : lv) max_lv = std::max(max_lv, v);
  long threshold = pick(rng, 0, max_lv + 1);
  std::vector<long> u(static_cast<std::size_t>(p.size()));
  for (long a = 0; a < p.size(); ++a)
    u[static_cast<std::size_t>(a)] =
        lv[static_cast<std::size_t>(a)] >= threshold ? top : a;
  return u;
}

// Random endomorphism of a system: identity, a scalar multiple of it,
// or a push along an inflationary index map with bonds as components.
inline SystemMorphism random_endomorphism(Rng& rng, const GroupSystem& s) {
  long style = pick(rng, 0, 2);
  if (style == 0) return systems::identity_morphism(s);
  if (style == 1) {
    Int c = pick(rng, 0, 3);
    SystemMorphism m = systems::identity_morphism(s);
    for (auto& comp : m.components) {
      IntMatrix scaled(comp.matrix.rows(), comp.matrix.cols());
      for (long i = 0; i < scaled.rows(); ++i) scaled.at(i, i) = c;
      comp = GroupHom(comp.source, comp.target, std::move(scaled));
    }
    return m;
  }
  std::vector<long> u = random_inflationary(rng, s.index);
  OrderMap om(s.index, s.index, u);
  std::vector<GroupHom> comps;
  for (long a = 0; a < s.index.size(); ++a)
    comps.push_back(s.bond(a, u[static_cast<std::size_t>(a)]));
  return SystemMorphism{s, s, std::move(om), std::move(comps)};
}

// A morphism equivalent to the given one: push every component deeper
// along the bonds of the appropriate side.
inline SystemMorphism perturb_equivalent(Rng& rng, const SystemMorphism& f) {
  if (f.source.variance == Variance::direct) {
    std::vector<long> u = random_inflationary(rng, f.target.index);
    std::vector<long> idx(static_cast<std::size_t>(f.source.index.size()));
    std::vector<GroupHom> comps;
    for (long a = 0; a < f.source.index.size(); ++a) {
      long fa = f.index_map(a);
      idx[static_cast<std::size_t>(a)] = u[static_cast<std::size_t>(fa)];
      comps.push_back(abgroup::compose(
          f.target.bond(fa, u[static_cast<std::size_t>(fa)]),
          f.components[static_cast<std::size_t>(a)]));
    }
    OrderMap om(f.source.index, f.target.index, std::move(idx));
    return SystemMorphism{f.source, f.target, std::move(om), std::move(comps)};
  }
  std::vector<long> u = random_inflationary(rng, f.source.index);
  std::vector<long> idx(static_cast<std::size_t>(f.target.index.size()));
  std::vector<GroupHom> comps;
  for (long b = 0; b < f.target.index.size(); ++b) {
    long fb = f.index_map(b);
    idx[static_cast<std::size_t>(b)] = u[static_cast<std::size_t>(fb)];
    comps.push_back(abgroup::compose(
        f.components[static_cast<std::size_t>(b)],
        f.source.bond(fb, u[static_cast<std::size_t>(fb)])));
  }
  OrderMap om(f.target.index, f.source.index, std::move(idx));
  return SystemMorphism{f.source, f.target, std::move(om), std::move(comps)};
}

// Reindexing data: a transported copy of the index set along a random
// permutation plus change-of-basis isomorphisms at every object.
struct ReindexInput {
  OrderMap along;
  std::vector<GroupHom> isos;
};

inline ReindexInput random_reindex_input(Rng& rng, const GroupSystem& s) {
  const long n = s.index.size();
  std::vector<long> perm(static_cast<std::size_t>(n));
  for (long a = 0; a < n; ++a) perm[static_cast<std::size_t>(a)] = a;
  for (long a = n - 1; a > 0; --a)
    std::swap(perm[static_cast<std::size_t>(a)],
              perm[static_cast<std::size_t>(pick(rng, 0, a))]);
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      if (s.index.leq(a, b))
        leq[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)]) * n +
            static_cast<std::size_t>(perm[static_cast<std::size_t>(b)])] = 1;
  DirectedPoset q = DirectedPoset::create(n, std::move(leq));
  OrderMap along(s.index, q, perm);
  std::vector<GroupHom> isos;
  for (long a = 0; a < n; ++a) {
    UnimodularPair v = random_unimodular(rng, s.object(a).gens(), pick(rng, 0, 3));
    FpAbGroup tgt(s.object(a).gens(), v.u * s.object(a).relations());
    isos.push_back(GroupHom(s.object(a), tgt, v.u));
  }
  return ReindexInput{std::move(along), std::move(isos)};
}

// ---------------------------------------------------------------------------
// Simplicial instances

inline SimplicialComplex random_complex(Rng& rng, long max_vertices,
                                        long max_cells, long max_dim) {
  long nv = pick(rng, 1, max_vertices);
  std::vector<std::string> pool;
  for (long v = 0; v < nv; ++v) pool.push_back("v" + std::to_string(v));
  long cells = pick(rng, 1, max_cells);
  std::vector<simplicial::Simplex> top;
  for (long c = 0; c < cells; ++c) {
    long size = pick(rng, 1, std::min(max_dim + 1, nv));
    std::set<std::string> cell;
    while (static_cast<long>(cell.size()) < size)
      cell.insert(pool[static_cast<std::size_t>(pick(rng, 0, nv - 1))]);
    top.push_back(simplicial::Simplex(cell.begin(), cell.end()));
  }
  return SimplicialComplex::from_simplices(top);
}

// Random subcomplex: the closure of a random subset of simplices.
inline SimplicialComplex random_subcomplex(Rng& rng, const SimplicialComplex& k,
                                           long keep_percent) {
  std::vector<simplicial::Simplex> chosen;
  for (const auto& s : k.simplices())
    if (pick(rng, 0, 99) < keep_percent) chosen.push_back(s);
  if (chosen.empty() && !k.empty()) chosen.push_back(*k.simplices().begin());
  return SimplicialComplex::from_simplices(chosen);
}

inline SimplicialPair random_pair(Rng& rng, long max_vertices, long max_cells,
                                  long max_dim) {
  SimplicialComplex total = random_complex(rng, max_vertices, max_cells, max_dim);
  SimplicialComplex sub = random_subcomplex(rng, total, 40);
  return SimplicialPair(std::move(total), std::move(sub));
}

// Random filtered model of an absolute complex: a handful of random
// subcomplexes, a chain, or a star cover, always completed by the
// total complex itself.
inline shapefunctors::FilteredModel random_model(Rng& rng, long max_vertices,
                                                 long max_cells, long max_dim,
                                                 long max_members) {
  SimplicialComplex total = random_complex(rng, max_vertices, max_cells, max_dim);
  std::vector<SimplicialComplex> family;
  long style = pick(rng, 0, 2);
  long members = pick(rng, 1, std::max(1L, max_members - 1));
  if (style == 0) {
    for (long i = 0; i < members; ++i)
      family.push_back(random_subcomplex(rng, total, pick(rng, 20, 80)));
  } else if (style == 1) {
    SimplicialComplex acc;
    for (long i = 0; i < members; ++i) {
      acc = acc.union_with(random_subcomplex(rng, total, 30));
      family.push_back(acc);
    }
  } else {
    for (const auto& v : total.vertices()) {
      family.push_back(total.closed_star(v));
      if (static_cast<long>(family.size()) >= max_members - 1) break;
    }
  }
  family.push_back(total);
  return shapefunctors::build_filtered_model(std::move(total), std::move(family));
}

// Random model of a pair: member subcomplexes are cut with the total
// subcomplex.
inline shapefunctors::FilteredModel random_pair_model(Rng& rng, long max_vertices,
                                                      long max_cells, long max_dim,
                                                      long max_members) {
  SimplicialPair total = random_pair(rng, max_vertices, max_cells, max_dim);
  std::vector<SimplicialPair> family;
  long members = pick(rng, 1, std::max(1L, max_members - 1));
  for (long i = 0; i < members; ++i) {
    SimplicialComplex k = random_subcomplex(rng, total.total, pick(rng, 20, 80));
    SimplicialComplex a = k.intersect_with(total.sub);
    family.push_back(SimplicialPair(std::move(k), std::move(a)));
  }
  family.push_back(total);
  return shapefunctors::build_filtered_model(std::move(total), std::move(family));
}

}  // namespace shapelab::random_instances
