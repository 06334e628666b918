#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shapelab/exactla.hpp"

namespace shapelab::abgroup {

using exactla::IntMatrix;
using exactla::LinearSolver;

// Finitely presented abelian group: `gens` generators subject to the
// columns of `relations` (one column per relation). The zero-column
// case presents a free group; rows must always equal `gens`.
class FpAbGroup {
 public:
  FpAbGroup(long gens, IntMatrix relations)
      : gens_(gens), relations_(std::move(relations)) {
    if (gens < 0) throw std::invalid_argument("negative generator count");
    if (relations_.rows() != gens_)
      throw std::invalid_argument("relation matrix must have one row per generator");
  }

  static FpAbGroup trivial() { return FpAbGroup(0, IntMatrix(0, 0)); }
  static FpAbGroup free(long n) { return FpAbGroup(n, IntMatrix(n, 0)); }
  static FpAbGroup cyclic(const Int& m) {
    IntMatrix r(1, 1);
    r.at(0, 0) = m;
    return FpAbGroup(1, std::move(r));
  }

  long gens() const { return gens_; }
  const IntMatrix& relations() const { return relations_; }

  bool operator==(const FpAbGroup& o) const {
    return gens_ == o.gens_ && relations_ == o.relations_;
  }
  bool operator!=(const FpAbGroup& o) const { return !(*this == o); }

 private:
  long gens_;
  IntMatrix relations_;
};

// Isomorphism-type normal form: free rank plus invariant factors
// t_0 | t_1 | ... with every t_i >= 2.
struct CanonicalForm {
  long free_rank = 0;
  std::vector<Int> torsion;

  bool operator==(const CanonicalForm& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
  bool operator!=(const CanonicalForm& o) const { return !(*this == o); }

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

  std::string to_string() const {
    if (is_trivial()) return "0";
    std::vector<std::string> parts;
    if (free_rank == 1) parts.push_back("Z");
    else if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
    for (const Int& t : torsion) parts.push_back("Z/" + t.get_str());
    return shapelab::detail::join(parts, " + ");
  }
};

inline CanonicalForm canonical_form(const FpAbGroup& g) {
  auto s = exactla::smith_normal_form(g.relations());
  CanonicalForm c;
  c.free_rank = g.gens() - s.rank;
  for (long i = 0; i < s.rank; ++i)
    if (s.diag(i) >= 2) c.torsion.push_back(s.diag(i));
  return c;
}

// Homomorphism recorded on generators: matrix has target.gens rows and
// source.gens columns. Whether it respects the relations is a separate
// question (hom_well_defined).
struct GroupHom {
  FpAbGroup source;
  FpAbGroup target;
  IntMatrix matrix;

  GroupHom(FpAbGroup src, FpAbGroup tgt, IntMatrix m)
      : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
    if (matrix.rows() != target.gens() || matrix.cols() != source.gens())
      throw std::invalid_argument("hom matrix must be target.gens x source.gens");
  }

  // Structural equality; see hom_equal for equality as maps.
  bool operator==(const GroupHom& o) const {
    return source == o.source && target == o.target && matrix == o.matrix;
  }
  bool operator!=(const GroupHom& o) const { return !(*this == o); }
};

inline GroupHom identity_hom(const FpAbGroup& g) {
  return GroupHom(g, g, IntMatrix::identity(g.gens()));
}

inline GroupHom zero_hom(const FpAbGroup& g, const FpAbGroup& h) {
  return GroupHom(g, h, IntMatrix(h.gens(), g.gens()));
}

inline GroupHom compose(const GroupHom& g, const GroupHom& f) {
  if (f.target != g.source)
    throw std::invalid_argument("compose: inner objects do not match");
  return GroupHom(f.source, g.target, g.matrix * f.matrix);
}

namespace detail {

// Do all columns of `candidates` lie in the lattice spanned by the
// columns of `lattice`?
inline bool columns_in_lattice(const IntMatrix& lattice,
                               const IntMatrix& candidates) {
  return exactla::solve_columns(lattice, candidates).has_value();
}

}  // namespace detail

inline bool hom_well_defined(const GroupHom& h) {
  return detail::columns_in_lattice(h.target.relations(),
                                    h.matrix * h.source.relations());
}

// Equality as maps, i.e. agreement modulo the target's relations.
inline bool hom_equal(const GroupHom& a, const GroupHom& b) {
  if (a.source != b.source || a.target != b.target)
    throw std::invalid_argument("hom_equal: endpoints differ");
  return detail::columns_in_lattice(a.target.relations(), a.matrix - b.matrix);
}

inline bool is_zero_hom(const GroupHom& h) {
  return hom_equal(h, zero_hom(h.source, h.target));
}

// A subgroup presented on its own generators together with its
// inclusion into the ambient group.
struct Subgroup {
  FpAbGroup group;
  GroupHom inclusion;
};

// A quotient together with the projection from the ambient group.
struct QuotientGroup {
  FpAbGroup group;
  GroupHom projection;
};

inline Subgroup kernel(const GroupHom& h) {
  const long s = h.source.gens();
  // Vectors x with M x lying in the target relation lattice.
  IntMatrix pre = exactla::kernel_basis(
      exactla::hstack(h.matrix, h.target.relations()));
  IntMatrix basis = pre.take_rows(0, s);
  // Relations: combinations of those vectors falling into the source
  // relation lattice.
  IntMatrix rel_full = exactla::kernel_basis(
      exactla::hstack(basis, h.source.relations()));
  IntMatrix rels = rel_full.take_rows(0, basis.cols());
  FpAbGroup k(basis.cols(), rels);
  return Subgroup{k, GroupHom(k, h.source, basis)};
}

inline Subgroup image(const GroupHom& h) {
  IntMatrix rel_full = exactla::kernel_basis(
      exactla::hstack(h.matrix, h.target.relations()));
  IntMatrix rels = rel_full.take_rows(0, h.matrix.cols());
  FpAbGroup im(h.matrix.cols(), rels);
  return Subgroup{im, GroupHom(im, h.target, h.matrix)};
}

inline QuotientGroup cokernel(const GroupHom& h) {
  FpAbGroup q(h.target.gens(),
              exactla::hstack(h.matrix, h.target.relations()));
  return QuotientGroup{q, GroupHom(h.target, q,
                                   IntMatrix::identity(h.target.gens()))};
}

struct DirectSum {
  FpAbGroup group;
  GroupHom inject_left, inject_right;
  GroupHom project_left, project_right;
};

inline DirectSum direct_sum(const FpAbGroup& a, const FpAbGroup& b) {
  FpAbGroup s(a.gens() + b.gens(),
              exactla::block_diag({a.relations(), b.relations()}));
  IntMatrix il(s.gens(), a.gens()), ir(s.gens(), b.gens());
  IntMatrix pl(a.gens(), s.gens()), pr(b.gens(), s.gens());
  for (long i = 0; i < a.gens(); ++i) il.at(i, i) = 1, pl.at(i, i) = 1;
  for (long i = 0; i < b.gens(); ++i)
    ir.at(a.gens() + i, i) = 1, pr.at(i, a.gens() + i) = 1;
  return DirectSum{s, GroupHom(a, s, il), GroupHom(b, s, ir),
                   GroupHom(s, a, pl), GroupHom(s, b, pr)};
}

// Exactness of A --f--> B --g--> C at B: the image of f and the kernel
// of g generate the same subgroup of B. Both containments are checked
// by membership in the generated lattices (relations of B included).
inline bool is_exact_at(const GroupHom& f, const GroupHom& g) {
  if (f.target != g.source)
    throw std::invalid_argument("is_exact_at: maps are not composable");
  IntMatrix ker = kernel(g).inclusion.matrix;
  const IntMatrix& rels = f.target.relations();
  return detail::columns_in_lattice(exactla::hstack(ker, rels), f.matrix) &&
         detail::columns_in_lattice(exactla::hstack(f.matrix, rels), ker);
}

inline bool is_isomorphism(const GroupHom& h) {
  if (!hom_well_defined(h)) return false;
  return canonical_form(kernel(h).group).is_trivial() &&
         canonical_form(cokernel(h).group).is_trivial();
}

// The same group on fewer generators: diagonalize the relation
// lattice and drop every generator whose invariant factor is a unit.
// Both directions of the isomorphism come along so data expressed in
// the old generators can be rewritten.
struct SimplifiedPresentation {
  FpAbGroup group;
  GroupHom to_simple;    // original -> simplified
  GroupHom from_simple;  // simplified -> original
};

inline SimplifiedPresentation simplify_presentation(const FpAbGroup& g) {
  auto s = exactla::smith_normal_form(g.relations());
  std::vector<long> kept;
  for (long i = 0; i < g.gens(); ++i)
    if (i >= s.rank || s.diag(i) != 1) kept.push_back(i);
  const long k = static_cast<long>(kept.size());

  long torsion = 0;
  for (long r : kept)
    if (r < s.rank) ++torsion;
  IntMatrix rels(k, torsion);
  for (long j = 0, col = 0; j < k; ++j)
    if (kept[static_cast<std::size_t>(j)] < s.rank)
      rels.at(j, col++) = s.diag(kept[static_cast<std::size_t>(j)]);
  FpAbGroup simple(k, std::move(rels));

  // In the coordinates y = U x the relation lattice is spanned by the
  // diagonal, so projecting away the unit rows is an isomorphism.
  IntMatrix to(k, g.gens());
  for (long j = 0; j < k; ++j)
    for (long i = 0; i < g.gens(); ++i)
      to.at(j, i) = s.U.at(kept[static_cast<std::size_t>(j)], i);
  auto uinv = exactla::solve_columns(s.U, IntMatrix::identity(g.gens()));
  if (!uinv) throw std::logic_error("smith transform is not invertible");
  IntMatrix from(g.gens(), k);
  for (long i = 0; i < g.gens(); ++i)
    for (long j = 0; j < k; ++j)
      from.at(i, j) = uinv->at(i, kept[static_cast<std::size_t>(j)]);

  return SimplifiedPresentation{simple, GroupHom(g, simple, std::move(to)),
                                GroupHom(simple, g, std::move(from))};
}

// Two-sided inverse of an isomorphism. Solves M x = e_i modulo the
// target relations, one target generator at a time.
inline GroupHom inverse_hom(const GroupHom& h) {
  if (!is_isomorphism(h))
    throw ValidationError("not-an-isomorphism",
                          "inverse_hom requires an isomorphism");
  LinearSolver solver(exactla::hstack(h.matrix, h.target.relations()));
  IntMatrix inv(h.source.gens(), h.target.gens());
  for (long i = 0; i < h.target.gens(); ++i) {
    std::vector<Int> e(static_cast<std::size_t>(h.target.gens()), Int(0));
    e[static_cast<std::size_t>(i)] = 1;
    auto x = solver.solve(e);
    if (!x) throw std::logic_error("isomorphism with unsolvable generator");
    for (long j = 0; j < h.source.gens(); ++j)
      inv.at(j, i) = (*x)[static_cast<std::size_t>(j)];
  }
  return GroupHom(h.target, h.source, inv);
}

}  // namespace shapelab::abgroup
