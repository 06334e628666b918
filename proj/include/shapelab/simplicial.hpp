#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "shapelab/abgroup.hpp"

namespace shapelab::simplicial {

using abgroup::FpAbGroup;
using abgroup::GroupHom;
using exactla::IntMatrix;

// A simplex is its sorted list of vertex labels.
using Simplex = std::vector<std::string>;

inline Simplex make_simplex(std::vector<std::string> vertices) {
  std::sort(vertices.begin(), vertices.end());
  if (vertices.empty())
    throw std::invalid_argument("a simplex needs at least one vertex");
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw std::invalid_argument("repeated vertex in simplex");
  return vertices;
}

inline std::string simplex_name(const Simplex& s) {
  return "{" + shapelab::detail::join(s) + "}";
}

// Finite abstract simplicial complex with string vertex labels. Always
// closed under faces; iteration order is the lexicographic order of
// sorted simplices, which makes every derived basis deterministic.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  static SimplicialComplex from_simplices(const std::vector<Simplex>& given) {
    SimplicialComplex k;
    for (const auto& raw : given) k.insert_with_faces(make_simplex(raw));
    return k;
  }

  bool contains(const Simplex& s) const { return simplices_.count(s) != 0; }
  bool empty() const { return simplices_.empty(); }
  std::size_t size() const { return simplices_.size(); }

  long dim() const {
    long d = -1;
    for (const auto& s : simplices_)
      d = std::max(d, static_cast<long>(s.size()) - 1);
    return d;
  }

  const std::set<Simplex>& simplices() const { return simplices_; }

  std::vector<Simplex> simplices_of_dim(long n) const {
    std::vector<Simplex> out;
    if (n < 0) return out;
    for (const auto& s : simplices_)
      if (static_cast<long>(s.size()) == n + 1) out.push_back(s);
    return out;
  }

  std::vector<std::string> vertices() const {
    std::vector<std::string> out;
    for (const auto& s : simplices_)
      if (s.size() == 1) out.push_back(s[0]);
    return out;
  }

  bool has_vertex(const std::string& v) const {
    return simplices_.count(Simplex{v}) != 0;
  }

  bool subcomplex_of(const SimplicialComplex& other) const {
    return std::includes(other.simplices_.begin(), other.simplices_.end(),
                         simplices_.begin(), simplices_.end());
  }

  SimplicialComplex union_with(const SimplicialComplex& other) const {
    SimplicialComplex k = *this;
    k.simplices_.insert(other.simplices_.begin(), other.simplices_.end());
    return k;
  }

  SimplicialComplex intersect_with(const SimplicialComplex& other) const {
    SimplicialComplex k;
    for (const auto& s : simplices_)
      if (other.simplices_.count(s) != 0) k.simplices_.insert(s);
    return k;
  }

  // Subcomplex of all simplices avoiding every vertex in `removed`.
  SimplicialComplex without_vertices(const std::set<std::string>& removed) const {
    SimplicialComplex k;
    for (const auto& s : simplices_) {
      bool hit = false;
      for (const auto& v : s) hit = hit || removed.count(v) != 0;
      if (!hit) k.simplices_.insert(s);
    }
    return k;
  }

  // Closure of all simplices containing v (the closed star).
  SimplicialComplex closed_star(const std::string& v) const {
    SimplicialComplex k;
    for (const auto& s : simplices_)
      if (std::binary_search(s.begin(), s.end(), v)) k.insert_with_faces(s);
    return k;
  }

  bool operator==(const SimplicialComplex& o) const {
    return simplices_ == o.simplices_;
  }
  bool operator!=(const SimplicialComplex& o) const { return !(*this == o); }

 private:
  void insert_with_faces(const Simplex& s) {
    if (!simplices_.insert(s).second) return;
    if (s.size() == 1) return;
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex face;
      face.reserve(s.size() - 1);
      for (std::size_t j = 0; j < s.size(); ++j)
        if (j != i) face.push_back(s[j]);
      insert_with_faces(face);
    }
  }

  std::set<Simplex> simplices_;
};

// A complex together with a subcomplex; absolute complexes are pairs
// with empty subcomplex.
struct SimplicialPair {
  SimplicialComplex total;
  SimplicialComplex sub;

  SimplicialPair(SimplicialComplex t, SimplicialComplex s)
      : total(std::move(t)), sub(std::move(s)) {
    if (!sub.subcomplex_of(total))
      throw ValidationError("not-a-subcomplex",
                            "second complex is not contained in the first");
  }

  static SimplicialPair absolute(SimplicialComplex t) {
    return SimplicialPair(std::move(t), SimplicialComplex());
  }

  SimplicialPair sub_as_pair() const {
    return SimplicialPair::absolute(sub);
  }

  bool subpair_of(const SimplicialPair& o) const {
    return total.subcomplex_of(o.total) && sub.subcomplex_of(o.sub);
  }

  bool operator==(const SimplicialPair& o) const {
    return total == o.total && sub == o.sub;
  }
  bool operator!=(const SimplicialPair& o) const { return !(*this == o); }
};

// Vertex map inducing a simplicial map; validated at construction.
struct SimplicialMap {
  SimplicialComplex source;
  SimplicialComplex target;
  std::map<std::string, std::string> vertex_map;

  SimplicialMap(SimplicialComplex src, SimplicialComplex tgt,
                std::map<std::string, std::string> vm)
      : source(std::move(src)), target(std::move(tgt)), vertex_map(std::move(vm)) {
    for (const auto& v : source.vertices())
      if (!vertex_map.count(v))
        throw ValidationError("unmapped-vertex", "no image for vertex " + v);
    for (const auto& [v, w] : vertex_map) {
      if (!source.has_vertex(v))
        throw ValidationError("unknown-vertex",
                              "map defined on " + v + " which is not a vertex");
      if (!target.has_vertex(w))
        throw ValidationError("unknown-vertex",
                              "image vertex " + w + " is not in the target");
    }
    for (const auto& s : source.simplices()) {
      Simplex img = image_simplex(s);
      if (!target.contains(img))
        throw ValidationError("not-simplicial",
                              "image of " + simplex_name(s) +
                                  " is not a simplex of the target");
    }
  }

  // Sorted, deduplicated image vertex set.
  Simplex image_simplex(const Simplex& s) const {
    std::set<std::string> img;
    for (const auto& v : s) img.insert(vertex_map.at(v));
    return Simplex(img.begin(), img.end());
  }
};

// Two maps with shared endpoints are contiguous when the union of the
// two images of each simplex is again a simplex.
inline bool are_contiguous(const SimplicialMap& f, const SimplicialMap& g) {
  if (f.source != g.source || f.target != g.target)
    throw std::invalid_argument("are_contiguous: endpoints differ");
  for (const auto& s : f.source.simplices()) {
    std::set<std::string> joint;
    for (const auto& v : s) {
      joint.insert(f.vertex_map.at(v));
      joint.insert(g.vertex_map.at(v));
    }
    if (!f.target.contains(Simplex(joint.begin(), joint.end()))) return false;
  }
  return true;
}

// Map of pairs: a simplicial map on total complexes carrying the
// subcomplex into the subcomplex.
struct PairMap {
  SimplicialPair source;
  SimplicialPair target;
  std::map<std::string, std::string> vertex_map;

  PairMap(SimplicialPair src, SimplicialPair tgt,
          std::map<std::string, std::string> vm)
      : source(std::move(src)), target(std::move(tgt)), vertex_map(std::move(vm)) {
    SimplicialMap on_total(source.total, target.total, vertex_map);
    for (const auto& s : source.sub.simplices())
      if (!target.sub.contains(on_total.image_simplex(s)))
        throw ValidationError("not-a-pair-map",
                              "image of " + simplex_name(s) +
                                  " leaves the target subcomplex");
  }

  Simplex image_simplex(const Simplex& s) const {
    std::set<std::string> img;
    for (const auto& v : s) img.insert(vertex_map.at(v));
    return Simplex(img.begin(), img.end());
  }
};

// Identity-on-vertices inclusion of a subpair.
inline PairMap inclusion_map(const SimplicialPair& sub, const SimplicialPair& super) {
  if (!sub.subpair_of(super))
    throw ValidationError("not-a-subpair", "inclusion requires a subpair");
  std::map<std::string, std::string> vm;
  for (const auto& v : sub.total.vertices()) vm[v] = v;
  return PairMap(sub, super, std::move(vm));
}

// Coefficient choice: 0 stands for integer coefficients, otherwise a
// modulus m >= 2.
struct Coeff {
  Int modulus = 0;

  static Coeff integers() { return Coeff{Int(0)}; }
  static Coeff mod(Int m) {
    if (m < 2) throw std::invalid_argument("modulus must be at least 2");
    return Coeff{std::move(m)};
  }

  bool is_integral() const { return modulus == 0; }

  std::string to_string() const {
    return is_integral() ? "Z" : "Z/" + modulus.get_str();
  }

  bool operator==(const Coeff& o) const { return modulus == o.modulus; }
  bool operator!=(const Coeff& o) const { return !(*this == o); }
};

namespace detail {

// Ordered basis of relative n-chains: n-simplices of the total complex
// not lying in the subcomplex.
inline std::vector<Simplex> chain_basis(const SimplicialPair& p, long n) {
  std::vector<Simplex> out;
  for (const auto& s : p.total.simplices_of_dim(n))
    if (!p.sub.contains(s)) out.push_back(s);
  return out;
}

inline std::map<Simplex, long> index_of(const std::vector<Simplex>& basis) {
  std::map<Simplex, long> m;
  for (long i = 0; i < static_cast<long>(basis.size()); ++i)
    m.emplace(basis[static_cast<std::size_t>(i)], i);
  return m;
}

inline FpAbGroup chain_group(long rank, const Coeff& c) {
  if (c.is_integral()) return FpAbGroup::free(rank);
  IntMatrix rel(rank, rank);
  for (long i = 0; i < rank; ++i) rel.at(i, i) = c.modulus;
  return FpAbGroup(rank, std::move(rel));
}

// Matrix of the simplicial boundary on relative chains.
inline IntMatrix boundary_matrix(const SimplicialPair& p, long n) {
  auto rows = chain_basis(p, n - 1);
  auto cols = chain_basis(p, n);
  auto row_at = index_of(rows);
  IntMatrix m(static_cast<long>(rows.size()), static_cast<long>(cols.size()));
  for (long j = 0; j < static_cast<long>(cols.size()); ++j) {
    const Simplex& s = cols[static_cast<std::size_t>(j)];
    int sign = 1;
    for (std::size_t i = 0; i < s.size(); ++i, sign = -sign) {
      Simplex face;
      face.reserve(s.size() - 1);
      for (std::size_t k = 0; k < s.size(); ++k)
        if (k != i) face.push_back(s[k]);
      auto it = row_at.find(face);
      if (it != row_at.end()) m.at(it->second, j) += sign;
    }
  }
  return m;
}

// Matrix of the chain map a pair map induces in degree n.
inline IntMatrix chain_map_matrix(const PairMap& f, long n) {
  auto rows = chain_basis(f.target, n);
  auto cols = chain_basis(f.source, n);
  auto row_at = index_of(rows);
  IntMatrix m(static_cast<long>(rows.size()), static_cast<long>(cols.size()));
  for (long j = 0; j < static_cast<long>(cols.size()); ++j) {
    const Simplex& s = cols[static_cast<std::size_t>(j)];
    std::vector<std::string> img;
    img.reserve(s.size());
    for (const auto& v : s) img.push_back(f.vertex_map.at(v));
    Simplex sorted = img;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      continue;  // degenerate image
    // Sign of the permutation sorting the image tuple.
    int sign = 1;
    for (std::size_t a = 0; a < img.size(); ++a)
      for (std::size_t b = a + 1; b < img.size(); ++b)
        if (img[a] > img[b]) sign = -sign;
    auto it = row_at.find(sorted);
    if (it != row_at.end()) m.at(it->second, j) += sign;
  }
  return m;
}

}  // namespace detail

// Homology (or cohomology) of a pair in one degree, together with the
// data needed to express chain-level cycles in terms of its
// presentation: `reps` holds one chain vector per generator, and
// membership of an arbitrary cycle is resolved against `cycles` plus
// the chain relations.
struct GradedPiece {
  FpAbGroup group = FpAbGroup::trivial();
  std::vector<Simplex> basis;   // chain basis the representatives refer to
  IntMatrix cycles;             // chain coordinates of the cycle generators
  IntMatrix chain_relations;    // coefficient relations of the chain group
  IntMatrix span;               // full cycle basis, used when classifying
  IntMatrix reduce;             // span coordinates -> presentation coordinates
};

namespace detail {

// Shared subquotient construction: cycles of `out` modulo images of
// `in`, where out: C -> C' and in: C'' -> C are composable boundary or
// coboundary matrices and every chain group carries `coeff` relations.
inline GradedPiece subquotient(const IntMatrix& out_map, const IntMatrix& in_map,
                               std::vector<Simplex> basis, const Coeff& coeff) {
  const long rank = out_map.cols();
  FpAbGroup chains = chain_group(rank, coeff);
  FpAbGroup lower = chain_group(out_map.rows(), coeff);
  GroupHom d(chains, lower, out_map);
  abgroup::Subgroup z = abgroup::kernel(d);
  // Push the incoming map into cycle coordinates.
  auto lifted = exactla::solve_columns(
      exactla::hstack(z.inclusion.matrix, chains.relations()), in_map);
  if (!lifted)
    throw std::logic_error("boundary image is not made of cycles");
  IntMatrix in_cycles = lifted->take_rows(0, z.group.gens());
  FpAbGroup h(z.group.gens(),
              exactla::hstack(in_cycles, z.group.relations()));
  // A raw subquotient presentation has one generator per basis cycle,
  // which makes everything downstream needlessly large. Shrink it and
  // keep the change of generators for classification.
  auto simple = abgroup::simplify_presentation(h);
  GradedPiece piece;
  piece.group = std::move(simple.group);
  piece.basis = std::move(basis);
  piece.cycles = z.inclusion.matrix * simple.from_simple.matrix;
  piece.chain_relations = chains.relations();
  piece.span = z.inclusion.matrix;
  piece.reduce = std::move(simple.to_simple.matrix);
  return piece;
}

// Coordinates of a chain-level cycle in the presentation of a piece:
// solve against the full cycle basis, then change generators.
inline std::vector<Int> classify(const GradedPiece& p, const std::vector<Int>& cycle) {
  auto x = exactla::solve_linear(
      exactla::hstack(p.span, p.chain_relations), cycle);
  if (!x) throw std::logic_error("vector is not a cycle for this piece");
  x->resize(static_cast<std::size_t>(p.span.cols()));
  return p.reduce.apply(*x);
}

// Column-wise classify sharing one solver across all columns.
inline IntMatrix classify_matrix(const GradedPiece& p, const IntMatrix& chains) {
  auto x = exactla::solve_columns(
      exactla::hstack(p.span, p.chain_relations), chains);
  if (!x) throw std::logic_error("matrix columns are not cycles for this piece");
  return p.reduce * x->take_rows(0, p.span.cols());
}

}  // namespace detail

inline GradedPiece homology_piece(const SimplicialPair& p, long n, const Coeff& c) {
  if (n < 0)
    return GradedPiece{FpAbGroup::trivial(), {}, IntMatrix(0, 0), IntMatrix(0, 0)};
  return detail::subquotient(detail::boundary_matrix(p, n),
                             detail::boundary_matrix(p, n + 1),
                             detail::chain_basis(p, n), c);
}

inline GradedPiece cohomology_piece(const SimplicialPair& p, long n, const Coeff& c) {
  if (n < 0)
    return GradedPiece{FpAbGroup::trivial(), {}, IntMatrix(0, 0), IntMatrix(0, 0)};
  return detail::subquotient(detail::boundary_matrix(p, n + 1).transpose(),
                             detail::boundary_matrix(p, n).transpose(),
                             detail::chain_basis(p, n), c);
}

inline FpAbGroup homology(const SimplicialPair& p, long n, const Coeff& c) {
  return homology_piece(p, n, c).group;
}

inline FpAbGroup cohomology(const SimplicialPair& p, long n, const Coeff& c) {
  return cohomology_piece(p, n, c).group;
}

// Map induced in homology, covariant. The piece overload lets callers
// that already computed the endpoint pieces (system builders mostly)
// avoid recomputing them for every map out of the same pair.
inline GroupHom induced_hom(const PairMap& f, long n, const GradedPiece& src,
                            const GradedPiece& tgt) {
  IntMatrix chain = detail::chain_map_matrix(f, n);
  IntMatrix m = detail::classify_matrix(tgt, chain * src.cycles);
  return GroupHom(src.group, tgt.group, std::move(m));
}

inline GroupHom induced_hom(const PairMap& f, long n, const Coeff& c) {
  return induced_hom(f, n, homology_piece(f.source, n, c),
                     homology_piece(f.target, n, c));
}

// Map induced in cohomology, contravariant: runs from the cohomology
// of the target pair to that of the source pair. The pieces belong to
// f.source and f.target in that order.
inline GroupHom induced_cohom(const PairMap& f, long n, const GradedPiece& src,
                              const GradedPiece& tgt) {
  IntMatrix cochain = detail::chain_map_matrix(f, n).transpose();
  IntMatrix m = detail::classify_matrix(src, cochain * tgt.cycles);
  return GroupHom(tgt.group, src.group, std::move(m));
}

inline GroupHom induced_cohom(const PairMap& f, long n, const Coeff& c) {
  return induced_cohom(f, n, cohomology_piece(f.source, n, c),
                       cohomology_piece(f.target, n, c));
}

// Connecting map H_n(total, sub) -> H_{n-1}(sub): take a relative
// cycle, read off its boundary in the total complex, and keep the part
// supported on the subcomplex. The part outside must vanish modulo the
// coefficients; that it does is exactly the relative cycle condition.
inline GroupHom connecting_hom(const SimplicialPair& p, long n, const Coeff& c,
                               const GradedPiece& rel, const GradedPiece& sub) {
  if (n < 1) throw std::invalid_argument("connecting map needs degree >= 1");

  SimplicialPair abs = SimplicialPair::absolute(p.total);
  auto total_n = detail::chain_basis(abs, n);
  auto total_low = detail::chain_basis(abs, n - 1);
  auto total_n_at = detail::index_of(total_n);
  IntMatrix d = detail::boundary_matrix(abs, n);
  auto sub_at = detail::index_of(sub.basis);

  IntMatrix boundaries(static_cast<long>(sub.basis.size()), rel.group.gens());
  for (long j = 0; j < rel.group.gens(); ++j) {
    // Embed the relative representative into absolute chains.
    std::vector<Int> chain(total_n.size(), Int(0));
    for (long i = 0; i < static_cast<long>(rel.basis.size()); ++i)
      chain[static_cast<std::size_t>(
          total_n_at.at(rel.basis[static_cast<std::size_t>(i)]))] =
          rel.cycles.at(i, j);
    std::vector<Int> bd = d.apply(chain);
    for (long i = 0; i < static_cast<long>(total_low.size()); ++i) {
      const Simplex& s = total_low[static_cast<std::size_t>(i)];
      auto it = sub_at.find(s);
      if (it != sub_at.end()) {
        boundaries.at(it->second, j) = bd[static_cast<std::size_t>(i)];
      } else if (bd[static_cast<std::size_t>(i)] != 0) {
        if (c.is_integral() ||
            !exactla::detail::divides(c.modulus, bd[static_cast<std::size_t>(i)]))
          throw std::logic_error("relative cycle with boundary outside the subcomplex");
      }
    }
  }
  return GroupHom(rel.group, sub.group, detail::classify_matrix(sub, boundaries));
}

inline GroupHom connecting_hom(const SimplicialPair& p, long n, const Coeff& c) {
  if (n < 1) throw std::invalid_argument("connecting map needs degree >= 1");
  return connecting_hom(p, n, c, homology_piece(p, n, c),
                        homology_piece(p.sub_as_pair(), n - 1, c));
}

// Coboundary map H^n(sub) -> H^{n+1}(total, sub): extend a cocycle on
// the subcomplex by zero, apply the total coboundary, and keep the
// part on relative simplices. The part on the subcomplex vanishes
// modulo coefficients because the input is a cocycle.
inline GroupHom coboundary_hom(const SimplicialPair& p, long n, const Coeff& c,
                               const GradedPiece& sub, const GradedPiece& rel) {
  if (n < 0) throw std::invalid_argument("coboundary map needs degree >= 0");

  SimplicialPair abs = SimplicialPair::absolute(p.total);
  auto total_n = detail::chain_basis(abs, n);
  auto total_hi = detail::chain_basis(abs, n + 1);
  IntMatrix delta = detail::boundary_matrix(abs, n + 1).transpose();
  auto sub_at = detail::index_of(sub.basis);
  auto rel_at = detail::index_of(rel.basis);

  IntMatrix coboundaries(static_cast<long>(rel.basis.size()), sub.group.gens());
  for (long j = 0; j < sub.group.gens(); ++j) {
    std::vector<Int> cochain(total_n.size(), Int(0));
    for (long i = 0; i < static_cast<long>(total_n.size()); ++i) {
      auto it = sub_at.find(total_n[static_cast<std::size_t>(i)]);
      if (it != sub_at.end())
        cochain[static_cast<std::size_t>(i)] = sub.cycles.at(it->second, j);
    }
    std::vector<Int> cb = delta.apply(cochain);
    for (long i = 0; i < static_cast<long>(total_hi.size()); ++i) {
      const Simplex& s = total_hi[static_cast<std::size_t>(i)];
      auto it = rel_at.find(s);
      if (it != rel_at.end()) {
        coboundaries.at(it->second, j) = cb[static_cast<std::size_t>(i)];
      } else if (cb[static_cast<std::size_t>(i)] != 0) {
        if (c.is_integral() ||
            !exactla::detail::divides(c.modulus, cb[static_cast<std::size_t>(i)]))
          throw std::logic_error("cocycle with coboundary on the subcomplex");
      }
    }
  }
  return GroupHom(sub.group, rel.group, detail::classify_matrix(rel, coboundaries));
}

inline GroupHom coboundary_hom(const SimplicialPair& p, long n, const Coeff& c) {
  if (n < 0) throw std::invalid_argument("coboundary map needs degree >= 0");
  return coboundary_hom(p, n, c, cohomology_piece(p.sub_as_pair(), n, c),
                        cohomology_piece(p, n + 1, c));
}

// The homology long exact sequence of a pair, from H_{max+1}(total,sub)
// down to H_0(total,sub) -> 0, with an auditor checking exactness at
// every interior group.
struct ExactSequence {
  std::vector<FpAbGroup> groups;
  std::vector<GroupHom> maps;  // maps[i] : groups[i] -> groups[i+1]
  std::vector<std::string> labels;
};

inline ExactSequence long_exact_sequence(const SimplicialPair& p, const Coeff& c,
                                         long max_degree) {
  if (max_degree < 0) throw std::invalid_argument("max_degree must be >= 0");
  ExactSequence seq;
  SimplicialPair subp = p.sub_as_pair();
  SimplicialPair absp = SimplicialPair::absolute(p.total);
  PairMap inc_sub(subp, absp, [&] {
    std::map<std::string, std::string> vm;
    for (const auto& v : p.sub.vertices()) vm[v] = v;
    return vm;
  }());
  PairMap to_rel(absp, p, [&] {
    std::map<std::string, std::string> vm;
    for (const auto& v : p.total.vertices()) vm[v] = v;
    return vm;
  }());

  auto deg = [](const char* who, long n) {
    return std::string(who) + "_" + std::to_string(n);
  };

  GradedPiece rel = homology_piece(p, max_degree + 1, c);
  seq.groups.push_back(rel.group);
  seq.labels.push_back(deg("rel", max_degree + 1));
  for (long n = max_degree; n >= 0; --n) {
    GradedPiece sub = homology_piece(subp, n, c);
    GradedPiece total = homology_piece(absp, n, c);
    seq.maps.push_back(connecting_hom(p, n + 1, c, rel, sub));
    seq.groups.push_back(sub.group);
    seq.labels.push_back(deg("sub", n));
    seq.maps.push_back(induced_hom(inc_sub, n, sub, total));
    seq.groups.push_back(total.group);
    seq.labels.push_back(deg("total", n));
    rel = homology_piece(p, n, c);
    seq.maps.push_back(induced_hom(to_rel, n, total, rel));
    seq.groups.push_back(rel.group);
    seq.labels.push_back(deg("rel", n));
  }
  seq.maps.push_back(abgroup::zero_hom(seq.groups.back(), FpAbGroup::trivial()));
  seq.groups.push_back(FpAbGroup::trivial());
  seq.labels.push_back("0");
  return seq;
}

// Exactness at each interior position; entry i corresponds to
// groups[i+1].
inline std::vector<bool> audit_exactness(const ExactSequence& seq) {
  std::vector<bool> out;
  for (std::size_t i = 1; i + 1 < seq.groups.size(); ++i)
    out.push_back(abgroup::is_exact_at(seq.maps[i - 1], seq.maps[i]));
  return out;
}

// Removal of the open stars of a vertex set W from a pair. Legal only
// when each removed vertex has its whole closed star inside the
// subcomplex; the inclusion of the cut-down pair then induces
// isomorphisms in relative (co)homology (the relative chain complexes
// are literally equal).
struct ExcisionResult {
  SimplicialPair pair;
  PairMap inclusion;
};

inline ExcisionResult excise(const SimplicialPair& p,
                             const std::vector<std::string>& removed) {
  std::set<std::string> w(removed.begin(), removed.end());
  for (const auto& v : w) {
    if (!p.total.has_vertex(v))
      throw ValidationError("unknown-vertex",
                            "vertex " + v + " is not in the complex");
    for (const auto& s : p.total.simplices())
      if (std::binary_search(s.begin(), s.end(), v) && !p.sub.contains(s))
        throw ValidationError("star-not-interior",
                              "simplex " + simplex_name(s) +
                                  " meets " + v +
                                  " but is not in the subcomplex");
  }
  SimplicialPair cut(p.total.without_vertices(w), p.sub.without_vertices(w));
  std::map<std::string, std::string> vm;
  for (const auto& v : cut.total.vertices()) vm[v] = v;
  PairMap inc(cut, p, std::move(vm));
  return ExcisionResult{std::move(cut), std::move(inc)};
}

}  // namespace shapelab::simplicial
