#pragma once

#include <fstream>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "shapelab/shapefunctors.hpp"

namespace shapelab::io {

using json = nlohmann::ordered_json;

using abgroup::CanonicalForm;
using abgroup::FpAbGroup;
using abgroup::GroupHom;
using exactla::IntMatrix;
using posets::DirectedPoset;
using shapefunctors::FilteredModel;
using simplicial::ExactSequence;
using simplicial::PairMap;
using simplicial::SimplicialComplex;
using simplicial::SimplicialPair;
using systems::GroupSystem;
using systems::SystemMorphism;
using systems::Variance;

// Structural problems with input files: malformed JSON, wrong types,
// unknown kinds, unresolvable or cyclic references. Distinct from
// ValidationError, which signals mathematically meaningful violations.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& message) : std::runtime_error(message) {}
};

using Artifact =
    std::variant<FpAbGroup, GroupHom, DirectedPoset, GroupSystem, SystemMorphism,
                 SimplicialComplex, SimplicialPair, PairMap, FilteredModel,
                 ExactSequence>;

inline std::string kind_of(const Artifact& a) {
  static const char* names[] = {"group",   "hom",  "poset", "system", "morphism",
                                "complex", "pair", "map",   "model",  "sequence"};
  return names[a.index()];
}

// ---------------------------------------------------------------------------
// Scalars and matrices

inline Int parse_int(const json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return int_from_string(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw IoError(where + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
  throw IoError(where + ": expected an integer (decimal string or number)");
}

inline long parse_index(const json& j, const std::string& where) {
  Int v = parse_int(j, where);
  if (!v.fits_slong_p()) throw IoError(where + ": index out of range");
  return v.get_si();
}

inline json int_json(const Int& v) { return json(v.get_str()); }

// Matrices are written as {"rows": r, "cols": c, "entries": [[...]]};
// a bare array of rows is accepted on input when nonempty.
inline IntMatrix parse_matrix(const json& j, const std::string& where) {
  if (j.is_array()) {
    if (j.empty())
      throw IoError(where + ": use the object form for empty matrices");
    long rows = static_cast<long>(j.size());
    if (!j[0].is_array()) throw IoError(where + ": rows must be arrays");
    long cols = static_cast<long>(j[0].size());
    IntMatrix m(rows, cols);
    for (long i = 0; i < rows; ++i) {
      const json& row = j[static_cast<std::size_t>(i)];
      if (!row.is_array() || static_cast<long>(row.size()) != cols)
        throw IoError(where + ": ragged matrix");
      for (long k = 0; k < cols; ++k)
        m.at(i, k) = parse_int(row[static_cast<std::size_t>(k)], where);
    }
    return m;
  }
  if (!j.is_object()) throw IoError(where + ": expected a matrix");
  if (!j.contains("rows") || !j.contains("cols"))
    throw IoError(where + ": matrix needs rows and cols");
  long rows = parse_index(j.at("rows"), where + ".rows");
  long cols = parse_index(j.at("cols"), where + ".cols");
  if (rows < 0 || cols < 0) throw IoError(where + ": negative dimension");
  IntMatrix m(rows, cols);
  const json entries = j.value("entries", json::array());
  if (static_cast<long>(entries.size()) != rows && !(rows == 0 && entries.empty()))
    throw IoError(where + ": entry rows do not match");
  for (long i = 0; i < rows; ++i) {
    const json& row = entries[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<long>(row.size()) != cols)
      throw IoError(where + ": ragged matrix");
    for (long k = 0; k < cols; ++k)
      m.at(i, k) = parse_int(row[static_cast<std::size_t>(k)], where);
  }
  return m;
}

inline json matrix_json(const IntMatrix& m) {
  json j = json::object();
  j["rows"] = int_json(Int(m.rows()));
  j["cols"] = int_json(Int(m.cols()));
  json entries = json::array();
  for (long i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (long k = 0; k < m.cols(); ++k) row.push_back(int_json(m.at(i, k)));
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

// ---------------------------------------------------------------------------
// Workspace: named artifacts with {"ref": name} resolution

class Workspace {
 public:
  // Binds the artifact under its "name" field, or the fallback (file
  // stem) when absent. Duplicate identifiers are input errors.
  // Returns the identifier the artifact was bound under.
  std::string add(const json& j, const std::string& fallback_name) {
    if (!j.is_object() || !j.contains("kind"))
      throw IoError("artifact must be an object with a \"kind\" field");
    std::string name = fallback_name;
    if (j.contains("name")) {
      if (!j.at("name").is_string()) throw IoError("\"name\" must be a string");
      name = j.at("name").get<std::string>();
    }
    if (name.empty()) throw IoError("artifact has no usable name");
    if (raw_.count(name)) throw IoError("duplicate identifier: " + name);
    raw_.emplace(name, j);
    return name;
  }

  std::string load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    json j;
    try {
      j = json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw IoError(path + ": " + e.what());
    }
    return add(j, stem_of(path));
  }

  bool has(const std::string& name) const { return raw_.count(name) != 0; }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (const auto& [n, _] : raw_) out.push_back(n);
    return out;
  }

  Artifact resolve(const std::string& name) {
    std::set<std::string> stack;
    return resolve_name(name, stack);
  }

  Artifact parse(const json& j) {
    std::set<std::string> stack;
    return parse_node(j, stack);
  }

 private:
  static std::string stem_of(const std::string& path) {
    auto slash = path.find_last_of('/');
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    auto dot = base.find_last_of('.');
    return dot == std::string::npos ? base : base.substr(0, dot);
  }

  Artifact resolve_name(const std::string& name, std::set<std::string>& stack) {
    auto it = raw_.find(name);
    if (it == raw_.end()) throw IoError("unbound identifier: " + name);
    if (!stack.insert(name).second)
      throw IoError("reference cycle through: " + name);
    Artifact a = parse_node(it->second, stack);
    stack.erase(name);
    return a;
  }

  Artifact parse_node(const json& j, std::set<std::string>& stack) {
    if (j.is_object() && j.contains("ref")) {
      if (!j.at("ref").is_string()) throw IoError("\"ref\" must be a string");
      return resolve_name(j.at("ref").get<std::string>(), stack);
    }
    if (!j.is_object() || !j.contains("kind"))
      throw IoError("artifact must be an object with a \"kind\" field");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "group") return parse_group(j);
    if (kind == "hom") return parse_hom(j, stack);
    if (kind == "poset") return parse_poset(j);
    if (kind == "system") return parse_system(j, stack);
    if (kind == "morphism") return parse_morphism(j, stack);
    if (kind == "complex") return parse_complex(j);
    if (kind == "pair") return parse_pair(j, stack);
    if (kind == "map") return parse_map(j, stack);
    if (kind == "model") return parse_model(j, stack);
    if (kind == "sequence") return parse_sequence(j, stack);
    throw IoError("unknown kind: " + kind);
  }

  template <class T>
  T expect(const json& j, std::set<std::string>& stack, const std::string& where) {
    Artifact a = parse_node(j, stack);
    if (auto* p = std::get_if<T>(&a)) return std::move(*p);
    throw IoError(where + ": wrong artifact kind (found " + kind_of(a) + ")");
  }

  FpAbGroup parse_group(const json& j) {
    long gens = parse_index(j.at("generators"), "group.generators");
    if (gens < 0) throw IoError("group.generators: must be nonnegative");
    IntMatrix rel = j.contains("relations")
                        ? parse_matrix(j.at("relations"), "group.relations")
                        : IntMatrix(gens, 0);
    if (rel.rows() != gens)
      throw IoError("group.relations: one row per generator required");
    return FpAbGroup(gens, std::move(rel));
  }

  GroupHom parse_hom(const json& j, std::set<std::string>& stack) {
    FpAbGroup src = expect<FpAbGroup>(j.at("source"), stack, "hom.source");
    FpAbGroup tgt = expect<FpAbGroup>(j.at("target"), stack, "hom.target");
    IntMatrix m = parse_matrix(j.at("matrix"), "hom.matrix");
    if (m.rows() != tgt.gens() || m.cols() != src.gens())
      throw ValidationError("hom-shape",
                            "matrix must be target.gens x source.gens");
    return GroupHom(std::move(src), std::move(tgt), std::move(m));
  }

  DirectedPoset parse_poset(const json& j) {
    long size = parse_index(j.at("size"), "poset.size");
    if (size < 0) throw IoError("poset.size: must be nonnegative");
    std::vector<std::uint8_t> leq(
        static_cast<std::size_t>(size) * static_cast<std::size_t>(size), 0);
    for (long a = 0; a < size; ++a)
      leq[static_cast<std::size_t>(a) * size + static_cast<std::size_t>(a)] = 1;
    for (const json& pr : j.value("leq", json::array())) {
      if (!pr.is_array() || pr.size() != 2)
        throw IoError("poset.leq: entries are [a, b] pairs");
      long a = parse_index(pr[0], "poset.leq");
      long b = parse_index(pr[1], "poset.leq");
      if (a < 0 || a >= size || b < 0 || b >= size)
        throw IoError("poset.leq: index out of range");
      leq[static_cast<std::size_t>(a) * size + static_cast<std::size_t>(b)] = 1;
    }
    return DirectedPoset::create(size, std::move(leq));
  }

  GroupSystem parse_system(const json& j, std::set<std::string>& stack) {
    GroupSystem s;
    const std::string var = j.at("variance").get<std::string>();
    if (var == "direct")
      s.variance = Variance::direct;
    else if (var == "inverse")
      s.variance = Variance::inverse;
    else
      throw IoError("system.variance: direct or inverse");
    s.index = expect<DirectedPoset>(j.at("poset"), stack, "system.poset");
    for (const json& o : j.at("objects"))
      s.objects.push_back(expect<FpAbGroup>(o, stack, "system.objects"));
    if (static_cast<long>(s.objects.size()) != s.index.size())
      throw IoError("system.objects: one group per poset element required");
    for (const json& b : j.value("bonds", json::array())) {
      long from = parse_index(b.at("from"), "bond.from");
      long to = parse_index(b.at("to"), "bond.to");
      if (from < 0 || from >= s.index.size() || to < 0 || to >= s.index.size())
        throw IoError("bond: index out of range");
      IntMatrix m = parse_matrix(b.at("matrix"), "bond.matrix");
      if (!s.index.leq(from, to))
        throw ValidationError("bad-bond-key",
                              "bond stored for unrelated pair (" +
                                  std::to_string(from) + ", " +
                                  std::to_string(to) + ")",
                              {from, to});
      const FpAbGroup& lo = s.object(from);
      const FpAbGroup& hi = s.object(to);
      const FpAbGroup& src = s.variance == Variance::direct ? lo : hi;
      const FpAbGroup& tgt = s.variance == Variance::direct ? hi : lo;
      if (m.rows() != tgt.gens() || m.cols() != src.gens())
        throw ValidationError("bond-endpoints",
                              "bond (" + std::to_string(from) + ", " +
                                  std::to_string(to) +
                                  ") has wrong source or target",
                              {from, to});
      if (s.bonds.count({from, to}))
        throw IoError("bond (" + std::to_string(from) + ", " +
                      std::to_string(to) + ") given twice");
      s.bonds.emplace(std::make_pair(from, to),
                      GroupHom(src, tgt, std::move(m)));
    }
    return s;
  }

  SystemMorphism parse_morphism(const json& j, std::set<std::string>& stack) {
    GroupSystem src = expect<GroupSystem>(j.at("source"), stack, "morphism.source");
    GroupSystem tgt = expect<GroupSystem>(j.at("target"), stack, "morphism.target");
    if (src.variance != tgt.variance)
      throw ValidationError("variance-mismatch",
                            "source and target have different variance");
    const bool direct = src.variance == Variance::direct;
    const DirectedPoset& dom = direct ? src.index : tgt.index;
    const DirectedPoset& cod = direct ? tgt.index : src.index;
    std::vector<long> idx;
    for (const json& v : j.at("index_map"))
      idx.push_back(parse_index(v, "morphism.index_map"));
    posets::OrderMap::check(dom, cod, idx).require();
    posets::OrderMap om(dom, cod, std::move(idx));
    std::vector<GroupHom> comps;
    const json& carr = j.at("components");
    if (static_cast<long>(carr.size()) != dom.size())
      throw ValidationError("bad-components",
                            "one component per index is required");
    for (long a = 0; a < dom.size(); ++a) {
      IntMatrix m = parse_matrix(carr[static_cast<std::size_t>(a)],
                                 "morphism.components");
      const FpAbGroup& cs = direct ? src.object(a) : src.object(om(a));
      const FpAbGroup& ct = direct ? tgt.object(om(a)) : tgt.object(a);
      if (m.rows() != ct.gens() || m.cols() != cs.gens())
        throw ValidationError("component-endpoints",
                              "component " + std::to_string(a) +
                                  " has wrong source or target",
                              {a});
      comps.push_back(GroupHom(cs, ct, std::move(m)));
    }
    return SystemMorphism{std::move(src), std::move(tgt), std::move(om),
                          std::move(comps)};
  }

  SimplicialComplex parse_complex(const json& j) {
    std::vector<simplicial::Simplex> simplices;
    for (const json& s : j.at("simplices")) {
      if (!s.is_array()) throw IoError("complex.simplices: entries are arrays");
      simplicial::Simplex sx;
      for (const json& v : s) {
        if (!v.is_string())
          throw IoError("complex.simplices: vertex labels are strings");
        sx.push_back(v.get<std::string>());
      }
      simplices.push_back(std::move(sx));
    }
    try {
      return SimplicialComplex::from_simplices(simplices);
    } catch (const std::invalid_argument& e) {
      throw IoError(std::string("complex.simplices: ") + e.what());
    }
  }

  SimplicialPair parse_pair(const json& j, std::set<std::string>& stack) {
    SimplicialComplex total =
        expect<SimplicialComplex>(j.at("total"), stack, "pair.total");
    SimplicialComplex sub =
        j.contains("sub") ? expect<SimplicialComplex>(j.at("sub"), stack, "pair.sub")
                          : SimplicialComplex();
    return SimplicialPair(std::move(total), std::move(sub));
  }

  // Pairs are accepted wherever one is needed; a bare complex is
  // promoted to an absolute pair.
  SimplicialPair expect_pair(const json& j, std::set<std::string>& stack,
                             const std::string& where) {
    Artifact a = parse_node(j, stack);
    if (auto* p = std::get_if<SimplicialPair>(&a)) return std::move(*p);
    if (auto* k = std::get_if<SimplicialComplex>(&a))
      return SimplicialPair::absolute(std::move(*k));
    throw IoError(where + ": wrong artifact kind (found " + kind_of(a) + ")");
  }

  PairMap parse_map(const json& j, std::set<std::string>& stack) {
    SimplicialPair src = expect_pair(j.at("source"), stack, "map.source");
    SimplicialPair tgt = expect_pair(j.at("target"), stack, "map.target");
    std::map<std::string, std::string> vm;
    const json& verts = j.at("vertices");
    if (!verts.is_object()) throw IoError("map.vertices: expected an object");
    for (const auto& [k, v] : verts.items()) {
      if (!v.is_string()) throw IoError("map.vertices: images are strings");
      vm[k] = v.get<std::string>();
    }
    return PairMap(std::move(src), std::move(tgt), std::move(vm));
  }

  FilteredModel parse_model(const json& j, std::set<std::string>& stack) {
    SimplicialPair total = expect_pair(j.at("total"), stack, "model.total");
    std::vector<SimplicialPair> family;
    for (const json& f : j.at("family"))
      family.push_back(expect_pair(f, stack, "model.family"));
    return shapefunctors::build_filtered_model(std::move(total), std::move(family));
  }

  ExactSequence parse_sequence(const json& j, std::set<std::string>& stack) {
    ExactSequence seq;
    for (const json& g : j.at("groups"))
      seq.groups.push_back(expect<FpAbGroup>(g, stack, "sequence.groups"));
    const json& maps = j.at("maps");
    if (maps.size() + 1 != seq.groups.size())
      throw IoError("sequence: need one map between consecutive groups");
    for (std::size_t i = 0; i < maps.size(); ++i) {
      IntMatrix m = parse_matrix(maps[i], "sequence.maps");
      const FpAbGroup& a = seq.groups[i];
      const FpAbGroup& b = seq.groups[i + 1];
      if (m.rows() != b.gens() || m.cols() != a.gens())
        throw ValidationError("hom-shape",
                              "sequence map " + std::to_string(i) +
                                  " has wrong dimensions");
      seq.maps.push_back(GroupHom(a, b, std::move(m)));
    }
    if (j.contains("labels"))
      for (const json& l : j.at("labels"))
        seq.labels.push_back(l.get<std::string>());
    while (seq.labels.size() < seq.groups.size())
      seq.labels.push_back("G" + std::to_string(seq.labels.size()));
    return seq;
  }

  std::map<std::string, json> raw_;
};

// ---------------------------------------------------------------------------
// Canonical serialization. Always fully inlined (no refs), object-form
// matrices, decimal-string integers, fixed field order.

inline json to_json(const FpAbGroup& g) {
  json j = json::object();
  j["kind"] = "group";
  j["generators"] = int_json(Int(g.gens()));
  j["relations"] = matrix_json(g.relations());
  return j;
}

inline json to_json(const GroupHom& h) {
  json j = json::object();
  j["kind"] = "hom";
  j["source"] = to_json(h.source);
  j["target"] = to_json(h.target);
  j["matrix"] = matrix_json(h.matrix);
  return j;
}

inline json to_json(const DirectedPoset& p) {
  json j = json::object();
  j["kind"] = "poset";
  j["size"] = int_json(Int(p.size()));
  json pairs = json::array();
  for (long a = 0; a < p.size(); ++a)
    for (long b = 0; b < p.size(); ++b)
      if (a != b && p.leq(a, b))
        pairs.push_back(json::array({int_json(Int(a)), int_json(Int(b))}));
  j["leq"] = std::move(pairs);
  return j;
}

inline json to_json(const GroupSystem& s) {
  json j = json::object();
  j["kind"] = "system";
  j["variance"] = systems::to_string(s.variance);
  j["poset"] = to_json(s.index);
  json objs = json::array();
  for (const auto& g : s.objects) objs.push_back(to_json(g));
  j["objects"] = std::move(objs);
  json bonds = json::array();
  for (const auto& [key, hom] : s.bonds) {
    json b = json::object();
    b["from"] = int_json(Int(key.first));
    b["to"] = int_json(Int(key.second));
    b["matrix"] = matrix_json(hom.matrix);
    bonds.push_back(std::move(b));
  }
  j["bonds"] = std::move(bonds);
  return j;
}

inline json to_json(const SystemMorphism& m) {
  json j = json::object();
  j["kind"] = "morphism";
  j["source"] = to_json(m.source);
  j["target"] = to_json(m.target);
  json idx = json::array();
  for (long v : m.index_map.map) idx.push_back(int_json(Int(v)));
  j["index_map"] = std::move(idx);
  json comps = json::array();
  for (const auto& c : m.components) comps.push_back(matrix_json(c.matrix));
  j["components"] = std::move(comps);
  return j;
}

inline json to_json(const SimplicialComplex& k) {
  json j = json::object();
  j["kind"] = "complex";
  json simplices = json::array();
  for (const auto& s : k.simplices()) {
    json sx = json::array();
    for (const auto& v : s) sx.push_back(v);
    simplices.push_back(std::move(sx));
  }
  j["simplices"] = std::move(simplices);
  return j;
}

inline json to_json(const SimplicialPair& p) {
  json j = json::object();
  j["kind"] = "pair";
  j["total"] = to_json(p.total);
  j["sub"] = to_json(p.sub);
  return j;
}

inline json to_json(const PairMap& m) {
  json j = json::object();
  j["kind"] = "map";
  j["source"] = to_json(m.source);
  j["target"] = to_json(m.target);
  json vm = json::object();
  for (const auto& [k, v] : m.vertex_map) vm[k] = v;
  j["vertices"] = std::move(vm);
  return j;
}

inline json to_json(const FilteredModel& m) {
  json j = json::object();
  j["kind"] = "model";
  j["total"] = to_json(m.total);
  json fam = json::array();
  for (const auto& p : m.family) fam.push_back(to_json(p));
  j["family"] = std::move(fam);
  return j;
}

inline json to_json(const ExactSequence& s) {
  json j = json::object();
  j["kind"] = "sequence";
  json groups = json::array();
  for (const auto& g : s.groups) groups.push_back(to_json(g));
  j["groups"] = std::move(groups);
  json maps = json::array();
  for (const auto& m : s.maps) maps.push_back(matrix_json(m.matrix));
  j["maps"] = std::move(maps);
  json labels = json::array();
  for (const auto& l : s.labels) labels.push_back(l);
  j["labels"] = std::move(labels);
  return j;
}

inline json to_json(const Artifact& a) {
  return std::visit([](const auto& v) { return to_json(v); }, a);
}

inline std::string serialize(const json& j) { return j.dump(2) + "\n"; }

inline std::string format_canonical(const CanonicalForm& c) {
  if (c.is_trivial()) return "0 (trivial)";
  return c.to_string() + " (free rank " + std::to_string(c.free_rank) + ")";
}

}  // namespace shapelab::io
