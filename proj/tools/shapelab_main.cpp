// Command line front end: load artifacts from JSON files, run limit and
// homology computations, verify structural properties, and audit whole
// corpora. Exit codes: 0 all good, 1 a verification failed, 2 bad input.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "shapelab/shapelab.hpp"

namespace {

using shapelab::Int;
using shapelab::ValidationError;
using shapelab::ValidationReport;
using shapelab::abgroup::CanonicalForm;
using shapelab::abgroup::FpAbGroup;
using shapelab::abgroup::GroupHom;
using shapelab::io::Artifact;
using shapelab::io::IoError;
using shapelab::io::json;
using shapelab::io::Workspace;
using shapelab::shapefunctors::FilteredModel;
using shapelab::simplicial::Coeff;
using shapelab::simplicial::ExactSequence;
using shapelab::simplicial::PairMap;
using shapelab::simplicial::SimplicialComplex;
using shapelab::simplicial::SimplicialPair;
using shapelab::systems::GroupSystem;
using shapelab::systems::SystemMorphism;
using shapelab::systems::Variance;

long env_max_degree() {
  const char* v = std::getenv("SHAPELAB_MAX_DEGREE");
  if (v == nullptr) return 3;
  try {
    long n = std::stol(v);
    return n < 0 ? 0 : n;
  } catch (const std::exception&) {
    throw IoError("SHAPELAB_MAX_DEGREE must be a nonnegative integer");
  }
}

Coeff parse_coeff(const std::string& s) {
  if (s == "z" || s == "Z") return Coeff::integers();
  if (s.rfind("z/", 0) == 0 || s.rfind("Z/", 0) == 0)
    return Coeff::mod(shapelab::int_from_string(s.substr(2)));
  throw IoError("coefficient must be z or z/M, got: " + s);
}

// Positional arguments name either files on disk (loaded on the spot)
// or identifiers already bound in the workspace.
std::vector<std::string> bind_targets(Workspace& ws,
                                      const std::vector<std::string>& args) {
  std::vector<std::string> names;
  for (const auto& a : args) {
    if (std::filesystem::is_regular_file(a))
      names.push_back(ws.load_file(a));
    else if (ws.has(a))
      names.push_back(a);
    else
      throw IoError("no such file or identifier: " + a);
  }
  return names;
}

// Takes the artifact by value: callers hand over a freshly resolved
// temporary, and the binding `const auto& x = expect_artifact<...>`
// keeps the returned object alive by lifetime extension.
template <typename T>
T expect_artifact(Artifact a, const char* want) {
  if (T* p = std::get_if<T>(&a)) return std::move(*p);
  throw IoError("artifact is a " + shapelab::io::kind_of(a) + ", expected " +
                want);
}

SimplicialPair as_pair(const Artifact& a) {
  if (const auto* p = std::get_if<SimplicialPair>(&a)) return *p;
  if (const auto* k = std::get_if<SimplicialComplex>(&a))
    return SimplicialPair::absolute(*k);
  throw IoError("artifact is a " + shapelab::io::kind_of(a) +
                ", expected complex or pair");
}

std::string witness_text(const std::vector<long>& w) {
  if (w.empty()) return "";
  return " [" + shapelab::detail::join(w, ", ") + "]";
}

std::string report_detail(const ValidationReport& r) {
  if (r.ok) return "";
  return r.code + witness_text(r.witness) + ": " + r.message;
}

std::string criterion_detail(const shapelab::systems::CriterionReport& r) {
  if (r.holds) return "";
  return r.failed_condition + witness_text(r.witness);
}

json canonical_json(const CanonicalForm& c) {
  json torsion = json::array();
  for (const auto& d : c.torsion) torsion.push_back(shapelab::to_string(d));
  return json{{"free_rank", c.free_rank},
              {"torsion", torsion},
              {"pretty", shapelab::io::format_canonical(c)}};
}

std::string pretty_group(const FpAbGroup& g) {
  return shapelab::io::format_canonical(shapelab::abgroup::canonical_form(g));
}

// Accumulates PASS/FAIL lines plus their machine-readable mirror.
struct Reporter {
  bool json_mode = false;
  bool all = true;
  std::ostringstream text;
  json checks = json::array();

  void line(const std::string& label, bool ok, const std::string& detail = "") {
    all = all && ok;
    text << (ok ? "PASS" : "FAIL") << " " << label;
    if (!detail.empty()) text << " (" << detail << ")";
    text << "\n";
    json row{{"check", label}, {"pass", ok}};
    if (!detail.empty()) row["detail"] = detail;
    checks.push_back(std::move(row));
  }

  int finish(const std::string& command, const std::string& kind) {
    if (json_mode) {
      json out{{"command", command},
               {"kind", kind},
               {"checks", checks},
               {"all_pass", all}};
      std::cout << shapelab::io::serialize(out);
    } else {
      std::cout << text.str();
    }
    return all ? 0 : 1;
  }
};

struct Flags {
  long degree = -1;  // -1 means "kind-specific default"
  std::string coeff = "z";
  bool json_mode = false;
  bool projections = false;
  std::vector<long> subset;
  std::vector<std::string> remove;
};

long degree_or(const Flags& fl, long fallback) {
  return fl.degree >= 0 ? fl.degree : fallback;
}

// ---------------------------------------------------------------------------
// compute

int run_compute(const std::string& kind, Workspace& ws,
                const std::vector<std::string>& names, const Flags& fl) {
  const std::string& name = names.back();
  Artifact art = ws.resolve(name);
  std::ostringstream text;
  json out{{"command", "compute"}, {"kind", kind}, {"target", name}};

  if (kind == "colimit" || kind == "limit") {
    const auto& s = expect_artifact<GroupSystem>(art, "system");
    shapelab::systems::validate_system(s);
    const bool wants_direct = kind == "colimit";
    if (wants_direct != (s.variance == Variance::direct))
      throw ValidationError("variance-mismatch",
                            kind + std::string(" needs a ") +
                                (wants_direct ? "direct" : "inverse") +
                                " system");
    auto l = wants_direct ? shapelab::systems::colimit(s)
                          : shapelab::systems::limit(s);
    auto cf = shapelab::abgroup::canonical_form(l.group);
    text << kind << " of " << name << ": "
         << shapelab::io::format_canonical(cf) << "\n";
    out["canonical"] = canonical_json(cf);
    if (fl.projections) {
      json legs = json::array();
      for (std::size_t a = 0; a < l.legs.size(); ++a) {
        text << "  leg " << a << ": " << l.legs[a].matrix.to_string() << "\n";
        legs.push_back(shapelab::io::matrix_json(l.legs[a].matrix));
      }
      out["legs"] = std::move(legs);
    }
  } else if (kind == "homology" || kind == "cohomology") {
    SimplicialPair p = as_pair(art);
    Coeff c = parse_coeff(fl.coeff);
    long n = degree_or(fl, 0);
    auto piece = kind == "homology"
                     ? shapelab::simplicial::homology_piece(p, n, c)
                     : shapelab::simplicial::cohomology_piece(p, n, c);
    auto cf = shapelab::abgroup::canonical_form(piece.group);
    text << (kind == "homology" ? "H_" : "H^") << n << "(" << name;
    if (!c.is_integral()) text << "; " << c.to_string();
    text << ") = " << shapelab::io::format_canonical(cf) << "\n";
    out["degree"] = n;
    out["coefficients"] = c.to_string();
    out["canonical"] = canonical_json(cf);
    if (fl.projections) {
      for (long j = 0; j < piece.cycles.cols(); ++j) {
        text << "  generator " << j << " =";
        bool any = false;
        for (long i = 0; i < piece.cycles.rows(); ++i) {
          const Int& v = piece.cycles.at(i, j);
          if (v == 0) continue;
          text << (any ? " + " : " ") << shapelab::to_string(v) << "*"
               << shapelab::simplicial::simplex_name(
                      piece.basis[static_cast<std::size_t>(i)]);
          any = true;
        }
        if (!any) text << " 0";
        text << "\n";
      }
      out["cycles"] = shapelab::io::matrix_json(piece.cycles);
    }
  } else {  // shape-homology | shape-cohomology
    const auto& m = expect_artifact<FilteredModel>(art, "model");
    Coeff c = parse_coeff(fl.coeff);
    long n = degree_or(fl, 0);
    auto r = kind == "shape-homology"
                 ? shapelab::shapefunctors::shape_homology(m, n, c)
                 : shapelab::shapefunctors::shape_cohomology(m, n, c);
    auto cf = shapelab::abgroup::canonical_form(r.limit.group);
    bool iso = shapelab::abgroup::is_isomorphism(r.comparison);
    text << kind << " in degree " << n << " of " << name << ": "
         << shapelab::io::format_canonical(cf) << "\n";
    text << "  comparison with the total pair: "
         << (iso ? "isomorphism" : "NOT an isomorphism") << "\n";
    out["degree"] = n;
    out["coefficients"] = c.to_string();
    out["canonical"] = canonical_json(cf);
    out["comparison_iso"] = iso;
    if (fl.projections) {
      json legs = json::array();
      for (std::size_t a = 0; a < r.limit.legs.size(); ++a) {
        text << "  leg " << a << ": " << r.limit.legs[a].matrix.to_string()
             << "\n";
        legs.push_back(shapelab::io::matrix_json(r.limit.legs[a].matrix));
      }
      text << "  comparison: " << r.comparison.matrix.to_string() << "\n";
      out["legs"] = std::move(legs);
      out["comparison"] = shapelab::io::matrix_json(r.comparison.matrix);
    }
  }

  if (fl.json_mode)
    std::cout << shapelab::io::serialize(out);
  else
    std::cout << text.str();
  return 0;
}

// ---------------------------------------------------------------------------
// verify

// Supporting definition files may precede the operands on the command
// line, so a verification consumes the last k targets.
std::vector<std::string> last_targets(const std::vector<std::string>& names,
                                      std::size_t k, const char* what) {
  if (names.size() < k)
    throw IoError(std::string("verify ") + what + " needs " +
                  std::to_string(k) + " target(s)");
  return std::vector<std::string>(names.end() - static_cast<long>(k),
                                  names.end());
}

int run_verify(const std::string& kind, Workspace& ws,
               const std::vector<std::string>& names, const Flags& fl) {
  Reporter rep;
  rep.json_mode = fl.json_mode;

  if (kind == "system") {
    auto t = last_targets(names, 1, "system");
    const auto& s = expect_artifact<GroupSystem>(ws.resolve(t[0]), "system");
    auto r = shapelab::systems::check_system(s);
    rep.line("system " + t[0] + " valid", r.ok, report_detail(r));
  } else if (kind == "morphism") {
    auto t = last_targets(names, 1, "morphism");
    const auto& m =
        expect_artifact<SystemMorphism>(ws.resolve(t[0]), "morphism");
    auto r = shapelab::systems::check_morphism(m);
    rep.line("morphism " + t[0] + " valid", r.ok, report_detail(r));
  } else if (kind == "equivalence") {
    auto t = last_targets(names, 2, "equivalence");
    const auto& f =
        expect_artifact<SystemMorphism>(ws.resolve(t[0]), "morphism");
    const auto& g =
        expect_artifact<SystemMorphism>(ws.resolve(t[1]), "morphism");
    auto r = shapelab::systems::morphisms_equivalent(f, g);
    std::string detail;
    if (!r.equivalent)
      detail = "differ at index " + std::to_string(r.failed_index) +
               witness_text(r.witnesses);
    rep.line("morphisms " + t[0] + " ~ " + t[1], r.equivalent, detail);
  } else if (kind == "exactness") {
    auto t = last_targets(names, 1, "exactness");
    Artifact art = ws.resolve(t[0]);
    ExactSequence seq;
    if (const auto* s = std::get_if<ExactSequence>(&art)) {
      seq = *s;
    } else {
      SimplicialPair p = as_pair(art);
      seq = shapelab::simplicial::long_exact_sequence(
          p, parse_coeff(fl.coeff), degree_or(fl, env_max_degree()));
    }
    auto audit = shapelab::simplicial::audit_exactness(seq);
    if (audit.empty())
      rep.line("sequence " + t[0] + " too short to have interior positions",
               true);
    for (std::size_t i = 0; i < audit.size(); ++i)
      rep.line("exact at " + seq.labels[i + 1], audit[i],
               audit[i] ? ""
                        : "image of " + seq.labels[i] + " differs from kernel");
  } else if (kind == "excision") {
    auto t = last_targets(names, 1, "excision");
    const auto& m = expect_artifact<FilteredModel>(ws.resolve(t[0]), "model");
    if (fl.remove.empty()) throw IoError("verify excision needs --remove");
    auto report = shapelab::shapefunctors::excision_pipeline(
        m, fl.remove, degree_or(fl, env_max_degree()), parse_coeff(fl.coeff));
    for (const auto& d : report.degrees) {
      std::string tag = "degree " + std::to_string(d.degree) + ": ";
      rep.line(tag + "excisable members cofinal", d.member_criterion.holds,
               criterion_detail(d.member_criterion));
      rep.line(tag + "relabelled family criterion", d.relabel_criterion.holds,
               criterion_detail(d.relabel_criterion));
      rep.line(tag + "cut comparison limit iso", d.member_limit_iso);
      rep.line(tag + "relabel comparison limit iso", d.relabel_limit_iso);
      rep.line(tag + "inclusion factors through the cut system",
               d.composition_ok);
      rep.line(tag + "excision comparison is an isomorphism", d.excision_iso);
    }
  } else if (kind == "naturality") {
    auto t = last_targets(names, 3, "naturality");
    const auto& f = expect_artifact<PairMap>(ws.resolve(t[0]), "map");
    const auto& sm =
        expect_artifact<FilteredModel>(ws.resolve(t[1]), "model");
    const auto& tm =
        expect_artifact<FilteredModel>(ws.resolve(t[2]), "model");
    auto r = shapelab::shapefunctors::naturality_audit(
        f, sm, tm, degree_or(fl, 0), parse_coeff(fl.coeff));
    rep.line("source coboundary morphism valid", r.source_delta_ok.ok,
             report_detail(r.source_delta_ok));
    rep.line("target coboundary morphism valid", r.target_delta_ok.ok,
             report_detail(r.target_delta_ok));
    std::string detail;
    if (!r.system_square.equivalent)
      detail = "differ at index " + std::to_string(r.system_square.failed_index) +
               witness_text(r.system_square.witnesses);
    rep.line("per-index squares commute up to equivalence",
             r.system_square.equivalent, detail);
    rep.line("limit-level square commutes", r.limit_square_ok);
  } else {  // cofinality
    auto t = last_targets(names, 1, "cofinality");
    Artifact art = ws.resolve(t[0]);
    const shapelab::posets::DirectedPoset* p = nullptr;
    if (const auto* s = std::get_if<GroupSystem>(&art))
      p = &s->index;
    else if (const auto* q = std::get_if<shapelab::posets::DirectedPoset>(&art))
      p = q;
    else
      throw IoError("artifact is a " + shapelab::io::kind_of(art) +
                    ", expected system or poset");
    std::vector<long> sub = fl.subset;
    if (sub.empty()) {
      auto top = shapelab::posets::find_top(*p);
      if (!top) {
        rep.line("index set has a top element", false);
        return rep.finish("verify", kind);
      }
      sub.push_back(*top);
    }
    rep.line("subset {" + shapelab::detail::join(sub, ", ") + "} directed",
             shapelab::posets::is_directed_subset(sub, *p));
    rep.line("subset {" + shapelab::detail::join(sub, ", ") + "} cofinal",
             shapelab::posets::is_cofinal(sub, *p));
  }

  return rep.finish("verify", kind);
}

// ---------------------------------------------------------------------------
// audit

void audit_system(Reporter& rep, const std::string& name, const GroupSystem& s) {
  auto r = shapelab::systems::check_system(s);
  rep.line("system " + name + " valid", r.ok, report_detail(r));
  if (!r.ok) return;
  auto top = shapelab::posets::find_top(s.index);
  if (!top) return;
  auto res = shapelab::systems::restrict_to_cofinal(s, {*top});
  auto ml = shapelab::systems::limit_of_morphism(res.comparison);
  bool iso = shapelab::abgroup::is_isomorphism(ml.map);
  const FpAbGroup& value = s.variance == Variance::direct
                               ? ml.target.group
                               : ml.source.group;
  rep.line("system " + name + " top restriction induces limit iso", iso,
           (s.variance == Variance::direct ? "colimit " : "limit ") +
               pretty_group(value));
}

void audit_model(Reporter& rep, const std::string& name, const FilteredModel& m,
                 long cap) {
  for (long n = 0; n <= cap; ++n) {
    auto h = shapelab::shapefunctors::shape_homology(m, n, Coeff::integers());
    rep.line("model " + name + " shape homology matches total in degree " +
                 std::to_string(n),
             shapelab::abgroup::is_isomorphism(h.comparison),
             pretty_group(h.limit.group));
    auto ch = shapelab::shapefunctors::shape_cohomology(m, n, Coeff::integers());
    rep.line("model " + name + " shape cohomology matches total in degree " +
                 std::to_string(n),
             shapelab::abgroup::is_isomorphism(ch.comparison),
             pretty_group(ch.limit.group));
  }
}

void audit_artifact(Reporter& rep, Workspace& ws, const std::string& name,
                    long cap) {
  Artifact art = ws.resolve(name);
  if (const auto* g = std::get_if<FpAbGroup>(&art)) {
    rep.line("group " + name, true, pretty_group(*g));
  } else if (const auto* h = std::get_if<GroupHom>(&art)) {
    rep.line("hom " + name + " well-defined",
             shapelab::abgroup::hom_well_defined(*h));
  } else if (const auto* p = std::get_if<shapelab::posets::DirectedPoset>(&art)) {
    auto top = shapelab::posets::find_top(*p);
    rep.line("poset " + name + " directed with top", top.has_value(),
             "size " + std::to_string(p->size()));
  } else if (const auto* s = std::get_if<GroupSystem>(&art)) {
    audit_system(rep, name, *s);
  } else if (const auto* m = std::get_if<SystemMorphism>(&art)) {
    auto r = shapelab::systems::check_morphism(*m);
    rep.line("morphism " + name + " valid", r.ok, report_detail(r));
    if (r.ok) {
      auto ml = shapelab::systems::limit_of_morphism(*m);
      rep.line("morphism " + name + " induced limit map", true,
               pretty_group(ml.map.source) + " -> " +
                   pretty_group(ml.map.target));
    }
  } else if (std::holds_alternative<SimplicialComplex>(art) ||
             std::holds_alternative<SimplicialPair>(art)) {
    SimplicialPair p = as_pair(art);
    for (long n = 0; n <= cap; ++n)
      rep.line("H_" + std::to_string(n) + "(" + name + ")", true,
               pretty_group(
                   shapelab::simplicial::homology(p, n, Coeff::integers())));
  } else if (const auto* f = std::get_if<PairMap>(&art)) {
    for (long n = 0; n <= cap; ++n) {
      auto h = shapelab::simplicial::induced_hom(*f, n, Coeff::integers());
      rep.line("map " + name + " induced hom in degree " + std::to_string(n),
               shapelab::abgroup::hom_well_defined(h),
               pretty_group(h.source) + " -> " + pretty_group(h.target));
    }
  } else if (const auto* m = std::get_if<FilteredModel>(&art)) {
    audit_model(rep, name, *m, cap);
  } else if (const auto* q = std::get_if<ExactSequence>(&art)) {
    auto audit = shapelab::simplicial::audit_exactness(*q);
    for (std::size_t i = 0; i < audit.size(); ++i)
      rep.line("sequence " + name + " exact at " + q->labels[i + 1], audit[i]);
  }
}

void audit_random(Reporter& rep, unsigned long long seed, long cap) {
  namespace ri = shapelab::random_instances;
  ri::Rng rng(seed);

  for (Variance v : {Variance::direct, Variance::inverse}) {
    const char* vn = v == Variance::direct ? "direct" : "inverse";
    long good = 0;
    const long total = 5;
    for (long k = 0; k < total; ++k) {
      auto s = ri::random_system(rng, v, 6, 3, 9);
      if (!shapelab::systems::check_system(s).ok) continue;
      auto top = shapelab::posets::find_top(s.index);
      auto res = shapelab::systems::restrict_to_cofinal(s, {*top});
      auto ml = shapelab::systems::limit_of_morphism(res.comparison);
      if (shapelab::abgroup::is_isomorphism(ml.map)) ++good;
    }
    rep.line("random " + std::string(vn) +
                 " systems: top restriction induces limit iso",
             good == total, std::to_string(good) + "/" + std::to_string(total));
  }

  {
    long good = 0;
    const long total = 5;
    for (long k = 0; k < total; ++k) {
      auto s = ri::random_system(rng, k % 2 == 0 ? Variance::direct
                                                 : Variance::inverse,
                                 5, 2, 6);
      auto f = ri::random_endomorphism(rng, s);
      auto g = ri::perturb_equivalent(rng, f);
      bool ok = shapelab::systems::morphisms_equivalent(f, g).equivalent;
      if (ok) {
        auto lf = shapelab::systems::limit_of_morphism(f);
        auto lg = shapelab::systems::limit_of_morphism(g);
        ok = shapelab::abgroup::hom_equal(lf.map, lg.map);
      }
      if (ok) ++good;
    }
    rep.line("random morphism perturbations: equivalent with equal limit maps",
             good == total, std::to_string(good) + "/" + std::to_string(total));
  }

  {
    long good = 0;
    const long total = 3;
    long deg_cap = std::min<long>(cap, 2);
    for (long k = 0; k < total; ++k) {
      auto m = ri::random_model(rng, 7, 5, 2, 5);
      bool ok = true;
      for (long n = 0; n <= deg_cap; ++n) {
        auto h = shapelab::shapefunctors::shape_homology(m, n, Coeff::integers());
        ok = ok && shapelab::abgroup::is_isomorphism(h.comparison);
        auto c =
            shapelab::shapefunctors::shape_cohomology(m, n, Coeff::integers());
        ok = ok && shapelab::abgroup::is_isomorphism(c.comparison);
      }
      if (ok) ++good;
    }
    rep.line("random models: shape (co)homology matches the total pair",
             good == total, std::to_string(good) + "/" + std::to_string(total));
  }

  {
    long good = 0;
    const long total = 3;
    for (long k = 0; k < total; ++k) {
      auto p = ri::random_pair(rng, 7, 5, 2);
      auto seq = shapelab::simplicial::long_exact_sequence(
          p, Coeff::integers(), std::min<long>(cap, 2));
      auto audit = shapelab::simplicial::audit_exactness(seq);
      bool ok = true;
      for (bool b : audit) ok = ok && b;
      if (ok) ++good;
    }
    rep.line("random pairs: long exact sequence exact at every position",
             good == total, std::to_string(good) + "/" + std::to_string(total));
  }
}

int run_audit(Workspace& ws, const std::vector<std::string>& names,
              std::optional<unsigned long long> seed, const Flags& fl) {
  Reporter rep;
  rep.json_mode = fl.json_mode;
  long cap = env_max_degree();
  (void)names;  // loading already bound them; audit walks the whole workspace
  for (const auto& name : ws.names()) audit_artifact(rep, ws, name, cap);
  if (seed) audit_random(rep, *seed, cap);
  if (ws.names().empty() && !seed)
    throw IoError("audit needs files to load or --seed");
  return rep.finish("audit", "corpus");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "workbench for direct and inverse systems of finitely presented "
      "abelian groups, simplicial homology, and shape-style limit functors"};
  app.require_subcommand(1);

  Flags fl;
  std::vector<std::string> args;
  std::string kind;
  unsigned long long seed_value = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--degree", fl.degree, "homological degree");
    cmd->add_option("--coeff", fl.coeff, "coefficients: z or z/M");
    cmd->add_flag("--json", fl.json_mode, "machine-readable report");
  };

  CLI::App* compute = app.add_subcommand("compute", "compute an invariant");
  compute->add_option("what", kind, "computation")
      ->required()
      ->check(CLI::IsMember({"colimit", "limit", "homology", "cohomology",
                             "shape-homology", "shape-cohomology"}));
  compute->add_option("targets", args, "files or identifiers")->required();
  add_common(compute);
  compute->add_flag("--projections", fl.projections,
                    "also print canonical maps");

  CLI::App* verify = app.add_subcommand("verify", "check a property");
  verify->add_option("what", kind, "property")
      ->required()
      ->check(CLI::IsMember({"system", "morphism", "equivalence", "exactness",
                             "excision", "naturality", "cofinality"}));
  verify->add_option("targets", args, "files or identifiers")->required();
  add_common(verify);
  verify->add_option("--subset", fl.subset,
                     "index subset for cofinality (default: the top element)");
  verify->add_option("--remove", fl.remove,
                     "vertex labels to excise");

  CLI::App* audit = app.add_subcommand("audit", "run the whole battery");
  audit->add_option("targets", args, "files to load");
  add_common(audit);
  CLI::Option* seed_opt =
      audit->add_option("--seed", seed_value, "randomized self-checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    Workspace ws;
    std::vector<std::string> targets = bind_targets(ws, args);
    if (compute->parsed()) return run_compute(kind, ws, targets, fl);
    if (verify->parsed()) return run_verify(kind, ws, targets, fl);
    std::optional<unsigned long long> seed;
    if (seed_opt->count() > 0) seed = seed_value;
    return run_audit(ws, targets, seed, fl);
  } catch (const ValidationError& e) {
    std::cerr << "FAIL " << e.what() << witness_text(e.witness()) << "\n";
    return 1;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
}
