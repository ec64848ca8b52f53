#include "shlie3/cli.hpp"

#include <chrono>
#include <functional>
#include <sstream>

namespace shlie3::cli {

using nlohmann::json;

bool RunReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const std::vector<std::string>& commands() {
  static const std::vector<std::string> c{"check", "convert", "coherence", "nerve", "ez-demo", "obstruction-demo", "report"};
  return c;
}

namespace {

CheckResult from_report(const Report& r, std::string name = {}, std::string note = {}) {
  CheckResult c;
  c.name = name.empty() ? r.name() : std::move(name);
  c.passed = r.passed();
  c.checked = r.checked();
  c.violations = r.violations();
  c.note = std::move(note);
  return c;
}

CheckResult boolean(std::string name, bool ok, std::string note = {}) {
  CheckResult c;
  c.name = std::move(name);
  c.passed = ok;
  c.checked = 1;
  c.note = std::move(note);
  return c;
}

// runs f, stamping every result it appends with the elapsed time when asked
void timed(RunReport& out, const Flags& flags, const std::function<void()>& f) {
  const std::size_t before = out.checks.size();
  const auto t0 = std::chrono::steady_clock::now();
  f();
  if (!flags.timing) return;
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  for (std::size_t i = before; i < out.checks.size(); ++i) out.checks[i].seconds = s / static_cast<double>(out.checks.size() - before);
}

json coords_json(const Coords& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

json matrix_json(const Matrix& M) {
  json rows = json::array();
  for (std::size_t r = 0; r < M.rows(); ++r) rows.push_back(coords_json(M.row(r)));
  return rows;
}

void check_linfinity(RunReport& out, const LInfinityData& A, const Flags& flags) {
  std::vector<int> ns;
  if (flags.n) {
    if (*flags.n < 1 || *flags.n > 5) throw UsageError("--n must be between 1 and 5");
    ns.push_back(*flags.n);
  } else ns = {1, 2, 3, 4, 5};
  for (int n : ns)
    timed(out, flags, [&] {
      const ConditionReport c = check_condition(A, n);
      out.checks.push_back(
          from_report(c.report, "condition n=" + std::to_string(n), c.trivially_empty ? "no basis tuple contributes" : ""));
    });
  const SpecialWitness w = is_special(A);
  out.details["special"] = w.special;
  if (!w.special) out.details["special_witness"] = {{"map", w.map}, {"key", to_string(w.key)}};
}

void check_lie3(RunReport& out, const Lie3Data& D, const Flags& flags) {
  timed(out, flags, [&] { out.checks.push_back(from_report(check_axioms(D.category()), "linear 2-category axioms")); });
  timed(out, flags, [&] { out.checks.push_back(from_report(check_bifunctor(D), "bracket functoriality")); });
  timed(out, flags, [&] { out.checks.push_back(from_report(check_jacobiator(D), "jacobiator naturality")); });
  timed(out, flags, [&] { out.checks.push_back(from_report(check_identiator(D), "identiator modification law")); });
  timed(out, flags, [&] { out.checks.push_back(from_report(coherence_summary(check_coherence(D)), "coherence law")); });
}

LinearNCat one_category(const AlgebraSpecFile& spec) {
  const LinearNCat L = to_category(spec);
  if (L.n() != 1) throw UsageError("this command needs a chain spec with two degrees (a linear 1-category)");
  return L;
}

void run_check(RunReport& out, const AlgebraSpecFile& spec, const Flags& flags) {
  if (flags.n && spec.kind != Kind::linfinity) throw UsageError("--n applies to linfinity specs only");
  switch (spec.kind) {
    case Kind::linfinity: check_linfinity(out, to_linfinity_data(spec), flags); break;
    case Kind::lie3: check_lie3(out, to_lie3_data(spec), flags); break;
    case Kind::chain: {
      const LinearNCat L = to_category(spec);
      timed(out, flags, [&] { out.checks.push_back(from_report(check_axioms(L), "linear category axioms")); });
      break;
    }
    case Kind::simplicial:
      timed(out, flags, [&] { out.checks.push_back(from_report(check_simplicial_identities(to_simplicial(spec)))); });
      break;
  }
}

void run_convert(RunReport& out, const AlgebraSpecFile& spec, const Flags& flags) {
  if (flags.to != "lie3" && flags.to != "linfinity") throw UsageError("convert needs --to lie3 or --to linfinity");
  if (spec.kind != Kind::linfinity && spec.kind != Kind::lie3) throw UsageError("convert takes linfinity or lie3 specs");
  AlgebraSpecFile result;
  try {
    if (to_string(spec.kind) == flags.to) result = spec;
    else if (spec.kind == Kind::linfinity) result = spec_of(from_linfinity(to_linfinity_data(spec)));
    else result = spec_of(to_linfinity(to_lie3_data(spec)));
  } catch (const ConversionRefused& e) {
    out.details["refused"] = e.what();
    for (const Report& r : e.reports()) out.checks.push_back(from_report(r));
    return;
  }
  result.name = spec.name;
  result.description = spec.description;
  out.checks.push_back(boolean("conversion to " + flags.to, true));
  out.emitted = render_spec(result);
}

void run_coherence(RunReport& out, const AlgebraSpecFile& spec, const Flags& flags) {
  Lie3Data D = [&] {
    if (spec.kind == Kind::lie3) return to_lie3_data(spec);
    if (spec.kind == Kind::linfinity) {
      const LInfinityData A = to_linfinity_data(spec);
      if (!is_special(A).special) throw UsageError("coherence cells need special brackets");
      return assemble_lie3(A);
    }
    throw UsageError("coherence takes lie3 or linfinity specs");
  }();
  CoherenceReport c;
  timed(out, flags, [&] {
    c = check_coherence(D);
    out.checks.push_back(from_report(coherence_summary(c), "coherence law"));
  });
  json qs = json::array();
  for (const auto& q : c.quintuples) {
    json row;
    row["tuple"] = q.tuple;
    row["composable"] = q.composable;
    row["residual"] = {coords_json(q.residual[0]), coords_json(q.residual[1]), coords_json(q.residual[2])};
    row["n5_residual"] = coords_json(q.n5_residual);
    qs.push_back(std::move(row));
  }
  out.details["quintuples"] = std::move(qs);
  out.details["v2_residual_equals_condition_5"] = c.v2_matches_n5;
}

json homology_json(const ChainComplexT& C) {
  const int top = std::min(C.top() - 1, 3);
  return top < 0 ? json::array() : json(homology_dims(C, top));
}

void run_nerve(RunReport& out, const AlgebraSpecFile& spec, const Flags& flags) {
  const LinearNCat L = one_category(spec);
  if (flags.trunc < 2) throw UsageError("--trunc must be at least 2");
  const SimplicialVS S = nerve(L, flags.trunc);
  out.checks.push_back(from_report(check_simplicial_identities(S)));
  const MooreComplex M = moore(S);
  out.checks.push_back(boolean("normalized nerve equals the chain complex", moore_of_nerve_check(L, flags.trunc)));
  out.details["nerve_dims"] = S.dims;
  out.details["moore_dims"] = M.complex.dims;
  out.details["homology_dims"] = homology_json(M.complex);
  out.details["moore_boundary_1"] = matrix_json(M.complex.d[1]);
  out.emitted = render_spec(spec_of(S));
}

void run_ez(RunReport& out, const AlgebraSpecFile& spec, const Flags& flags) {
  const SimplicialVS S = [&] {
    if (spec.kind == Kind::simplicial) {
      SimplicialVS s = to_simplicial(spec);
      validate(s);
      return s;
    }
    if (spec.kind == Kind::chain) return nerve(one_category(spec), flags.trunc);
    throw UsageError("ez-demo takes simplicial or chain specs");
  }();
  EzAwCheck c;
  timed(out, flags, [&] {
    c = aw_ez_homology_check(S, S);
    out.checks.push_back(boolean("shuffle map is a chain map", c.ez_chain_map));
    out.checks.push_back(boolean("Alexander-Whitney map is a chain map", c.aw_chain_map));
    out.checks.push_back(boolean("AW after EZ is the identity on N(S) (x) N(S)", c.aw_ez_identity));
    out.checks.push_back(boolean("AW after EZ induces the identity on homology", c.aw_ez_homology_identity));
    out.checks.push_back(boolean("EZ after AW induces the identity on homology of N(S (x) S)", c.ez_aw_homology_identity));
  });
  const MooreComplex M = moore(S), MT = moore(tensor_svs(S, S));
  out.details["max_degree"] = c.max_degree;
  out.details["moore_dims"] = M.complex.dims;
  out.details["moore_tensor_dims"] = MT.complex.dims;
  out.details["homology_dims"] = homology_json(M.complex);
  out.details["tensor_homology_dims"] = homology_json(MT.complex);
  if (S.trunc >= 2) out.details["ez_degree_2"] = matrix_json(ez(S, S, 2).f[2]);
}

void run_obstruction(RunReport& out, const AlgebraSpecFile& spec, const Flags& flags) {
  const LinearNCat L = one_category(spec);
  ObstructionReport r;
  timed(out, flags, [&] { r = obstruction_demo(L); });
  const bool has_v1 = L.space().dim(1) > 0;
  out.checks.push_back(boolean("composition defect identity", r.defect_identity_holds,
                               std::to_string(r.defect_pairs_checked) + " pairs of composable pairs"));
  if (has_v1) {
    out.checks.push_back(boolean("witness for l_2 (d_2 (x) d_2) != d_2 l_3", r.witness.has_value() && r.witness_matches_correction,
                                 "difference equals the two correction terms"));
    out.checks.push_back(boolean("l_2 has a kernel", r.l2_kernel_dim > 0));
  } else {
    out.checks.push_back(boolean("no obstruction", !r.obstruction && r.corrections_vanish));
  }
  out.details["obstruction"] = r.obstruction;
  out.details["statement"] = r.obstruction ? "obstruction" : "no obstruction";
  json faces = json::array();
  for (auto [n, i] : r.failing_faces) faces.push_back({n, i});
  out.details["failing_faces"] = std::move(faces);
  out.details["degeneracies_commute"] = r.degeneracies_commute;
  out.details["l2"] = {{"domain_dim", r.l2_domain_dim}, {"codomain_dim", r.l2_codomain_dim}, {"kernel_dim", r.l2_kernel_dim}};
  if (r.witness) {
    const auto& w = *r.witness;
    out.details["witness"] = {{"left_simplex", w.left},
                              {"right_simplex", w.right},
                              {"faces_then_l", coords_json(w.faces_then_l)},
                              {"l_then_face", coords_json(w.l_then_face)},
                              {"correction", coords_json(w.correction)}};
  }
}

void run_report(RunReport& out, const AlgebraSpecFile& spec, const Flags& flags) {
  run_check(out, spec, flags);
  switch (spec.kind) {
    case Kind::linfinity: {
      const LInfinityData A = to_linfinity_data(spec);
      if (!flags.n && out.passed() && is_special(A).special)
        timed(out, flags, [&] {
          const Lie3Data D = from_linfinity(A);
          out.checks.push_back(boolean("round trip through Lie 3-algebra", to_linfinity(D) == A));
        });
      break;
    }
    case Kind::lie3:
      if (out.passed())
        timed(out, flags, [&] {
          const Lie3Data D = to_lie3_data(spec);
          out.checks.push_back(boolean("round trip through brackets", from_linfinity(to_linfinity(D)) == D));
        });
      break;
    case Kind::chain:
      if (spec.dims.size() == 2) {
        run_nerve(out, spec, flags);
        out.emitted.reset();
        run_obstruction(out, spec, flags);
      }
      break;
    case Kind::simplicial: run_ez(out, spec, flags); break;
  }
}

}  // namespace

RunReport run(const std::string& command, const AlgebraSpecFile& spec, const Flags& flags) {
  RunReport out;
  out.command = command;
  out.kind = to_string(spec.kind);
  if (!flags.to.empty() && command != "convert") throw UsageError("--to applies to convert only");
  if (command == "check") run_check(out, spec, flags);
  else if (command == "convert") run_convert(out, spec, flags);
  else if (command == "coherence") run_coherence(out, spec, flags);
  else if (command == "nerve") run_nerve(out, spec, flags);
  else if (command == "ez-demo") run_ez(out, spec, flags);
  else if (command == "obstruction-demo") run_obstruction(out, spec, flags);
  else if (command == "report") run_report(out, spec, flags);
  else throw UsageError("unknown command '" + command + "'");
  return out;
}

namespace {

json violation_json(const Violation& v) {
  json res = json::array();
  for (const auto& b : v.residual) res.push_back(coords_json(b));
  json out = {{"law", v.law}, {"tuple", to_string(v.tuple)}, {"residual", std::move(res)}};
  if (!v.detail.empty()) out["detail"] = v.detail;
  return out;
}

std::string residual_text(const Violation& v) {
  std::string s;
  for (std::size_t i = 0; i < v.residual.size(); ++i) s += (i ? " | " : "") + to_string(v.residual[i]);
  return s;
}

}  // namespace

std::string render_json(const RunReport& r, const Flags& flags) {
  json j;
  j["command"] = r.command;
  j["kind"] = r.kind;
  j["passed"] = r.passed();
  json checks = json::array();
  for (const auto& c : r.checks) {
    json cj = {{"name", c.name}, {"passed", c.passed}, {"checked", c.checked}, {"violations_total", c.violations.size()}};
    json vs = json::array();
    for (std::size_t i = 0; i < c.violations.size() && i < flags.max_violations; ++i) vs.push_back(violation_json(c.violations[i]));
    cj["violations"] = std::move(vs);
    if (!c.note.empty()) cj["note"] = c.note;
    if (c.seconds) cj["seconds"] = *c.seconds;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  j["details"] = r.details;
  return j.dump(2) + "\n";
}

std::string render_text(const RunReport& r, const Flags& flags) {
  std::ostringstream os;
  os << r.command << " (" << r.kind << ")\n";
  for (const auto& c : r.checks) {
    os << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name << "  (" << c.checked << " checked";
    if (!c.violations.empty()) os << ", " << c.violations.size() << " violations";
    if (c.seconds) os << ", " << *c.seconds << " s";
    os << ")";
    if (!c.note.empty()) os << "  " << c.note;
    os << "\n";
    for (std::size_t i = 0; i < c.violations.size() && i < flags.max_violations; ++i) {
      const auto& v = c.violations[i];
      os << "      " << v.law << " at " << to_string(v.tuple);
      if (!v.detail.empty()) os << " [" << v.detail << "]";
      if (!v.residual.empty()) os << ": " << residual_text(v);
      os << "\n";
    }
    if (c.violations.size() > flags.max_violations)
      os << "      ... " << c.violations.size() - flags.max_violations << " more\n";
  }
  for (const auto& [k, v] : r.details.items()) {
    if (k == "quintuples") {
      std::size_t nonzero = 0;
      for (const auto& q : v) {
        bool zero = true;
        for (const auto& comp : q["residual"])
          for (const auto& x : comp) zero = zero && x == "0";
        if (zero) continue;
        if (nonzero++ < flags.max_violations)
          os << "  residual at " << q["tuple"].dump() << ": " << q["residual"].dump() << "  condition 5: " << q["n5_residual"].dump()
             << "\n";
      }
      os << "  quintuples: " << v.size() << ", nonzero residuals: " << nonzero << "\n";
      continue;
    }
    os << "  " << k << ": " << v.dump() << "\n";
  }
  os << "result: " << (r.passed() ? "pass" : "FAIL") << "\n";
  return os.str();
}

}  // namespace shlie3::cli
