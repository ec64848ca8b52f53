#include "shlie3/lie3.hpp"

namespace shlie3 {

LInfinityData underlying_brackets(const Lie3Data& D) {
  const GradedSpace& V = D.space();
  MultiMap l2 = D.bracket().filtered([](const MultiMap::Key& k) { return !(k[0].degree == 1 && k[1].degree == 1); });
  return LInfinityData(V, D.category().differential(), std::move(l2), D.jacobiator(), D.identiator().scaled(-1));
}

LInfinityData to_linfinity(const Lie3Data& D) {
  std::vector<Report> failed;
  for (Report r : {check_bifunctor(D), check_jacobiator(D), check_identiator(D)})
    if (!r.passed()) failed.push_back(std::move(r));
  // coherence needs the earlier conditions to be meaningful
  if (failed.empty()) {
    Report r = coherence_summary(check_coherence(D));
    if (!r.passed()) failed.push_back(std::move(r));
  }
  if (!failed.empty()) throw ConversionRefused("Lie 3-algebra checks failed", std::move(failed));
  LInfinityData A = underlying_brackets(D);
  for (int n = 1; n <= 5; ++n) {
    const ConditionReport c = check_condition(A, n);
    if (!c.passed())
      throw std::logic_error("valid Lie 3-algebra produced brackets failing condition n=" + std::to_string(n));
  }
  return A;
}

Lie3Data assemble_lie3(const LInfinityData& A) {
  const GradedSpace& V = A.space();
  LinearNCat L(2, V, A.l(1));
  MultiMap J = A.l(3).filtered([](const MultiMap::Key& k) { return k[0].degree + k[1].degree + k[2].degree == 0; });
  return Lie3Data(std::move(L), A.l(2), std::move(J), A.l(4).scaled(-1));
}

Lie3Data from_linfinity(const LInfinityData& A) {
  const SpecialWitness w = is_special(A);
  if (!w.special) {
    Report r("special form");
    r.count();
    r.add({"special form: " + w.map + " must vanish on this key", w.key, "", {}});
    throw ConversionRefused("brackets are not in special form", {r});
  }
  std::vector<Report> failed;
  for (int n = 1; n <= 5; ++n) {
    ConditionReport c = check_condition(A, n);
    if (!c.passed()) failed.push_back(std::move(c.report));
  }
  if (!failed.empty()) throw ConversionRefused("l-infinity conditions fail", std::move(failed));
  return assemble_lie3(A);
}

}  // namespace shlie3
