#include "evaluator.hpp"

namespace shlie3 {

using detail::Evaluator;
using detail::unit_vector;

Cell alpha_cell(const Lie3Data& D, int i, const std::array<Coords, 5>& a) {
  const Evaluator ev(D);
  return ev.alpha(i, a[0], a[1], a[2], a[3], a[4]);
}

Cell inverse2(const LinearNCat& L, const Cell& alpha) {
  if (alpha.level() != 2) throw std::invalid_argument("inverse along 1-cells needs a 2-cell");
  Cell inv = alpha;
  add_scaled(inv[1], 1, L.t_of(2, alpha[2]));
  for (auto& c : inv[2]) c = -c;
  return inv;
}

CoherenceReport check_coherence(const Lie3Data& D) {
  CoherenceReport out;
  const LinearNCat& L = D.category();
  const std::size_t n0 = D.space().dim(0);
  Evaluator ev(D);
  try {
    ev.build_h_table();
  } catch (const CompositionError&) {
    out.all_composable = false;
    return out;
  }
  const LInfinityData A = underlying_brackets(D);

  std::array<std::size_t, 5> t{};
  const std::size_t total = n0 * n0 * n0 * n0 * n0;
  out.quintuples.reserve(total);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rest = flat;
    for (int p = 4; p >= 0; --p) {
      t[static_cast<std::size_t>(p)] = rest % n0;
      rest /= n0;
    }
    std::array<Coords, 5> o;
    std::vector<BasisIndex> key;
    for (std::size_t p = 0; p < 5; ++p) {
      o[p] = unit_vector(n0, t[p]);
      key.push_back({0, t[p]});
    }
    QuintupleResidual q;
    q.tuple = t;
    q.n5_residual = linfty_residual(A, key).coords(2);
    try {
      std::array<Cell, 4> alpha;
      for (int i = 0; i < 4; ++i) alpha[static_cast<std::size_t>(i)] = ev.alpha(i + 1, o[0], o[1], o[2], o[3], o[4]);
      q.residual = (alpha[0] + inverse2(L, alpha[3])) - (alpha[2] + inverse2(L, alpha[1]));
    } catch (const CompositionError&) {
      q.composable = false;
      out.all_composable = false;
      q.residual = L.zero_cell(2);
    }
    if (!is_zero(q.residual[0])) out.v0_pass = false;
    if (!is_zero(q.residual[1])) out.v1_pass = false;
    if (!is_zero(q.residual[2])) out.v2_pass = false;
    if (q.residual[2] != q.n5_residual) out.v2_matches_n5 = false;
    out.quintuples.push_back(std::move(q));
  }
  return out;
}

Report coherence_summary(const CoherenceReport& c) {
  Report report("coherence law");
  if (c.quintuples.empty() && !c.all_composable) {
    report.count();
    report.add({"eta composite", {}, "not composable, coherence cells undefined", {}});
    return report;
  }
  for (const auto& q : c.quintuples) {
    std::vector<BasisIndex> key;
    for (auto i : q.tuple) key.push_back({0, i});
    if (!q.composable) {
      report.count();
      report.add({"coherence cells", key, "alpha composite not composable", {}});
      continue;
    }
    report.expect_zero("coherence law on V0", key, {q.residual[0]});
    report.expect_zero("coherence law on V1", key, {q.residual[1]});
    report.expect_zero("coherence law on V2", key, {q.residual[2]});
  }
  return report;
}

}  // namespace shlie3
