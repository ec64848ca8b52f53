#include "evaluator.hpp"

namespace shlie3 {

using detail::Evaluator;
using detail::unit_vector;

std::pair<Cell, Cell> eta_epsilon(const Lie3Data& D, const Coords& x, const Coords& y, const Coords& z,
                                  const Coords& u) {
  const Evaluator ev(D);
  return {ev.eta(x, y, z, u), ev.epsilon(x, y, z, u)};
}

Report check_identiator(const Lie3Data& D) {
  Report report("identiator is a 2-modification");
  const LinearNCat& L = D.category();
  const std::size_t n0 = D.space().dim(0);
  Evaluator ev(D);
  try {
    ev.build_h_table();
  } catch (const CompositionError& e) {
    report.count();
    report.add({"eta composite", {}, std::string("not composable: ") + e.what(), {}});
    return report;
  }

  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n0; ++j)
      for (std::size_t k = 0; k < n0; ++k)
        for (std::size_t l = 0; l < n0; ++l) {
          const std::array<Coords, 4> o{unit_vector(n0, i), unit_vector(n0, j), unit_vector(n0, k),
                                        unit_vector(n0, l)};
          const std::vector<BasisIndex> key{{0, i}, {0, j}, {0, k}, {0, l}};
          const Coords G = identiator_target().eval_objects(D, o);
          const Cell eta = ev.eta(o[0], o[1], o[2], o[3]);
          report.expect_zero("eta target", key, {L.target(eta)[0] - G});
          Cell eps;
          try {
            eps = ev.epsilon(o[0], o[1], o[2], o[3]);
          } catch (const CompositionError& e) {
            report.count();
            report.add({"epsilon composite", key, std::string("not composable: ") + e.what(), {}});
            continue;
          }
          report.expect_zero("epsilon target", key, {L.target(eps)[0] - G});
          const Cell mu = ev.mu(o[0], o[1], o[2], o[3]);
          report.expect_zero("identiator source is eta", key, (L.source(mu) - eta).components);
          report.expect_zero("identiator target is epsilon", key, (L.target(mu) - eps).components);
        }

  // modification law in each slot separately
  const auto cells2 = L.basis_cells(2);
  for (int slot = 0; slot < 4; ++slot)
    for (std::size_t i = 0; i < n0; ++i)
      for (std::size_t j = 0; j < n0; ++j)
        for (std::size_t k = 0; k < n0; ++k)
          for (const auto& alpha : cells2) {
            const std::array<std::size_t, 3> fixed{i, j, k};
            std::vector<Cell> cells;
            std::array<Coords, 4> src, dst;
            std::vector<BasisIndex> key;
            std::size_t next = 0;
            int moving = 0;
            for (int s = 0; s < 4; ++s) {
              if (s == slot) {
                cells.push_back(alpha);
                src[s] = alpha[0];
                dst[s] = L.target_k(alpha, 2)[0];
                for (int c = 0; c <= 2; ++c)
                  for (std::size_t q = 0; q < alpha[c].size(); ++q)
                    if (!alpha[c][q].is_zero()) {
                      key.push_back({c, q});
                      moving = c;
                    }
              } else {
                const std::size_t b = fixed[next++];
                cells.push_back(ev.obj2(unit_vector(n0, b)));
                src[s] = dst[s] = unit_vector(n0, b);
                key.push_back({0, b});
              }
            }
            const std::string law =
                "identiator modification law in slot " + std::to_string(slot + 1) + " for V" + std::to_string(moving) +
                " cells" + (moving == 1 ? ": l4 vanishes on the image of l1" : "");
            try {
              const Cell lhs =
                  L.compose(identiator_source().eval(D, cells), ev.mu(dst[0], dst[1], dst[2], dst[3]), 0);
              const Cell rhs =
                  L.compose(ev.mu(src[0], src[1], src[2], src[3]), identiator_target().eval(D, cells), 0);
              report.expect_zero(law, key, (lhs - rhs).components);
            } catch (const CompositionError&) {
              report.count();
              report.add({law, key, "modification square is not composable", {}});
            }
          }
  return report;
}

}  // namespace shlie3
