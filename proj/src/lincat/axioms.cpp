#include "shlie3/lincat.hpp"

#include <array>

namespace shlie3 {

namespace {

std::vector<Coords> blocks_of(const Cell& c) { return c.components; }

struct Checker {
  const LinearNCat& L;
  const ComposeFn& compose;
  Report& report;

  // records a failed composability inside a law instead of aborting the run
  template <class F>
  void guarded(const std::string& law, const std::string& where, F&& body) {
    try {
      body();
    } catch (const CompositionError& e) {
      report.count();
      report.add({law, {}, where + ": intermediate cells not composable", {}});
    }
  }

  void expect_equal(const std::string& law, const std::string& where, const Cell& lhs, const Cell& rhs) {
    report.expect_zero(law, {}, blocks_of(lhs - rhs), where);
  }

  Cell pad(const Cell& a, int p) const {
    const int k = a.level() - p;
    return L.identity_k(L.target_k(a, k), k);
  }

  // cells of level m whose components 0..p vanish
  std::vector<Cell> kernel_cells(int m, int p) const {
    std::vector<Cell> out;
    for (int i = p + 1; i <= m; ++i)
      for (std::size_t j = 0; j < L.space().dim(i); ++j) out.push_back(L.basis_cell(m, i, j));
    return out;
  }

  std::vector<std::pair<Cell, Cell>> spanning_pairs(int m, int p) const {
    std::vector<std::pair<Cell, Cell>> out;
    for (const auto& a : L.basis_cells(m)) out.emplace_back(a, pad(a, p));
    for (const auto& c : kernel_cells(m, p)) out.emplace_back(L.zero_cell(m), c);
    return out;
  }
};

std::string cell_where(int m, int p, std::size_t k) {
  return "level " + std::to_string(m) + " along " + std::to_string(p) + " spanning tuple " + std::to_string(k);
}

}  // namespace

Report check_axioms(const LinearNCat& L, const ComposeFn& compose) {
  Report report("linear n-category axioms");
  Checker ck{L, compose, report};
  const int n = L.n();

  for (int m = 0; m <= n; ++m) {
    const auto basis = L.basis_cells(m);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const auto& a = basis[k];
      const std::string where = "level " + std::to_string(m) + " basis cell " + std::to_string(k);
      if (m >= 2) {
        ck.expect_equal("globular ss = st", where, L.source(L.source(a)), L.source(L.target(a)));
        ck.expect_equal("globular ts = tt", where, L.target(L.source(a)), L.target(L.target(a)));
      }
      if (m < n) {
        ck.expect_equal("source of identity", where, L.source(L.identity(a)), a);
        ck.expect_equal("target of identity", where, L.target(L.identity(a)), a);
      }
    }
  }

  for (int m = 1; m <= n; ++m)
    for (int p = 0; p < m; ++p) {
      const int k = m - p;
      const auto pairs = ck.spanning_pairs(m, p);
      for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
        const auto& [a, b] = pairs[idx];
        const std::string where = cell_where(m, p, idx);
        ck.guarded("boundary compatibility", where, [&] {
          const Cell ab = compose(L, a, b, p);
          if (k == 1) {
            ck.expect_equal("source of composite", where, L.source(ab), L.source(a));
            ck.expect_equal("target of composite", where, L.target(ab), L.target(b));
          } else {
            ck.expect_equal("source of composite", where, L.source(ab), compose(L, L.source(a), L.source(b), p));
            ck.expect_equal("target of composite", where, L.target(ab), compose(L, L.target(a), L.target(b), p));
          }
          if (m < n)
            ck.expect_equal("identity of composite", where, L.identity(ab),
                            compose(L, L.identity(a), L.identity(b), p));
        });
      }

      const auto basis = L.basis_cells(m);
      for (std::size_t idx = 0; idx < basis.size(); ++idx) {
        const auto& a = basis[idx];
        const std::string where = cell_where(m, p, idx);
        ck.guarded("unit laws", where, [&] {
          ck.expect_equal("right unit", where, compose(L, a, ck.pad(a, p), p), a);
          const Cell left = L.identity_k(L.source_k(a, k), k);
          ck.expect_equal("left unit", where, compose(L, left, a, p), a);
        });
      }

      // composable triples: x free, y = pad(x) + y', z = pad(y) + z'
      std::vector<std::array<Cell, 3>> triples;
      for (const auto& x : basis) triples.push_back({x, ck.pad(x, p), ck.pad(ck.pad(x, p), p)});
      for (const auto& y : ck.kernel_cells(m, p)) triples.push_back({L.zero_cell(m), y, ck.pad(y, p)});
      for (const auto& z : ck.kernel_cells(m, p)) triples.push_back({L.zero_cell(m), L.zero_cell(m), z});
      for (std::size_t idx = 0; idx < triples.size(); ++idx) {
        const auto& [x, y, z] = triples[idx];
        const std::string where = cell_where(m, p, idx);
        ck.guarded("associativity", where, [&] {
          ck.expect_equal("associativity", where, compose(L, compose(L, x, y, p), z, p),
                          compose(L, x, compose(L, y, z, p), p));
        });
      }

      // interchange for q < p: a free, b = pad_p(a)+b', c = pad_q(a)+c', d = pad_p(c)+d'
      for (int q = 0; q < p; ++q) {
        std::vector<std::array<Cell, 4>> quads;
        for (const auto& a : basis) {
          const Cell c = ck.pad(a, q);
          quads.push_back({a, ck.pad(a, p), c, ck.pad(c, p)});
        }
        const Cell z = L.zero_cell(m);
        for (const auto& b : ck.kernel_cells(m, p)) quads.push_back({z, b, z, z});
        for (const auto& c : ck.kernel_cells(m, q)) quads.push_back({z, z, c, ck.pad(c, p)});
        for (const auto& d : ck.kernel_cells(m, p)) quads.push_back({z, z, z, d});
        for (std::size_t idx = 0; idx < quads.size(); ++idx) {
          const auto& [a, b, c, d] = quads[idx];
          const std::string where = cell_where(m, p, idx) + " with q=" + std::to_string(q);
          ck.guarded("interchange", where, [&] {
            const Cell lhs = compose(L, compose(L, a, b, p), compose(L, c, d, p), q);
            const Cell rhs = compose(L, compose(L, a, c, q), compose(L, b, d, q), p);
            ck.expect_equal("interchange", where, lhs, rhs);
          });
        }
      }
    }
  return report;
}

}  // namespace shlie3
