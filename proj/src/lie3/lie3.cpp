#include "evaluator.hpp"

#include <algorithm>

namespace shlie3 {

namespace {

void require_degree0_keys(const MultiMap& m, int arity, int weight, const GradedSpace& V, const char* name) {
  if (m.arity() != arity || m.weight() != weight || !(m.space() == V))
    throw std::invalid_argument(std::string(name) + " has the wrong arity, weight or space");
  for (const auto& e : m.entries())
    for (const auto& b : e.key)
      if (b.degree != 0) throw std::invalid_argument(std::string(name) + " must only take objects as arguments");
}

std::vector<BasisIndex> objects(std::initializer_list<std::size_t> idx) {
  std::vector<BasisIndex> out;
  for (auto i : idx) out.push_back({0, i});
  return out;
}

using detail::Evaluator;
using detail::unit_vector;

}  // namespace

Lie3Data::Lie3Data(LinearNCat category, MultiMap bracket, MultiMap jacobiator, MultiMap identiator)
    : category_(std::move(category)),
      bracket_(std::move(bracket)),
      jacobiator_(std::move(jacobiator)),
      identiator_(std::move(identiator)) {
  if (category_.n() != 2) throw std::invalid_argument("a Lie 3-algebra lives on a linear 2-category");
  const GradedSpace& V = category_.space();
  if (bracket_.arity() != 2 || bracket_.weight() != 0 || !(bracket_.space() == V))
    throw std::invalid_argument("bracket has the wrong arity, weight or space");
  require_degree0_keys(jacobiator_, 3, 1, V, "jacobiator");
  require_degree0_keys(identiator_, 4, 2, V, "identiator");
}

Cell bracket_cells(const Lie3Data& D, const Cell& a, const Cell& b) {
  const int m = a.level();
  if (b.level() != m || m < 0 || m > 2) throw std::invalid_argument("bracket of cells of different levels");
  const MultiMap& l2 = D.bracket();
  Cell out;
  out.components.push_back(l2.apply({{0, a[0]}, {0, b[0]}}));
  if (m >= 1) {
    Coords target_y = b[0];
    add_scaled(target_y, 1, D.category().t_of(1, b[1]));
    Coords c = l2.apply({{0, a[0]}, {1, b[1]}});
    add_scaled(c, 1, l2.apply({{1, a[1]}, {0, target_y}}));
    out.components.push_back(std::move(c));
  }
  if (m == 2) {
    Coords c = l2.apply({{0, a[0]}, {2, b[2]}});
    add_scaled(c, 1, l2.apply({{2, a[2]}, {0, b[0]}}));
    out.components.push_back(std::move(c));
  }
  return out;
}

BracketExpr BracketExpr::var(int i) {
  BracketExpr e;
  e.kind_ = Kind::var;
  e.var_ = i;
  return e;
}

BracketExpr BracketExpr::bracket(BracketExpr a, BracketExpr b) {
  BracketExpr e;
  e.kind_ = Kind::bracket;
  e.children_ = {std::move(a), std::move(b)};
  return e;
}

BracketExpr BracketExpr::sum(std::vector<BracketExpr> terms) {
  if (terms.empty()) throw std::invalid_argument("empty sum");
  BracketExpr e;
  e.kind_ = Kind::sum;
  e.children_ = std::move(terms);
  return e;
}

Cell BracketExpr::eval(const Lie3Data& D, std::span<const Cell> vars) const {
  switch (kind_) {
    case Kind::var:
      return vars[static_cast<std::size_t>(var_)];
    case Kind::bracket:
      return bracket_cells(D, children_[0].eval(D, vars), children_[1].eval(D, vars));
    case Kind::sum: {
      Cell acc = children_[0].eval(D, vars);
      for (std::size_t i = 1; i < children_.size(); ++i) acc += children_[i].eval(D, vars);
      return acc;
    }
  }
  return {};
}

Coords BracketExpr::eval_objects(const Lie3Data& D, std::span<const Coords> vars) const {
  switch (kind_) {
    case Kind::var:
      return vars[static_cast<std::size_t>(var_)];
    case Kind::bracket:
      return D.bracket().apply({{0, children_[0].eval_objects(D, vars)}, {0, children_[1].eval_objects(D, vars)}});
    case Kind::sum: {
      Coords acc = children_[0].eval_objects(D, vars);
      for (std::size_t i = 1; i < children_.size(); ++i) add_scaled(acc, 1, children_[i].eval_objects(D, vars));
      return acc;
    }
  }
  return {};
}

namespace {
BracketExpr B(BracketExpr a, BracketExpr b) { return BracketExpr::bracket(std::move(a), std::move(b)); }
const BracketExpr x = BracketExpr::var(0), y = BracketExpr::var(1), z = BracketExpr::var(2),
                  u = BracketExpr::var(3);
}  // namespace

const BracketExpr& jacobiator_source() {
  static const BracketExpr e = B(B(x, y), z);
  return e;
}

const BracketExpr& jacobiator_target() {
  static const BracketExpr e = BracketExpr::sum({B(B(x, z), y), B(x, B(y, z))});
  return e;
}

const BracketExpr& identiator_source() {
  static const BracketExpr e = B(B(B(x, y), z), u);
  return e;
}

const BracketExpr& identiator_target() {
  static const BracketExpr e = BracketExpr::sum({B(B(x, z), B(y, u)), B(x, B(B(y, u), z)), B(B(B(x, u), z), y),
                                                 B(B(x, u), B(y, z)), B(B(x, B(z, u)), y), B(x, B(y, B(z, u)))});
  return e;
}

Report check_bifunctor(const Lie3Data& D) {
  Report report("bracket is a bilinear 2-functor");
  const LinearNCat& L = D.category();
  const GradedSpace& V = D.space();
  const MultiMap& l2 = D.bracket();
  auto br = [&](const Cell& a, const Cell& b) { return bracket_cells(D, a, b); };
  auto expect = [&](const std::string& law, std::vector<BasisIndex> tuple, const Cell& lhs, const Cell& rhs) {
    report.expect_zero(law, std::move(tuple), (lhs - rhs).components);
  };
  auto cell_key = [&](const Cell& c) {
    for (int i = 0; i <= c.level(); ++i)
      for (std::size_t j = 0; j < c[i].size(); ++j)
        if (!c[i][j].is_zero()) return BasisIndex{i, j};
    return BasisIndex{0, 0};
  };

  // antisymmetry and s, t, 1 on basis cells
  for (int m = 0; m <= 2; ++m) {
    const auto basis = L.basis_cells(m);
    for (const auto& a : basis)
      for (const auto& b : basis) {
        const std::vector<BasisIndex> key{cell_key(a), cell_key(b)};
        const Cell ab = br(a, b);
        expect("antisymmetry at level " + std::to_string(m), key, ab, -1 * br(b, a));
        if (m >= 1) {
          expect("respects source at level " + std::to_string(m), key, L.source(ab), br(L.source(a), L.source(b)));
          expect("respects target at level " + std::to_string(m), key, L.target(ab), br(L.target(a), L.target(b)));
        }
        if (m < 2)
          expect("respects identities at level " + std::to_string(m), key, L.identity(ab),
                 br(L.identity(a), L.identity(b)));
      }
  }

  // composition on products of spanning composable pairs
  for (int m = 1; m <= 2; ++m)
    for (int p = 0; p < m; ++p) {
      std::vector<std::pair<Cell, Cell>> pairs;
      for (const auto& a : L.basis_cells(m)) {
        const int k = m - p;
        pairs.emplace_back(a, L.identity_k(L.target_k(a, k), k));
      }
      for (int i = p + 1; i <= m; ++i)
        for (std::size_t j = 0; j < V.dim(i); ++j) pairs.emplace_back(L.zero_cell(m), L.basis_cell(m, i, j));
      const std::string law = "respects composition at level " + std::to_string(m) + " along " + std::to_string(p);
      for (const auto& [v, v2] : pairs)
        for (const auto& [w, w2] : pairs) {
          const std::vector<BasisIndex> key{cell_key(v) , cell_key(v2), cell_key(w), cell_key(w2)};
          const Cell lhs = br(L.compose(v, v2, p), L.compose(w, w2, p));
          try {
            expect(law, key, lhs, L.compose(br(v, w), br(v2, w2), p));
          } catch (const CompositionError&) {
            report.count();
            report.add({law, key, "bracketed cells are not composable", {}});
          }
        }
    }

  auto one = [&](const Cell& c) { return L.identity(c); };
  auto tgt = [&](const Cell& c) { return L.target(c); };
  // [f,g] = [1_tf, g] = [f, 1_tg], plus the canonical zero on V1 x V1
  for (std::size_t i = 0; i < V.dim(1); ++i)
    for (std::size_t j = 0; j < V.dim(1); ++j) {
      const Cell f = L.basis_cell(1, 1, i), g = L.basis_cell(1, 1, j);
      const std::vector<BasisIndex> key{{1, i}, {1, j}};
      expect("[f,g] = [1_tf,g] on V1 x V1", key, br(f, g), br(one(tgt(f)), g));
      expect("[f,g] = [f,1_tg] on V1 x V1", key, br(f, g), br(f, one(tgt(g))));
      report.expect_zero("[f,g] = [1_tf,g] family: canonical bracket vanishes on V1 x V1", key,
                         {Coords(V.dim(0)), Coords(V.dim(1)), l2.at(key)});
    }
  // [a,b] = [1_ta,b] = [a,1_tb] = 0
  for (std::size_t i = 0; i < V.dim(2); ++i)
    for (std::size_t j = 0; j < V.dim(2); ++j) {
      const Cell a = L.basis_cell(2, 2, i), b = L.basis_cell(2, 2, j);
      const std::vector<BasisIndex> key{{2, i}, {2, j}};
      const Cell zero = L.zero_cell(2);
      expect("[a,b] = 0 on V2 x V2", key, br(a, b), zero);
      expect("[1_ta,b] = 0 on V2 x V2", key, br(one(tgt(a)), b), zero);
      expect("[a,1_tb] = 0 on V2 x V2", key, br(a, one(tgt(b))), zero);
    }
  // [1_f, b] = [1^2_tf, b] = 0
  for (std::size_t i = 0; i < V.dim(1); ++i)
    for (std::size_t j = 0; j < V.dim(2); ++j) {
      const Cell f = L.basis_cell(1, 1, i), b = L.basis_cell(2, 2, j);
      const std::vector<BasisIndex> key{{1, i}, {2, j}};
      const Cell zero = L.zero_cell(2);
      expect("[1_f,b] = 0 on V1 x V2", key, br(one(f), b), zero);
      expect("[1^2_tf,b] = 0 on V1 x V2", key, br(L.identity_k(tgt(f), 2), b), zero);
    }

  // the constants are read back from the bracket of cells
  for (std::size_t i = 0; i < V.dim(0); ++i) {
    const Cell x1 = L.basis_cell(1, 0, i), x2 = L.basis_cell(2, 0, i);
    for (std::size_t j = 0; j < V.dim(1); ++j) {
      const Cell c = br(x1, L.basis_cell(1, 1, j));
      report.expect_zero("[1_x,g] is l2(x,g)", {{0, i}, {1, j}},
                         {c[0], c[1] - l2.at(std::vector<BasisIndex>{{0, i}, {1, j}})});
    }
    for (std::size_t j = 0; j < V.dim(2); ++j) {
      const Cell c = br(x2, L.basis_cell(2, 2, j));
      report.expect_zero("[1^2_x,b] is l2(x,b)", {{0, i}, {2, j}},
                         {c[0], c[1], c[2] - l2.at(std::vector<BasisIndex>{{0, i}, {2, j}})});
    }
  }

  // chain-map equations of the underlying l2 against l1
  auto l1 = [&](int d, const Coords& v) { return L.t_of(d, v); };
  auto e = [&](int d, std::size_t i) { return unit_vector(V.dim(d), i); };
  for (std::size_t i = 0; i < V.dim(1); ++i) {
    for (std::size_t j = 0; j < V.dim(0); ++j) {
      Coords r = l1(1, l2.apply({{1, e(1, i)}, {0, e(0, j)}}));
      add_scaled(r, -1, l2.apply({{0, l1(1, e(1, i))}, {0, e(0, j)}}));
      report.expect_zero("chain map: l1 l2(f,y) = l2(l1 f,y)", {{1, i}, {0, j}}, {r});
    }
    for (std::size_t j = 0; j < V.dim(1); ++j) {
      Coords r = l1(2, l2.apply({{1, e(1, i)}, {1, e(1, j)}}));
      add_scaled(r, -1, l2.apply({{0, l1(1, e(1, i))}, {1, e(1, j)}}));
      add_scaled(r, 1, l2.apply({{1, e(1, i)}, {0, l1(1, e(1, j))}}));
      report.expect_zero("chain map: l1 l2(f,g) = l2(l1 f,g) - l2(f,l1 g)", {{1, i}, {1, j}}, {r});
    }
    for (std::size_t j = 0; j < V.dim(2); ++j) {
      Coords r = l2.apply({{0, l1(1, e(1, i))}, {2, e(2, j)}});
      add_scaled(r, -1, l2.apply({{1, e(1, i)}, {1, l1(2, e(2, j))}}));
      report.expect_zero("chain map: l2(l1 f,b) = l2(f,l1 b)", {{1, i}, {2, j}}, {r});
    }
  }
  for (std::size_t i = 0; i < V.dim(2); ++i)
    for (std::size_t j = 0; j < V.dim(0); ++j) {
      Coords r = l1(2, l2.apply({{2, e(2, i)}, {0, e(0, j)}}));
      add_scaled(r, -1, l2.apply({{1, l1(2, e(2, i))}, {0, e(0, j)}}));
      report.expect_zero("chain map: l1 l2(a,y) = l2(l1 a,y)", {{2, i}, {0, j}}, {r});
    }
  return report;
}

Report check_jacobiator(const Lie3Data& D) {
  Report report("Jacobiator is a natural 2-transformation");
  const LinearNCat& L = D.category();
  const std::size_t n0 = D.space().dim(0);
  const Evaluator ev(D);
  const auto cells2 = L.basis_cells(2);

  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n0; ++j)
      for (std::size_t k = 0; k < n0; ++k) {
        const std::array<Coords, 3> o{unit_vector(n0, i), unit_vector(n0, j), unit_vector(n0, k)};
        const Cell J = ev.J(o[0], o[1], o[2]);
        report.expect_zero("jacobiator target", objects({i, j, k}),
                           {L.target(J)[0] - jacobiator_target().eval_objects(D, o)});
      }

  // naturality in each slot separately: the moving slot carries a basis 2-cell
  for (int slot = 0; slot < 3; ++slot)
    for (std::size_t i = 0; i < n0; ++i)
      for (std::size_t j = 0; j < n0; ++j)
        for (const auto& alpha : cells2) {
          std::array<std::size_t, 2> fixed{i, j};
          std::vector<Cell> cells;
          std::array<Coords, 3> src, dst;
          std::vector<BasisIndex> key;
          std::size_t next = 0;
          int moving = 0;
          for (int s = 0; s < 3; ++s) {
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
              const Coords v = unit_vector(n0, fixed[next++]);
              cells.push_back(ev.obj2(v));
              src[s] = dst[s] = v;
              key.push_back({0, fixed[next - 1]});
            }
          }
          const std::string law =
              "jacobiator naturality in slot " + std::to_string(slot + 1) + " for V" + std::to_string(moving) + " cells";
          try {
            const Cell lhs = L.compose(jacobiator_source().eval(D, cells), ev.id(ev.J(dst[0], dst[1], dst[2])), 0);
            const Cell rhs = L.compose(ev.id(ev.J(src[0], src[1], src[2])), jacobiator_target().eval(D, cells), 0);
            report.expect_zero(law, key, (lhs - rhs).components);
          } catch (const CompositionError&) {
            report.count();
            report.add({law, key, "naturality square is not composable", {}});
          }
        }
  return report;
}

}  // namespace shlie3
