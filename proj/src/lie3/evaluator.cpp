#include "evaluator.hpp"

namespace shlie3::detail {

Coords unit_vector(std::size_t n, std::size_t i) {
  Coords v(n);
  v[i] = 1;
  return v;
}

Cell compose_stages(const LinearNCat& L, const std::vector<Stage>& stages) {
  if (stages.empty() || stages.front().factors.empty()) throw std::invalid_argument("empty composite");
  const int m = stages.front().factors.front().level();
  auto sum = [&](const Stage& s) {
    Cell c = L.zero_cell(m);
    for (const auto& f : s.factors) c += f;
    return c;
  };
  Cell acc = sum(stages.front());
  for (std::size_t k = 1; k < stages.size(); ++k) {
    Cell next = sum(stages[k]);
    if (stages[k].pad) {
      const Coords object = L.target_k(acc, m)[0] - L.source_k(next, m)[0];
      next += L.identity_k(Cell{{object}}, m);
    }
    acc = L.compose(acc, next, 0);
  }
  return acc;
}

Evaluator::Evaluator(const Lie3Data& D) : D_(D), n0_(D.space().dim(0)) {}

Coords Evaluator::br(const Coords& a, const Coords& b) const {
  return D_.bracket().apply({{0, a}, {0, b}});
}

Cell Evaluator::obj1(const Coords& x) const { return Cell{{x, Coords(D_.space().dim(1))}}; }

Cell Evaluator::obj2(const Coords& x) const {
  return Cell{{x, Coords(D_.space().dim(1)), Coords(D_.space().dim(2))}};
}

Coords Evaluator::F(const Coords& x, const Coords& y, const Coords& z, const Coords& u) const {
  return br(br(br(x, y), z), u);
}

Cell Evaluator::J(const Coords& x, const Coords& y, const Coords& z) const {
  return Cell{{br(br(x, y), z), D_.jacobiator().apply({{0, x}, {0, y}, {0, z}})}};
}

Cell Evaluator::eta(const Coords& x, const Coords& y, const Coords& z, const Coords& u) const {
  return compose_stages(cat(), {
                                   {{bc(J(x, y, z), obj1(u))}, false},
                                   {{J(br(x, z), y, u), J(x, br(y, z), u)}, false},
                                   {{bc(J(x, z, u), obj1(y))}, true},
                                   {{bc(obj1(x), J(y, z, u))}, true},
                               });
}

Cell Evaluator::epsilon(const Coords& x, const Coords& y, const Coords& z, const Coords& u) const {
  return compose_stages(cat(), {
                                   {{J(br(x, y), z, u)}, false},
                                   {{bc(J(x, y, u), obj1(z))}, true},
                                   {{J(x, br(y, u), z), J(br(x, u), y, z), J(x, y, br(z, u))}, false},
                               });
}

void Evaluator::build_h_table() {
  std::vector<Coords> table;
  table.reserve(n0_ * n0_ * n0_ * n0_);
  for (std::size_t i = 0; i < n0_; ++i)
    for (std::size_t j = 0; j < n0_; ++j)
      for (std::size_t k = 0; k < n0_; ++k)
        for (std::size_t l = 0; l < n0_; ++l)
          table.push_back(eta(unit_vector(n0_, i), unit_vector(n0_, j), unit_vector(n0_, k), unit_vector(n0_, l))[1]);
  h_table_ = std::move(table);
}

Coords Evaluator::h(const Coords& x, const Coords& y, const Coords& z, const Coords& u) const {
  if (!h_table_) return eta(x, y, z, u)[1];
  Coords out(D_.space().dim(1));
  const std::size_t n = n0_;
  Rational cx, cxy, cxyz;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      cxy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (z[k].is_zero()) continue;
        cxyz = cxy * z[k];
        for (std::size_t l = 0; l < n; ++l) {
          if (u[l].is_zero()) continue;
          add_scaled(out, cxyz * u[l], (*h_table_)[((i * n + j) * n + k) * n + l]);
        }
      }
    }
  }
  return out;
}

Cell Evaluator::mu(const Coords& x, const Coords& y, const Coords& z, const Coords& u) const {
  return Cell{{F(x, y, z, u), h(x, y, z, u), D_.identiator().apply({{0, x}, {0, y}, {0, z}, {0, u}})}};
}

Cell Evaluator::alpha(int i, const Coords& x, const Coords& y, const Coords& z, const Coords& u,
                      const Coords& v) const {
  // identity 2-cell over a bracket of a Jacobiator with an identity 1-cell
  auto JB = [&](const Cell& j, const Coords& w) { return id(bc(j, obj1(w))); };
  auto BJ = [&](const Coords& w, const Cell& j) { return id(bc(obj1(w), j)); };
  auto I = [&](const Cell& c) { return id(c); };
  const LinearNCat& L = cat();
  switch (i) {
    case 1:
      return compose_stages(L, {
                                   {{I(J(br(br(x, y), z), u, v))}, false},
                                   {{mu(x, y, z, br(u, v)), bc(mu(x, y, z, v), obj2(u))}, false},
                                   {{JB(J(x, br(z, v), y), u), JB(J(br(x, v), z, y), u), JB(J(x, z, br(y, v)), u)}, true},
                                   {{mu(br(x, v), y, z, u), mu(x, br(y, v), z, u), mu(x, y, br(z, v), u)}, true},
                               });
    case 4:
      return compose_stages(
          L, {
                 {{bc(mu(x, y, z, u), obj2(v))}, false},
                 {{JB(J(br(x, u), z, y), v), JB(J(x, z, br(y, u)), v), JB(J(x, br(z, u), y), v)}, true},
                 {{mu(br(x, u), y, z, v), mu(x, br(y, u), z, v), mu(x, y, br(z, u), v)}, false},
                 {{I(bc(bc(J(x, u, v), obj1(z)), obj1(y))), I(bc(J(x, u, v), obj1(br(y, z)))),
                   I(bc(obj1(x), bc(J(y, u, v), obj1(z)))), I(bc(bc(obj1(x), J(z, u, v)), obj1(y))),
                   I(bc(obj1(x), bc(obj1(y), J(z, u, v)))), BJ(br(x, z), J(y, u, v))},
                  true},
             });
    case 3:
      return compose_stages(
          L, {
                 {{mu(br(x, y), z, u, v)}, false},
                 {{JB(J(br(x, y), v, u), z)}, true},
                 {{bc(mu(x, y, u, v), obj2(z))}, true},
                 {{JB(J(x, y, v), br(z, u)), I(J(x, y, br(br(z, v), u))), I(J(x, y, br(z, br(u, v)))),
                   I(J(br(br(x, v), u), y, z)), I(J(br(x, v), br(y, u), z)), I(J(br(x, u), br(y, v), z)),
                   I(J(x, br(br(y, v), u), z)), I(J(br(x, br(u, v)), y, z)), I(J(x, br(y, br(u, v)), z)),
                   JB(J(x, y, u), br(z, v))},
                  false},
                 {{I(J(x, br(y, v), br(z, u))), I(J(br(x, v), y, br(z, u))), I(J(x, br(y, u), br(z, v))),
                   I(J(br(x, u), y, br(z, v)))},
                  true},
             });
    case 2:
      return compose_stages(L, {
                                   {{I(bc(bc(J(x, y, z), obj1(u)), obj1(v)))}, false},
                                   {{mu(br(x, z), y, u, v), mu(x, br(y, z), u, v)}, false},
                                   {{BJ(x, J(br(y, z), v, u)), JB(J(br(x, z), v, u), y)}, true},
                                   {{bc(obj2(x), mu(y, z, u, v)), bc(mu(x, z, u, v), obj2(y))}, true},
                                   {{JB(J(x, z, v), br(y, u)), JB(J(x, z, u), br(y, v)), BJ(br(x, v), J(y, z, u)),
                                     BJ(br(x, u), J(y, z, v))},
                                    true},
                               });
    default:
      throw std::out_of_range("alpha index must be 1..4");
  }
}

}  // namespace shlie3::detail
