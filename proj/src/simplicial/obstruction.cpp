#include "shlie3/simplicial.hpp"

namespace shlie3 {

namespace {

Coords kron_vec(const Coords& a, const Coords& b) {
  Coords out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x * y);
  return out;
}

Coords unit(std::size_t n, std::size_t i) {
  Coords v(n);
  v[i] = 1;
  return v;
}

Coords concat(const Coords& a, const Coords& b) {
  Coords out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// L (x) L as a 1-category in component form, with the raw data needed to move
// between raw tensors of cells and its cells
struct TensorSquare {
  const LinearNCat& L;
  RawGlobular raw;
  ComponentForm form;

  explicit TensorSquare(const LinearNCat& base) : L(base), raw(tensor_raw(to_raw(base), to_raw(base))), form(component_form(raw)) {}

  std::size_t n0() const { return L.space().dim(0); }
  std::size_t n1() const { return L.space().dim(1); }

  // raw 1-cell (x, f) of L
  Coords raw_cell(const Coords& x, const Coords& f) const { return concat(x, f); }
  Coords target(const Coords& v) const {
    Coords x(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n0()));
    const Coords f(v.begin() + static_cast<std::ptrdiff_t>(n0()), v.end());
    add_scaled(x, 1, L.t_of(1, f));
    return x;
  }
  Coords source(const Coords& v) const { return Coords(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n0())); }
  Coords id(const Coords& x) const { return concat(x, Coords(n1())); }
  Coords compose(const Coords& v, const Coords& w) const {
    return L.flatten(L.compose(L.unflatten(1, v), L.unflatten(1, w), 0));
  }
  Cell cell(const Coords& v, const Coords& vp) const { return decompose(raw, form, 1, kron_vec(v, vp)); }

  // the arrows of a nerve simplex (x; f_1..f_n) as raw cells
  std::vector<Coords> arrows(const Coords& simplex, int n) const {
    Coords x(simplex.begin(), simplex.begin() + static_cast<std::ptrdiff_t>(n0()));
    std::vector<Coords> out;
    for (int k = 0; k < n; ++k) {
      const auto off = static_cast<std::ptrdiff_t>(n0() + static_cast<std::size_t>(k) * n1());
      const Coords f(simplex.begin() + off, simplex.begin() + off + static_cast<std::ptrdiff_t>(n1()));
      out.push_back(raw_cell(x, f));
      x = target(out.back());
    }
    return out;
  }

  // (v - 1_{tv}) (x) w' + w (x) (v' - 1_{tv'}) with w, w' replaced by their
  // kernel parts
  Coords correction(const Coords& v, const Coords& w, const Coords& vp, const Coords& wp) const {
    Coords dv = v, dvp = vp, kw = w, kwp = wp;
    add_scaled(dv, -1, id(target(v)));
    add_scaled(dvp, -1, id(target(vp)));
    add_scaled(kw, -1, id(source(w)));
    add_scaled(kwp, -1, id(source(wp)));
    Coords out = kron_vec(dv, kwp);
    add_scaled(out, 1, kron_vec(kw, dvp));
    return out;
  }

  // l_n on a pair of basis simplices, in nerve coordinates of L (x) L
  Coords ell(const Coords& a, const Coords& b, int n) const {
    if (n == 0) return kron_vec(a, b);
    const auto va = arrows(a, n), vb = arrows(b, n);
    Coords out;
    for (int k = 0; k < n; ++k) {
      const Cell c = cell(va[static_cast<std::size_t>(k)], vb[static_cast<std::size_t>(k)]);
      if (k == 0) out = c[0];
      out.insert(out.end(), c[1].begin(), c[1].end());
    }
    return out;
  }

  Matrix ell_matrix(const SimplicialVS& NL, const SimplicialVS& NC, int n) const {
    const std::size_t d = NL.dims[static_cast<std::size_t>(n)];
    std::vector<Coords> cols;
    cols.reserve(d * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) cols.push_back(ell(unit(d, i), unit(d, j), n));
    return Matrix::from_columns(cols, NC.dims[static_cast<std::size_t>(n)]);
  }
};

}  // namespace

ObstructionReport obstruction_demo(const LinearNCat& L) {
  if (L.n() != 1) throw std::invalid_argument("obstruction demo needs a linear 1-category");
  ObstructionReport rep;
  const TensorSquare T(L);
  const std::size_t n0 = T.n0(), n1 = T.n1();

  // composition defect on spanning composable pairs (a, 1_{ta}) and (0, f)
  std::vector<std::pair<Coords, Coords>> pairs;
  for (std::size_t j = 0; j < n0 + n1; ++j) {
    const Coords a = unit(n0 + n1, j);
    pairs.emplace_back(a, T.id(T.target(a)));
  }
  for (std::size_t j = 0; j < n1; ++j) pairs.emplace_back(Coords(n0 + n1), concat(Coords(n0), unit(n1, j)));
  const LinearNCat& C = T.form.category;
  for (const auto& [v, w] : pairs)
    for (const auto& [vp, wp] : pairs) {
      const Coords lhs = kron_vec(T.compose(v, w), T.compose(vp, wp));
      Coords rhs = assemble(T.raw, T.form, C.compose(T.cell(v, vp), T.cell(w, wp), 0));
      const Coords corr = T.correction(v, w, vp, wp);
      if (!is_zero(corr)) rep.corrections_vanish = false;
      add_scaled(rhs, 1, corr);
      ++rep.defect_pairs_checked;
      if (rhs != lhs) rep.defect_identity_holds = false;
    }

  const int N = 3;
  const SimplicialVS NL = nerve(L, N), NC = nerve(C, N);
  std::vector<Matrix> ell;
  for (int n = 0; n <= N; ++n) ell.push_back(T.ell_matrix(NL, NC, n));

  for (int n = 1; n <= N; ++n)
    for (int i = 0; i <= n; ++i) {
      const Matrix lhs = ell[static_cast<std::size_t>(n - 1)] * kron(NL.d(n, i), NL.d(n, i));
      const Matrix rhs = NC.d(n, i) * ell[static_cast<std::size_t>(n)];
      if (lhs != rhs) rep.failing_faces.emplace_back(n, i);
      if (n == 3 && i == 2 && lhs != rhs && !rep.witness) {
        const Matrix diff = lhs - rhs;
        std::size_t col = 0;
        while (is_zero(diff.column(col))) ++col;
        const std::size_t d3 = NL.dims[3];
        ObstructionWitness w;
        w.left = col / d3;
        w.right = col % d3;
        w.faces_then_l = lhs.column(col);
        w.l_then_face = rhs.column(col);
        const auto va = T.arrows(unit(d3, w.left), 3), vb = T.arrows(unit(d3, w.right), 3);
        const Cell corr = decompose(T.raw, T.form, 1, T.correction(va[1], va[2], vb[1], vb[2]));
        w.correction = Coords(NC.dims[2]);
        const std::size_t off = C.space().dim(0) + C.space().dim(1);
        for (std::size_t k = 0; k < corr[1].size(); ++k) w.correction[off + k] = corr[1][k];
        Coords delta = w.faces_then_l;
        add_scaled(delta, -1, w.l_then_face);
        rep.witness_matches_correction = is_zero(corr[0]) && delta == w.correction;
        rep.witness = std::move(w);
      }
    }
  for (int n = 0; n < N; ++n)
    for (int i = 0; i <= n; ++i)
      if (ell[static_cast<std::size_t>(n + 1)] * kron(NL.s(n, i), NL.s(n, i)) != NC.s(n, i) * ell[static_cast<std::size_t>(n)])
        rep.degeneracies_commute = false;
  rep.obstruction = !rep.failing_faces.empty() || !rep.degeneracies_commute;

  const Matrix& l2 = ell[2];
  rep.l2_domain_dim = l2.cols();
  rep.l2_codomain_dim = l2.rows();
  rep.l2_kernel_dim = l2.cols() - rank(l2);
  return rep;
}

}  // namespace shlie3
