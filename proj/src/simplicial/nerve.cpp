#include "shlie3/simplicial.hpp"

namespace shlie3 {

namespace {

void require_one_category(const LinearNCat& L) {
  if (L.n() != 1) throw std::invalid_argument("nerve needs a linear 1-category");
}

// coordinates of (x; f_1..f_n): x first, then the arrows in order
struct Layout {
  std::size_t n0, n1;
  std::size_t dim(int n) const { return n0 + static_cast<std::size_t>(n) * n1; }
  std::size_t arrow(int k) const { return n0 + static_cast<std::size_t>(k - 1) * n1; }  // k is 1-based
};

void copy_block(Matrix& M, std::size_t r0, std::size_t c0, std::size_t n) {
  for (std::size_t a = 0; a < n; ++a) M(r0 + a, c0 + a) += 1;
}

}  // namespace

SimplicialVS nerve(const LinearNCat& L, int trunc) {
  require_one_category(L);
  if (trunc < 1) throw std::invalid_argument("nerve needs truncation >= 1");
  const Layout lay{L.space().dim(0), L.space().dim(1)};
  const Matrix& t = L.t_matrix(1);
  SimplicialVS S;
  S.trunc = trunc;
  for (int n = 0; n <= trunc; ++n) S.dims.push_back(lay.dim(n));
  S.faces.emplace_back();
  for (int n = 1; n <= trunc; ++n) {
    std::vector<Matrix> faces;
    for (int i = 0; i <= n; ++i) {
      Matrix M(lay.dim(n - 1), lay.dim(n));
      copy_block(M, 0, 0, lay.n0);
      if (i == 0) {
        // new base point x + t f_1
        M.set_block(0, lay.arrow(1), t);
        for (int k = 1; k < n; ++k) copy_block(M, lay.arrow(k), lay.arrow(k + 1), lay.n1);
      } else {
        for (int k = 1; k < n; ++k) {
          if (k < i) copy_block(M, lay.arrow(k), lay.arrow(k), lay.n1);
          else if (k == i) {
            copy_block(M, lay.arrow(k), lay.arrow(k), lay.n1);
            copy_block(M, lay.arrow(k), lay.arrow(k + 1), lay.n1);
          } else copy_block(M, lay.arrow(k), lay.arrow(k + 1), lay.n1);
        }
      }
      faces.push_back(std::move(M));
    }
    S.faces.push_back(std::move(faces));
  }
  for (int n = 0; n < trunc; ++n) {
    std::vector<Matrix> degs;
    for (int i = 0; i <= n; ++i) {
      // zero arrow inserted at position i+1
      Matrix M(lay.dim(n + 1), lay.dim(n));
      copy_block(M, 0, 0, lay.n0);
      for (int k = 1; k <= n; ++k) copy_block(M, lay.arrow(k <= i ? k : k + 1), lay.arrow(k), lay.n1);
      degs.push_back(std::move(M));
    }
    S.degeneracies.push_back(std::move(degs));
  }
  validate(S);
  return S;
}

bool is_simplicial_map(const SimplicialMap& F, const SimplicialVS& S, const SimplicialVS& T) {
  const auto N = static_cast<std::size_t>(std::min(S.trunc, T.trunc));
  if (F.maps.size() != N + 1) return false;
  for (std::size_t n = 0; n <= N; ++n)
    if (F.maps[n].rows() != T.dims[n] || F.maps[n].cols() != S.dims[n]) return false;
  for (int n = 1; n <= static_cast<int>(N); ++n)
    for (int i = 0; i <= n; ++i)
      if (T.d(n, i) * F.maps[static_cast<std::size_t>(n)] != F.maps[static_cast<std::size_t>(n - 1)] * S.d(n, i))
        return false;
  for (int n = 0; n < static_cast<int>(N); ++n)
    for (int i = 0; i <= n; ++i)
      if (T.s(n, i) * F.maps[static_cast<std::size_t>(n)] != F.maps[static_cast<std::size_t>(n + 1)] * S.s(n, i))
        return false;
  return true;
}

SimplicialMap nerve_of_functor(const LinearNCat& src, const LinearNCat& dst, const NFunctor& F, int trunc) {
  require_one_category(src);
  require_one_category(dst);
  if (F.level_maps.size() != 2) throw std::invalid_argument("functor between 1-categories needs two level maps");
  const Layout a{src.space().dim(0), src.space().dim(1)}, b{dst.space().dim(0), dst.space().dim(1)};
  // F_1 sends (0, f) to (0, f'); its V1 block acts on arrows
  const Matrix& F0 = F.level_maps[0];
  const Matrix F1 = F.level_maps[1].block(b.n0, a.n0, b.n1, a.n1);
  if (!F.level_maps[1].block(0, a.n0, b.n0, a.n1).is_zero())
    throw std::invalid_argument("functor does not preserve sources");
  SimplicialMap out;
  for (int n = 0; n <= trunc; ++n) {
    Matrix M(b.dim(n), a.dim(n));
    M.set_block(0, 0, F0);
    for (int k = 1; k <= n; ++k) M.set_block(b.arrow(k), a.arrow(k), F1);
    out.maps.push_back(std::move(M));
  }
  return out;
}

MooreComplex moore(const SimplicialVS& S) {
  validate(S);
  MooreComplex M;
  ChainComplexT& C = M.complex;
  for (int n = 0; n <= S.trunc; ++n) {
    const auto un = static_cast<std::size_t>(n);
    Matrix incl;
    Matrix proj;
    if (n == 0) {
      incl = Matrix::identity(S.dims[0]);
      proj = incl;
    } else {
      Matrix stacked = S.d(n, 1);
      for (int i = 2; i <= n; ++i) stacked = vstack(stacked, S.d(n, i));
      incl = nullspace(stacked);
      // S_n = N_n + D_n with D_n spanned by the degenerate simplices
      Matrix deg = S.s(n - 1, 0);
      for (int i = 1; i < n; ++i) deg = hstack(deg, S.s(n - 1, i));
      const Matrix D = column_basis(deg);
      const Matrix both = hstack(incl, D);
      if (both.cols() != S.dims[un] || rank(both) != S.dims[un])
        throw std::logic_error("normalized and degenerate parts do not split level " + std::to_string(n));
      proj = inverse(both).block(0, 0, incl.cols(), S.dims[un]);
    }
    C.dims.push_back(incl.cols());
    if (n == 0) C.d.emplace_back(0, incl.cols());
    else {
      const auto d = solve(M.inclusion[un - 1], S.d(n, 0) * incl);
      if (!d) throw std::logic_error("d_0 leaves the normalized complex at level " + std::to_string(n));
      C.d.push_back(*d);
    }
    M.inclusion.push_back(std::move(incl));
    M.projection.push_back(std::move(proj));
  }
  validate(C);
  return M;
}

bool moore_of_nerve_check(const LinearNCat& L, int trunc) {
  require_one_category(L);
  if (trunc < 2) throw std::invalid_argument("moore_of_nerve_check needs truncation >= 2");
  const std::size_t n0 = L.space().dim(0), n1 = L.space().dim(1);
  const MooreComplex M = moore(nerve(L, trunc));
  const ChainComplexT& C = M.complex;
  if (C.dims[0] != n0 || C.dims[1] != n1) return false;
  for (int n = 2; n <= trunc; ++n)
    if (C.dims[static_cast<std::size_t>(n)] != 0) return false;
  // N_0 = S_0 = V0 verbatim; N_1 sits in {(0; f)} and its arrow block is the
  // change to canonical coordinates
  if (M.inclusion[0] != Matrix::identity(n0)) return false;
  if (n1 == 0) return true;
  const Matrix& B = M.inclusion[1];
  if (!B.block(0, 0, n0, n1).is_zero()) return false;
  const Matrix F = B.block(n0, 0, n1, n1);
  if (rank(F) != n1) return false;
  return C.d[1] * inverse(F) == L.t_matrix(1);
}

}  // namespace shlie3
