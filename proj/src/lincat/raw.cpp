#include "shlie3/lincat.hpp"

namespace shlie3 {

namespace {

void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, const std::string& what) {
  if (m.rows() != rows || m.cols() != cols) throw std::invalid_argument(what + " has the wrong shape");
}

// I_{to-1} ... I_{from} applied to v in L_from
Coords lift(const RawGlobular& R, int from, int to, Coords v) {
  for (int k = from; k < to; ++k) v = R.identity[static_cast<std::size_t>(k)].apply(v);
  return v;
}

Coords lower(const RawGlobular& R, int from, int to, Coords v) {
  for (int k = from; k > to; --k) v = R.source[static_cast<std::size_t>(k)].apply(v);
  return v;
}

}  // namespace

void validate(const RawGlobular& R) {
  const auto n = static_cast<std::size_t>(R.n);
  if (R.n < 0 || R.dims.size() != n + 1 || R.source.size() != n + 1 || R.target.size() != n + 1 ||
      R.identity.size() != n)
    throw std::invalid_argument("raw globular data has inconsistent level counts");
  for (std::size_t m = 1; m <= n; ++m) {
    require_shape(R.source[m], R.dims[m - 1], R.dims[m], "source map");
    require_shape(R.target[m], R.dims[m - 1], R.dims[m], "target map");
    require_shape(R.identity[m - 1], R.dims[m], R.dims[m - 1], "identity map");
  }
  for (std::size_t m = 2; m <= n; ++m) {
    if (!(R.source[m - 1] * R.source[m] == R.source[m - 1] * R.target[m]) ||
        !(R.target[m - 1] * R.source[m] == R.target[m - 1] * R.target[m]))
      throw std::invalid_argument("globular identities fail at level " + std::to_string(m));
  }
  for (std::size_t m = 0; m < n; ++m) {
    const Matrix id = Matrix::identity(R.dims[m]);
    if (!(R.source[m + 1] * R.identity[m] == id) || !(R.target[m + 1] * R.identity[m] == id))
      throw std::invalid_argument("identities are not sections of source and target at level " + std::to_string(m));
  }
}

RawGlobular to_raw(const LinearNCat& L) {
  RawGlobular R;
  R.n = L.n();
  R.source.emplace_back();
  R.target.emplace_back();
  for (int m = 0; m <= L.n(); ++m) R.dims.push_back(L.level_dim(m));
  for (int m = 1; m <= L.n(); ++m) {
    R.source.push_back(L.source_matrix(m));
    R.target.push_back(L.target_matrix(m));
  }
  for (int m = 0; m < L.n(); ++m) R.identity.push_back(L.identity_matrix(m));
  return R;
}

ComponentForm component_form(const RawGlobular& R) {
  validate(R);
  std::vector<Matrix> K;
  std::vector<std::size_t> dims;
  K.push_back(Matrix::identity(R.dims[0]));
  dims.push_back(R.dims[0]);
  for (int i = 1; i <= R.n; ++i) {
    K.push_back(nullspace(R.source[static_cast<std::size_t>(i)]));
    dims.push_back(K.back().cols());
  }
  const GradedSpace V(dims);
  std::vector<RawEntry> raw;
  for (int i = 1; i <= R.n; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    // t maps ker S_i into ker S_{i-1}; express it in the kernel bases
    const auto d = solve(K[ui - 1], R.target[ui] * K[ui]);
    if (!d) throw std::logic_error("target does not preserve the kernel decomposition");
    for (std::size_t j = 0; j < d->cols(); ++j) raw.push_back({{BasisIndex{i, j}}, d->column(j)});
  }
  LinearNCat cat(R.n, V, MultiMap::build(1, -1, V, raw));
  return {std::move(cat), std::move(K)};
}

Cell decompose(const RawGlobular& R, const ComponentForm& F, int m, std::span<const Rational> a) {
  if (m < 0 || m > R.n || a.size() != R.dims[static_cast<std::size_t>(m)])
    throw std::invalid_argument("raw cell does not fit level " + std::to_string(m));
  Cell out;
  Coords rest(a.begin(), a.end());
  for (int i = 0; i <= m; ++i) {
    // component i is s^{m-i} of what is left after removing the lower parts
    const Coords part = lower(R, m, i, rest);
    const auto coords = solve(F.kernel_basis[static_cast<std::size_t>(i)], part);
    if (!coords) throw std::logic_error("decomposition left the kernel space");
    out.components.push_back(*coords);
    rest = rest - lift(R, i, m, part);
  }
  return out;
}

Coords assemble(const RawGlobular& R, const ComponentForm& F, const Cell& c) {
  const int m = c.level();
  Coords out(R.dims[static_cast<std::size_t>(m)]);
  for (int i = 0; i <= m; ++i)
    add_scaled(out, 1, lift(R, i, m, F.kernel_basis[static_cast<std::size_t>(i)].apply(c[i])));
  return out;
}

RawGlobular tensor_raw(const RawGlobular& a, const RawGlobular& b) {
  if (a.n != b.n) throw std::invalid_argument("tensor product of categories of different dimension");
  RawGlobular R;
  R.n = a.n;
  for (std::size_t m = 0; m < a.dims.size(); ++m) R.dims.push_back(a.dims[m] * b.dims[m]);
  R.source.emplace_back();
  R.target.emplace_back();
  for (std::size_t m = 1; m < a.dims.size(); ++m) {
    R.source.push_back(kron(a.source[m], b.source[m]));
    R.target.push_back(kron(a.target[m], b.target[m]));
  }
  for (std::size_t m = 0; m < a.identity.size(); ++m) R.identity.push_back(kron(a.identity[m], b.identity[m]));
  return R;
}

LinearNCat product(const LinearNCat& a, const LinearNCat& b, ProductMode mode) {
  if (a.n() != b.n()) throw std::invalid_argument("product of categories of different dimension");
  if (mode == ProductMode::tensor) return component_form(tensor_raw(to_raw(a), to_raw(b))).category;
  std::vector<std::size_t> dims;
  for (int i = 0; i <= a.n(); ++i) dims.push_back(a.space().dim(i) + b.space().dim(i));
  const GradedSpace V(dims);
  std::vector<RawEntry> raw;
  for (int i = 1; i <= a.n(); ++i) {
    const Matrix& ta = a.t_matrix(i);
    const Matrix& tb = b.t_matrix(i);
    for (std::size_t j = 0; j < a.space().dim(i); ++j) {
      Coords col = ta.column(j);
      col.resize(V.dim(i - 1));
      raw.push_back({{BasisIndex{i, j}}, col});
    }
    for (std::size_t j = 0; j < b.space().dim(i); ++j) {
      Coords col(a.space().dim(i - 1));
      const Coords cb = tb.column(j);
      col.insert(col.end(), cb.begin(), cb.end());
      raw.push_back({{BasisIndex{i, a.space().dim(i) + j}}, col});
    }
  }
  return LinearNCat(a.n(), V, MultiMap::build(1, -1, V, raw));
}

RawGlobular unit_raw(int n) {
  RawGlobular R;
  R.n = n;
  R.dims.assign(static_cast<std::size_t>(n + 1), 1);
  R.source.emplace_back();
  R.target.emplace_back();
  for (int m = 1; m <= n; ++m) {
    R.source.push_back(Matrix::identity(1));
    R.target.push_back(Matrix::identity(1));
  }
  for (int m = 0; m < n; ++m) R.identity.push_back(Matrix::identity(1));
  return R;
}

LinearNCat unit_category(int n) { return component_form(unit_raw(n)).category; }

NFunctor lift_functor(const LinearNCat& src, const LinearNCat& dst, std::vector<Matrix> level_maps) {
  const int n = src.n();
  if (dst.n() != n || level_maps.size() != static_cast<std::size_t>(n + 1))
    throw LiftError("level maps do not match the category dimension");
  for (int m = 0; m <= n; ++m) {
    const Matrix& F = level_maps[static_cast<std::size_t>(m)];
    if (F.rows() != dst.level_dim(m) || F.cols() != src.level_dim(m))
      throw LiftError("level map " + std::to_string(m) + " has the wrong shape");
  }
  auto witness = [](const Matrix& lhs, const Matrix& rhs) {
    for (std::size_t c = 0; c < lhs.cols(); ++c)
      if (!(lhs.column(c) == rhs.column(c))) return c;
    return lhs.cols();
  };
  for (int m = 1; m <= n; ++m) {
    const Matrix& F = level_maps[static_cast<std::size_t>(m)];
    const Matrix& Fl = level_maps[static_cast<std::size_t>(m - 1)];
    const Matrix ls = Fl * src.source_matrix(m), rs = dst.source_matrix(m) * F;
    if (!(ls == rs))
      throw LiftError("source not respected at level " + std::to_string(m) + ", basis cell " +
                      std::to_string(witness(ls, rs)));
    const Matrix lt = Fl * src.target_matrix(m), rt = dst.target_matrix(m) * F;
    if (!(lt == rt))
      throw LiftError("target not respected at level " + std::to_string(m) + ", basis cell " +
                      std::to_string(witness(lt, rt)));
  }
  for (int m = 0; m < n; ++m) {
    const Matrix li = level_maps[static_cast<std::size_t>(m + 1)] * src.identity_matrix(m);
    const Matrix ri = dst.identity_matrix(m) * level_maps[static_cast<std::size_t>(m)];
    if (!(li == ri))
      throw LiftError("identity not respected at level " + std::to_string(m) + ", basis cell " +
                      std::to_string(witness(li, ri)));
  }
  // composition comes for free; verify it on spanning composable pairs
  auto image = [&](const Cell& a) {
    const Coords flat = level_maps[static_cast<std::size_t>(a.level())].apply(src.flatten(a));
    return dst.unflatten(a.level(), flat);
  };
  for (int m = 1; m <= n; ++m)
    for (int p = 0; p < m; ++p) {
      std::vector<std::pair<Cell, Cell>> pairs;
      for (const auto& a : src.basis_cells(m))
        pairs.emplace_back(a, src.identity_k(src.target_k(a, m - p), m - p));
      for (int i = p + 1; i <= m; ++i)
        for (std::size_t j = 0; j < src.space().dim(i); ++j)
          pairs.emplace_back(src.zero_cell(m), src.basis_cell(m, i, j));
      for (const auto& [a, b] : pairs)
        if (!(image(src.compose(a, b, p)) == dst.compose(image(a), image(b), p)))
          throw std::logic_error("functor respecting s, t, 1 failed to respect composition");
    }
  return NFunctor{std::move(level_maps)};
}

}  // namespace shlie3
