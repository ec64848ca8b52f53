#include "shlie3/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

namespace shlie3 {

namespace {

Coords flat(const Matrix& m) {
  Coords out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m(r, c));
  return out;
}

void expect_equal(Report& r, const std::string& law, const Matrix& a, const Matrix& b, const std::string& where) {
  r.expect_zero(law, {}, {flat(a - b)}, where);
}

std::string at(int n, int i, int j) {
  return "level " + std::to_string(n) + ", i=" + std::to_string(i) + ", j=" + std::to_string(j);
}

}  // namespace

Report check_simplicial_identities(const SimplicialVS& S) {
  Report r("simplicial identities");
  const int N = S.trunc;
  // d_i d_j = d_{j-1} d_i on S_n, i < j
  for (int n = 2; n <= N; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        expect_equal(r, "d_i d_j = d_{j-1} d_i", S.d(n - 1, i) * S.d(n, j), S.d(n - 1, j - 1) * S.d(n, i), at(n, i, j));
  // s_i s_j = s_{j+1} s_i on S_n, i <= j
  for (int n = 0; n + 2 <= N; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        expect_equal(r, "s_i s_j = s_{j+1} s_i", S.s(n + 1, i) * S.s(n, j), S.s(n + 1, j + 1) * S.s(n, i), at(n, i, j));
  // d_i s_j on S_n
  for (int n = 0; n < N; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i) {
        const Matrix lhs = S.d(n + 1, i) * S.s(n, j);
        if (i < j)
          expect_equal(r, "d_i s_j = s_{j-1} d_i", lhs, S.s(n - 1, j - 1) * S.d(n, i), at(n, i, j));
        else if (i == j || i == j + 1)
          expect_equal(r, "d_i s_j = 1", lhs, Matrix::identity(S.dims[static_cast<std::size_t>(n)]), at(n, i, j));
        else
          expect_equal(r, "d_i s_j = s_j d_{i-1}", lhs, S.s(n - 1, j) * S.d(n, i - 1), at(n, i, j));
      }
  return r;
}

void validate(const SimplicialVS& S) {
  const auto N = static_cast<std::size_t>(S.trunc);
  if (S.trunc < 0 || S.dims.size() != N + 1 || S.faces.size() != N + 1 || S.degeneracies.size() != N)
    throw SimplicialError("simplicial space has inconsistent truncation", Report("shape"));
  for (std::size_t n = 0; n <= N; ++n) {
    if (S.faces[n].size() != (n == 0 ? 0 : n + 1))
      throw SimplicialError("wrong number of faces at level " + std::to_string(n), Report("shape"));
    for (const Matrix& d : S.faces[n])
      if (d.rows() != S.dims[n - 1] || d.cols() != S.dims[n])
        throw SimplicialError("face matrix has the wrong shape at level " + std::to_string(n), Report("shape"));
  }
  for (std::size_t n = 0; n < N; ++n) {
    if (S.degeneracies[n].size() != n + 1)
      throw SimplicialError("wrong number of degeneracies at level " + std::to_string(n), Report("shape"));
    for (const Matrix& s : S.degeneracies[n])
      if (s.rows() != S.dims[n + 1] || s.cols() != S.dims[n])
        throw SimplicialError("degeneracy matrix has the wrong shape at level " + std::to_string(n), Report("shape"));
  }
  Report r = check_simplicial_identities(S);
  if (!r.passed()) throw SimplicialError("simplicial identities fail", std::move(r));
}

void validate(const ChainComplexT& C) {
  if (C.dims.empty() || C.d.size() != C.dims.size()) throw std::invalid_argument("chain complex has inconsistent size");
  for (std::size_t n = 1; n < C.dims.size(); ++n) {
    if (C.d[n].rows() != C.dims[n - 1] || C.d[n].cols() != C.dims[n])
      throw std::invalid_argument("differential has the wrong shape in degree " + std::to_string(n));
    if (n >= 2 && !(C.d[n - 1] * C.d[n]).is_zero())
      throw std::invalid_argument("d d != 0 in degree " + std::to_string(n));
  }
}

bool is_chain_map(const ChainMapT& f, const ChainComplexT& src, const ChainComplexT& dst) {
  const std::size_t top = f.f.size();
  if (top == 0 || top > src.dims.size() || top > dst.dims.size()) return false;
  for (std::size_t n = 0; n < top; ++n)
    if (f.f[n].rows() != dst.dims[n] || f.f[n].cols() != src.dims[n]) return false;
  for (std::size_t n = 1; n < top; ++n)
    if (dst.d[n] * f.f[n] != f.f[n - 1] * src.d[n]) return false;
  return true;
}

ChainMapT compose(const ChainMapT& g, const ChainMapT& f) {
  if (g.f.size() != f.f.size()) throw std::invalid_argument("chain maps cover different degrees");
  ChainMapT out;
  for (std::size_t n = 0; n < f.f.size(); ++n) out.f.push_back(g.f[n] * f.f[n]);
  return out;
}

SimplicialVS tensor_svs(const SimplicialVS& S, const SimplicialVS& T) {
  if (S.trunc != T.trunc) throw std::invalid_argument("tensor of simplicial spaces needs equal truncation");
  SimplicialVS out;
  out.trunc = S.trunc;
  for (int n = 0; n <= S.trunc; ++n) {
    const auto un = static_cast<std::size_t>(n);
    out.dims.push_back(S.dims[un] * T.dims[un]);
    std::vector<Matrix> faces;
    if (n > 0)
      for (int i = 0; i <= n; ++i) faces.push_back(kron(S.d(n, i), T.d(n, i)));
    out.faces.push_back(std::move(faces));
    if (n < S.trunc) {
      std::vector<Matrix> degs;
      for (int i = 0; i <= n; ++i) degs.push_back(kron(S.s(n, i), T.s(n, i)));
      out.degeneracies.push_back(std::move(degs));
    }
  }
  validate(out);
  return out;
}

SimplicialVS constant_svs(std::size_t dim, int trunc) {
  if (trunc < 0) throw std::invalid_argument("negative truncation");
  SimplicialVS out;
  out.trunc = trunc;
  const Matrix I = Matrix::identity(dim);
  for (int n = 0; n <= trunc; ++n) {
    out.dims.push_back(dim);
    out.faces.emplace_back(n == 0 ? 0 : static_cast<std::size_t>(n + 1), I);
    if (n < trunc) out.degeneracies.emplace_back(static_cast<std::size_t>(n + 1), I);
  }
  return out;
}

namespace {

using Seq = std::vector<int>;

// non-decreasing sequences of length n+1 in [0, k]
std::vector<Seq> monotone(int n, int k) {
  std::vector<Seq> out;
  Seq cur;
  std::function<void(int)> rec = [&](int lo) {
    if (static_cast<int>(cur.size()) == n + 1) {
      out.push_back(cur);
      return;
    }
    for (int v = lo; v <= k; ++v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

bool surjective(const Seq& s, int k) {
  if (s.front() != 0 || s.back() != k) return false;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] > s[i - 1] + 1) return false;
  return true;
}

// Linearization of a simplicial set whose n-simplices are monotone sequences,
// optionally collapsing the non-surjective ones to a base point (index 0).
SimplicialVS linearize(int k, int trunc, bool collapse) {
  if (k < 0 || trunc < 0) throw std::invalid_argument("negative simplex size or truncation");
  std::vector<std::map<Seq, std::size_t>> index(static_cast<std::size_t>(trunc) + 1);
  SimplicialVS out;
  out.trunc = trunc;
  for (int n = 0; n <= trunc; ++n) {
    auto& idx = index[static_cast<std::size_t>(n)];
    std::size_t next = collapse ? 1 : 0;
    for (const Seq& s : monotone(n, k))
      if (!collapse || surjective(s, k)) idx[s] = next++;
    out.dims.push_back(next);
  }
  auto locate = [&](int n, const Seq& s) -> std::size_t {
    const auto& idx = index[static_cast<std::size_t>(n)];
    auto it = idx.find(s);
    if (it != idx.end()) return it->second;
    return 0;  // collapsed to the base point
  };
  auto build = [&](int n, int m, const std::function<Seq(const Seq&)>& op) {
    Matrix M(out.dims[static_cast<std::size_t>(m)], out.dims[static_cast<std::size_t>(n)]);
    if (collapse) M(0, 0) = 1;
    for (const auto& [s, col] : index[static_cast<std::size_t>(n)]) M(locate(m, op(s)), col) = 1;
    return M;
  };
  for (int n = 0; n <= trunc; ++n) {
    std::vector<Matrix> faces;
    if (n > 0)
      for (int i = 0; i <= n; ++i)
        faces.push_back(build(n, n - 1, [i](const Seq& s) {
          Seq t = s;
          t.erase(t.begin() + i);
          return t;
        }));
    out.faces.push_back(std::move(faces));
    if (n < trunc) {
      std::vector<Matrix> degs;
      for (int i = 0; i <= n; ++i)
        degs.push_back(build(n, n + 1, [i](const Seq& s) {
          Seq t = s;
          t.insert(t.begin() + i, s[static_cast<std::size_t>(i)]);
          return t;
        }));
      out.degeneracies.push_back(std::move(degs));
    }
  }
  validate(out);
  return out;
}

}  // namespace

SimplicialVS simplex_svs(int k, int trunc) { return linearize(k, trunc, false); }
SimplicialVS sphere_svs(int k, int trunc) {
  if (k < 1) throw std::invalid_argument("sphere needs k >= 1");
  return linearize(k, trunc, true);
}

std::vector<std::size_t> homology_dims(const ChainComplexT& C, int max_degree) {
  if (max_degree >= C.top()) throw std::invalid_argument("homology needs the next differential");
  std::vector<std::size_t> out;
  for (int k = 0; k <= max_degree; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    const std::size_t z = k == 0 ? C.dims[0] : C.dims[uk] - rank(C.d[uk]);
    out.push_back(z - rank(C.d[uk + 1]));
  }
  return out;
}

bool identity_on_homology(const ChainMapT& f, const ChainComplexT& C, int max_degree) {
  if (max_degree >= C.top()) throw std::invalid_argument("homology needs the next differential");
  if (f.f.size() <= static_cast<std::size_t>(max_degree)) throw std::invalid_argument("chain map too short");
  for (int k = 0; k <= max_degree; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    const Matrix Z = k == 0 ? Matrix::identity(C.dims[0]) : nullspace(C.d[uk]);
    const Matrix& B = C.d[uk + 1];
    const Matrix defect = (f.f[uk] - Matrix::identity(C.dims[uk])) * Z;
    // (f - 1) must send cycles into boundaries
    if (rank(hstack(B, defect)) != rank(B)) return false;
  }
  return true;
}

}  // namespace shlie3
