#include "shlie3/permutation.hpp"
#include "shlie3/simplicial.hpp"

#include <algorithm>

namespace shlie3 {

namespace {

struct Block {
  int p, q;
  std::size_t offset, size;
};

// blocks (p, n-p) of a tensor complex in degree n, in basis order
std::vector<Block> blocks(const ChainComplexT& A, const ChainComplexT& B, int n) {
  std::vector<Block> out;
  std::size_t off = 0;
  for (int p = 0; p <= n; ++p) {
    const int q = n - p;
    if (p > A.top() || q > B.top()) continue;
    const std::size_t sz = A.dims[static_cast<std::size_t>(p)] * B.dims[static_cast<std::size_t>(q)];
    out.push_back({p, q, off, sz});
    off += sz;
  }
  return out;
}

std::size_t total(const std::vector<Block>& bs) { return bs.empty() ? 0 : bs.back().offset + bs.back().size; }

ChainComplexT truncated(const ChainComplexT& C, int top) {
  ChainComplexT out;
  for (int n = 0; n <= top; ++n) {
    out.dims.push_back(C.dims[static_cast<std::size_t>(n)]);
    out.d.push_back(C.d[static_cast<std::size_t>(n)]);
  }
  return out;
}

// s_{seq.back()} ... s_{seq.front()} starting at level `from`
Matrix degeneracy_word(const SimplicialVS& S, int from, const std::vector<int>& seq) {
  Matrix M = Matrix::identity(S.dims[static_cast<std::size_t>(from)]);
  int level = from;
  for (int i : seq) M = S.s(level++, i) * M;
  return M;
}

void check_degree(const SimplicialVS& S, const SimplicialVS& T, int max_degree) {
  if (S.trunc != T.trunc) throw std::invalid_argument("simplicial spaces need equal truncation");
  if (max_degree < 0 || max_degree > S.trunc) throw std::out_of_range("degree beyond the truncation");
}

struct Moores {
  MooreComplex s, t, st;
};

ChainMapT ez_impl(const SimplicialVS& S, const SimplicialVS& T, const Moores& M, int max_degree) {
  ChainMapT out;
  for (int n = 0; n <= max_degree; ++n) {
    const auto un = static_cast<std::size_t>(n);
    const auto bs = blocks(M.s.complex, M.t.complex, n);
    Matrix ambient(S.dims[un] * T.dims[un], total(bs));
    for (const Block& b : bs) {
      const Matrix& ia = M.s.inclusion[static_cast<std::size_t>(b.p)];
      const Matrix& ib = M.t.inclusion[static_cast<std::size_t>(b.q)];
      Matrix acc(ambient.rows(), b.size);
      for (const Permutation& sh : enumerate_shuffles(b.p, b.q)) {
        const auto& im = sh.images();
        const std::vector<int> mu(im.begin(), im.begin() + b.p), nu(im.begin() + b.p, im.end());
        const Matrix term = kron(degeneracy_word(S, b.p, nu) * ia, degeneracy_word(T, b.q, mu) * ib);
        acc += Rational(sh.signature()) * term;
      }
      ambient.set_block(0, b.offset, acc);
    }
    const auto x = solve(M.st.inclusion[un], ambient);
    if (!x) throw std::logic_error("shuffle map leaves the normalized complex in degree " + std::to_string(n));
    out.f.push_back(*x);
  }
  return out;
}

ChainMapT aw_impl(const SimplicialVS& S, const SimplicialVS& T, const Moores& M, int max_degree) {
  ChainMapT out;
  for (int n = 0; n <= max_degree; ++n) {
    const auto un = static_cast<std::size_t>(n);
    const auto bs = blocks(M.s.complex, M.t.complex, n);
    const Matrix& incl = M.st.inclusion[un];
    Matrix F(total(bs), incl.cols());
    for (const Block& b : bs) {
      // front face d_{p+1} ... d_n and back face (d_0)^p
      Matrix front = Matrix::identity(S.dims[un]);
      for (int k = n; k > b.p; --k) front = S.d(k, k) * front;
      Matrix back = Matrix::identity(T.dims[un]);
      for (int k = n; k > b.q; --k) back = T.d(k, 0) * back;
      const Matrix part = kron(M.s.projection[static_cast<std::size_t>(b.p)] * front,
                               M.t.projection[static_cast<std::size_t>(b.q)] * back);
      F.set_block(b.offset, 0, part * incl);
    }
    out.f.push_back(std::move(F));
  }
  return out;
}

Moores moores(const SimplicialVS& S, const SimplicialVS& T) {
  return {moore(S), moore(T), moore(tensor_svs(S, T))};
}

}  // namespace

ChainComplexT tensor_complex(const ChainComplexT& A, const ChainComplexT& B, int max_degree) {
  validate(A);
  validate(B);
  ChainComplexT C;
  std::vector<std::vector<Block>> all;
  for (int n = 0; n <= max_degree; ++n) {
    all.push_back(blocks(A, B, n));
    C.dims.push_back(total(all.back()));
  }
  C.d.emplace_back(0, C.dims[0]);
  for (int n = 1; n <= max_degree; ++n) {
    const auto& src = all[static_cast<std::size_t>(n)];
    const auto& dst = all[static_cast<std::size_t>(n - 1)];
    Matrix D(C.dims[static_cast<std::size_t>(n - 1)], C.dims[static_cast<std::size_t>(n)]);
    auto find = [&](int p) -> const Block* {
      for (const Block& b : dst)
        if (b.p == p) return &b;
      return nullptr;
    };
    for (const Block& b : src) {
      const std::size_t ap = A.dims[static_cast<std::size_t>(b.p)], bq = B.dims[static_cast<std::size_t>(b.q)];
      if (b.p >= 1)
        if (const Block* t = find(b.p - 1))
          D.set_block(t->offset, b.offset, kron(A.d[static_cast<std::size_t>(b.p)], Matrix::identity(bq)));
      if (b.q >= 1)
        if (const Block* t = find(b.p)) {
          const Rational sign = b.p % 2 == 0 ? 1 : -1;
          D.set_block(t->offset, b.offset, sign * kron(Matrix::identity(ap), B.d[static_cast<std::size_t>(b.q)]));
        }
    }
    C.d.push_back(std::move(D));
  }
  validate(C);
  return C;
}

ChainMapT ez(const SimplicialVS& S, const SimplicialVS& T, int max_degree) {
  check_degree(S, T, max_degree);
  return ez_impl(S, T, moores(S, T), max_degree);
}

ChainMapT aw(const SimplicialVS& S, const SimplicialVS& T, int max_degree) {
  check_degree(S, T, max_degree);
  return aw_impl(S, T, moores(S, T), max_degree);
}

EzAwCheck aw_ez_homology_check(const SimplicialVS& S, const SimplicialVS& T) {
  if (S.trunc != T.trunc) throw std::invalid_argument("simplicial spaces need equal truncation");
  if (S.trunc < 1) throw std::invalid_argument("homology check needs truncation >= 1");
  EzAwCheck out;
  const Moores M = moores(S, T);
  const int maps_top = std::min(S.trunc, 3);
  out.max_degree = std::min(3, S.trunc - 1);
  const ChainMapT E = ez_impl(S, T, M, maps_top);
  const ChainMapT A = aw_impl(S, T, M, maps_top);
  const ChainComplexT tens = tensor_complex(M.s.complex, M.t.complex, std::min(S.trunc, maps_top + 1));
  const ChainComplexT st = truncated(M.st.complex, std::min(S.trunc, maps_top + 1));
  out.ez_chain_map = is_chain_map(E, tens, st);
  out.aw_chain_map = is_chain_map(A, st, tens);
  const ChainMapT ae = compose(A, E), ea = compose(E, A);
  out.aw_ez_identity = true;
  for (std::size_t n = 0; n < ae.f.size(); ++n)
    if (ae.f[n] != Matrix::identity(tens.dims[n])) out.aw_ez_identity = false;
  out.aw_ez_homology_identity = identity_on_homology(ae, tens, out.max_degree);
  out.ez_aw_homology_identity = identity_on_homology(ea, st, out.max_degree);
  return out;
}

}  // namespace shlie3
