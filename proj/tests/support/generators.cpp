#include "generators.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace shlie3::testing {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Rational small_rational(Rng& rng, int range) {
  const int num = uniform(rng, -range, range);
  const int den = uniform(rng, 1, 2);
  return Rational(num, den);
}

Coords random_coords(Rng& rng, std::size_t n, int range) {
  Coords v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(small_rational(rng, range));
  return v;
}

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int range) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = uniform(rng, -range, range);
  return m;
}

Matrix random_unimodular(Rng& rng, std::size_t n) {
  Matrix m = Matrix::identity(n);
  if (n < 2) {
    if (n == 1 && uniform(rng, 0, 1)) m(0, 0) = -1;
    return m;
  }
  for (std::size_t step = 0; step < 3 * n; ++step) {
    const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1));
    auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 2));
    if (j >= i) ++j;
    const Rational c = uniform(rng, -1, 1);
    for (std::size_t k = 0; k < n; ++k) m(i, k) += c * m(j, k);
  }
  return m;
}

std::vector<std::vector<BasisIndex>> canonical_tuples(const GradedSpace& V, int arity, int weight) {
  std::vector<std::vector<BasisIndex>> out;
  const auto basis = basis_of(V);
  std::vector<BasisIndex> t;
  std::function<void(std::size_t, int)> walk = [&](std::size_t from, int total) {
    if (static_cast<int>(t.size()) == arity) {
      if (V.has_degree(total + weight)) out.push_back(t);
      return;
    }
    for (std::size_t k = from; k < basis.size(); ++k) {
      if (total + basis[k].degree + weight > V.top_degree()) break;
      t.push_back(basis[k]);
      walk(basis[k].degree % 2 == 0 ? k + 1 : k, total + basis[k].degree);
      t.pop_back();
    }
  };
  walk(0, 0);
  return out;
}

MultiMap transform(const MultiMap& m, const std::vector<Matrix>& P) {
  const GradedSpace& V = m.space();
  std::vector<Matrix> inv;
  for (const auto& p : P) inv.push_back(inverse(p));
  std::vector<RawEntry> raw;
  for (const auto& t : canonical_tuples(V, m.arity(), m.weight())) {
    std::vector<Coords> cols;
    for (const auto& b : t) cols.push_back(P[static_cast<std::size_t>(b.degree)].column(b.index));
    std::vector<MultiMap::Arg> args;
    for (std::size_t i = 0; i < t.size(); ++i) args.push_back({t[i].degree, cols[i]});
    const int out = m.output_degree(t);
    raw.push_back({t, inv[static_cast<std::size_t>(out)].apply(m.apply(args))});
  }
  return MultiMap::build(m.arity(), m.weight(), V, raw);
}

LInfinityData transform(const LInfinityData& A, const std::vector<Matrix>& P) {
  return LInfinityData(A.space(), transform(A.l(1), P), transform(A.l(2), P), transform(A.l(3), P),
                       transform(A.l(4), P));
}

namespace {

MultiMap differential_from(const GradedSpace& V, const std::vector<Matrix>& d) {
  std::vector<RawEntry> raw;
  for (int k = 1; k <= V.top_degree(); ++k)
    for (std::size_t j = 0; j < V.dim(k); ++j) raw.push_back({{BasisIndex{k, j}}, d[static_cast<std::size_t>(k)].column(j)});
  return MultiMap::build(1, -1, V, raw);
}

Matrix low_rank(Rng& rng, std::size_t rows, std::size_t cols) {
  const int r = uniform(rng, 0, static_cast<int>(std::min(rows, cols)));
  return random_matrix(rng, rows, static_cast<std::size_t>(r)) * random_matrix(rng, static_cast<std::size_t>(r), cols);
}

}  // namespace

Complex random_complex(Rng& rng, const GradedSpace& V) {
  std::vector<Matrix> d(static_cast<std::size_t>(V.top_degree() + 1));
  for (int k = V.top_degree(); k >= 1; --k) {
    const auto uk = static_cast<std::size_t>(k);
    Matrix dk = low_rank(rng, V.dim(k - 1), V.dim(k));
    if (k < V.top_degree()) {
      // rows of d_k must kill the image of d_{k+1}
      const Matrix K = nullspace(d[uk + 1].transpose());
      dk = random_matrix(rng, V.dim(k - 1), K.cols()) * K.transpose();
    }
    d[uk] = dk;
  }
  return Complex(V, differential_from(V, d));
}

LieAlgebra lie_template(const std::string& name, std::size_t dim) {
  LieAlgebra g{name, dim, std::vector<std::vector<Coords>>(dim, std::vector<Coords>(dim, Coords(dim)))};
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
    if (std::max({i, j, k}) >= dim) throw std::invalid_argument("template " + name + " needs a larger dimension");
    g.c[i][j][k] += c;
    g.c[j][i][k] -= c;
  };
  if (name == "abelian") {
  } else if (name == "aff1") {
    set(0, 1, 1, 1);
  } else if (name == "heisenberg") {
    set(0, 1, 2, 1);
  } else if (name == "sl2") {
    set(0, 1, 1, 2);
    set(0, 2, 2, -2);
    set(1, 2, 0, 1);
  } else if (name == "filiform") {
    set(0, 1, 2, 1);
    set(0, 2, 3, 1);
    set(0, 3, 4, 1);
  } else {
    throw std::invalid_argument("unknown Lie algebra template " + name);
  }
  return g;
}

std::vector<std::string> lie_template_names(std::size_t max_dim) {
  std::vector<std::string> out{"abelian"};
  if (max_dim >= 2) out.push_back("aff1");
  if (max_dim >= 3) {
    out.push_back("heisenberg");
    out.push_back("sl2");
  }
  if (max_dim >= 5) out.push_back("filiform");
  return out;
}

LieAlgebra change_basis(const LieAlgebra& g, const Matrix& P) {
  const Matrix Pinv = inverse(P);
  LieAlgebra h{g.name, g.dim, g.c};
  for (std::size_t i = 0; i < g.dim; ++i)
    for (std::size_t j = 0; j < g.dim; ++j) {
      Coords v(g.dim);
      for (std::size_t a = 0; a < g.dim; ++a)
        for (std::size_t b = 0; b < g.dim; ++b) {
          const Rational coef = P(a, i) * P(b, j);
          if (!coef.is_zero()) add_scaled(v, coef, g.c[a][b]);
        }
      h.c[i][j] = Pinv.apply(v);
    }
  return h;
}

Coords condition_vector(const LInfinityData& A, int n) {
  Coords out;
  for (const auto& t : canonical_tuples(A.space(), n, n - 3)) {
    int deg = n - 3;
    for (const auto& b : t) deg += b.degree;
    const Coords r = linfty_residual(A, t).coords(deg);
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

MultiMap random_combination(Rng& rng, const std::vector<MultiMap>& maps, const MultiMap& zero) {
  MultiMap acc = zero;
  for (const auto& m : maps) acc = acc + m.scaled(small_rational(rng, 2));
  return acc;
}

namespace {

MultiMap unit_map(int arity, int weight, const GradedSpace& V, const std::vector<BasisIndex>& key, int out_deg,
                  std::size_t coord) {
  Coords v(V.dim(out_deg));
  v[coord] = 1;
  const std::vector<RawEntry> raw{{key, v}};
  return MultiMap::build(arity, weight, V, raw);
}

Coords stacked(const LInfinityData& A, std::initializer_list<int> ns) {
  Coords out;
  for (int n : ns) {
    const Coords c = condition_vector(A, n);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

// maps from the columns of a nullspace basis over units[offset, offset + count)
std::vector<MultiMap> maps_from(const Matrix& N, const std::vector<MultiMap>& units, std::size_t offset,
                                std::size_t count, const MultiMap& zero) {
  std::vector<MultiMap> out;
  for (std::size_t c = 0; c < N.cols(); ++c) {
    MultiMap m = zero;
    for (std::size_t k = 0; k < count; ++k)
      if (!N(k, c).is_zero()) m = m + units[offset + k].scaled(N(k, c));
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

GeneratedData random_special_valid(Rng& rng, const GradedSpace& V, const GenerateOptions& opt) {
  const std::size_t n0 = V.dim(0), n1 = V.dim(1), n2 = V.dim(2);
  const auto names = lie_template_names(n0);
  const std::string name =
      opt.lie.empty() ? names[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(names.size()) - 1))] : opt.lie;
  const LieAlgebra g = lie_template(name, n0);

  // derived algebra and centre
  std::vector<Coords> derived;
  Matrix ad(n0 * n0, n0);
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n0; ++j) {
      if (!is_zero(g.c[i][j])) derived.push_back(g.c[i][j]);
      for (std::size_t k = 0; k < n0; ++k) ad(i * n0 + k, j) = g.c[i][j][k];
    }
  const Matrix centre = nullspace(ad);

  // l1 on V1 lands in the centre; such f carry the trivial character
  std::vector<Coords> l1f(n1, Coords(n0));
  std::vector<Coords> image = derived;
  if (opt.want_l1 && centre.cols() > 0)
    for (std::size_t i = 0; i < n1; ++i)
      if (uniform(rng, 0, 1)) {
        Coords v(n0);
        for (std::size_t c = 0; c < centre.cols(); ++c) add_scaled(v, small_rational(rng, 2), centre.column(c));
        l1f[i] = v;
        if (!is_zero(v)) image.push_back(v);
      }
  // characters vanish on [g,g] and on the image of l1
  Matrix chars = Matrix::identity(n0);
  if (!image.empty()) chars = nullspace(Matrix::from_columns(image, n0).transpose());
  std::vector<Coords> pool{Coords(n0)};
  for (int k = 0; k < 2 && chars.cols() > 0; ++k) {
    Coords chi(n0);
    for (std::size_t c = 0; c < chars.cols(); ++c) add_scaled(chi, small_rational(rng, 2), chars.column(c));
    pool.push_back(chi);
  }
  auto pick = [&] { return pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pool.size()) - 1))]; };
  std::vector<Coords> chi1(n1), chi2(n2);
  for (std::size_t i = 0; i < n1; ++i) chi1[i] = is_zero(l1f[i]) ? pick() : Coords(n0);
  for (std::size_t j = 0; j < n2; ++j) {
    chi2[j] = pick();
    if (opt.nontrivial_v2 && pool.size() > 1)
      while (is_zero(chi2[j])) chi2[j] = pick();
  }

  std::vector<RawEntry> l1raw, l2raw;
  for (std::size_t i = 0; i < n1; ++i) l1raw.push_back({{BasisIndex{1, i}}, l1f[i]});
  for (std::size_t j = 0; j < n2; ++j) {
    Coords v(n1);
    if (opt.want_l1)
      for (std::size_t i = 0; i < n1; ++i)
        if (is_zero(l1f[i]) && chi1[i] == chi2[j] && uniform(rng, 0, 1)) v[i] = small_rational(rng, 2);
    l1raw.push_back({{BasisIndex{2, j}}, v});
  }
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = i + 1; j < n0; ++j) l2raw.push_back({{BasisIndex{0, i}, BasisIndex{0, j}}, g.c[i][j]});
  for (std::size_t x = 0; x < n0; ++x) {
    for (std::size_t i = 0; i < n1; ++i) {
      Coords v(n1);
      v[i] = chi1[i][x];
      l2raw.push_back({{BasisIndex{0, x}, BasisIndex{1, i}}, v});
    }
    for (std::size_t j = 0; j < n2; ++j) {
      Coords v(n2);
      v[j] = chi2[j][x];
      l2raw.push_back({{BasisIndex{0, x}, BasisIndex{2, j}}, v});
    }
  }
  const MultiMap z3(3, 1, V), z4(4, 2, V);
  LInfinityData base(V, MultiMap::build(1, -1, V, l1raw), MultiMap::build(2, 0, V, l2raw), z3, z4);
  if (!is_zero(stacked(base, {1, 2, 3, 4, 5})))
    throw std::logic_error("generator produced an invalid binary part");

  // unknowns: l3 on V0^3 -> V1 and l4 on V0^4 -> V2
  std::vector<MultiMap> units;
  std::size_t n3 = 0;
  if (opt.want_l3)
    for (const auto& t : canonical_tuples(V, 3, 1))
      if (t[0].degree + t[1].degree + t[2].degree == 0)
        for (std::size_t c = 0; c < n1; ++c, ++n3) units.push_back(unit_map(3, 1, V, t, 1, c));
  std::size_t n4 = 0;
  if (opt.want_l4)
    for (const auto& t : canonical_tuples(V, 4, 2))
      for (std::size_t c = 0; c < n2; ++c, ++n4) units.push_back(unit_map(4, 2, V, t, 2, c));

  auto column = [&](std::size_t k, std::initializer_list<int> ns) {
    const LInfinityData A = k < n3 ? base.with(3, units[k]) : base.with(4, units[k]);
    return stacked(A, ns);
  };
  LInfinityData A = base;
  GeneratedData out{base, name, {}, {}};
  if (!units.empty()) {
    std::vector<Coords> cols345, cols34;
    for (std::size_t k = 0; k < units.size(); ++k) {
      cols345.push_back(column(k, {3, 4, 5}));
      cols34.push_back(column(k, {3, 4}));
    }
    const Matrix M345 = Matrix::from_columns(cols345, cols345[0].size());
    const Matrix M34 = Matrix::from_columns(cols34, cols34[0].size());
    const Matrix N = nullspace(M345);
    Coords pick_coords(units.size());
    for (std::size_t c = 0; c < N.cols(); ++c) add_scaled(pick_coords, small_rational(rng, 2), N.column(c));
    MultiMap l3 = z3, l4 = z4;
    for (std::size_t k = 0; k < units.size(); ++k)
      if (!pick_coords[k].is_zero()) {
        if (k < n3) l3 = l3 + units[k].scaled(pick_coords[k]);
        else l4 = l4 + units[k].scaled(pick_coords[k]);
      }
    A = LInfinityData(V, base.l(1), base.l(2), l3, l4);
    if (n4 > 0) {
      const Matrix M34_l4 = M34.block(0, n3, M34.rows(), n4);
      const Matrix M345_l4 = M345.block(0, n3, M345.rows(), n4);
      out.l4_n4_directions = maps_from(nullspace(M34_l4), units, n3, n4, z4);
      out.l4_cocycle_directions = maps_from(nullspace(M345_l4), units, n3, n4, z4);
    }
  }

  // hide the template basis
  std::vector<Matrix> P;
  for (int d = 0; d <= 2; ++d) P.push_back(random_unimodular(rng, V.dim(d)));
  out.data = transform(A, P);
  for (auto& m : out.l4_n4_directions) m = transform(m, P);
  for (auto& m : out.l4_cocycle_directions) m = transform(m, P);
  for (int n = 1; n <= 5; ++n)
    if (!check_condition(out.data, n).passed()) throw std::logic_error("generated data fails condition n=" + std::to_string(n));
  if (!is_special(out.data).special) throw std::logic_error("generated data is not special");
  return out;
}

}  // namespace shlie3::testing
