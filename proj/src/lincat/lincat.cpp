#include "shlie3/lincat.hpp"

namespace shlie3 {

namespace {

Matrix differential_matrix(const GradedSpace& V, const MultiMap& d, int k) {
  Matrix m(V.dim(k - 1), V.dim(k));
  for (std::size_t j = 0; j < V.dim(k); ++j) {
    const BasisIndex b{k, j};
    const Coords col = d.at(std::span<const BasisIndex>(&b, 1));
    for (std::size_t i = 0; i < col.size(); ++i) m(i, j) = col[i];
  }
  return m;
}

void require_differential(const GradedSpace& V, const MultiMap& d) {
  if (d.arity() != 1 || d.weight() != -1 || !(d.space() == V))
    throw std::invalid_argument("differential must be a weight -1 linear map on the space");
  for (int k = 2; k <= V.top_degree(); ++k)
    if (!(differential_matrix(V, d, k - 1) * differential_matrix(V, d, k)).is_zero())
      throw std::invalid_argument("differential does not square to zero (degree " + std::to_string(k) + ")");
}

}  // namespace

Complex::Complex(GradedSpace V, MultiMap d) : space(std::move(V)), differential(std::move(d)) {
  require_differential(space, differential);
}

Matrix Complex::matrix(int k) const { return differential_matrix(space, differential, k); }

Cell& Cell::operator+=(const Cell& o) {
  if (o.level() != level()) throw std::invalid_argument("adding cells of different levels");
  for (std::size_t i = 0; i < components.size(); ++i) add_scaled(components[i], 1, o.components[i]);
  return *this;
}

Cell& Cell::operator-=(const Cell& o) {
  if (o.level() != level()) throw std::invalid_argument("subtracting cells of different levels");
  for (std::size_t i = 0; i < components.size(); ++i) add_scaled(components[i], -1, o.components[i]);
  return *this;
}

Cell operator*(const Rational& c, Cell a) {
  for (auto& comp : a.components)
    for (auto& x : comp) x *= c;
  return a;
}

std::string to_string(const Cell& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.components.size(); ++i) {
    if (i) s += ", ";
    s += to_string(c.components[i]);
  }
  return s + ")";
}

LinearNCat::LinearNCat(int n, GradedSpace V, MultiMap t) : n_(n), space_(std::move(V)), t_(std::move(t)) {
  if (n_ < 0) throw std::invalid_argument("negative category dimension");
  if (space_.top_degree() != n_) throw std::invalid_argument("space must have degrees 0..n");
  require_differential(space_, t_);
  t_mats_.emplace_back();
  for (int k = 1; k <= n_; ++k) t_mats_.push_back(differential_matrix(space_, t_, k));
}

std::size_t LinearNCat::level_dim(int m) const {
  std::size_t s = 0;
  for (int i = 0; i <= m; ++i) s += space_.dim(i);
  return s;
}

Cell LinearNCat::zero_cell(int m) const {
  if (m < 0 || m > n_) throw std::out_of_range("cell level out of range");
  Cell c;
  for (int i = 0; i <= m; ++i) c.components.emplace_back(space_.dim(i));
  return c;
}

Cell LinearNCat::basis_cell(int m, int component, std::size_t index) const {
  Cell c = zero_cell(m);
  c[component].at(index) = 1;
  return c;
}

std::vector<Cell> LinearNCat::basis_cells(int m) const {
  std::vector<Cell> out;
  for (int i = 0; i <= m; ++i)
    for (std::size_t j = 0; j < space_.dim(i); ++j) out.push_back(basis_cell(m, i, j));
  return out;
}

Coords LinearNCat::t_of(int degree, const Coords& v) const { return t_mats_.at(static_cast<std::size_t>(degree)).apply(v); }

void LinearNCat::check_cell(const Cell& a) const {
  if (a.level() < 0 || a.level() > n_) throw std::invalid_argument("cell level out of range");
  for (int i = 0; i <= a.level(); ++i)
    if (a[i].size() != space_.dim(i)) throw std::invalid_argument("cell component has the wrong length");
}

Cell LinearNCat::source(const Cell& a) const {
  check_cell(a);
  if (a.level() < 1) throw std::out_of_range("source of an object");
  Cell s = a;
  s.components.pop_back();
  return s;
}

Cell LinearNCat::target(const Cell& a) const {
  check_cell(a);
  const int m = a.level();
  if (m < 1) throw std::out_of_range("target of an object");
  Cell t = a;
  t.components.pop_back();
  add_scaled(t[m - 1], 1, t_of(m, a[m]));
  return t;
}

Cell LinearNCat::identity(const Cell& a) const {
  check_cell(a);
  if (a.level() >= n_) throw std::out_of_range("identity of a top cell");
  Cell i = a;
  i.components.emplace_back(space_.dim(a.level() + 1));
  return i;
}

Cell LinearNCat::source_k(const Cell& a, int k) const {
  Cell c = a;
  for (int i = 0; i < k; ++i) c = source(c);
  return c;
}

Cell LinearNCat::target_k(const Cell& a, int k) const {
  Cell c = a;
  for (int i = 0; i < k; ++i) c = target(c);
  return c;
}

Cell LinearNCat::identity_k(const Cell& a, int k) const {
  Cell c = a;
  for (int i = 0; i < k; ++i) c = identity(c);
  return c;
}

bool LinearNCat::composable(const Cell& a, const Cell& b, int p) const {
  const int m = a.level();
  if (b.level() != m || p < 0 || p >= m) return false;
  return target_k(a, m - p) == source_k(b, m - p);
}

Cell LinearNCat::compose(const Cell& a, const Cell& b, int p) const {
  check_cell(a);
  check_cell(b);
  const int m = a.level();
  if (b.level() != m || p < 0 || p >= m) throw std::invalid_argument("composition needs equal levels above p");
  Cell ta = target_k(a, m - p), sb = source_k(b, m - p);
  if (!(ta == sb)) throw CompositionError("cells are not composable along " + std::to_string(p), ta, sb);
  Cell c = a;
  for (int i = p + 1; i <= m; ++i) add_scaled(c[i], 1, b[i]);
  return c;
}

Coords LinearNCat::flatten(const Cell& a) const {
  check_cell(a);
  Coords f;
  for (const auto& comp : a.components) f.insert(f.end(), comp.begin(), comp.end());
  return f;
}

Cell LinearNCat::unflatten(int m, std::span<const Rational> flat) const {
  if (flat.size() != level_dim(m)) throw std::invalid_argument("flat cell has the wrong length");
  Cell c;
  std::size_t pos = 0;
  for (int i = 0; i <= m; ++i) {
    c.components.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(pos),
                              flat.begin() + static_cast<std::ptrdiff_t>(pos + space_.dim(i)));
    pos += space_.dim(i);
  }
  return c;
}

Matrix LinearNCat::source_matrix(int m) const {
  Matrix s(level_dim(m - 1), level_dim(m));
  for (std::size_t i = 0; i < level_dim(m - 1); ++i) s(i, i) = 1;
  return s;
}

Matrix LinearNCat::target_matrix(int m) const {
  Matrix t = source_matrix(m);
  const std::size_t row0 = m >= 2 ? level_dim(m - 2) : 0;
  t.set_block(row0, level_dim(m - 1), t_mats_.at(static_cast<std::size_t>(m)));
  return t;
}

Matrix LinearNCat::identity_matrix(int m) const { return source_matrix(m + 1).transpose(); }

Cell standard_compose(const LinearNCat& L, const Cell& a, const Cell& b, int p) { return L.compose(a, b, p); }

LinearNCat from_chain(const Complex& C) { return LinearNCat(C.space.top_degree(), C.space, C.differential); }

Complex to_chain(const LinearNCat& L) { return Complex(L.space(), L.differential()); }

}  // namespace shlie3
