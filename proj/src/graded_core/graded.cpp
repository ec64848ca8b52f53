#include "shlie3/graded.hpp"

#include <stdexcept>

namespace shlie3 {

GradedSpace::GradedSpace(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw std::invalid_argument("graded space needs at least degree 0");
  offsets_.resize(dims_.size());
  for (std::size_t d = 0; d < dims_.size(); ++d) {
    offsets_[d] = total_;
    total_ += dims_[d];
  }
}

std::string to_string(const BasisIndex& b) {
  return "(" + std::to_string(b.degree) + "," + std::to_string(b.index) + ")";
}

std::string to_string(const std::vector<BasisIndex>& tuple) {
  std::string s = "[";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) s += ",";
    s += to_string(tuple[i]);
  }
  return s + "]";
}

std::vector<BasisIndex> basis_of(const GradedSpace& V) {
  std::vector<BasisIndex> out;
  for (int d = 0; d <= V.top_degree(); ++d)
    for (std::size_t i = 0; i < V.dim(d); ++i) out.push_back({d, i});
  return out;
}

std::vector<BasisIndex> basis_of_degree(const GradedSpace& V, int d) {
  std::vector<BasisIndex> out;
  for (std::size_t i = 0; i < V.dim(d); ++i) out.push_back({d, i});
  return out;
}

GradedVector::GradedVector(const GradedSpace& V) : space_(V) {
  for (std::size_t n : V.dims()) coords_.emplace_back(n);
}

GradedVector GradedVector::basis(const GradedSpace& V, BasisIndex b) {
  if (b.index >= V.dim(b.degree)) throw std::out_of_range("basis index out of range");
  GradedVector v(V);
  v.coords(b.degree)[b.index] = 1;
  return v;
}

GradedVector GradedVector::homogeneous(const GradedSpace& V, int degree, Coords c) {
  if (!V.has_degree(degree) || c.size() != V.dim(degree))
    throw std::invalid_argument("homogeneous vector does not fit the space");
  GradedVector v(V);
  v.coords(degree) = std::move(c);
  return v;
}

bool GradedVector::is_zero() const {
  for (const auto& c : coords_)
    if (!shlie3::is_zero(c)) return false;
  return true;
}

std::optional<int> GradedVector::degree() const {
  std::optional<int> found;
  for (int d = 0; d <= space_.top_degree(); ++d)
    if (!shlie3::is_zero(coords(d))) {
      if (found) return std::nullopt;
      found = d;
    }
  return found;
}

bool GradedVector::is_homogeneous() const { return is_zero() || degree().has_value(); }

GradedVector& GradedVector::operator+=(const GradedVector& o) {
  if (!(space_ == o.space_)) throw std::invalid_argument("space mismatch");
  for (std::size_t d = 0; d < coords_.size(); ++d) add_scaled(coords_[d], 1, o.coords_[d]);
  return *this;
}

GradedVector& GradedVector::operator-=(const GradedVector& o) {
  if (!(space_ == o.space_)) throw std::invalid_argument("space mismatch");
  for (std::size_t d = 0; d < coords_.size(); ++d) add_scaled(coords_[d], -1, o.coords_[d]);
  return *this;
}

GradedVector operator*(const Rational& c, GradedVector v) {
  for (auto& block : v.coords_)
    for (auto& x : block) x *= c;
  return v;
}

std::string to_string(const GradedVector& v) {
  std::string s = "{";
  for (int d = 0; d <= v.space().top_degree(); ++d) {
    if (d) s += ", ";
    s += std::to_string(d) + ": " + to_string(v.coords(d));
  }
  return s + "}";
}

}  // namespace shlie3
