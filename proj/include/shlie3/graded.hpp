#pragma once

#include "shlie3/rational.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace shlie3 {

// dims[d] = dimension of the degree-d part, d = 0..D
class GradedSpace {
 public:
  GradedSpace() : GradedSpace(std::vector<std::size_t>{0}) {}
  explicit GradedSpace(std::vector<std::size_t> dims);

  int top_degree() const { return static_cast<int>(dims_.size()) - 1; }
  bool has_degree(int d) const { return d >= 0 && d <= top_degree(); }
  std::size_t dim(int d) const { return has_degree(d) ? dims_[static_cast<std::size_t>(d)] : 0; }
  std::size_t total_dim() const { return total_; }
  // position of the first degree-d basis vector in the global basis
  std::size_t offset(int d) const { return offsets_[static_cast<std::size_t>(d)]; }
  const std::vector<std::size_t>& dims() const { return dims_; }

  friend bool operator==(const GradedSpace& a, const GradedSpace& b) { return a.dims_ == b.dims_; }

 private:
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
};

struct BasisIndex {
  int degree = 0;
  std::size_t index = 0;
  friend auto operator<=>(const BasisIndex&, const BasisIndex&) = default;
};

std::string to_string(const BasisIndex& b);
std::string to_string(const std::vector<BasisIndex>& tuple);

// All basis elements of the space, ordered by (degree, index).
std::vector<BasisIndex> basis_of(const GradedSpace& V);
std::vector<BasisIndex> basis_of_degree(const GradedSpace& V, int d);

class GradedVector {
 public:
  explicit GradedVector(const GradedSpace& V);
  static GradedVector basis(const GradedSpace& V, BasisIndex b);
  static GradedVector homogeneous(const GradedSpace& V, int degree, Coords coords);

  const GradedSpace& space() const { return space_; }
  const Coords& coords(int d) const { return coords_[static_cast<std::size_t>(d)]; }
  Coords& coords(int d) { return coords_[static_cast<std::size_t>(d)]; }
  bool is_zero() const;
  // nullopt for the zero vector and for mixed-degree vectors
  std::optional<int> degree() const;
  bool is_homogeneous() const;

  GradedVector& operator+=(const GradedVector& o);
  GradedVector& operator-=(const GradedVector& o);
  friend GradedVector operator+(GradedVector a, const GradedVector& b) { return a += b; }
  friend GradedVector operator-(GradedVector a, const GradedVector& b) { return a -= b; }
  friend GradedVector operator*(const Rational& c, GradedVector v);
  friend bool operator==(const GradedVector&, const GradedVector&) = default;

 private:
  GradedSpace space_;
  std::vector<Coords> coords_;
};

std::string to_string(const GradedVector& v);

}  // namespace shlie3
