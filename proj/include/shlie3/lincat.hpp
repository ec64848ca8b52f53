#pragma once

#include "shlie3/matrix.hpp"
#include "shlie3/multimap.hpp"
#include "shlie3/report.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace shlie3 {

// Bounded chain complex V0 <- V1 <- ... <- VD with differential of weight -1.
struct Complex {
  GradedSpace space;
  MultiMap differential;
  Complex(GradedSpace V, MultiMap d);
  // matrix of d: V_k -> V_{k-1}
  Matrix matrix(int k) const;
  friend bool operator==(const Complex&, const Complex&) = default;
};

// An m-cell in component form (v0, ..., vm), v_i in V_i.
struct Cell {
  std::vector<Coords> components;
  int level() const { return static_cast<int>(components.size()) - 1; }
  const Coords& operator[](int i) const { return components[static_cast<std::size_t>(i)]; }
  Coords& operator[](int i) { return components[static_cast<std::size_t>(i)]; }
  friend bool operator==(const Cell&, const Cell&) = default;
  Cell& operator+=(const Cell& o);
  Cell& operator-=(const Cell& o);
  friend Cell operator+(Cell a, const Cell& b) { return a += b; }
  friend Cell operator-(Cell a, const Cell& b) { return a -= b; }
  friend Cell operator*(const Rational& c, Cell a);
};

std::string to_string(const Cell& c);

class CompositionError : public std::runtime_error {
 public:
  CompositionError(const std::string& what, Cell target_side, Cell source_side)
      : std::runtime_error(what), target_side_(std::move(target_side)), source_side_(std::move(source_side)) {}
  const Cell& target_side() const { return target_side_; }
  const Cell& source_side() const { return source_side_; }

 private:
  Cell target_side_, source_side_;
};

// Strict linear n-category given by its kernel spaces V_i = ker s_i and the
// differential t restricted to them.
class LinearNCat {
 public:
  LinearNCat(int n, GradedSpace V, MultiMap t);

  int n() const { return n_; }
  const GradedSpace& space() const { return space_; }
  const MultiMap& differential() const { return t_; }
  // matrix of t: V_k -> V_{k-1}
  const Matrix& t_matrix(int k) const { return t_mats_[static_cast<std::size_t>(k)]; }
  std::size_t level_dim(int m) const;

  Cell zero_cell(int m) const;
  // the cell whose only nonzero entry is basis vector `index` of component `component`
  Cell basis_cell(int m, int component, std::size_t index) const;
  std::vector<Cell> basis_cells(int m) const;
  // the object part of a cell shifted by t: t(v_m)
  Coords t_of(int degree, const Coords& v) const;

  Cell source(const Cell& a) const;
  Cell target(const Cell& a) const;
  Cell identity(const Cell& a) const;
  Cell source_k(const Cell& a, int k) const;
  Cell target_k(const Cell& a, int k) const;
  Cell identity_k(const Cell& a, int k) const;
  bool composable(const Cell& a, const Cell& b, int p) const;
  Cell compose(const Cell& a, const Cell& b, int p) const;

  // flat coordinates of L_m = V_0 + ... + V_m
  Coords flatten(const Cell& a) const;
  Cell unflatten(int m, std::span<const Rational> flat) const;
  Matrix source_matrix(int m) const;    // L_m -> L_{m-1}
  Matrix target_matrix(int m) const;    // L_m -> L_{m-1}
  Matrix identity_matrix(int m) const;  // L_m -> L_{m+1}

  friend bool operator==(const LinearNCat& a, const LinearNCat& b) {
    return a.n_ == b.n_ && a.space_ == b.space_ && a.t_ == b.t_;
  }

 private:
  void check_cell(const Cell& a) const;
  int n_;
  GradedSpace space_;
  MultiMap t_;
  std::vector<Matrix> t_mats_;
};

using ComposeFn = std::function<Cell(const LinearNCat&, const Cell&, const Cell&, int)>;
Cell standard_compose(const LinearNCat& L, const Cell& a, const Cell& b, int p);

// Globular identities, boundary compatibility, associativity, units,
// interchange and identity of composites on spanning composable tuples.
Report check_axioms(const LinearNCat& L, const ComposeFn& compose = standard_compose);

LinearNCat from_chain(const Complex& C);
Complex to_chain(const LinearNCat& L);

// Globular vector spaces with identities in "raw" form: level spaces L_m and
// matrices S_m, T_m: L_m -> L_{m-1}, I_m: L_m -> L_{m+1}.
struct RawGlobular {
  int n = 0;
  std::vector<std::size_t> dims;
  std::vector<Matrix> source;    // index m = 1..n (entry 0 unused)
  std::vector<Matrix> target;    // index m = 1..n (entry 0 unused)
  std::vector<Matrix> identity;  // index m = 0..n-1
};

// throws std::invalid_argument if the globular or identity laws fail
void validate(const RawGlobular& R);
RawGlobular to_raw(const LinearNCat& L);

struct ComponentForm {
  LinearNCat category;
  std::vector<Matrix> kernel_basis;  // columns: basis of V_i = ker S_i inside L_i
};
ComponentForm component_form(const RawGlobular& R);

// beta: raw m-cell -> component cell, alpha: its inverse
Cell decompose(const RawGlobular& R, const ComponentForm& F, int m, std::span<const Rational> a);
Coords assemble(const RawGlobular& R, const ComponentForm& F, const Cell& c);

enum class ProductMode { cartesian, tensor };
RawGlobular tensor_raw(const RawGlobular& a, const RawGlobular& b);
LinearNCat product(const LinearNCat& a, const LinearNCat& b, ProductMode mode);
// the unit for the tensor product: every level is the ground field
RawGlobular unit_raw(int n);
LinearNCat unit_category(int n);

struct NFunctor {
  std::vector<Matrix> level_maps;  // F_m: L_m -> L'_m in flat coordinates
};

class LiftError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Accepts level maps respecting s, t and 1; composition is then verified on
// spanning composable pairs and must hold.
NFunctor lift_functor(const LinearNCat& src, const LinearNCat& dst, std::vector<Matrix> level_maps);

}  // namespace shlie3
