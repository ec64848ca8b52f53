#pragma once

// Shared cell arithmetic for the Lie 3-algebra checks.

#include "shlie3/lie3.hpp"

#include <optional>
#include <vector>

namespace shlie3::detail {

struct Stage {
  std::vector<Cell> factors;
  bool pad = false;
};

// Composes the stages along objects from left to right. A padded stage gets
// the identity over (target so far) - (source of its named factors) added.
Cell compose_stages(const LinearNCat& L, const std::vector<Stage>& stages);

class Evaluator {
 public:
  explicit Evaluator(const Lie3Data& D);

  const Lie3Data& data() const { return D_; }
  const LinearNCat& cat() const { return D_.category(); }

  Coords br(const Coords& a, const Coords& b) const;
  Cell bc(const Cell& a, const Cell& b) const { return bracket_cells(D_, a, b); }
  Cell obj1(const Coords& x) const;  // identity 1-cell over an object
  Cell obj2(const Coords& x) const;  // identity 2-cell over an object
  Cell id(const Cell& c) const { return cat().identity(c); }

  Coords F(const Coords& x, const Coords& y, const Coords& z, const Coords& u) const;
  Cell J(const Coords& x, const Coords& y, const Coords& z) const;
  Cell eta(const Coords& x, const Coords& y, const Coords& z, const Coords& u) const;
  Cell epsilon(const Coords& x, const Coords& y, const Coords& z, const Coords& u) const;
  // V1-component of eta, through a table on basis quadruples once built
  Coords h(const Coords& x, const Coords& y, const Coords& z, const Coords& u) const;
  Cell mu(const Coords& x, const Coords& y, const Coords& z, const Coords& u) const;

  // Precomputes eta on all basis quadruples; throws CompositionError when a
  // composite is not defined.
  void build_h_table();

  Cell alpha(int i, const Coords& x, const Coords& y, const Coords& z, const Coords& u, const Coords& v) const;

 private:
  const Lie3Data& D_;
  std::size_t n0_;
  std::optional<std::vector<Coords>> h_table_;
};

Coords unit_vector(std::size_t n, std::size_t i);

}  // namespace shlie3::detail
