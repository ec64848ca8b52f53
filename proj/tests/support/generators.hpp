#pragma once

// Random data for property tests. Everything is seeded, so runs repeat.

#include "shlie3/lie3.hpp"
#include "shlie3/lincat.hpp"
#include "shlie3/linfinity.hpp"
#include "shlie3/matrix.hpp"

#include <random>
#include <string>
#include <vector>

namespace shlie3::testing {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi);
Rational small_rational(Rng& rng, int range = 3);
Coords random_coords(Rng& rng, std::size_t n, int range = 3);
Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int range = 2);
// integer matrix with integer inverse
Matrix random_unimodular(Rng& rng, std::size_t n);

// canonical basis tuples of the given arity whose map of the given weight
// lands inside the space
std::vector<std::vector<BasisIndex>> canonical_tuples(const GradedSpace& V, int arity, int weight);

// change of basis: the new degree-d basis vectors are the columns of P[d]
MultiMap transform(const MultiMap& m, const std::vector<Matrix>& P);
LInfinityData transform(const LInfinityData& A, const std::vector<Matrix>& P);

// random 3-term complex (d^2 = 0 by construction)
Complex random_complex(Rng& rng, const GradedSpace& V);

// structure constants of a Lie algebra: c[i][j] = [e_i, e_j]
struct LieAlgebra {
  std::string name;
  std::size_t dim = 0;
  std::vector<std::vector<Coords>> c;
};
// template names: abelian, aff1, heisenberg, sl2, filiform (padded with an abelian summand)
LieAlgebra lie_template(const std::string& name, std::size_t dim);
LieAlgebra change_basis(const LieAlgebra& g, const Matrix& P);
std::vector<std::string> lie_template_names(std::size_t max_dim);

struct GeneratedData {
  LInfinityData data;
  std::string lie_name;
  // ker of the linear (n = 3, 4) constraints restricted to the l4 unknowns,
  // and the part of it that also satisfies n = 5, both as lists of l4 maps
  std::vector<MultiMap> l4_n4_directions;
  std::vector<MultiMap> l4_cocycle_directions;
};

struct GenerateOptions {
  bool want_l1 = true;
  bool want_l3 = true;
  bool want_l4 = true;
  bool nontrivial_v2 = false;  // every V2 basis vector gets a nonzero character
  std::string lie;  // empty: random template
};

// special valid 3-term L-infinity data on V: a Lie algebra in degree 0,
// one-dimensional modules in degrees 1 and 2, l1 into central directions,
// and (l3, l4) drawn from the solution space of the conditions n = 3, 4, 5
GeneratedData random_special_valid(Rng& rng, const GradedSpace& V, const GenerateOptions& opt = {});

// flattened residuals of condition n over all canonical tuples
Coords condition_vector(const LInfinityData& A, int n);

// a random element of the span of the given maps
MultiMap random_combination(Rng& rng, const std::vector<MultiMap>& maps, const MultiMap& zero);

}  // namespace shlie3::testing
