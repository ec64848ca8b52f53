#pragma once

#include "shlie3/lincat.hpp"
#include "shlie3/matrix.hpp"
#include "shlie3/report.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace shlie3 {

// Simplicial vector space truncated at level N: spaces S_0..S_N, faces
// d_i^n: S_n -> S_{n-1} (1 <= n <= N) and degeneracies s_i^n: S_n -> S_{n+1}
// (n < N).
struct SimplicialVS {
  int trunc = 0;
  std::vector<std::size_t> dims;
  std::vector<std::vector<Matrix>> faces;         // faces[n][i], faces[0] empty
  std::vector<std::vector<Matrix>> degeneracies;  // degeneracies[n][i], n < trunc

  const Matrix& d(int n, int i) const { return faces.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(i)); }
  const Matrix& s(int n, int i) const {
    return degeneracies.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(i));
  }
  friend bool operator==(const SimplicialVS&, const SimplicialVS&) = default;
};

class SimplicialError : public std::invalid_argument {
 public:
  SimplicialError(const std::string& what, Report report) : std::invalid_argument(what), report_(std::move(report)) {}
  const Report& report() const { return report_; }

 private:
  Report report_;
};

// All face/degeneracy identities within the truncation.
Report check_simplicial_identities(const SimplicialVS& S);
// shapes and identities; throws SimplicialError
void validate(const SimplicialVS& S);

// Bounded chain complex C_0 <- C_1 <- ... <- C_N.
struct ChainComplexT {
  std::vector<std::size_t> dims;
  std::vector<Matrix> d;  // d[n]: C_n -> C_{n-1}, d[0] unused
  int top() const { return static_cast<int>(dims.size()) - 1; }
  friend bool operator==(const ChainComplexT&, const ChainComplexT&) = default;
};
void validate(const ChainComplexT& C);

struct ChainMapT {
  std::vector<Matrix> f;  // f[n]: C_n -> D_n
};
bool is_chain_map(const ChainMapT& f, const ChainComplexT& src, const ChainComplexT& dst);
ChainMapT compose(const ChainMapT& g, const ChainMapT& f);  // g after f

// Nerve of a linear 1-category: n-simplices are chains (x; f_1..f_n) in
// V0 + V1^n; d_0 drops the first arrow, d_n the last, inner d_i composes
// arrows i and i+1; s_i inserts an identity after the first i arrows.
SimplicialVS nerve(const LinearNCat& L, int trunc);

// Per-level maps of a simplicial morphism.
struct SimplicialMap {
  std::vector<Matrix> maps;
};
bool is_simplicial_map(const SimplicialMap& F, const SimplicialVS& S, const SimplicialVS& T);
// levelwise action of a linear functor between 1-categories
SimplicialMap nerve_of_functor(const LinearNCat& src, const LinearNCat& dst, const NFunctor& F, int trunc);

// Normalized complex: N_n = intersection of ker d_i (i >= 1), boundary d_0.
struct MooreComplex {
  ChainComplexT complex;
  std::vector<Matrix> inclusion;   // columns: basis of N_n inside S_n
  std::vector<Matrix> projection;  // S_n -> N_n along the degenerate simplices
};
MooreComplex moore(const SimplicialVS& S);

// N(nerve(L)) equals the chain complex of L in the canonical coordinates.
bool moore_of_nerve_check(const LinearNCat& L, int trunc = 4);

SimplicialVS tensor_svs(const SimplicialVS& S, const SimplicialVS& T);
// K^dim in every level, all faces and degeneracies the identity
SimplicialVS constant_svs(std::size_t dim, int trunc);
// linearized standard simplex Delta[k] and sphere Delta[k]/boundary
SimplicialVS simplex_svs(int k, int trunc);
SimplicialVS sphere_svs(int k, int trunc);

// Tensor product of complexes up to the given degree; the degree-n basis is
// ordered by p = 0..n, then kron(A_p, B_{n-p}).
ChainComplexT tensor_complex(const ChainComplexT& A, const ChainComplexT& B, int max_degree);

// Eilenberg-Zilber shuffle map N(S) (x) N(T) -> N(S (x) T) and
// Alexander-Whitney map in the other direction, up to max_degree.
ChainMapT ez(const SimplicialVS& S, const SimplicialVS& T, int max_degree);
ChainMapT aw(const SimplicialVS& S, const SimplicialVS& T, int max_degree);

struct EzAwCheck {
  int max_degree = 0;
  bool ez_chain_map = false;
  bool aw_chain_map = false;
  bool aw_ez_identity = false;           // AW after EZ, exact on N(S) (x) N(T)
  bool aw_ez_homology_identity = false;  // the same composite on homology
  bool ez_aw_homology_identity = false;  // EZ after AW on homology of N(S (x) T)
  bool passed() const {
    return ez_chain_map && aw_chain_map && aw_ez_identity && aw_ez_homology_identity && ez_aw_homology_identity;
  }
};
// degrees up to min(3, trunc - 1)
EzAwCheck aw_ez_homology_check(const SimplicialVS& S, const SimplicialVS& T);

// f induces the identity on homology of C in degrees 0..max_degree; needs
// max_degree < C.top()
std::vector<std::size_t> homology_dims(const ChainComplexT& C, int max_degree);
bool identity_on_homology(const ChainMapT& f, const ChainComplexT& C, int max_degree);

struct ObstructionWitness {
  std::size_t left = 0, right = 0;  // basis 3-simplices of the two nerve factors
  Coords faces_then_l;              // l_2 (d_2 (x) d_2) on the witness, nerve coordinates of L [x] L
  Coords l_then_face;               // d_2 l_3 on the witness
  Coords correction;                // the two correction terms of the composition defect
};

struct ObstructionReport {
  bool obstruction = false;
  std::vector<std::pair<int, int>> failing_faces;  // (level, face index)
  bool degeneracies_commute = true;
  bool defect_identity_holds = true;  // (v.w)(x)(v'.w') = (v(x)v').(w(x)w') + corrections
  std::size_t defect_pairs_checked = 0;
  bool corrections_vanish = true;     // all correction terms zero on the spanning pairs
  std::optional<ObstructionWitness> witness;
  bool witness_matches_correction = false;
  std::size_t l2_domain_dim = 0, l2_codomain_dim = 0, l2_kernel_dim = 0;
};
ObstructionReport obstruction_demo(const LinearNCat& L);

}  // namespace shlie3
