#pragma once

#include "shlie3/lincat.hpp"
#include "shlie3/linfinity.hpp"

#include <array>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

namespace shlie3 {

// Semistrict Lie 3-algebra on a linear 2-category: bracket constants
// (shaped like l2), Jacobiator V1-components J: V0^3 -> V1 and identiator
// V2-components mu: V0^4 -> V2.
class Lie3Data {
 public:
  Lie3Data(LinearNCat category, MultiMap bracket, MultiMap jacobiator, MultiMap identiator);

  const LinearNCat& category() const { return category_; }
  const GradedSpace& space() const { return category_.space(); }
  const MultiMap& bracket() const { return bracket_; }
  const MultiMap& jacobiator() const { return jacobiator_; }
  const MultiMap& identiator() const { return identiator_; }

  friend bool operator==(const Lie3Data& a, const Lie3Data& b) {
    return a.category_ == b.category_ && a.bracket_ == b.bracket_ && a.jacobiator_ == b.jacobiator_ &&
           a.identiator_ == b.identiator_;
  }

 private:
  LinearNCat category_;
  MultiMap bracket_, jacobiator_, identiator_;
};

// Bracket of two cells of equal level (0, 1 or 2).
Cell bracket_cells(const Lie3Data& D, const Cell& a, const Cell& b);

// Expression in four object/cell variables built from nested brackets, used
// for the source and target 2-functors of the Jacobiator and identiator.
class BracketExpr {
 public:
  static BracketExpr var(int i);
  static BracketExpr bracket(BracketExpr a, BracketExpr b);
  static BracketExpr sum(std::vector<BracketExpr> terms);

  Cell eval(const Lie3Data& D, std::span<const Cell> vars) const;
  Coords eval_objects(const Lie3Data& D, std::span<const Coords> vars) const;

 private:
  enum class Kind { var, bracket, sum };
  Kind kind_ = Kind::var;
  int var_ = 0;
  std::vector<BracketExpr> children_;
};

// [[x,y],z] and [[x,z],y] + [x,[y,z]]
const BracketExpr& jacobiator_source();
const BracketExpr& jacobiator_target();
// [[[x,y],z],u] and the six-term target shared by eta and epsilon
const BracketExpr& identiator_source();
const BracketExpr& identiator_target();

Report check_bifunctor(const Lie3Data& D);
Report check_jacobiator(const Lie3Data& D);

// The two composite 1-cells from F(x,y,z,u) to G(x,y,z,u).
std::pair<Cell, Cell> eta_epsilon(const Lie3Data& D, const Coords& x, const Coords& y, const Coords& z,
                                  const Coords& u);
Report check_identiator(const Lie3Data& D);

// Throws CompositionError when a stage without padding does not compose.
Cell alpha_cell(const Lie3Data& D, int i, const std::array<Coords, 5>& args);
// inverse for composition along 1-cells: (A, s, a) -> (A, s + l1 a, -a)
Cell inverse2(const LinearNCat& L, const Cell& alpha);

struct QuintupleResidual {
  std::array<std::size_t, 5> tuple{};
  Cell residual;          // (alpha1 + alpha4^-1) - (alpha3 + alpha2^-1), component-wise
  Coords n5_residual;     // generalized Jacobi identity of order 5 on the same tuple
  bool composable = true;
};

struct CoherenceReport {
  std::vector<QuintupleResidual> quintuples;  // every ordered basis quintuple of V0
  bool v0_pass = true, v1_pass = true, v2_pass = true;
  bool v2_matches_n5 = true;
  bool all_composable = true;
  bool passed() const { return v0_pass && v1_pass && v2_pass && all_composable; }
};
CoherenceReport check_coherence(const Lie3Data& D);

// Read off l1..l4 without any validity check (l2 zero on V1 x V1, l3 zero
// in total degree 1, l4 = -mu).
LInfinityData underlying_brackets(const Lie3Data& D);

class ConversionRefused : public std::runtime_error {
 public:
  ConversionRefused(const std::string& what, std::vector<Report> reports)
      : std::runtime_error(what), reports_(std::move(reports)) {}
  const std::vector<Report>& reports() const { return reports_; }

 private:
  std::vector<Report> reports_;
};

LInfinityData to_linfinity(const Lie3Data& D);
Lie3Data from_linfinity(const LInfinityData& A);
// from_linfinity without the validity gate, for diagnostics on broken data
Lie3Data assemble_lie3(const LInfinityData& A);

Report coherence_summary(const CoherenceReport& c);

}  // namespace shlie3
