#pragma once

#include "shlie3/graded.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace shlie3 {

// One failed identity: which law, on which basis tuple, and the exact
// residual split into blocks (per degree or per cell component).
struct Violation {
  std::string law;
  std::vector<BasisIndex> tuple;
  std::string detail;
  std::vector<Coords> residual;
};

class Report {
 public:
  explicit Report(std::string name = {}) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  bool passed() const { return violations_.empty(); }
  std::size_t checked() const { return checked_; }
  const std::vector<Violation>& violations() const { return violations_; }

  void count(std::size_t n = 1) { checked_ += n; }
  void add(Violation v) { violations_.push_back(std::move(v)); }
  // records one check; adds a violation when the residual is nonzero
  bool expect_zero(std::string law, std::vector<BasisIndex> tuple, std::vector<Coords> residual,
                   std::string detail = {});
  void merge(const Report& other);

 private:
  std::string name_;
  std::size_t checked_ = 0;
  std::vector<Violation> violations_;
};

}  // namespace shlie3
