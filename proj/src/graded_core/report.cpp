#include "shlie3/report.hpp"

namespace shlie3 {

bool Report::expect_zero(std::string law, std::vector<BasisIndex> tuple, std::vector<Coords> residual,
                         std::string detail) {
  ++checked_;
  for (const auto& block : residual)
    if (!is_zero(block)) {
      violations_.push_back({std::move(law), std::move(tuple), std::move(detail), std::move(residual)});
      return false;
    }
  return true;
}

void Report::merge(const Report& other) {
  checked_ += other.checked_;
  violations_.insert(violations_.end(), other.violations_.begin(), other.violations_.end());
}

}  // namespace shlie3
