#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace shlie3 {

// A bijection of {0..n-1}. Acting on a sequence a it produces
// (a[p(0)], ..., a[p(n-1)]).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(std::size_t n);

  std::size_t size() const { return images_.size(); }
  int operator[](std::size_t i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }
  int signature() const;

  template <class T>
  std::vector<T> apply(std::span<const T> seq) const {
    if (seq.size() != size()) throw std::invalid_argument("permutation size mismatch");
    std::vector<T> out;
    out.reserve(size());
    for (int i : images_) out.push_back(seq[static_cast<std::size_t>(i)]);
    return out;
  }
  template <class T>
  std::vector<T> apply(const std::vector<T>& seq) const {
    return apply(std::span<const T>(seq));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// Acting by compose(s, t) equals acting by t first and then by s.
Permutation compose(const Permutation& s, const Permutation& t);
Permutation inverse(const Permutation& p);

// Signature of p times the Koszul sign from moving graded elements of the
// given degrees past each other; the result is +1 or -1.
int koszul_chi(const Permutation& p, std::span<const int> degrees);

// All (i,j)-shuffles in lexicographic order of their image lists.
std::vector<Permutation> enumerate_shuffles(int i, int j);

// Every permutation of {0..n-1} in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t n);

}  // namespace shlie3
