#include "shlie3/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace shlie3 {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

int Permutation::signature() const {
  int s = 1;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = a + 1; b < size(); ++b)
      if (images_[a] > images_[b]) s = -s;
  return s;
}

Permutation compose(const Permutation& s, const Permutation& t) {
  if (s.size() != t.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> im(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) im[i] = t[static_cast<std::size_t>(s[i])];
  return Permutation(std::move(im));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> im(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) im[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return Permutation(std::move(im));
}

int koszul_chi(const Permutation& p, std::span<const int> degrees) {
  if (degrees.size() != p.size()) throw std::invalid_argument("koszul_chi: size mismatch");
  int s = 1;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b) {
      const int ia = p[a], ib = p[b];
      if (ia > ib) {
        // each inversion contributes -1 from the signature and (-1)^{d d'} from Koszul
        const bool both_odd = (degrees[static_cast<std::size_t>(ia)] & 1) && (degrees[static_cast<std::size_t>(ib)] & 1);
        if (!both_odd) s = -s;
      }
    }
  return s;
}

std::vector<Permutation> enumerate_shuffles(int i, int j) {
  if (i < 0 || j < 0) throw std::invalid_argument("negative shuffle size");
  const int n = i + j;
  std::vector<Permutation> out;
  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.begin(), pick.begin() + i, true);
  // prev_permutation over a true-first mask walks subsets in lexicographic order
  do {
    std::vector<int> im;
    im.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
      if (pick[static_cast<std::size_t>(k)]) im.push_back(k);
    for (int k = 0; k < n; ++k)
      if (!pick[static_cast<std::size_t>(k)]) im.push_back(k);
    out.emplace_back(std::move(im));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

}  // namespace shlie3
