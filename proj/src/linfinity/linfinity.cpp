#include "shlie3/linfinity.hpp"

#include "shlie3/permutation.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace shlie3 {

namespace {

void require_shape(const MultiMap& m, int k, const GradedSpace& V, const char* name) {
  if (m.arity() != k || m.weight() != k - 2 || !(m.space() == V))
    throw std::invalid_argument(std::string(name) + " has the wrong arity, weight or space");
}

// Residual on homogeneous arguments, returned in degree sum(deg)+n-3.
Coords residual_coords(const LInfinityData& A, std::span<const MultiMap::Arg> args) {
  const int n = static_cast<int>(args.size());
  const GradedSpace& V = A.space();
  std::vector<int> degrees;
  int total = 0;
  for (const auto& a : args) {
    degrees.push_back(a.degree);
    total += a.degree;
  }
  const int out = total + n - 3;
  if (!V.has_degree(out)) return {};
  Coords result(V.dim(out));
  for (int i = 1; i <= n; ++i) {
    const int j = n + 1 - i;
    if (i > 4 || j > 4) continue;
    const MultiMap& inner = A.l(i);
    const MultiMap& outer = A.l(j);
    if (inner.is_zero() || outer.is_zero()) continue;
    const int base_sign = (i * (j - 1)) % 2 == 0 ? 1 : -1;
    for (const auto& s : enumerate_shuffles(i, n - i)) {
      std::vector<MultiMap::Arg> in_args, out_args;
      int in_deg = i - 2;
      for (int k = 0; k < i; ++k) {
        in_args.push_back(args[static_cast<std::size_t>(s[static_cast<std::size_t>(k)])]);
        in_deg += in_args.back().degree;
      }
      if (!V.has_degree(in_deg)) continue;
      const Coords value = inner.apply(in_args);
      if (is_zero(value)) continue;
      out_args.push_back({in_deg, value});
      for (int k = i; k < n; ++k) out_args.push_back(args[static_cast<std::size_t>(s[static_cast<std::size_t>(k)])]);
      const int sign = base_sign * koszul_chi(s, degrees);
      add_scaled(result, sign, outer.apply(out_args));
    }
  }
  return result;
}

bool special_l2_key(const MultiMap::Key& k) { return k[0].degree == 1 && k[1].degree == 1; }
bool special_l3_key(const MultiMap::Key& k) { return k[0].degree + k[1].degree + k[2].degree == 1; }

}  // namespace

LInfinityData::LInfinityData(GradedSpace V, MultiMap l1, MultiMap l2, MultiMap l3, MultiMap l4)
    : space_(std::move(V)), l1_(std::move(l1)), l2_(std::move(l2)), l3_(std::move(l3)), l4_(std::move(l4)) {
  if (space_.top_degree() != 2) throw std::invalid_argument("L-infinity data needs degrees 0..2");
  require_shape(l1_, 1, space_, "l1");
  require_shape(l2_, 2, space_, "l2");
  require_shape(l3_, 3, space_, "l3");
  require_shape(l4_, 4, space_, "l4");
}

LInfinityData LInfinityData::zero(const GradedSpace& V) {
  return LInfinityData(V, MultiMap(1, -1, V), MultiMap(2, 0, V), MultiMap(3, 1, V), MultiMap(4, 2, V));
}

const MultiMap& LInfinityData::l(int k) const {
  switch (k) {
    case 1: return l1_;
    case 2: return l2_;
    case 3: return l3_;
    case 4: return l4_;
    default: throw std::out_of_range("bracket index must be 1..4");
  }
}

LInfinityData LInfinityData::with(int k, MultiMap m) const {
  LInfinityData r = *this;
  require_shape(m, k, space_, "replacement bracket");
  switch (k) {
    case 1: r.l1_ = std::move(m); break;
    case 2: r.l2_ = std::move(m); break;
    case 3: r.l3_ = std::move(m); break;
    case 4: r.l4_ = std::move(m); break;
    default: throw std::out_of_range("bracket index must be 1..4");
  }
  return r;
}

GradedVector linfty_residual(const LInfinityData& A, int n, std::span<const GradedVector> args) {
  if (n < 1 || static_cast<int>(args.size()) != n) throw std::invalid_argument("residual: arity mismatch");
  GradedVector result(A.space());
  std::vector<MultiMap::Arg> hs;
  for (const auto& a : args) {
    if (!(a.space() == A.space())) throw std::invalid_argument("residual: argument from another space");
    if (a.is_zero()) return result;
    const auto d = a.degree();
    if (!d) throw std::invalid_argument("residual: arguments must be homogeneous");
    hs.push_back({*d, a.coords(*d)});
  }
  int out = n - 3;
  for (const auto& h : hs) out += h.degree;
  if (A.space().has_degree(out)) result.coords(out) = residual_coords(A, hs);
  return result;
}

GradedVector linfty_residual(const LInfinityData& A, std::span<const BasisIndex> tuple) {
  std::vector<GradedVector> args;
  for (const auto& b : tuple) args.push_back(GradedVector::basis(A.space(), b));
  return linfty_residual(A, static_cast<int>(tuple.size()), args);
}

std::string condition_tag(int n, std::span<const int> d, bool special) {
  std::string pattern = "n=" + std::to_string(n) + " deg(";
  for (std::size_t i = 0; i < d.size(); ++i) pattern += (i ? "," : "") + std::to_string(d[i]);
  pattern += ") ";
  auto is = [&](std::initializer_list<int> want) { return std::equal(d.begin(), d.end(), want.begin(), want.end()); };
  std::string name = "generalized jacobi";
  if (n == 1 && is({2})) name = "differential squares to zero";
  else if (n == 2 && is({0, 1})) name = "l1 equivariant on V0 x V1";
  else if (n == 2 && is({0, 2})) name = "l1 equivariant on V0 x V2";
  else if (n == 2 && is({1, 1})) name = "peiffer identity on V1 x V1";
  else if (n == 2 && is({1, 2})) name = "l1 compatibility on V1 x V2";
  else if (n == 3 && is({0, 0, 0})) name = "jacobiator target";
  else if (n == 3 && is({0, 0, 1})) name = "jacobiator naturality on V1";
  else if (n == 3 && is({0, 0, 2})) name = "representation law on V2";
  else if (n == 3 && is({0, 1, 1})) name = "V1 x V1 compatibility";
  else if (n == 4 && is({0, 0, 0, 0})) name = special ? "identiator target" : "quaternary identity";
  else if (n == 4 && is({0, 0, 0, 1})) name = special ? "l4 vanishes on the image of l1" : "quaternary identity";
  else if (n == 5) name = "coherence (cocycle) identity";
  return pattern + name;
}

ConditionReport check_condition(const LInfinityData& A, int n) {
  if (n < 1) throw std::invalid_argument("condition order must be positive");
  ConditionReport out;
  out.n = n;
  out.report = Report("l-infinity condition n=" + std::to_string(n));
  const GradedSpace& V = A.space();
  const bool special = is_special(A).special;
  const std::vector<BasisIndex> basis = basis_of(V);
  std::vector<BasisIndex> tuple;
  std::size_t admissible = 0;
  // canonical tuples: non-decreasing, no repeated even-degree element
  std::function<void(std::size_t, int)> walk = [&](std::size_t from, int total) {
    if (static_cast<int>(tuple.size()) == n) {
      if (!V.has_degree(total + n - 3)) return;
      ++admissible;
      std::vector<MultiMap::Arg> args;
      std::vector<Coords> storage;
      storage.reserve(tuple.size());
      std::vector<int> degrees;
      for (const auto& b : tuple) {
        Coords c(V.dim(b.degree));
        c[b.index] = 1;
        storage.push_back(std::move(c));
        args.push_back({b.degree, storage.back()});
        degrees.push_back(b.degree);
      }
      std::vector<Coords> blocks(static_cast<std::size_t>(V.top_degree() + 1));
      for (int d = 0; d <= V.top_degree(); ++d) blocks[static_cast<std::size_t>(d)] = Coords(V.dim(d));
      blocks[static_cast<std::size_t>(total + n - 3)] = residual_coords(A, args);
      out.report.expect_zero(condition_tag(n, degrees, special), tuple, std::move(blocks));
      return;
    }
    for (std::size_t k = from; k < basis.size(); ++k) {
      const BasisIndex b = basis[k];
      // the output degree only grows, so stop once it overshoots
      if (total + b.degree + n - 3 > V.top_degree()) break;
      tuple.push_back(b);
      const std::size_t next = (b.degree % 2 == 0) ? k + 1 : k;
      walk(next, total + b.degree);
      tuple.pop_back();
    }
  };
  walk(0, 0);
  out.trivially_empty = admissible == 0;
  return out;
}

SpecialWitness is_special(const LInfinityData& A) {
  for (const auto& e : A.l(2).entries())
    if (special_l2_key(e.key)) return {false, "l2", e.key};
  for (const auto& e : A.l(3).entries())
    if (special_l3_key(e.key)) return {false, "l3", e.key};
  return {};
}

LInfinityData from_four_cocycle(const MultiMap& bracket, const MultiMap& action, const MultiMap& cochain) {
  const GradedSpace& V = bracket.space();
  if (V.top_degree() != 2) throw std::invalid_argument("four-cocycle data needs degrees 0..2");
  if (V.dim(1) != 0) throw std::invalid_argument("four-cocycle data requires V1 = 0");
  if (!(action.space() == V) || !(cochain.space() == V)) throw std::invalid_argument("space mismatch");
  for (const auto& e : bracket.entries())
    if (e.key[0].degree != 0 || e.key[1].degree != 0) throw std::invalid_argument("bracket must live on V0 x V0");
  for (const auto& e : action.entries())
    if (e.key[0].degree != 0 || e.key[1].degree != 2) throw std::invalid_argument("action must live on V0 x V2");
  return LInfinityData(V, MultiMap(1, -1, V), bracket + action, MultiMap(3, 1, V), cochain);
}

}  // namespace shlie3
