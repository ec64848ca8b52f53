#pragma once

#include "shlie3/graded.hpp"

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace shlie3 {

class MultiMapError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RawEntry {
  std::vector<BasisIndex> args;
  Coords value;
};

// Graded antisymmetric multilinear map V^k -> V of weight w, stored through
// its structure constants on canonical (sorted) basis tuples.
class MultiMap {
 public:
  using Key = std::vector<BasisIndex>;
  struct Entry {
    Key key;
    Coords value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  // homogeneous argument: its degree and its coordinates in that degree
  struct Arg {
    int degree;
    std::span<const Rational> coords;
  };

  MultiMap(int arity, int weight, GradedSpace space);
  static MultiMap build(int arity, int weight, GradedSpace space, std::span<const RawEntry> raw);

  int arity() const { return arity_; }
  int weight() const { return weight_; }
  const GradedSpace& space() const { return space_; }
  const std::vector<Entry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  int output_degree(std::span<const BasisIndex> tuple) const;

  // Value on a basis tuple given in any order; empty when the output degree
  // does not exist.
  Coords at(std::span<const BasisIndex> tuple) const;
  // Multilinear evaluation on homogeneous arguments; the result lives in
  // degree sum(deg)+w and is empty when that degree does not exist.
  Coords apply(std::span<const Arg> args) const;
  Coords apply(std::initializer_list<Arg> args) const { return apply(std::span<const Arg>(args.begin(), args.size())); }

  MultiMap operator+(const MultiMap& o) const;
  MultiMap operator-(const MultiMap& o) const;
  MultiMap scaled(const Rational& c) const;
  MultiMap filtered(const std::function<bool(const Key&)>& keep) const;

  friend bool operator==(const MultiMap& a, const MultiMap& b) {
    return a.arity_ == b.arity_ && a.weight_ == b.weight_ && a.space_ == b.space_ && a.entries_ == b.entries_;
  }

 private:
  struct Slot {
    int entry = -1;
    int sign = 0;
  };
  MultiMap(int arity, int weight, GradedSpace space, std::vector<Entry> sorted_entries);
  const Entry* find(const Key& key) const;
  Slot lookup_flat(std::span<const std::size_t> globals) const;
  BasisIndex from_global(std::size_t g) const;

  int arity_;
  int weight_;
  GradedSpace space_;
  std::vector<Entry> entries_;
  std::vector<Slot> table_;  // dense over ordered global tuples when small enough
};

// Sort a basis tuple into canonical order. Returns the sign s with
// value(tuple) = s * value(sorted); s = 0 when antisymmetry forces zero.
int canonicalize(std::vector<BasisIndex>& tuple);

MultiMap build_multimap(int arity, int weight, const GradedSpace& space, std::span<const RawEntry> raw);
GradedVector eval_multimap(const MultiMap& m, std::span<const GradedVector> args);

}  // namespace shlie3
