#include "shlie3/multimap.hpp"

#include "shlie3/permutation.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace shlie3 {

namespace {
constexpr std::size_t kMaxTable = std::size_t{1} << 22;
}

int canonicalize(std::vector<BasisIndex>& tuple) {
  std::vector<int> order(tuple.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return tuple[static_cast<std::size_t>(a)] < tuple[static_cast<std::size_t>(b)];
  });
  std::vector<int> degrees;
  degrees.reserve(tuple.size());
  for (const auto& b : tuple) degrees.push_back(b.degree);
  const int chi = koszul_chi(Permutation(order), degrees);
  std::vector<BasisIndex> sorted;
  sorted.reserve(tuple.size());
  for (int i : order) sorted.push_back(tuple[static_cast<std::size_t>(i)]);
  tuple = std::move(sorted);
  for (std::size_t i = 1; i < tuple.size(); ++i)
    if (tuple[i] == tuple[i - 1] && tuple[i].degree % 2 == 0) return 0;
  return chi;
}

MultiMap::MultiMap(int arity, int weight, GradedSpace space)
    : MultiMap(arity, weight, std::move(space), std::vector<Entry>{}) {}

MultiMap::MultiMap(int arity, int weight, GradedSpace space, std::vector<Entry> sorted_entries)
    : arity_(arity), weight_(weight), space_(std::move(space)), entries_(std::move(sorted_entries)) {
  if (arity_ < 1) throw MultiMapError("arity must be at least 1");
  const std::size_t n = space_.total_dim();
  std::size_t size = 1;
  for (int i = 0; i < arity_; ++i) {
    if (n != 0 && size > kMaxTable / n) return;  // too large, fall back to sorting per lookup
    size *= n;
  }
  if (n == 0) return;
  table_.resize(size);
  std::vector<BasisIndex> tuple(static_cast<std::size_t>(arity_));
  for (std::size_t flat = 0; flat < size; ++flat) {
    std::size_t rest = flat;
    for (int i = arity_ - 1; i >= 0; --i) {
      tuple[static_cast<std::size_t>(i)] = from_global(rest % n);
      rest /= n;
    }
    auto key = tuple;
    const int sign = canonicalize(key);
    if (sign == 0) continue;
    if (const Entry* e = find(key)) table_[flat] = {static_cast<int>(e - entries_.data()), sign};
  }
}

BasisIndex MultiMap::from_global(std::size_t g) const {
  int d = 0;
  while (g >= space_.offset(d) + space_.dim(d)) ++d;
  return {d, g - space_.offset(d)};
}

const MultiMap::Entry* MultiMap::find(const Key& key) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                             [](const Entry& e, const Key& k) { return e.key < k; });
  if (it == entries_.end() || it->key != key) return nullptr;
  return &*it;
}

MultiMap::Slot MultiMap::lookup_flat(std::span<const std::size_t> globals) const {
  if (!table_.empty()) {
    std::size_t flat = 0;
    for (std::size_t g : globals) flat = flat * space_.total_dim() + g;
    return table_[flat];
  }
  Key key;
  key.reserve(globals.size());
  for (std::size_t g : globals) key.push_back(from_global(g));
  const int sign = canonicalize(key);
  if (sign == 0) return {};
  if (const Entry* e = find(key)) return {static_cast<int>(e - entries_.data()), sign};
  return {};
}

MultiMap MultiMap::build(int arity, int weight, GradedSpace space, std::span<const RawEntry> raw) {
  std::map<Key, Coords> merged;
  for (const auto& r : raw) {
    if (static_cast<int>(r.args.size()) != arity) throw MultiMapError("entry has wrong number of arguments");
    int deg = weight;
    for (const auto& b : r.args) {
      if (!space.has_degree(b.degree) || b.index >= space.dim(b.degree))
        throw MultiMapError("basis index " + to_string(b) + " out of range");
      deg += b.degree;
    }
    if (!space.has_degree(deg)) {
      if (shlie3::is_zero(r.value)) continue;
      throw MultiMapError("entry " + to_string(r.args) + " has no output degree " + std::to_string(deg));
    }
    if (r.value.size() != space.dim(deg))
      throw MultiMapError("entry " + to_string(r.args) + " has value of length " + std::to_string(r.value.size()) +
                          ", expected " + std::to_string(space.dim(deg)));
    Key key = r.args;
    const int sign = canonicalize(key);
    if (sign == 0) {
      if (!shlie3::is_zero(r.value))
        throw MultiMapError("entry " + to_string(r.args) + " is forced to zero by antisymmetry");
      continue;
    }
    Coords v = Rational(sign) * r.value;
    auto [it, inserted] = merged.try_emplace(key, v);
    if (!inserted && it->second != v)
      throw MultiMapError("contradictory entries for canonical key " + to_string(key));
  }
  std::vector<Entry> entries;
  for (auto& [k, v] : merged)
    if (!shlie3::is_zero(v)) entries.push_back({k, std::move(v)});
  return MultiMap(arity, weight, std::move(space), std::move(entries));
}

int MultiMap::output_degree(std::span<const BasisIndex> tuple) const {
  int d = weight_;
  for (const auto& b : tuple) d += b.degree;
  return d;
}

Coords MultiMap::at(std::span<const BasisIndex> tuple) const {
  if (static_cast<int>(tuple.size()) != arity_) throw MultiMapError("arity mismatch");
  const int out = output_degree(tuple);
  if (!space_.has_degree(out)) return {};
  Key key(tuple.begin(), tuple.end());
  const int sign = canonicalize(key);
  Coords r(space_.dim(out));
  if (sign == 0) return r;
  if (const Entry* e = find(key)) add_scaled(r, sign, e->value);
  return r;
}

Coords MultiMap::apply(std::span<const Arg> args) const {
  if (static_cast<int>(args.size()) != arity_) throw MultiMapError("arity mismatch");
  int out = weight_;
  for (const auto& a : args) {
    if (!space_.has_degree(a.degree) || a.coords.size() != space_.dim(a.degree))
      throw MultiMapError("argument does not belong to the source space");
    out += a.degree;
  }
  if (!space_.has_degree(out)) return {};
  Coords result(space_.dim(out));
  if (entries_.empty()) return result;

  // nonzero coordinates of each argument as (global index, coefficient)
  std::vector<std::vector<std::pair<std::size_t, const Rational*>>> nz(args.size());
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::size_t off = space_.offset(args[i].degree);
    for (std::size_t j = 0; j < args[i].coords.size(); ++j)
      if (!args[i].coords[j].is_zero()) nz[i].emplace_back(off + j, &args[i].coords[j]);
    if (nz[i].empty()) return result;
  }
  std::vector<std::size_t> pos(args.size(), 0), globals(args.size());
  Rational coef;
  while (true) {
    for (std::size_t i = 0; i < args.size(); ++i) globals[i] = nz[i][pos[i]].first;
    const Slot s = lookup_flat(globals);
    if (s.entry >= 0) {
      coef = s.sign;
      for (std::size_t i = 0; i < args.size(); ++i) coef *= *nz[i][pos[i]].second;
      add_scaled(result, coef, entries_[static_cast<std::size_t>(s.entry)].value);
    }
    std::size_t i = args.size();
    while (i > 0) {
      --i;
      if (++pos[i] < nz[i].size()) break;
      pos[i] = 0;
      if (i == 0) return result;
    }
  }
}

MultiMap MultiMap::operator+(const MultiMap& o) const {
  if (arity_ != o.arity_ || weight_ != o.weight_ || !(space_ == o.space_))
    throw MultiMapError("adding maps of different shape");
  std::map<Key, Coords> merged;
  for (const auto& e : entries_) merged[e.key] = e.value;
  for (const auto& e : o.entries_) {
    auto [it, inserted] = merged.try_emplace(e.key, e.value);
    if (!inserted) it->second = it->second + e.value;
  }
  std::vector<Entry> entries;
  for (auto& [k, v] : merged)
    if (!shlie3::is_zero(v)) entries.push_back({k, std::move(v)});
  return MultiMap(arity_, weight_, space_, std::move(entries));
}

MultiMap MultiMap::operator-(const MultiMap& o) const { return *this + o.scaled(-1); }

MultiMap MultiMap::scaled(const Rational& c) const {
  std::vector<Entry> entries;
  if (!c.is_zero())
    for (const auto& e : entries_) entries.push_back({e.key, c * e.value});
  return MultiMap(arity_, weight_, space_, std::move(entries));
}

MultiMap MultiMap::filtered(const std::function<bool(const Key&)>& keep) const {
  std::vector<Entry> entries;
  for (const auto& e : entries_)
    if (keep(e.key)) entries.push_back(e);
  return MultiMap(arity_, weight_, space_, std::move(entries));
}

MultiMap build_multimap(int arity, int weight, const GradedSpace& space, std::span<const RawEntry> raw) {
  return MultiMap::build(arity, weight, space, raw);
}

GradedVector eval_multimap(const MultiMap& m, std::span<const GradedVector> args) {
  if (static_cast<int>(args.size()) != m.arity()) throw MultiMapError("arity mismatch");
  for (const auto& a : args)
    if (!(a.space() == m.space())) throw MultiMapError("argument from a different space");
  const GradedSpace& V = m.space();
  GradedVector result(V);
  std::vector<int> deg(args.size(), 0);
  // expand every argument into its homogeneous parts
  while (true) {
    int out = m.weight();
    for (int d : deg) out += d;
    if (V.has_degree(out)) {
      std::vector<MultiMap::Arg> hs;
      for (std::size_t i = 0; i < args.size(); ++i) hs.push_back({deg[i], args[i].coords(deg[i])});
      add_scaled(result.coords(out), 1, m.apply(hs));
    }
    std::size_t i = args.size();
    while (i > 0) {
      --i;
      if (++deg[i] <= V.top_degree()) break;
      deg[i] = 0;
      if (i == 0) return result;
    }
  }
}

}  // namespace shlie3
