#include "generators.hpp"

#include "shlie3/linfinity.hpp"

#include <doctest.h>

#include <array>

using namespace shlie3;
using namespace shlie3::testing;

namespace {

// every canonical structure constant drawn at random
MultiMap random_map(Rng& rng, const GradedSpace& V, int arity, int weight) {
  std::vector<RawEntry> raw;
  for (const auto& t : canonical_tuples(V, arity, weight)) {
    int deg = weight;
    for (const auto& b : t) deg += b.degree;
    raw.push_back({t, random_coords(rng, V.dim(deg))});
  }
  return build_multimap(arity, weight, V, raw);
}

GradedVector apply1(const MultiMap& m, const GradedVector& v) {
  const std::array<GradedVector, 1> a{v};
  return eval_multimap(m, a);
}
GradedVector apply2(const MultiMap& m, const GradedVector& v, const GradedVector& w) {
  const std::array<GradedVector, 2> a{v, w};
  return eval_multimap(m, a);
}

// the determinant form on Q^4 into a one-dimensional V2
LInfinityData det_l4() {
  const GradedSpace V({4, 0, 1});
  const std::array<RawEntry, 1> raw{RawEntry{{{0, 0}, {0, 1}, {0, 2}, {0, 3}}, {Rational(1)}}};
  const LInfinityData z = LInfinityData::zero(V);
  return z.with(4, build_multimap(4, 2, V, raw));
}

}  // namespace

TEST_SUITE("linfinity") {

TEST_CASE("zero algebra has zero residuals and passes every condition") {
  const GradedSpace V({2, 1, 1});
  const LInfinityData A = LInfinityData::zero(V);
  for (int n = 1; n <= 5; ++n) CHECK(check_condition(A, n).passed());
  const std::array<GradedVector, 2> args{GradedVector::basis(V, {0, 0}), GradedVector::basis(V, {1, 0})};
  CHECK(linfty_residual(A, 2, args).is_zero());
  CHECK(is_special(A).special);
}

TEST_CASE("orders 1 and 2 of the identity in closed form") {
  Rng rng(11);
  const GradedSpace V({2, 2, 2});
  const LInfinityData A(V, random_map(rng, V, 1, -1), random_map(rng, V, 2, 0), random_map(rng, V, 3, 1),
                        random_map(rng, V, 4, 2));
  const auto basis = basis_of(V);
  for (const auto& b : basis) {
    const GradedVector v = GradedVector::basis(V, b);
    const std::array<GradedVector, 1> one{v};
    CHECK(linfty_residual(A, 1, one) == apply1(A.l(1), apply1(A.l(1), v)));
  }
  for (const auto& bv : basis)
    for (const auto& bw : basis) {
      const GradedVector v = GradedVector::basis(V, bv), w = GradedVector::basis(V, bw);
      GradedVector expect = apply1(A.l(1), apply2(A.l(2), v, w));
      expect -= apply2(A.l(2), apply1(A.l(1), v), w);
      expect -= Rational(bv.degree % 2 == 0 ? 1 : -1) * apply2(A.l(2), v, apply1(A.l(1), w));
      const std::array<GradedVector, 2> two{v, w};
      CHECK(linfty_residual(A, 2, two) == expect);
    }
}

TEST_CASE("l1 squared nonzero fails order 1 on the top basis vector") {
  const GradedSpace V({1, 1, 1});
  const std::array<RawEntry, 2> raw{RawEntry{{{2, 0}}, {Rational(1)}}, RawEntry{{{1, 0}}, {Rational(1)}}};
  const LInfinityData A = LInfinityData::zero(V).with(1, build_multimap(1, -1, V, raw));
  const ConditionReport r = check_condition(A, 1);
  REQUIRE_FALSE(r.passed());
  REQUIRE(r.report.violations().size() == 1);
  const Violation& v = r.report.violations().front();
  REQUIRE(v.tuple.size() == 1);
  CHECK(v.tuple[0] == BasisIndex{2, 0});
  // residual is the composite matrix product 1 * 1
  CHECK(v.residual[0] == Coords{Rational(1)});
  for (int n = 2; n <= 5; ++n) CHECK(check_condition(A, n).passed());
}

TEST_CASE("determinant l4 passes every condition and is special") {
  const LInfinityData A = det_l4();
  for (int n = 1; n <= 5; ++n) CHECK(check_condition(A, n).passed());
  CHECK(is_special(A).special);
}

TEST_CASE("is_special finds the offending constant") {
  const GradedSpace V({1, 2, 1});
  const std::array<RawEntry, 1> raw{RawEntry{{{1, 0}, {1, 1}}, {Rational(2)}}};
  const LInfinityData A = LInfinityData::zero(V).with(2, build_multimap(2, 0, V, raw));
  const SpecialWitness w = is_special(A);
  CHECK_FALSE(w.special);
  CHECK(w.map == "l2");
  CHECK(w.key == std::vector<BasisIndex>{{1, 0}, {1, 1}});

  const std::array<RawEntry, 1> raw3{RawEntry{{{0, 0}, {0, 0}, {1, 0}}, {Rational(1)}}};
  CHECK_THROWS(build_multimap(3, 1, V, raw3));  // repeated degree-0 argument
}

TEST_CASE("l3 in total degree 1 breaks specialness") {
  const GradedSpace V({2, 1, 1});
  const std::array<RawEntry, 1> raw{RawEntry{{{0, 0}, {0, 1}, {1, 0}}, {Rational(1)}}};
  const LInfinityData A = LInfinityData::zero(V).with(3, build_multimap(3, 1, V, raw));
  const SpecialWitness w = is_special(A);
  CHECK_FALSE(w.special);
  CHECK(w.map == "l3");
}

TEST_CASE("abelian degree 0, trivial action: any 4-form is a cocycle") {
  Rng rng(3);
  const GradedSpace V({5, 0, 2});
  const MultiMap zero2(2, 0, V);
  for (int rep = 0; rep < 3; ++rep) {
    const LInfinityData A = from_four_cocycle(zero2, zero2, random_map(rng, V, 4, 2));
    for (int n = 1; n <= 5; ++n) CHECK(check_condition(A, n).passed());
  }
}

TEST_CASE("on a 2-dimensional Lie algebra every 4-form vanishes") {
  const GradedSpace V({2, 0, 1});
  const std::array<RawEntry, 1> br{RawEntry{{{0, 0}, {0, 1}}, {Rational(1), Rational(0)}}};
  const MultiMap bracket = build_multimap(2, 0, V, br);
  const MultiMap cochain(4, 2, V);
  CHECK(canonical_tuples(V, 4, 2).empty());
  const LInfinityData A = from_four_cocycle(bracket, MultiMap(2, 0, V), cochain);
  for (int n = 1; n <= 5; ++n) CHECK(check_condition(A, n).passed());
}

TEST_CASE("non-closed cochain on a filiform algebra fails only order 5") {
  const GradedSpace V({5, 0, 2});
  std::vector<RawEntry> br;
  for (std::size_t k = 1; k + 1 < 5; ++k) {
    Coords v(5);
    v[k + 1] = 1;
    br.push_back({{{0, 0}, {0, k}}, v});
  }
  const std::array<RawEntry, 1> act{RawEntry{{{0, 0}, {2, 1}}, {Rational(1), Rational(0)}}};
  const std::array<RawEntry, 1> co{RawEntry{{{0, 1}, {0, 2}, {0, 3}, {0, 4}}, {Rational(0), Rational(1)}}};
  const LInfinityData A = from_four_cocycle(build_multimap(2, 0, V, br), build_multimap(2, 0, V, act),
                                            build_multimap(4, 2, V, co));
  for (int n = 1; n <= 4; ++n) CHECK(check_condition(A, n).passed());
  const ConditionReport r5 = check_condition(A, 5);
  REQUIRE_FALSE(r5.passed());
  const Violation& v = r5.report.violations().front();
  CHECK_FALSE(is_zero(v.residual[2]));
}

TEST_CASE("four-cocycle data refuses a nonzero V1") {
  const GradedSpace V({2, 1, 1});
  const MultiMap z2(2, 0, V), z4(4, 2, V);
  CHECK_THROWS_AS(from_four_cocycle(z2, z2, z4), std::invalid_argument);
}

TEST_CASE("a condition with no tuple landing anywhere is trivially empty") {
  const GradedSpace V({0, 0, 1});
  const ConditionReport r = check_condition(LInfinityData::zero(V), 5);
  CHECK(r.passed());
  CHECK(r.trivially_empty);
}

TEST_CASE("condition tags name the degree pattern") {
  const std::array<int, 3> degs{0, 0, 2};
  CHECK_FALSE(condition_tag(3, degs, true).empty());
}

TEST_CASE("constructor rejects maps of the wrong shape") {
  const GradedSpace V({1, 1, 1});
  const MultiMap l1(1, -1, V), l2(2, 0, V), l3(3, 1, V), l4(4, 2, V);
  CHECK_NOTHROW(LInfinityData(V, l1, l2, l3, l4));
  CHECK_THROWS(LInfinityData(V, l2, l1, l3, l4));
  CHECK_THROWS(LInfinityData(V, l1, l2, l3, MultiMap(4, 2, GradedSpace({2, 1, 1}))));
}

}  // TEST_SUITE
