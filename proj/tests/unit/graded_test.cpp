#include "shlie3/graded.hpp"
#include "shlie3/matrix.hpp"
#include "shlie3/multimap.hpp"
#include "shlie3/permutation.hpp"
#include "shlie3/rational.hpp"

#include <doctest.h>

#include <array>

using namespace shlie3;

TEST_SUITE("graded") {

TEST_CASE("rationals stay canonical and parse exactly") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -3).str() == "-1/3");
  CHECK(Rational::parse("1/3").str() == "1/3");
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK(Rational::parse("7").str() == "7");
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("abc"));
  CHECK_THROWS(Rational::parse(""));
}

TEST_CASE("koszul sign on small permutations") {
  const std::array<int, 2> d11{1, 1}, d01{0, 1}, d00{0, 0};
  const Permutation swap({1, 0});
  CHECK(koszul_chi(Permutation::identity(2), d11) == 1);
  CHECK(koszul_chi(Permutation::identity(2), d01) == 1);
  CHECK(koszul_chi(swap, d11) == 1);
  CHECK(koszul_chi(swap, d01) == -1);
  CHECK(koszul_chi(swap, d00) == -1);
  const std::array<int, 3> d3{1, 0, 1};
  CHECK_THROWS_AS(koszul_chi(swap, d3), std::invalid_argument);
}

TEST_CASE("permutations reject non-bijections") {
  CHECK_THROWS(Permutation({0, 0}));
  CHECK_THROWS(Permutation({1, 2}));
  CHECK(Permutation({2, 0, 1}).signature() == 1);
  CHECK(Permutation({1, 0, 2}).signature() == -1);
}

TEST_CASE("shuffle counts") {
  CHECK(enumerate_shuffles(2, 1).size() == 3);
  CHECK(enumerate_shuffles(1, 1).size() == 2);
  const auto id = enumerate_shuffles(0, 4);
  REQUIRE(id.size() == 1);
  CHECK(id.front() == Permutation::identity(4));
  CHECK(enumerate_shuffles(3, 4).size() == 35);
}

TEST_CASE("graded antisymmetry of a degree-0 bracket") {
  const GradedSpace V({2, 2, 0});
  const std::array<RawEntry, 1> raw{RawEntry{{{0, 0}, {0, 1}}, {Rational(0), Rational(1)}}};
  const MultiMap l2 = build_multimap(2, 0, V, raw);
  const auto x = GradedVector::basis(V, {0, 0}), y = GradedVector::basis(V, {0, 1});
  const std::array<GradedVector, 2> xy{x, y}, yx{y, x};
  CHECK(eval_multimap(l2, xy) == y);
  CHECK(eval_multimap(l2, yx) == Rational(-1) * y);
}

TEST_CASE("two degree-1 arguments commute") {
  // l2 on V1 x V1 lands in degree 2; with dim V2 = 0 the entry is empty
  const GradedSpace V({1, 2, 0});
  const std::array<RawEntry, 1> empty{RawEntry{{{1, 0}, {1, 1}}, {}}};
  CHECK(build_multimap(2, 0, V, empty).is_zero());

  const std::array<RawEntry, 1> raw{RawEntry{{{1, 0}, {1, 1}}, {Rational(3)}}};
  const GradedSpace W({1, 2, 1});
  const MultiMap m = build_multimap(2, 0, W, raw);
  const auto f = GradedVector::basis(W, {1, 0}), g = GradedVector::basis(W, {1, 1});
  const std::array<GradedVector, 2> fg{f, g}, gf{g, f};
  CHECK(eval_multimap(m, fg) == eval_multimap(m, gf));
  CHECK(eval_multimap(m, fg).coords(2) == Coords{Rational(3)});
  // repeated odd argument is allowed and symmetric
  const std::array<RawEntry, 1> sq{RawEntry{{{1, 0}, {1, 0}}, {Rational(5)}}};
  const MultiMap s = build_multimap(2, 0, W, sq);
  const std::array<GradedVector, 2> ff{f, f};
  CHECK(eval_multimap(s, ff).coords(2) == Coords{Rational(5)});
}

TEST_CASE("zero argument gives zero") {
  const GradedSpace V({2, 1, 1});
  const std::array<RawEntry, 1> raw{RawEntry{{{0, 0}, {0, 1}}, {Rational(1), Rational(2)}}};
  const MultiMap l2 = build_multimap(2, 0, V, raw);
  const std::array<GradedVector, 2> args{GradedVector(V), GradedVector::basis(V, {0, 1})};
  CHECK(eval_multimap(l2, args).is_zero());
}

TEST_CASE("raw entries: contradiction, consistent duplicates, empty") {
  const GradedSpace V({2, 0, 0});
  const std::array<RawEntry, 2> bad{RawEntry{{{0, 0}, {0, 1}}, {Rational(1), Rational(0)}},
                                    RawEntry{{{0, 1}, {0, 0}}, {Rational(1), Rational(0)}}};
  CHECK_THROWS_AS(build_multimap(2, 0, V, bad), MultiMapError);

  const std::array<RawEntry, 2> good{RawEntry{{{0, 0}, {0, 1}}, {Rational(1), Rational(0)}},
                                     RawEntry{{{0, 1}, {0, 0}}, {Rational(-1), Rational(0)}}};
  const MultiMap m = build_multimap(2, 0, V, good);
  CHECK(m.entries().size() == 1);

  CHECK(build_multimap(2, 0, V, std::span<const RawEntry>{}).is_zero());
}

TEST_CASE("repeated even argument is forced to zero") {
  const GradedSpace V({2, 0, 0});
  const std::array<RawEntry, 1> raw{RawEntry{{{0, 0}, {0, 0}}, {Rational(1), Rational(0)}}};
  CHECK_THROWS_AS(build_multimap(2, 0, V, raw), MultiMapError);
}

TEST_CASE("arity and space mismatches are rejected") {
  const GradedSpace V({2, 0, 0});
  const std::array<RawEntry, 1> raw{RawEntry{{{0, 0}}, {Rational(1), Rational(0)}}};
  CHECK_THROWS(build_multimap(2, 0, V, raw));
  const MultiMap z(2, 0, V);
  const std::array<GradedVector, 1> one{GradedVector(V)};
  CHECK_THROWS(eval_multimap(z, one));
  const std::array<GradedVector, 2> other{GradedVector(GradedSpace({3, 0, 0})), GradedVector(GradedSpace({3, 0, 0}))};
  CHECK_THROWS(eval_multimap(z, other));
}

TEST_CASE("nullspace and solve over the rationals") {
  const Matrix A = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}}, 3);
  CHECK(rank(A) == 1);
  const Matrix N = nullspace(A);
  CHECK(N.cols() == 2);
  CHECK((A * N).is_zero());
  const Matrix B = Matrix::from_rows({{2, 1}, {1, 1}}, 2);
  CHECK(B * inverse(B) == Matrix::identity(2));
  const auto x = solve(B, Coords{Rational(3), Rational(2)});
  REQUIRE(x);
  CHECK(*x == Coords{Rational(1), Rational(1)});
  CHECK_FALSE(solve(A, Coords{Rational(1), Rational(0)}));
}

}  // TEST_SUITE
