#include "generators.hpp"

#include "shlie3/lincat.hpp"

#include <doctest.h>

#include <algorithm>

using namespace shlie3;
using namespace shlie3::testing;

namespace {

Coords c(std::initializer_list<long> xs) {
  Coords v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Cell cell(std::initializer_list<Coords> comps) { return Cell{std::vector<Coords>(comps)}; }

// 2-category on V = (1,1,1) with l1 on V1 -> V0 equal to `d`
LinearNCat line_category(long d1, long d2 = 0) {
  const GradedSpace V({1, 1, 1});
  std::vector<RawEntry> raw;
  if (d1) raw.push_back({{{1, 0}}, c({d1})});
  if (d2) raw.push_back({{{2, 0}}, c({d2})});
  return from_chain(Complex(V, build_multimap(1, -1, V, raw)));
}

bool isomorphic_complexes(const Complex& a, const Complex& b) {
  if (a.space.dims() != b.space.dims()) return false;
  for (int k = 1; k <= a.space.top_degree(); ++k)
    if (rank(a.matrix(k)) != rank(b.matrix(k))) return false;
  return true;
}

}  // namespace

TEST_SUITE("lincat") {

TEST_CASE("target of a 1-cell is x + l1 f") {
  const LinearNCat L = line_category(3);
  const Cell a = cell({c({2}), c({5})});
  CHECK(L.source(a) == cell({c({2})}));
  CHECK(L.target(a) == cell({c({17})}));
}

TEST_CASE("identities have the cell as source and target") {
  Rng rng(1);
  const LinearNCat L = from_chain(random_complex(rng, GradedSpace({2, 2, 2})));
  for (int m = 0; m < 2; ++m)
    for (const Cell& a : L.basis_cells(m)) {
      CHECK(L.source(L.identity(a)) == a);
      CHECK(L.target(L.identity(a)) == a);
    }
}

TEST_CASE("zero differential: target keeps the object part") {
  const LinearNCat L = line_category(0);
  CHECK(L.target(cell({c({4}), c({9})})) == cell({c({4})}));
}

TEST_CASE("composition along objects adds arrows") {
  const GradedSpace V({1, 1});
  const LinearNCat L = from_chain(Complex(V, MultiMap(1, -1, V)));
  CHECK(L.compose(cell({c({2}), c({3})}), cell({c({2}), c({5})}), 0) == cell({c({2}), c({8})}));
}

TEST_CASE("right unit and vertical composition of 2-cells") {
  const LinearNCat L = line_category(2, 0);
  const Cell a = cell({c({1}), c({4}), c({7})});
  for (int p = 0; p < 2; ++p) CHECK(L.compose(a, L.identity_k(L.target_k(a, 2 - p), 2 - p), p) == a);
  // (x,f,a) o_1 (x, f + l1 a, b) = (x, f, a + b); here l1 on V2 is zero
  const Cell b = cell({c({1}), c({4}), c({-3})});
  CHECK(L.compose(a, b, 1) == cell({c({1}), c({4}), c({4})}));

  const LinearNCat M = line_category(0, 5);
  const Cell a2 = cell({c({1}), c({4}), c({2})});
  const Cell b2 = cell({c({1}), c({14}), c({6})});
  CHECK(M.compose(a2, b2, 1) == cell({c({1}), c({4}), c({8})}));
}

TEST_CASE("non-composable pair raises an error carrying both boundaries") {
  const LinearNCat L = line_category(1);
  const Cell a = cell({c({0}), c({1})}), b = cell({c({0}), c({1})});
  try {
    L.compose(a, b, 0);
    FAIL("expected a composition error");
  } catch (const CompositionError& e) {
    CHECK(e.target_side() == cell({c({1})}));
    CHECK(e.source_side() == cell({c({0})}));
  }
}

TEST_CASE("cells of the wrong level or length are rejected") {
  const LinearNCat L = line_category(1);
  CHECK_THROWS(L.source(cell({c({1})})));
  CHECK_THROWS(L.identity(cell({c({1}), c({1}), c({1})})));
  CHECK_THROWS(L.target(cell({c({1, 2}), c({1})})));
  CHECK_THROWS(L.zero_cell(3));
}

TEST_CASE("categories from complexes satisfy the axioms") {
  Rng rng(2);
  for (int rep = 0; rep < 10; ++rep) {
    const GradedSpace V({static_cast<std::size_t>(uniform(rng, 0, 2)), static_cast<std::size_t>(uniform(rng, 1, 2)),
                         static_cast<std::size_t>(uniform(rng, 0, 2))});
    const Report r = check_axioms(from_chain(random_complex(rng, V)));
    CHECK(r.passed());
    CHECK(r.checked() > 0);
  }
}

bool has_law(const Report& r, const std::string& law) {
  const auto& vs = r.violations();
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.law == law; });
}

TEST_CASE("dropping a summand of the composition breaks the unit laws") {
  Rng rng(3);
  const LinearNCat L = from_chain(random_complex(rng, GradedSpace({1, 1, 1})));
  const ComposeFn broken = [](const LinearNCat& K, const Cell& a, const Cell& b, int p) {
    Cell out = standard_compose(K, a, b, p);
    if (p == 0 && a.level() == 2) out[2] = out[2] - b[2];
    return out;
  };
  const Report r = check_axioms(L, broken);
  REQUIRE_FALSE(r.passed());
  CHECK(has_law(r, "left unit"));
  // a change F(a) + G(b) of this kind is additive along both directions,
  // so interchange alone does not see it
  CHECK_FALSE(has_law(r, "interchange"));
}

TEST_CASE("feeding the arrow into the top component breaks interchange") {
  const GradedSpace V({1, 1, 1});
  const std::array<RawEntry, 1> raw{RawEntry{{{1, 0}}, c({1})}};
  const LinearNCat L = from_chain(Complex(V, build_multimap(1, -1, V, raw)));
  const ComposeFn broken = [](const LinearNCat& K, const Cell& a, const Cell& b, int p) {
    Cell out = standard_compose(K, a, b, p);
    if (p == 0 && a.level() == 2) out[2] = out[2] + a[1];
    return out;
  };
  const Report r = check_axioms(L, broken);
  CHECK(has_law(r, "interchange"));
}

TEST_CASE("a 0-category has nothing to check") {
  const GradedSpace V({3});
  const Report r = check_axioms(from_chain(Complex(V, MultiMap(1, -1, V))));
  CHECK(r.passed());
  CHECK(r.checked() == 0);
}

TEST_CASE("complex and category round trips") {
  const GradedSpace V({1, 1, 1});
  const Complex zero(V, MultiMap(1, -1, V));
  const LinearNCat L = from_chain(zero);
  // zero differential: source and target agree everywhere
  for (int m = 1; m <= 2; ++m)
    for (const Cell& a : L.basis_cells(m)) CHECK(L.source(a) == L.target(a));
  CHECK(to_chain(L) == zero);

  Rng rng(4);
  for (int rep = 0; rep < 10; ++rep) {
    const Complex C = random_complex(rng, GradedSpace({2, 3, 1}));
    CHECK(to_chain(from_chain(C)) == C);
    CHECK(to_chain(from_chain(C)).space.dims() == C.space.dims());
  }
  const GradedSpace Z({0, 0, 0});
  CHECK(to_chain(from_chain(Complex(Z, MultiMap(1, -1, Z)))).differential.is_zero());
}

TEST_CASE("d squared nonzero is rejected") {
  const GradedSpace V({1, 1, 1});
  const std::array<RawEntry, 2> raw{RawEntry{{{1, 0}}, c({1})}, RawEntry{{{2, 0}}, c({1})}};
  CHECK_THROWS_AS(Complex(V, build_multimap(1, -1, V, raw)), std::invalid_argument);
}

TEST_CASE("component form of identities and kernel elements") {
  Rng rng(5);
  const LinearNCat L = from_chain(random_complex(rng, GradedSpace({2, 2, 2})));
  const RawGlobular R = to_raw(L);
  validate(R);
  const ComponentForm F = component_form(R);
  // identity 2-cell over an object: only the object component survives
  const Coords idx = L.flatten(L.identity_k(cell({c({1, -2})}), 2));
  const Cell dx = decompose(R, F, 2, idx);
  CHECK(is_zero(dx[1]));
  CHECK(is_zero(dx[2]));
  CHECK_FALSE(is_zero(dx[0]));
  CHECK(assemble(R, F, dx) == idx);
  // identity over a kernel element f: (0, f', 0)
  const Coords idf = L.flatten(L.identity(L.basis_cell(1, 1, 1)));
  const Cell df = decompose(R, F, 2, idf);
  CHECK(is_zero(df[0]));
  CHECK(is_zero(df[2]));
  CHECK_FALSE(is_zero(df[1]));
  for (int rep = 0; rep < 5; ++rep) {
    const Coords a = random_coords(rng, R.dims[2]);
    CHECK(assemble(R, F, decompose(R, F, 2, a)) == a);
  }
}

TEST_CASE("broken raw data fails validation") {
  Rng rng(6);
  RawGlobular R = to_raw(from_chain(random_complex(rng, GradedSpace({1, 1, 1}))));
  R.identity[0] = 2 * R.identity[0];
  CHECK_THROWS_AS(validate(R), std::invalid_argument);
}

TEST_CASE("products of categories") {
  const GradedSpace V({1, 1});
  const LinearNCat L = from_chain(Complex(V, MultiMap(1, -1, V)));
  const LinearNCat P = product(L, L, ProductMode::cartesian);
  CHECK(P.level_dim(1) == 4);
  CHECK(P.level_dim(0) == 2);

  const LinearNCat T = product(L, L, ProductMode::tensor);
  CHECK(T.level_dim(1) == 4);
  CHECK(T.space().dim(1) == 3);
  CHECK(check_axioms(T).passed());

  const GradedSpace W({1, 1, 1});
  CHECK_THROWS(product(L, from_chain(Complex(W, MultiMap(1, -1, W))), ProductMode::tensor));
}

TEST_CASE("the unit category is a unit for the tensor product") {
  Rng rng(7);
  for (int rep = 0; rep < 5; ++rep) {
    const LinearNCat L = from_chain(random_complex(rng, GradedSpace({2, 2, 1})));
    const LinearNCat K = unit_category(2);
    CHECK(isomorphic_complexes(to_chain(product(L, K, ProductMode::tensor)), to_chain(L)));
    CHECK(isomorphic_complexes(to_chain(product(K, L, ProductMode::tensor)), to_chain(L)));
  }
}

TEST_CASE("lifting level maps to functors") {
  Rng rng(8);
  const LinearNCat L = from_chain(random_complex(rng, GradedSpace({2, 1, 1})));
  std::vector<Matrix> id;
  for (int m = 0; m <= 2; ++m) id.push_back(Matrix::identity(L.level_dim(m)));
  CHECK(lift_functor(L, L, id).level_maps == id);

  // scale V2 by 2 with zero differential
  const GradedSpace V({1, 1, 1});
  const LinearNCat Z = from_chain(Complex(V, MultiMap(1, -1, V)));
  std::vector<Matrix> scale{Matrix::identity(1), Matrix::identity(2), Matrix::identity(3)};
  scale[2](2, 2) = 2;
  CHECK_NOTHROW(lift_functor(Z, Z, scale));

  // swap the two objects while l1 hits one of them
  const GradedSpace U({2, 1});
  const std::array<RawEntry, 1> raw{RawEntry{{{1, 0}}, c({1, 0})}};
  const LinearNCat S = from_chain(Complex(U, build_multimap(1, -1, U, raw)));
  Matrix swap0 = Matrix::from_rows({{0, 1}, {1, 0}}, 2);
  Matrix swap1 = Matrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}, 3);
  CHECK_THROWS_AS(lift_functor(S, S, {swap0, swap1}), LiftError);
}

}  // TEST_SUITE
