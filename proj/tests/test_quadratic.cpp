#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "koszul/errors.hpp"
#include "koszul/quadratic.hpp"
#include "oracles.hpp"

using namespace koszul;

namespace {

QuadraticPresentation xx_presentation() {
  return make_presentation(1, BitMatrix::from_rows(1, {{1}}));
}

}  // namespace

TEST_CASE("ideal components of small presentations") {
  CHECK(ideal_component(xx_presentation(), 3).is_full());
  CHECK(ideal_component(free_presentation(2), 5).is_zero());
  CHECK(ideal_component(exterior_presentation(2), 3).is_full());
  CHECK(ideal_component(square_zero_presentation(3), 0).is_zero());
  CHECK(ideal_component(square_zero_presentation(3), 1).is_zero());
  CHECK(ideal_component(square_zero_presentation(3), 2).is_full());
}

TEST_CASE("algebra dims of the stock presentations") {
  CHECK(algebra_dims(square_zero_presentation(2), 4) == GradedDims{1, 2, 0, 0, 0});
  CHECK(algebra_dims(exterior_presentation(2), 4) == GradedDims{1, 2, 1, 0, 0});
  CHECK(algebra_dims(free_presentation(2), 4) == GradedDims{1, 2, 4, 8, 16});
  CHECK(algebra_dims(polynomial_presentation(3), 4) == GradedDims{1, 3, 6, 10, 15});
  CHECK(algebra_dims(make_presentation(0, BitMatrix(0, 0)), 3) == GradedDims{1, 0, 0, 0});
}

TEST_CASE("coalgebra dims of the stock presentations") {
  CHECK(coalgebra_dims(square_zero_presentation(2), 4) == GradedDims{1, 2, 4, 8, 16});
  CHECK(coalgebra_dims(xx_presentation(), 5) == GradedDims{1, 1, 1, 1, 1, 1});
  CHECK(coalgebra_dims(free_presentation(3), 4) == GradedDims{1, 3, 0, 0, 0});
}

TEST_CASE("coalgebra components equal the literal intersection over all placements") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    QuadraticPresentation q = oracle::random_presentation(rng, 2);
    for (std::size_t n = 2; n <= 4; ++n) {
      Subspace c = coalgebra_component(q, n);
      oracle::Mat lit = oracle::literal_coalgebra(q, n);
      CHECK(c.dim() == lit.size());
      if (c.dim() <= 14) CHECK(oracle::same_span(c, lit));
    }
  }
}

TEST_CASE("ideal components equal the literal sum oracle") {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    QuadraticPresentation q = oracle::random_presentation(rng, 2);
    oracle::Mat rel = oracle::from_subspace(q.relations);
    auto odims = oracle::ideal_quotient_dims(q.dim_v, {}, rel, 5);
    GradedDims adims = algebra_dims(q, 5);
    for (std::size_t n = 0; n <= 5; ++n) {
      CHECK(adims[n] == odims[n]);
      CHECK(adims[n] + ideal_component(q, n).dim() == oracle::ipow(q.dim_v, n));
    }
  }
}

TEST_CASE("quadratic dual fixed examples") {
  CHECK(quadratic_dual(square_zero_presentation(3)).relations.is_zero());
  CHECK(algebra_dims(quadratic_dual(exterior_presentation(2)), 4) == GradedDims{1, 2, 3, 4, 5});

  QuadraticPresentation e3 = exterior_presentation(3);
  CHECK(quadratic_dual(e3).relations == polynomial_presentation(3).relations);
  CHECK(quadratic_dual(quadratic_dual(e3)) == e3);
}

TEST_CASE("dual is an involution and bridges to the coalgebra dims") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 80; ++trial) {
    QuadraticPresentation q = oracle::random_presentation(rng);
    CHECK(quadratic_dual(quadratic_dual(q)) == q);
    CHECK(coalgebra_dims(q, 2)[2] == q.relations.dim());
    CHECK(algebra_dims(quadratic_dual(q), 4) == coalgebra_dims(q, 4));
  }
}

TEST_CASE("hilbert product check on dual pairs") {
  CHECK(hilbert_product_check(square_zero_presentation(2), 8).pass);
  CHECK(hilbert_product_check(free_presentation(1), 8).pass);
  CHECK(hilbert_product_check(exterior_presentation(3), 8).pass);

  HilbertCheck h = hilbert_product_check(exterior_presentation(2), 6);
  CHECK(h.algebra == GradedDims{1, 2, 1, 0, 0, 0, 0});
  CHECK(h.dual == GradedDims{1, 2, 3, 4, 5, 6, 7});
  CHECK(!h.first_failure);
}

TEST_CASE("quotient by a degree-one subspace") {
  QuadraticPresentation q =
      make_presentation(2, BitMatrix::from_rows(4, {{0, 1, 0, 0}}), {"x", "y"});
  Subspace u = span_of(2, {{0, 1}});
  QuadraticPresentation quot = quotient_by_degree_one(q, u);
  CHECK(quot.dim_v == 1);
  CHECK(quot.generator_names == std::vector<std::string>{"x"});
  CHECK(algebra_dims(quot, 6) == GradedDims{1, 1, 1, 1, 1, 1, 1});

  auto odims = oracle::ideal_quotient_dims(2, {{0, 1}}, {{0, 1, 0, 0}}, 6);
  CHECK(algebra_dims(quot, 6) == odims);

  CHECK(quotient_by_degree_one(q, Subspace::zero(2)) == q);
  QuadraticPresentation trivial = quotient_by_degree_one(q, Subspace::full(2));
  CHECK(algebra_dims(trivial, 3) == GradedDims{1, 0, 0, 0});
}

TEST_CASE("quotient dims match the two-sided ideal oracle on random data") {
  std::mt19937 rng(24);
  for (int trial = 0; trial < 30; ++trial) {
    QuadraticPresentation q = oracle::random_presentation(rng, 3);
    if (q.dim_v < 2) continue;
    // a random one-dim subspace of V
    std::uniform_int_distribution<std::uint64_t> mask(1, (std::uint64_t{1} << q.dim_v) - 1);
    std::uint64_t m = mask(rng);
    std::vector<std::vector<int>> urow(1, std::vector<int>(q.dim_v, 0));
    for (std::size_t c = 0; c < q.dim_v; ++c) urow[0][c] = (m >> c) & 1;
    Subspace u = span_of(q.dim_v, urow);

    QuadraticPresentation quot = quotient_by_degree_one(q, u);
    auto odims =
        oracle::ideal_quotient_dims(q.dim_v, urow, oracle::from_subspace(q.relations), 4);
    CHECK(algebra_dims(quot, 4) == odims);
  }
}

TEST_CASE("nested quotients compose") {
  std::mt19937 rng(25);
  for (int trial = 0; trial < 30; ++trial) {
    QuadraticPresentation q = oracle::random_presentation(rng, 3);
    if (q.dim_v < 2) continue;
    // span of the first coordinate vector, then of the first two
    std::vector<int> e0(q.dim_v, 0);
    e0[0] = 1;
    std::vector<int> e1(q.dim_v, 0);
    e1[1] = 1;
    Subspace u0 = span_of(q.dim_v, {e0});
    Subspace u01 = span_of(q.dim_v, {e0, e1});

    QuadraticPresentation once = quotient_by_degree_one(q, u01);
    QuadraticPresentation first = quotient_by_degree_one(q, u0);
    // image of u01 in V/u0 is the line spanned by the image of e1
    Subspace img = span_of(first.dim_v, {[&] {
      std::vector<int> v(first.dim_v, 0);
      v[0] = 1;
      return v;
    }()});
    QuadraticPresentation twice = quotient_by_degree_one(first, img);
    CHECK(algebra_dims(once, 4) == algebra_dims(twice, 4));
  }
}

TEST_CASE("make_presentation validates and canonicalizes") {
  CHECK_THROWS_AS(make_presentation(2, BitMatrix(1, 3)), schema_error);
  CHECK_THROWS_AS(make_presentation(2, BitMatrix(0, 4), {"x"}), schema_error);
  QuadraticPresentation q = make_presentation(2, BitMatrix::from_rows(4, {{1, 1, 0, 0}, {1, 1, 0, 0}}));
  CHECK(q.relations.dim() == 1);
  CHECK(q.generator_names == std::vector<std::string>{"x1", "x2"});
}

TEST_CASE("degree cap guards dense blowup") {
  CHECK_THROWS_AS(tensor_power_dim(4, 11), degree_cap_error);
  CHECK(tensor_power_dim(4, 10) == (std::uint64_t{1} << 20));
  CHECK_THROWS_AS(algebra_dims(free_presentation(4), 11), degree_cap_error);
}

TEST_CASE("graded algebra products reduce to the standard basis") {
  GradedAlgebra a(exterior_presentation(2), 4);
  CHECK(a.dim(2) == 1);
  // x1 x2 is the surviving monomial of degree 2; its square dies in degree 4
  CHECK(a.dim(4) == 0);
  // product of the two degree-1 generators, both orders, must agree modulo R
  auto p01 = a.product(1, 0, 1, 1);
  auto p10 = a.product(1, 1, 1, 0);
  CHECK(p01 == p10);
  std::size_t weight = 0;
  for_each_set_bit(std::span<const word_t>(p01.data(), p01.size()),
                   [&](std::size_t) { ++weight; });
  CHECK(weight == 1);

  GradedAlgebra f(free_presentation(2), 3);
  CHECK(f.dim(3) == 8);
  // in the free algebra the product of standard monomials is concatenation:
  // letter x2 times word x2x1 is the word at index 6 = (1,1,0) base 2
  auto p = f.product(1, 1, 2, 2);
  std::size_t terms = 0;
  for_each_set_bit(std::span<const word_t>(p.data(), p.size()), [&](std::size_t) { ++terms; });
  CHECK(terms == 1);
  CHECK(bit_test(std::span<const word_t>(p.data(), p.size()), 6));
}
