#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "koszul/errors.hpp"
#include "koszul/milnor.hpp"
#include "oracles.hpp"

using namespace koszul;

TEST_CASE("steinberg subspace of small prime fields is the square relation") {
  for (std::uint64_t q : {3ull, 5ull, 7ull}) {
    QuadraticPresentation p = steinberg_subspace(FiniteFieldSpec{q});
    CHECK(p.dim_v == 1);
    CHECK(p.generator_names == std::vector<std::string>{"u"});
    CHECK(p.relations == Subspace::full(1));  // the single relation u.u
  }
}

TEST_CASE("steinberg subspace of the nine-element field") {
  QuadraticPresentation p = steinberg_subspace(FiniteFieldSpec{9});
  CHECK(p.dim_v == 1);
  CHECK(p.relations == Subspace::full(1));
}

TEST_CASE("even or invalid orders are rejected") {
  CHECK_THROWS_AS(steinberg_subspace(FiniteFieldSpec{2}), schema_error);
  CHECK_THROWS_AS(steinberg_subspace(FiniteFieldSpec{4}), schema_error);
  CHECK_THROWS_AS(steinberg_subspace(FiniteFieldSpec{6}), schema_error);
  CHECK_THROWS_AS(steinberg_subspace(FiniteFieldSpec{1}), schema_error);
  CHECK_THROWS_AS(steinberg_subspace(FiniteFieldSpec{0}), schema_error);
}

TEST_CASE("milnor dims of odd finite fields truncate after degree one") {
  for (std::uint64_t q : {3ull, 5ull, 7ull, 9ull, 11ull, 13ull, 27ull}) {
    MilnorResult r = milnor_mod2(FiniteFieldSpec{q}, 4);
    CHECK(r.dims == GradedDims{1, 1, 0, 0, 0});
    CHECK(r.koszul.positive());
  }
}

TEST_CASE("finite field dims match the degreewise ideal oracle") {
  for (std::uint64_t q : {3ull, 5ull}) {
    MilnorResult r = milnor_mod2(FiniteFieldSpec{q}, 5);
    oracle::Mat rel = oracle::from_subspace(r.presentation.relations);
    auto odims = oracle::ideal_quotient_dims(r.presentation.dim_v, {}, rel, 5);
    CHECK(r.dims == odims);
  }
}

TEST_CASE("explicit field specs quotient by exactly the listed pairs") {
  ExplicitFieldSpec free_spec{{"u"}, {}};
  MilnorResult free_result = milnor_mod2(free_spec, 4);
  CHECK(free_result.dims == GradedDims{1, 1, 1, 1, 1});

  ExplicitFieldSpec local{{"u", "pi"}, {{0, 0}}};
  QuadraticPresentation p = steinberg_subspace(local);
  CHECK(p.dim_v == 2);
  CHECK(p.generator_names == std::vector<std::string>{"u", "pi"});
  CHECK(p.relations.dim() == 1);
  CHECK(p.relations.contains(span_of(4, {{1, 0, 0, 0}}).basis().row(0)));

  // cross-check the quotient dims against the naive two-sided ideal
  MilnorResult r = milnor_mod2(local, 4);
  auto odims = oracle::ideal_quotient_dims(2, {}, {{1, 0, 0, 0}}, 4);
  CHECK(r.dims == odims);
}

TEST_CASE("explicit specs validate their index ranges") {
  ExplicitFieldSpec bad{{"u"}, {{0, 1}}};
  CHECK_THROWS_AS(steinberg_subspace(bad), schema_error);
  ExplicitFieldSpec empty{{}, {}};
  CHECK_THROWS_AS(steinberg_subspace(empty), schema_error);
}

TEST_CASE("isotropic quotient by the full degree-one space leaves the base field") {
  MilnorResult r = milnor_mod2(FiniteFieldSpec{5}, 3);
  QuadraticPresentation collapsed =
      quotient_by_degree_one(r.presentation, Subspace::full(r.presentation.dim_v));
  CHECK(algebra_dims(collapsed, 3) == GradedDims{1, 0, 0, 0});
}

TEST_CASE("duality bridge holds for the milnor presentations") {
  for (std::uint64_t q : {3ull, 7ull}) {
    MilnorResult r = milnor_mod2(FiniteFieldSpec{q}, 4);
    CHECK(algebra_dims(quadratic_dual(r.presentation), 4) == coalgebra_dims(r.presentation, 4));
  }
}
