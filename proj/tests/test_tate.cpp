#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "koszul/tate.hpp"

using namespace koszul;

namespace {

HomTable table_of(std::initializer_list<std::pair<std::pair<int, int>, std::uint64_t>> entries) {
  HomTable t;
  for (const auto& [key, dim] : entries) t.entries[key] = dim;
  return t;
}

HomTable diagonal_table(const GradedDims& dims) {
  HomTable t;
  for (std::size_t n = 0; n < dims.size(); ++n)
    if (dims[n]) t.entries[{static_cast<int>(n), static_cast<int>(n)}] = dims[n];
  return t;
}

}  // namespace

TEST_CASE("the point table passes every condition") {
  TateReport r = check_tate_type(table_of({{{0, 0}, 1}}));
  CHECK(r.pass());
  CHECK(r.violations.empty());
}

TEST_CASE("the two-puncture curve table passes") {
  TateReport r = check_tate_type(table_of({{{0, 0}, 1}, {{1, 1}, 2}}));
  CHECK(r.pass());
}

TEST_CASE("each condition trips on its own witness") {
  TateReport c1 = check_tate_type(table_of({{{0, 0}, 1}, {{2, -1}, 1}}));
  CHECK(!c1.cond1);
  CHECK(c1.cond2);
  CHECK(c1.cond3);
  REQUIRE(c1.violations.size() == 1);
  CHECK(c1.violations[0].condition == TateCondition::cond1);
  CHECK(c1.violations[0].l == 2);
  CHECK(c1.violations[0].w == -1);

  TateReport c2 = check_tate_type(table_of({{{0, 0}, 1}, {{3, 0}, 2}}));
  CHECK(!c2.cond2);
  CHECK(c2.cond1);
  REQUIRE(c2.violations.size() == 1);
  CHECK(c2.violations[0].condition == TateCondition::cond2);

  TateReport c3 = check_tate_type(table_of({{{0, 0}, 5}}));
  CHECK(!c3.cond3);
  REQUIRE(c3.violations.size() == 1);
  CHECK(c3.violations[0].condition == TateCondition::cond3);

  TateReport bs = check_tate_type(table_of({{{0, 0}, 1}, {{-1, 1}, 1}}));
  CHECK(!bs.bs);
  CHECK(bs.cond1);
  CHECK(bs.cond2);
  CHECK(bs.cond3);
  REQUIRE(bs.violations.size() == 1);
  CHECK(bs.violations[0].condition == TateCondition::bs);
  CHECK(condition_name(bs.violations[0].condition) == std::string("BS"));
}

TEST_CASE("zero entries never violate anything") {
  HomTable t = table_of({{{0, 0}, 1}, {{2, -1}, 0}, {{5, 0}, 0}, {{-3, 4}, 0}});
  TateReport r = check_tate_type(t);
  CHECK(r.pass());
  // the checked window still covers the explicit zeros
  CHECK(r.l_min == -3);
  CHECK(r.l_max == 5);
  CHECK(r.w_min == -1);
  CHECK(r.w_max == 4);
}

TEST_CASE("removing a nonzero entry never converts pass to fail") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> coord(-3, 3);
  std::uniform_int_distribution<std::uint64_t> dim(1, 3);
  for (int trial = 0; trial < 200; ++trial) {
    HomTable t = table_of({{{0, 0}, 1}});
    for (int k = 0; k < 4; ++k) t.entries[{coord(rng), coord(rng)}] = dim(rng);
    t.entries[{0, 0}] = 1;
    bool before = check_tate_type(t).pass();
    for (const auto& [key, d] : t.entries) {
      if (key == std::pair{0, 0}) continue;
      HomTable smaller = t;
      smaller.entries.erase(key);
      if (before) CHECK(check_tate_type(smaller).pass());
    }
  }
}

TEST_CASE("zeroing a reported violation strictly shrinks the violation list") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> coord(-3, 3);
  std::uniform_int_distribution<std::uint64_t> dim(1, 3);
  for (int trial = 0; trial < 200; ++trial) {
    HomTable t = table_of({{{0, 0}, 1}});
    for (int k = 0; k < 5; ++k) t.entries[{coord(rng), coord(rng)}] = dim(rng);
    t.entries[{0, 0}] = 1;
    TateReport r = check_tate_type(t);
    if (r.violations.empty()) continue;
    const TateViolation& v = r.violations.front();
    HomTable fixed = t;
    if (v.condition == TateCondition::cond3)
      fixed.entries[{0, 0}] = 1;  // cond3 cannot fire here since (0,0) is pinned to 1
    else
      fixed.entries.erase({v.l, v.w});
    CHECK(check_tate_type(fixed).violations.size() < r.violations.size());
  }
}

TEST_CASE("vanishing ranges flag exactly the out-of-range entries") {
  VanishingReport ok = check_vanishing_range(table_of({{{0, 0}, 1}, {{2, 2}, 3}}), 0);
  CHECK(ok.pass());

  VanishingReport bad = check_vanishing_range(table_of({{{0, 0}, 1}, {{3, 1}, 1}}), 1);
  CHECK(!bad.pass());
  REQUIRE(bad.violations.size() == 1);
  CHECK(bad.violations[0].l == 3);
  CHECK(bad.violations[0].w == 1);
  // 3 > 2*1 and 3 > 1+1, but not 3 < 1
  CHECK(bad.violations[0].clauses == std::vector<std::string>{"l>2w", "l>w+d"});

  VanishingReport low = check_vanishing_range(table_of({{{0, 0}, 1}, {{1, 2}, 1}}), 7);
  CHECK(!low.pass());
  REQUIRE(low.violations.size() == 1);
  CHECK(low.violations[0].clauses == std::vector<std::string>{"l<w"});

  CHECK_THROWS_AS(check_vanishing_range(table_of({{{0, 0}, 1}}), -1), std::invalid_argument);
}

TEST_CASE("diagonal tables pass vanishing for every variety dimension") {
  for (int d = 0; d <= 3; ++d) {
    HomTable t = diagonal_table({1, 2, 4, 8});
    CHECK(check_vanishing_range(t, d).pass());
  }
}

TEST_CASE("predict accepts the koszul diagonal pairings") {
  HomTable gm2 = diagonal_table({1, 2, 1});
  PredictVerdict v = predict_heart_equivalence(exterior_presentation(2), gm2, 5);
  CHECK(v.predicted);
  CHECK(v.table_diagonal);
  CHECK(v.certificate.positive());

  HomTable pt = diagonal_table({1});
  // the zero-dimensional table pairs with the trivial presentation
  QuadraticPresentation trivial = make_presentation(0, BitMatrix(0, 0));
  CHECK(predict_heart_equivalence(trivial, pt, 4).predicted);
}

TEST_CASE("predict rejects off-diagonal support without computing a certificate verdict") {
  HomTable t = diagonal_table({1, 2});
  t.entries[{0, 1}] = 1;
  PredictVerdict v = predict_heart_equivalence(square_zero_presentation(2), t, 4);
  CHECK(!v.predicted);
  CHECK(!v.table_diagonal);
  REQUIRE(v.off_diagonal_entry.has_value());
  CHECK(*v.off_diagonal_entry == std::pair{0, 1});
}

TEST_CASE("predict raises on a diagonal that contradicts the presentation") {
  HomTable t = diagonal_table({1, 2});
  t.entries[{2, 2}] = 1;  // square-zero has no degree-2 part
  CHECK_THROWS_AS(predict_heart_equivalence(square_zero_presentation(2), t, 4),
                  hilbert_mismatch_error);
  try {
    predict_heart_equivalence(square_zero_presentation(2), t, 4);
  } catch (const hilbert_mismatch_error& e) {
    CHECK(e.degree == 2);
  }
}

TEST_CASE("predict agrees with the certificate on tables built from the dims") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t d = 1 + rng() % 2;
    std::size_t count = rng() % (d * d + 1);
    BitMatrix rows(count, d * d);
    for (std::size_t r = 0; r < count; ++r)
      for (std::size_t c = 0; c < d * d; ++c)
        if (rng() & 1) rows.set(r, c, true);
    QuadraticPresentation q = make_presentation(d, rows);
    HomTable t = diagonal_table(algebra_dims(q, 4));
    PredictVerdict v = predict_heart_equivalence(q, t, 4);
    CHECK(v.predicted == koszul_certificate(q, 4).positive());
  }
}

TEST_CASE("negative twists in the window are reported with their region name") {
  CHECK(condition_name(TateCondition::cond1) == std::string("COND1"));
  CHECK(condition_name(TateCondition::cond2) == std::string("COND2"));
  CHECK(condition_name(TateCondition::cond3) == std::string("COND3"));
}
