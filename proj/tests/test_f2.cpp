#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "koszul/f2.hpp"
#include "oracles.hpp"

using namespace koszul;

namespace {

BitMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  BitMatrix m(rows, cols);
  std::bernoulli_distribution bit(0.5);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (bit(rng)) m.set(r, c, true);
  return m;
}

}  // namespace

TEST_CASE("echelonize fixed examples") {
  Subspace s = span_of(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  CHECK(s.dim() == 2);
  CHECK(s.basis() == BitMatrix::from_rows(3, {{1, 0, 1}, {0, 1, 1}}));

  CHECK(span_of(2, {{1, 1}}).basis() == BitMatrix::from_rows(2, {{1, 1}}));
  CHECK(span_of(4, {}).is_zero());
  CHECK(Subspace::full(3).basis() == BitMatrix::from_rows(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
}

TEST_CASE("echelonize is idempotent and permutation invariant") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 10;
    BitMatrix m = random_matrix(rng, rows, cols);
    Subspace s = echelonize(m);
    CHECK(echelonize(s.basis()) == s);

    std::vector<std::size_t> perm(rows);
    for (std::size_t i = 0; i < rows; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    BitMatrix p(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) p.set(r, c, m.get(perm[r], c));
    CHECK(echelonize(p) == s);

    CHECK(rank_of(m) == oracle::naive_rank(oracle::from_bitmatrix(m)));
  }
}

TEST_CASE("kernel fixed examples") {
  CHECK(kernel(BitMatrix::from_rows(3, {{1, 1, 0}, {0, 1, 1}})) == span_of(3, {{1, 1, 1}}));
  CHECK(kernel(BitMatrix::from_rows(2, {{1, 0}, {0, 1}})).is_zero());
  CHECK(kernel(BitMatrix(0, 4)).is_full());
}

TEST_CASE("kernel members annihilate every row, and rank-nullity holds") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 10;
    BitMatrix m = random_matrix(rng, rows, cols);
    Subspace k = kernel(m);
    CHECK(k.dim() + rank_of(m) == cols);
    for (std::size_t v = 0; v < k.dim(); ++v)
      for (std::size_t r = 0; r < m.rows(); ++r) {
        int dot = 0;
        for (std::size_t c = 0; c < cols; ++c)
          dot ^= (m.get(r, c) && k.basis().get(v, c)) ? 1 : 0;
        CHECK(dot == 0);
      }
    oracle::Mat ok = oracle::naive_kernel(oracle::from_bitmatrix(m), cols);
    CHECK(ok.size() == k.dim());
    CHECK(oracle::same_span(k, ok));
  }
}

TEST_CASE("intersect fixed examples") {
  CHECK(intersect(Subspace::full(2), span_of(2, {{1, 1}})) == span_of(2, {{1, 1}}));
  CHECK(intersect(span_of(2, {{1, 0}}), span_of(2, {{0, 1}})).is_zero());

  Subspace p1 = span_of(3, {{1, 0, 0}, {0, 1, 0}});
  Subspace p2 = span_of(3, {{0, 1, 0}, {0, 0, 1}});
  Subspace line = intersect(p1, p2);
  CHECK(line.dim() == 1);
  auto all1 = oracle::enumerate_span(oracle::from_subspace(p1), 3);
  auto all2 = oracle::enumerate_span(oracle::from_subspace(p2), 3);
  std::set<oracle::Vec> both;
  for (const auto& v : all1)
    if (all2.count(v)) both.insert(v);
  CHECK(oracle::enumerate_span(oracle::from_subspace(line), 3) == both);
}

TEST_CASE("intersect laws on random subspaces") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t cols = 1 + rng() % 8;
    Subspace a = echelonize(random_matrix(rng, 1 + rng() % 5, cols));
    Subspace b = echelonize(random_matrix(rng, 1 + rng() % 5, cols));
    Subspace c = echelonize(random_matrix(rng, 1 + rng() % 5, cols));

    Subspace ab = intersect(a, b);
    CHECK(ab == intersect(b, a));
    CHECK(intersect(a, a) == a);
    CHECK(intersect(intersect(a, b), c) == intersect(a, intersect(b, c)));
    CHECK(ab.dim() + subspace_sum(a, b).dim() == a.dim() + b.dim());
    CHECK(a.contains(ab));
    CHECK(b.contains(ab));

    auto naive =
        oracle::naive_intersect(oracle::from_subspace(a), oracle::from_subspace(b), cols);
    CHECK(oracle::same_span(ab, naive));
  }
}

TEST_CASE("perp fixed examples") {
  CHECK(perp(Subspace::zero(3)).is_full());
  CHECK(perp(Subspace::full(3)).is_zero());
  CHECK(perp(span_of(2, {{1, 1}})) == span_of(2, {{1, 1}}));
}

TEST_CASE("perp pairing by enumeration") {
  Subspace s = span_of(2, {{1, 1}});
  Subspace sp = perp(s);
  for (int x = 0; x < 4; ++x) {
    oracle::Vec v{x & 1, (x >> 1) & 1};
    bool annihilates = true;
    for (std::size_t r = 0; r < s.dim(); ++r) {
      int dot = 0;
      for (std::size_t c = 0; c < 2; ++c) dot ^= v[c] & (s.basis().get(r, c) ? 1 : 0);
      if (dot) annihilates = false;
    }
    if (v == oracle::Vec{0, 0}) {
      CHECK(annihilates);
    } else {
      bool inside = sp.contains(span_of(2, {{v[0], v[1]}}).basis().row(0));
      CHECK(annihilates == inside);
    }
  }
}

TEST_CASE("perp is an order-reversing involution") {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t cols = 1 + rng() % 9;
    Subspace a = echelonize(random_matrix(rng, 1 + rng() % 5, cols));
    CHECK(perp(a).dim() + a.dim() == cols);
    CHECK(perp(perp(a)) == a);

    Subspace big = subspace_sum(a, echelonize(random_matrix(rng, 1, cols)));
    CHECK(big.contains(a));
    CHECK(perp(a).contains(perp(big)));
  }
}

TEST_CASE("subspace contains and membership reduce") {
  Subspace s = span_of(3, {{1, 1, 0}, {0, 1, 1}});
  std::vector<word_t> v{0b101};  // (1,0,1) = sum of the two rows
  CHECK(s.contains(v));
  std::vector<word_t> w{0b001};
  CHECK(!s.contains(w));

  EchelonBasis e(3);
  e.insert_rows(s.basis());
  std::vector<word_t> r{0b111};
  e.reduce(r);
  CHECK(leading_bit(r) == 2);  // x+y+z reduces to z modulo the span
  CHECK(e.rank() == 2);
}
