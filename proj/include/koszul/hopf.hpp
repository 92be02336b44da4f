#pragma once

// Shuffle/deconcatenation structure on tensor words, divided power algebras
// with the carry-free binomial product rule, primitive subspaces of the three
// coalgebra flavours the library works with, and the degree-by-degree
// dictionary between the one-variable divided power algebra and the truncated
// polynomial algebra on generators indexed by powers of two.
//
// Elements are kept as term sets; adding a term twice cancels it, which is
// exactly addition in characteristic 2.

#include <cstdint>
#include <optional>
#include <set>
#include <variant>

#include "koszul/quadratic.hpp"

namespace koszul {

using IndexWord = std::vector<std::uint8_t>;        // letters < dim_v
using ExponentVector = std::vector<std::uint32_t>;  // length dim_w

struct TensorWordElement {
  std::size_t dim_v = 0;
  std::set<IndexWord> terms;

  void toggle(const IndexWord& w);
  friend bool operator==(const TensorWordElement&, const TensorWordElement&) = default;
};

TensorWordElement shuffle(std::size_t dim_v, const IndexWord& u, const IndexWord& v);
TensorWordElement shuffle(const TensorWordElement& a, const TensorWordElement& b);
// all splits w = prefix . suffix, trivial ones included, in prefix-length order
std::vector<std::pair<IndexWord, IndexWord>> deconcatenate(const IndexWord& w);

// binom(a + b, a) mod 2: odd exactly when a and b have disjoint binary digits
bool binomial_odd(std::uint64_t a, std::uint64_t b);

struct DividedPowerElement {
  std::size_t dim_w = 0;
  std::set<ExponentVector> terms;

  void toggle(const ExponentVector& e);
  friend bool operator==(const DividedPowerElement&, const DividedPowerElement&) = default;
};

DividedPowerElement gamma_monomial(std::size_t dim_w, ExponentVector e);
DividedPowerElement divided_power_multiply(const DividedPowerElement& a,
                                           const DividedPowerElement& b);

// exponent vectors of total degree n over dim_w generators, lex order
std::vector<ExponentVector> divided_power_basis(std::size_t dim_w, std::size_t n);

struct TensorCoalgebra {
  std::size_t dim_v = 0;
  friend bool operator==(const TensorCoalgebra&, const TensorCoalgebra&) = default;
};
struct DividedPowerCoalgebra {
  std::size_t dim_w = 0;
  friend bool operator==(const DividedPowerCoalgebra&, const DividedPowerCoalgebra&) = default;
};
struct QuadraticCoalgebra {
  QuadraticPresentation presentation;
  friend bool operator==(const QuadraticCoalgebra&, const QuadraticCoalgebra&) = default;
};
using CoalgebraRef = std::variant<TensorCoalgebra, DividedPowerCoalgebra, QuadraticCoalgebra>;

// dimension of the coordinate space the degree-n component lives in: word
// count for the tensor flavours, monomial count for divided powers
std::size_t component_ambient(const CoalgebraRef& c, std::size_t n);

// kernel of the reduced coproduct on the degree-n component, n >= 1
Subspace primitives(const CoalgebraRef& c, std::size_t n);

struct StrictnessReport {
  std::size_t max_degree = 0;
  bool pass = false;
  std::vector<std::uint64_t> primitive_dims;  // per degree 1..max_degree
  std::vector<std::uint64_t> component_dims;
};

// primitives live in degree one and exhaust it
StrictnessReport verify_strict_grading(const CoalgebraRef& c, std::size_t max_degree);

struct GmgaReport {
  std::size_t max_degree = 0;
  bool dims_ok = false;      // one monomial per degree on both sides of the dictionary
  bool products_ok = false;  // gamma_a gamma_b agrees with the truncated polynomial product
  std::optional<std::pair<std::uint64_t, std::uint64_t>> first_mismatch;

  bool pass() const { return dims_ok && products_ok; }
};

GmgaReport gmga_check(std::size_t max_degree);

struct ShuffleAxiomReport {
  std::size_t dim_v = 0;
  std::size_t max_total_length = 0;
  bool commutative = false;
  bool associative = false;
  bool self_annihilating = false;  // w shuffled with itself vanishes
  bool bialgebra = false;          // coproduct of a product is the product of coproducts
  bool counit = false;
  std::uint64_t pairs_checked = 0;
  std::uint64_t triples_checked = 0;

  bool pass() const {
    return commutative && associative && self_annihilating && bialgebra && counit;
  }
};

// exhaustive sweep over all words with the stated total length bound
ShuffleAxiomReport verify_shuffle_axioms(std::size_t dim_v, std::size_t max_total_length);

}  // namespace koszul
