#pragma once

// Finite weight-graded comodules over the library's coalgebras. The coaction
// is stored as a transition list: (from, to, word) stands for a summand
// e_to (x) word inside rho(e_from), on top of the implicit grouplike summand
// e_from (x) 1. Transition lists are kept canonical: sorted, duplicates
// cancelled in pairs.

#include <map>
#include <string>

#include "koszul/hopf.hpp"

namespace koszul {

// index word for the tensor flavours, exponent vector for divided powers
using CoWord = std::vector<std::uint32_t>;

struct ComoduleBasisElement {
  std::string label;
  int weight = 0;
  friend bool operator==(const ComoduleBasisElement&, const ComoduleBasisElement&) = default;
};

struct ComoduleTransition {
  std::size_t from = 0;
  std::size_t to = 0;
  CoWord word;
  friend auto operator<=>(const ComoduleTransition&, const ComoduleTransition&) = default;
};

struct GradedComodule {
  CoalgebraRef coalgebra;
  std::vector<ComoduleBasisElement> basis;
  std::vector<ComoduleTransition> transitions;

  std::size_t dim() const { return basis.size(); }
  friend bool operator==(const GradedComodule&, const GradedComodule&) = default;
};

// Checks index ranges and word shapes (throws schema_error), cancels repeated
// transitions mod 2 and sorts them.
GradedComodule make_comodule(CoalgebraRef coalgebra, std::vector<ComoduleBasisElement> basis,
                             std::vector<ComoduleTransition> transitions);

std::size_t coword_degree(const CoalgebraRef& c, const CoWord& w);

struct ComoduleFailure {
  std::string check;   // "weight", "degree", "membership", "counit", "coassociativity"
  std::string detail;
};

struct ComoduleReport {
  std::vector<ComoduleFailure> failures;
  bool pass() const { return failures.empty(); }
};

ComoduleReport validate(const GradedComodule& m);

struct WeightFiltration {
  std::vector<int> breakpoints;                  // weights where the filtration jumps, increasing
  std::vector<std::vector<std::size_t>> layers;  // basis indices of weight <= breakpoints[k]
};

// requires a valid comodule; each layer is closed under the coaction and the
// induced coaction on each successive quotient is trivial
WeightFiltration weight_filtration(const GradedComodule& m);

// dimensions of the associated graded pieces, by weight
std::map<int, std::size_t> fiber_functor(const GradedComodule& m);

struct UnipotenceReport {
  bool pass = false;
  std::vector<std::string> reasons;
};

// every transition must strictly drop weight through a positive-degree word
UnipotenceReport unipotence_check(const GradedComodule& m);

// tensor product comodule; transition words multiply through the coalgebra
// product (shuffle or divided powers)
GradedComodule tensor_comodule(const GradedComodule& a, const GradedComodule& b);

}  // namespace koszul
