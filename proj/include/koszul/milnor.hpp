#pragma once

// Mod-2 Milnor K-theory presentations: generators are square classes of the
// field, relations the span of the symbols a (x) (1 - a). Finite fields of odd
// order are handled by direct enumeration (prime powers through polynomial
// arithmetic over the prime subfield); explicit specs list their square
// classes and the symbol pairs to kill.

#include <variant>

#include "koszul/homology.hpp"

namespace koszul {

struct FiniteFieldSpec {
  std::uint64_t q = 0;  // odd prime power
};

struct ExplicitFieldSpec {
  std::vector<std::string> classes;  // labels of a basis of the square-class group
  std::vector<std::pair<std::size_t, std::size_t>> steinberg_pairs;
};

using FieldSpec = std::variant<FiniteFieldSpec, ExplicitFieldSpec>;

// the presentation (square classes, span of the Steinberg symbols)
QuadraticPresentation steinberg_subspace(const FieldSpec& f);

struct MilnorResult {
  GradedDims dims;
  QuadraticPresentation presentation;
  KoszulVerdict koszul;
};

MilnorResult milnor_mod2(const FieldSpec& f, std::size_t max_degree);

}  // namespace koszul
