#pragma once

// Bigraded Tor of a quadratic algebra against the ground field, computed from
// the reduced bar complex of the augmentation ideal, and the bounded-degree
// Koszulity certificate read off from it.

#include <map>
#include <optional>
#include <utility>

#include "koszul/quadratic.hpp"

namespace koszul {

struct TorTable {
  std::size_t max_internal = 0;
  // (homological degree i, internal degree j) -> dim; zero entries omitted
  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> entries;

  std::uint64_t at(std::size_t i, std::size_t j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
};

TorTable tor_table(const QuadraticPresentation& q, std::size_t max_internal);

// Certifies diagonal concentration up to the stated bound only; nothing is
// claimed beyond it.
struct KoszulVerdict {
  std::size_t bound = 0;
  std::size_t koszul_up_to = 0;  // largest internal degree with no violation at or below it
  bool diagonal_match = true;    // diagonal entries equal the coalgebra dimensions
  std::optional<std::pair<std::size_t, std::size_t>> first_violation;  // (i, j)

  bool positive() const { return !first_violation.has_value(); }
};

KoszulVerdict koszul_certificate(const QuadraticPresentation& q, std::size_t max_internal);

// verdict recomputed from an existing table plus the expected diagonal
KoszulVerdict certify_from_table(const TorTable& t, const GradedDims& diagonal,
                                 std::size_t max_internal);

}  // namespace koszul
