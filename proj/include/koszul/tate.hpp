#pragma once

// Validation of bigraded endomorphism tables indexed by (shift l, twist w):
// the three defining conditions of a Tate-type table, the auxiliary bound on
// non-positive shifts into positive twists, coarse vanishing ranges against a
// variety dimension, and the heart-equivalence prediction that ties a
// diagonal table to a certified-Koszul presentation.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "koszul/homology.hpp"

namespace koszul {

struct HomTable {
  std::map<std::pair<int, int>, std::uint64_t> entries;  // (l, w) -> dim; absent = 0
  std::optional<int> variety_dim;
  std::optional<std::string> source;

  std::uint64_t at(int l, int w) const {
    auto it = entries.find({l, w});
    return it == entries.end() ? 0 : it->second;
  }
};

enum class TateCondition { cond1, cond2, cond3, bs };
std::string_view condition_name(TateCondition c);  // "COND1", "COND2", "COND3", "BS"

struct TateViolation {
  TateCondition condition;
  int l = 0;
  int w = 0;
  std::uint64_t dim = 0;
};

struct TateReport {
  bool cond1 = true;  // negative twists carry nothing
  bool cond2 = true;  // twist zero is concentrated in shift zero
  bool cond3 = true;  // the (0,0) entry is one-dimensional
  bool bs = true;     // non-positive shifts carry nothing into positive twists
  std::vector<TateViolation> violations;  // ordered by (l, w)
  // the window the check covered: the bounding box of the support plus (0,0)
  int l_min = 0, l_max = 0, w_min = 0, w_max = 0;

  bool pass() const { return cond1 && cond2 && cond3 && bs; }
};

TateReport check_tate_type(const HomTable& t);

struct VanishingViolation {
  int l = 0;
  int w = 0;
  std::uint64_t dim = 0;
  std::vector<std::string> clauses;  // the failed bounds, from {"l>2w", "l<w", "l>w+d"}
};

struct VanishingReport {
  int variety_dim = 0;
  std::vector<VanishingViolation> violations;

  bool pass() const { return violations.empty(); }
};

VanishingReport check_vanishing_range(const HomTable& t, int d);

// the table's diagonal disagrees with the presentation's dimensions
struct hilbert_mismatch_error : std::runtime_error {
  std::size_t degree;
  explicit hilbert_mismatch_error(std::size_t deg)
      : std::runtime_error("table diagonal disagrees with the presentation at degree " +
                           std::to_string(deg)),
        degree(deg) {}
};

struct PredictVerdict {
  std::size_t bound = 0;
  bool table_diagonal = false;
  std::optional<std::pair<int, int>> off_diagonal_entry;
  KoszulVerdict certificate;
  bool predicted = false;  // claim holds up to the bound only
};

PredictVerdict predict_heart_equivalence(const QuadraticPresentation& q, const HomTable& t,
                                         std::size_t max_degree);

}  // namespace koszul
