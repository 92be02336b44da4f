#include "koszul/tate.hpp"

#include <algorithm>

namespace koszul {

std::string_view condition_name(TateCondition c) {
  switch (c) {
    case TateCondition::cond1: return "COND1";
    case TateCondition::cond2: return "COND2";
    case TateCondition::cond3: return "COND3";
    case TateCondition::bs: return "BS";
  }
  return "?";
}

TateReport check_tate_type(const HomTable& t) {
  TateReport r;
  for (const auto& [key, dim] : t.entries) {
    auto [l, w] = key;
    r.l_min = std::min(r.l_min, l);
    r.l_max = std::max(r.l_max, l);
    r.w_min = std::min(r.w_min, w);
    r.w_max = std::max(r.w_max, w);
    if (dim == 0) continue;
    if (w < 0) {
      r.cond1 = false;
      r.violations.push_back({TateCondition::cond1, l, w, dim});
    }
    if (w == 0 && l != 0) {
      r.cond2 = false;
      r.violations.push_back({TateCondition::cond2, l, w, dim});
    }
    if (w > 0 && l <= 0) {
      r.bs = false;
      r.violations.push_back({TateCondition::bs, l, w, dim});
    }
  }
  if (t.at(0, 0) != 1) {
    r.cond3 = false;
    r.violations.push_back({TateCondition::cond3, 0, 0, t.at(0, 0)});
  }
  std::sort(r.violations.begin(), r.violations.end(), [](const auto& a, const auto& b) {
    return std::tie(a.l, a.w, a.condition) < std::tie(b.l, b.w, b.condition);
  });
  return r;
}

VanishingReport check_vanishing_range(const HomTable& t, int d) {
  if (d < 0) throw std::invalid_argument("variety dimension must be non-negative");
  VanishingReport r;
  r.variety_dim = d;
  for (const auto& [key, dim] : t.entries) {
    auto [l, w] = key;
    if (dim == 0) continue;
    VanishingViolation v{l, w, dim, {}};
    if (l > 2 * w) v.clauses.push_back("l>2w");
    if (l < w) v.clauses.push_back("l<w");
    if (l > w + d) v.clauses.push_back("l>w+d");
    if (!v.clauses.empty()) r.violations.push_back(std::move(v));
  }
  std::sort(r.violations.begin(), r.violations.end(),
            [](const auto& a, const auto& b) { return std::tie(a.l, a.w) < std::tie(b.l, b.w); });
  return r;
}

PredictVerdict predict_heart_equivalence(const QuadraticPresentation& q, const HomTable& t,
                                         std::size_t max_degree) {
  PredictVerdict v;
  v.bound = max_degree;
  v.table_diagonal = true;
  for (const auto& [key, dim] : t.entries) {
    auto [l, w] = key;
    if (dim != 0 && (l != w || w < 0)) {
      v.table_diagonal = false;
      v.off_diagonal_entry = key;
      break;
    }
  }
  if (v.table_diagonal) {
    GradedDims dims = algebra_dims(q, max_degree);
    for (std::size_t n = 0; n <= max_degree; ++n)
      if (t.at(static_cast<int>(n), static_cast<int>(n)) != dims[n])
        throw hilbert_mismatch_error(n);
  }
  v.certificate = koszul_certificate(q, max_degree);
  v.predicted = v.table_diagonal && v.certificate.positive();
  return v;
}

}  // namespace koszul
