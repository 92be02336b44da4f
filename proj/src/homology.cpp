#include "koszul/homology.hpp"

#include <algorithm>
#include <map>

namespace koszul {

namespace {

// Basis bookkeeping for one slice B_i restricted to internal degree j: tuples
// of standard monomials (m_1, ..., m_i), grouped by the composition
// (p_1, ..., p_i) of j into positive parts with every dim A_{p_t} > 0.
struct Slice {
  std::vector<std::vector<std::size_t>> comps;
  std::vector<std::size_t> offset;  // basis offset per composition
  std::size_t dim = 0;
  std::map<std::vector<std::size_t>, std::size_t> comp_index;
};

Slice build_slice(const GradedAlgebra& alg, std::size_t i, std::size_t j) {
  Slice s;
  std::vector<std::size_t> parts;
  auto recurse = [&](auto&& self, std::size_t remaining, std::size_t slots) -> void {
    if (slots == 0) {
      if (remaining == 0) {
        std::size_t size = 1;
        for (std::size_t p : parts) size *= static_cast<std::size_t>(alg.dim(p));
        s.comp_index.emplace(parts, s.comps.size());
        s.comps.push_back(parts);
        s.offset.push_back(s.dim);
        s.dim += size;
      }
      return;
    }
    for (std::size_t p = 1; p + (slots - 1) <= remaining; ++p) {
      if (alg.dim(p) == 0) continue;
      parts.push_back(p);
      self(self, remaining - p, slots - 1);
      parts.pop_back();
    }
  };
  if (i == 0) {
    if (j == 0) s.dim = 1;
    return s;
  }
  recurse(recurse, j, i);
  return s;
}

// rank of the differential B_i -> B_{i-1} in internal degree j: the sum of
// the adjacent multiplication maps, no signs in characteristic 2
std::size_t differential_rank(const GradedAlgebra& alg, std::size_t i, const Slice& from,
                              const Slice& to) {
  if (from.dim == 0 || to.dim == 0 || i < 2) return 0;
  BitMatrix m(from.dim, to.dim);
  std::vector<std::size_t> tuple(i);
  for (std::size_t ci = 0; ci < from.comps.size(); ++ci) {
    const auto& comp = from.comps[ci];
    std::vector<std::size_t> dims(i);
    std::size_t count = 1;
    for (std::size_t t = 0; t < i; ++t) {
      dims[t] = static_cast<std::size_t>(alg.dim(comp[t]));
      count *= dims[t];
    }
    std::fill(tuple.begin(), tuple.end(), 0);
    for (std::size_t idx = 0; idx < count; ++idx) {
      std::size_t row = from.offset[ci] + idx;
      for (std::size_t t = 0; t + 1 < i; ++t) {
        std::size_t merged_deg = comp[t] + comp[t + 1];
        std::size_t merged_dim = static_cast<std::size_t>(alg.dim(merged_deg));
        if (merged_dim == 0) continue;
        std::vector<std::size_t> target_comp;
        target_comp.reserve(i - 1);
        for (std::size_t u = 0; u < i; ++u) {
          if (u == t + 1) continue;
          target_comp.push_back(u == t ? merged_deg : comp[u]);
        }
        auto it = to.comp_index.find(target_comp);
        if (it == to.comp_index.end()) continue;
        std::size_t base = to.offset[it->second];
        std::vector<word_t> prod = alg.product(comp[t], tuple[t], comp[t + 1], tuple[t + 1]);
        // column index is mixed-radix over the target tuple, with the merged
        // factor substituted into slot t
        for_each_set_bit(std::span<const word_t>(prod), [&](std::size_t merged) {
          std::size_t col = 0;
          for (std::size_t u = 0; u < i; ++u) {
            if (u == t + 1) continue;
            col = col * (u == t ? merged_dim : dims[u]) + (u == t ? merged : tuple[u]);
          }
          bit_flip(m.row(row), base + col);
        });
      }
      for (std::size_t t = i; t-- > 0;) {
        if (++tuple[t] < dims[t]) break;
        tuple[t] = 0;
      }
    }
  }
  return rank_of(m);
}

}  // namespace

TorTable tor_table(const QuadraticPresentation& q, std::size_t max_internal) {
  GradedAlgebra alg(q, max_internal);
  TorTable out;
  out.max_internal = max_internal;
  out.entries[{0, 0}] = 1;
  for (std::size_t j = 1; j <= max_internal; ++j) {
    std::vector<Slice> slices(j + 2);
    for (std::size_t i = 1; i <= j; ++i) slices[i] = build_slice(alg, i, j);
    // ranks[i] = rank of the differential out of B_i; B_{j+1} vanishes in
    // internal degree j, and B_1 maps to zero for j >= 1
    std::vector<std::size_t> ranks(j + 2, 0);
    for (std::size_t i = 2; i <= j; ++i)
      ranks[i] = differential_rank(alg, i, slices[i], slices[i - 1]);
    for (std::size_t i = 1; i <= j; ++i) {
      std::uint64_t h = slices[i].dim - ranks[i] - ranks[i + 1];
      if (h) out.entries[{i, j}] = h;
    }
  }
  return out;
}

KoszulVerdict certify_from_table(const TorTable& t, const GradedDims& diagonal,
                                 std::size_t max_internal) {
  KoszulVerdict v;
  v.bound = max_internal;
  v.koszul_up_to = max_internal;
  for (std::size_t j = 0; j <= max_internal; ++j) {
    std::optional<std::pair<std::size_t, std::size_t>> violation;
    for (std::size_t i = 0; i <= j; ++i) {
      if (i != j && t.at(i, j) != 0) {
        violation = {i, j};
        break;
      }
    }
    if (!violation && t.at(j, j) != diagonal[j]) {
      violation = {j, j};
      v.diagonal_match = false;
    }
    if (violation) {
      v.first_violation = violation;
      v.koszul_up_to = j == 0 ? 0 : j - 1;
      break;
    }
  }
  return v;
}

KoszulVerdict koszul_certificate(const QuadraticPresentation& q, std::size_t max_internal) {
  TorTable t = tor_table(q, max_internal);
  GradedDims c = coalgebra_dims(q, max_internal);
  return certify_from_table(t, c, max_internal);
}

}  // namespace koszul
