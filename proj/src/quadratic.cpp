#include "koszul/quadratic.hpp"

#include <algorithm>
#include <stdexcept>

#include "koszul/errors.hpp"

namespace koszul {

std::uint64_t tensor_power_dim(std::size_t dim_v, std::size_t n) {
  std::uint64_t p = 1;
  for (std::size_t i = 0; i < n; ++i) {
    p *= dim_v;
    if (p > kMaxAmbient)
      throw degree_cap_error("tensor power " + std::to_string(dim_v) + "^" + std::to_string(n) +
                             " exceeds the dense ambient bound");
  }
  return p;
}

static std::vector<std::string> default_names(std::size_t d) {
  std::vector<std::string> names;
  names.reserve(d);
  for (std::size_t i = 1; i <= d; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

QuadraticPresentation make_presentation(std::size_t dim_v, const Subspace& relations,
                                        std::vector<std::string> names) {
  if (relations.ambient_dim() != dim_v * dim_v)
    throw schema_error("relation ambient must be dim_v^2");
  if (names.empty())
    names = default_names(dim_v);
  else if (names.size() != dim_v)
    throw schema_error("generator name count must equal dim_v");
  return QuadraticPresentation{dim_v, std::move(names), relations};
}

QuadraticPresentation make_presentation(std::size_t dim_v, const BitMatrix& relation_rows,
                                        std::vector<std::string> names) {
  if (relation_rows.cols() != dim_v * dim_v)
    throw schema_error("relation ambient must be dim_v^2");
  return make_presentation(dim_v, echelonize(relation_rows), std::move(names));
}

QuadraticPresentation free_presentation(std::size_t d) {
  return make_presentation(d, Subspace::zero(d * d));
}

QuadraticPresentation square_zero_presentation(std::size_t d) {
  return make_presentation(d, Subspace::full(d * d));
}

QuadraticPresentation exterior_presentation(std::size_t n) {
  // v (x) v for every v in V: spanned by x_i x_i and x_i x_j + x_j x_i
  BitMatrix rows(n + n * (n - 1) / 2, n * n);
  std::size_t r = 0;
  for (std::size_t i = 0; i < n; ++i) rows.set(r++, i * n + i, true);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      rows.set(r, i * n + j, true);
      rows.set(r, j * n + i, true);
      ++r;
    }
  return make_presentation(n, rows);
}

QuadraticPresentation polynomial_presentation(std::size_t n) {
  std::size_t pairs = n * (n - 1) / 2;
  BitMatrix rows(pairs, n * n);
  std::size_t r = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      rows.set(r, i * n + j, true);
      rows.set(r, j * n + i, true);
      ++r;
    }
  return make_presentation(n, rows);
}

// --- embeddings of a subspace s of V^(x)m into V^(x)(m+1) ---------------------

// rows e_a (x) s for all letters a; the result of embedding an RREF basis is
// again RREF when emitted in (letter, row) order
static Subspace tensor_left(std::size_t d, const Subspace& s, std::uint64_t dim_s_ambient) {
  std::size_t n = static_cast<std::size_t>(d * dim_s_ambient);
  BitMatrix out(d * s.dim(), n);
  std::size_t r = 0;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t i = 0; i < s.dim(); ++i) {
      std::size_t offset = a * static_cast<std::size_t>(dim_s_ambient);
      for_each_set_bit(s.basis().row(i), [&](std::size_t b) { out.set(r, offset + b, true); });
      ++r;
    }
  Subspace res = echelonize(out);
  return res;
}

// rows s (x) e_a
static Subspace tensor_right(const Subspace& s, std::size_t d) {
  std::size_t n = s.ambient_dim() * d;
  BitMatrix out(s.dim() * d, n);
  std::size_t r = 0;
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t a = 0; a < d; ++a) {
      for_each_set_bit(s.basis().row(i), [&](std::size_t b) { out.set(r, b * d + a, true); });
      ++r;
    }
  return echelonize(out);
}

Subspace ideal_component(const QuadraticPresentation& q, std::size_t n) {
  std::size_t d = q.dim_v;
  std::uint64_t ambient = tensor_power_dim(d, n);
  if (n < 2) return Subspace::zero(static_cast<std::size_t>(ambient));
  EchelonBasis e(static_cast<std::size_t>(ambient));
  std::vector<word_t> tmp(words_for(static_cast<std::size_t>(ambient)));
  std::uint64_t dsq = static_cast<std::uint64_t>(d) * d;
  for (std::size_t i = 0; i + 2 <= n && !e.full(); ++i) {
    std::size_t j = n - 2 - i;
    std::uint64_t pre = tensor_power_dim(d, i), suf = tensor_power_dim(d, j);
    for (std::uint64_t p = 0; p < pre && !e.full(); ++p)
      for (std::uint64_t s = 0; s < suf && !e.full(); ++s)
        for (std::size_t r = 0; r < q.relations.dim(); ++r) {
          std::fill(tmp.begin(), tmp.end(), 0);
          for_each_set_bit(q.relations.basis().row(r), [&](std::size_t b) {
            bit_flip(tmp, static_cast<std::size_t>((p * dsq + b) * suf + s));
          });
          e.insert(tmp);
        }
  }
  return e.to_subspace();
}

Subspace coalgebra_component(const QuadraticPresentation& q, std::size_t n) {
  std::size_t d = q.dim_v;
  (void)tensor_power_dim(d, n);  // ambient cap check
  if (n == 0) return Subspace::full(1);
  if (n == 1) return Subspace::full(d);
  if (n == 2) return q.relations;
  // the intersection over all placements collapses to a two-term recursion:
  // C_n = (V (x) C_{n-1})  meet  (C_{n-1} (x) V)
  Subspace c = q.relations;
  for (std::size_t m = 3; m <= n; ++m) {
    std::uint64_t prev_ambient = tensor_power_dim(d, m - 1);
    c = intersect(tensor_left(d, c, prev_ambient), tensor_right(c, d));
  }
  return c;
}

GradedDims algebra_dims(const QuadraticPresentation& q, std::size_t max_n) {
  GradedAlgebra a(q, max_n);
  GradedDims dims(max_n + 1);
  for (std::size_t n = 0; n <= max_n; ++n) dims[n] = a.dim(n);
  return dims;
}

GradedDims coalgebra_dims(const QuadraticPresentation& q, std::size_t max_n) {
  GradedDims dims(max_n + 1, 1);
  if (max_n >= 1) dims[1] = q.dim_v;
  Subspace c = q.relations;
  for (std::size_t n = 2; n <= max_n; ++n) {
    if (n > 2) {
      std::uint64_t prev_ambient = tensor_power_dim(q.dim_v, n - 1);
      c = intersect(tensor_left(q.dim_v, c, prev_ambient), tensor_right(c, q.dim_v));
    }
    dims[n] = c.dim();
  }
  return dims;
}

static std::string toggle_star(const std::string& s) {
  if (!s.empty() && s.back() == '*') return s.substr(0, s.size() - 1);
  return s + "*";
}

QuadraticPresentation quadratic_dual(const QuadraticPresentation& q) {
  std::vector<std::string> names;
  names.reserve(q.dim_v);
  for (const auto& n : q.generator_names) names.push_back(toggle_star(n));
  return QuadraticPresentation{q.dim_v, std::move(names), perp(q.relations)};
}

HilbertCheck hilbert_product_check(const QuadraticPresentation& q, std::size_t max_n) {
  HilbertCheck out;
  out.algebra = algebra_dims(q, max_n);
  out.dual = algebra_dims(quadratic_dual(q), max_n);
  out.pass = true;
  for (std::size_t n = 0; n <= max_n; ++n) {
    std::int64_t c = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      std::int64_t term = static_cast<std::int64_t>(out.algebra[n - k]) *
                          static_cast<std::int64_t>(out.dual[k]);
      c += (k % 2 == 0) ? term : -term;
    }
    if (c != (n == 0 ? 1 : 0)) {
      out.pass = false;
      out.first_failure = n;
      break;
    }
  }
  return out;
}

QuadraticPresentation quotient_by_degree_one(const QuadraticPresentation& q, const Subspace& u) {
  if (u.ambient_dim() != q.dim_v) throw std::invalid_argument("subspace ambient must be dim_v");
  std::size_t d = q.dim_v;
  std::size_t m = d - u.dim();
  // kept coordinates index the cosets; a pivot coordinate of u rewrites to the
  // tail of its basis row
  std::vector<std::int64_t> code(d);
  std::vector<std::size_t> kept;
  {
    std::vector<std::int64_t> pivot_row(d, -1);
    for (std::size_t r = 0; r < u.dim(); ++r)
      pivot_row[static_cast<std::size_t>(leading_bit(u.basis().row(r)))] =
          static_cast<std::int64_t>(r);
    for (std::size_t c = 0; c < d; ++c) {
      if (pivot_row[c] >= 0) {
        code[c] = -pivot_row[c] - 1;
      } else {
        code[c] = static_cast<std::int64_t>(kept.size());
        kept.push_back(c);
      }
    }
  }
  // image of each generator in V/u, on the kept-coordinate basis
  BitMatrix proj(d, m);
  for (std::size_t c = 0; c < d; ++c) {
    if (code[c] >= 0) {
      proj.set(c, static_cast<std::size_t>(code[c]), true);
    } else {
      auto row = u.basis().row(static_cast<std::size_t>(-code[c] - 1));
      for_each_set_bit(row, [&](std::size_t b) {
        if (b != c) proj.set(c, static_cast<std::size_t>(code[b]), true);
      });
    }
  }
  BitMatrix rows(q.relations.dim(), m * m);
  for (std::size_t r = 0; r < q.relations.dim(); ++r) {
    for_each_set_bit(q.relations.basis().row(r), [&](std::size_t b) {
      std::size_t a1 = b / d, a2 = b % d;
      for_each_set_bit(proj.row(a1), [&](std::size_t x) {
        for_each_set_bit(proj.row(a2), [&](std::size_t y) { rows.set(r, x * m + y, !rows.get(r, x * m + y)); });
      });
    });
  }
  std::vector<std::string> names;
  names.reserve(m);
  for (std::size_t c : kept) names.push_back(q.generator_names[c]);
  return make_presentation(m, rows, std::move(names));
}

GradedAlgebra::GradedAlgebra(QuadraticPresentation q, std::size_t max_degree)
    : q_(std::move(q)), max_degree_(max_degree) {
  std::size_t d = q_.dim_v;
  pow_.resize(max_degree_ + 1);
  for (std::size_t n = 0; n <= max_degree_; ++n) pow_[n] = tensor_power_dim(d, n);
  ideal_.resize(max_degree_ + 1);
  words_.resize(max_degree_ + 1);
  code_.resize(max_degree_ + 1);
  rewrite_.resize(max_degree_ + 1);

  for (std::size_t n = 0; n <= max_degree_; ++n) {
    std::size_t ambient = static_cast<std::size_t>(pow_[n]);
    if (n < 2) {
      ideal_[n] = Subspace::zero(ambient);
    } else if (n == 2) {
      ideal_[n] = q_.relations;
    } else {
      // the ideal components obey I_n = V (x) I_{n-1} + I_{n-1} (x) V
      EchelonBasis e(ambient);
      Subspace left = tensor_left(d, ideal_[n - 1], pow_[n - 1]);
      e.insert_rows(left.basis());
      if (!e.full()) e.insert_rows(tensor_right(ideal_[n - 1], d).basis());
      ideal_[n] = e.to_subspace();
    }

    const Subspace& ide = ideal_[n];
    code_[n].assign(ambient, 0);
    std::vector<std::int64_t> pivot_row(ambient, -1);
    for (std::size_t r = 0; r < ide.dim(); ++r)
      pivot_row[static_cast<std::size_t>(leading_bit(ide.basis().row(r)))] =
          static_cast<std::int64_t>(r);
    for (std::size_t w = 0; w < ambient; ++w) {
      if (pivot_row[w] >= 0) {
        code_[n][w] = -pivot_row[w] - 1;
      } else {
        code_[n][w] = static_cast<std::int64_t>(words_[n].size());
        words_[n].push_back(w);
      }
    }
    // pivot rows of the ideal, compressed onto the standard-monomial columns
    rewrite_[n] = BitMatrix(ide.dim(), words_[n].size());
    for (std::size_t r = 0; r < ide.dim(); ++r) {
      for_each_set_bit(ide.basis().row(r), [&](std::size_t b) {
        if (code_[n][b] >= 0) rewrite_[n].set(r, static_cast<std::size_t>(code_[n][b]), true);
      });
    }
  }
}

std::vector<word_t> GradedAlgebra::product(std::size_t a, std::size_t u, std::size_t b,
                                           std::size_t v) const {
  std::size_t n = a + b;
  std::vector<word_t> out(words_for(words_[n].size()), 0);
  std::uint64_t w = words_[a][u] * pow_[b] + words_[b][v];
  std::int64_t c = code_[n][static_cast<std::size_t>(w)];
  if (c >= 0) {
    bit_flip(out, static_cast<std::size_t>(c));
  } else {
    auto row = rewrite_[n].row(static_cast<std::size_t>(-c - 1));
    std::copy(row.begin(), row.end(), out.begin());
  }
  return out;
}

}  // namespace koszul
