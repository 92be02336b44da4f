#include "koszul/hopf.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace koszul {

void TensorWordElement::toggle(const IndexWord& w) {
  auto it = terms.find(w);
  if (it == terms.end())
    terms.insert(w);
  else
    terms.erase(it);
}

void DividedPowerElement::toggle(const ExponentVector& e) {
  auto it = terms.find(e);
  if (it == terms.end())
    terms.insert(e);
  else
    terms.erase(it);
}

TensorWordElement shuffle(std::size_t dim_v, const IndexWord& u, const IndexWord& v) {
  TensorWordElement out{dim_v, {}};
  std::size_t a = u.size(), b = v.size();
  // subsets of positions taken by u, enumerated as bitmasks
  if (a + b >= 64) throw std::invalid_argument("shuffle word length out of range");
  IndexWord w(a + b);
  std::uint64_t mask = (a + b == 0) ? 0 : ((std::uint64_t{1} << (a + b)) - 1);
  for (std::uint64_t pick = 0;; ++pick) {
    if (__builtin_popcountll(pick) == static_cast<int>(a)) {
      std::size_t iu = 0, iv = 0;
      for (std::size_t p = 0; p < a + b; ++p)
        w[p] = (pick >> p) & 1 ? u[iu++] : v[iv++];
      out.toggle(w);
    }
    if (pick == mask) break;
  }
  return out;
}

TensorWordElement shuffle(const TensorWordElement& a, const TensorWordElement& b) {
  if (a.dim_v != b.dim_v) throw std::invalid_argument("alphabet mismatch");
  TensorWordElement out{a.dim_v, {}};
  for (const auto& u : a.terms)
    for (const auto& v : b.terms)
      for (const auto& w : shuffle(a.dim_v, u, v).terms) out.toggle(w);
  return out;
}

std::vector<std::pair<IndexWord, IndexWord>> deconcatenate(const IndexWord& w) {
  std::vector<std::pair<IndexWord, IndexWord>> out;
  out.reserve(w.size() + 1);
  for (std::size_t k = 0; k <= w.size(); ++k)
    out.emplace_back(IndexWord(w.begin(), w.begin() + k), IndexWord(w.begin() + k, w.end()));
  return out;
}

bool binomial_odd(std::uint64_t a, std::uint64_t b) { return (a & b) == 0; }

DividedPowerElement gamma_monomial(std::size_t dim_w, ExponentVector e) {
  if (e.size() != dim_w) throw std::invalid_argument("exponent vector length mismatch");
  DividedPowerElement out{dim_w, {}};
  out.terms.insert(std::move(e));
  return out;
}

DividedPowerElement divided_power_multiply(const DividedPowerElement& a,
                                           const DividedPowerElement& b) {
  if (a.dim_w != b.dim_w) throw std::invalid_argument("generator count mismatch");
  DividedPowerElement out{a.dim_w, {}};
  for (const auto& e : a.terms)
    for (const auto& f : b.terms) {
      bool live = true;
      for (std::size_t i = 0; i < a.dim_w && live; ++i) live = binomial_odd(e[i], f[i]);
      if (!live) continue;
      ExponentVector g(a.dim_w);
      for (std::size_t i = 0; i < a.dim_w; ++i) g[i] = e[i] + f[i];
      out.toggle(g);
    }
  return out;
}

std::vector<ExponentVector> divided_power_basis(std::size_t dim_w, std::size_t n) {
  std::vector<ExponentVector> out;
  if (dim_w == 0) {
    if (n == 0) out.push_back({});
    return out;
  }
  ExponentVector e(dim_w, 0);
  auto recurse = [&](auto&& self, std::size_t slot, std::size_t remaining) -> void {
    if (slot + 1 == dim_w) {
      e[slot] = static_cast<std::uint32_t>(remaining);
      out.push_back(e);
      return;
    }
    for (std::size_t v = 0; v <= remaining; ++v) {
      e[slot] = static_cast<std::uint32_t>(v);
      self(self, slot + 1, remaining - v);
    }
  };
  recurse(recurse, 0, n);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t component_ambient(const CoalgebraRef& c, std::size_t n) {
  if (const auto* t = std::get_if<TensorCoalgebra>(&c))
    return static_cast<std::size_t>(tensor_power_dim(t->dim_v, n));
  if (const auto* g = std::get_if<DividedPowerCoalgebra>(&c))
    return divided_power_basis(g->dim_w, n).size();
  const auto& q = std::get<QuadraticCoalgebra>(c).presentation;
  return static_cast<std::size_t>(tensor_power_dim(q.dim_v, n));
}

namespace {

// reduced deconcatenation matrix on words of length n: one block of rows per
// proper split position, each block the identity on word indices
Subspace word_primitives(std::size_t dim_v, std::size_t n) {
  std::size_t ambient = static_cast<std::size_t>(tensor_power_dim(dim_v, n));
  if (n == 1) return Subspace::full(ambient);
  BitMatrix m((n - 1) * ambient, ambient);
  for (std::size_t split = 0; split + 1 < n; ++split)
    for (std::size_t w = 0; w < ambient; ++w) m.set(split * ambient + w, w, true);
  return kernel(m);
}

Subspace divided_primitives(std::size_t dim_w, std::size_t n) {
  auto mono = divided_power_basis(dim_w, n);
  std::size_t ambient = mono.size();
  if (n == 1) return Subspace::full(ambient);
  // rows indexed by pairs of monomials; the reduced coproduct of a monomial
  // is the sum of its proper componentwise splits, all coefficients 1
  std::map<std::pair<ExponentVector, ExponentVector>, std::size_t> row_index;
  std::vector<std::vector<std::size_t>> entries(ambient);
  for (std::size_t c = 0; c < ambient; ++c) {
    const auto& e = mono[c];
    ExponentVector p(dim_w, 0);
    auto recurse = [&](auto&& self, std::size_t slot) -> void {
      if (slot == dim_w) {
        std::size_t dp = 0;
        for (auto v : p) dp += v;
        if (dp == 0 || dp == n) return;
        ExponentVector q(dim_w);
        for (std::size_t i = 0; i < dim_w; ++i) q[i] = e[i] - p[i];
        auto [it, inserted] = row_index.emplace(std::make_pair(p, q), row_index.size());
        entries[c].push_back(it->second);
        return;
      }
      for (std::uint32_t v = 0; v <= e[slot]; ++v) {
        p[slot] = v;
        self(self, slot + 1);
      }
    };
    recurse(recurse, 0);
  }
  BitMatrix m(row_index.size(), ambient);
  for (std::size_t c = 0; c < ambient; ++c)
    for (std::size_t r : entries[c]) m.set(r, c, !m.get(r, c));
  return kernel(m);
}

Subspace quadratic_primitives(const QuadraticPresentation& q, std::size_t n) {
  std::size_t ambient = static_cast<std::size_t>(tensor_power_dim(q.dim_v, n));
  if (n == 1) return Subspace::full(ambient);
  Subspace comp = coalgebra_component(q, n);
  // restrict the reduced word coproduct to the component: a combination of
  // basis vectors maps to one copy of itself per proper split, so the kernel
  // on coefficients is the kernel of the stacked basis matrix
  BitMatrix m(comp.dim(), comp.dim());
  // coefficients v with sum_r v_r * basis_r = 0 in any single split block
  BitMatrix block(static_cast<std::size_t>(ambient), comp.dim());
  for (std::size_t r = 0; r < comp.dim(); ++r)
    for_each_set_bit(comp.basis().row(r), [&](std::size_t b) { block.set(b, r, true); });
  Subspace coeff = kernel(block);
  // map coefficient vectors back into the ambient word space
  BitMatrix back(coeff.dim(), ambient);
  for (std::size_t r = 0; r < coeff.dim(); ++r)
    for_each_set_bit(coeff.basis().row(r),
                     [&](std::size_t t) { xor_into(back.row(r), comp.basis().row(t)); });
  return echelonize(back);
}

}  // namespace

Subspace primitives(const CoalgebraRef& c, std::size_t n) {
  if (n == 0) throw std::invalid_argument("primitives need degree >= 1");
  if (const auto* t = std::get_if<TensorCoalgebra>(&c)) return word_primitives(t->dim_v, n);
  if (const auto* g = std::get_if<DividedPowerCoalgebra>(&c))
    return divided_primitives(g->dim_w, n);
  return quadratic_primitives(std::get<QuadraticCoalgebra>(c).presentation, n);
}

StrictnessReport verify_strict_grading(const CoalgebraRef& c, std::size_t max_degree) {
  StrictnessReport out;
  out.max_degree = max_degree;
  out.pass = true;
  for (std::size_t n = 1; n <= max_degree; ++n) {
    std::size_t ambient = component_ambient(c, n);
    std::uint64_t comp_dim = ambient;
    if (const auto* q = std::get_if<QuadraticCoalgebra>(&c))
      comp_dim = coalgebra_component(q->presentation, n).dim();
    std::uint64_t prim = primitives(c, n).dim();
    out.primitive_dims.push_back(prim);
    out.component_dims.push_back(comp_dim);
    if (n == 1 ? prim != comp_dim : prim != 0) out.pass = false;
  }
  return out;
}

GmgaReport gmga_check(std::size_t max_degree) {
  GmgaReport out;
  out.max_degree = max_degree;
  out.dims_ok = true;
  out.products_ok = true;
  // degree-n monomials of the truncated polynomial side are squarefree
  // products of generators y_{2^k}; counting them by brute subset enumeration
  // must give exactly one per degree, matching the single gamma_n
  for (std::uint64_t n = 0; n <= max_degree && out.dims_ok; ++n) {
    std::size_t generators = 0;
    while ((std::uint64_t{1} << generators) <= n) ++generators;
    std::size_t count = 0;
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << generators); ++subset) {
      std::uint64_t total = 0;
      for (std::size_t k = 0; k < generators; ++k)
        if ((subset >> k) & 1) total += std::uint64_t{1} << k;
      if (total == n) ++count;
    }
    if (count != 1) out.dims_ok = false;
    if (divided_power_basis(1, static_cast<std::size_t>(n)).size() != 1) out.dims_ok = false;
  }
  for (std::uint64_t a = 1; a <= max_degree && out.products_ok; ++a)
    for (std::uint64_t b = 1; a + b <= max_degree && out.products_ok; ++b) {
      // divided power side
      auto ga = gamma_monomial(1, {static_cast<std::uint32_t>(a)});
      auto gb = gamma_monomial(1, {static_cast<std::uint32_t>(b)});
      auto prod = divided_power_multiply(ga, gb);
      bool gamma_nonzero = !prod.terms.empty();
      // truncated polynomial side: products of distinct y_{2^k} multiply by
      // digit-set union and vanish on a shared digit
      bool poly_nonzero = (a & b) == 0;
      bool match = gamma_nonzero == poly_nonzero;
      if (match && gamma_nonzero) {
        std::uint64_t digits = a | b;  // union of the two digit sets
        match = prod.terms.size() == 1 && (*prod.terms.begin())[0] == a + b && digits == a + b;
      }
      if (!match) {
        out.products_ok = false;
        out.first_mismatch = {a, b};
      }
    }
  return out;
}

namespace {

std::vector<IndexWord> all_words(std::size_t dim_v, std::size_t len) {
  std::vector<IndexWord> out;
  IndexWord w(len);
  auto recurse = [&](auto&& self, std::size_t pos) -> void {
    if (pos == len) {
      out.push_back(w);
      return;
    }
    for (std::size_t a = 0; a < dim_v; ++a) {
      w[pos] = static_cast<std::uint8_t>(a);
      self(self, pos + 1);
    }
  };
  recurse(recurse, 0);
  return out;
}

using PairElement = std::set<std::pair<IndexWord, IndexWord>>;

void toggle_pair(PairElement& s, std::pair<IndexWord, IndexWord> p) {
  auto it = s.find(p);
  if (it == s.end())
    s.insert(std::move(p));
  else
    s.erase(it);
}

}  // namespace

ShuffleAxiomReport verify_shuffle_axioms(std::size_t dim_v, std::size_t max_total_length) {
  ShuffleAxiomReport out;
  out.dim_v = dim_v;
  out.max_total_length = max_total_length;
  out.commutative = out.associative = out.self_annihilating = out.bialgebra = out.counit = true;

  std::vector<std::vector<IndexWord>> words(max_total_length + 1);
  for (std::size_t len = 0; len <= max_total_length; ++len) words[len] = all_words(dim_v, len);

  for (std::size_t la = 0; la <= max_total_length; ++la)
    for (std::size_t lb = 0; la + lb <= max_total_length; ++lb)
      for (const auto& u : words[la])
        for (const auto& v : words[lb]) {
          ++out.pairs_checked;
          auto uv = shuffle(dim_v, u, v);
          if (uv != shuffle(dim_v, v, u)) out.commutative = false;
          if (u == v && la > 0 && !uv.terms.empty()) out.self_annihilating = false;
          // compatibility of deconcatenation with the product
          PairElement lhs;
          for (const auto& w : uv.terms)
            for (auto& split : deconcatenate(w)) toggle_pair(lhs, std::move(split));
          PairElement rhs;
          for (const auto& [u1, u2] : deconcatenate(u))
            for (const auto& [v1, v2] : deconcatenate(v)) {
              auto left = shuffle(dim_v, u1, v1);
              auto right = shuffle(dim_v, u2, v2);
              for (const auto& wl : left.terms)
                for (const auto& wr : right.terms) toggle_pair(rhs, {wl, wr});
            }
          if (lhs != rhs) out.bialgebra = false;
        }

  for (std::size_t la = 0; la <= max_total_length; ++la)
    for (std::size_t lb = 0; la + lb <= max_total_length; ++lb)
      for (std::size_t lc = 0; la + lb + lc <= max_total_length; ++lc)
        for (const auto& u : words[la])
          for (const auto& v : words[lb])
            for (const auto& w : words[lc]) {
              ++out.triples_checked;
              TensorWordElement ew{dim_v, {w}};
              TensorWordElement eu{dim_v, {u}};
              if (shuffle(shuffle(dim_v, u, v), ew) != shuffle(eu, shuffle(dim_v, v, w)))
                out.associative = false;
            }

  // counit: the empty-prefix component of every deconcatenation returns the word
  for (std::size_t len = 0; len <= max_total_length; ++len)
    for (const auto& w : words[len]) {
      auto splits = deconcatenate(w);
      if (splits.front().first != IndexWord{} || splits.front().second != w ||
          splits.back().second != IndexWord{} || splits.back().first != w)
        out.counit = false;
    }
  return out;
}

}  // namespace koszul
