#include "koszul/milnor.hpp"

#include <algorithm>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

// F_{p^e} as F_p[x]/(f) with f found by trial division; elements are
// coefficient vectors of length e
struct SmallField {
  std::uint64_t p = 0;
  std::size_t e = 0;
  std::vector<std::uint64_t> modulus;  // monic, length e+1

  using Elt = std::vector<std::uint64_t>;

  Elt zero() const { return Elt(e, 0); }
  Elt one() const {
    Elt r(e, 0);
    r[0] = 1;
    return r;
  }

  Elt add(const Elt& a, const Elt& b) const {
    Elt r(e);
    for (std::size_t i = 0; i < e; ++i) r[i] = (a[i] + b[i]) % p;
    return r;
  }

  Elt sub(const Elt& a, const Elt& b) const {
    Elt r(e);
    for (std::size_t i = 0; i < e; ++i) r[i] = (a[i] + p - b[i]) % p;
    return r;
  }

  Elt mul(const Elt& a, const Elt& b) const {
    std::vector<std::uint64_t> prod(2 * e, 0);
    for (std::size_t i = 0; i < e; ++i)
      for (std::size_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    // reduce by the monic modulus
    for (std::size_t d = 2 * e; d-- > e;) {
      std::uint64_t c = prod[d];
      if (!c) continue;
      prod[d] = 0;
      for (std::size_t i = 0; i < e; ++i)
        prod[d - e + i] = (prod[d - e + i] + (p - c % p) * modulus[i]) % p;
    }
    return Elt(prod.begin(), prod.begin() + e);
  }

  Elt pow(Elt a, std::uint64_t n) const {
    Elt r = one();
    while (n) {
      if (n & 1) r = mul(r, a);
      a = mul(a, a);
      n >>= 1;
    }
    return r;
  }

  bool is_zero(const Elt& a) const {
    return std::all_of(a.begin(), a.end(), [](std::uint64_t c) { return c == 0; });
  }

  std::uint64_t order() const {
    std::uint64_t q = 1;
    for (std::size_t i = 0; i < e; ++i) q *= p;
    return q;
  }

  // enumeration index <-> element, base-p digits
  Elt element(std::uint64_t idx) const {
    Elt r(e);
    for (std::size_t i = 0; i < e; ++i) {
      r[i] = idx % p;
      idx /= p;
    }
    return r;
  }
};

// polynomials over F_p for the irreducibility search, lowest degree first
using Poly = std::vector<std::uint64_t>;

bool poly_is_zero(const Poly& a) {
  return std::all_of(a.begin(), a.end(), [](std::uint64_t c) { return c == 0; });
}

// no monic factor of degree 1..deg/2
bool irreducible(const Poly& f, std::uint64_t p) {
  std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g(d + 1, 0);
      g[d] = 1;
      std::uint64_t rest = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = rest % p;
        rest /= p;
      }
      // trial division: remainder of f mod g
      Poly r = f;
      while (r.size() >= g.size() && !poly_is_zero(r)) {
        std::uint64_t c = r.back();
        if (c) {
          std::size_t shift = r.size() - g.size();
          for (std::size_t i = 0; i < g.size(); ++i)
            r[shift + i] = (r[shift + i] + (p - c % p) * g[i]) % p;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
      }
      if (poly_is_zero(r) || r.empty()) return false;
    }
  }
  return true;
}

SmallField make_field(std::uint64_t p, std::size_t e) {
  SmallField f;
  f.p = p;
  f.e = e;
  if (e == 1) {
    f.modulus = {0, 1};  // unused beyond shape
    return f;
  }
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < e; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly g(e + 1, 0);
    g[e] = 1;
    std::uint64_t rest = idx;
    for (std::size_t i = 0; i < e; ++i) {
      g[i] = rest % p;
      rest /= p;
    }
    if (irreducible(g, p)) {
      f.modulus.assign(g.begin(), g.end());
      return f;
    }
  }
  throw std::logic_error("no irreducible polynomial found");
}

struct Factorization {
  std::uint64_t p = 0;
  std::size_t e = 0;
};

Factorization prime_power(std::uint64_t q) {
  if (q < 2) throw schema_error("field order must be at least 3");
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  std::size_t e = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) throw schema_error("field order must be a prime power");
  return {p, e};
}

}  // namespace

QuadraticPresentation steinberg_subspace(const FieldSpec& f) {
  if (const auto* fin = std::get_if<FiniteFieldSpec>(&f)) {
    std::uint64_t q = fin->q;
    if (q % 2 == 0) throw schema_error("field order must be odd: characteristic 2 has no square-class content here");
    if (q > kMaxAmbient) throw schema_error("field order too large to enumerate");
    auto [p, e] = prime_power(q);
    SmallField field = make_field(p, e);
    // the square-class group of an odd finite field has one nontrivial class
    auto is_square = [&](const SmallField::Elt& a) {
      auto r = field.pow(a, (q - 1) / 2);
      return r == field.one();
    };
    BitMatrix rows(q > 2 ? static_cast<std::size_t>(q - 2) : 0, 1);
    std::size_t r = 0;
    for (std::uint64_t idx = 0; idx < q; ++idx) {
      SmallField::Elt a = field.element(idx);
      if (field.is_zero(a) || a == field.one()) continue;
      SmallField::Elt b = field.sub(field.one(), a);
      // the symbol lands on u (x) u exactly when both entries are nonsquare
      if (!is_square(a) && !is_square(b)) rows.set(r, 0, true);
      ++r;
    }
    return make_presentation(1, rows, {"u"});
  }
  const auto& exp = std::get<ExplicitFieldSpec>(f);
  std::size_t d = exp.classes.size();
  if (d == 0) throw schema_error("explicit field spec needs at least one square class");
  BitMatrix rows(exp.steinberg_pairs.size(), d * d);
  for (std::size_t r = 0; r < exp.steinberg_pairs.size(); ++r) {
    auto [i, j] = exp.steinberg_pairs[r];
    if (i >= d || j >= d) throw schema_error("steinberg pair index out of range");
    rows.set(r, i * d + j, true);
  }
  return make_presentation(d, rows, exp.classes);
}

MilnorResult milnor_mod2(const FieldSpec& f, std::size_t max_degree) {
  MilnorResult out;
  out.presentation = steinberg_subspace(f);
  out.dims = algebra_dims(out.presentation, max_degree);
  out.koszul = koszul_certificate(out.presentation, max_degree);
  return out;
}

}  // namespace koszul
