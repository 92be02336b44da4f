#include "koszul/f2.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace koszul {

BitMatrix BitMatrix::from_rows(std::size_t cols, const std::vector<std::vector<int>>& rows01) {
  BitMatrix m(rows01.size(), cols);
  for (std::size_t r = 0; r < rows01.size(); ++r) {
    if (rows01[r].size() != cols) throw std::invalid_argument("row length != cols");
    for (std::size_t c = 0; c < cols; ++c)
      if (rows01[r][c]) m.set(r, c, true);
  }
  return m;
}

bool BitMatrix::row_zero(std::size_t r) const {
  auto v = row(r);
  for (word_t w : v)
    if (w) return false;
  return true;
}

void xor_into(std::span<word_t> dst, std::span<const word_t> src) {
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] ^= src[i];
}

long leading_bit(std::span<const word_t> v) {
  for (std::size_t wi = 0; wi < v.size(); ++wi)
    if (v[wi]) return static_cast<long>(wi * kWordBits + __builtin_ctzll(v[wi]));
  return -1;
}

bool bit_test(std::span<const word_t> v, std::size_t i) {
  return (v[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void bit_flip(std::span<word_t> v, std::size_t i) { v[i / kWordBits] ^= word_t{1} << (i % kWordBits); }

EchelonBasis::EchelonBasis(std::size_t cols)
    : cols_(cols), stride_(words_for(cols)), pivot_row_of_col_(cols, -1) {}

void EchelonBasis::reduce(std::span<word_t> v) const {
  // Ascending scan. XORing a pivot row only touches bits at or after its
  // pivot, so one pass clears every pivot column.
  for (std::size_t wi = 0; wi < stride_; ++wi) {
    word_t kept = 0;  // bits of this word confirmed to sit on non-pivot columns
    while (word_t rem = v[wi] & ~kept) {
      std::size_t b = static_cast<std::size_t>(__builtin_ctzll(rem));
      std::size_t col = wi * kWordBits + b;
      std::int32_t pr = pivot_row_of_col_[col];
      if (pr >= 0)
        xor_into(v.subspan(wi), std::span<const word_t>(rows_[pr]).subspan(wi));
      else
        kept |= word_t{1} << b;
    }
  }
}

bool EchelonBasis::contains(std::span<const word_t> v) const {
  std::vector<word_t> tmp(v.begin(), v.end());
  reduce(tmp);
  return leading_bit(tmp) < 0;
}

bool EchelonBasis::insert(std::span<const word_t> v) {
  std::vector<word_t> tmp(v.begin(), v.end());
  reduce(tmp);
  long lead = leading_bit(tmp);
  if (lead < 0) return false;
  std::size_t pivot = static_cast<std::size_t>(lead);
  // clear the new pivot column from the existing rows
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (bit_test(rows_[r], pivot)) xor_into(rows_[r], tmp);
  pivot_row_of_col_[pivot] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(std::move(tmp));
  row_pivot_.push_back(pivot);
  return true;
}

void EchelonBasis::insert_rows(const BitMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (full()) return;
    insert(m.row(r));
  }
}

BitMatrix EchelonBasis::matrix() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return row_pivot_[a] < row_pivot_[b]; });
  BitMatrix m(rows_.size(), cols_);
  for (std::size_t i = 0; i < order.size(); ++i)
    std::copy(rows_[order[i]].begin(), rows_[order[i]].end(), m.row(i).begin());
  return m;
}

Subspace EchelonBasis::to_subspace() const {
  Subspace s(cols_);
  s.basis_ = matrix();
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s(ambient);
  BitMatrix id(ambient, ambient);
  for (std::size_t i = 0; i < ambient; ++i) id.set(i, i, true);
  s.basis_ = std::move(id);
  return s;
}

bool Subspace::contains(std::span<const word_t> v) const {
  std::vector<word_t> tmp(v.begin(), v.end());
  // same ascending elimination as EchelonBasis::reduce, against the stored RREF
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    long p = leading_bit(basis_.row(r));
    if (p >= 0 && bit_test(tmp, static_cast<std::size_t>(p))) xor_into(tmp, basis_.row(r));
  }
  return leading_bit(tmp) < 0;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) return false;
  for (std::size_t r = 0; r < other.basis_.rows(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

Subspace echelonize(const BitMatrix& m) {
  EchelonBasis e(m.cols());
  e.insert_rows(m);
  return e.to_subspace();
}

std::size_t rank_of(const BitMatrix& m) {
  // forward elimination only; enough for the rank
  std::vector<std::vector<word_t>> rows;
  std::vector<std::int32_t> pivot_row(m.cols(), -1);
  std::vector<word_t> tmp(m.stride());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto src = m.row(r);
    std::copy(src.begin(), src.end(), tmp.begin());
    long lead;
    while ((lead = leading_bit(std::span<const word_t>(tmp))) >= 0) {
      std::int32_t pr = pivot_row[static_cast<std::size_t>(lead)];
      if (pr < 0) break;
      xor_into(tmp, rows[pr]);
    }
    if (lead >= 0) {
      pivot_row[static_cast<std::size_t>(lead)] = static_cast<std::int32_t>(rows.size());
      rows.push_back(tmp);
    }
  }
  return rows.size();
}

Subspace kernel(const BitMatrix& m) {
  std::size_t n = m.cols();
  Subspace row_space = echelonize(m);
  const BitMatrix& rref = row_space.basis();
  std::vector<bool> is_pivot(n, false);
  std::vector<std::size_t> pivot_of_row(rref.rows());
  for (std::size_t r = 0; r < rref.rows(); ++r) {
    std::size_t p = static_cast<std::size_t>(leading_bit(rref.row(r)));
    pivot_of_row[r] = p;
    is_pivot[p] = true;
  }
  // one kernel vector per free column: v_f = e_f + sum of e_{pivot(r)} over rows with bit f
  BitMatrix ker(n - rref.rows(), n);
  std::size_t k = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    ker.set(k, f, true);
    for (std::size_t r = 0; r < rref.rows(); ++r)
      if (rref.get(r, f)) ker.set(k, pivot_of_row[r], true);
    ++k;
  }
  return echelonize(ker);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
  EchelonBasis e(a.ambient_dim());
  e.insert_rows(a.basis());
  e.insert_rows(b.basis());
  return e.to_subspace();
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
  std::size_t n = a.ambient_dim();
  if (a.is_full() || b.is_zero()) return b;
  if (b.is_full() || a.is_zero()) return a;
  // Zassenhaus: reduce [u|u] for u in a and [w|0] for w in b; rows of the
  // echelon form whose left half vanished carry a basis of the intersection
  // in the right half.
  EchelonBasis e(2 * n);
  std::size_t stride = words_for(n);
  std::vector<word_t> tmp(words_for(2 * n));
  auto place = [&](std::span<const word_t> src, std::size_t offset) {
    for_each_set_bit(src, [&](std::size_t i) { bit_flip(tmp, offset + i); });
  };
  for (std::size_t r = 0; r < a.dim(); ++r) {
    std::fill(tmp.begin(), tmp.end(), 0);
    place(a.basis().row(r), 0);
    place(a.basis().row(r), n);
    e.insert(tmp);
  }
  for (std::size_t r = 0; r < b.dim(); ++r) {
    std::fill(tmp.begin(), tmp.end(), 0);
    place(b.basis().row(r), 0);
    e.insert(tmp);
  }
  BitMatrix rows = e.matrix();
  EchelonBasis out(n);
  std::vector<word_t> right(stride);
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    long lead = leading_bit(rows.row(r));
    if (lead < 0 || static_cast<std::size_t>(lead) < n) continue;
    std::fill(right.begin(), right.end(), 0);
    for_each_set_bit(rows.row(r), [&](std::size_t i) { bit_flip(right, i - n); });
    out.insert(right);
  }
  return out.to_subspace();
}

Subspace perp(const Subspace& s) { return kernel(s.basis()); }

Subspace span_of(std::size_t ambient, const std::vector<std::vector<int>>& rows01) {
  return echelonize(BitMatrix::from_rows(ambient, rows01));
}

}  // namespace koszul
