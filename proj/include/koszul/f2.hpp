#pragma once

// Dense exact linear algebra over GF(2). Matrices are bit-packed into 64-bit
// words; subspaces are stored as canonical reduced row-echelon bases with
// strictly increasing pivot columns, so equality of subspaces is plain
// memberwise equality of the structs.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace koszul {

using word_t = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

// Bits beyond `cols` in the last word of each row stay zero.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_(words_for(cols)), bits_(rows * stride_, 0) {}

  // rows01 holds 0/1 entries, each row of length `cols`
  static BitMatrix from_rows(std::size_t cols, const std::vector<std::vector<int>>& rows01);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t stride() const { return stride_; }

  bool get(std::size_t r, std::size_t c) const {
    return (bits_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    word_t& w = bits_[r * stride_ + c / kWordBits];
    word_t mask = word_t{1} << (c % kWordBits);
    if (v)
      w |= mask;
    else
      w &= ~mask;
  }

  std::span<const word_t> row(std::size_t r) const { return {bits_.data() + r * stride_, stride_}; }
  std::span<word_t> row(std::size_t r) { return {bits_.data() + r * stride_, stride_}; }

  bool row_zero(std::size_t r) const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<word_t> bits_;
};

void xor_into(std::span<word_t> dst, std::span<const word_t> src);
// index of the lowest set bit, or -1 when zero
long leading_bit(std::span<const word_t> v);
bool bit_test(std::span<const word_t> v, std::size_t i);
void bit_flip(std::span<word_t> v, std::size_t i);

template <class F>
void for_each_set_bit(std::span<const word_t> v, F&& f) {
  for (std::size_t wi = 0; wi < v.size(); ++wi) {
    word_t w = v[wi];
    while (w) {
      f(wi * kWordBits + static_cast<std::size_t>(__builtin_ctzll(w)));
      w &= w - 1;
    }
  }
}

class EchelonBasis;

class Subspace {
 public:
  Subspace() = default;  // zero subspace of the zero ambient space
  explicit Subspace(std::size_t ambient) : ambient_dim_(ambient), basis_(0, ambient) {}

  static Subspace zero(std::size_t ambient) { return Subspace(ambient); }
  static Subspace full(std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.rows(); }
  const BitMatrix& basis() const { return basis_; }

  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_dim_; }

  bool contains(std::span<const word_t> v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_dim_ = 0;
  BitMatrix basis_;  // canonical RREF, pivots strictly increasing
  friend class EchelonBasis;
};

// Incremental reduced-row-echelon builder. Inserted rows are kept fully
// reduced against each other, so matrix() is the canonical basis of the span.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t cols);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rank() == cols_; }

  // canonical representative of v modulo the current span (in place)
  void reduce(std::span<word_t> v) const;
  bool contains(std::span<const word_t> v) const;
  // returns true when v was independent and the rank grew
  bool insert(std::span<const word_t> v);
  void insert_rows(const BitMatrix& m);

  BitMatrix matrix() const;  // rows sorted by pivot column
  Subspace to_subspace() const;

 private:
  std::size_t cols_;
  std::size_t stride_;
  std::vector<std::vector<word_t>> rows_;
  std::vector<std::size_t> row_pivot_;
  std::vector<std::int32_t> pivot_row_of_col_;
};

// canonical basis of the row space
Subspace echelonize(const BitMatrix& m);
std::size_t rank_of(const BitMatrix& m);

// {v : every row r of m has <r, v> = 0}
Subspace kernel(const BitMatrix& m);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

// annihilator under the coordinate dot pairing
Subspace perp(const Subspace& s);

// convenience: canonical span of explicit 0/1 rows
Subspace span_of(std::size_t ambient, const std::vector<std::vector<int>>& rows01);

}  // namespace koszul
