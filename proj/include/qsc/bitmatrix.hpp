#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qsc {

using Word = std::uint64_t;

inline constexpr std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

inline int popcount(std::span<const Word> row) {
  int total = 0;
  for (Word w : row) total += std::popcount(w);
  return total;
}

inline int and_popcount(std::span<const Word> a, std::span<const Word> b) {
  int total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

inline void xor_into(std::span<Word> dst, std::span<const Word> src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

inline bool test_bit(std::span<const Word> row, std::size_t c) { return (row[c >> 6] >> (c & 63)) & 1u; }

/// Dense row-major 0/1 matrix, each row packed into 64-bit words.
/// Bits past `cols()` in the last word of a row are always zero.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), wpr_(words_for(cols)), data_(rows * wpr_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return wpr_; }

  bool get(std::size_t r, std::size_t c) const { return (data_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u; }
  void set(std::size_t r, std::size_t c, bool value = true) {
    Word& w = data_[r * wpr_ + (c >> 6)];
    const Word mask = Word{1} << (c & 63);
    w = value ? (w | mask) : (w & ~mask);
  }
  void flip(std::size_t r, std::size_t c) { data_[r * wpr_ + (c >> 6)] ^= Word{1} << (c & 63); }

  std::span<const Word> row(std::size_t r) const { return {data_.data() + r * wpr_, wpr_}; }
  std::span<Word> row(std::size_t r) { return {data_.data() + r * wpr_, wpr_}; }

  int row_weight(std::size_t r) const { return popcount(row(r)); }

  void append_row(std::span<const Word> bits) {
    data_.insert(data_.end(), bits.begin(), bits.end());
    ++rows_;
  }

  BitMatrix transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (get(r, c)) t.set(c, r);
    return t;
  }

  /// Clears the padding bits of every row after bulk writes.
  void mask_padding() {
    if (cols_ % 64 == 0 || wpr_ == 0) return;
    const Word mask = (Word{1} << (cols_ % 64)) - 1;
    for (std::size_t r = 0; r < rows_; ++r) data_[r * wpr_ + wpr_ - 1] &= mask;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t wpr_ = 0;
  std::vector<Word> data_;
};

}  // namespace qsc
