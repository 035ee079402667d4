#ifndef KLSPARSE_PAIR_MATRIX_H_
#define KLSPARSE_PAIR_MATRIX_H_

#include <cstdint>
#include <vector>

namespace klsparse {

// n x n bit matrix stored row-major in 64-bit words.
class PairMatrix {
 public:
  PairMatrix() = default;
  explicit PairMatrix(int n) { Reset(n); }

  void Reset(int n) {
    n_ = n;
    words_per_row_ = (n + 63) / 64;
    bits_.assign(static_cast<std::size_t>(words_per_row_) * n, 0);
  }

  int size() const { return n_; }

  bool Get(int row, int col) const {
    return (bits_[Word(row, col)] >> (col & 63)) & 1u;
  }

  // Sets the bit; returns whether it was already set.
  bool Set(int row, int col) {
    std::uint64_t& word = bits_[Word(row, col)];
    const std::uint64_t mask = std::uint64_t{1} << (col & 63);
    const bool was_set = (word & mask) != 0;
    word |= mask;
    return was_set;
  }

  bool IsSymmetric() const {
    for (int r = 0; r < n_; ++r) {
      for (int c = r + 1; c < n_; ++c) {
        if (Get(r, c) != Get(c, r)) return false;
      }
    }
    return true;
  }

 private:
  std::size_t Word(int row, int col) const {
    return static_cast<std::size_t>(row) * words_per_row_ + (col >> 6);
  }

  int n_ = 0;
  int words_per_row_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace klsparse

#endif  // KLSPARSE_PAIR_MATRIX_H_
