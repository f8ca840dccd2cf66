#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ssd/seqcore.hpp"

namespace ssd {

/// Dense row-major 0/1 matrix.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), bits_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool at(std::size_t r, std::size_t c) const { return bits_[r * cols_ + c] != 0; }
  void set(std::size_t r, std::size_t c, bool v) { bits_[r * cols_ + c] = v ? 1 : 0; }

  Sequence row(std::size_t r) const {
    std::vector<Symbol> out(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out[c] = at(r, c);
    return Sequence(std::move(out));
  }
  Sequence column(std::size_t c) const {
    std::vector<Symbol> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
    return Sequence(std::move(out));
  }

  BitMatrix transpose() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
    return t;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> bits_;
};

}  // namespace ssd
