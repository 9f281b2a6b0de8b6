#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace ctx {

/// Dense row-major 0/1 matrix.
class BoolMatrix {
public:
  BoolMatrix() = default;
  BoolMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), bits_(rows * cols, false) {}
  BoolMatrix(std::initializer_list<std::initializer_list<int>> init);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool at(std::size_t r, std::size_t c) const { return bits_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, bool v = true) { bits_[r * cols_ + c] = v; }

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<bool> bits_;
};

}  // namespace ctx
