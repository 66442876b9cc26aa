#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace braidsig {

/// Dense square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t size) : size_(size), data_(size * size, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  std::size_t size() const noexcept { return size_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * size_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * size_ + c]; }

  IntMatrix transposed() const;
  IntMatrix operator+(const IntMatrix& other) const;
  IntMatrix operator*(const IntMatrix& other) const;
  IntMatrix operator-() const;
  bool is_symmetric() const;

  /// Simultaneous row/column permutation: result(a, b) = (*this)(order[a], order[b]).
  IntMatrix permuted(const std::vector<std::size_t>& order) const;
  IntMatrix direct_sum(const IntMatrix& other) const;

  /// Rows of space-separated integers, one line per row.
  std::string to_grid() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::int64_t> data_;
};

}  // namespace braidsig
