#include "braidsig/matrix.hpp"

#include "braidsig/error.hpp"

namespace braidsig {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) : IntMatrix(rows.size()) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != size_) throw Error(ErrorCode::Argument, "matrix literal is not square");
    std::size_t c = 0;
    for (std::int64_t v : row) (*this)(r, c++) = v;
    ++r;
  }
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(size_);
  for (std::size_t r = 0; r < size_; ++r) {
    for (std::size_t c = 0; c < size_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& other) const {
  if (other.size_ != size_) throw Error(ErrorCode::Argument, "matrix size mismatch");
  IntMatrix out(size_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] + other.data_[k];
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (other.size_ != size_) throw Error(ErrorCode::Argument, "matrix size mismatch");
  IntMatrix out(size_);
  for (std::size_t r = 0; r < size_; ++r) {
    for (std::size_t k = 0; k < size_; ++k) {
      const std::int64_t a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < size_; ++c) out(r, c) += a * other(k, c);
    }
  }
  return out;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix out(size_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = -data_[k];
  return out;
}

bool IntMatrix::is_symmetric() const {
  for (std::size_t r = 0; r < size_; ++r) {
    for (std::size_t c = r + 1; c < size_; ++c) {
      if ((*this)(r, c) != (*this)(c, r)) return false;
    }
  }
  return true;
}

IntMatrix IntMatrix::permuted(const std::vector<std::size_t>& order) const {
  if (order.size() != size_) throw Error(ErrorCode::Argument, "permutation size mismatch");
  IntMatrix out(size_);
  for (std::size_t a = 0; a < size_; ++a) {
    for (std::size_t b = 0; b < size_; ++b) out(a, b) = (*this)(order[a], order[b]);
  }
  return out;
}

IntMatrix IntMatrix::direct_sum(const IntMatrix& other) const {
  IntMatrix out(size_ + other.size_);
  for (std::size_t r = 0; r < size_; ++r) {
    for (std::size_t c = 0; c < size_; ++c) out(r, c) = (*this)(r, c);
  }
  for (std::size_t r = 0; r < other.size_; ++r) {
    for (std::size_t c = 0; c < other.size_; ++c) out(size_ + r, size_ + c) = other(r, c);
  }
  return out;
}

std::string IntMatrix::to_grid() const {
  std::string out;
  for (std::size_t r = 0; r < size_; ++r) {
    for (std::size_t c = 0; c < size_; ++c) {
      if (c) out += ' ';
      out += std::to_string((*this)(r, c));
    }
    out += '\n';
  }
  return out;
}

}  // namespace braidsig
