#pragma once

#include <cstddef>
#include <vector>

#include "semnet/error.hpp"

namespace semnet {

// Dense row-major |U| x |N| matrix. Decision and link data at this problem
// scale never justify a linear-algebra dependency.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), v_(rows * cols, fill) {}

  double& operator()(std::size_t r, std::size_t c) { return v_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return v_[r * cols_ + c]; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool same_shape(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

  const std::vector<double>& values() const { return v_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> v_;
};

inline void require_shape(const Mat& m, std::size_t rows, std::size_t cols, const char* name) {
  if (m.rows() != rows || m.cols() != cols)
    throw Error::argument(std::string(name) + ": expected " + std::to_string(rows) + "x" +
                          std::to_string(cols) + " matrix, got " + std::to_string(m.rows()) + "x" +
                          std::to_string(m.cols()));
}

}  // namespace semnet
