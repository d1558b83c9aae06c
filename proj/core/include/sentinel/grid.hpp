#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace sentinel {

// Flat row-major 2-D container.
template <typename T>
class Grid2 {
  public:
    Grid2() = default;
    Grid2(int rows, int cols, T fill = T{})
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

    T& operator()(int r, int c) { return data_[idx(r, c)]; }
    const T& operator()(int r, int c) const { return data_[idx(r, c)]; }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    std::vector<T>& data() { return data_; }
    const std::vector<T>& data() const { return data_; }

    bool operator==(const Grid2&) const = default;

  private:
    std::size_t idx(int r, int c) const {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return static_cast<std::size_t>(r) * cols_ + c;
    }
    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> data_;
};

// Flat row-major 3-D container (outer, mid, inner).
template <typename T>
class Grid3 {
  public:
    Grid3() = default;
    Grid3(int d0, int d1, int d2, T fill = T{})
        : d0_(d0), d1_(d1), d2_(d2),
          data_(static_cast<std::size_t>(d0) * d1 * d2, fill) {}

    T& operator()(int i, int j, int k) { return data_[idx(i, j, k)]; }
    const T& operator()(int i, int j, int k) const { return data_[idx(i, j, k)]; }

    int dim0() const { return d0_; }
    int dim1() const { return d1_; }
    int dim2() const { return d2_; }
    std::size_t size() const { return data_.size(); }
    std::vector<T>& data() { return data_; }
    const std::vector<T>& data() const { return data_; }

    bool operator==(const Grid3&) const = default;

  private:
    std::size_t idx(int i, int j, int k) const {
        assert(i >= 0 && i < d0_ && j >= 0 && j < d1_ && k >= 0 && k < d2_);
        return (static_cast<std::size_t>(i) * d1_ + j) * d2_ + k;
    }
    int d0_ = 0, d1_ = 0, d2_ = 0;
    std::vector<T> data_;
};

}  // namespace sentinel
