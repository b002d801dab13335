#pragma once

#include "gha/core/linalg.hpp"

#include <optional>
#include <random>
#include <vector>

namespace gha {

// Small dense rational matrix.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static Mat identity(int n);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Q& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const Q& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator-() const;
    Mat scaled(const Q& s) const;
    Mat& operator+=(const Mat& o);
    Mat& operator-=(const Mat& o);
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

    bool is_zero() const;
    int rank() const;
    std::optional<Mat> inverse() const;

    std::vector<SVec> columns() const;

private:
    int r_ = 0, c_ = 0;
    std::vector<Q> a_;
};

Q random_small_rational(std::mt19937_64& rng, int range = 3);

}  // namespace gha
