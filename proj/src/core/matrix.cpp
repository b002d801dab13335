#include "gha/core/matrix.hpp"

namespace gha {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (c_ != o.r_) throw InputError("matrix product shape mismatch");
    Mat m(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Q& x = (*this)(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.c_; ++j)
                if (o(k, j) != 0) m(i, j) += x * o(k, j);
        }
    return m;
}

Mat Mat::operator+(const Mat& o) const {
    Mat m = *this;
    m += o;
    return m;
}

Mat Mat::operator-(const Mat& o) const {
    Mat m = *this;
    m -= o;
    return m;
}

Mat Mat::operator-() const { return scaled(-1); }

Mat Mat::scaled(const Q& s) const {
    Mat m = *this;
    for (auto& x : m.a_) x *= s;
    return m;
}

Mat& Mat::operator+=(const Mat& o) {
    if (r_ != o.r_ || c_ != o.c_) throw InputError("matrix sum shape mismatch");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

Mat& Mat::operator-=(const Mat& o) {
    if (r_ != o.r_ || c_ != o.c_) throw InputError("matrix sum shape mismatch");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

bool Mat::operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

bool Mat::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

std::vector<SVec> Mat::columns() const {
    std::vector<SVec> cols(c_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j)
            if ((*this)(i, j) != 0) cols[j].emplace(i, (*this)(i, j));
    return cols;
}

int Mat::rank() const { return gha::rank(columns()); }

std::optional<Mat> Mat::inverse() const {
    if (r_ != c_) return std::nullopt;
    int n = r_;
    Mat a = *this, inv = identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (a(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return std::nullopt;
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        Q p = a(col, col);
        for (int j = 0; j < n; ++j) {
            a(col, j) /= p;
            inv(col, j) /= p;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            Q f = a(i, col);
            for (int j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

Q random_small_rational(std::mt19937_64& rng, int range) {
    std::uniform_int_distribution<int> num(-range, range);
    std::uniform_int_distribution<int> den(1, 2);
    Q q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

}  // namespace gha
