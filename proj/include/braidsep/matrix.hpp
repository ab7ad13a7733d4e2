#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "braidsep/errors.hpp"

namespace braidsep {

using Complex = std::complex<double>;

// A matrix counts as singular when |det| < kSingularRelTol * scale^N with
// scale the largest entry magnitude. Scale-aware so that large-magnitude
// parameter choices are not flagged as singular.
inline constexpr double kSingularRelTol = 1e-12;

// Dense N x N complex matrix, row-major. Value type: all operations return
// new matrices.
template <int N>
class Mat {
  static_assert(N == 3 || N == 6, "only the 3x3 and 6x6 shapes are used");

 public:
  Mat() = default;  // zero matrix

  static Mat identity() {
    Mat m;
    for (int i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  Complex& operator()(int i, int j) {
    return e_[static_cast<std::size_t>(i) * N + j];
  }
  const Complex& operator()(int i, int j) const {
    return e_[static_cast<std::size_t>(i) * N + j];
  }

  friend Mat operator*(const Mat& x, const Mat& y) {
    Mat out;
    for (int i = 0; i < N; ++i) {
      for (int k = 0; k < N; ++k) {
        const Complex xik = x(i, k);
        if (xik == Complex{}) continue;
        for (int j = 0; j < N; ++j) out(i, j) += xik * y(k, j);
      }
    }
    return out;
  }

  friend Mat operator+(const Mat& x, const Mat& y) {
    Mat out;
    for (std::size_t n = 0; n < x.e_.size(); ++n) out.e_[n] = x.e_[n] + y.e_[n];
    return out;
  }

  friend Mat operator-(const Mat& x, const Mat& y) {
    Mat out;
    for (std::size_t n = 0; n < x.e_.size(); ++n) out.e_[n] = x.e_[n] - y.e_[n];
    return out;
  }

  friend Mat operator*(Complex s, const Mat& x) {
    Mat out;
    for (std::size_t n = 0; n < x.e_.size(); ++n) out.e_[n] = s * x.e_[n];
    return out;
  }

  friend Mat operator-(const Mat& x) { return Complex(-1.0) * x; }

  friend bool operator==(const Mat& x, const Mat& y) { return x.e_ == y.e_; }

 private:
  std::array<Complex, static_cast<std::size_t>(N) * N> e_{};
};

using Mat3 = Mat<3>;
using Mat6 = Mat<6>;

template <int N>
Complex trace(const Mat<N>& m) {
  Complex t;
  for (int i = 0; i < N; ++i) t += m(i, i);
  return t;
}

template <int N>
double max_abs(const Mat<N>& m) {
  double worst = 0.0;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) worst = std::max(worst, std::abs(m(i, j)));
  return worst;
}

template <int N>
double max_abs_diff(const Mat<N>& x, const Mat<N>& y) {
  return max_abs(x - y);
}

// Determinant by Gaussian elimination with partial (row) pivoting on entry
// magnitude.
template <int N>
Complex determinant(Mat<N> m) {
  Complex det = 1.0;
  for (int col = 0; col < N; ++col) {
    int pivot = col;
    for (int r = col + 1; r < N; ++r)
      if (std::abs(m(r, col)) > std::abs(m(pivot, col))) pivot = r;
    if (m(pivot, col) == Complex{}) return Complex{};
    if (pivot != col) {
      for (int j = 0; j < N; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (int r = col + 1; r < N; ++r) {
      const Complex factor = m(r, col) / m(col, col);
      if (factor == Complex{}) continue;
      for (int j = col; j < N; ++j) m(r, j) -= factor * m(col, j);
    }
  }
  return det;
}

// Inverse by Gauss-Jordan elimination with partial pivoting. Throws
// SingularMatrixError (reporting |det| and the threshold) when the input is
// singular or numerically close to it.
template <int N>
Mat<N> inverse(Mat<N> m) {
  const double scale = max_abs(m);
  const double threshold = kSingularRelTol * std::pow(scale, N);
  Mat<N> inv = Mat<N>::identity();
  Complex det = 1.0;
  for (int col = 0; col < N; ++col) {
    int pivot = col;
    for (int r = col + 1; r < N; ++r)
      if (std::abs(m(r, col)) > std::abs(m(pivot, col))) pivot = r;
    if (m(pivot, col) == Complex{})
      throw SingularMatrixError(0.0, threshold);
    if (pivot != col) {
      for (int j = 0; j < N; ++j) {
        std::swap(m(pivot, j), m(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
      det = -det;
    }
    const Complex p = m(col, col);
    det *= p;
    for (int j = 0; j < N; ++j) {
      m(col, j) /= p;
      inv(col, j) /= p;
    }
    for (int r = 0; r < N; ++r) {
      if (r == col) continue;
      const Complex factor = m(r, col);
      if (factor == Complex{}) continue;
      for (int j = 0; j < N; ++j) {
        m(r, j) -= factor * m(col, j);
        inv(r, j) -= factor * inv(col, j);
      }
    }
  }
  if (std::abs(det) < threshold)
    throw SingularMatrixError(std::abs(det), threshold);
  return inv;
}

// m^k by binary exponentiation; negative k goes through inverse(m) and
// therefore throws SingularMatrixError on singular input.
template <int N>
Mat<N> power(const Mat<N>& m, long long k) {
  if (k == 0) return Mat<N>::identity();
  Mat<N> base = k > 0 ? m : inverse(m);
  unsigned long long e =
      k > 0 ? static_cast<unsigned long long>(k)
            : static_cast<unsigned long long>(-(k + 1)) + 1ull;
  Mat<N> acc = Mat<N>::identity();
  while (e > 0) {
    if (e & 1ull) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

// Left-to-right product of a nonempty list.
template <int N>
Mat<N> product(std::span<const Mat<N>> factors) {
  if (factors.empty()) throw ParamError("product of an empty matrix list");
  Mat<N> acc = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) acc = acc * factors[i];
  return acc;
}

// Assembles (A  sB; sC  D) with s the off-diagonal sign, +1 or -1.
Mat6 block_compose(const Mat3& A, const Mat3& B, const Mat3& C, const Mat3& D,
                   int off_diagonal_sign);

// Inverse of block_compose with sign +1: returns {A, B, C, D}.
std::array<Mat3, 4> block_split(const Mat6& m);

// Complex literals in the form "RE", "IMi", "RE+IMi" or "RE-IMi" with no
// spaces, e.g. "7.3", "2-3i", "1.5+i", "10.2+10.3i". Rejects NaN and
// infinities.
Complex parse_complex(std::string_view text);

// Canonical rendering accepted back by parse_complex, e.g. "2-3i".
std::string format_complex(Complex z, int precision = 10);

}  // namespace braidsep
