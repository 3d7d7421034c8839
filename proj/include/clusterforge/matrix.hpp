#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace clusterforge {

using cplx = std::complex<double>;

// Max elementwise deviation of U†U from the identity tolerated by apply_*.
inline constexpr double kUnitaryTolerance = 1e-12;

// Dense row-major N x N complex matrix with value semantics. Only the two
// sizes used by gate constructors are instantiated.
template <std::size_t N>
struct Mat {
  std::array<cplx, N * N> m{};

  cplx& operator()(std::size_t r, std::size_t c) { return m[N * r + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return m[N * r + c]; }

  static Mat identity() {
    Mat out;
    for (std::size_t i = 0; i < N; ++i) out(i, i) = 1.0;
    return out;
  }
};

using Mat2 = Mat<2>;
using Mat4 = Mat<4>;

template <std::size_t N>
inline Mat<N> operator*(const Mat<N>& a, const Mat<N>& b) {
  Mat<N> out;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t k = 0; k < N; ++k) {
      const cplx ark = a(r, k);
      for (std::size_t c = 0; c < N; ++c) out(r, c) += ark * b(k, c);
    }
  return out;
}

template <std::size_t N>
inline Mat<N> operator*(cplx s, const Mat<N>& a) {
  Mat<N> out = a;
  for (auto& v : out.m) v *= s;
  return out;
}

template <std::size_t N>
inline Mat<N> operator+(const Mat<N>& a, const Mat<N>& b) {
  Mat<N> out = a;
  for (std::size_t i = 0; i < N * N; ++i) out.m[i] += b.m[i];
  return out;
}

template <std::size_t N>
inline Mat<N> operator-(const Mat<N>& a, const Mat<N>& b) {
  Mat<N> out = a;
  for (std::size_t i = 0; i < N * N; ++i) out.m[i] -= b.m[i];
  return out;
}

template <std::size_t N>
inline Mat<N> adjoint(const Mat<N>& a) {
  Mat<N> out;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) out(r, c) = std::conj(a(c, r));
  return out;
}

template <std::size_t N>
inline cplx trace(const Mat<N>& a) {
  cplx t = 0.0;
  for (std::size_t i = 0; i < N; ++i) t += a(i, i);
  return t;
}

// kron(a, b): the first factor indexes the high bit of the composite index.
inline Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      out(r, c) = a(r >> 1, c >> 1) * b(r & 1, c & 1);
  return out;
}

template <std::size_t N>
inline double max_abs_diff(const Mat<N>& a, const Mat<N>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < N * N; ++i) d = std::max(d, std::abs(a.m[i] - b.m[i]));
  return d;
}

template <std::size_t N>
inline double frobenius_norm(const Mat<N>& a) {
  double s = 0.0;
  for (const auto& v : a.m) s += std::norm(v);
  return std::sqrt(s);
}

template <std::size_t N>
inline bool is_unitary(const Mat<N>& a, double tol = kUnitaryTolerance) {
  return max_abs_diff(adjoint(a) * a, Mat<N>::identity()) <= tol;
}

// Max elementwise deviation between a and b after aligning global phase.
// The aligning phase comes from tr(b†a); when the trace vanishes no single
// phase can make the matrices close, so the unaligned deviation is returned.
template <std::size_t N>
inline double phase_aligned_distance(const Mat<N>& a, const Mat<N>& b) {
  const cplx t = trace(adjoint(b) * a);
  if (std::abs(t) < 1e-12) return max_abs_diff(a, b);
  const cplx phase = t / std::abs(t);
  return max_abs_diff(a, phase * b);
}

}  // namespace clusterforge
