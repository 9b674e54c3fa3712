#include "pomstar/exact_linalg.hpp"

namespace pomstar {

GMat gmat_identity(int n) {
  GMat m(n, GVec(n));
  for (int i = 0; i < n; ++i) m[i][i] = GaussRat(1);
  return m;
}

GMat gmat_mul(const GMat& a, const GMat& b) {
  int n = static_cast<int>(a.size());
  int k = static_cast<int>(b.size());
  int p = k ? static_cast<int>(b[0].size()) : 0;
  GMat r(n, GVec(p));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < p; ++j) {
      GaussRat acc;
      for (int t = 0; t < k; ++t) acc += a[i][t] * b[t][j];
      r[i][j] = acc;
    }
  return r;
}

GaussRat gmat_det(GMat m) {
  int n = static_cast<int>(m.size());
  GaussRat det(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (!m[row][col].is_zero()) {
        pivot = row;
        break;
      }
    if (pivot < 0) return GaussRat();
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    GaussRat inv = m[col][col].inverse();
    for (int row = col + 1; row < n; ++row) {
      if (m[row][col].is_zero()) continue;
      GaussRat f = m[row][col] * inv;
      for (int j = col; j < n; ++j) m[row][j] = m[row][j] - f * m[col][j];
    }
  }
  return det;
}

std::optional<GMat> gmat_inverse(GMat m) {
  int n = static_cast<int>(m.size());
  GMat inv = gmat_identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (!m[row][col].is_zero()) {
        pivot = row;
        break;
      }
    if (pivot < 0) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    GaussRat f = m[col][col].inverse();
    for (int j = 0; j < n; ++j) {
      m[col][j] *= f;
      inv[col][j] *= f;
    }
    for (int row = 0; row < n; ++row) {
      if (row == col || m[row][col].is_zero()) continue;
      GaussRat g = m[row][col];
      for (int j = 0; j < n; ++j) {
        m[row][j] = m[row][j] - g * m[col][j];
        inv[row][j] = inv[row][j] - g * inv[col][j];
      }
    }
  }
  return inv;
}

std::optional<BigRat> rat_sqrt(const BigRat& v) {
  if (v < 0) return std::nullopt;
  if (v == 0) return BigRat(0);
  BigInt num = numerator(v), den = denominator(v);
  BigInt rn = boost::multiprecision::sqrt(num);
  BigInt rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return BigRat(rn, rd);
}

std::optional<GaussRat> gauss_sqrt(const GaussRat& z) {
  if (z.is_zero()) return GaussRat();
  if (z.im == 0) {
    if (z.re > 0) {
      auto r = rat_sqrt(z.re);
      if (r) return GaussRat(*r);
      return std::nullopt;
    }
    auto r = rat_sqrt(-z.re);
    if (r) return GaussRat(BigRat(0), *r);
    return std::nullopt;
  }
  // (x + iy)^2 = z  =>  x^2 = (re + |z|)/2,  y = im / (2x)
  auto n = rat_sqrt(z.norm());
  if (!n) return std::nullopt;
  auto x = rat_sqrt((z.re + *n) / 2);
  if (!x || *x == 0) return std::nullopt;
  return GaussRat(*x, z.im / (2 * *x));
}

}  // namespace pomstar
