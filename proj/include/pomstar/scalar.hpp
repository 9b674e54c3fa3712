#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace pomstar {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Exact element of Q(i): re + im*i with arbitrary-precision rationals.
struct GaussRat {
  BigRat re{0};
  BigRat im{0};

  GaussRat() = default;
  GaussRat(BigRat r) : re(std::move(r)) {}
  GaussRat(BigRat r, BigRat i) : re(std::move(r)), im(std::move(i)) {}
  GaussRat(long r) : re(r) {}
  GaussRat(long num, long den) : re(BigRat(num, den)) {}

  static GaussRat unit_i() { return GaussRat(BigRat(0), BigRat(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  bool is_imaginary() const { return re == 0 && im != 0; }

  GaussRat operator-() const { return {-re, -im}; }
  GaussRat operator+(const GaussRat& o) const { return {re + o.re, im + o.im}; }
  GaussRat operator-(const GaussRat& o) const { return {re - o.re, im - o.im}; }
  GaussRat operator*(const GaussRat& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussRat conj() const { return {re, -im}; }
  BigRat norm() const { return re * re + im * im; }

  GaussRat inverse() const {
    BigRat n = norm();
    if (n == 0) throw std::domain_error("division by zero Gaussian rational");
    return {re / n, -im / n};
  }
  GaussRat operator/(const GaussRat& o) const { return *this * o.inverse(); }

  GaussRat& operator+=(const GaussRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }

  bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GaussRat& o) const { return !(*this == o); }
  bool operator<(const GaussRat& o) const {
    if (re != o.re) return re < o.re;
    return im < o.im;
  }

  std::string str() const;
};

/// Exact polynomial in hbar over Q(i). hbar is a central formal variable;
/// only non-negative powers occur.
class Scalar {
 public:
  Scalar() = default;
  Scalar(GaussRat c) { set(0, std::move(c)); }
  Scalar(long n) { set(0, GaussRat(n)); }

  static Scalar zero() { return {}; }
  static Scalar one() { return Scalar(GaussRat(1)); }
  static Scalar unit_i() { return Scalar(GaussRat::unit_i()); }
  static Scalar of(GaussRat c, unsigned hbar_power) {
    Scalar s;
    s.set(hbar_power, std::move(c));
    return s;
  }
  static Scalar hbar(unsigned power = 1) { return of(GaussRat(1), power); }
  static Scalar i_hbar() { return of(GaussRat::unit_i(), 1); }
  /// (hbar/2i)^k, the prefactor of the expansion series.
  static Scalar hbar_over_2i(unsigned k);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
  }
  /// Constant term (hbar^0 coefficient).
  GaussRat constant() const {
    auto it = terms_.find(0);
    return it == terms_.end() ? GaussRat() : it->second;
  }
  const std::map<unsigned, GaussRat>& terms() const { return terms_; }
  unsigned min_power() const { return terms_.begin()->first; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar times(const GaussRat& c) const;
  /// Division by an hbar-free nonzero Gaussian rational.
  Scalar div(const GaussRat& c) const { return times(c.inverse()); }

  /// Exact division by i*hbar. Throws if any term has hbar power 0.
  Scalar div_exact_i_hbar() const;

  bool operator==(const Scalar& o) const { return terms_ == o.terms_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  bool operator<(const Scalar& o) const { return terms_ < o.terms_; }

  std::string str() const;

 private:
  void set(unsigned power, GaussRat c) {
    if (!c.is_zero()) terms_[power] = std::move(c);
  }
  void add(unsigned power, const GaussRat& c);

  // power -> nonzero coefficient
  std::map<unsigned, GaussRat> terms_;
};

/// n! as an exact rational.
BigRat factorial(unsigned n);

}  // namespace pomstar
