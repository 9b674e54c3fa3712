#include "pomstar/scalar.hpp"

#include <sstream>

namespace pomstar {

namespace {

std::string rat_str(const BigRat& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

}  // namespace

std::string GaussRat::str() const {
  if (is_zero()) return "0";
  if (im == 0) return rat_str(re);
  std::string imag;
  if (im == 1) {
    imag = "i";
  } else if (im == -1) {
    imag = "-i";
  } else if (denominator(im) == 1) {
    imag = rat_str(im) + "*i";
  } else if (numerator(im) == 1) {
    imag = "i/" + rat_str(BigRat(denominator(im)));
  } else if (numerator(im) == -1) {
    imag = "-i/" + rat_str(BigRat(denominator(im)));
  } else {
    imag = rat_str(BigRat(numerator(im))) + "*i/" + rat_str(BigRat(denominator(im)));
  }
  if (re == 0) return imag;
  if (imag[0] == '-') return rat_str(re) + imag;
  return rat_str(re) + "+" + imag;
}

Scalar Scalar::hbar_over_2i(unsigned k) {
  // hbar/2i == -i*hbar/2
  GaussRat base(BigRat(0), BigRat(-1, 2));
  GaussRat c(1);
  for (unsigned j = 0; j < k; ++j) c *= base;
  return of(c, k);
}

void Scalar::add(unsigned power, const GaussRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(power, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar Scalar::operator-() const {
  Scalar r;
  for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r = *this;
  for (const auto& [p, c] : o.terms_) r.add(p, c);
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar r = *this;
  for (const auto& [p, c] : o.terms_) r.add(p, -c);
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar r;
  for (const auto& [pa, ca] : terms_)
    for (const auto& [pb, cb] : o.terms_) r.add(pa + pb, ca * cb);
  return r;
}

Scalar Scalar::times(const GaussRat& c) const {
  Scalar r;
  if (c.is_zero()) return r;
  for (const auto& [p, t] : terms_) r.terms_.emplace(p, t * c);
  return r;
}

Scalar Scalar::div_exact_i_hbar() const {
  Scalar r;
  GaussRat minus_i(BigRat(0), BigRat(-1));  // 1/i
  for (const auto& [p, c] : terms_) {
    if (p == 0)
      throw std::domain_error("coefficient not divisible by hbar");
    r.terms_.emplace(p - 1, c * minus_i);
  }
  return r;
}

std::string Scalar::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += "(" + c.str() + ")";
    if (p == 1)
      out += "*hbar";
    else if (p > 1)
      out += "*hbar^" + std::to_string(p);
  }
  return out;
}

BigRat factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return BigRat(f);
}

}  // namespace pomstar
