#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pomstar/phase_space.hpp"
#include "pomstar/scalar.hpp"

namespace pomstar {

enum class Parity { even, odd, mixed };

/// Exponent vector in the canonical slot order: all positions (ascending
/// pair), then all momenta (ascending pair). Odd slots carry exponent <= 1.
struct Monomial {
  std::vector<uint32_t> exp;

  explicit Monomial(int slots = 0) : exp(slots, 0) {}

  int degree() const {
    int d = 0;
    for (auto e : exp) d += static_cast<int>(e);
    return d;
  }
  bool is_unit() const { return degree() == 0; }
  int parity(const PhaseSpace& space) const {
    int p = 0;
    for (int s = 0; s < static_cast<int>(exp.size()); ++s)
      if (space.slot_parity(s) == 1) p += static_cast<int>(exp[s]);
    return p & 1;
  }

  /// Graded-lexicographic order; also the rendering order (reversed).
  bool operator<(const Monomial& o) const {
    int da = degree(), db = o.degree();
    if (da != db) return da < db;
    return exp < o.exp;
  }
  bool operator==(const Monomial& o) const { return exp == o.exp; }
};

/// Normal-ordered noncommutative superpolynomial over a phase space, with
/// hbar-graded Gaussian-rational coefficients. The term map is the canonical
/// form: no zero coefficients, monomials in normal order. Values are
/// immutable in spirit: every operation returns a fresh polynomial.
class OperatorPoly {
 public:
  using TermMap = std::map<Monomial, Scalar>;

  explicit OperatorPoly(SpacePtr space) : space_(std::move(space)) {}

  static OperatorPoly zero(SpacePtr space) { return OperatorPoly(std::move(space)); }
  static OperatorPoly scalar(SpacePtr space, Scalar c);
  static OperatorPoly one(SpacePtr space) { return scalar(std::move(space), Scalar::one()); }
  static OperatorPoly generator(SpacePtr space, Generator g);
  static OperatorPoly position(SpacePtr space, int pair_1based);
  static OperatorPoly momentum(SpacePtr space, int pair_1based);
  static OperatorPoly monomial(SpacePtr space, Monomial m, Scalar c);

  const SpacePtr& space() const { return space_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_scalar() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
  }
  Scalar scalar_part() const {
    auto it = terms_.find(Monomial(space_->slots()));
    return it == terms_.end() ? Scalar::zero() : it->second;
  }
  int degree() const;  // max total degree, -1 for zero

  OperatorPoly operator-() const;
  OperatorPoly operator+(const OperatorPoly& o) const;
  OperatorPoly operator-(const OperatorPoly& o) const;
  OperatorPoly& operator+=(const OperatorPoly& o);
  OperatorPoly& operator-=(const OperatorPoly& o);
  OperatorPoly times(const Scalar& c) const;
  OperatorPoly div_exact_i_hbar() const;

  bool operator==(const OperatorPoly& o) const {
    return *space_ == *o.space_ && terms_ == o.terms_;
  }
  bool operator!=(const OperatorPoly& o) const { return !(*this == o); }
  /// Total order for use as an ordered-container key (same space assumed).
  bool operator<(const OperatorPoly& o) const { return terms_ < o.terms_; }

  void add_term(const Monomial& m, const Scalar& c);

  /// The parity-p component (p in {0,1}).
  OperatorPoly parity_part(int p) const;

  std::string str() const;

 private:
  SpacePtr space_;
  TermMap terms_;
};

/// Noncommutative product in canonical normal order, exact coefficients.
OperatorPoly mul(const OperatorPoly& x, const OperatorPoly& y);

/// Graded commutator  X Y - (-1)^{eps(X) eps(Y)} Y X.
/// Mixed-parity inputs are split into homogeneous parts and recombined.
OperatorPoly scommutator(const OperatorPoly& x, const OperatorPoly& y);

/// Graded symmetrized product  (X Y + (-1)^{eps(X) eps(Y)} Y X) / 2.
OperatorPoly ssym(const OperatorPoly& x, const OperatorPoly& y);

Parity parity(const OperatorPoly& x);

/// Decomposition X = sum_n hbar^n X_n with hbar-free X_n, ascending n,
/// zero parts omitted.
std::vector<std::pair<unsigned, OperatorPoly>> hbar_coeffs(const OperatorPoly& x);

}  // namespace pomstar
