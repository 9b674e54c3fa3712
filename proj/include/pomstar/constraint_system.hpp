#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pomstar/exact_linalg.hpp"
#include "pomstar/hyperop.hpp"
#include "pomstar/operator_poly.hpp"

namespace pomstar {

/// Invalid or unsupported constraint input (degenerate bracket matrix,
/// nonlinear constraints without a user-supplied conjugate set, ...).
class ConstraintError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using IntMat = std::vector<std::vector<int>>;

/// Symplectic block matrices for M conjugate pairs of common parity s:
/// upper  [[0, I], [-(-1)^s I, 0]]  and its inverse, lower.
std::pair<IntMat, IntMat> j_matrices(int m, int s);

/// A second-class constraint set together with its associated canonically
/// conjugate set (ACCS): M pairs (xi^a, pi_a) of common parity s whose
/// mutual brackets realize the symplectic matrix exactly.
class ConstraintSystem {
 public:
  /// Builds from explicit ACCS pairs; the pairs are checked for homogeneous
  /// common parity and the constant-bracket relation. `constraints` keeps
  /// the original constraint operators when they differ from the ACCS.
  static ConstraintSystem from_accs(SpacePtr space,
                                    std::vector<std::pair<OperatorPoly, OperatorPoly>> accs,
                                    std::vector<OperatorPoly> constraints = {});

  const SpacePtr& space() const { return space_; }
  int num_pairs() const { return static_cast<int>(xi_.size()); }  // M
  int parity() const { return s_; }
  const std::vector<OperatorPoly>& constraints() const { return constraints_; }
  const OperatorPoly& xi(int a) const { return xi_[a]; }
  const OperatorPoly& pi(int a) const { return pi_[a]; }

  /// Z_alpha: xi^a for alpha = a, pi_a for alpha = a + M (alpha 0-based).
  const OperatorPoly& z(int alpha) const;
  int j_up(int a, int b) const { return j_up_[a][b]; }
  int j_lo(int a, int b) const { return j_lo_[a][b]; }
  const IntMat& j_up() const { return j_up_; }
  const IntMat& j_lo() const { return j_lo_; }

  /// Nonzero entries of J^{alpha beta} as (alpha, beta, value) triples.
  const std::vector<std::tuple<int, int, int>>& j_up_entries() const { return j_entries_; }

  bool linear_accs() const { return linear_; }
  /// Degenerate full-constraint case 2M == 2N (permitted for cross-checks).
  bool full_constraint() const { return 2 * num_pairs() == space_->slots(); }

 private:
  ConstraintSystem() = default;

  SpacePtr space_;
  int s_ = 0;
  bool linear_ = true;
  std::vector<OperatorPoly> constraints_;
  std::vector<OperatorPoly> xi_, pi_;
  IntMat j_up_, j_lo_;
  std::vector<std::tuple<int, int, int>> j_entries_;
};

/// Symplectic Gram-Schmidt construction of an ACCS from homogeneous linear
/// second-class constraints with hbar-free coefficients. Deterministic given
/// input order: the pivot is the first constraint with a nonvanishing
/// bracket. Throws ConstraintError for degenerate (first-class or redundant)
/// sets, nonlinear input, and odd sets whose pairing would need an
/// irrational scaling.
ConstraintSystem build_accs_linear(SpacePtr space, std::vector<OperatorPoly> constraints);

/// [xi^1 .. xi^M, pi_1 .. pi_M]
std::vector<OperatorPoly> symplectic_vector(const ConstraintSystem& sys);

struct AccsReport {
  bool pass = true;
  std::vector<std::string> failures;
  std::string first_counterexample;

  void fail(const std::string& what) {
    pass = false;
    failures.push_back(what);
    if (first_counterexample.empty()) first_counterexample = what;
  }
};

/// Checks the constant-bracket relation exactly and the hyper-operator
/// relations on the probe basis of monomials up to `probe_degree`.
AccsReport validate_accs(const ConstraintSystem& sys, int probe_degree = 3,
                         bool allow_full_constraint = false);

/// (1/i hbar) |u, v| when that bracket is an hbar-free scalar multiple of
/// i hbar; throws ConstraintError otherwise.
GaussRat scalar_bracket(const OperatorPoly& u, const OperatorPoly& v);

}  // namespace pomstar
