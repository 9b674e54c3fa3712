#include "pomstar/constraint_system.hpp"

#include <algorithm>
#include <sstream>

namespace pomstar {

namespace {

bool is_linear_form(const OperatorPoly& t) {
  for (const auto& [m, c] : t.terms()) {
    if (m.degree() != 1) return false;
    if (c.terms().size() != 1 || c.terms().begin()->first != 0) return false;
  }
  return !t.is_zero();
}

int homogeneous_parity_or_throw(const OperatorPoly& t, const char* what) {
  Parity p = parity(t);
  if (p == Parity::mixed)
    throw ConstraintError(std::string(what) + " has mixed Grassmann parity");
  return p == Parity::odd ? 1 : 0;
}

/// Pair-orthogonalization: remove the (xi, pi) components of w so that both
/// brackets vanish. sigma = b(pi, xi) = -(-1)^s.
OperatorPoly reduce_against_pair(const OperatorPoly& w, const OperatorPoly& xi,
                                 const OperatorPoly& pi, int s) {
  GaussRat c = scalar_bracket(xi, w);
  GaussRat a = scalar_bracket(pi, w);
  GaussRat sigma = (s == 0) ? GaussRat(-1) : GaussRat(1);
  // w' = w - sigma^{-1} a * xi - c * pi ; sigma is +-1.
  OperatorPoly out = w;
  out -= xi.times(Scalar(a * sigma));
  out -= pi.times(Scalar(c));
  return out;
}

}  // namespace

GaussRat scalar_bracket(const OperatorPoly& u, const OperatorPoly& v) {
  OperatorPoly br = scommutator(u, v);
  if (br.is_zero()) return GaussRat();
  if (!br.is_scalar())
    throw ConstraintError("bracket is not a scalar multiple of the identity: " + br.str());
  Scalar s = br.scalar_part();
  if (s.terms().size() != 1 || s.terms().begin()->first != 1)
    throw ConstraintError("bracket is not an exact multiple of i*hbar: " + br.str());
  return s.terms().begin()->second * GaussRat(BigRat(0), BigRat(-1));  // divide by i
}

std::pair<IntMat, IntMat> j_matrices(int m, int s) {
  if (m < 1) throw ConstraintError("need at least one conjugate pair");
  int n = 2 * m;
  IntMat up(n, std::vector<int>(n, 0)), lo(n, std::vector<int>(n, 0));
  int sgn = (s == 0) ? -1 : 1;  // -(-1)^s
  for (int a = 0; a < m; ++a) {
    up[a][a + m] = 1;
    up[a + m][a] = sgn;
    lo[a][a + m] = sgn;
    lo[a + m][a] = 1;
  }
  return {up, lo};
}

ConstraintSystem ConstraintSystem::from_accs(
    SpacePtr space, std::vector<std::pair<OperatorPoly, OperatorPoly>> accs,
    std::vector<OperatorPoly> constraints) {
  if (accs.empty()) throw ConstraintError("empty conjugate set");
  int m = static_cast<int>(accs.size());
  if (2 * m > space->slots())
    throw ConstraintError("more constraint pairs than canonical pairs");

  ConstraintSystem sys;
  sys.space_ = std::move(space);
  int s = homogeneous_parity_or_throw(accs[0].first, "conjugate set member");
  for (auto& [xi, pi] : accs) {
    if (homogeneous_parity_or_throw(xi, "conjugate set member") != s ||
        homogeneous_parity_or_throw(pi, "conjugate set member") != s)
      throw ConstraintError("mixed-parity conjugate sets are not supported");
    sys.linear_ = sys.linear_ && is_linear_form(xi) && is_linear_form(pi);
    sys.xi_.push_back(std::move(xi));
    sys.pi_.push_back(std::move(pi));
  }
  sys.s_ = s;
  auto [up, lo] = j_matrices(m, s);
  sys.j_up_ = std::move(up);
  sys.j_lo_ = std::move(lo);
  for (int a = 0; a < 2 * m; ++a)
    for (int b = 0; b < 2 * m; ++b)
      if (sys.j_up_[a][b] != 0) sys.j_entries_.emplace_back(a, b, sys.j_up_[a][b]);

  if (constraints.empty()) {
    constraints.reserve(2 * m);
    for (const auto& x : sys.xi_) constraints.push_back(x);
    for (const auto& p : sys.pi_) constraints.push_back(p);
  }
  sys.constraints_ = std::move(constraints);
  // The symplectic bracket relation is deliberately not enforced here:
  // validate_accs gates it and reports counterexamples.
  return sys;
}

const OperatorPoly& ConstraintSystem::z(int alpha) const {
  int m = num_pairs();
  return alpha < m ? xi_[alpha] : pi_[alpha - m];
}

ConstraintSystem build_accs_linear(SpacePtr space, std::vector<OperatorPoly> constraints) {
  if (constraints.empty()) throw ConstraintError("no constraints given");
  if (constraints.size() % 2 != 0)
    throw ConstraintError("second-class sets contain an even number of constraints");
  for (const auto& t : constraints) {
    if (!is_linear_form(t))
      throw ConstraintError(
          "nonlinear constraint: supply the conjugate pairs directly (--accs)");
  }
  int s = homogeneous_parity_or_throw(constraints[0], "constraint");
  for (const auto& t : constraints)
    if (homogeneous_parity_or_throw(t, "constraint") != s)
      throw ConstraintError("mixed-parity constraint sets are not supported");

  const int n2 = static_cast<int>(constraints.size());
  GMat bracket(n2, GVec(n2));
  for (int a = 0; a < n2; ++a)
    for (int b = 0; b < n2; ++b) bracket[a][b] = scalar_bracket(constraints[a], constraints[b]);
  if (gmat_det(bracket).is_zero())
    throw ConstraintError("degenerate bracket matrix: constraints are not second-class");

  std::vector<OperatorPoly> rest = constraints;
  std::vector<std::pair<OperatorPoly, OperatorPoly>> pairs;
  auto b = [](const OperatorPoly& u, const OperatorPoly& v) { return scalar_bracket(u, v); };

  int guard = 4 * n2 * n2 + 8;
  while (!rest.empty()) {
    if (--guard < 0) throw ConstraintError("constraint pairing did not terminate");
    rest.erase(std::remove_if(rest.begin(), rest.end(),
                              [](const OperatorPoly& w) { return w.is_zero(); }),
               rest.end());
    if (rest.empty()) break;

    // Preferred pivot: first isotropic member with a nonvanishing bracket.
    int ui = -1, vi = -1;
    for (int i = 0; i < static_cast<int>(rest.size()) && ui < 0; ++i) {
      if (!b(rest[i], rest[i]).is_zero()) continue;
      for (int j = 0; j < static_cast<int>(rest.size()); ++j) {
        if (j == i) continue;
        if (!b(rest[i], rest[j]).is_zero()) {
          ui = i;
          vi = j;
          break;
        }
      }
    }
    if (ui >= 0) {
      OperatorPoly xi = rest[ui];
      GaussRat scale = b(xi, rest[vi]);
      OperatorPoly pi = rest[vi].times(Scalar(scale.inverse()));
      if (s == 1) {
        GaussRat d = b(pi, pi);
        if (!d.is_zero()) pi -= xi.times(Scalar(d / GaussRat(2)));
      }
      std::vector<OperatorPoly> next;
      for (int j = 0; j < static_cast<int>(rest.size()); ++j) {
        if (j == ui || j == vi) continue;
        next.push_back(reduce_against_pair(rest[j], xi, pi, s));
      }
      pairs.emplace_back(std::move(xi), std::move(pi));
      rest = std::move(next);
      continue;
    }

    if (s == 0)
      throw ConstraintError("degenerate bracket matrix: constraints are not second-class");

    // Odd case with no isotropic pivot: reduce against the first member with
    // a nonvanishing self-bracket, then pair two such members exactly.
    int di = -1;
    for (int i = 0; i < static_cast<int>(rest.size()); ++i)
      if (!b(rest[i], rest[i]).is_zero()) {
        di = i;
        break;
      }
    if (di < 0)
      throw ConstraintError("degenerate bracket matrix: constraints are not second-class");
    OperatorPoly u = rest[di];
    GaussRat d = b(u, u);
    bool changed = false;
    for (int j = 0; j < static_cast<int>(rest.size()); ++j) {
      if (j == di) continue;
      GaussRat c = b(u, rest[j]);
      if (c.is_zero()) continue;
      rest[j] -= u.times(Scalar(c / d));
      changed = true;
    }
    int ei = -1;
    for (int j = 0; j < static_cast<int>(rest.size()); ++j) {
      if (j == di || rest[j].is_zero()) continue;
      if (!b(rest[j], rest[j]).is_zero()) {
        ei = j;
        break;
      }
    }
    if (ei >= 0) {
      OperatorPoly v = rest[ei];
      GaussRat e = b(v, v);
      auto t = gauss_sqrt(-(d / e));
      if (!t)
        throw ConstraintError(
            "odd constraint pairing needs an irrational scaling: supply the conjugate "
            "pairs directly (--accs)");
      OperatorPoly xi = u + v.times(Scalar(*t));
      OperatorPoly pi = (u - v.times(Scalar(*t))).times(Scalar((GaussRat(2) * d).inverse()));
      std::vector<OperatorPoly> next;
      for (int j = 0; j < static_cast<int>(rest.size()); ++j) {
        if (j == di || j == ei) continue;
        next.push_back(reduce_against_pair(rest[j], xi, pi, s));
      }
      pairs.emplace_back(std::move(xi), std::move(pi));
      rest = std::move(next);
      continue;
    }
    if (!changed)
      throw ConstraintError("degenerate bracket matrix: constraints are not second-class");
    // Otherwise the loop continues: the reduced members now expose an
    // isotropic pivot, and the anisotropic one is paired later.
  }

  return ConstraintSystem::from_accs(std::move(space), std::move(pairs), std::move(constraints));
}

std::vector<OperatorPoly> symplectic_vector(const ConstraintSystem& sys) {
  std::vector<OperatorPoly> zs;
  int n2 = 2 * sys.num_pairs();
  zs.reserve(n2);
  for (int a = 0; a < n2; ++a) zs.push_back(sys.z(a));
  return zs;
}

namespace {

std::vector<OperatorPoly> probe_basis(const SpacePtr& space, int max_degree) {
  std::vector<OperatorPoly> probes;
  std::vector<uint32_t> exp(space->slots(), 0);
  // enumerate exponent vectors of total degree <= max_degree
  std::function<void(int, int)> rec = [&](int slot, int budget) {
    if (slot == space->slots()) {
      Monomial m(space->slots());
      m.exp = exp;
      probes.push_back(OperatorPoly::monomial(space, m, Scalar::one()));
      return;
    }
    int cap = space->slot_parity(slot) == 1 ? 1 : budget;
    for (int e = 0; e <= cap; ++e) {
      exp[slot] = e;
      rec(slot + 1, budget - e);
    }
    exp[slot] = 0;
  };
  rec(0, max_degree);
  return probes;
}

}  // namespace

AccsReport validate_accs(const ConstraintSystem& sys, int probe_degree,
                         bool allow_full_constraint) {
  AccsReport report;
  const int m = sys.num_pairs();
  const int n2 = 2 * m;
  const int s = sys.parity();

  if (!allow_full_constraint && sys.full_constraint())
    report.fail("2M < 2N violated: every canonical pair is constrained");

  for (int a = 0; a < m; ++a) {
    if (parity(sys.xi(a)) == Parity::mixed || parity(sys.pi(a)) == Parity::mixed ||
        (!sys.xi(a).is_zero() && (parity(sys.xi(a)) == Parity::odd) != (s == 1)) ||
        (!sys.pi(a).is_zero() && (parity(sys.pi(a)) == Parity::odd) != (s == 1)))
      report.fail("conjugate pair " + std::to_string(a + 1) + " is not parity " +
                  std::to_string(s));
  }

  // |Z_a, Z_b| = i hbar J^{ab}, exactly.
  for (int a = 0; a < n2; ++a)
    for (int b = 0; b < n2; ++b) {
      OperatorPoly lhs = scommutator(sys.z(a), sys.z(b));
      OperatorPoly rhs =
          OperatorPoly::scalar(sys.space(), Scalar::i_hbar().times(GaussRat(sys.j_up(a, b))));
      if (lhs != rhs)
        report.fail("bracket (Z_" + std::to_string(a + 1) + ", Z_" + std::to_string(b + 1) +
                    ") = " + lhs.str() + ", expected " + rhs.str());
    }

  // Hyper-operator relations on a probe basis.
  auto probes = probe_basis(sys.space(), probe_degree);
  int sign = (s == 1) ? -1 : 1;  // (-1)^{s s} in the graded hyper-bracket
  for (int a = 0; a < n2; ++a)
    for (int b = 0; b < n2; ++b) {
      for (const auto& o : probes) {
        auto check = [&](const OperatorPoly& lhs, const OperatorPoly& rhs, const char* label) {
          if (lhs != rhs)
            report.fail(std::string(label) + " fails at (" + std::to_string(a + 1) + "," +
                        std::to_string(b + 1) + ") on probe " + o.str());
        };
        const OperatorPoly& za = sys.z(a);
        const OperatorPoly& zb = sys.z(b);
        OperatorPoly pp = apply_plus(za, apply_plus(zb, o));
        OperatorPoly pp2 = apply_plus(zb, apply_plus(za, o));
        check(sign < 0 ? pp + pp2 : pp - pp2, OperatorPoly::zero(sys.space()),
              "|Z+_a, Z+_b| = 0");
        OperatorPoly mm = apply_minus(za, apply_minus(zb, o));
        OperatorPoly mm2 = apply_minus(zb, apply_minus(za, o));
        check(sign < 0 ? mm + mm2 : mm - mm2, OperatorPoly::zero(sys.space()),
              "|Z-_a, Z-_b| = 0");
        OperatorPoly want = o.times(Scalar(GaussRat(sys.j_up(a, b))));
        OperatorPoly pm = apply_plus(za, apply_minus(zb, o));
        OperatorPoly mp = apply_minus(zb, apply_plus(za, o));
        check(sign < 0 ? pm + mp : pm - mp, want, "|Z+_a, Z-_b| = J^{ab}");
        OperatorPoly mp1 = apply_minus(za, apply_plus(zb, o));
        OperatorPoly pm1 = apply_plus(zb, apply_minus(za, o));
        check(sign < 0 ? mp1 + pm1 : mp1 - pm1, want, "|Z-_a, Z+_b| = J^{ab}");
        if (!report.pass && report.failures.size() > 16) return report;  // enough evidence
      }
    }
  return report;
}

}  // namespace pomstar
