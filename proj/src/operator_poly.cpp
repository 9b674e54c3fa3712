#include "pomstar/operator_poly.hpp"

#include <algorithm>
#include <sstream>

namespace pomstar {

namespace {

void require_same_space(const OperatorPoly& x, const OperatorPoly& y) {
  if (*x.space() != *y.space())
    throw std::invalid_argument("operands live on different generator sets");
}

/// Reorder a word of generator slots into normal order, accumulating terms.
/// One adjacent out-of-order pair (a, b) rewrites as
///   a b = (-1)^{eps(a) eps(b)} b a + |a, b|
/// where the bracket is a scalar: -(-1)^s * i hbar for (p_k, q_k), else 0.
/// Words whose normal form repeats an odd generator vanish.
void normal_accumulate(const PhaseSpace& space, std::vector<int>& word, Scalar coef,
                       OperatorPoly::TermMap& out) {
  if (coef.is_zero()) return;
  const int n = space.pairs();
  for (size_t i = 0; i + 1 < word.size(); ++i) {
    int a = word[i], b = word[i + 1];
    if (a <= b) continue;
    int sign = (space.slot_parity(a) & space.slot_parity(b)) ? -1 : 1;

    std::vector<int> swapped = word;
    std::swap(swapped[i], swapped[i + 1]);
    normal_accumulate(space, swapped, sign < 0 ? -coef : coef, out);

    if (a >= n && b == a - n) {
      // p_k q_k with pair k: bracket value -(-1)^s * i hbar
      Scalar bracket = Scalar::i_hbar();
      if (space.slot_parity(a) == 0) bracket = -bracket;
      std::vector<int> contracted;
      contracted.reserve(word.size() - 2);
      contracted.insert(contracted.end(), word.begin(), word.begin() + i);
      contracted.insert(contracted.end(), word.begin() + i + 2, word.end());
      normal_accumulate(space, contracted, coef * bracket, out);
    }
    return;
  }

  Monomial m(space.slots());
  for (size_t i = 0; i < word.size(); ++i) {
    int s = word[i];
    if (space.slot_parity(s) == 1 && i + 1 < word.size() && word[i + 1] == s)
      return;  // odd generator squared
    ++m.exp[s];
  }
  auto [it, inserted] = out.emplace(std::move(m), coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero()) out.erase(it);
  }
}

std::vector<int> monomial_word(const Monomial& m) {
  std::vector<int> word;
  word.reserve(m.degree());
  for (int s = 0; s < static_cast<int>(m.exp.size()); ++s)
    for (uint32_t k = 0; k < m.exp[s]; ++k) word.push_back(s);
  return word;
}

}  // namespace

OperatorPoly OperatorPoly::scalar(SpacePtr space, Scalar c) {
  OperatorPoly r(space);
  r.add_term(Monomial(space->slots()), c);
  return r;
}

OperatorPoly OperatorPoly::generator(SpacePtr space, Generator g) {
  if (g.pair < 0 || g.pair >= space->pairs())
    throw std::invalid_argument("generator pair index out of range");
  OperatorPoly r(space);
  Monomial m(space->slots());
  m.exp[space->slot_of(g)] = 1;
  r.add_term(m, Scalar::one());
  return r;
}

OperatorPoly OperatorPoly::position(SpacePtr space, int pair_1based) {
  return generator(space, Generator{GenKind::position, pair_1based - 1});
}

OperatorPoly OperatorPoly::momentum(SpacePtr space, int pair_1based) {
  return generator(space, Generator{GenKind::momentum, pair_1based - 1});
}

OperatorPoly OperatorPoly::monomial(SpacePtr space, Monomial m, Scalar c) {
  if (static_cast<int>(m.exp.size()) != space->slots())
    throw std::invalid_argument("monomial width does not match phase space");
  for (int s = 0; s < space->slots(); ++s)
    if (space->slot_parity(s) == 1 && m.exp[s] > 1)
      throw std::invalid_argument("odd generator exponent exceeds 1");
  OperatorPoly r(space);
  r.add_term(m, c);
  return r;
}

int OperatorPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

void OperatorPoly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OperatorPoly OperatorPoly::operator-() const {
  OperatorPoly r(space_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

OperatorPoly OperatorPoly::operator+(const OperatorPoly& o) const {
  OperatorPoly r = *this;
  r += o;
  return r;
}

OperatorPoly OperatorPoly::operator-(const OperatorPoly& o) const {
  OperatorPoly r = *this;
  r -= o;
  return r;
}

OperatorPoly& OperatorPoly::operator+=(const OperatorPoly& o) {
  require_same_space(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

OperatorPoly& OperatorPoly::operator-=(const OperatorPoly& o) {
  require_same_space(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

OperatorPoly OperatorPoly::times(const Scalar& c) const {
  OperatorPoly r(space_);
  for (const auto& [m, t] : terms_) r.add_term(m, t * c);
  return r;
}

OperatorPoly OperatorPoly::div_exact_i_hbar() const {
  OperatorPoly r(space_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c.div_exact_i_hbar());
  return r;
}

OperatorPoly OperatorPoly::parity_part(int p) const {
  OperatorPoly r(space_);
  for (const auto& [m, c] : terms_)
    if (m.parity(*space_) == p) r.terms_.emplace(m, c);
  return r;
}

std::string OperatorPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest degree first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    std::string mono;
    for (int s = 0; s < static_cast<int>(it->first.exp.size()); ++s) {
      if (it->first.exp[s] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += space_->name(space_->generator_at(s));
      if (it->first.exp[s] > 1) mono += "^" + std::to_string(it->first.exp[s]);
    }
    const Scalar& c = it->second;
    bool coef_is_one = (c == Scalar::one());
    if (mono.empty()) {
      os << c.str();
    } else if (coef_is_one) {
      os << mono;
    } else if (c.terms().size() == 1) {
      const auto& [pw, g] = *c.terms().begin();
      if (g == GaussRat(1) && pw > 0) {
        os << (pw == 1 ? "hbar" : "hbar^" + std::to_string(pw)) << "*" << mono;
      } else {
        os << "(" << g.str() << ")*";
        if (pw == 1)
          os << "hbar*";
        else if (pw > 1)
          os << "hbar^" << pw << "*";
        os << mono;
      }
    } else {
      os << "(" << c.str() << ")*" << mono;
    }
  }
  return os.str();
}

OperatorPoly mul(const OperatorPoly& x, const OperatorPoly& y) {
  require_same_space(x, y);
  OperatorPoly::TermMap out;
  const PhaseSpace& space = *x.space();
  for (const auto& [mx, cx] : x.terms()) {
    std::vector<int> wx = monomial_word(mx);
    for (const auto& [my, cy] : y.terms()) {
      std::vector<int> word = wx;
      std::vector<int> wy = monomial_word(my);
      word.insert(word.end(), wy.begin(), wy.end());
      normal_accumulate(space, word, cx * cy, out);
    }
  }
  OperatorPoly r(x.space());
  for (auto& [m, c] : out) r.add_term(m, c);
  return r;
}

namespace {

/// Bilinear graded combination  X Y + sign_factor(eps_X, eps_Y) * Y X,
/// splitting mixed parities.
OperatorPoly graded_combine(const OperatorPoly& x, const OperatorPoly& y, bool anti) {
  OperatorPoly r = OperatorPoly::zero(x.space());
  for (int px = 0; px < 2; ++px) {
    OperatorPoly xp = x.parity_part(px);
    if (xp.is_zero()) continue;
    for (int py = 0; py < 2; ++py) {
      OperatorPoly yp = y.parity_part(py);
      if (yp.is_zero()) continue;
      int koszul = (px & py) ? -1 : 1;
      int sign = anti ? -koszul : koszul;
      OperatorPoly t = mul(xp, yp);
      OperatorPoly u = mul(yp, xp);
      r += sign < 0 ? t - u : t + u;
    }
  }
  return r;
}

}  // namespace

OperatorPoly scommutator(const OperatorPoly& x, const OperatorPoly& y) {
  require_same_space(x, y);
  return graded_combine(x, y, /*anti=*/true);
}

OperatorPoly ssym(const OperatorPoly& x, const OperatorPoly& y) {
  require_same_space(x, y);
  return graded_combine(x, y, /*anti=*/false).times(Scalar(GaussRat(1, 2)));
}

Parity parity(const OperatorPoly& x) {
  if (x.is_zero()) return Parity::even;
  bool has_even = false, has_odd = false;
  for (const auto& [m, c] : x.terms())
    (m.parity(*x.space()) == 0 ? has_even : has_odd) = true;
  if (has_even && has_odd) return Parity::mixed;
  return has_odd ? Parity::odd : Parity::even;
}

std::vector<std::pair<unsigned, OperatorPoly>> hbar_coeffs(const OperatorPoly& x) {
  std::map<unsigned, OperatorPoly> buckets;
  for (const auto& [m, c] : x.terms()) {
    for (const auto& [power, g] : c.terms()) {
      auto it = buckets.find(power);
      if (it == buckets.end()) it = buckets.emplace(power, OperatorPoly::zero(x.space())).first;
      it->second.add_term(m, Scalar(g));
    }
  }
  std::vector<std::pair<unsigned, OperatorPoly>> out;
  out.reserve(buckets.size());
  for (auto& [power, poly] : buckets) out.emplace_back(power, std::move(poly));
  return out;
}

}  // namespace pomstar
