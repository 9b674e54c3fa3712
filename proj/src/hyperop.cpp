#include "pomstar/hyperop.hpp"

namespace pomstar {

OperatorPoly apply_plus(const OperatorPoly& a, const OperatorPoly& o) {
  return ssym(a, o);
}

OperatorPoly apply_minus(const OperatorPoly& a, const OperatorPoly& o) {
  return scommutator(a, o).div_exact_i_hbar();
}

HyperOp HyperOp::identity(SpacePtr space) {
  auto n = std::make_shared<Node>(Kind::identity, OperatorPoly::zero(space));
  return HyperOp(std::move(space), std::move(n));
}

namespace {

bool homogeneous(const OperatorPoly& a) {
  return parity(a) != Parity::mixed;
}

}  // namespace

HyperOp HyperOp::plus(const OperatorPoly& a) {
  if (homogeneous(a)) {
    auto n = std::make_shared<Node>(Kind::leaf_plus, a);
    return HyperOp(a.space(), std::move(n));
  }
  return plus(a.parity_part(0)) + plus(a.parity_part(1));
}

HyperOp HyperOp::minus(const OperatorPoly& a) {
  if (homogeneous(a)) {
    auto n = std::make_shared<Node>(Kind::leaf_minus, a);
    return HyperOp(a.space(), std::move(n));
  }
  return minus(a.parity_part(0)) + minus(a.parity_part(1));
}

HyperOp HyperOp::scaled(const Scalar& c) const {
  auto n = std::make_shared<Node>(Kind::scale, OperatorPoly::zero(space_));
  n->weight = c;
  n->kids.push_back(root_);
  return HyperOp(space_, std::move(n));
}

HyperOp operator*(const HyperOp& f, const HyperOp& g) {
  auto n = std::make_shared<HyperOp::Node>(HyperOp::Kind::compose,
                                           OperatorPoly::zero(f.space_));
  n->kids = {f.root_, g.root_};
  return HyperOp(f.space_, std::move(n));
}

HyperOp operator+(const HyperOp& f, const HyperOp& g) {
  auto n = std::make_shared<HyperOp::Node>(HyperOp::Kind::sum,
                                           OperatorPoly::zero(f.space_));
  n->kids = {f.root_, g.root_};
  return HyperOp(f.space_, std::move(n));
}

OperatorPoly HyperOp::apply_node(const Node& n, const OperatorPoly& o) {
  switch (n.kind) {
    case Kind::identity:
      return o;
    case Kind::leaf_plus:
      return apply_plus(n.a, o);
    case Kind::leaf_minus:
      return apply_minus(n.a, o);
    case Kind::scale:
      return apply_node(*n.kids[0], o).times(n.weight);
    case Kind::sum:
      return apply_node(*n.kids[0], o) + apply_node(*n.kids[1], o);
    case Kind::compose:
      return apply_node(*n.kids[0], apply_node(*n.kids[1], o));
  }
  throw std::logic_error("unreachable");
}

OperatorPoly HyperOp::apply(const OperatorPoly& o) const {
  return apply_node(*root_, o);
}

Parity HyperOp::node_parity(const Node& n) {
  switch (n.kind) {
    case Kind::identity:
      return Parity::even;
    case Kind::leaf_plus:
    case Kind::leaf_minus:
      return n.a.is_zero() ? Parity::even : parity(n.a);
    case Kind::scale:
      return node_parity(*n.kids[0]);
    case Kind::sum: {
      Parity a = node_parity(*n.kids[0]), b = node_parity(*n.kids[1]);
      return a == b ? a : Parity::mixed;
    }
    case Kind::compose: {
      Parity a = node_parity(*n.kids[0]), b = node_parity(*n.kids[1]);
      if (a == Parity::mixed || b == Parity::mixed) return Parity::mixed;
      int pa = a == Parity::odd, pb = b == Parity::odd;
      return ((pa + pb) & 1) ? Parity::odd : Parity::even;
    }
  }
  throw std::logic_error("unreachable");
}

Parity HyperOp::grassmann_parity() const {
  return node_parity(*root_);
}

OperatorPoly apply_chain(const std::vector<HyperOp>& chain, const OperatorPoly& o) {
  OperatorPoly r = o;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) r = it->apply(r);
  return r;
}

}  // namespace pomstar
