#pragma once

#include <memory>
#include <vector>

#include "pomstar/operator_poly.hpp"

namespace pomstar {

/// A^+ O = {A, O}: graded symmetrization with A.
OperatorPoly apply_plus(const OperatorPoly& a, const OperatorPoly& o);

/// A^- O = (1/i hbar) |A, O|: graded commutator with A, exactly divided by
/// i hbar. Throws if the bracket is not divisible (unreachable for canonical
/// polynomial operands).
OperatorPoly apply_minus(const OperatorPoly& a, const OperatorPoly& o);

/// Composable chain of elementary superoperators: leaves are the raising or
/// lowering action of a homogeneous-parity operator; nodes are composition,
/// scalar multiple, and sum. Application is linear and evaluated on demand.
class HyperOp {
 public:
  static HyperOp identity(SpacePtr space);
  /// Leaves split a mixed-parity A into homogeneous parts.
  static HyperOp plus(const OperatorPoly& a);
  static HyperOp minus(const OperatorPoly& a);

  HyperOp scaled(const Scalar& c) const;
  /// (f * g)(O) = f(g(O)): right factor applied first.
  friend HyperOp operator*(const HyperOp& f, const HyperOp& g);
  friend HyperOp operator+(const HyperOp& f, const HyperOp& g);

  OperatorPoly apply(const OperatorPoly& o) const;

  /// Grassmann parity of the map (0, 1, or mixed for sums of unlike parts).
  Parity grassmann_parity() const;

  const SpacePtr& space() const { return space_; }

 private:
  enum class Kind { identity, leaf_plus, leaf_minus, scale, sum, compose };

  struct Node {
    Kind kind;
    OperatorPoly a;  // leaf payload (homogeneous parity)
    Scalar weight;   // scale payload
    std::vector<std::shared_ptr<const Node>> kids;

    explicit Node(Kind k, OperatorPoly payload) : kind(k), a(std::move(payload)) {}
  };

  explicit HyperOp(SpacePtr space, std::shared_ptr<const Node> root)
      : space_(std::move(space)), root_(std::move(root)) {}

  static OperatorPoly apply_node(const Node& n, const OperatorPoly& o);
  static Parity node_parity(const Node& n);

  SpacePtr space_;
  std::shared_ptr<const Node> root_;
};

/// Right-to-left application of a chain given as a vector: chain[0] is the
/// leftmost (outermost) factor, matching written operator products.
OperatorPoly apply_chain(const std::vector<HyperOp>& chain, const OperatorPoly& o);

}  // namespace pomstar
