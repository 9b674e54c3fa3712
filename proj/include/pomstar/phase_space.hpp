#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace pomstar {

enum class GenKind { position, momentum };

/// One canonical generator: position or momentum of a given pair.
/// Pair indices are 0-based internally; display names are 1-based.
struct Generator {
  GenKind kind;
  int pair;

  bool operator==(const Generator& o) const { return kind == o.kind && pair == o.pair; }
};

/// The canonically conjugate generator set: even pairs (q_i, p_i) followed by
/// Grassmann-odd pairs (th_j, pth_j). Pair k is odd iff k >= even_pairs().
class PhaseSpace {
 public:
  PhaseSpace(int even_pairs, int odd_pairs) : even_(even_pairs), odd_(odd_pairs) {
    if (even_pairs < 0 || odd_pairs < 0 || even_pairs + odd_pairs == 0)
      throw std::invalid_argument("phase space needs at least one canonical pair");
  }

  static std::shared_ptr<const PhaseSpace> make(int even_pairs, int odd_pairs = 0) {
    return std::make_shared<const PhaseSpace>(even_pairs, odd_pairs);
  }

  int pairs() const { return even_ + odd_; }
  int even_pairs() const { return even_; }
  int odd_pairs() const { return odd_; }
  int parity(int pair) const { return pair < even_ ? 0 : 1; }

  /// Number of monomial slots (positions then momenta, each `pairs()` wide).
  int slots() const { return 2 * pairs(); }
  int slot_of(Generator g) const {
    return (g.kind == GenKind::position ? 0 : pairs()) + g.pair;
  }
  Generator generator_at(int slot) const {
    int n = pairs();
    return slot < n ? Generator{GenKind::position, slot}
                    : Generator{GenKind::momentum, slot - n};
  }
  int slot_parity(int slot) const { return parity(slot % pairs()); }

  std::string name(Generator g) const {
    bool is_odd = parity(g.pair) == 1;
    int display = is_odd ? g.pair - even_ + 1 : g.pair + 1;
    if (g.kind == GenKind::position) return (is_odd ? "th" : "q") + std::to_string(display);
    return (is_odd ? "pth" : "p") + std::to_string(display);
  }

  bool operator==(const PhaseSpace& o) const { return even_ == o.even_ && odd_ == o.odd_; }
  bool operator!=(const PhaseSpace& o) const { return !(*this == o); }

 private:
  int even_;
  int odd_;
};

using SpacePtr = std::shared_ptr<const PhaseSpace>;

}  // namespace pomstar
