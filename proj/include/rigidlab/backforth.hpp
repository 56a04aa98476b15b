#pragma once

#include "rigidlab/abelian.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace rigidlab {

using ElementPairs = std::vector<std::pair<FiniteAbelianGroup::Element, FiniteAbelianGroup::Element>>;

// Matched tuples satisfy the same integer relations (equal relation lattices).
bool is_partial_isomorphism(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b,
                            const ElementPairs& pairs);

// Greatest fixed point of the back-and-forth condition over partial
// isomorphisms, explored from the empty map. A partial isomorphism is tracked
// by its closure: an isomorphism between the generated subgroups.
class BackForthGame {
public:
  // Throws InputError above kMaxOrder elements per side.
  static constexpr std::size_t kMaxOrder = 4096;
  BackForthGame(FiniteAbelianGroup a, FiniteAbelianGroup b);
  BackForthGame(const BackForthGame&) = delete;
  BackForthGame& operator=(const BackForthGame&) = delete;

  // Image array over a's elements, -1 where undefined.
  using State = std::vector<int>;

  bool duplicator_wins();
  bool wins(const State& s);
  State initial() const;
  // Closure of s extended by (x, y); nullopt if that is not a partial isomorphism.
  std::optional<State> extend(const State& s, FiniteAbelianGroup::Element x,
                              FiniteAbelianGroup::Element y) const;

  // Winning states seen so far, in discovery order.
  std::vector<State> survivors(std::size_t limit) const;
  // Re-checks the extension property of a winning state against every element.
  bool audit(const State& s);

  std::size_t states_decided() const { return memo_.size(); }
  const FiniteAbelianGroup& a() const { return a_; }
  const FiniteAbelianGroup& b() const { return b_; }

private:
  struct Side {
    const FiniteAbelianGroup* g;
    std::vector<std::size_t> add;  // addition table, row major
    std::size_t sum(std::size_t x, std::size_t y) const { return add[x * g->order() + y]; }
  };

  static std::string key(const State& s);
  bool certify(const State& s);
  bool forth_holds(const State& s, bool flipped);
  State invert(const State& s) const;
  std::optional<State> extend_in(const Side& from, const Side& to, const State& s, std::size_t x,
                                 std::size_t y) const;

  FiniteAbelianGroup a_, b_;
  Side sa_, sb_;
  std::unordered_map<std::string, bool> memo_;
  std::unordered_map<std::string, bool> cert_memo_;
  std::vector<State> winners_;
};

bool ef_equiv(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b);

} // namespace rigidlab
