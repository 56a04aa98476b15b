#include "rigidlab/backforth.hpp"

#include "rigidlab/errors.hpp"
#include "rigidlab/qftype.hpp"

#include <algorithm>

namespace rigidlab {

bool is_partial_isomorphism(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b,
                            const ElementPairs& pairs) {
  std::vector<FiniteAbelianGroup::Element> xs, ys;
  for (auto [x, y] : pairs) {
    xs.push_back(x);
    ys.push_back(y);
  }
  return qf_type(a, xs) == qf_type(b, ys);
}

BackForthGame::BackForthGame(FiniteAbelianGroup a, FiniteAbelianGroup b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (a_.order() > kMaxOrder || b_.order() > kMaxOrder)
    throw InputError("back-and-forth game limited to groups of order " + std::to_string(kMaxOrder));
  auto table = [](const FiniteAbelianGroup& g) {
    Side s{&g, std::vector<std::size_t>(g.order() * g.order())};
    for (std::size_t x = 0; x < g.order(); ++x)
      for (std::size_t y = 0; y < g.order(); ++y) s.add[x * g.order() + y] = g.add(x, y);
    return s;
  };
  sa_ = table(a_);
  sb_ = table(b_);
}

BackForthGame::State BackForthGame::initial() const {
  State s(a_.order(), -1);
  s[0] = 0;
  return s;
}

std::string BackForthGame::key(const State& s) {
  std::string k(s.size() * 2, '\0');
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto v = static_cast<std::uint16_t>(s[i] + 1);
    k[2 * i] = static_cast<char>(v & 0xff);
    k[2 * i + 1] = static_cast<char>(v >> 8);
  }
  return k;
}

BackForthGame::State BackForthGame::invert(const State& s) const {
  State inv(b_.order(), -1);
  for (std::size_t x = 0; x < s.size(); ++x)
    if (s[x] >= 0) inv[static_cast<std::size_t>(s[x])] = static_cast<int>(x);
  return inv;
}

std::optional<BackForthGame::State> BackForthGame::extend_in(const Side& from, const Side& to,
                                                             const State& s, std::size_t x,
                                                             std::size_t y) const {
  if (s[x] >= 0) {
    if (s[x] == static_cast<int>(y)) return s;
    return std::nullopt;
  }
  std::vector<bool> in_image(to.g->order(), false);
  for (int v : s)
    if (v >= 0) in_image[static_cast<std::size_t>(v)] = true;
  if (in_image[y]) return std::nullopt;
  // order of x modulo H must match the order of y modulo K, with matching landing point
  std::size_t kx = x, ky = y, m = 1;
  while (s[kx] < 0) {
    if (in_image[ky]) return std::nullopt;
    kx = from.sum(kx, x);
    ky = to.sum(ky, y);
    ++m;
  }
  if (s[kx] != static_cast<int>(ky)) return std::nullopt;
  State out = s;
  std::vector<std::size_t> base;
  for (std::size_t h = 0; h < s.size(); ++h)
    if (s[h] >= 0) base.push_back(h);
  std::size_t cx = 0, cy = 0;
  for (std::size_t k = 1; k < m; ++k) {
    cx = from.sum(cx, x);
    cy = to.sum(cy, y);
    for (auto h : base)
      out[from.sum(h, cx)] = static_cast<int>(to.sum(static_cast<std::size_t>(s[h]), cy));
  }
  return out;
}

std::optional<BackForthGame::State> BackForthGame::extend(const State& s,
                                                          FiniteAbelianGroup::Element x,
                                                          FiniteAbelianGroup::Element y) const {
  return extend_in(sa_, sb_, s, x, y);
}

// Searches for a full isomorphism extending s. Its restrictions form a
// back-and-forth family, so success places s in the fixed point.
bool BackForthGame::certify(const State& s) {
  if (a_.order() != b_.order()) return false;
  auto k = key(s);
  if (auto it = cert_memo_.find(k); it != cert_memo_.end()) return it->second;
  bool ok = false;
  std::size_t x = 0;
  while (x < s.size() && s[x] >= 0) ++x;
  if (x == s.size()) {
    ok = true;
  } else {
    for (std::size_t y = 0; y < b_.order() && !ok; ++y)
      if (auto t = extend(s, x, y)) ok = certify(*t);
  }
  cert_memo_[k] = ok;
  return ok;
}

// Every spoiler move on the source side (a, or b when flipped) has a winning answer.
bool BackForthGame::forth_holds(const State& s, bool flipped) {
  const Side& from = flipped ? sb_ : sa_;
  const Side& to = flipped ? sa_ : sb_;
  State view = flipped ? invert(s) : s;
  std::vector<bool> covered(from.g->order(), false);
  for (std::size_t x = 0; x < view.size(); ++x)
    if (view[x] >= 0) covered[x] = true;
  for (std::size_t x = 0; x < view.size(); ++x) {
    if (covered[x]) continue;
    // one representative per generated subgroup; smaller ones are restrictions
    bool answered = false;
    std::optional<State> reach;
    for (std::size_t y = 0; y < to.g->order() && !answered; ++y) {
      auto t = extend_in(from, to, view, x, y);
      if (!t) continue;
      State full = flipped ? invert(*t) : *t;
      if (wins(full)) {
        answered = true;
        reach = std::move(t);
      }
    }
    if (!answered) return false;
    for (std::size_t z = 0; z < reach->size(); ++z)
      if ((*reach)[z] >= 0) covered[z] = true;
  }
  return true;
}

bool BackForthGame::wins(const State& s) {
  auto k = key(s);
  if (auto it = memo_.find(k); it != memo_.end()) return it->second;
  bool ok = certify(s) || (forth_holds(s, false) && forth_holds(s, true));
  memo_[k] = ok;
  if (ok) winners_.push_back(s);
  return ok;
}

bool BackForthGame::duplicator_wins() { return wins(initial()); }

std::vector<BackForthGame::State> BackForthGame::survivors(std::size_t limit) const {
  std::vector<State> out(winners_.begin(),
                         winners_.begin() + static_cast<long>(std::min(limit, winners_.size())));
  return out;
}

bool BackForthGame::audit(const State& s) {
  if (!wins(s)) return false;
  ElementPairs base;
  for (std::size_t x = 0; x < s.size(); ++x)
    if (s[x] >= 0) base.emplace_back(x, static_cast<std::size_t>(s[x]));
  auto answered = [&](std::size_t x, std::size_t y) {
    ElementPairs pairs = base;
    pairs.emplace_back(x, y);
    if (!is_partial_isomorphism(a_, b_, pairs)) return false;
    auto t = extend(s, x, y);
    return t && wins(*t);
  };
  for (std::size_t x = 0; x < a_.order(); ++x) {
    bool ok = false;
    for (std::size_t y = 0; y < b_.order() && !ok; ++y) ok = answered(x, y);
    if (!ok) return false;
  }
  for (std::size_t y = 0; y < b_.order(); ++y) {
    bool ok = false;
    for (std::size_t x = 0; x < a_.order() && !ok; ++x) ok = answered(x, y);
    if (!ok) return false;
  }
  return true;
}

bool ef_equiv(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
  return BackForthGame(a, b).duplicator_wins();
}

} // namespace rigidlab
