#include "rigidlab/partition_search.hpp"

#include "rigidlab/errors.hpp"

#include <bit>
#include <random>
#include <string>

namespace rigidlab {

namespace {

template <class Visit>
void for_each_subset_upto(std::size_t ground, std::size_t cap, Visit visit) {
  // Gosper's hack per size
  for (std::size_t k = 0; k <= cap && k <= ground; ++k) {
    if (k == 0) {
      visit(Subset{0});
      continue;
    }
    Subset s = (Subset{1} << k) - 1;
    Subset limit = ground == 64 ? 0 : (Subset{1} << ground);
    while (ground == 64 ? s != 0 : s < limit) {
      visit(s);
      Subset c = s & (~s + 1);
      Subset r = s + c;
      if (r == 0) break;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
}

} // namespace

ColoringTable::ColoringTable(std::size_t ground_size, std::size_t cap,
                             std::map<Subset, Color> colors)
    : ground_(ground_size), cap_(cap), colors_(std::move(colors)) {
  if (ground_ > kMaxGround) throw InputError("coloring: ground size above 64");
  std::size_t expected = 0;
  for_each_subset_upto(ground_, cap_, [&](Subset s) {
    if (!colors_.count(s))
      throw InputError("coloring: no color for subset of size " +
                       std::to_string(std::popcount(s)));
    ++expected;
  });
  if (expected != colors_.size()) throw InputError("coloring: subset outside ground set or cap");
}

ColoringTable ColoringTable::from_function(std::size_t ground_size, std::size_t cap,
                                           const std::function<Color(Subset)>& f) {
  std::map<Subset, Color> colors;
  for_each_subset_upto(ground_size, cap, [&](Subset s) { colors[s] = f(s); });
  return ColoringTable(ground_size, cap, std::move(colors));
}

ColoringTable ColoringTable::random(std::size_t ground_size, std::size_t cap,
                                    std::size_t color_count, std::uint64_t seed) {
  if (color_count == 0) throw InputError("coloring: need at least one color");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Color> pick(0, color_count - 1);
  std::map<Subset, Color> colors;
  for_each_subset_upto(ground_size, cap, [&](Subset s) { colors[s] = pick(rng); });
  return ColoringTable(ground_size, cap, std::move(colors));
}

Color ColoringTable::color(Subset s) const {
  auto it = colors_.find(s);
  if (it == colors_.end()) throw InputError("coloring: subset outside the table");
  return it->second;
}

Subset subset_of(const std::vector<std::size_t>& elements) {
  Subset s = 0;
  for (auto e : elements) s |= Subset{1} << e;
  return s;
}

std::vector<std::size_t> elements_of(Subset s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; s != 0; ++i, s >>= 1)
    if (s & 1) out.push_back(i);
  return out;
}

namespace {

// The newest entry adds the condition at n = len-1, comparing
// {seq[0..n-1]} with {seq[1..n]}.
bool extends_ok(const ColoringTable& f, const std::vector<std::size_t>& seq) {
  std::size_t n = seq.size() - 1;
  if (n == 0) return true;
  Subset head = 0, tail = 0;
  for (std::size_t i = 0; i < n; ++i) head |= Subset{1} << seq[i];
  for (std::size_t i = 1; i <= n; ++i) tail |= Subset{1} << seq[i];
  return f.color(head) == f.color(tail);
}

bool dfs(const ColoringTable& f, std::size_t target, std::vector<std::size_t>& seq, Subset used) {
  if (seq.size() == target) return true;
  for (std::size_t c = 0; c < f.ground_size(); ++c) {
    if (used >> c & 1) continue;
    seq.push_back(c);
    if (extends_ok(f, seq) && dfs(f, target, seq, used | Subset{1} << c)) return true;
    seq.pop_back();
  }
  return false;
}

void count(const ColoringTable& f, std::size_t depth, std::vector<std::size_t>& seq, Subset used,
           std::uint64_t& total) {
  ++total;
  if (seq.size() == depth) return;
  for (std::size_t c = 0; c < f.ground_size(); ++c) {
    if (used >> c & 1) continue;
    seq.push_back(c);
    if (extends_ok(f, seq)) count(f, depth, seq, used | Subset{1} << c, total);
    seq.pop_back();
  }
}

} // namespace

std::optional<std::vector<std::size_t>> search_shift_invariant(const ColoringTable& f,
                                                               std::size_t target_len) {
  if (target_len > f.ground_size()) return std::nullopt;
  if (target_len > f.cap() + 1)
    throw InputError("target length " + std::to_string(target_len) +
                     " exceeds the subset-size cap + 1");
  std::vector<std::size_t> seq;
  if (!dfs(f, target_len, seq, 0)) return std::nullopt;
  return seq;
}

std::uint64_t attempt_tree_size(const ColoringTable& f, std::size_t depth) {
  if (depth > f.cap() + 1) throw InputError("depth exceeds the subset-size cap + 1");
  std::vector<std::size_t> seq;
  std::uint64_t total = 0;
  count(f, depth, seq, 0, total);
  return total;
}

bool satisfies_shift_condition(const ColoringTable& f, const std::vector<std::size_t>& seq) {
  Subset used = 0;
  for (auto e : seq) {
    if (e >= f.ground_size() || (used >> e & 1)) return false;
    used |= Subset{1} << e;
  }
  for (std::size_t n = 1; n < seq.size(); ++n) {
    std::vector<std::size_t> head(seq.begin(), seq.begin() + n);
    std::vector<std::size_t> tail(seq.begin() + 1, seq.begin() + n + 1);
    if (f.color(subset_of(head)) != f.color(subset_of(tail))) return false;
  }
  return true;
}

} // namespace rigidlab
