#include "rigidlab/ordinal.hpp"

#include "rigidlab/errors.hpp"

#include <algorithm>
#include <string>

namespace rigidlab {

BlockLayout BlockLayout::build(std::size_t index_size, std::size_t layers, std::size_t blocks,
                               std::size_t z_max_len, std::size_t sample_cap) {
  if (index_size < 1) throw InputError("index size L must be at least 1");
  if (layers < 2) throw InputError("layer count D must be at least 2 (no safe layer otherwise)");
  if (blocks < 1) throw InputError("block count N must be at least 1");
  BlockLayout out;
  out.index_size_ = index_size;
  out.layers_ = layers;
  out.blocks_ = blocks;
  out.z_max_len_ = z_max_len;
  out.sample_cap_ = sample_cap;
  return out;
}

void BlockLayout::check(Ordinal a) const {
  if (!contains(a))
    throw InputError("ordinal (" + std::to_string(a.block) + "," + std::to_string(a.offset) +
                     ") outside the layout");
}

Ordinal BlockLayout::successor(Ordinal a) const {
  if (a.offset + 1 < block_capacity()) return {a.block, a.offset + 1};
  return {a.block + 1, 0};
}

std::vector<Ordinal> BlockLayout::g(std::size_t block, std::size_t slot) const {
  if (block >= blocks_ || slot >= index_size_) throw InputError("g index outside the layout");
  std::vector<Ordinal> out;
  out.reserve(layers_);
  for (std::size_t k = 0; k < layers_; ++k) out.push_back({block, slot + k * index_size_});
  return out;
}

std::vector<Ordinal> BlockLayout::z_entry_sample(Ordinal alpha) const {
  check(alpha);
  std::size_t r = rank(alpha);
  std::vector<Ordinal> out;
  if (r <= sample_cap_) {
    for (std::size_t i = 0; i < r; ++i) out.push_back(from_rank(i));
    return out;
  }
  if (sample_cap_ == 0) return out;
  if (sample_cap_ == 1) return {from_rank(r - 1)};
  // evenly spaced ranks, always 0 and r-1
  std::size_t last = r - 1;
  std::size_t prev = static_cast<std::size_t>(-1);
  for (std::size_t i = 0; i < sample_cap_; ++i) {
    std::size_t idx = (2 * i * last + (sample_cap_ - 1)) / (2 * (sample_cap_ - 1));
    if (idx != prev) out.push_back(from_rank(idx));
    prev = idx;
  }
  return out;
}

bool is_safe(Ordinal alpha, const BlockLayout& layout) {
  if (!layout.contains(alpha)) throw InputError("ordinal outside the layout");
  return layout.is_safe(alpha);
}

namespace {

void extend(const std::vector<Ordinal>& below, std::size_t max_len, ZSequence& cur,
            std::size_t upper, std::vector<ZSequence>& out) {
  out.push_back(cur);
  if (max_len != 0 && cur.size() >= max_len) return;
  // next entry must be strictly smaller than the last one; below is ascending
  for (std::size_t i = 0; i < upper; ++i) {
    cur.push_back(below[i]);
    extend(below, max_len, cur, i, out);
    cur.pop_back();
  }
}

} // namespace

std::vector<ZSequence> z_sequences(Ordinal alpha, const BlockLayout& layout) {
  std::vector<Ordinal> below = layout.z_entry_sample(alpha);
  std::vector<ZSequence> out;
  ZSequence cur{alpha};
  extend(below, layout.z_max_len(), cur, below.size(), out);
  // lexicographic order by entries
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace rigidlab
