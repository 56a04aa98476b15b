#pragma once

#include <compare>
#include <cstddef>
#include <vector>

namespace rigidlab {

// Stand-in for the ordinal block*lambda + offset.
struct Ordinal {
  std::size_t block = 0;
  std::size_t offset = 0;

  auto operator<=>(const Ordinal&) const = default;
};

// Strictly decreasing, nonempty; entry 0 is the ordinal the sequence hangs from.
using ZSequence = std::vector<Ordinal>;

class BlockLayout {
public:
  static constexpr std::size_t kDefaultSampleCap = 6;

  // Throws InputError unless index_size >= 1, layers >= 2, blocks >= 1.
  // z_max_len == 0 means sequences are not length capped.
  static BlockLayout build(std::size_t index_size, std::size_t layers, std::size_t blocks,
                           std::size_t z_max_len, std::size_t sample_cap = kDefaultSampleCap);

  std::size_t index_size() const { return index_size_; }
  std::size_t layers() const { return layers_; }
  std::size_t blocks() const { return blocks_; }
  std::size_t block_capacity() const { return index_size_ * layers_; }
  std::size_t z_max_len() const { return z_max_len_; }
  std::size_t sample_cap() const { return sample_cap_; }

  bool contains(Ordinal a) const { return a.block < blocks_ && a.offset < block_capacity(); }
  std::size_t slot(Ordinal a) const { return a.offset % index_size_; }
  std::size_t layer(Ordinal a) const { return a.offset / index_size_; }
  bool is_safe(Ordinal a) const { return layer(a) + 2 <= layers_; }

  std::size_t rank(Ordinal a) const { return a.block * block_capacity() + a.offset; }
  Ordinal from_rank(std::size_t r) const { return {r / block_capacity(), r % block_capacity()}; }
  // Next surrogate ordinal; may step into the block just past the layout.
  Ordinal successor(Ordinal a) const;

  // g_n(nu), ascending.
  std::vector<Ordinal> g(std::size_t block, std::size_t slot) const;

  // Entries that may follow alpha in a sequence, ascending.
  std::vector<Ordinal> z_entry_sample(Ordinal alpha) const;

  bool operator==(const BlockLayout&) const = default;

private:
  BlockLayout() = default;
  void check(Ordinal a) const;

  std::size_t index_size_ = 1;
  std::size_t layers_ = 2;
  std::size_t blocks_ = 1;
  std::size_t z_max_len_ = 0;
  std::size_t sample_cap_ = kDefaultSampleCap;
};

bool is_safe(Ordinal alpha, const BlockLayout& layout);

// All sequences for alpha in lexicographic order (prefix closed).
std::vector<ZSequence> z_sequences(Ordinal alpha, const BlockLayout& layout);

} // namespace rigidlab
