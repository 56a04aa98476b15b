#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace rigidlab {

// Subsets of {0..ground_size-1} as bit masks.
using Subset = std::uint64_t;
using Color = std::uint64_t;

class ColoringTable {
public:
  static constexpr std::size_t kMaxGround = 64;

  // Throws InputError unless every subset of size <= cap has exactly one color.
  ColoringTable(std::size_t ground_size, std::size_t cap, std::map<Subset, Color> colors);

  static ColoringTable from_function(std::size_t ground_size, std::size_t cap,
                                     const std::function<Color(Subset)>& f);
  static ColoringTable random(std::size_t ground_size, std::size_t cap, std::size_t color_count,
                              std::uint64_t seed);

  std::size_t ground_size() const { return ground_; }
  std::size_t cap() const { return cap_; }
  // Throws InputError for subsets above the cap or outside the ground set.
  Color color(Subset s) const;
  const std::map<Subset, Color>& table() const { return colors_; }

private:
  std::size_t ground_;
  std::size_t cap_;
  std::map<Subset, Color> colors_;
};

Subset subset_of(const std::vector<std::size_t>& elements);
std::vector<std::size_t> elements_of(Subset s);

// Injective sequence whose first n entries and entries 1..n get the same
// color for every 1 <= n < target_len. Depth first, smallest candidate first.
std::optional<std::vector<std::size_t>> search_shift_invariant(const ColoringTable& f,
                                                               std::size_t target_len);

// Number of prefixes of length <= depth that pass the condition.
std::uint64_t attempt_tree_size(const ColoringTable& f, std::size_t depth);

bool satisfies_shift_condition(const ColoringTable& f, const std::vector<std::size_t>& seq);

} // namespace rigidlab
