#pragma once

#include "rigidlab/abelian.hpp"
#include "rigidlab/group.hpp"
#include "rigidlab/labeled_tree.hpp"
#include "rigidlab/partition_search.hpp"
#include "rigidlab/rigidity.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace rigidlab::doc {

using Json = nlohmann::json;

inline constexpr std::string_view kFormat = "rigidlab";
inline constexpr int kVersion = 1;

Json header(std::string_view kind);
// Checks format, version and kind; throws InputError naming the field.
void expect_kind(const Json& j, std::string_view kind);

Json parse_text(const std::string& text, const std::string& origin);

Json to_json(Ordinal a);
Ordinal ordinal_from(const Json& j, const std::string& field);

Json to_json(const LabeledTree& t);
LabeledTree tree_from(const Json& j, const std::string& field);

Json to_json(const QuasiOrder& q);
QuasiOrder quasi_order_from(const Json& j, const std::string& field);

Json to_json(const ColoringTable& f);
ColoringTable coloring_from(const Json& j, const std::string& field);

Json to_json(const BlockLayout& l);
BlockLayout layout_from(const Json& j, const std::string& field);

Json to_json(const PrimeTable& p);
PrimeTable primes_from(const Json& j, const std::string& field);

Json to_json(const Atom& a);
Json to_json(const TruncatedGroup& g);
// Rebuilds from layout, tree, primes and subset, then checks any recorded atoms.
TruncatedGroup group_from(const Json& j, const std::string& field);

Json to_json(const GroupElement& x);
GroupElement element_from(const Json& j, const std::string& field);

Json to_json(const LinearMap& m);
Json to_json(const TreeMorphism& m, const LabeledTree& source, const LabeledTree& target);

Json to_json(const FiniteAbelianGroup& g);
FiniteAbelianGroup abelian_from(const Json& j, const std::string& field);

} // namespace rigidlab::doc
