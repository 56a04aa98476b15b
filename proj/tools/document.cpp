#include "document.hpp"

#include "rigidlab/errors.hpp"

namespace rigidlab::doc {

namespace {

const Json& member(const Json& j, const char* key, const std::string& field) {
  if (!j.is_object()) throw InputError("field '" + field + "': expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError("field '" + field + "." + key + "': missing");
  return *it;
}

std::uint64_t natural(const Json& j, const std::string& field) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    throw InputError("field '" + field + "': expected a natural number");
  return j.get<std::uint64_t>();
}

const Json& array(const Json& j, const std::string& field) {
  if (!j.is_array()) throw InputError("field '" + field + "': expected a list");
  return j;
}

std::string text(const Json& j, const std::string& field) {
  if (!j.is_string()) throw InputError("field '" + field + "': expected a string");
  return j.get<std::string>();
}

std::string at(const std::string& field, std::size_t i) { return field + "[" + std::to_string(i) + "]"; }
std::string dot(const std::string& field, const char* key) { return field + "." + key; }

} // namespace

Json header(std::string_view kind) {
  Json j = Json::object();
  j["format"] = kFormat;
  j["version"] = kVersion;
  j["kind"] = kind;
  return j;
}

void expect_kind(const Json& j, std::string_view kind) {
  if (text(member(j, "format", "document"), "document.format") != kFormat)
    throw InputError("field 'document.format': not a rigidlab document");
  if (natural(member(j, "version", "document"), "document.version") != kVersion)
    throw InputError("field 'document.version': unsupported version");
  auto k = text(member(j, "kind", "document"), "document.kind");
  if (k != kind)
    throw InputError("field 'document.kind': expected '" + std::string(kind) + "', found '" + k + "'");
}

Json parse_text(const std::string& s, const std::string& origin) {
  try {
    return Json::parse(s);
  } catch (const Json::parse_error& e) {
    throw InputError(origin + ": malformed document (" + e.what() + ")");
  }
}

Json to_json(Ordinal a) { return Json{{"block", a.block}, {"offset", a.offset}}; }

Ordinal ordinal_from(const Json& j, const std::string& field) {
  return {natural(member(j, "block", field), dot(field, "block")),
          natural(member(j, "offset", field), dot(field, "offset"))};
}

Json to_json(const LabeledTree& t) {
  Json nodes = Json::array();
  for (LabeledTree::NodeId u = 0; u < t.size(); ++u)
    nodes.push_back(Json{{"path", t.path(u)}, {"label", t.label(u)}});
  Json j = header("tree");
  j["nodes"] = std::move(nodes);
  return j;
}

LabeledTree tree_from(const Json& j, const std::string& field) {
  std::vector<std::pair<NodePath, Label>> nodes;
  const Json& list = array(member(j, "nodes", field), dot(field, "nodes"));
  for (std::size_t i = 0; i < list.size(); ++i) {
    auto f = at(dot(field, "nodes"), i);
    NodePath p;
    const Json& path = array(member(list[i], "path", f), dot(f, "path"));
    for (std::size_t k = 0; k < path.size(); ++k)
      p.push_back(static_cast<std::uint32_t>(natural(path[k], at(dot(f, "path"), k))));
    nodes.emplace_back(std::move(p),
                       static_cast<Label>(natural(member(list[i], "label", f), dot(f, "label"))));
  }
  try {
    return LabeledTree::from_nodes(std::move(nodes));
  } catch (const InputError& e) {
    throw InputError("field '" + dot(field, "nodes") + "': " + e.what());
  }
}

Json to_json(const QuasiOrder& q) {
  Json j = header("quasi_order");
  j["elements"] = q.elements();
  Json pairs = Json::array();
  for (auto [a, b] : q.pairs()) pairs.push_back(Json::array({a, b}));
  j["leq"] = std::move(pairs);
  return j;
}

QuasiOrder quasi_order_from(const Json& j, const std::string& field) {
  std::vector<Label> elems;
  const Json& list = array(member(j, "elements", field), dot(field, "elements"));
  for (std::size_t i = 0; i < list.size(); ++i)
    elems.push_back(static_cast<Label>(natural(list[i], at(dot(field, "elements"), i))));
  std::vector<std::pair<Label, Label>> pairs;
  const Json& leq = array(member(j, "leq", field), dot(field, "leq"));
  for (std::size_t i = 0; i < leq.size(); ++i) {
    auto f = at(dot(field, "leq"), i);
    if (!leq[i].is_array() || leq[i].size() != 2) throw InputError("field '" + f + "': expected a pair");
    pairs.emplace_back(static_cast<Label>(natural(leq[i][0], f)),
                       static_cast<Label>(natural(leq[i][1], f)));
  }
  try {
    return QuasiOrder(std::move(elems), pairs);
  } catch (const InputError& e) {
    throw InputError("field '" + dot(field, "leq") + "': " + e.what());
  }
}

Json to_json(const ColoringTable& f) {
  Json j = header("coloring");
  j["ground_size"] = f.ground_size();
  j["cap"] = f.cap();
  Json colors = Json::array();
  for (auto& [s, c] : f.table()) colors.push_back(Json{{"subset", elements_of(s)}, {"color", c}});
  j["colors"] = std::move(colors);
  return j;
}

ColoringTable coloring_from(const Json& j, const std::string& field) {
  auto ground = natural(member(j, "ground_size", field), dot(field, "ground_size"));
  auto cap = natural(member(j, "cap", field), dot(field, "cap"));
  if (ground > ColoringTable::kMaxGround)
    throw InputError("field '" + dot(field, "ground_size") + "': above 64");
  std::map<Subset, Color> colors;
  const Json& list = array(member(j, "colors", field), dot(field, "colors"));
  for (std::size_t i = 0; i < list.size(); ++i) {
    auto f = at(dot(field, "colors"), i);
    std::vector<std::size_t> elems;
    const Json& s = array(member(list[i], "subset", f), dot(f, "subset"));
    for (std::size_t k = 0; k < s.size(); ++k) {
      auto e = natural(s[k], at(dot(f, "subset"), k));
      if (e >= ground) throw InputError("field '" + at(dot(f, "subset"), k) + "': outside ground set");
      elems.push_back(e);
    }
    Subset key = subset_of(elems);
    if (colors.count(key)) throw InputError("field '" + f + "': subset listed twice");
    colors[key] = natural(member(list[i], "color", f), dot(f, "color"));
  }
  try {
    return ColoringTable(ground, cap, std::move(colors));
  } catch (const InputError& e) {
    throw InputError("field '" + dot(field, "colors") + "': " + e.what());
  }
}

Json to_json(const BlockLayout& l) {
  return Json{{"L", l.index_size()},  {"D", l.layers()},         {"N", l.blocks()},
              {"zlen", l.z_max_len()}, {"sample_cap", l.sample_cap()}};
}

BlockLayout layout_from(const Json& j, const std::string& field) {
  auto get = [&](const char* k) { return natural(member(j, k, field), dot(field, k)); };
  try {
    return BlockLayout::build(get("L"), get("D"), get("N"), get("zlen"), get("sample_cap"));
  } catch (const InputError& e) {
    throw InputError("field '" + field + "': " + e.what());
  }
}

Json to_json(const PrimeTable& p) {
  Json pl = Json::array(), ql = Json::array();
  for (auto& [k, v] : p.p_map()) {
    auto [n, m, jj] = k;
    pl.push_back(Json::array({n, m, jj, v}));
  }
  for (auto& [k, v] : p.q_map()) {
    auto [n, m, l, jj] = k;
    ql.push_back(Json::array({n, m, l, jj, v}));
  }
  return Json{{"level_bound", p.level_bound()},
              {"length_bound", p.length_bound()},
              {"label_bound", p.label_bound()},
              {"p", std::move(pl)},
              {"q", std::move(ql)}};
}

PrimeTable primes_from(const Json& j, const std::string& field) {
  auto get = [&](const char* k) { return natural(member(j, k, field), dot(field, k)); };
  std::map<PrimeTable::PKey, Prime> p;
  std::map<PrimeTable::QKey, Prime> q;
  const Json& pl = array(member(j, "p", field), dot(field, "p"));
  for (std::size_t i = 0; i < pl.size(); ++i) {
    auto f = at(dot(field, "p"), i);
    if (!pl[i].is_array() || pl[i].size() != 4) throw InputError("field '" + f + "': expected [n,m,j,prime]");
    p[{natural(pl[i][0], f), natural(pl[i][1], f), static_cast<int>(natural(pl[i][2], f))}] =
        natural(pl[i][3], f);
  }
  const Json& ql = array(member(j, "q", field), dot(field, "q"));
  for (std::size_t i = 0; i < ql.size(); ++i) {
    auto f = at(dot(field, "q"), i);
    if (!ql[i].is_array() || ql[i].size() != 5)
      throw InputError("field '" + f + "': expected [n,m,label,j,prime]");
    q[{natural(ql[i][0], f), natural(ql[i][1], f), static_cast<Label>(natural(ql[i][2], f)),
       static_cast<int>(natural(ql[i][3], f))}] = natural(ql[i][4], f);
  }
  try {
    return PrimeTable::from_maps(get("level_bound"), get("length_bound"), get("label_bound"),
                                 std::move(p), std::move(q));
  } catch (const InputError& e) {
    throw InputError("field '" + field + "': " + e.what());
  }
}

Json to_json(const Atom& a) {
  Json j{{"level", a.level}, {"name", describe(a)}};
  switch (a.kind) {
  case AtomKind::Root:
    j["kind"] = "root";
    break;
  case AtomKind::A: {
    j["kind"] = "a";
    j["alpha"] = to_json(a.alpha);
    Json z = Json::array();
    for (auto o : a.z) z.push_back(to_json(o));
    j["z"] = std::move(z);
    break;
  }
  case AtomKind::B:
    j["kind"] = "b";
    j["alpha"] = to_json(a.alpha);
    j["eta"] = a.eta;
    break;
  }
  return j;
}

namespace {

const char* family_kind(FamilyKind k) {
  switch (k) {
  case FamilyKind::Single: return "single";
  case FamilyKind::Chain: return "chain";
  case FamilyKind::TreeRoot: return "tree_root";
  case FamilyKind::TreeChain: return "tree_chain";
  }
  return "";
}

} // namespace

Json to_json(const TruncatedGroup& g) {
  Json j = header("group");
  j["layout"] = to_json(g.layout());
  j["tree"] = g.tree() ? to_json(*g.tree()) : Json(nullptr);
  j["primes"] = to_json(g.primes());
  if (g.level1_subset()) j["level1_subset"] = *g.level1_subset();
  Json atoms = Json::array();
  for (std::size_t i = 0; i < g.rank(); ++i) {
    Json a = to_json(g.atom(i));
    Json alias = Json::array();
    for (auto o : g.alias_set(i)) alias.push_back(to_json(o));
    a["alias_set"] = std::move(alias);
    atoms.push_back(std::move(a));
  }
  j["atoms"] = std::move(atoms);
  Json fams = Json::array();
  for (auto& f : g.families()) {
    Json vs = Json::array();
    for (auto& v : f.vectors) vs.push_back(to_json(v)["terms"]);
    fams.push_back(Json{{"prime", f.prime},
                        {"kind", family_kind(f.kind)},
                        {"level", f.level},
                        {"length", f.length},
                        {"label", f.label},
                        {"vectors", std::move(vs)}});
  }
  j["families"] = std::move(fams);
  return j;
}

TruncatedGroup group_from(const Json& j, const std::string& field) {
  expect_kind(j, "group");
  BlockLayout layout = layout_from(member(j, "layout", field), dot(field, "layout"));
  std::optional<LabeledTree> tree;
  const Json& tj = member(j, "tree", field);
  if (!tj.is_null()) tree = tree_from(tj, dot(field, "tree"));
  PrimeTable primes = primes_from(member(j, "primes", field), dot(field, "primes"));
  auto build = [&]() {
    if (auto it = j.find("level1_subset"); it != j.end()) {
      if (tree) throw InputError("field '" + dot(field, "level1_subset") + "': not allowed with a tree");
      std::vector<std::size_t> s;
      const Json& list = array(*it, dot(field, "level1_subset"));
      for (std::size_t i = 0; i < list.size(); ++i)
        s.push_back(natural(list[i], at(dot(field, "level1_subset"), i)));
      return build_group_on_subset(layout, primes, std::move(s));
    }
    return build_group(layout, tree, primes);
  };
  TruncatedGroup g = build();
  if (auto it = j.find("atoms"); it != j.end()) {
    const Json& list = array(*it, dot(field, "atoms"));
    if (list.size() != g.rank())
      throw InputError("field '" + dot(field, "atoms") + "': recorded " + std::to_string(list.size()) +
                       " atoms, rebuild gives " + std::to_string(g.rank()));
    for (std::size_t i = 0; i < list.size(); ++i) {
      auto f = at(dot(field, "atoms"), i);
      if (text(member(list[i], "name", f), dot(f, "name")) != describe(g.atom(i)))
        throw InputError("field '" + dot(f, "name") + "': does not match the rebuilt atom " +
                         describe(g.atom(i)));
    }
  }
  return g;
}

Json to_json(const GroupElement& x) {
  Json terms = Json::array();
  for (auto& [i, c] : x.terms()) terms.push_back(Json::array({i, to_text(c)}));
  Json j = header("element");
  j["terms"] = std::move(terms);
  return j;
}

GroupElement element_from(const Json& j, const std::string& field) {
  GroupElement x;
  const Json& list = array(member(j, "terms", field), dot(field, "terms"));
  for (std::size_t i = 0; i < list.size(); ++i) {
    auto f = at(dot(field, "terms"), i);
    if (!list[i].is_array() || list[i].size() != 2)
      throw InputError("field '" + f + "': expected [atom, \"num/den\"]");
    try {
      x.add(natural(list[i][0], f), parse_rational(text(list[i][1], f)));
    } catch (const InputError& e) {
      throw InputError("field '" + f + "': " + e.what());
    }
  }
  return x;
}

Json to_json(const LinearMap& m) {
  Json cols = Json::array();
  for (auto& c : m.columns) cols.push_back(to_json(c)["terms"]);
  return Json{{"source_rank", m.source_rank}, {"target_rank", m.target_rank}, {"columns", cols}};
}

Json to_json(const TreeMorphism& m, const LabeledTree& source, const LabeledTree& target) {
  Json pairs = Json::array();
  for (std::size_t u = 0; u < m.image.size(); ++u)
    pairs.push_back(Json{{"from", source.path(u)}, {"to", target.path(m.image[u])}});
  return pairs;
}

Json to_json(const FiniteAbelianGroup& g) {
  Json j = header("abelian_group");
  j["orders"] = g.orders();
  return j;
}

FiniteAbelianGroup abelian_from(const Json& j, const std::string& field) {
  std::vector<std::uint64_t> orders;
  const Json& list = array(member(j, "orders", field), dot(field, "orders"));
  for (std::size_t i = 0; i < list.size(); ++i) orders.push_back(natural(list[i], at(dot(field, "orders"), i)));
  try {
    return FiniteAbelianGroup(std::move(orders));
  } catch (const InputError& e) {
    throw InputError("field '" + dot(field, "orders") + "': " + e.what());
  }
}

} // namespace rigidlab::doc
