#include "commands.hpp"

#include "document.hpp"
#include "rigidlab/backforth.hpp"
#include "rigidlab/errors.hpp"
#include "rigidlab/formula.hpp"
#include "rigidlab/qftype.hpp"

#include <CLI11.hpp>
#include <openssl/sha.h>

#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

namespace rigidlab::cli {

namespace {

using doc::Json;
using namespace std::string_literals;

struct Report {
  std::string summary;
  Json body = Json::object();
  Json parameters = Json::object();
};

class Session {
public:
  explicit Session(const std::vector<std::string>& args) {
    for (auto& a : args) digest_input_ += a + '\0';
  }

  Json load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    std::string content = ss.str();
    digest_input_ += "file\0"s + content + '\0';
    Json j = doc::parse_text(content, path);
    // a report wrapping a document stands for that document
    if (j.is_object() && j.value("kind", "") == "report" && j.contains("body") &&
        j["body"].is_object() && j["body"].contains("kind"))
      return j["body"];
    return j;
  }

  std::string digest() const {
    unsigned char md[SHA256_DIGEST_LENGTH];
    SHA256(reinterpret_cast<const unsigned char*>(digest_input_.data()), digest_input_.size(), md);
    std::ostringstream os;
    for (unsigned char c : md) os << std::hex << std::setw(2) << std::setfill('0') << int(c);
    return os.str();
  }

private:
  std::string digest_input_;
};

std::vector<std::uint64_t> naturals(const std::string& s, const std::string& option) {
  std::vector<std::uint64_t> out;
  if (s.empty() || s == "-") return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("option '" + option + "': expected comma separated naturals, got '" + s + "'");
    out.push_back(std::stoull(item));
  }
  return out;
}

Ordinal ordinal_arg(const std::string& s, const std::string& option) {
  auto colon = s.find(':');
  auto parts = naturals(colon == std::string::npos ? s : s.substr(0, colon) + "," + s.substr(colon + 1),
                        option);
  if (colon == std::string::npos || parts.size() != 2)
    throw InputError("option '" + option + "': expected block:offset, got '" + s + "'");
  return {parts[0], parts[1]};
}

Json layout_params(const BlockLayout& l) { return doc::to_json(l); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

FiniteAbelianGroup abelian_arg(Session& s, const std::string& arg, const std::string& option) {
  std::ifstream probe(arg);
  if (probe) {
    Json j = s.load(arg);
    doc::expect_kind(j, "abelian_group");
    return doc::abelian_from(j, option);
  }
  try {
    return FiniteAbelianGroup(naturals(arg, option));
  } catch (const InputError& e) {
    throw InputError("option '" + option + "': " + e.what());
  }
}

struct Options {
  std::string t1, t2, q, family, coloring, group_a, group_b, element, tree, abelian_a, abelian_b;
  std::string params, prime_bounds, subsets, orders, random_spec, beta, alpha;
  bool witness = false;
  std::size_t len = 0, n = 0, m = 0, depth = 0, basis_index = 0, sample_cap = BlockLayout::kDefaultSampleCap;
  std::uint64_t seed = 0, prime = 0;
  long pair_i = -1, pair_j = -1;
  bool has_basis_index = false;
};

BlockLayout layout_arg(const Options& o) {
  auto v = naturals(o.params, "--params");
  if (v.size() != 4) throw InputError("option '--params': expected L,D,N,zlen");
  try {
    return BlockLayout::build(v[0], v[1], v[2], v[3], o.sample_cap);
  } catch (const InputError& e) {
    throw InputError("option '--params': "s + e.what());
  }
}

TruncatedGroup group_arg(Session& s, const std::string& path, const std::string& name) {
  return doc::group_from(s.load(path), name);
}

GroupElement element_arg(Session& s, const TruncatedGroup& g, const std::string& path) {
  Json j = s.load(path);
  doc::expect_kind(j, "element");
  GroupElement x = doc::element_from(j, "element");
  try {
    g.check_element(x);
  } catch (const InputError& e) {
    throw InputError("field 'element.terms': "s + e.what());
  }
  return x;
}

Json decomposition_json(const Decomposition& d) {
  Json parts = Json::array();
  for (auto& [p, x] : d.parts) parts.push_back(Json{{"prime", p}, {"part", doc::to_json(x)["terms"]}});
  return Json{{"remainder", doc::to_json(d.remainder)["terms"]}, {"parts", parts}};
}

// ---- commands -----------------------------------------------------------------

Report tree_embed(Session& s, const Options& o) {
  auto q = doc::quasi_order_from(s.load(o.q), "q");
  auto a = doc::tree_from(s.load(o.t1), "t1");
  auto b = doc::tree_from(s.load(o.t2), "t2");
  Report r;
  auto w = find_embedding(a, b, q);
  r.body["embeds"] = w.has_value();
  if (o.witness && w) r.body["witness"] = doc::to_json(*w, a, b);
  r.summary = "embeds: " + yes_no(w.has_value());
  r.parameters = Json{{"witness", o.witness}};
  return r;
}

Report tree_antichain(Session& s, const Options& o) {
  auto q = doc::quasi_order_from(s.load(o.q), "q");
  Json fam = s.load(o.family);
  doc::expect_kind(fam, "tree_family");
  std::vector<LabeledTree> trees;
  if (!fam.contains("trees") || !fam["trees"].is_array())
    throw InputError("field 'family.trees': expected a list");
  for (std::size_t i = 0; i < fam["trees"].size(); ++i)
    trees.push_back(doc::tree_from(fam["trees"][i], "family.trees[" + std::to_string(i) + "]"));
  auto pairs = antichain_pairs(trees, q);
  Report r;
  Json list = Json::array();
  for (auto [i, j] : pairs) list.push_back(Json::array({i, j}));
  r.body["pairs"] = list;
  r.body["antichain"] = pairs.empty();
  r.summary = pairs.empty() ? "antichain: yes" : "antichain: no (" + std::to_string(pairs.size()) + " pairs)";
  r.parameters = Json{{"family_size", trees.size()}};
  return r;
}

Report partition_search(Session& s, const Options& o) {
  std::optional<ColoringTable> f;
  Report r;
  if (!o.random_spec.empty()) {
    auto v = naturals(o.random_spec, "--random");
    if (v.size() != 3) throw InputError("option '--random': expected ground,cap,colors");
    f = ColoringTable::random(v[0], v[1], v[2], o.seed);
    r.body["coloring"] = doc::to_json(*f);
    r.parameters["random"] = o.random_spec;
    r.parameters["seed"] = o.seed;
  } else {
    if (o.coloring.empty()) throw InputError("partition search needs a coloring document or --random");
    Json j = s.load(o.coloring);
    doc::expect_kind(j, "coloring");
    f = doc::coloring_from(j, "coloring");
  }
  auto seq = search_shift_invariant(*f, o.len);
  r.body["sequence"] = seq ? Json(*seq) : Json(nullptr);
  if (o.len <= f->cap() + 1) r.body["attempt_tree_size"] = attempt_tree_size(*f, o.len);
  r.parameters["len"] = o.len;
  r.parameters["ground_size"] = f->ground_size();
  r.parameters["cap"] = f->cap();
  if (seq) {
    std::ostringstream os;
    os << "sequence: <";
    for (std::size_t i = 0; i < seq->size(); ++i) os << (i ? "," : "") << (*seq)[i];
    os << ">";
    r.summary = os.str();
  } else {
    r.summary = "none";
  }
  return r;
}

Report group_build(Session& s, const Options& o) {
  BlockLayout layout = layout_arg(o);
  std::optional<LabeledTree> tree;
  if (!o.tree.empty()) tree = doc::tree_from(s.load(o.tree), "tree");
  PrimeTable primes = primes_for(layout, tree);
  if (!o.prime_bounds.empty()) {
    auto v = naturals(o.prime_bounds, "--prime-bounds");
    if (v.size() != 3) throw InputError("option '--prime-bounds': expected levels,lengths,labels");
    primes = PrimeTable::standard(v[0], v[1], v[2]);
  }
  TruncatedGroup g = build_group(layout, tree, primes);
  Report r;
  r.body = doc::to_json(g);
  r.summary = "rank " + std::to_string(g.rank()) + ", " + std::to_string(g.families().size()) +
              " families";
  r.parameters = layout_params(layout);
  return r;
}

Report group_member(Session& s, const Options& o) {
  auto g = group_arg(s, o.group_a, "group");
  auto x = element_arg(s, g, o.element);
  Report r;
  bool in = contains(g, x);
  r.body["member"] = in;
  if (in && o.witness) r.body["decomposition"] = decomposition_json(decompose(g, x));
  r.summary = "member: " + yes_no(in);
  r.parameters = layout_params(g.layout());
  return r;
}

Report group_divides(Session& s, const Options& o) {
  auto g = group_arg(s, o.group_a, "group");
  auto x = element_arg(s, g, o.element);
  if (o.prime == 0) throw InputError("option '--prime': required");
  Report r;
  bool d = divides_pinf(g, o.prime, x);
  r.body["divisible"] = d;
  r.summary = "divisible by all powers of " + std::to_string(o.prime) + ": " + yes_no(d);
  r.parameters = layout_params(g.layout());
  r.parameters["prime"] = o.prime;
  return r;
}

Report formula_phi(Session& s, const Options& o) {
  auto g = group_arg(s, o.group_a, "group");
  auto x = element_arg(s, g, o.element);
  Ordinal beta = o.beta.empty() ? Ordinal{} : ordinal_arg(o.beta, "--beta");
  Report r;
  bool v = eval_phi(g, o.n, o.m, beta, x);
  r.body["value"] = v;
  r.summary = "phi: " + std::string(v ? "true" : "false");
  r.parameters = layout_params(g.layout());
  r.parameters["n"] = o.n;
  r.parameters["m"] = o.m;
  r.parameters["beta"] = doc::to_json(beta);
  return r;
}

Report formula_psi(Session& s, const Options& o) {
  auto g = group_arg(s, o.group_a, "group");
  auto x = element_arg(s, g, o.element);
  Ordinal alpha = ordinal_arg(o.alpha, "--alpha");
  Report r;
  bool direct = eval_psi(g, o.n, alpha, x);
  r.body["eval"] = direct;
  r.body["safe"] = g.layout().contains(alpha) && g.layout().is_safe(alpha);
  std::string summary = "psi: " + std::string(direct ? "true" : "false");
  if (o.n < g.layout().blocks()) {
    auto u = unfold_psi(g, o.n, alpha, x);
    r.body["unfold"] = u.value;
    r.body["candidates"] = u.candidates;
    if (o.witness && u.witness) r.body["witness"] = doc::to_json(*u.witness)["terms"];
    summary += ", unfolded: " + std::string(u.value ? "true" : "false");
  } else {
    r.body["unfold"] = nullptr;
  }
  r.summary = summary;
  r.parameters = layout_params(g.layout());
  r.parameters["n"] = o.n;
  r.parameters["alpha"] = doc::to_json(alpha);
  return r;
}

Report formula_plength(Session&, const Options& o) {
  if (o.prime == 0) throw InputError("option '--prime': required");
  auto orders = naturals(o.orders, "--orders");
  Report r;
  auto nu = p_length(orders, o.prime);
  r.body["p_length"] = nu;
  r.summary = "p-length " + std::to_string(nu);
  r.parameters = Json{{"orders", orders}, {"prime", o.prime}};
  return r;
}

Json hom_json(const HomSpace& h, bool witness) {
  Json j{{"dimension", h.dimension()},
         {"unknowns", h.unknowns},
         {"constraints", h.constraints},
         {"equations_rank", h.equations_rank},
         {"source_rank", h.source_rank},
         {"target_rank", h.target_rank}};
  if (witness) {
    Json basis = Json::array();
    for (auto& m : h.basis) basis.push_back(doc::to_json(m));
    j["basis"] = basis;
  }
  return j;
}

Report rigid_hom(Session& s, const Options& o) {
  auto a = group_arg(s, o.group_a, "source");
  auto b = group_arg(s, o.group_b, "target");
  Report r;
  HomSpace h = hom_space(a, b);
  r.body = hom_json(h, o.witness);
  r.summary = "hom dimension " + std::to_string(h.dimension());
  r.parameters = layout_params(a.layout());
  return r;
}

Report rigid_auto(Session& s, const Options& o) {
  auto g = group_arg(s, o.group_a, "group");
  HomSpace endo = hom_space(g, g);
  auto rep = classify_automorphisms(g, endo);
  Report r;
  Json scalars = Json::array();
  for (auto& c : rep.scalars) scalars.push_back(to_text(c));
  r.body = Json{{"scalars", scalars},
                {"unit_primes", rep.unit_primes},
                {"identity_in_space", rep.identity_in_space},
                {"endo_dimension", rep.endo_dimension}};
  std::string set;
  if (rep.scalars.empty()) set = "{}";
  else if (rep.unit_primes.empty()) set = "{+1, -1}";
  else set = "{+1, -1} times units at " + Json(rep.unit_primes).dump();
  r.summary = set;
  r.parameters = layout_params(g.layout());
  return r;
}

Report rigid_extract(Session& s, const Options& o) {
  auto a = group_arg(s, o.group_a, "source");
  auto b = group_arg(s, o.group_b, "target");
  HomSpace h = hom_space(a, b);
  if (h.dimension() == 0) throw InputError("hom space is zero; nothing to extract");
  std::size_t k = 0;
  if (o.has_basis_index) {
    if (o.basis_index >= h.dimension()) throw InputError("option '--basis-index': outside the basis");
    k = o.basis_index;
  } else {
    while (k < h.dimension() && !has_root_coefficient(h.basis[k], a, b)) ++k;
    if (k == h.dimension()) throw InputError("no basis map has a nonzero root coefficient");
  }
  Extraction ex = extract_tree_map(h.basis[k], a, b);
  Report r;
  Json talpha = Json::array();
  for (auto o2 : ex.target_alpha) talpha.push_back(doc::to_json(o2));
  r.body = Json{{"basis_index", k},
                {"level", ex.level},
                {"source_root", describe(a.atom(ex.source_root))},
                {"target_root", describe(b.atom(ex.target_root))},
                {"alpha", doc::to_json(ex.alpha)},
                {"target_alpha", talpha},
                {"theta", doc::to_json(ex.theta, *a.tree(), *b.tree())}};
  r.summary = "extracted tree map from basis map " + std::to_string(k);
  r.parameters = layout_params(a.layout());
  return r;
}

Report rigid_typetree(Session& s, const Options& o) {
  auto g = abelian_arg(s, o.orders, "--orders");
  QfTypeRegistry reg;
  auto t = qf_type_tree(g, o.depth, reg);
  Report r;
  r.body["tree"] = doc::to_json(t);
  Json types = Json::array();
  for (std::size_t l = 0; l < reg.size(); ++l) {
    Json basis = Json::array();
    for (auto& row : reg.type(static_cast<Label>(l)).basis) {
      Json jr = Json::array();
      for (auto& v : row) jr.push_back(v.get_str());
      basis.push_back(jr);
    }
    types.push_back(Json{{"label", l}, {"arity", reg.type(static_cast<Label>(l)).arity}, {"basis", basis}});
  }
  r.body["types"] = types;
  r.summary = std::to_string(t.size()) + " nodes, " + std::to_string(reg.size()) + " types";
  r.parameters = Json{{"orders", g.orders()}, {"depth", o.depth}};
  return r;
}

std::vector<std::vector<std::size_t>> subsets_arg(const std::string& s) {
  std::vector<std::vector<std::size_t>> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';')) {
    auto v = naturals(item, "--subsets");
    out.emplace_back(v.begin(), v.end());
  }
  if (out.empty()) throw InputError("option '--subsets': expected at least one subset");
  return out;
}

Report hfam_build(Session&, const Options& o) {
  BlockLayout layout = layout_arg(o);
  auto fam = build_h_family(layout, subsets_arg(o.subsets));
  Report r;
  Json groups = Json::array();
  for (auto& g : fam) groups.push_back(doc::to_json(g));
  r.body = doc::header("group_family");
  r.body["groups"] = groups;
  std::string ranks;
  for (auto& g : fam) ranks += (ranks.empty() ? "" : ",") + std::to_string(g.rank());
  r.summary = std::to_string(fam.size()) + " groups, ranks " + ranks;
  r.parameters = layout_params(layout);
  r.parameters["subsets"] = o.subsets;
  return r;
}

Report hfam_distinguish(Session& s, const Options& o) {
  Json fam = s.load(o.family);
  doc::expect_kind(fam, "group_family");
  if (!fam.contains("groups") || !fam["groups"].is_array())
    throw InputError("field 'family.groups': expected a list");
  std::vector<TruncatedGroup> groups;
  for (std::size_t i = 0; i < fam["groups"].size(); ++i)
    groups.push_back(doc::group_from(fam["groups"][i], "family.groups[" + std::to_string(i) + "]"));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (o.pair_i >= 0 || o.pair_j >= 0) {
    if (o.pair_i < 0 || o.pair_j < 0) throw InputError("options '--i' and '--j' go together");
    pairs.emplace_back(o.pair_i, o.pair_j);
  } else {
    for (std::size_t i = 0; i < groups.size(); ++i)
      for (std::size_t j = 0; j < groups.size(); ++j)
        if (i != j) pairs.emplace_back(i, j);
  }
  Report r;
  Json list = Json::array();
  std::size_t ok = 0;
  for (auto [i, j] : pairs) {
    auto d = distinguishing_sentence(i, j, groups);
    ok += (d.truth_i != d.truth_j) ? 1 : 0;
    list.push_back(Json{{"i", i},
                        {"j", j},
                        {"alpha", doc::to_json(d.alpha)},
                        {"truth_i", d.truth_i},
                        {"truth_j", d.truth_j},
                        {"swapped", d.swapped}});
  }
  r.body["pairs"] = list;
  r.summary = std::to_string(ok) + " of " + std::to_string(pairs.size()) + " pairs distinguished";
  if (!groups.empty()) r.parameters = layout_params(groups.front().layout());
  return r;
}

Report game_ef(Session& s, const Options& o) {
  auto a = abelian_arg(s, o.abelian_a, "A");
  auto b = abelian_arg(s, o.abelian_b, "B");
  BackForthGame game(a, b);
  bool eq = game.duplicator_wins();
  Report r;
  r.body = Json{{"equivalent", eq},
                {"invariant_factors_a", invariant_factors(a)},
                {"invariant_factors_b", invariant_factors(b)},
                {"states_decided", game.states_decided()}};
  r.summary = "back-and-forth equivalent: " + yes_no(eq);
  r.parameters = Json{{"orders_a", a.orders()}, {"orders_b", b.orders()}};
  return r;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on labeled trees, truncated torsion-free groups and finite abelian games",
               "rigidlab"};
  app.require_subcommand(1);
  Options o;
  std::string command;
  std::function<Report(Session&, const Options&)> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                  std::function<Report(Session&, const Options&)> fn) {
    CLI::App* c = parent->add_subcommand(name, help);
    c->callback([&, fn, path = parent->get_name() + " " + name] {
      command = path;
      action = fn;
    });
    return c;
  };
  auto group = [&](const std::string& name, const std::string& help) {
    auto* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    return g;
  };

  auto* tree = group("tree", "labeled tree embedding");
  auto* c = leaf(tree, "embed", "decide embedding of t1 into t2", tree_embed);
  c->add_option("t1", o.t1)->required();
  c->add_option("t2", o.t2)->required();
  c->add_option("q", o.q)->required();
  c->add_flag("--witness", o.witness);
  c = leaf(tree, "antichain", "list embedding pairs in a family", tree_antichain);
  c->add_option("family", o.family)->required();
  c->add_option("q", o.q)->required();

  auto* part = group("partition", "shift-invariant sequences for colorings");
  c = leaf(part, "search", "depth-first search for a sequence", partition_search);
  c->add_option("coloring", o.coloring);
  c->add_option("--len", o.len)->required();
  c->add_option("--random", o.random_spec, "ground,cap,colors for a generated table");
  c->add_option("--seed", o.seed);

  auto* grp = group("group", "truncated groups");
  c = leaf(grp, "build", "build a group document", group_build);
  c->add_option("--params", o.params, "L,D,N,zlen")->required();
  c->add_option("--sample-cap", o.sample_cap);
  c->add_option("--tree", o.tree);
  c->add_option("--prime-bounds", o.prime_bounds, "levels,lengths,labels");
  c = leaf(grp, "member", "membership of an element", group_member);
  c->add_option("group", o.group_a)->required();
  c->add_option("element", o.element)->required();
  c->add_flag("--witness", o.witness);
  c = leaf(grp, "divides", "divisibility by all powers of a prime", group_divides);
  c->add_option("group", o.group_a)->required();
  c->add_option("element", o.element)->required();
  c->add_option("--prime", o.prime)->required();

  auto* fml = group("formula", "formula evaluation");
  c = leaf(fml, "phi", "evaluate phi(n, m, beta)", formula_phi);
  c->add_option("group", o.group_a)->required();
  c->add_option("element", o.element)->required();
  c->add_option("--n", o.n)->required();
  c->add_option("--m", o.m)->required();
  c->add_option("--beta", o.beta, "block:offset");
  c = leaf(fml, "psi", "evaluate psi(n, alpha) directly and unfolded", formula_psi);
  c->add_option("group", o.group_a)->required();
  c->add_option("element", o.element)->required();
  c->add_option("--n", o.n)->required();
  c->add_option("--alpha", o.alpha, "block:offset")->required();
  c->add_flag("--witness", o.witness);
  c = leaf(fml, "plength", "p-length of a finite p-group", formula_plength);
  c->add_option("--orders", o.orders)->required();
  c->add_option("--prime", o.prime)->required();

  auto* rig = group("rigid", "homomorphism spaces and their consequences");
  c = leaf(rig, "hom", "hom space between two groups", rigid_hom);
  c->add_option("source", o.group_a)->required();
  c->add_option("target", o.group_b)->required();
  c->add_flag("--witness", o.witness);
  c = leaf(rig, "auto", "scalar automorphisms", rigid_auto);
  c->add_option("group", o.group_a)->required();
  c = leaf(rig, "extract", "tree map from a hom space element", rigid_extract);
  c->add_option("source", o.group_a)->required();
  c->add_option("target", o.group_b)->required();
  c->add_option("--basis-index", o.basis_index)->each([&](const std::string&) { o.has_basis_index = true; });
  c = leaf(rig, "typetree", "quantifier-free type tree of a finite group", rigid_typetree);
  c->add_option("--orders", o.orders)->required();
  c->add_option("--depth", o.depth)->required();

  auto* hf = group("hfam", "subset-indexed group families");
  c = leaf(hf, "build", "build the family", hfam_build);
  c->add_option("--params", o.params, "L,D,N,zlen")->required();
  c->add_option("--sample-cap", o.sample_cap);
  c->add_option("--subsets", o.subsets, "offsets separated by ',' and subsets by ';'")->required();
  c = leaf(hf, "distinguish", "distinguishing ordinals for ordered pairs", hfam_distinguish);
  c->add_option("family", o.family)->required();
  c->add_option("--i", o.pair_i);
  c->add_option("--j", o.pair_j);

  auto* gm = group("game", "back-and-forth games");
  c = leaf(gm, "ef", "back-and-forth equivalence of two finite abelian groups", game_ef);
  c->add_option("A", o.abelian_a, "document or comma separated cyclic orders")->required();
  c->add_option("B", o.abelian_b, "document or comma separated cyclic orders")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  Session session(args);
  try {
    Report r = action(session, o);
    Json j = doc::header("report");
    j["command"] = command;
    j["summary"] = r.summary;
    j["body"] = std::move(r.body);
    j["parameters"] = std::move(r.parameters);
    j["input_digest"] = session.digest();
    out << j.dump(2) << "\n";
    return 0;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ExtractionError& e) {
    err << "extraction failed: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace rigidlab::cli
