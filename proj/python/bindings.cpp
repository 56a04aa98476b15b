#include "commands.hpp"
#include "rigidlab/backforth.hpp"
#include "rigidlab/errors.hpp"
#include "rigidlab/formula.hpp"
#include "rigidlab/partition_search.hpp"
#include "rigidlab/rigidity.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace rigidlab;

namespace {

// Keys are atom indices; values are anything whose str() is "n" or "n/d"
// (int, fractions.Fraction, str).
GroupElement element_from(const py::dict& terms) {
  GroupElement x;
  for (auto [k, v] : terms) x.add(k.cast<std::size_t>(), parse_rational(py::str(v).cast<std::string>()));
  return x;
}

Ordinal ordinal_from(const std::pair<std::size_t, std::size_t>& p) { return {p.first, p.second}; }

LabeledTree tree_from(const std::vector<std::pair<NodePath, Label>>& nodes) {
  return LabeledTree::from_nodes(nodes);
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations on truncated rigid groups and their combinatorial helpers";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);
  py::register_exception<ExtractionError>(m, "ExtractionError", PyExc_RuntimeError);

  py::class_<LabeledTree>(m, "Tree")
      .def(py::init(&tree_from), py::arg("nodes"))
      .def("__len__", &LabeledTree::size)
      .def("label", &LabeledTree::label);

  py::class_<QuasiOrder>(m, "QuasiOrder")
      .def(py::init<std::vector<Label>, const std::vector<std::pair<Label, Label>>&>(),
           py::arg("elements"), py::arg("leq"))
      .def_static("equality", &QuasiOrder::equality)
      .def_static("chain", &QuasiOrder::chain);

  m.def("embeds", &embeds, py::arg("t1"), py::arg("t2"), py::arg("q"));
  m.def(
      "find_embedding",
      [](const LabeledTree& a, const LabeledTree& b, const QuasiOrder& q)
          -> std::optional<std::vector<std::size_t>> {
        auto e = find_embedding(a, b, q);
        if (!e) return std::nullopt;
        return e->image;
      },
      py::arg("t1"), py::arg("t2"), py::arg("q"));

  py::class_<ColoringTable>(m, "Coloring")
      .def(py::init([](std::size_t ground, std::size_t cap,
                       const std::map<std::vector<std::size_t>, Color>& colors) {
             std::map<Subset, Color> table;
             for (auto& [s, c] : colors) table[subset_of(s)] = c;
             return ColoringTable(ground, cap, std::move(table));
           }),
           py::arg("ground_size"), py::arg("cap"), py::arg("colors"))
      .def_static("random", &ColoringTable::random, py::arg("ground_size"), py::arg("cap"),
                  py::arg("color_count"), py::arg("seed"));
  m.def("search_shift_invariant", &search_shift_invariant, py::arg("coloring"), py::arg("length"));
  m.def("attempt_tree_size", &attempt_tree_size, py::arg("coloring"), py::arg("depth"));

  py::class_<BlockLayout>(m, "Layout")
      .def(py::init(&BlockLayout::build), py::arg("index_size"), py::arg("layers"), py::arg("blocks"),
           py::arg("z_max_len"), py::arg("sample_cap") = BlockLayout::kDefaultSampleCap);

  py::class_<TruncatedGroup>(m, "Group")
      .def_property_readonly("rank", &TruncatedGroup::rank)
      .def_property_readonly("family_primes",
                             [](const TruncatedGroup& g) {
                               std::vector<Prime> out;
                               for (auto& f : g.families()) out.push_back(f.prime);
                               return out;
                             })
      .def("contains", [](const TruncatedGroup& g, const py::dict& x) { return contains(g, element_from(x)); })
      .def("divides", [](const TruncatedGroup& g, Prime p,
                         const py::dict& x) { return divides_pinf(g, p, element_from(x)); })
      .def("phi",
           [](const TruncatedGroup& g, std::size_t n, std::size_t k, std::pair<std::size_t, std::size_t> beta,
              const py::dict& x) { return eval_phi(g, n, k, ordinal_from(beta), element_from(x)); },
           py::arg("n"), py::arg("m"), py::arg("beta"), py::arg("element"))
      .def("psi",
           [](const TruncatedGroup& g, std::size_t n, std::pair<std::size_t, std::size_t> alpha,
              const py::dict& x) { return eval_psi(g, n, ordinal_from(alpha), element_from(x)); },
           py::arg("n"), py::arg("alpha"), py::arg("element"));

  m.def(
      "build_group",
      [](const BlockLayout& l, std::optional<LabeledTree> t) { return build_group(l, t, primes_for(l, t)); },
      py::arg("layout"), py::arg("tree") = std::nullopt);
  m.def("build_h_family", &build_h_family, py::arg("layout"), py::arg("subsets"));

  m.def(
      "hom_dimension", [](const TruncatedGroup& a, const TruncatedGroup& b) { return hom_space(a, b).dimension(); },
      py::arg("source"), py::arg("target"));
  m.def(
      "automorphisms",
      [](const TruncatedGroup& g) {
        auto r = classify_automorphisms(g, hom_space(g, g));
        py::dict d;
        std::vector<std::string> scalars;
        for (auto& s : r.scalars) scalars.push_back(to_text(s));
        d["identity_in_space"] = r.identity_in_space;
        d["endo_dimension"] = r.endo_dimension;
        d["scalars"] = scalars;
        d["unit_primes"] = r.unit_primes;
        return d;
      },
      py::arg("group"));

  m.def("p_length", &p_length, py::arg("cyclic_orders"), py::arg("p"));
  m.def(
      "invariant_factors",
      [](const std::vector<std::uint64_t>& orders) { return invariant_factors(FiniteAbelianGroup(orders)); },
      py::arg("cyclic_orders"));
  m.def(
      "ef_equiv",
      [](const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
        return ef_equiv(FiniteAbelianGroup(a), FiniteAbelianGroup(b));
      },
      py::arg("a"), py::arg("b"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int rc = cli::run(args, out, err);
        return py::make_tuple(rc, out.str(), err.str());
      },
      py::arg("args"), "Runs a command line; returns (exit code, stdout, stderr).");
}
