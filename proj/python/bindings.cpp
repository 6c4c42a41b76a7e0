#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "klheap/deodhar.hpp"
#include "klheap/enumerate.hpp"
#include "klheap/error.hpp"
#include "klheap/heap.hpp"
#include "klheap/hecke.hpp"
#include "klheap/schubert.hpp"

namespace py = pybind11;
using namespace klheap;

namespace {

// Words and masks arrive either as text or as integer sequences.
Word to_word(const py::object& value, int rank) {
  if (py::isinstance<py::str>(value)) return Word::parse(value.cast<std::string>(), rank);
  auto letters = value.cast<std::vector<int>>();
  return rank > 0 ? Word(std::move(letters), rank) : Word(std::move(letters));
}

Mask to_mask(const py::object& value) {
  if (py::isinstance<py::str>(value)) return Mask::parse(value.cast<std::string>());
  std::vector<std::uint8_t> bits;
  for (int b : value.cast<std::vector<int>>()) bits.push_back(static_cast<std::uint8_t>(b));
  return Mask(std::move(bits));
}

template <class Table>
py::dict as_dict(const Table& table) {
  py::dict out;
  for (const auto& [x, p] : table) out[py::cast(x)] = py::cast(p);
  return out;
}

}  // namespace

PYBIND11_MODULE(_klheap, m) {
  m.doc() = "Kazhdan-Lusztig polynomials of 321-hexagon-avoiding permutations via heaps and masks";

  // Translators run newest first, so the base class is registered first.
  auto& error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", error);
  py::register_exception<DomainError>(m, "DomainError", error);
  py::register_exception<ResourceError>(m, "ResourceError", error);
  py::register_exception<InternalError>(m, "InternalError", error);

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<std::vector<int>>(), py::arg("images"))
      .def_static("parse", &Permutation::parse, py::arg("text"), py::arg("identity_rank") = 0)
      .def_static("identity", &Permutation::identity, py::arg("n"))
      .def_static("generator", &Permutation::generator, py::arg("n"), py::arg("i"))
      .def_property_readonly("images", [](const Permutation& p) {
        return std::vector<int>(p.images().begin(), p.images().end());
      })
      .def_property_readonly("rank", &Permutation::size)
      .def("length", [](const Permutation& p) { return length(p); })
      .def("inverse", &Permutation::inverse)
      .def("__len__", &Permutation::size)
      .def("__call__", [](const Permutation& p, int i) {
        if (i < 1 || i > p.size()) throw py::index_error("argument outside 1..n");
        return p(i);
      })
      .def("__str__", &Permutation::to_string)
      .def("__repr__", [](const Permutation& p) { return "Permutation([" + p.to_string() + "])"; })
      .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; })
      .def("__hash__", [](const Permutation& p) { return PermutationHash{}(p); });

  py::class_<Word>(m, "Word")
      .def(py::init([](const py::object& letters, int rank) { return to_word(letters, rank); }), py::arg("letters"),
           py::arg("rank") = 0)
      .def_property_readonly("letters", [](const Word& w) {
        return std::vector<int>(w.letters().begin(), w.letters().end());
      })
      .def_property_readonly("rank", &Word::rank)
      .def("__len__", &Word::size)
      .def("__str__", &Word::to_string)
      .def("__repr__", [](const Word& w) { return "Word('" + w.to_string() + "')"; });

  py::class_<QPoly>(m, "QPoly")
      .def(py::init<std::vector<Coeff>>(), py::arg("coeffs"))
      .def_property_readonly("coeffs", [](const QPoly& p) {
        return std::vector<Coeff>(p.coeffs().begin(), p.coeffs().end());
      })
      .def_property_readonly("degree", &QPoly::degree)
      .def("evaluate", &QPoly::evaluate, py::arg("q"))
      .def("__str__", &QPoly::to_string)
      .def("__repr__", [](const QPoly& p) { return "QPoly('" + p.to_string() + "')"; })
      .def("__eq__", [](const QPoly& a, const QPoly& b) { return a == b; })
      .def("__eq__", [](const QPoly& a, Coeff c) { return a == QPoly(c); });

  m.def("apply_word", [](const py::object& w) { return apply_word(to_word(w, 0)); }, py::arg("word"));
  m.def("is_reduced", [](const py::object& w) { return is_reduced(to_word(w, 0)); }, py::arg("word"));
  m.def("canonical_reduced_word", &canonical_reduced_word, py::arg("w"));
  m.def("bruhat_leq", &bruhat_leq, py::arg("x"), py::arg("w"));
  m.def("is_321_avoiding", &is_321_avoiding, py::arg("w"));
  m.def("is_hexagon_avoiding", &is_hexagon_avoiding, py::arg("w"));
  m.def("is_321_hexagon_avoiding", &is_321_hexagon_avoiding, py::arg("w"));

  m.def(
      "defect_set",
      [](const py::object& w, const py::object& mask) {
        const DefectRecord r = defect_set(to_word(w, 0), to_mask(mask));
        py::dict out;
        out["defects"] = r.defects;
        out["zero_defects"] = r.zero_defects;
        out["one_defects"] = r.one_defects;
        out["product"] = r.product;
        return out;
      },
      py::arg("word"), py::arg("mask"));
  m.def(
      "delta",
      [](const py::object& w, const py::object& mask) {
        const HalfInteger d = delta(to_word(w, 0), to_mask(mask));
        return py::module_::import("fractions").attr("Fraction")(d.twice, 2);
      },
      py::arg("word"), py::arg("mask"), "The half-integer Δ as a fractions.Fraction.");
  m.def(
      "deodhar_table",
      [](const py::object& w, unsigned jobs) {
        DeodharTable t;
        {
          const Word word = to_word(w, 0);
          py::gil_scoped_release release;
          t = deodhar_table(word, EnumerationOptions{jobs});
        }
        return as_dict(t);
      },
      py::arg("word"), py::arg("jobs") = 1, "P_x for every x reached by a mask, in ShortLex order.");
  m.def(
      "deodhar_poly", [](const py::object& w, const Permutation& x) { return deodhar_poly(to_word(w, 0), x); },
      py::arg("word"), py::arg("x"));
  m.def(
      "kl_table",
      [](const Permutation& w) {
        KLTable t;
        {
          py::gil_scoped_release release;
          t = kl_table(w);
        }
        return as_dict(t.entries);
      },
      py::arg("w"), "P_{x,w} for every x <= w from the Hecke algebra, in ShortLex order.");
  m.def("kl_poly", [](const Permutation& x, const Permutation& w) { return kl_table(w).at(x); }, py::arg("x"),
        py::arg("w"));
  m.def("is_tight", &is_tight, py::arg("w"));
  m.def("poincare_ih", &poincare_ih, py::arg("w"));

  m.def(
      "heap",
      [](const py::object& w) {
        std::vector<std::pair<int, int>> points;
        const HeapEmbedding h = build_heap(to_word(w, 0));
        for (const HeapPoint& p : h.points()) points.emplace_back(p.column, p.level);
        return points;
      },
      py::arg("word"), "(column, level) for each letter of a reduced 321-avoiding word.");
  m.def(
      "render_heap",
      [](const py::object& w, const py::object& mask) {
        const HeapEmbedding h = build_heap(to_word(w, 0));
        if (mask.is_none()) return render_ascii(h);
        const Mask m = to_mask(mask);
        return render_ascii(h, &m);
      },
      py::arg("word"), py::arg("mask") = py::none());

  m.def("max_singular_locus", &max_singular_locus, py::arg("w"));
  m.def("max_singular_locus_oracle", &max_singular_locus_oracle, py::arg("w"));
  m.def("is_smooth", &is_smooth, py::arg("w"));

  m.def(
      "enumerate_rank",
      [](int n, unsigned jobs) {
        EnumRow row;
        {
          py::gil_scoped_release release;
          row = enumerate_rank(n, jobs);
        }
        return py::make_tuple(row.count_321, row.count_321_hexagon);
      },
      py::arg("n"), py::arg("jobs") = 1, "(321-avoiding count, 321-hexagon-avoiding count) in S_n.");
  m.def("q_fibonacci", &q_fibonacci, py::arg("n"));
}
