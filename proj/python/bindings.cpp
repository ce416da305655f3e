#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "loopforge/analysis.hpp"
#include "loopforge/builtins.hpp"
#include "loopforge/errors.hpp"
#include "loopforge/isotopy.hpp"
#include "loopforge/loop_table.hpp"
#include "loopforge/perm.hpp"
#include "loopforge/perm_group.hpp"
#include "loopforge/structure.hpp"
#include "loopforge/table_io.hpp"
#include "loopforge/twisted.hpp"

namespace py = pybind11;
using namespace loopforge;

PYBIND11_MODULE(_loopforge, m) {
  m.doc() = "Finite loop analysis: Cayley tables, multiplication groups, isotopes, T(1/2)";

  static py::exception<LoopError> exc(m, "LoopError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const LoopError& e) {
      exc(e.what());
    }
  });

  py::class_<Perm>(m, "Perm")
      .def(py::init<int>(), py::arg("degree"))
      .def(py::init<std::vector<int>>(), py::arg("images"))
      .def_property_readonly("degree", &Perm::degree)
      .def("images", &Perm::images)
      .def("inverse", &Perm::inverse)
      .def("order", &Perm::order)
      .def("is_identity", &Perm::is_identity)
      .def("__getitem__", [](const Perm& p, int i) {
        if (i < 0 || i >= p.degree()) throw py::index_error();
        return p[i];
      })
      .def("__mul__", [](const Perm& a, const Perm& b) { return a * b; })
      .def("__eq__", [](const Perm& a, const Perm& b) { return a == b; })
      .def("__hash__", [](const Perm& p) { return PermHash{}(p); })
      .def("__repr__", [](const Perm& p) { return "Perm(" + p.to_cycle_string() + ")"; });

  py::class_<LoopTable>(m, "LoopTable")
      .def_static(
          "from_rows", [](const std::vector<std::vector<int>>& rows) { return LoopTable::from_rows(rows); },
          py::arg("rows"), "Rows with 0-based entries")
      .def_property_readonly("size", &LoopTable::size)
      .def_property_readonly("identity", &LoopTable::identity)
      .def("mul", &LoopTable::mul)
      .def("ldiv", &LoopTable::ldiv)
      .def("rdiv", &LoopTable::rdiv)
      .def("power", &LoopTable::power)
      .def("inverse_of", &LoopTable::inverse_of)
      .def("element_order", &LoopTable::element_order)
      .def("exponent", &LoopTable::exponent)
      .def("sqrt_of", &LoopTable::sqrt_of)
      .def("opposite", &LoopTable::opposite)
      .def("rows", &LoopTable::rows)
      .def("right_translation", &LoopTable::right_translation)
      .def("left_translation", &LoopTable::left_translation)
      .def("__eq__", [](const LoopTable& a, const LoopTable& b) { return a == b; })
      .def("__repr__", [](const LoopTable& L) { return "LoopTable(order=" + std::to_string(L.size()) + ")"; });

  m.def("is_right_bol", &is_right_bol);
  m.def("is_left_bol", &is_left_bol);
  m.def("has_aip", &has_aip);
  m.def("has_aaip", &has_aaip);
  m.def("is_moufang", &is_moufang);
  m.def("is_bruck", &is_bruck);
  m.def("is_associative", &is_associative);
  m.def("is_commutative", &is_commutative);
  m.def("is_power_associative", &is_power_associative);
  m.def("is_right_power_alternative", &is_right_power_alternative);
  m.def("is_uniquely_2_divisible", &is_uniquely_2_divisible);
  m.def("direct_product", &direct_product);

  py::class_<PropertyFlags>(m, "PropertyFlags")
      .def_static("of", &PropertyFlags::of)
      .def_readonly("right_bol", &PropertyFlags::right_bol)
      .def_readonly("left_bol", &PropertyFlags::left_bol)
      .def_readonly("moufang", &PropertyFlags::moufang)
      .def_readonly("bruck", &PropertyFlags::bruck)
      .def_readonly("aip", &PropertyFlags::aip)
      .def_readonly("aaip", &PropertyFlags::aaip)
      .def_readonly("associative", &PropertyFlags::associative)
      .def_readonly("commutative", &PropertyFlags::commutative)
      .def_readonly("power_associative", &PropertyFlags::power_associative)
      .def_readonly("right_power_alternative", &PropertyFlags::right_power_alternative)
      .def_readonly("uniquely_2_divisible", &PropertyFlags::uniquely_2_divisible)
      .def_readonly("exponent", &PropertyFlags::exponent);

  py::class_<PermGroup>(m, "PermGroup")
      .def_static("trivial", &PermGroup::trivial)
      .def_static("from_generators",
                  [](const std::vector<Perm>& gens) { return PermGroup::from_generators(gens); })
      .def_property_readonly("degree", &PermGroup::degree)
      .def_property_readonly("order", &PermGroup::order)
      .def("generators", &PermGroup::generators)
      .def("contains", &PermGroup::contains)
      .def("elements", &PermGroup::elements, py::arg("cap") = PermGroup::kDefaultEnumCap)
      .def("stabilizer", &PermGroup::stabilizer)
      .def("orbit", &PermGroup::orbit)
      .def("__repr__",
           [](const PermGroup& G) { return "PermGroup(order=" + std::to_string(G.order()) + ")"; });

  m.def("derived_subgroup", &derived_subgroup);
  m.def("derived_length", &derived_length);
  m.def("center", &center, py::arg("G"), py::arg("cap") = PermGroup::kDefaultEnumCap);
  m.def("nilpotency_class", &nilpotency_class);
  m.def("is_abelian", &is_abelian);
  m.def("is_elementary_abelian", &is_elementary_abelian);
  m.def("equal_groups", &equal_groups);
  m.def("is_normal_subgroup", &is_normal_subgroup);
  m.def("normal_closure", &normal_closure);
  m.def("quotient_is_elementary_abelian", &quotient_is_elementary_abelian);

  py::class_<SubloopSet>(m, "SubloopSet")
      .def(py::init([](std::vector<int> members) { return SubloopSet{std::move(members)}; }))
      .def_readonly("members", &SubloopSet::members)
      .def("__len__", [](const SubloopSet& s) { return s.members.size(); })
      .def("__contains__", [](const SubloopSet& s, int x) { return s.contains(x); })
      .def("__eq__", [](const SubloopSet& a, const SubloopSet& b) { return a == b; })
      .def("__repr__", [](const SubloopSet& s) {
        return "SubloopSet(size=" + std::to_string(s.members.size()) + ")";
      });

  m.def("mlt", &mlt);
  m.def("rmlt", &rmlt);
  m.def("lmlt", &lmlt);
  m.def("inn", &inn);
  m.def("rinn", &rinn);
  m.def("linn", &linn);
  m.def("nucleus_left", &nucleus_left);
  m.def("nucleus_middle", &nucleus_middle);
  m.def("nucleus_right", &nucleus_right);
  m.def("nucleus", &nucleus);
  m.def("commutant", &commutant);
  m.def("commutant_of", &commutant_of);
  m.def("center_loop", &center_loop);
  m.def("is_subloop", &is_subloop);
  m.def("subloop_generated", &subloop_generated);
  m.def("is_normal", &is_normal);
  m.def("normal_closure_loop", &normal_closure_loop);
  m.def("derived_subloop", &derived_subloop);
  m.def("associator_subloop", &associator_subloop);
  m.def("quotient", &quotient);
  m.def("subtable", &subtable);
  m.def("all_normal_subloops", &all_normal_subloops, py::arg("L"), py::arg("cap") = 256);
  m.def("is_simple", &is_simple);
  m.def("is_solvable", &is_solvable);
  m.def("upper_central_series", &upper_central_series);
  m.def("is_centrally_nilpotent", &is_centrally_nilpotent);
  m.def("is_automorphism", &is_automorphism);

  m.def("principal_isotope", &principal_isotope);
  m.def("is_isomorphic", &is_isomorphic);
  py::class_<IsotopyClass>(m, "IsotopyClass")
      .def_readonly("representative", &IsotopyClass::representative)
      .def_readonly("members", &IsotopyClass::members);
  py::class_<IsotopyPartition>(m, "IsotopyPartition")
      .def_readonly("classes", &IsotopyPartition::classes);
  m.def("isotopy_classes", &isotopy_classes, py::arg("L"), py::arg("cap") = 64);

  py::class_<GroupTable>(m, "GroupTable")
      .def_static("certify", &GroupTable::certify)
      .def_property_readonly("table", &GroupTable::table)
      .def_property_readonly("size", &GroupTable::size)
      .def_property_readonly("identity", &GroupTable::identity)
      .def("mul", &GroupTable::mul)
      .def("inv", &GroupTable::inv)
      .def("conj", &GroupTable::conj)
      .def("comm", &GroupTable::comm);
  py::class_<TwistedSubset>(m, "TwistedSubset")
      .def_readonly("members", &TwistedSubset::members)
      .def("__contains__", [](const TwistedSubset& t, int x) { return t.contains(x); });
  m.def("is_twisted_subgroup", &is_twisted_subgroup);
  m.def("twisted_subset", &twisted_subset);
  m.def("k_tau", &k_tau);
  m.def("aschbacher_radical", &aschbacher_radical, py::arg("G"), py::arg("T"), py::arg("cap") = 512);
  m.def("is_u2d_twisted", &is_u2d_twisted);
  m.def("sqrt_in", &sqrt_in);
  m.def("t_half", py::overload_cast<const GroupTable&, const TwistedSubset&>(&t_half));
  m.def("t_half_full", py::overload_cast<const GroupTable&>(&t_half));
  m.def("thalf_commutes", &thalf_commutes);
  m.def("find_inverting_automorphism", &find_inverting_automorphism);

  m.def("builtin_names", &builtin_names);
  m.def("builtin_table", &builtin_table);
  m.def("cyclic_group", &cyclic_group);
  m.def("abelian_group", &abelian_group);
  m.def("metacyclic_group", &metacyclic_group);
  m.def("heisenberg3", &heisenberg3);
  m.def("abelian_factorizations", &abelian_factorizations);

  m.def("read_table_text", &read_table_text);
  m.def("read_table_file", &read_table_file);
  m.def("format_table", &format_table);
  m.def("write_table_file", &write_table_file);

  py::class_<AnalysisReport>(m, "AnalysisReport")
      .def_readonly("order", &AnalysisReport::order)
      .def_readonly("identity_label", &AnalysisReport::identity_label)
      .def_property_readonly("json", [](const AnalysisReport& r) { return emit_json(r); })
      .def_property_readonly("text", [](const AnalysisReport& r) { return emit_text(r); });
  m.def(
      "analyze",
      [](const LoopTable& L, bool with_isotopes) {
        AnalyzeOptions opt;
        opt.with_isotopes = with_isotopes;
        return analyze(L, opt);
      },
      py::arg("L"), py::arg("with_isotopes") = false);
  m.def("emit_json", &emit_json);
  m.def("emit_text", &emit_text);
}
