#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "xsg/analysis.hpp"
#include "xsg/constructions.hpp"
#include "xsg/crossed.hpp"
#include "xsg/errors.hpp"
#include "xsg/formats.hpp"

namespace py = pybind11;
using namespace xsg;

namespace {

GenName gen_arg(const std::string& name) { return gen_name_from_string(name); }

py::int_ big_to_py(const BigInt& v) {
  return py::cast<py::int_>(
      py::module_::import("builtins").attr("int")(v.str()));
}

py::list homology_list(const CrossedSet& X, int k_max) {
  py::list out;
  for (const auto& H : homology(X, k_max)) {
    py::list torsion;
    for (const auto& d : H.torsion) torsion.append(big_to_py(d));
    out.append(py::make_tuple(H.free_rank, torsion));
  }
  return out;
}

py::list snf(const std::vector<std::vector<long long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows[0].size() : 0;
  IntegerMatrix M(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c)
      throw precondition_error("smith_normal_form: ragged matrix");
    for (std::size_t j = 0; j < c; ++j) M.at(i, j) = rows[i][j];
  }
  py::list out;
  for (const auto& d : smith_normal_form(M)) out.append(big_to_py(d));
  return out;
}

} // namespace

PYBIND11_MODULE(xsg, m) {
  m.doc() = "crossed simplicial groups: signed permutations, bar "
            "constructions, nerves, validation, orbits and homology";

  py::register_exception<precondition_error>(m, "PreconditionError",
                                             PyExc_ValueError);
  py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);

  py::enum_<Family>(m, "Family")
      .value("trivial", Family::Trivial)
      .value("cyclic", Family::Cyclic)
      .value("symmetric", Family::Symmetric)
      .value("reflexive", Family::Reflexive)
      .value("dihedral", Family::Dihedral)
      .value("reflexosymmetric", Family::Reflexosymmetric)
      .value("weyl", Family::Weyl);
  m.def("family_from_name", &family_from_name);

  py::class_<SignedPerm>(m, "SignedPerm")
      .def(py::init([](const std::vector<int>& images,
                       const std::vector<int>& signs) {
        std::vector<std::uint8_t> imgs(images.begin(), images.end());
        std::vector<std::int8_t> sgns(signs.begin(), signs.end());
        return SignedPerm(std::move(imgs), std::move(sgns));
      }))
      .def_property_readonly("degree", &SignedPerm::degree)
      .def("image", &SignedPerm::image)
      .def("sign", &SignedPerm::sign)
      .def("is_identity", &SignedPerm::is_identity)
      .def("__repr__", &SignedPerm::to_string)
      .def(py::self == py::self)
      .def(py::self < py::self);

  m.def("identity_perm", &identity_perm);
  m.def("tau", &rotation);
  m.def("omega", &reversal);
  m.def("sigma", &adjacent_swap, py::arg("i"), py::arg("n"));
  m.def("kappa", &leading_flip);
  m.def("generator",
        [](Family f, const std::string& name, int n) {
          return generator(f, gen_arg(name), n);
        });
  m.def("compose",
        py::overload_cast<const SignedPerm&, const SignedPerm&>(&compose));
  m.def("inverse", &inverse);
  m.def("is_member", &is_member);
  m.def("closure_order", &closure_order);
  m.def("family_closure", &family_closure);
  m.def("generator_word", [](Family f, const SignedPerm& g) {
    std::vector<std::string> out;
    for (const auto& gen : generator_word(f, g))
      out.push_back(gen_name_string(gen));
    return out;
  });

  py::class_<MonotoneMap>(m, "MonotoneMap")
      .def(py::init([](int target, const std::vector<int>& values) {
        return MonotoneMap(target,
                           std::vector<std::uint8_t>(values.begin(),
                                                     values.end()));
      }))
      .def_property_readonly("source", &MonotoneMap::source)
      .def_property_readonly("target",
                             [](const MonotoneMap& f) { return f.target; })
      .def("__call__", &MonotoneMap::operator())
      .def("__repr__", &MonotoneMap::to_string)
      .def(py::self == py::self);

  m.def("face_map", &face_map, py::arg("i"), py::arg("n"));
  m.def("degeneracy_map", &degeneracy_map, py::arg("i"), py::arg("n"));
  m.def("compose_maps",
        py::overload_cast<const MonotoneMap&, const MonotoneMap&>(&compose));
  m.def("act_on_monotone", &act_on_monotone);
  m.def("hom_count", [](Family f, int mm, int nn) {
    return hom_set(f, mm, nn).size();
  });
  m.def("exchange_face", [](const SignedPerm& g, int i) {
    const auto ex = operator_exchange(g, OpKind::Face, i);
    return py::make_tuple(ex.index, ex.part);
  });
  m.def("exchange_degeneracy", [](const SignedPerm& g, int i) {
    const auto ex = operator_exchange(g, OpKind::Degeneracy, i);
    return py::make_tuple(ex.index, ex.part);
  });

  py::class_<FinGroup>(m, "FinGroup")
      .def_readonly("name", &FinGroup::name)
      .def_readonly("elements", &FinGroup::elements)
      .def("index_of", &FinGroup::index_of)
      .def("product", &FinGroup::product)
      .def_property_readonly("size", &FinGroup::size);
  m.def("parse_group", [](const std::string& s) { return parse_group(s); });
  m.def("cyclic_group", &cyclic_group);
  m.def("symmetric_group_3", &symmetric_group_3);
  m.def("quaternion_group", &quaternion_group);
  m.def("validate_group", [](const FinGroup& G) {
    const Report r = validate_group(G);
    return py::make_tuple(r.ok(), r.issues);
  });
  m.def("center", [](const FinGroup& G) { return center(G); });
  m.def("element_order", &element_order);

  py::class_<DaggerCategory>(m, "DaggerCategory")
      .def_readonly("name", &DaggerCategory::name)
      .def_readonly("objects", &DaggerCategory::objects)
      .def_property_readonly("morphism_count", &DaggerCategory::mor_count);
  m.def("parse_category",
        [](const std::string& s) { return parse_category(s); });
  m.def("groupoid_from_group", &groupoid_from_group);
  m.def("indiscrete_groupoid", &indiscrete_groupoid);
  m.def("validate_dagger", [](const DaggerCategory& C) {
    const Report r = validate_dagger(C);
    return py::make_tuple(r.ok(), r.issues);
  });
  m.def("check_unitarity", [](const DaggerCategory& C) {
    const auto flag = check_unitarity(C);
    return py::make_tuple(flag.holds, flag.witnesses);
  });

  py::class_<CrossedSet>(m, "CrossedSet")
      .def_readonly("name", &CrossedSet::name)
      .def_readonly("family", &CrossedSet::family)
      .def_readonly("max_dim", &CrossedSet::max_dim)
      .def("level_size", &CrossedSet::level_size)
      .def("labels",
           [](const CrossedSet& X, int n) {
             return X.labels[static_cast<std::size_t>(n)];
           })
      .def("validate",
           [](const CrossedSet& X) {
             const Report r = validate_truncation(X);
             return py::make_tuple(r.ok(), r.issues);
           })
      .def("orbits",
           [](const CrossedSet& X, int n) { return orbit_set(X, n); })
      .def("burnside_count",
           [](const CrossedSet& X, int n) { return burnside_count(X, n); })
      .def("homology", &homology_list)
      .def("underlying_simplicial",
           [](const CrossedSet& X) { return underlying_simplicial(X); })
      .def("to_text", [](const CrossedSet& X) { return to_text(X); })
      .def("same_tables",
           [](const CrossedSet& X, const CrossedSet& Y) {
             return same_tables(X, Y);
           })
      .def(py::self == py::self);
  m.def("parse_crossed_set",
        [](const std::string& s) { return parse_crossed_set(s); });

  m.def("bar_construction", &bar_construction);
  m.def("cyclic_nerve", &cyclic_nerve);
  m.def("dihedral_nerve", &dihedral_nerve);
  m.def("one_object_nerve", &one_object_nerve);
  m.def("classical_nerve", &classical_nerve);
  m.def("twisted_bar",
        [](Family f, const FinGroup& G, const std::string& z, int max_dim) {
          const int zi = G.index_of(z);
          if (zi < 0)
            throw precondition_error("unknown twist element '" + z + "'");
          return twisted_bar(f, G, zi, max_dim);
        });
  m.def("twisted_categorical_nerve", &twisted_categorical_nerve);
  m.def("restrict_family", &restrict_family);

  m.def("smith_normal_form", &snf);
}
