#include "torus/catalog.hpp"
#include "torus/errors.hpp"
#include "torus/global.hpp"
#include "torus/io.hpp"
#include "torus/isogeny.hpp"
#include "torus/local.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;

namespace pybind11::detail {

// torus::Int <-> python int, exact in both directions via decimal strings
template <>
struct type_caster<torus::Int> {
    PYBIND11_TYPE_CASTER(torus::Int, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr()))
            return false;
        value = torus::Int(static_cast<std::string>(str(src)));
        return true;
    }

    static handle cast(const torus::Int& v, return_value_policy, handle) {
        return PyLong_FromString(v.str().c_str(), nullptr, 10);
    }
};

} // namespace pybind11::detail

namespace {

py::object to_fraction(const torus::Rational& r) {
    py::object fraction =
        py::module_::import("fractions").attr("Fraction");
    return fraction(torus::Int(boost::multiprecision::numerator(r)),
                    torus::Int(boost::multiprecision::denominator(r)));
}

torus::IntMatrix matrix_from_rows(
    const std::vector<std::vector<torus::Int>>& rows) {
    const std::size_t m = rows.size();
    const std::size_t n = m ? rows[0].size() : 0;
    torus::IntMatrix out(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        if (rows[i].size() != n)
            throw torus::ValidationError("ragged matrix rows");
        for (std::size_t j = 0; j < n; ++j)
            out(i, j) = rows[i][j];
    }
    return out;
}

std::vector<std::vector<torus::Int>> matrix_to_rows(const torus::IntMatrix& m) {
    std::vector<std::vector<torus::Int>> rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        rows[i].resize(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j)
            rows[i][j] = m(i, j);
    }
    return rows;
}

torus::GaloisLattice lattice_from_parts(
    const torus::FiniteGroup& group,
    const std::vector<torus::IntMatrix>& action) {
    std::size_t rank = action.empty() ? 0 : action[0].rows();
    torus::GaloisLattice lattice{group, rank, action};
    torus::require_valid(lattice);
    return lattice;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact invariants of algebraic tori presented as Galois "
              "lattices";

    py::register_exception<torus::Error>(m, "TorusError", PyExc_RuntimeError);
    py::register_exception<torus::ValidationError>(m, "ValidationError",
                                                   PyExc_ValueError);

    py::class_<torus::IntMatrix>(m, "IntMatrix")
        .def(py::init(&matrix_from_rows), py::arg("rows"))
        .def_property_readonly("rows", &torus::IntMatrix::rows)
        .def_property_readonly("cols", &torus::IntMatrix::cols)
        .def("__getitem__",
             [](const torus::IntMatrix& self,
                std::pair<std::size_t, std::size_t> ij) {
                 if (ij.first >= self.rows() || ij.second >= self.cols())
                     throw py::index_error();
                 return self(ij.first, ij.second);
             })
        .def("to_list", &matrix_to_rows)
        .def("transposed", &torus::IntMatrix::transposed)
        .def("determinant", &torus::IntMatrix::determinant)
        .def(py::self * py::self)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self == py::self)
        .def("__matmul__", [](const torus::IntMatrix& a,
                              const torus::IntMatrix& b) { return a * b; })
        .def("__repr__", [](const torus::IntMatrix& self) {
            return "IntMatrix " + self.to_string();
        });
    m.def("identity_matrix", &torus::IntMatrix::identity, py::arg("n"));

    py::class_<torus::FinAbGroup>(m, "FinAbGroup")
        .def(py::init<std::size_t, std::vector<torus::Int>>(),
             py::arg("free_rank"), py::arg("invariant_factors"))
        .def_property_readonly("free_rank", &torus::FinAbGroup::free_rank)
        .def_property_readonly("invariant_factors",
                               &torus::FinAbGroup::invariant_factors)
        .def_property_readonly("torsion_order",
                               &torus::FinAbGroup::torsion_order)
        .def("is_trivial", &torus::FinAbGroup::is_trivial)
        .def("is_torsion_free", &torus::FinAbGroup::is_torsion_free)
        .def_static("direct_sum", &torus::FinAbGroup::direct_sum)
        .def(py::self == py::self)
        .def("__str__", &torus::FinAbGroup::to_string)
        .def("__repr__", [](const torus::FinAbGroup& self) {
            return "FinAbGroup(" + self.to_string() + ")";
        });

    m.def("smith_normal_form", [](const torus::IntMatrix& a) {
        torus::SnfDecomposition snf = torus::smith_normal_form(a);
        return py::make_tuple(snf.u, snf.d, snf.v);
    });
    m.def("column_hnf_basis", &torus::column_hnf_basis);
    m.def("kernel_lattice", &torus::kernel_lattice);
    m.def("cokernel_structure", &torus::cokernel_structure);
    m.def("subgroup_structure_in_quotient",
          &torus::subgroup_structure_in_quotient, py::arg("relations"),
          py::arg("generators"));
    m.def("kernel_of_endomorphism_on_quotient",
          &torus::kernel_of_endomorphism_on_quotient, py::arg("relations"),
          py::arg("endomorphism"));

    py::class_<torus::FiniteGroup>(m, "FiniteGroup")
        .def(py::init<std::vector<std::vector<std::size_t>>>(),
             py::arg("mult_table"))
        .def_static("cyclic", &torus::FiniteGroup::cyclic)
        .def_static("dihedral", &torus::FiniteGroup::dihedral)
        .def_static("quaternion", &torus::FiniteGroup::quaternion)
        .def_static("direct_product", &torus::FiniteGroup::direct_product)
        .def_property_readonly("order", &torus::FiniteGroup::order)
        .def("mult", &torus::FiniteGroup::mult)
        .def("inverse", &torus::FiniteGroup::inverse)
        .def("element_order", &torus::FiniteGroup::element_order)
        .def("mult_table", &torus::FiniteGroup::mult_table)
        .def(py::self == py::self)
        .def("__repr__", [](const torus::FiniteGroup& self) {
            return "FiniteGroup(order=" + std::to_string(self.order()) + ")";
        });

    py::class_<torus::Subgroup>(m, "Subgroup")
        .def(py::init<torus::FiniteGroup, std::vector<std::size_t>>(),
             py::arg("parent"), py::arg("elements"))
        .def_static("trivial", &torus::Subgroup::trivial)
        .def_static("whole", &torus::Subgroup::whole)
        .def_static("generated_by", &torus::Subgroup::generated_by)
        .def_property_readonly("elements", &torus::Subgroup::elements)
        .def("is_normal", &torus::Subgroup::is_normal)
        .def("as_group", &torus::Subgroup::as_group)
        .def("__len__", &torus::Subgroup::size);

    py::class_<torus::GaloisLattice>(m, "GaloisLattice")
        .def(py::init(&lattice_from_parts), py::arg("group"),
             py::arg("action"))
        .def_readonly("group", &torus::GaloisLattice::group)
        .def_readonly("rank", &torus::GaloisLattice::rank)
        .def("action", &torus::GaloisLattice::act, py::arg("element"))
        .def("__repr__", [](const torus::GaloisLattice& self) {
            return "GaloisLattice(order=" + std::to_string(self.group.order()) +
                   ", rank=" + std::to_string(self.rank) + ")";
        });

    m.def("validate", [](const torus::GaloisLattice& lattice) {
        torus::ValidationReport report = torus::validate(lattice);
        return py::make_tuple(report.ok, report.message);
    });
    m.def("invariants_lattice", &torus::invariants_lattice);
    m.def("trace_map", &torus::trace_map);
    m.def("character", &torus::character);
    m.def("dual_lattice", &torus::dual_lattice);
    m.def("restrict_to", &torus::restrict_to);
    m.def("h1", &torus::h1);
    m.def("canonical_decomposition",
          [](const torus::GaloisLattice& lattice, const torus::Subgroup& h) {
              torus::CanonicalDecomposition dec =
                  torus::canonical_decomposition(lattice, h);
              return py::make_tuple(dec.y_basis, dec.n_basis);
          });

    py::class_<torus::CoinvariantsPresentation>(m, "CoinvariantsPresentation")
        .def_readonly("structure", &torus::CoinvariantsPresentation::structure)
        .def_readonly("relations", &torus::CoinvariantsPresentation::relations)
        .def("project", &torus::CoinvariantsPresentation::project)
        .def("same_class", &torus::CoinvariantsPresentation::same_class);
    m.def("coinvariants", &torus::coinvariants);

    m.def("isogenous", &torus::isogenous);
    m.def("good_reduction_parts_isogenous",
          &torus::good_reduction_parts_isogenous);

    m.def("split_torus", &torus::split_torus, py::arg("group"),
          py::arg("rank"));
    m.def("weil_restriction", &torus::weil_restriction, py::arg("group"));
    m.def("norm_one_torus", &torus::norm_one_torus, py::arg("group"),
          py::arg("generator"));
    m.def("direct_sum", &torus::direct_sum);

    py::class_<torus::LocalTorusData>(m, "LocalTorusData")
        .def(py::init<torus::GaloisLattice, torus::Subgroup, std::size_t,
                      torus::Int>(),
             py::arg("lattice"), py::arg("inertia"), py::arg("frobenius"),
             py::arg("residue_q"))
        .def_property_readonly("lattice", &torus::LocalTorusData::lattice)
        .def_property_readonly("inertia", &torus::LocalTorusData::inertia)
        .def_property_readonly("frobenius", &torus::LocalTorusData::frobenius)
        .def_property_readonly("residue_q", &torus::LocalTorusData::residue_q)
        .def_property_readonly("q_is_prime_power",
                               &torus::LocalTorusData::q_is_prime_power);

    m.def("is_prime_power", &torus::is_prime_power);
    m.def("check_good_reduction", &torus::check_good_reduction);
    m.def(
        "artin_l_factor",
        [](const torus::LocalTorusData& data, unsigned s) {
            return to_fraction(torus::artin_l_factor(data, s));
        },
        py::arg("data"), py::arg("s") = 1);
    m.def("point_count_good_reduction", &torus::point_count_good_reduction);
    m.def("component_group", &torus::component_group);
    m.def("local_shyr_factor", &torus::local_shyr_factor);

    py::class_<torus::LocalReport>(m, "LocalReport")
        .def_readonly("good_reduction", &torus::LocalReport::good_reduction)
        .def_property_readonly("l_factor_at_1",
                               [](const torus::LocalReport& self) {
                                   return to_fraction(self.l_factor_at_1);
                               })
        .def_readonly("component_group", &torus::LocalReport::component_group)
        .def_readonly("shyr_factor", &torus::LocalReport::shyr_factor)
        .def_readonly("h1_inertia", &torus::LocalReport::h1_inertia)
        .def_readonly("q_is_prime_power",
                      &torus::LocalReport::q_is_prime_power);
    m.def("local_report", &torus::local_report);

    py::class_<torus::PlaceData>(m, "PlaceData")
        .def(py::init([](std::string label, torus::Subgroup decomposition,
                         torus::Subgroup inertia, std::size_t frobenius,
                         torus::Int residue_q) {
                 return torus::PlaceData{std::move(label),
                                         std::move(decomposition),
                                         std::move(inertia), frobenius,
                                         std::move(residue_q)};
             }),
             py::arg("label"), py::arg("decomposition"), py::arg("inertia"),
             py::arg("frobenius"), py::arg("residue_q"))
        .def_readonly("label", &torus::PlaceData::label);

    py::class_<torus::GlobalTorusSpec>(m, "GlobalTorusSpec")
        .def_static(
            "function_field",
            [](torus::GaloisLattice lattice, torus::Int q, torus::Int genus) {
                torus::GlobalTorusSpec spec;
                spec.field_case = torus::GlobalCase::function_field;
                spec.constants_q = std::move(q);
                spec.genus = std::move(genus);
                spec.lattice = std::move(lattice);
                return spec;
            },
            py::arg("lattice"), py::arg("q"), py::arg("genus"))
        .def_static(
            "number_field",
            [](torus::GaloisLattice lattice, torus::Int discriminant) {
                torus::GlobalTorusSpec spec;
                spec.field_case = torus::GlobalCase::number_field;
                spec.discriminant = std::move(discriminant);
                spec.lattice = std::move(lattice);
                return spec;
            },
            py::arg("lattice"), py::arg("discriminant"))
        .def("add_place",
             [](torus::GlobalTorusSpec& self, torus::PlaceData place) {
                 self.places.push_back(std::move(place));
             })
        .def_readonly("lattice", &torus::GlobalTorusSpec::lattice);

    py::class_<torus::SymbolicValue>(m, "SymbolicValue")
        .def_property_readonly("coefficient",
                               [](const torus::SymbolicValue& self) {
                                   return to_fraction(self.coefficient);
                               })
        .def_readonly("lnq_exponent", &torus::SymbolicValue::lnq_exponent)
        .def_readonly("sqrt_disc_exponent",
                      &torus::SymbolicValue::sqrt_disc_exponent)
        .def_readonly("archimedean_unevaluated",
                      &torus::SymbolicValue::archimedean_unevaluated)
        .def("__repr__", [](const torus::SymbolicValue& self) {
            std::string out = "SymbolicValue(coefficient=" +
                              torus::to_decimal(self.coefficient);
            if (self.lnq_exponent)
                out += ", lnq_exponent=" + std::to_string(self.lnq_exponent);
            if (self.sqrt_disc_exponent)
                out += ", sqrt_disc_exponent=" +
                       std::to_string(self.sqrt_disc_exponent);
            if (self.archimedean_unevaluated)
                out += ", archimedean_unevaluated=True";
            return out + ")";
        });

    m.def("finite_part", &torus::finite_part);
    m.def("pole_order", &torus::pole_order);
    m.def("shyr_invariant", &torus::shyr_invariant);

    m.def("parse_local_document", [](const std::string& text) {
        return torus::local_data(torus::parse_document(text));
    });
    m.def("parse_global_document", [](const std::string& text) {
        torus::InputDocument doc = torus::parse_document(text);
        if (!doc.global)
            throw torus::ValidationError("document has no global block");
        return *doc.global;
    });
    m.def("local_document_json", &torus::local_document_json,
          py::arg("lattice"), py::arg("inertia"), py::arg("frobenius"),
          py::arg("residue_q"));
}
