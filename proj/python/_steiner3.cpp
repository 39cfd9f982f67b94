#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "steiner3/action.hpp"
#include "steiner3/catalog.hpp"
#include "steiner3/cli.hpp"
#include "steiner3/design.hpp"
#include "steiner3/error.hpp"
#include "steiner3/gens_io.hpp"
#include "steiner3/gf.hpp"
#include "steiner3/perm.hpp"
#include "steiner3/sieve.hpp"

namespace py = pybind11;
using namespace steiner3;

namespace {

py::int_ big(const mpz_class& x) { return py::int_(py::str(x.get_str())); }

}  // namespace

PYBIND11_MODULE(_steiner3, m) {
  m.doc() = "Flag-transitive Steiner 3-designs";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", error.ptr());
  py::register_exception<FormatError>(m, "FormatError", error.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", error.ptr());
  py::register_exception<ConsistencyError>(m, "ConsistencyError", error.ptr());
  py::register_exception<SetNotPreserved>(m, "SetNotPreserved", error.ptr());

  // gf
  py::class_<gf::FieldContext>(m, "FieldContext")
      .def(py::init<std::uint32_t, std::uint32_t>(), py::arg("p"), py::arg("d"))
      .def_property_readonly("p", &gf::FieldContext::characteristic)
      .def_property_readonly("d", &gf::FieldContext::degree)
      .def_property_readonly("order", &gf::FieldContext::order)
      .def_property_readonly("modulus", &gf::FieldContext::modulus)
      .def_property_readonly("omega", [](const gf::FieldContext& f) { return f.omega().index; })
      .def("add", [](const gf::FieldContext& f, std::uint32_t a, std::uint32_t b) { return f.add(f.element(a), f.element(b)).index; })
      .def("mul", [](const gf::FieldContext& f, std::uint32_t a, std::uint32_t b) { return f.mul(f.element(a), f.element(b)).index; })
      .def("neg", [](const gf::FieldContext& f, std::uint32_t a) { return f.neg(f.element(a)).index; })
      .def("inv", [](const gf::FieldContext& f, std::uint32_t a) { return f.inv(f.element(a)).index; })
      .def("pow", [](const gf::FieldContext& f, std::uint32_t a, std::uint64_t e) { return f.pow(f.element(a), e).index; })
      .def("frobenius", [](const gf::FieldContext& f, std::uint32_t a, std::uint64_t r) { return f.frobenius(f.element(a), r).index; })
      .def("to_string", [](const gf::FieldContext& f, std::uint32_t a) { return f.to_string(f.element(a)); });
  m.def("primitive_sixth_root", [](const gf::FieldContext& f) { return gf::primitive_sixth_root(f).index; });

  // permutations and groups
  py::class_<Permutation>(m, "Permutation")
      .def(py::init<std::vector<Point>>(), py::arg("images"))
      .def_static("identity", &Permutation::identity)
      .def_property_readonly("degree", &Permutation::degree)
      .def_property_readonly("images", [](const Permutation& p) { return std::vector<Point>(p.images().begin(), p.images().end()); })
      .def("__call__", [](const Permutation& p, Point x) {
        if (x >= p.degree()) throw InvalidArgument("point out of range");
        return p(x);
      })
      .def("__mul__", [](const Permutation& a, const Permutation& b) { return a * b; })
      .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; })
      .def("inverse", &Permutation::inverse)
      .def("is_identity", &Permutation::is_identity)
      .def("is_even", &Permutation::is_even)
      .def("__repr__", &Permutation::cycle_string);

  py::class_<GeneratorSet>(m, "GeneratorSet")
      .def(py::init<std::size_t, std::vector<Permutation>>(), py::arg("degree"), py::arg("gens"))
      .def_readonly("degree", &GeneratorSet::degree)
      .def_readonly("gens", &GeneratorSet::gens);

  py::class_<GroupSummary>(m, "GroupSummary")
      .def_readonly("order", &GroupSummary::order)
      .def_readonly("base", &GroupSummary::base)
      .def_readonly("stabilizer_orders", &GroupSummary::stabilizer_orders)
      .def_readonly("orbit_lengths", &GroupSummary::orbit_lengths);

  m.def("group_order", [](const GeneratorSet& g, const std::vector<Point>& prefix) { return group_order(g, prefix); },
        py::arg("group"), py::arg("base_prefix") = std::vector<Point>{});
  m.def("point_orbit", &point_orbit);
  m.def("set_orbit", &set_orbit);
  m.def("even_subgroup", &even_subgroup);
  m.def("parse_generators", [](const std::string& text) { return parse_generators(text); });
  m.def("format_generators", &format_generators);
  m.def("read_generators", &read_generators);
  m.def("write_generators", &write_generators);

  // designs
  py::class_<Design>(m, "Design")
      .def(py::init<std::uint32_t, std::uint32_t, std::vector<Block>, std::vector<std::string>>(), py::arg("v"), py::arg("t"),
           py::arg("blocks"), py::arg("labels") = std::vector<std::string>{})
      .def_property_readonly("v", &Design::v)
      .def_property_readonly("t", &Design::t)
      .def_property_readonly("k", &Design::k)
      .def_property_readonly("b", &Design::b)
      .def_property_readonly("blocks", &Design::blocks)
      .def_property_readonly("labels", &Design::labels)
      .def("__eq__", [](const Design& a, const Design& b) { return a == b; })
      .def("to_json", &design_to_json)
      .def_static("from_json", [](const std::string& text) { return design_from_json(text); });
  m.def("read_design", &read_design);
  m.def("write_design", &write_design);

  py::class_<DesignParams>(m, "DesignParams")
      .def_readonly("t", &DesignParams::t)
      .def_readonly("v", &DesignParams::v)
      .def_readonly("k", &DesignParams::k)
      .def_readonly("lambda_", &DesignParams::lambda)
      .def_readonly("b", &DesignParams::b)
      .def_readonly("r", &DesignParams::r)
      .def_readonly("lambda2", &DesignParams::lambda2);
  m.def("params_of", &params_of);

  py::class_<SteinerReport>(m, "SteinerReport")
      .def_readonly("ok", &SteinerReport::ok)
      .def_readonly("witness", &SteinerReport::witness)
      .def_readonly("witness_count", &SteinerReport::witness_count);
  m.def("verify_steiner", &verify_steiner, py::arg("design"), py::arg("t") = 3);
  m.def("derived_design", &derived_design, py::arg("design"), py::arg("x"));
  m.def("is_affine_line_system", &is_affine_line_system);
  m.def("blocksize_bound", &blocksize_bound);
  m.def("cameron_check", [](std::uint64_t t, std::uint64_t k, std::uint64_t v) {
    const auto c = cameron_check(t, k, v);
    py::dict d;
    d["kind"] = std::string(to_string(c.kind));
    d["bound_a"] = c.bound_a;
    d["bound_b"] = c.bound_b;
    d["equality_b"] = c.equality_b;
    d["in_equality_list"] = c.in_equality_list;
    return d;
  });

  // actions
  py::class_<FlagReport>(m, "FlagReport")
      .def_readonly("preserves_blocks", &FlagReport::preserves_blocks)
      .def_readonly("flag_count", &FlagReport::flag_count)
      .def_readonly("flag_orbit_size", &FlagReport::flag_orbit_size)
      .def_readonly("block_orbit_count", &FlagReport::block_orbit_count)
      .def_readonly("block_orbit_sizes", &FlagReport::block_orbit_sizes)
      .def_readonly("point_orbit_count", &FlagReport::point_orbit_count)
      .def_readonly("point_pair_orbit_count", &FlagReport::point_pair_orbit_count)
      .def_readonly("flag_transitive", &FlagReport::flag_transitive)
      .def_readonly("block_transitive", &FlagReport::block_transitive)
      .def_readonly("point_transitive", &FlagReport::point_transitive)
      .def_readonly("point_2_transitive", &FlagReport::point_2_transitive);
  m.def("block_action", &block_action);
  m.def("is_flag_transitive", &is_flag_transitive);
  m.def("automorphism_group", [](const Design& d, std::uint64_t budget) {
    AutSearchOptions opt;
    opt.node_budget = budget;
    py::gil_scoped_release release;
    return automorphism_group(d, opt);
  }, py::arg("design"), py::arg("node_budget") = AutSearchOptions{}.node_budget);

  // catalogue
  m.def("construct_boolean_affine", &catalog::construct_boolean_affine, py::arg("d"));
  m.def("construct_spherical", &catalog::construct_spherical, py::arg("q"), py::arg("e"));
  m.def("construct_netto_extension", &catalog::construct_netto_extension, py::arg("q"));
  m.def("construct_witt_22", &catalog::construct_witt_22);
  m.def("golay_lexicode", &catalog::golay_lexicode);

  py::enum_<catalog::AffineGroup>(m, "AffineGroup")
      .value("AGL_d_2", catalog::AffineGroup::AGL_d_2)
      .value("AGL_1", catalog::AffineGroup::AGL_1)
      .value("AGammaL_1", catalog::AffineGroup::AGammaL_1)
      .value("T_A7", catalog::AffineGroup::T_A7);
  py::enum_<catalog::ProjectiveGroup>(m, "ProjectiveGroup")
      .value("PSL", catalog::ProjectiveGroup::PSL)
      .value("PGL", catalog::ProjectiveGroup::PGL)
      .value("PSigmaL", catalog::ProjectiveGroup::PSigmaL)
      .value("PGammaL", catalog::ProjectiveGroup::PGammaL);
  m.def("affine_group_generators", [](catalog::AffineGroup kind, unsigned d) { return catalog::affine_group_generators(kind, d); },
        py::arg("kind"), py::arg("d"));
  m.def("projective_group_generators", &catalog::projective_group_generators, py::arg("kind"), py::arg("q"), py::arg("e") = 1);
  m.def("default_data_dir", &catalog::default_data_dir);

  m.def("classify", [](std::uint64_t v, std::uint64_t k) {
    py::list rows;
    for (const auto& e : catalog::classify(v, k)) {
      py::dict row;
      row["family"] = catalog::to_string(e.family);
      row["part"] = e.part;
      if (e.family == catalog::Family::affine) row["d"] = e.d;
      if (e.family == catalog::Family::spherical || e.family == catalog::Family::netto) row["q"] = e.q;
      if (e.family == catalog::Family::spherical) row["e"] = e.e;
      py::list groups;
      for (const auto& g : e.groups) groups.append(g.name);
      row["groups"] = groups;
      rows.append(row);
    }
    return rows;
  });

  // sieve
  py::class_<sieve::SieveReport>(m, "SieveReport")
      .def_readonly("v", &sieve::SieveReport::v)
      .def_readonly("k", &sieve::SieveReport::k)
      .def_property_readonly("checks", [](const sieve::SieveReport& r) {
        py::dict d;
        for (const auto& c : r.checks) d[py::str(c.name)] = c.pass;
        return d;
      })
      .def_readonly("cameron_equality", &sieve::SieveReport::cameron_equality)
      .def_readonly("in_equality_list", &sieve::SieveReport::in_equality_list)
      .def_readonly("admissible", &sieve::SieveReport::admissible);
  m.def("admissible_parameters", &sieve::admissible_parameters, py::arg("v_min"), py::arg("v_max"),
        py::arg("only_admissible") = false);
  m.def("division_property", &sieve::division_property);
  m.def("stabilizer_equation", [](const Design& d, const GeneratorSet& g) {
    const auto s = sieve::stabilizer_equation(d, g);
    py::dict out;
    out["group_order"] = s.group_order;
    out["point_stabilizer"] = s.point_stabilizer;
    out["pair_stabilizer"] = s.pair_stabilizer;
    out["block_stabilizer"] = s.block_stabilizer;
    out["flag_stabilizer"] = s.flag_stabilizer;
    out["block_count_identity"] = s.block_count_identity;
    out["v_minus_2_identity"] = s.v_minus_2_identity;
    out["ok"] = s.ok;
    return out;
  });
  m.def("cyclotomic_eval", [](std::uint64_t d, std::uint64_t q) {
    const auto c = sieve::cyclotomic_eval(d, q);
    py::dict out;
    out["d"] = c.d;
    out["q"] = c.q;
    out["phi"] = big(c.phi);
    out["f"] = c.f;
    out["n"] = c.n;
    out["phi_star"] = big(c.phi_star);
    return out;
  });
  m.def("zsigmondy_ppd", [](std::uint64_t q, std::uint64_t n) { return sieve::zsigmondy_ppd(q, n).primitive_primes; });
  m.def("case1_divisibility", &sieve::case1_divisibility);
  m.def("ramanujan_nagell", &sieve::ramanujan_nagell, py::arg("n_max"));
  m.def("exponent_blocksize_pairs", &sieve::exponent_blocksize_pairs);

  // command line
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
