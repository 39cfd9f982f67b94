#include "steiner3/cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "steiner3/action.hpp"
#include "steiner3/arith.hpp"
#include "steiner3/catalog.hpp"
#include "steiner3/design.hpp"
#include "steiner3/error.hpp"
#include "steiner3/gens_io.hpp"
#include "steiner3/sieve.hpp"

namespace steiner3::cli {

namespace {

using Json = nlohmann::ordered_json;

// Thrown by a command to request exit code 1 after printing its result.
struct PropertyFailed {};

std::string describe(const Design& d) {
  return std::to_string(d.t()) + "-(" + std::to_string(d.v()) + "," + std::to_string(d.k()) + ",1), b=" + std::to_string(d.b());
}

std::string join(const std::vector<Point>& xs, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) s += sep;
    s += std::to_string(xs[i]);
  }
  return s;
}

template <class T>
std::string join_u64(const std::vector<T>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) s += ' ';
    s += std::to_string(xs[i]);
  }
  return s;
}

void emit_design(const Design& d, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << design_to_json(d);
  } else {
    write_design(path, d);
    out << "wrote " << describe(d) << " to " << path << '\n';
  }
}

void emit_gens(const GeneratorSet& g, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << format_generators(g);
  } else {
    write_generators(path, g);
  }
}

catalog::Family parse_family(const std::string& s) {
  if (s == "affine") return catalog::Family::affine;
  if (s == "spherical") return catalog::Family::spherical;
  if (s == "netto") return catalog::Family::netto;
  return catalog::Family::witt;
}

Json flag_report_json(const FlagReport& r) {
  Json j;
  j["preserves_blocks"] = r.preserves_blocks;
  j["flag_count"] = r.flag_count;
  j["flag_orbit_size"] = r.flag_orbit_size;
  j["block_orbit_count"] = r.block_orbit_count;
  j["block_orbit_sizes"] = r.block_orbit_sizes;
  j["point_orbit_count"] = r.point_orbit_count;
  j["point_pair_orbit_count"] = r.point_pair_orbit_count;
  j["flag_transitive"] = r.flag_transitive;
  j["block_transitive"] = r.block_transitive;
  j["point_transitive"] = r.point_transitive;
  j["point_2_transitive"] = r.point_2_transitive;
  return j;
}

Json sieve_json(const sieve::SieveReport& r) {
  Json j;
  j["v"] = r.v;
  j["k"] = r.k;
  Json checks = Json::object();
  for (const auto& c : r.checks) checks[c.name] = c.pass;
  j["checks"] = checks;
  j["cameron_equality"] = r.cameron_equality;
  j["in_equality_list"] = r.in_equality_list;
  j["admissible"] = r.admissible;
  return j;
}

gf::FieldContext field_of_order(std::uint64_t order) {
  const auto pp = arith::prime_power(order);
  if (!pp) throw InvalidArgument(std::to_string(order) + " is not a prime power");
  return gf::FieldContext(static_cast<std::uint32_t>(pp->first), pp->second);
}

std::string modulus_string(const gf::FieldContext& f) {
  std::vector<std::uint32_t> low(f.modulus().begin(), f.modulus().end() - 1);
  const auto rest = f.from_coefficients(low);
  std::string s = f.degree() == 1 ? "x" : "x^" + std::to_string(f.degree());
  return rest == f.zero() ? s : s + "+" + f.to_string(rest);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Flag-transitive Steiner 3-designs: construction, verification and arithmetic sieves", "steiner3"};
  app.require_subcommand(1);
  std::function<void()> action;

  // construct
  std::string family, out_path;
  std::uint32_t d = 0, q = 0, e = 0;
  auto* construct = app.add_subcommand("construct", "build a catalogue design as JSON");
  construct->add_option("--family", family, "affine | spherical | netto | witt")
      ->required()
      ->check(CLI::IsMember({"affine", "spherical", "netto", "witt"}));
  construct->add_option("--d", d, "dimension for the affine family");
  construct->add_option("--q", q, "field order q");
  construct->add_option("--e", e, "extension degree for the spherical family");
  construct->add_option("--out", out_path, "output file (default: stdout)");
  construct->callback([&] {
    action = [&] {
      Design design;
      switch (parse_family(family)) {
        case catalog::Family::affine:
          design = catalog::construct_boolean_affine(d);
          break;
        case catalog::Family::spherical:
          design = catalog::construct_spherical(q, e);
          break;
        case catalog::Family::netto:
          design = catalog::construct_netto_extension(q);
          break;
        case catalog::Family::witt:
          design = catalog::construct_witt_22();
          break;
      }
      emit_design(design, out_path, out);
    };
  });

  // verify
  std::string design_path;
  std::optional<std::uint32_t> strength;
  auto* verify = app.add_subcommand("verify", "check that every t-subset lies in exactly one block");
  verify->add_option("design", design_path, "design JSON")->required();
  verify->add_option("--t", strength, "strength to check (default: the design's t)");
  verify->callback([&] {
    action = [&] {
      const Design design = read_design(design_path);
      const std::uint32_t t = strength.value_or(design.t());
      const auto report = verify_steiner(design, t);
      if (!report.ok) {
        out << "FAIL: " << t << "-subset {" << join(report.witness, ",") << "} lies in " << report.witness_count << " blocks\n";
        throw PropertyFailed{};
      }
      out << "ok " << t << "-(" << design.v() << "," << design.k() << ",1), b=" << design.b() << '\n';
    };
  });

  // derive
  Point point = 0;
  auto* derive = app.add_subcommand("derive", "derived design at a point");
  derive->add_option("design", design_path, "design JSON")->required();
  derive->add_option("--point", point, "point to derive at")->required();
  derive->add_option("--out", out_path, "output file (default: stdout)");
  derive->callback([&] { action = [&] { emit_design(derived_design(read_design(design_path), point), out_path, out); }; });

  // params
  bool json = false;
  auto* params = app.add_subcommand("params", "parameters b, r, lambda2 with their counting identities");
  params->add_option("design", design_path, "design JSON")->required();
  params->add_flag("--json", json, "JSON output");
  params->callback([&] {
    action = [&] {
      const auto p = params_of(read_design(design_path));
      if (json) {
        Json j{{"t", p.t}, {"v", p.v}, {"k", p.k}, {"lambda", p.lambda}, {"b", p.b}, {"r", p.r}, {"lambda2", p.lambda2}};
        out << j.dump() << '\n';
      } else {
        out << "t=" << p.t << " v=" << p.v << " k=" << p.k << " lambda=" << p.lambda << " b=" << p.b << " r=" << p.r
            << " lambda2=" << p.lambda2 << '\n';
      }
    };
  });

  // flagcheck
  std::string gens_path;
  auto* flagcheck = app.add_subcommand("flagcheck", "flag, block and point-pair orbits of a group on a design");
  flagcheck->add_option("design", design_path, "design JSON")->required();
  flagcheck->add_option("--gens", gens_path, "generator file")->required();
  flagcheck->add_flag("--json", json, "JSON output");
  flagcheck->callback([&] {
    action = [&] {
      const Design design = read_design(design_path);
      const GeneratorSet group = read_generators(gens_path);
      FlagReport r;
      try {
        r = is_flag_transitive(design, group);
      } catch (const SetNotPreserved& ex) {
        out << "not an automorphism: block {" << join(ex.block(), ",") << "} maps to {" << join(ex.image(), ",") << "}\n";
        throw PropertyFailed{};
      }
      if (json) {
        out << flag_report_json(r).dump() << '\n';
      } else {
        out << "flags: " << r.flag_count << "\n"
            << "flag orbit: " << r.flag_orbit_size << "\n"
            << "block orbits: " << r.block_orbit_count << " (sizes " << join_u64(r.block_orbit_sizes) << ")\n"
            << "point orbits: " << r.point_orbit_count << "\n"
            << "point-pair orbits: " << r.point_pair_orbit_count << "\n"
            << "flag-transitive: " << (r.flag_transitive ? "yes" : "no") << "\n"
            << "block-transitive: " << (r.block_transitive ? "yes" : "no") << "\n"
            << "point 2-transitive: " << (r.point_2_transitive ? "yes" : "no") << "\n";
      }
      if (!r.flag_transitive) throw PropertyFailed{};
    };
  });

  // stabilizers
  auto* stabilizers = app.add_subcommand("stabilizers", "stabilizer orders of a flag-transitive group and their identities");
  stabilizers->add_option("design", design_path, "design JSON")->required();
  stabilizers->add_option("--gens", gens_path, "generator file")->required();
  stabilizers->callback([&] {
    action = [&] {
      const auto s = sieve::stabilizer_equation(read_design(design_path), read_generators(gens_path));
      out << "|G|=" << s.group_order << " |G_x|=" << s.point_stabilizer << " |G_xy|=" << s.pair_stabilizer
          << " |G_B|=" << s.block_stabilizer << " |G_xB|=" << s.flag_stabilizer << "\n"
          << "b|G_B| = v(v-1)|G_xy|: " << s.b * s.block_stabilizer << " = " << s.v * (s.v - 1) * s.pair_stabilizer << "\n"
          << "(v-2)|G_xB| = (k-1)(k-2)|G_xy|: " << (s.v - 2) * s.flag_stabilizer << " = "
          << (s.k - 1) * (s.k - 2) * s.pair_stabilizer << "\n"
          << "division r | |G_x|: " << (sieve::division_property(s.b * s.k / s.v, s.point_stabilizer) ? "yes" : "no") << "\n";
      if (!s.ok) throw PropertyFailed{};
    };
  });

  // autgroup
  bool even = false;
  auto* autgroup = app.add_subcommand("autgroup", "full automorphism group by backtracking search (v <= 64)");
  autgroup->add_option("design", design_path, "design JSON")->required();
  autgroup->add_option("--out", out_path, "write generators here");
  autgroup->add_flag("--even", even, "keep only the subgroup of even permutations");
  autgroup->callback([&] {
    action = [&] {
      GeneratorSet g = automorphism_group(read_design(design_path));
      if (even) g = even_subgroup(g);
      if (!out_path.empty()) write_generators(out_path, g);
      out << "order: " << group_order(g).order << '\n';
    };
  });

  // order
  auto* order = app.add_subcommand("order", "exact group order and stabilizer chain");
  order->add_option("gens", gens_path, "generator file")->required();
  order->callback([&] {
    action = [&] {
      const auto s = group_order(read_generators(gens_path));
      out << "order: " << s.order << "\nbase:" << (s.base.empty() ? "" : " ") << join(s.base) << "\nstabilizer orders: " << join_u64(s.stabilizer_orders) << '\n';
    };
  });

  // gens
  std::string group_name;
  auto* gens = app.add_subcommand("gens", "generators of a catalogue group");
  gens->add_option("--group", group_name, "AGL_d_2 | AGL_1 | AGammaL_1 | T_A7 | PSL | PGL | PSigmaL | PGammaL")
      ->required()
      ->check(CLI::IsMember({"AGL_d_2", "AGL_1", "AGammaL_1", "T_A7", "PSL", "PGL", "PSigmaL", "PGammaL"}));
  gens->add_option("--d", d, "dimension for affine groups");
  gens->add_option("--q", q, "field order for projective groups");
  gens->add_option("--e", e, "extension degree for projective groups (default 1)");
  gens->add_option("--out", out_path, "output file (default: stdout)");
  gens->callback([&] {
    action = [&] {
      using catalog::AffineGroup;
      using catalog::ProjectiveGroup;
      static const std::pair<const char*, AffineGroup> affine[] = {
          {"AGL_d_2", AffineGroup::AGL_d_2}, {"AGL_1", AffineGroup::AGL_1}, {"AGammaL_1", AffineGroup::AGammaL_1}, {"T_A7", AffineGroup::T_A7}};
      static const std::pair<const char*, ProjectiveGroup> projective[] = {
          {"PSL", ProjectiveGroup::PSL}, {"PGL", ProjectiveGroup::PGL}, {"PSigmaL", ProjectiveGroup::PSigmaL}, {"PGammaL", ProjectiveGroup::PGammaL}};
      for (const auto& [name, kind] : affine) {
        if (group_name == name) return emit_gens(catalog::affine_group_generators(kind, d), out_path, out);
      }
      for (const auto& [name, kind] : projective) {
        if (group_name == name) return emit_gens(catalog::projective_group_generators(kind, q, e == 0 ? 1 : e), out_path, out);
      }
    };
  });

  // sieve
  std::uint64_t v_min = 0, v_max = 0;
  bool all = false;
  auto* sieve_cmd = app.add_subcommand("sieve", "parameter admissibility screen for Steiner 3-designs");
  sieve_cmd->add_option("--v-min", v_min, "smallest v")->required();
  sieve_cmd->add_option("--v-max", v_max, "largest v")->required();
  sieve_cmd->add_flag("--json", json, "JSON array output");
  sieve_cmd->add_flag("--all", all, "include rejected (v, k) pairs");
  sieve_cmd->callback([&] {
    action = [&] {
      bool first = true;
      if (json) out << '[';
      sieve::sieve_each(v_min, v_max, [&](const sieve::SieveReport& r) {
        if (!all && !r.admissible) return;
        if (json) {
          out << (first ? "\n  " : ",\n  ") << sieve_json(r).dump();
        } else {
          out << "v=" << r.v << " k=" << r.k << ' ' << (r.admissible ? "admissible" : "rejected");
          std::string failed;
          for (const auto& c : r.checks) {
            if (!c.pass) failed += (failed.empty() ? "" : ",") + c.name;
          }
          if (!failed.empty()) out << ": " << failed;
          if (r.cameron_equality) out << " (cameron equality" << (r.in_equality_list ? ", listed" : "") << ")";
          out << '\n';
        }
        first = false;
      });
      if (json) out << (first ? "]\n" : "\n]\n");
    };
  });

  // classify
  std::uint64_t v_arg = 0, k_arg = 0;
  auto* classify = app.add_subcommand("classify", "catalogue rows with the given parameters");
  classify->add_option("--v", v_arg, "number of points")->required();
  classify->add_option("--k", k_arg, "block size")->required();
  classify->add_flag("--json", json, "JSON output");
  classify->callback([&] {
    action = [&] {
      const auto rows = catalog::classify(v_arg, k_arg);
      if (json) {
        Json arr = Json::array();
        for (const auto& row : rows) {
          Json j{{"part", row.part}, {"family", catalog::to_string(row.family)}, {"d", row.d}, {"q", row.q}, {"e", row.e}};
          Json groups = Json::array();
          for (const auto& g : row.groups) groups.push_back(Json{{"name", g.name}, {"construction", g.construction}});
          j["groups"] = groups;
          arr.push_back(j);
        }
        out << arr.dump() << '\n';
        return;
      }
      if (rows.empty()) {
        out << "none\n";
        return;
      }
      for (const auto& row : rows) {
        out << "part " << row.part << ": " << catalog::to_string(row.family);
        if (row.family == catalog::Family::affine) out << " d=" << row.d;
        if (row.family == catalog::Family::spherical) out << " q=" << row.q << " e=" << row.e;
        if (row.family == catalog::Family::netto) out << " q=" << row.q;
        out << "; groups:";
        for (std::size_t i = 0; i < row.groups.size(); ++i) out << (i ? ", " : " ") << row.groups[i].name;
        out << '\n';
      }
    };
  });

  // cyclotomic
  std::uint64_t d_arg = 0, q_arg = 0, n_arg = 0;
  auto* cyclotomic = app.add_subcommand("cyclotomic", "Phi_d(q) and its part coprime to gcd(d, Phi_d(q))");
  cyclotomic->add_option("--d", d_arg, "index d")->required();
  cyclotomic->add_option("--q", q_arg, "argument q")->required();
  cyclotomic->add_flag("--json", json, "JSON output");
  cyclotomic->callback([&] {
    action = [&] {
      const auto c = sieve::cyclotomic_eval(d_arg, q_arg);
      if (json) {
        Json j{{"d", c.d}, {"q", c.q}, {"phi", c.phi.get_str()}, {"f", c.f}, {"n", c.n}, {"phi_star", c.phi_star.get_str()}};
        out << j.dump() << '\n';
      } else {
        out << "phi=" << c.phi.get_str() << " f=" << c.f << " n=" << c.n << " phi_star=" << c.phi_star.get_str() << '\n';
      }
    };
  });

  // zsigmondy
  auto* zsig = app.add_subcommand("zsigmondy", "primitive prime divisors of q^n - 1");
  zsig->add_option("--q", q_arg, "base q")->required();
  zsig->add_option("--n", n_arg, "exponent n")->required();
  zsig->add_flag("--json", json, "JSON output");
  zsig->callback([&] {
    action = [&] {
      const auto z = sieve::zsigmondy_ppd(q_arg, n_arg);
      if (json) {
        out << Json{{"q", z.q}, {"n", z.n}, {"primitive_primes", z.primitive_primes}}.dump() << '\n';
      } else {
        out << "primitive primes: " << (z.primitive_primes.empty() ? "none" : join_u64(z.primitive_primes)) << '\n';
      }
    };
  });

  // rnagell
  auto* rnagell = app.add_subcommand("rnagell", "solutions of x^2 - 17 = 2^n");
  rnagell->add_option("--max-n", n_arg, "largest exponent (<= 63)")->required();
  rnagell->add_flag("--json", json, "JSON output");
  rnagell->callback([&] {
    action = [&] {
      const auto sols = sieve::ramanujan_nagell(n_arg);
      if (json) {
        Json arr = Json::array();
        for (const auto& [x, n] : sols) arr.push_back(Json{{"x", x}, {"n", n}});
        out << arr.dump() << '\n';
      } else {
        for (const auto& [x, n] : sols) out << "x=" << x << " n=" << n << '\n';
        for (const auto& [ee, k] : sieve::exponent_blocksize_pairs(sols)) out << "with n=2e+5, e>=1: e=" << ee << " k=" << k << '\n';
      }
    };
  });

  // field
  std::uint32_t p_arg = 0;
  std::optional<std::uint32_t> inv_arg;
  std::vector<std::uint64_t> mul_args, frob_args;
  bool sixth = false;
  auto* field = app.add_subcommand("field", "GF(p^d): modulus, primitive element and single operations on element indices");
  field->add_option("--p", p_arg, "characteristic")->required();
  field->add_option("--d", d, "extension degree")->required();
  field->add_option("--inv", inv_arg, "inverse of an element");
  field->add_option("--mul", mul_args, "product of two elements")->expected(2)->delimiter(',');
  field->add_option("--frobenius", frob_args, "a^r for r a power of p, given as a,r")->expected(2)->delimiter(',');
  field->add_flag("--sixth-root", sixth, "smallest primitive sixth root of unity");
  field->callback([&] {
    action = [&] {
      const gf::FieldContext f(p_arg, d);
      auto show = [&](gf::FieldElement a) { return f.to_string(a) + " (index " + std::to_string(a.index) + ")"; };
      out << "modulus: " << modulus_string(f) << "\nomega: " << show(f.omega()) << '\n';
      auto elem = [&](std::uint64_t i) { return f.element(static_cast<std::uint32_t>(i)); };
      if (inv_arg) {
        const auto r = f.inv(elem(*inv_arg));
        out << "inv: " << show(r) << '\n';
      }
      if (!mul_args.empty()) {
        const auto r = f.mul(elem(mul_args[0]), elem(mul_args[1]));
        out << "mul: " << show(r) << '\n';
      }
      if (!frob_args.empty()) {
        const auto r = f.frobenius(elem(frob_args[0]), frob_args[1]);
        out << "frobenius: " << show(r) << '\n';
      }
      if (sixth) {
        const auto r = gf::primitive_sixth_root(f);
        out << "sixth root: " << show(r) << '\n';
      }
    };
  });

  // linecheck
  auto* linecheck = app.add_subcommand("linecheck", "are the blocks cosets of GF(q)-lines in GF(q^e)?");
  linecheck->add_option("design", design_path, "derived design JSON on the points of GF(q^e)")->required();
  linecheck->add_option("--q", q, "subfield order q")->required();
  std::optional<std::uint64_t> field_order;
  linecheck->add_option("--e", e, "extension degree e");
  linecheck->add_option("--field", field_order, "order of the field holding the points (default q^e)");
  linecheck->callback([&] {
    action = [&] {
      if (!field_order && e == 0) throw InvalidArgument("linecheck needs --e or --field");
      const auto ctx = field_of_order(field_order.value_or(arith::checked_pow(q, e)));
      const bool ok = is_affine_line_system(read_design(design_path), ctx, q);
      out << "affine line system: " << (ok ? "yes" : "no") << '\n';
      if (!ok) throw PropertyFailed{};
    };
  });

  // cameron
  std::uint64_t t_arg = 3;
  auto* cameron = app.add_subcommand("cameron", "Cameron bounds for t-(v,k,1) and the block size bound for v");
  cameron->add_option("--t", t_arg, "strength (default 3)");
  cameron->add_option("--k", k_arg, "block size")->required();
  cameron->add_option("--v", v_arg, "number of points")->required();
  cameron->callback([&] {
    action = [&] {
      const auto c = cameron_check(t_arg, k_arg, v_arg);
      out << to_string(c.kind);
      if (c.kind == CameronKind::equality) out << (c.in_equality_list ? " (listed)" : " (not listed)");
      out << "\nblock size bound for v=" << v_arg << ": " << blocksize_bound(v_arg) << '\n';
      if (c.kind == CameronKind::violated) throw PropertyFailed{};
    };
  });

  // case1
  auto* case1 = app.add_subcommand("case1", "(2^d - 2) | d (k-1)(k-2)");
  case1->add_option("--d", d_arg, "dimension d")->required();
  case1->add_option("--k", k_arg, "block size k")->required();
  case1->callback([&] {
    action = [&] {
      const bool ok = sieve::case1_divisibility(d_arg, k_arg);
      out << (ok ? "true" : "false") << '\n';
      if (!ok) throw PropertyFailed{};
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (action) action();
    return 0;
  } catch (const PropertyFailed&) {
    return 1;
  } catch (const SetNotPreserved& ex) {
    err << "error: " << ex.what() << '\n';
    return 1;
  } catch (const ConsistencyError& ex) {
    err << "error: " << ex.what() << '\n';
    return 1;
  } catch (const Error& ex) {
    err << "error: " << ex.what() << '\n';
    return 2;
  }
}

}  // namespace steiner3::cli
