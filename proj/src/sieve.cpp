#include "steiner3/sieve.hpp"

#include <algorithm>
#include <map>

#include "steiner3/arith.hpp"
#include "steiner3/error.hpp"

namespace steiner3::sieve {

namespace {
using u128 = unsigned __int128;
}

SieveReport screen(std::uint64_t v, std::uint64_t k) {
  if (!(3 < k && k < v)) throw InvalidArgument("screen needs 3 < k < v");
  SieveReport r;
  r.v = v;
  r.k = k;
  const u128 vv = v, kk = k;
  const u128 b_num = vv * (vv - 1) * (vv - 2), b_den = kk * (kk - 1) * (kk - 2);
  const u128 r_num = (vv - 1) * (vv - 2), r_den = (kk - 1) * (kk - 2);
  r.checks.push_back({"b-integrality", b_num % b_den == 0});
  const bool r_int = r_num % r_den == 0;
  r.checks.push_back({"r-integrality", r_int});
  // lambda2 = r (k-1) / (v-1)
  r.checks.push_back({"lambda2-integrality", r_int && ((r_num / r_den) * (kk - 1)) % (vv - 1) == 0});
  r.checks.push_back({"derived-integrality", (v - 2) % (k - 2) == 0});
  r.checks.push_back({"blocksize-bound", k <= blocksize_bound(v)});
  const auto cam = cameron_check(3, k, v);
  r.checks.push_back({"cameron-a", cam.bound_a});
  r.checks.push_back({"cameron-b", cam.bound_b});
  r.cameron_equality = cam.equality_b;
  r.in_equality_list = cam.in_equality_list;
  r.admissible = std::all_of(r.checks.begin(), r.checks.end(), [](const Check& c) { return c.pass; });
  return r;
}

void sieve_each(std::uint64_t v_min, std::uint64_t v_max, const std::function<void(const SieveReport&)>& visit) {
  if (!(4 <= v_min && v_min <= v_max && v_max <= 1'000'000)) throw InvalidArgument("sieve range needs 4 <= v_min <= v_max <= 10^6");
  for (std::uint64_t v = v_min; v <= v_max; ++v) {
    const std::uint64_t k_max = std::min(blocksize_bound(v), v - 1);
    for (std::uint64_t k = 4; k <= k_max; ++k) visit(screen(v, k));
  }
}

std::vector<SieveReport> admissible_parameters(std::uint64_t v_min, std::uint64_t v_max, bool only_admissible) {
  std::vector<SieveReport> out;
  sieve_each(v_min, v_max, [&](const SieveReport& r) {
    if (!only_admissible || r.admissible) out.push_back(r);
  });
  return out;
}

bool division_property(std::uint64_t r, std::uint64_t order_gx) {
  if (r == 0 || order_gx == 0) throw InvalidArgument("division_property needs positive integers");
  return order_gx % r == 0;
}

StabilizerReport stabilizer_equation(const Design& design, const GeneratorSet& group) {
  const FlagReport flags = is_flag_transitive(design, group);
  if (!flags.flag_transitive) throw InvalidArgument("group is not flag-transitive on the design");
  StabilizerReport s;
  s.v = design.v();
  s.k = design.k();
  s.b = design.b();
  s.group_order = group_order(group).order;
  auto quotient = [&](std::uint64_t den, const char* what) {
    if (den == 0 || s.group_order % den != 0) {
      throw ConsistencyError(std::string("|G| is not divisible by the size of the ") + what + " orbit");
    }
    return s.group_order / den;
  };
  s.point_stabilizer = quotient(s.v, "point");
  s.pair_stabilizer = quotient(s.v * (s.v - 1), "point-pair");
  s.block_stabilizer = quotient(s.b, "block");
  s.flag_stabilizer = quotient(s.b * s.k, "flag");

  const Point x = design.blocks()[0][0], y = design.blocks()[0][1];
  const Point xy[] = {x, y};
  s.point_stabilizer_chain = group_order(group, std::span<const Point>(xy, 1)).stabilizer_orders[1];
  s.pair_stabilizer_chain = group_order(group, xy).stabilizer_orders[2];

  const u128 lhs1 = u128(s.b) * s.block_stabilizer, rhs1 = u128(s.v) * (s.v - 1) * s.pair_stabilizer;
  const u128 lhs2 = u128(s.v - 2) * s.flag_stabilizer, rhs2 = u128(s.k - 1) * (s.k - 2) * s.pair_stabilizer;
  s.block_count_identity = lhs1 == rhs1;
  s.v_minus_2_identity = lhs2 == rhs2;
  s.ok = s.block_count_identity && s.v_minus_2_identity && s.point_stabilizer_chain == s.point_stabilizer &&
         s.pair_stabilizer_chain == s.pair_stabilizer;
  return s;
}

CyclotomicEval cyclotomic_eval(std::uint64_t d, std::uint64_t q) {
  if (d < 1 || q < 2) throw InvalidArgument("cyclotomic_eval needs d >= 1 and q >= 2");
  std::map<std::uint64_t, mpz_class> phi;
  for (std::uint64_t e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    mpz_class value;
    mpz_ui_pow_ui(value.get_mpz_t(), q, e);
    value -= 1;
    for (const auto& [f, pf] : phi) {
      if (e % f != 0) continue;
      if (!mpz_divisible_p(value.get_mpz_t(), pf.get_mpz_t())) throw ConsistencyError("cyclotomic recursion is not exact");
      mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), pf.get_mpz_t());
    }
    phi.emplace(e, std::move(value));
  }
  CyclotomicEval out;
  out.d = d;
  out.q = q;
  out.phi = phi.at(d);
  out.f = mpz_gcd_ui(nullptr, out.phi.get_mpz_t(), d);
  out.phi_star = out.phi;
  if (out.f != 1) {
    if (!mpz_divisible_ui_p(out.phi_star.get_mpz_t(), out.f)) throw ConsistencyError("gcd(d, Phi_d(q)) does not divide Phi_d(q)");
    out.n = 0;
    while (mpz_divisible_ui_p(out.phi_star.get_mpz_t(), out.f)) {
      mpz_divexact_ui(out.phi_star.get_mpz_t(), out.phi_star.get_mpz_t(), out.f);
      ++out.n;
    }
  }
  return out;
}

ZsigmondyResult zsigmondy_ppd(std::uint64_t q, std::uint64_t n) {
  if (q < 2 || n < 2) throw InvalidArgument("zsigmondy_ppd needs q >= 2 and n >= 2");
  std::uint64_t qn = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (qn > (std::uint64_t{1} << 63) / q) throw InvalidArgument("q^n exceeds 2^63");
    qn *= q;
  }
  ZsigmondyResult out{q, n, {}};
  for (const auto& [r, mult] : arith::factorize(qn - 1)) {
    bool primitive = true;
    for (std::uint64_t m = 1; m < n && primitive; ++m) primitive = arith::pow_mod(q, m, r) != 1;
    if (primitive) out.primitive_primes.push_back(r);
  }
  return out;
}

bool case1_divisibility(std::uint64_t d, std::uint64_t k) {
  if (d < 3 || d > 62 || k < 4) throw InvalidArgument("case1_divisibility needs 3 <= d <= 62 and k >= 4");
  const u128 lhs = (u128(1) << d) - 2;
  const u128 rhs = u128(d) * (k - 1) * (k - 2);
  return rhs % lhs == 0;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> ramanujan_nagell(std::uint64_t n_max) {
  if (n_max > 63) throw InvalidArgument("ramanujan_nagell needs n_max <= 63");
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    const std::uint64_t s = (std::uint64_t{1} << n) + 17;
    const std::uint64_t x = arith::isqrt(s);
    if (u128(x) * x == s) out.emplace_back(x, n);
  }
  return out;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> exponent_blocksize_pairs(
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& solutions) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (const auto& [x, n] : solutions) {
    if (n < 7 || n % 2 == 0 || x % 2 == 0) continue;
    out.emplace_back((n - 5) / 2, (x + 3) / 2);
  }
  return out;
}

}  // namespace steiner3::sieve
