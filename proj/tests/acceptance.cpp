// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "soliton_forge/algebra/parse.hpp"
#include "soliton_forge/cli/run.hpp"
#include "soliton_forge/cli/spec_io.hpp"
#include "soliton_forge/geometry/connection.hpp"
#include "soliton_forge/geometry/curvature.hpp"
#include "soliton_forge/verify/axioms.hpp"
#include "soliton_forge/verify/soliton.hpp"
#include "soliton_forge/verify/theorems.hpp"
#include "support/oracles.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

namespace {

using namespace sforge;
using sforge::testing::fixture_path;

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

ScalarExpr e(const char* text) { return parse_expr(text); }

struct Example {
  FrameSpec spec = parse_spec(fixture_path("lps_example.spec"));
  Connection conn = koszul_connection(spec);
  CurvatureBundle curv = compute_curvature(spec, conn);
};

const Record& find(const std::vector<Record>& records, const std::string& id) {
  return *std::find_if(records.begin(), records.end(), [&](const Record& r) { return r.id == id; });
}

Verdict connection_listing() {
  Verdict v;
  const Example ex;
  Rank3 expected(4);
  for (std::size_t i = 0; i < 3; ++i) {
    expected(i, i, 3) = e("a");  // nabla_{f_i} f_i = a f_4
    expected(i, 3, i) = e("a");  // nabla_{f_i} f_4 = a f_i
  }
  v.require(ex.conn.gamma == expected, "connection differs from the listed coefficients");
  return v;
}

Verdict riemann_listing() {
  Verdict v;
  const Example ex;
  struct Entry {
    std::size_t i, j, k, l;
    const char* value;
  };
  // R(f_i,f_j) f_k = value f_l, one-based as listed
  const Entry listed[] = {{1, 2, 1, 2, "-a^2"}, {1, 3, 1, 3, "-a^2"}, {1, 4, 1, 4, "-a^2"}, {1, 2, 2, 1, "a^2"},
                          {2, 3, 2, 3, "-a^2"}, {2, 4, 2, 4, "-a^2"}, {1, 3, 3, 1, "a^2"},  {2, 3, 3, 2, "a^2"},
                          {3, 4, 3, 4, "-a^2"}, {1, 4, 4, 1, "-a^2"}, {2, 4, 4, 2, "-a^2"}, {3, 4, 4, 3, "-a^2"}};
  Rank4 expected(4);
  for (const auto& x : listed) {
    expected(x.i - 1, x.j - 1, x.k - 1, x.l - 1) = e(x.value);
    expected(x.j - 1, x.i - 1, x.k - 1, x.l - 1) = -e(x.value);
  }
  v.require(ex.curv.riemann == expected, "Riemann tensor differs from the twelve listed components");
  return v;
}

Verdict ricci_and_scalar() {
  Verdict v;
  const Example ex;
  v.require(ex.curv.ricci == sforge::testing::matrix_of({{"3*a^2", "0", "0", "0"},
                                                          {"0", "3*a^2", "0", "0"},
                                                          {"0", "0", "3*a^2", "0"},
                                                          {"0", "0", "0", "-3*a^2"}}),
            "Ricci tensor");
  v.require(ex.curv.r_unsigned == e("6*a^2"), "r_unsigned = " + ex.curv.r_unsigned.to_string());
  v.require(ex.curv.r_signed == e("12*a^2"), "r_signed = " + ex.curv.r_signed.to_string());
  v.require(ex.curv.r_signed == sforge::testing::signed_trace_diagonal(ex.spec, ex.curv.ricci),
            "r_signed disagrees with the hand contraction");
  return v;
}

Verdict soliton_constant() {
  Verdict v;
  const Example ex;
  const auto result = solve_lambda_einstein(ex.spec, ex.curv, SolitonParams::symbolic(RConvention::Unsigned));
  v.require(std::holds_alternative<EinsteinLambda>(result), "example not recognised as Einstein");
  if (v.pass) {
    const ScalarExpr lambda = std::get<EinsteinLambda>(result).lambda;
    v.require(lambda == e("3*a^2*(beta - alpha)"), "lambda = " + lambda.to_string());
  }
  return v;
}

Verdict consistency_root() {
  Verdict v;
  const Example ex;
  const ScalarExpr lambda = e("3*a^2*(beta - alpha)").substitute({{Sym("alpha"), e("2*beta")}});
  v.require(lambda == e("-3*beta*a^2"), "lambda at alpha = 2 beta is " + lambda.to_string());
  // lambda = beta (r - n(n-1)) / 2 with n = 4, r = 6 a^2
  const ScalarExpr from_theorem = e("beta*(6*a^2 - 12)/2");
  const auto cond = common_condition({lambda - from_theorem}, ex.spec.assume_nonzero);
  v.require(cond && cond->to_string() == "a^2 - 1 = 0" && cond->roots == std::vector<Rational>{-1, 1},
            "equating the two lambdas does not give a = +-1");

  const auto axioms = lps_axiom_battery(ex.spec, ex.conn, ex.curv);
  const Record& ricci_xi = find(axioms, "2.13");
  v.require(ricci_xi.status == Status::Conditional && ricci_xi.condition &&
                ricci_xi.condition->to_string() == "a^2 - 1 = 0",
            "axiom battery condition on S(X,xi) is not a^2 = 1");
  const Record rec = lambda_consistency(ex.spec, ex.curv, RConvention::Unsigned);
  v.require(rec.condition && rec.condition->to_string() == "a^2 - 1 = 0", "consistency record");
  return v;
}

Verdict theorem_suite() {
  Verdict v;
  const auto records = theorem_identity_checks(4);
  v.require(!records.empty(), "no records");
  for (const auto& r : records) v.require(r.status == Status::Holds, r.id + " is " + to_string(r.status));
  return v;
}

Verdict obstruction() {
  Verdict v;
  const Example ex;
  v.require(lie_derivative_metric(ex.spec, ex.spec.xi) == sforge::testing::matrix_of({{"2*a", "0", "0", "0"},
                                                                                       {"0", "2*a", "0", "0"},
                                                                                       {"0", "0", "2*a", "0"},
                                                                                       {"0", "0", "0", "0"}}),
            "L_xi g");
  const auto axioms = lps_axiom_battery(ex.spec, ex.conn, ex.curv);
  const Record& killing = find(axioms, "2.5");
  v.require(killing.status == Status::Conditional && killing.condition &&
                killing.condition->roots == std::vector<Rational>{0},
            "Killing axiom is not conditional on a = 0");
  const Record& nabla_xi = find(axioms, "2.4");
  v.require(nabla_xi.status == Status::Conditional && nabla_xi.condition &&
                nabla_xi.condition->roots == std::vector<Rational>{1},
            "nabla xi axiom is not conditional on a = 1");
  return v;
}

void check_properties(Verdict& v, const FrameSpec& spec, const std::string& name) {
  v.require(validate(spec).ok(), name + ": not a valid spec");
  const Connection conn = koszul_connection(spec);
  v.require(torsion_residual(spec, conn).is_zero(), name + ": torsion");
  v.require(metric_compatibility_residual(spec, conn).is_zero(), name + ": metric compatibility");
  const CurvatureBundle curv = compute_curvature(spec, conn);
  const CurvatureIdentityResiduals ids = curvature_identity_residuals(spec, curv);
  v.require(ids.antisymmetry.empty(), name + ": antisymmetry");
  v.require(ids.pair_symmetry.empty(), name + ": pair symmetry");
  v.require(ids.first_bianchi.empty(), name + ": first Bianchi");
  v.require(ids.ricci_symmetry.empty(), name + ": Ricci symmetry");
  v.require(ids.lowered_skew.empty(), name + ": lowered skew symmetry");
  v.require(curv.riemann == sforge::testing::riemann_by_definition(spec, conn.gamma), name + ": Riemann definition");
}

Verdict property_suites(std::size_t& random_count) {
  Verdict v;
  for (const char* name : {"lps_example.spec", "minkowski4.spec", "heisenberg3.spec", "so3_frame.spec"}) {
    check_properties(v, parse_spec(fixture_path(name)), name);
  }
  std::mt19937_64 rng(8);
  for (random_count = 0; random_count < 120; ++random_count) {
    const auto r = sforge::testing::random_lie_spec(rng);
    check_properties(v, r.spec, r.description + " #" + std::to_string(random_count));
  }
  const FrameSpec flat = parse_spec(fixture_path("minkowski4.spec"));
  const CurvatureBundle curv = compute_curvature(flat, koszul_connection(flat));
  v.require(curv.riemann.is_zero() && curv.ricci.is_zero() && curv.r_signed.is_zero() && curv.nabla_ricci.is_zero(),
            "flat spec has curvature");
  return v;
}

Verdict oracle_equivalence(std::size_t& compared) {
  Verdict v;
  compared = 0;
  auto compare = [&](const FrameSpec& spec, const std::string& name) {
    const auto oracle = sforge::testing::brute_force_connection(spec);
    v.require(oracle.has_value(), name + ": oracle system not uniquely solvable");
    if (oracle) v.require(koszul_connection(spec).gamma == *oracle, name + ": connection differs from oracle");
    ++compared;
  };
  compare(parse_spec(fixture_path("heisenberg3.spec")), "heisenberg3");
  compare(parse_spec(fixture_path("so3_frame.spec")), "so3_frame");
  std::mt19937_64 rng(9);
  while (compared < 60) {
    const auto r = sforge::testing::random_lie_spec(rng);
    if (r.spec.dimension <= 3) compare(r.spec, r.description);
  }
  return v;
}

Verdict determinism() {
  Verdict v;
  for (const char* name : {"lps_example.spec", "minkowski4.spec", "heisenberg3.spec", "so3_frame.spec"}) {
    RunConfig config;
    config.command = "report";
    config.input = fixture_path(name);
    config.format = OutputFormat::Structured;
    std::ostringstream first, second, err;
    run(config, first, err);
    run(config, second, err);
    v.require(!first.str().empty() && first.str() == second.str(), std::string(name) + ": reports differ");
  }
  return v;
}

}  // namespace

int main() {
  std::size_t random_specs = 0;
  std::size_t oracle_specs = 0;
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"example connection coefficients", connection_listing},
      {"example Riemann components", riemann_listing},
      {"example Ricci tensor, r_unsigned = 6a^2, r_signed = 12a^2", ricci_and_scalar},
      {"Einstein soliton constant 3a^2(beta - alpha), unsigned", soliton_constant},
      {"consistency root a = +-1 and axiom condition a^2 = 1", consistency_root},
      {"theorem identity suite certifies", theorem_suite},
      {"Killing obstruction: L_xi g = diag(2a,2a,2a,0)", obstruction},
      {"property suites on fixtures and random Lie frames", [&] { return property_suites(random_specs); }},
      {"Koszul connection matches the linear-system oracle", [&] { return oracle_equivalence(oracle_specs); }},
      {"report output is byte-identical across runs", determinism},
  };

  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Verdict v;
    try {
      v = criteria[k].second();
    } catch (const std::exception& ex) {
      v.pass = false;
      v.detail = std::string("exception: ") + ex.what();
    }
    std::cout << "criterion " << (k + 1) << ": " << (v.pass ? "PASS" : "FAIL") << "  " << criteria[k].first;
    if (k == 7) std::cout << " (" << random_specs << " random specs)";
    if (k == 8) std::cout << " (" << oracle_specs << " specs)";
    if (!v.pass) std::cout << "  [" << v.detail << "]";
    std::cout << "\n";
    failures += v.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
