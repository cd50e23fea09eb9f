#include "soliton_forge/cli/pipeline.hpp"

#include "soliton_forge/verify/axioms.hpp"
#include "soliton_forge/verify/fluid.hpp"
#include "soliton_forge/verify/soliton.hpp"
#include "soliton_forge/verify/theorems.hpp"

namespace sforge {

namespace {

std::string label_of(const std::vector<std::size_t>& index) {
  std::string out = "(";
  for (std::size_t k = 0; k < index.size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(index[k]);
  }
  return out + ")";
}

std::vector<Residual> residuals_of(const std::vector<IndexedValue>& entries) {
  std::vector<Residual> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back({label_of(e.index), e.value});
  return out;
}

Record check(const FrameSpec& spec, const char* id, const char* title, const std::vector<IndexedValue>& entries,
             RecordKind kind = RecordKind::Check) {
  return make_record(id, title, kind, residuals_of(entries), spec.assume_nonzero);
}

}  // namespace

Section validation_section(const FrameSpec& spec, const ValidationReport& validation) {
  Section s;
  s.name = "validate";
  for (const auto& c : validation.checks) {
    std::vector<Residual> residuals;
    if (!c.passed) residuals.push_back({"violated", ScalarExpr(1)});
    Record rec = make_record(c.name, "invariant: " + c.name, RecordKind::Check, std::move(residuals),
                             spec.assume_nonzero);
    if (!c.detail.empty()) rec.notes.push_back(c.detail);
    s.records.push_back(std::move(rec));
  }
  if (validation.signature) {
    s.notes.push_back("signature: " + std::to_string(validation.signature->positive) + " positive, " +
                      std::to_string(validation.signature->negative) + " negative" +
                      (validation.signature->lorentzian() ? " (Lorentzian)" : ""));
  } else {
    s.notes.push_back("signature: undecided, the metric has symbolic entries");
  }
  for (const auto& w : validation.warnings) s.notes.push_back("warning: " + w);
  return s;
}

Section connection_section(const FrameSpec& spec, const Connection& conn) {
  Section s;
  s.name = "connection";
  s.listings.push_back(make_listing("Gamma", "(i,j,k) -> Gamma^k_ij, nabla_{f_i} f_j = sum_k Gamma^k_ij f_k",
                                    nonzero_entries(conn.gamma)));
  s.records.push_back(check(spec, "torsion-free", "nabla_X Y - nabla_Y X - [X,Y] = 0",
                            nonzero_entries(torsion_residual(spec, conn))));
  s.records.push_back(check(spec, "metric-compatible", "X g(Y,Z) = g(nabla_X Y, Z) + g(Y, nabla_X Z)",
                            nonzero_entries(metric_compatibility_residual(spec, conn))));
  return s;
}

Section curvature_section(const FrameSpec& spec, const CurvatureBundle& curv, RConvention convention) {
  Section s;
  s.name = "curvature";

  std::vector<IndexedValue> riemann_entries;
  for (auto& e : nonzero_entries(curv.riemann)) {
    if (e.index[0] < e.index[1]) riemann_entries.push_back(std::move(e));
  }
  s.listings.push_back(make_listing("R", "(i,j,k,l) -> R^l_kij, R(f_i,f_j) f_k = sum_l R^l_kij f_l; i < j listed",
                                    std::move(riemann_entries)));
  s.listings.push_back(make_listing("S", "(i,j) -> S(f_i,f_j)", nonzero_entries(curv.ricci)));
  s.listings.push_back(make_listing("Q", "(i,j) -> Q^i_j, g(Q X, Y) = S(X,Y)", nonzero_entries(curv.ricci_operator)));
  s.listings.push_back(make_listing("nabla S", "(k,i,j) -> (nabla_{f_k} S)(f_i,f_j)", nonzero_entries(curv.nabla_ricci)));

  s.values.push_back({"r_signed", curv.r_signed});
  s.values.push_back({"r_unsigned", curv.r_unsigned});
  s.values.push_back({std::string("r (") + to_string(convention) + ")", curv.scalar(convention)});
  s.values.push_back({"|Q|^2", curv.ricci_operator_norm_sq});

  const CurvatureIdentityResiduals ids = curvature_identity_residuals(spec, curv);
  s.records.push_back(check(spec, "R-antisymmetry", "R(X,Y) = -R(Y,X)", ids.antisymmetry, RecordKind::Identity));
  s.records.push_back(check(spec, "first-bianchi", "R(X,Y)Z + R(Y,Z)X + R(Z,X)Y = 0", ids.first_bianchi,
                            RecordKind::Identity));
  s.records.push_back(check(spec, "R-lowered-skew", "R(X,Y,Z,W) = -R(X,Y,W,Z)", ids.lowered_skew,
                            RecordKind::Identity));
  s.records.push_back(check(spec, "R-pair-symmetry", "R(X,Y,Z,W) = R(Z,W,X,Y)", ids.pair_symmetry,
                            RecordKind::Identity));
  s.records.push_back(check(spec, "ricci-symmetry", "S(X,Y) = S(Y,X)", ids.ricci_symmetry, RecordKind::Identity));

  s.records.push_back(make_record("ricci-trace", "S agrees with the trace of R", RecordKind::Identity,
                                  matrix_residuals(curv.ricci - ricci_by_trace(curv.riemann)), spec.assume_nonzero));
  if (const auto orthonormal = ricci_pseudo_orthonormal(spec, curv.riemann)) {
    s.records.push_back(make_record("ricci-orthonormal", "S agrees with the pseudo-orthonormal frame sum",
                                    RecordKind::Identity, matrix_residuals(curv.ricci - *orthonormal),
                                    spec.assume_nonzero));
  } else {
    s.notes.push_back("pseudo-orthonormal Ricci sum skipped: the metric is not diagonal");
  }

  s.records.push_back(check(spec, "codazzi", "(nabla_Z S)(X,Y) = (nabla_Y S)(Z,X)",
                            codazzi_defect(curv.nabla_ricci).defects));
  s.records.push_back(check(spec, "eta-parallel", "g((nabla_K Q) X, Y) = 0 for all K, X, Y",
                            eta_parallel_defect(curv.nabla_ricci).defects));
  s.records.back().notes.push_back(kEtaParallelNote);
  return s;
}

Section axioms_section(const FrameSpec& spec, const Connection& conn, const CurvatureBundle& curv) {
  Section s;
  s.name = "axioms";
  s.records = lps_axiom_battery(spec, conn, curv);
  return s;
}

Section soliton_section(const FrameSpec& spec, const Connection& conn, const CurvatureBundle& curv,
                        RConvention convention) {
  Section s;
  s.name = "soliton";
  s.records = soliton_records(spec, conn, curv, convention);
  return s;
}

Section fluid_section(const FrameSpec& spec, const Connection& conn, const CurvatureBundle& curv,
                      RConvention convention) {
  Section s;
  s.name = "fluid";
  s.records = fluid_records(spec, conn, curv, convention);
  s.notes.push_back("relation records state equations among free parameters and never affect the exit status");
  return s;
}

Section theorems_section(long n) {
  Section s;
  s.name = "theorems";
  s.records = theorem_identity_checks(n);
  return s;
}

Section cross_checks_section(long n) {
  Section s;
  s.name = "cross-checks";
  s.records = derivation_cross_checks(n);
  s.notes.push_back("cross-checks compare printed intermediate formulas with an independent derivation");
  return s;
}

}  // namespace sforge
