#include "soliton_forge/verify/fluid.hpp"

namespace sforge {

namespace {

Matrix outer(const CoVector& a, const CoVector& b) {
  Matrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out(i, j) = a[i] * b[j];
  }
  return out;
}

Matrix add(const Matrix& a, const Matrix& b) {
  Matrix out = a;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) += b(i, j);
  }
  return out;
}

std::vector<Residual> nonzero_values(const Matrix& m) {
  std::vector<Residual> out;
  for (auto& r : matrix_residuals(m)) {
    if (!r.value.is_zero()) out.push_back(std::move(r));
  }
  return out;
}

Record info(std::string id, std::string title, std::vector<Residual> values) {
  Record rec;
  rec.id = std::move(id);
  rec.title = std::move(title);
  rec.kind = RecordKind::Info;
  rec.status = Status::Info;
  rec.values = std::move(values);
  return rec;
}

ScalarExpr trace(const Matrix& inverse_metric, const Matrix& m) {
  ScalarExpr sum;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) sum += inverse_metric(i, j) * m(i, j);
  }
  return sum;
}

}  // namespace

Matrix perfect_fluid_energy_tensor(const FrameSpec& spec, const FluidParams& fluid) {
  const CoVector eta = eta_from_xi(spec);
  return add(scaled(outer(eta, eta), fluid.rho - fluid.p), scaled(spec.metric, fluid.p));
}

Matrix dust_energy_tensor(const FrameSpec& spec, const FluidParams& fluid) {
  const CoVector eta = eta_from_xi(spec);
  return scaled(outer(eta, eta), fluid.rho);
}

Matrix efe_residual(const FrameSpec& spec, const CurvatureBundle& curv, const FluidParams& fluid, const Matrix& t,
                    bool with_cosmological, RConvention convention) {
  ScalarExpr metric_factor = -curv.scalar(convention) / 2;
  if (with_cosmological) metric_factor += fluid.mu;
  Matrix out = add(curv.ricci, scaled(spec.metric, metric_factor));
  return out - scaled(t, fluid.tau);
}

ScalarExpr soliton_energy_coefficient(const SolitonParams& params, const FluidParams& fluid, const ScalarExpr& r) {
  return (4 * fluid.mu - r + 2 * params.lambda / params.beta) / (4 * fluid.tau);
}

Matrix soliton_energy_tensor(const FrameSpec& spec, const CurvatureBundle& curv, const SolitonParams& params,
                             const FluidParams& fluid) {
  return scaled(spec.metric, soliton_energy_coefficient(params, fluid, curv.scalar(params.r_convention)));
}

QNormFormulas q_norm_formulas(const SolitonParams& params, const FluidParams& fluid) {
  const ScalarExpr& beta = params.beta;
  const ScalarExpr& lambda = params.lambda;
  const ScalarExpr perfect = fluid.tau * (fluid.rho - 3 * fluid.p) - 3 * lambda / beta;
  const ScalarExpr dust = fluid.tau * fluid.rho - 2 * lambda / beta;
  return {perfect.pow(2) / 16, (3 * lambda / (4 * beta)).pow(2), dust.pow(2) / 16};
}

std::vector<Record> q_norm_records(const SolitonParams& params, const FluidParams& fluid) {
  const QNormFormulas q = q_norm_formulas(params, fluid);
  const std::set<Sym> nonzero{Sym(param::beta), Sym(param::tau)};
  std::vector<Record> out;

  Record forms = info("q-norm", "closed forms for |Q|^2",
                      {{"perfect fluid", q.perfect_fluid}, {"radiation", q.radiation}, {"dust", q.dust}});
  out.push_back(std::move(forms));

  std::vector<Residual> radiation;
  if (fluid.rho == ScalarExpr::symbol(param::rho)) {
    radiation.push_back({"perfect fluid at rho = 3p minus radiation form",
                         q.perfect_fluid.substitute({{Sym(param::rho), 3 * fluid.p}}) - q.radiation});
  }
  out.push_back(make_record("q-radiation", "rho = 3p gives |Q|^2 = (3 lambda/(4 beta))^2", RecordKind::Identity,
                            std::move(radiation), nonzero));

  std::vector<Residual> dust_zero;
  if (params.lambda == ScalarExpr::symbol(param::lambda)) {
    dust_zero.push_back({"dust form at lambda = beta tau rho/2",
                         q.dust.substitute({{Sym(param::lambda), params.beta * fluid.tau * fluid.rho / 2}})});
  }
  out.push_back(make_record("q-dust-zero", "lambda = beta tau rho/2 gives |Q|^2 = 0 for dust", RecordKind::Identity,
                            std::move(dust_zero), nonzero));
  return out;
}

Record dust_vacuum_check(const FrameSpec& spec, const FluidParams& fluid, const SolitonParams& params) {
  const ScalarExpr n = static_cast<long>(spec.dimension);
  const ScalarExpr e = pairing(spec, spec.xi, spec.xi);
  const ScalarExpr r = ScalarExpr::symbol(param::r);
  const ScalarExpr& alpha = params.alpha;
  const ScalarExpr& beta = params.beta;
  const ScalarExpr& lambda = params.lambda;
  const ScalarExpr& tau = fluid.tau;
  const ScalarExpr& rho = fluid.rho;

  // (c - r/2) as the coefficient of g
  const ScalarExpr k = (beta * r - 2 * lambda - alpha * r) / (2 * alpha);
  const auto r_trace = solve_linear({n * k - tau * rho * e}, Sym(param::r));
  const auto r_contraction = solve_linear({k - tau * rho * e}, Sym(param::r));

  const std::string title = "dust without cosmological term: trace and eta-contraction agree only for alpha tau rho = 0";
  if (!r_trace || !r_contraction) {
    Record rec;
    rec.id = "dust-vacuum";
    rec.title = title;
    rec.status = Status::Unchecked;
    rec.notes.push_back("the dust relation does not determine r");
    return rec;
  }
  const ScalarExpr difference = *r_trace - *r_contraction;
  Record rec = make_record("dust-vacuum", title, RecordKind::Check,
                           {{"r (trace) - r (eta-contraction)", difference}}, spec.assume_nonzero);
  rec.values = {{"r (trace)", *r_trace},
                {"r (eta-contraction)", *r_contraction},
                {"r (trace), as printed", (-alpha * rho * tau + 4 * lambda) / (2 * (beta - alpha))},
                {"r (eta-contraction), as printed", 2 * (alpha * rho * tau + lambda) / (beta - alpha)},
                {"difference numerator", ScalarExpr::fraction(difference.num().primitive(), Poly(1))}};
  if (rec.condition && rec.condition->variable == param::rho) {
    for (const auto& root : rec.condition->roots) {
      FluidParams at_root = fluid;
      at_root.rho = root;
      const bool vacuum = dust_energy_tensor(spec, at_root).is_zero();
      rec.notes.push_back("branch rho = " + to_string(root) + ": " + (vacuum ? "T = 0, the spacetime is vacuum"
                                                                             : "T does not vanish"));
    }
  }
  rec.notes.push_back("branch alpha = 0: no conclusion about rho");
  return rec;
}

std::vector<Record> fluid_records(const FrameSpec& spec, const Connection& conn, const CurvatureBundle& curv,
                                  RConvention convention) {
  const FluidParams fluid = FluidParams::symbolic();
  SolitonParams params = SolitonParams::symbolic(convention);
  const auto& nonzero = spec.assume_nonzero;
  std::vector<Record> out;

  const Matrix perfect = perfect_fluid_energy_tensor(spec, fluid);
  const Matrix dust = dust_energy_tensor(spec, fluid);
  out.push_back(info("T-perfect", "T = (rho - p) eta (x) eta + p g", nonzero_values(perfect)));
  out.push_back(info("T-dust", "T = rho eta (x) eta", nonzero_values(dust)));
  out.push_back(make_record("dust-limit", "perfect-fluid T at p = 0 equals the dust T", RecordKind::Check,
                            matrix_residuals(perfect.substitute({{Sym(param::p), ScalarExpr()}}) - dust), nonzero));

  out.push_back(make_record("efe-perfect-mu", "S - (r/2) g + mu g = tau T for a perfect fluid", RecordKind::Relation,
                            matrix_residuals(efe_residual(spec, curv, fluid, perfect, true, convention)), nonzero));
  out.push_back(make_record("efe-perfect", "S - (r/2) g = tau T for a perfect fluid", RecordKind::Relation,
                            matrix_residuals(efe_residual(spec, curv, fluid, perfect, false, convention)), nonzero));

  const Matrix dust_residual = efe_residual(spec, curv, fluid, dust, false, convention);
  out.push_back(make_record("efe-dust", "S - (r/2) g = tau T for dust", RecordKind::Relation,
                            matrix_residuals(dust_residual), nonzero));
  out.push_back(make_record("efe-dust-trace", "trace of the dust field equation", RecordKind::Relation,
                            {{"g^ij residual_ij", trace(conn.inverse_metric, dust_residual)}}, nonzero));
  out.back().notes.push_back("with the signed scalar curvature in four dimensions this reads r = tau rho");

  {
    const Matrix t = soliton_energy_tensor(spec, curv, params, fluid);
    const Matrix residual = efe_residual(spec, curv, fluid, t, true, convention);
    Record rec = make_record("efe-einstein-like", "S - (r/2) g + mu g = tau T for T = (4 mu - r + 2 lambda/beta)/(4 tau) g",
                             RecordKind::Relation, matrix_residuals(residual), nonzero);
    std::vector<ScalarExpr> equations;
    for (const auto& c : residual.components()) equations.push_back(c);
    rec.values.push_back({"coefficient of g", soliton_energy_coefficient(params, fluid, curv.scalar(convention))});
    if (const auto lambda = solve_linear(equations, Sym(param::lambda))) {
      rec.values.push_back({"lambda solving the residual", *lambda});
    }
    out.push_back(std::move(rec));
  }

  for (auto& rec : q_norm_records(params, fluid)) out.push_back(std::move(rec));
  out.push_back(info("q-norm-spec", "|Q|^2 of this spec", {{"|Q|^2", curv.ricci_operator_norm_sq}}));
  out.push_back(dust_vacuum_check(spec, fluid, params));
  return out;
}

}  // namespace sforge
