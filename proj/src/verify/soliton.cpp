#include "soliton_forge/verify/soliton.hpp"

namespace sforge {

namespace {

ScalarExpr dim(const FrameSpec& spec) { return static_cast<long>(spec.dimension); }

std::vector<IndexedValue> nonzero_entries(const Matrix& m) {
  std::vector<IndexedValue> out;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (!m(i, j).is_zero()) out.push_back({{i + 1, j + 1}, m(i, j)});
    }
  }
  return out;
}

std::vector<Residual> defect_residuals(const DefectList& list) {
  std::vector<Residual> out;
  for (const auto& d : list.defects) {
    std::string label = "(";
    for (std::size_t k = 0; k < d.index.size(); ++k) {
      if (k != 0) label += ',';
      label += std::to_string(d.index[k]);
    }
    out.push_back({label + ")", d.value});
  }
  return out;
}

}  // namespace

Matrix rys_residual(const FrameSpec& spec, const CurvatureBundle& curv, const VectorField& v,
                    const SolitonParams& params) {
  const std::size_t n = spec.dimension;
  const ScalarExpr& r = curv.scalar(params.r_convention);
  const ScalarExpr metric_factor = 2 * params.lambda - params.beta * r;
  Matrix out = lie_derivative_metric(spec, v);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) += 2 * params.alpha * curv.ricci(i, j) + metric_factor * spec.metric(i, j);
    }
  }
  return out;
}

std::variant<EinsteinLambda, NotEinstein> solve_lambda_einstein(const FrameSpec& spec, const CurvatureBundle& curv,
                                                                  const SolitonParams& params) {
  const ScalarExpr c = curv.r_signed / dim(spec);
  const Matrix defect = curv.ricci - scaled(spec.metric, c);
  if (!defect.is_zero()) return NotEinstein{nonzero_entries(defect)};
  const ScalarExpr& r = curv.scalar(params.r_convention);
  return EinsteinLambda{c, (params.beta * r - 2 * params.alpha * c) / 2};
}

Record lemma_quantities(const FrameSpec& spec, const CurvatureBundle& curv, const SolitonParams& params) {
  const ScalarExpr& r = curv.scalar(params.r_convention);
  const ScalarExpr& alpha = params.alpha;
  const ScalarExpr& beta = params.beta;
  const ScalarExpr& lambda = params.lambda;
  const ScalarExpr coeff = (beta * r - 2 * lambda) / (2 * alpha);
  const ScalarExpr eta_xi = apply(eta_from_xi(spec), spec.xi);
  const ScalarExpr g_xi_xi = pairing(spec, spec.xi, spec.xi);
  const ScalarExpr expected = (2 * lambda - beta * r) / (2 * alpha);

  Record rec = make_record("lemma", "Einstein-case quantities; S(xi,xi) = (2 lambda - beta r)/(2 alpha)",
                           RecordKind::Check,
                           {{"S(xi,xi) via eta(xi)", coeff * eta_xi - expected},
                            {"S(xi,xi) via g(xi,xi)", coeff * g_xi_xi - expected}},
                           spec.assume_nonzero);
  rec.values = {{"S(X,xi) / eta(X)", coeff},
                {"S(xi,xi)", coeff * eta_xi},
                {"Q eigenvalue", coeff},
                {"soliton scalar curvature", dim(spec) * coeff}};
  if (const auto solved = solve_lambda_einstein(spec, curv, params); std::holds_alternative<EinsteinLambda>(solved)) {
    const auto& e = std::get<EinsteinLambda>(solved);
    Bindings at_lambda;
    if (const auto syms = lambda.symbols(); syms.size() == 1 && lambda == ScalarExpr::symbol(*syms.begin())) {
      at_lambda.emplace(Sym(*syms.begin()), e.lambda);
      rec.values.push_back({"soliton scalar curvature at Einstein lambda", (dim(spec) * coeff).substitute(at_lambda)});
    }
  }
  return rec;
}

Record lambda_consistency(const FrameSpec& spec, const CurvatureBundle& curv, RConvention convention) {
  const SolitonParams params = SolitonParams::symbolic(convention);
  const auto solved = solve_lambda_einstein(spec, curv, params);
  const std::string title = "Einstein lambda at alpha = n beta/2 equals beta (r - n(n-1))/2";
  if (!std::holds_alternative<EinsteinLambda>(solved)) {
    Record rec;
    rec.id = "consistency";
    rec.title = title;
    rec.status = Status::Unchecked;
    rec.notes.push_back("S is not a multiple of g");
    return rec;
  }
  const ScalarExpr n = dim(spec);
  const ScalarExpr& r = curv.scalar(convention);
  const Bindings alpha_rule{{Sym(param::alpha), n * params.beta / 2}};
  const ScalarExpr lambda_einstein = std::get<EinsteinLambda>(solved).lambda.substitute(alpha_rule);
  const ScalarExpr lambda_formula = params.beta * (r - n * (n - 1)) / 2;
  Record rec = make_record("consistency", title, RecordKind::Check,
                           {{"lambda difference", lambda_einstein - lambda_formula}}, spec.assume_nonzero);
  rec.values = {{"Einstein lambda at alpha = n beta/2", lambda_einstein},
                {"beta (r - n(n-1))/2", lambda_formula}};
  return rec;
}

Matrix hessian(const FrameSpec& spec, const Connection& conn, const CoVector& df) {
  const std::size_t n = spec.dimension;
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ScalarExpr sum;
      for (std::size_t k = 0; k < n; ++k) sum -= conn.gamma(i, j, k) * df[k];
      out(i, j) = sum;
    }
  }
  return out;
}

std::vector<IndexedValue> exactness_defect(const FrameSpec& spec, const CoVector& df) {
  const std::size_t n = spec.dimension;
  std::vector<IndexedValue> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      ScalarExpr sum;
      for (std::size_t k = 0; k < n; ++k) sum += spec.structure(i, j, k) * df[k];
      if (!sum.is_zero()) out.push_back({{i + 1, j + 1}, sum});
    }
  }
  return out;
}

Matrix grys_residual(const FrameSpec& spec, const Connection& conn, const CurvatureBundle& curv, const CoVector& df,
                     const SolitonParams& params) {
  const std::size_t n = spec.dimension;
  const ScalarExpr& r = curv.scalar(params.r_convention);
  const ScalarExpr metric_factor = params.lambda - params.beta * r / 2;
  Matrix out = hessian(spec, conn, df);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) += params.alpha * curv.ricci(i, j) + metric_factor * spec.metric(i, j);
    }
  }
  return out;
}

std::vector<Record> soliton_records(const FrameSpec& spec, const Connection& conn, const CurvatureBundle& curv,
                                    RConvention convention) {
  const auto& nonzero = spec.assume_nonzero;
  SolitonParams params = SolitonParams::symbolic(convention);
  const auto solved = solve_lambda_einstein(spec, curv, params);
  const bool einstein = std::holds_alternative<EinsteinLambda>(solved);
  std::vector<Record> out;

  {
    const ScalarExpr c = curv.r_signed / dim(spec);
    Record rec = make_record("einstein", "S = c g with c = r_signed / n", RecordKind::Check,
                             matrix_residuals(curv.ricci - scaled(spec.metric, c)), nonzero);
    rec.values.push_back({"c", c});
    if (einstein) {
      const auto lambda_in = [&](RConvention conv) {
        SolitonParams p = params;
        p.r_convention = conv;
        return std::get<EinsteinLambda>(solve_lambda_einstein(spec, curv, p)).lambda;
      };
      rec.values.push_back({"lambda", std::get<EinsteinLambda>(solved).lambda});
      rec.values.push_back({"lambda (signed r)", lambda_in(RConvention::Signed)});
      rec.values.push_back({"lambda (unsigned r)", lambda_in(RConvention::Unsigned)});
    } else {
      rec.notes.push_back("not Einstein: no constant lambda solves the soliton equation with V = 0");
    }
    out.push_back(std::move(rec));
  }

  SolitonParams at_lambda = params;
  if (einstein) at_lambda.lambda = std::get<EinsteinLambda>(solved).lambda;
  const std::string lambda_note =
      einstein ? "lambda = Einstein lambda " + at_lambda.lambda.to_string() : std::string("lambda left free");

  const VectorField zero(spec.dimension);
  out.push_back(make_record("rys-V=0", "L_V g + 2 alpha S + (2 lambda - beta r) g = 0 with V = 0", RecordKind::Check,
                            matrix_residuals(rys_residual(spec, curv, zero, at_lambda)), nonzero));
  out.back().notes.push_back(lambda_note);
  out.push_back(make_record("rys-V=xi", "L_V g + 2 alpha S + (2 lambda - beta r) g = 0 with V = xi",
                            RecordKind::Check, matrix_residuals(rys_residual(spec, curv, spec.xi, at_lambda)),
                            nonzero));
  out.back().notes.push_back(lambda_note);
  out.back().notes.push_back("beyond the V = 0 case the residual is L_xi g, the Killing obstruction");

  out.push_back(lemma_quantities(spec, curv, params));
  out.push_back(lambda_consistency(spec, curv, convention));

  const CoVector eta = eta_from_xi(spec);
  const CoVector no_df(spec.dimension);
  out.push_back(make_record("grys-df=0", "Hess f + alpha S + (lambda - beta r/2) g = 0 with df = 0",
                            RecordKind::Check, matrix_residuals(grys_residual(spec, conn, curv, no_df, at_lambda)),
                            nonzero));
  out.back().notes.push_back(lambda_note);

  {
    std::vector<Residual> closed;
    for (const auto& d : exactness_defect(spec, eta)) {
      closed.push_back({"(" + std::to_string(d.index[0]) + "," + std::to_string(d.index[1]) + ")", d.value});
    }
    out.push_back(make_record("eta-closed", "eta([X,Y]) = 0, so df = eta is locally exact", RecordKind::Check,
                              std::move(closed), nonzero));
  }
  out.push_back(make_record("grys-df=eta", "Hess f + alpha S + (lambda - beta r/2) g = 0 with df = eta",
                            RecordKind::Check, matrix_residuals(grys_residual(spec, conn, curv, eta, at_lambda)),
                            nonzero));
  out.back().notes.push_back(lambda_note);
  {
    Record hess;
    hess.id = "hessian-eta";
    hess.title = "Hess f for df = eta";
    hess.kind = RecordKind::Info;
    hess.status = Status::Info;
    for (const auto& e : nonzero_entries(hessian(spec, conn, eta))) {
      hess.values.push_back({index_label({e.index[0] - 1, e.index[1] - 1}), e.value});
    }
    out.push_back(std::move(hess));
  }

  out.push_back(make_record("codazzi", "(nabla_Z S)(X,Y) = (nabla_Y S)(Z,X)", RecordKind::Check,
                            defect_residuals(codazzi_defect(curv.nabla_ricci)), nonzero));
  out.push_back(make_record("eta-parallel", "g((nabla_K Q) X, Y) = 0 for all K, X, Y", RecordKind::Check,
                            defect_residuals(eta_parallel_defect(curv.nabla_ricci)), nonzero));
  out.back().notes.push_back("labels are (K,X,Y)");
  out.back().notes.push_back(kEtaParallelNote);
  return out;
}

}  // namespace sforge
