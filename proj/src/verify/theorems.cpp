#include "soliton_forge/verify/theorems.hpp"

#include "soliton_forge/verify/params.hpp"

#include <stdexcept>

namespace sforge {

namespace {

ScalarExpr sym(const char* name) { return ScalarExpr::symbol(name); }

ScalarExpr at(const ScalarExpr& e, const char* name, const ScalarExpr& value) {
  return e.substitute({{Sym(name), value}});
}

// Premises are affine in the unknown by construction.
ScalarExpr solve_for(const ScalarExpr& equation, const char* name) {
  if (auto x = solve_linear({equation}, Sym(name))) return *x;
  throw std::logic_error(std::string("premise is not affine in ") + name);
}

struct Symbols {
  ScalarExpr alpha = sym(param::alpha);
  ScalarExpr beta = sym(param::beta);
  ScalarExpr lambda = sym(param::lambda);
  ScalarExpr r = sym(param::r);
  ScalarExpr mu = sym(param::mu);
  ScalarExpr tau = sym(param::tau);
  ScalarExpr rho = sym(param::rho);
  ScalarExpr p = sym(param::p);
  // directional derivatives K(r) and X(f), treated as opaque scalars
  ScalarExpr kr = sym("Kr");
  ScalarExpr xf = sym("Xf");

  /// Einstein constant of the soliton: S = c g.
  ScalarExpr c() const { return (beta * r - 2 * lambda) / (2 * alpha); }
  ScalarExpr alpha_rule(long n) const { return ScalarExpr(n) * beta / 2; }
};

const std::set<Sym>& nonzero() {
  static const std::set<Sym> symbols{Sym(param::alpha), Sym(param::beta), Sym(param::tau), Sym("Kr"), Sym("Xf")};
  return symbols;
}

Record identity(std::string id, std::string title, std::vector<Residual> residuals) {
  return make_record(std::move(id), std::move(title), RecordKind::Identity, std::move(residuals), nonzero());
}

Record cross(std::string id, std::string title, const ScalarExpr& derived, const ScalarExpr& printed) {
  Record rec = make_record(std::move(id), std::move(title), RecordKind::CrossCheck,
                           {{"derived - printed", derived - printed}}, nonzero());
  rec.values = {{"derived", derived}, {"printed", printed}};
  return rec;
}

}  // namespace

std::vector<Record> theorem_identity_checks(long n) {
  if (n < 2) throw std::invalid_argument("dimension must be at least 2");
  const Symbols s;
  const ScalarExpr dim = n;
  const ScalarExpr four = 4;
  const ScalarExpr eta_xi = -1;  // eta(xi) = g(xi, xi) = -1
  std::vector<Record> out;

  // General dimension.
  {
    // trace(nabla_K Q) = n beta/(2 alpha) K(r) must equal K(trace Q) = K(r)
    const ScalarExpr traced = dim * s.beta / (2 * s.alpha) * s.kr;
    out.push_back(identity("thm-3.1", "non-constant r forces alpha = n beta/2",
                           {{"trace(nabla_K Q) - K(r) at alpha = n beta/2",
                             at(traced - s.kr, param::alpha, s.alpha_rule(n))}}));
  }
  out.push_back(identity("3.3", "S(xi,xi) = (2 lambda - beta r)/(2 alpha)",
                         {{"from S(X,xi) with eta(xi) = -1", s.c() * eta_xi - (2 * s.lambda - s.beta * s.r) / (2 * s.alpha)},
                          {"from S = c g with g(xi,xi) = -1", s.c() * eta_xi - (2 * s.lambda - s.beta * s.r) / (2 * s.alpha)}}));
  {
    ScalarExpr trace_q;
    for (long i = 0; i < n; ++i) trace_q += s.c();
    out.push_back(identity("3.6", "soliton scalar curvature n (beta r - 2 lambda)/(2 alpha)",
                           {{"trace Q - n c", trace_q - dim * (s.beta * s.r - 2 * s.lambda) / (2 * s.alpha)}}));
  }
  {
    // 2 alpha (n-1) = beta r - 2 lambda
    const ScalarExpr lambda_from_xi = solve_for(2 * s.alpha * (dim - 1) - (s.beta * s.r - 2 * s.lambda), param::lambda);
    out.push_back(identity("3.17", "lambda = beta r/2 - (n-1) alpha",
                           {{"solved - stated", lambda_from_xi - (s.beta * s.r / 2 - (dim - 1) * s.alpha)}}));
    out.push_back(identity("3.18", "alpha = n beta/2 turns lambda into beta (r - n(n-1))/2",
                           {{"substituted - stated", at(lambda_from_xi, param::alpha, s.alpha_rule(n)) -
                                                         s.beta * (s.r - dim * (dim - 1)) / 2}}));
  }
  {
    // c (xi f) = 0 with xi f != 0
    const ScalarExpr lambda = solve_for(s.c() * s.xf, param::lambda);
    out.push_back(identity("10.12a", "gradient soliton with constant r: lambda = beta r/2",
                           {{"solved - stated", lambda - s.beta * s.r / 2}}));
  }
  {
    // n beta X(r) = c X(f) together with X(r) = -(2/beta) X(f), at alpha = n beta/2
    const ScalarExpr xr = -2 * s.xf / s.beta;
    const ScalarExpr equation = at(dim * s.beta * xr - s.c() * s.xf, param::alpha, s.alpha_rule(n));
    out.push_back(identity("10.17", "gradient soliton with non-constant r: lambda = beta (r + 2n^2)/2",
                           {{"solved - stated", solve_for(equation, param::lambda) - s.beta * (s.r + 2 * dim * dim) / 2}}));
  }

  // Four-dimensional spacetime, alpha = 2 beta.
  const ScalarExpr c4 = at(s.c(), param::alpha, s.alpha_rule(4));
  const ScalarExpr einstein_like = (4 * s.mu - s.r + 2 * s.lambda / s.beta) / (4 * s.tau);
  {
    const ScalarExpr printed_t = (s.mu - s.c()) / s.tau;
    out.push_back(identity("4.5", "n = 4: T = (4 mu - r + 2 lambda/beta)/(4 tau) g from (mu - c)/tau at alpha = 2 beta",
                           {{"substituted - stated", at(printed_t, param::alpha, s.alpha_rule(4)) - einstein_like}}));
  }
  {
    // Einstein-like coefficient times g(xi,xi) = (rho - p) eta(xi)^2 + p g(xi,xi)
    const ScalarExpr equation = einstein_like * eta_xi - ((s.rho - s.p) * eta_xi * eta_xi + s.p * eta_xi);
    const ScalarExpr stated = s.beta / 2 * (4 * s.tau * (2 * s.p - s.rho) + s.r - 4 * s.mu);
    out.push_back(identity("4.9", "n = 4: lambda = beta/2 (4 tau (2p - rho) + r - 4 mu)",
                           {{"solved - stated", solve_for(equation, param::lambda) - stated}}));
  }
  {
    const ScalarExpr mu_steady = at(c4, param::lambda, ScalarExpr());
    out.push_back(identity("thm-4.3", "n = 4, steady soliton: r = 4 mu",
                           {{"solved r - 4 mu", solve_for(s.mu - mu_steady, param::r) - four * s.mu}}));
  }
  {
    const ScalarExpr r_printed = (s.alpha * s.tau * (3 * s.p - s.rho) + 2 * s.lambda) / (2 * (s.beta - s.alpha));
    const ScalarExpr stated = (s.beta * s.alpha * s.tau * (3 * s.p - s.rho) - 2 * s.lambda * (s.beta - 2 * s.alpha)) /
                              (4 * s.alpha * (s.beta - s.alpha));
    out.push_back(identity("5.4", "n = 4: the printed r of the perfect fluid turns S = c g into the stated Ricci tensor",
                           {{"substituted - stated", at(s.c(), param::r, r_printed) - stated}}));
  }
  {
    const ScalarExpr q_perfect = (s.tau * (s.rho - 3 * s.p) - 3 * s.lambda / s.beta).pow(2) / 16;
    out.push_back(identity("thm-5.2", "n = 4, radiation fluid rho = 3p: |Q|^2 = (3 lambda/(4 beta))^2",
                           {{"substituted - stated", at(q_perfect, param::rho, 3 * s.p) - (3 * s.lambda / (4 * s.beta)).pow(2)}}));
  }
  {
    const ScalarExpr c_dust = at(s.c(), param::r, s.tau * s.rho);
    out.push_back(identity("6.4", "n = 4, dust: r = tau rho gives S = (beta tau rho - 2 lambda)/(2 alpha) g",
                           {{"substituted - stated", c_dust - (s.beta * s.tau * s.rho - 2 * s.lambda) / (2 * s.alpha)}}));
    out.push_back(identity("6.6a", "n = 4, dust: |Q|^2 = (1/16)(tau rho - 2 lambda/beta)^2 at alpha = 2 beta",
                           {{"substituted - stated", at(c_dust.pow(2), param::alpha, s.alpha_rule(4)) -
                                                         (s.tau * s.rho - 2 * s.lambda / s.beta).pow(2) / 16}}));
  }
  {
    const ScalarExpr r_trace = (-s.alpha * s.rho * s.tau + 4 * s.lambda) / (2 * (s.beta - s.alpha));
    const ScalarExpr r_contracted = 2 * (s.alpha * s.rho * s.tau + s.lambda) / (s.beta - s.alpha);
    const ScalarExpr numerator = ScalarExpr::fraction((r_trace - r_contracted).num().primitive(), Poly(1));
    out.push_back(identity("6.10", "n = 4, dust: the two printed values of r agree only if alpha tau rho = 0",
                           {{"primitive numerator - alpha tau rho", numerator - s.alpha * s.tau * s.rho}}));

    const auto cond = common_condition({s.alpha * s.tau * s.rho}, {Sym(param::alpha), Sym(param::tau)});
    std::vector<Residual> vacuum;
    if (cond && cond->variable == param::rho && cond->roots == std::vector<Rational>{0}) {
      // T = rho A (x) A at the only root
      vacuum.push_back({"rho at the root", at(s.rho, param::rho, cond->roots.front())});
    } else {
      vacuum.push_back({"condition is not rho = 0", 1});
    }
    Record rec = identity("thm-6.2", "n = 4, dust without cosmological term: alpha, tau != 0 force rho = 0, so T = 0",
                          std::move(vacuum));
    rec.notes.push_back("branch alpha = 0 is excluded by assumption");
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<Record> derivation_cross_checks(long n) {
  if (n < 2) throw std::invalid_argument("dimension must be at least 2");
  const Symbols s;
  const ScalarExpr dim = n;
  const ScalarExpr eta_xi = -1;
  std::vector<Record> out;

  {
    // L_Df g = 2 Hess f in the soliton equation: Hess f = -alpha S - (lambda - beta r/2) g
    const ScalarExpr derived = -(s.lambda - s.beta * s.r / 2);
    const ScalarExpr printed = s.lambda - s.beta * s.r / 2;
    Record rec = cross("x-grys", "coefficient of g in Hess f + alpha S = k g", derived, printed);
    rec.notes.push_back("the printed gradient equation has the opposite sign of the lambda term");
    out.push_back(std::move(rec));
  }
  {
    // S - (r/2) g + mu g = tau T with S = c g
    const ScalarExpr derived = (s.c() - s.r / 2 + s.mu) / s.tau;
    out.push_back(cross("x-4.4", "perfect-fluid T / g from the field equation with S = c g", derived,
                        (s.mu - s.c()) / s.tau));
    out.push_back(cross("x-4.5", "n = 4: T / g at alpha = 2 beta", at(derived, param::alpha, s.alpha_rule(4)),
                        (4 * s.mu - s.r + 2 * s.lambda / s.beta) / (4 * s.tau)));
  }
  {
    // (c - r/2 - tau p) g = tau (rho - p) A (x) A
    const ScalarExpr k = s.c() - s.r / 2 - s.tau * s.p;
    out.push_back(cross("x-5.2", "coefficient of A (x) A in the perfect-fluid equation", s.tau * (s.rho - s.p),
                        s.tau * (s.rho + s.p)));
    const ScalarExpr derived = solve_for(4 * k - s.tau * (s.rho - s.p) * eta_xi, param::r);
    const ScalarExpr printed = (s.alpha * s.tau * (-s.rho + 3 * s.p) + 2 * s.lambda) / (2 * (s.beta - s.alpha));
    out.push_back(cross("x-5.3", "n = 4: r from the trace of the perfect-fluid equation", derived, printed));
  }
  {
    const ScalarExpr k_perfect = (s.beta * s.alpha * s.tau * (3 * s.p - s.rho) - 2 * s.lambda * (s.beta - 2 * s.alpha)) /
                           (4 * s.alpha * (s.beta - s.alpha));
    const ScalarExpr first = ((s.beta * s.alpha * s.tau * (3 * s.p - s.rho) - 2 * s.lambda * (s.beta - 2 * s.alpha)) /
                              (2 * s.alpha * (s.beta - s.alpha)))
                                 .pow(2);
    out.push_back(cross("x-5.8a", "n = 4: |Q|^2 = 4 k^2 for S = k g", 4 * k_perfect.pow(2), first));
    out.push_back(cross("x-5.8b", "n = 4: |Q|^2 at alpha = 2 beta", at(first, param::alpha, s.alpha_rule(4)),
                        (s.tau * (s.rho - 3 * s.p) - 3 * s.lambda / s.beta).pow(2) / 16));
  }
  {
    // trace of S - (r/2) g = tau rho A (x) A with trace S = r
    const ScalarExpr derived = solve_for(s.r - 4 * s.r / 2 - s.tau * s.rho * eta_xi, param::r);
    out.push_back(cross("x-6.3", "n = 4: r from the trace of the dust equation", derived, s.tau * s.rho));
  }
  {
    const ScalarExpr c_dust = (s.beta * s.tau * s.rho - 2 * s.lambda) / (2 * s.alpha);
    Record rec = cross("x-6.6", "|Q|^2 for S = c g is n c^2", dim * c_dust.pow(2), c_dust.pow(2));
    rec.notes.push_back("the printed norm omits the factor n");
    out.push_back(std::move(rec));
  }
  {
    // (c - r/2) g = tau rho A (x) A, once traced and once contracted with A
    const ScalarExpr k = s.c() - s.r / 2;
    out.push_back(cross("x-6.8", "n = 4, dust: r from the full trace", solve_for(4 * k - s.tau * s.rho * eta_xi, param::r),
                        (-s.alpha * s.rho * s.tau + 4 * s.lambda) / (2 * (s.beta - s.alpha))));
    out.push_back(cross("x-6.9", "n = 4, dust: r from the contraction with A",
                        solve_for(k - s.tau * s.rho * eta_xi, param::r),
                        2 * (s.alpha * s.rho * s.tau + s.lambda) / (s.beta - s.alpha)));
  }
  return out;
}

const std::set<Sym>& theorem_nonzero_symbols() { return nonzero(); }

std::vector<std::string> theorem_symbols() {
  std::vector<std::string> out = param::all();
  out.push_back("Kr");
  out.push_back("Xf");
  return out;
}

}  // namespace sforge
