#include "soliton_forge/verify/axioms.hpp"

namespace sforge {

namespace {

ScalarExpr delta(std::size_t i, std::size_t j) { return i == j ? ScalarExpr(1) : ScalarExpr(); }

class Battery {
 public:
  Battery(const FrameSpec& spec, const Connection& conn, const CurvatureBundle& curv)
      : spec_(spec), conn_(conn), curv_(curv), n_(spec.dimension), eta_(eta_from_xi(spec)) {
    // g(f_i, phi f_j) and g(phi f_i, phi f_j)
    g_phi_ = spec.metric * spec.phi;
    phi_g_phi_ = Matrix(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        ScalarExpr sum;
        for (std::size_t k = 0; k < n_; ++k) sum += spec.phi(k, i) * g_phi_(k, j);
        phi_g_phi_(i, j) = sum;
      }
    }
  }

  std::vector<Record> run() {
    structure_records();
    connection_records();
    curvature_records();
    ricci_records();
    return std::move(out_);
  }

 private:
  void add(const char* id, const char* title, std::vector<Residual> residuals,
           RecordKind kind = RecordKind::Check) {
    out_.push_back(make_record(id, title, kind, std::move(residuals), spec_.assume_nonzero));
  }

  void structure_records() {
    const Matrix& phi = spec_.phi;
    const VectorField& xi = spec_.xi;

    std::vector<Residual> phi_xi;
    for (std::size_t i = 0; i < n_; ++i) {
      ScalarExpr sum;
      for (std::size_t j = 0; j < n_; ++j) sum += phi(i, j) * xi[j];
      phi_xi.push_back({index_label({i}), sum});
    }
    add("2.1a", "phi xi = 0", std::move(phi_xi));

    std::vector<Residual> eta_phi;
    for (std::size_t j = 0; j < n_; ++j) {
      ScalarExpr sum;
      for (std::size_t i = 0; i < n_; ++i) sum += eta_[i] * phi(i, j);
      eta_phi.push_back({index_label({j}), sum});
    }
    add("2.1b", "eta(phi X) = 0", std::move(eta_phi));

    add("2.1c", "eta(xi) = -1", {{"eta(xi) + 1", apply(eta_, xi) + 1}});

    const Matrix phi2 = phi * phi;
    std::vector<Residual> square;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        square.push_back({index_label({j, i}), phi2(i, j) - delta(i, j) - xi[i] * eta_[j]});
      }
    }
    add("2.1d", "phi^2 X = X + eta(X) xi", std::move(square));

    std::vector<Residual> metric_rc;
    std::vector<Residual> metric_lp;
    std::vector<Residual> skew;
    std::vector<Residual> sym;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        const std::string label = index_label({i, j});
        const ScalarExpr ee = eta_[i] * eta_[j];
        metric_rc.push_back({label, phi_g_phi_(i, j) - spec_.metric(i, j) + ee});
        metric_lp.push_back({label, phi_g_phi_(i, j) - spec_.metric(i, j) - ee});
        skew.push_back({label, g_phi_(i, j) + g_phi_(j, i)});
        sym.push_back({label, g_phi_(i, j) - g_phi_(j, i)});
      }
    }
    add("2.2", "g(phi X, phi Y) = g(X,Y) - eta(X) eta(Y)", std::move(metric_rc));
    add("2.3", "g(X, phi Y) = -g(phi X, Y)", std::move(skew));
    add("2.2-lp", "g(phi X, phi Y) = g(X,Y) + eta(X) eta(Y)", std::move(metric_lp), RecordKind::CrossCheck);
    add("2.3-lp", "g(X, phi Y) = g(phi X, Y)", std::move(sym), RecordKind::CrossCheck);
  }

  void connection_records() {
    std::vector<Residual> nabla_xi;
    for (std::size_t i = 0; i < n_; ++i) {
      const VectorField d = covariant_derivative(conn_, VectorField::basis(n_, i), spec_.xi);
      for (std::size_t k = 0; k < n_; ++k) nabla_xi.push_back({index_label({i, k}), d[k] - spec_.phi(k, i)});
    }
    add("2.4", "nabla_X xi = phi X", std::move(nabla_xi));

    add("2.5", "(L_xi g)(X,Y) = 0", matrix_residuals(lie_derivative_metric(spec_, spec_.xi)));
    out_.back().notes.push_back("a non-zero residual means xi is not a Killing field");

    Record rank;
    rank.id = "2.6";
    rank.title = "rank phi = n - 1";
    rank.kind = RecordKind::Check;
    rank.rank_subject = spec_.phi;
    rank.expected_rank = n_ - 1;
    rank.notes.push_back("decided only when every entry of phi is a rational constant");
    rank.assume_nonzero = spec_.assume_nonzero;
    classify(rank);
    out_.push_back(std::move(rank));

    const Matrix nabla_eta = covariant_derivative_eta(spec_, conn_);
    std::vector<Residual> eta_rows;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) eta_rows.push_back({index_label({i, j}), nabla_eta(i, j) - g_phi_(j, i)});
    }
    add("2.8", "(nabla_X eta)(Y) = g(Y, phi X)", std::move(eta_rows));
  }

  void curvature_records() {
    const Rank4& r = curv_.riemann;
    const Matrix& g = spec_.metric;
    const VectorField& xi = spec_.xi;

    std::vector<Residual> eta_r;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        for (std::size_t k = 0; k < n_; ++k) {
          ScalarExpr lhs;
          for (std::size_t l = 0; l < n_; ++l) lhs += r(i, j, k, l) * eta_[l];
          eta_r.push_back({index_label({i, j, k}), lhs - (g(j, k) * eta_[i] - g(i, k) * eta_[j])});
        }
      }
    }
    add("2.9", "eta(R(X,Y)Z) = g(Y,Z) eta(X) - g(X,Z) eta(Y)", std::move(eta_r));

    // R(xi, f_j) f_k
    std::vector<Residual> r_xi_x;
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t k = 0; k < n_; ++k) {
        for (std::size_t l = 0; l < n_; ++l) {
          ScalarExpr lhs;
          for (std::size_t i = 0; i < n_; ++i) lhs += xi[i] * r(i, j, k, l);
          r_xi_x.push_back({index_label({j, k, l}), lhs - (g(j, k) * xi[l] - eta_[k] * delta(l, j))});
        }
      }
    }
    add("2.10", "R(xi,X)Y = g(X,Y) xi - eta(Y) X", std::move(r_xi_x));

    // R(f_i, f_j) xi
    std::vector<Residual> r_x_y_xi;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        for (std::size_t l = 0; l < n_; ++l) {
          ScalarExpr lhs;
          for (std::size_t k = 0; k < n_; ++k) lhs += xi[k] * r(i, j, k, l);
          r_x_y_xi.push_back({index_label({i, j, l}), lhs - (eta_[j] * delta(l, i) - eta_[i] * delta(l, j))});
        }
      }
    }
    add("2.11", "R(X,Y)xi = eta(Y) X - eta(X) Y", std::move(r_x_y_xi));

    // R(xi, f_j) xi
    std::vector<Residual> r_xi_x_xi;
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t l = 0; l < n_; ++l) {
        ScalarExpr lhs;
        for (std::size_t i = 0; i < n_; ++i) {
          if (xi[i].is_zero()) continue;
          for (std::size_t k = 0; k < n_; ++k) lhs += xi[i] * xi[k] * r(i, j, k, l);
        }
        r_xi_x_xi.push_back({index_label({j, l}), lhs - (delta(l, j) + eta_[j] * xi[l])});
      }
    }
    add("2.12", "R(xi,X)xi = X + eta(X) xi", std::move(r_xi_x_xi));
  }

  void ricci_records() {
    const Matrix& s = curv_.ricci;
    const ScalarExpr n_minus_1 = static_cast<long>(n_) - 1;

    std::vector<Residual> s_xi;
    for (std::size_t i = 0; i < n_; ++i) {
      ScalarExpr lhs;
      for (std::size_t j = 0; j < n_; ++j) lhs += s(i, j) * spec_.xi[j];
      s_xi.push_back({index_label({i}), lhs - n_minus_1 * eta_[i]});
    }
    add("2.13", "S(X,xi) = (n-1) eta(X)", std::move(s_xi));

    std::vector<Residual> s_phi;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        ScalarExpr lhs;
        for (std::size_t k = 0; k < n_; ++k) {
          if (spec_.phi(k, i).is_zero()) continue;
          for (std::size_t l = 0; l < n_; ++l) lhs += spec_.phi(k, i) * s(k, l) * spec_.phi(l, j);
        }
        s_phi.push_back({index_label({i, j}), lhs - s(i, j) - n_minus_1 * eta_[i] * eta_[j]});
      }
    }
    add("2.14", "S(phi X, phi Y) = S(X,Y) + (n-1) eta(X) eta(Y)", std::move(s_phi));
  }

  const FrameSpec& spec_;
  const Connection& conn_;
  const CurvatureBundle& curv_;
  std::size_t n_;
  CoVector eta_;
  Matrix g_phi_;
  Matrix phi_g_phi_;
  std::vector<Record> out_;
};

}  // namespace

std::vector<Record> lps_axiom_battery(const FrameSpec& spec, const Connection& conn, const CurvatureBundle& curv) {
  return Battery(spec, conn, curv).run();
}

}  // namespace sforge
