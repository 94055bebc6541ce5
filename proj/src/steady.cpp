#include "growdom/steady.hpp"

#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "growdom/eigenpair.hpp"
#include "growdom/error.hpp"
#include "growdom/linalg.hpp"

namespace growdom {

namespace {

double final_diffusivity(const ModelParams& p) {
  const double m = p.growth().final_size();
  return p.d() / (m * m);
}

std::vector<double> residual_vector(std::span<const double> v, const ModelParams& p) {
  std::vector<double> f(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    f[i] = p.r() * v[i] * (1.0 - v[i] / p.K()) - p.h() * v[i];
  }
  add_scaled_laplacian(v, p.grid(), final_diffusivity(p), f);
  return f;
}

double max_abs(std::span<const double> x) {
  double m = 0.0;
  for (double e : x) m = std::max(m, std::abs(e));
  return m;
}

std::string history_text(const std::vector<double>& history) {
  std::ostringstream os;
  os.precision(3);
  for (std::size_t i = 0; i < history.size(); ++i) os << (i ? ", " : "") << history[i];
  return os.str();
}

}  // namespace

double residual(const Field& v, const ModelParams& p) {
  return max_abs(residual_vector(v.values(), p));
}

SteadyResult solve_steady(const ModelParams& p, const SteadyOptions& options) {
  if (!(options.tol > 0.0)) throw DomainError("steady: tolerance must be positive");
  const Grid& grid = p.grid();
  const EigenPair eig = principal_eigen_analytic(grid);
  const double c = final_diffusivity(p);
  const double threshold = c * eig.lambda1 + p.h();

  SteadyResult result{Field(grid), 0.0, 0, SteadyRegime::Trivial, {}};
  if (p.r() <= threshold) {
    result.residual_history.push_back(0.0);
    return result;
  }

  const double amplitude = p.K() * (1.0 - threshold / p.r());
  std::vector<double> v(eig.phi.values().begin(), eig.phi.values().end());
  for (double& x : v) x *= amplitude;

  const linalg::SparseMatrix diffusion = c * linalg::laplacian_matrix(grid);
  const auto n = static_cast<Eigen::Index>(v.size());
  std::vector<double> f = residual_vector(v, p);
  double norm = max_abs(f);
  std::vector<double>& history = result.residual_history;
  history.push_back(norm);

  Eigen::SparseLU<linalg::SparseMatrix> lu;
  std::size_t iter = 0;
  while (norm >= options.tol) {
    if (iter == options.max_iter) {
      throw NumericalError("steady: Newton did not converge in " +
                           std::to_string(options.max_iter) +
                           " iterations; residual history [" + history_text(history) + "]");
    }
    ++iter;
    // J = c Lap + diag(r - h - 2 r v / K)
    linalg::SparseMatrix jac = diffusion;
    for (Eigen::Index i = 0; i < n; ++i) {
      jac.coeffRef(i, i) += p.r() - p.h() - 2.0 * p.r() * v[static_cast<std::size_t>(i)] / p.K();
    }
    lu.compute(jac);
    if (lu.info() != Eigen::Success) {
      throw NumericalError("steady: singular Jacobian at Newton iteration " +
                           std::to_string(iter));
    }
    Eigen::Map<const Eigen::VectorXd> rhs(f.data(), n);
    const Eigen::VectorXd delta = lu.solve(rhs);

    double lambda = 1.0;
    std::vector<double> trial(v.size());
    std::size_t halvings = 0;
    for (;;) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        trial[i] = v[i] - lambda * delta[static_cast<Eigen::Index>(i)];
      }
      std::vector<double> ft = residual_vector(trial, p);
      const double trial_norm = max_abs(ft);
      if (trial_norm < norm) {
        v.swap(trial);
        f.swap(ft);
        norm = trial_norm;
        break;
      }
      if (++halvings > options.max_halvings) {
        throw NumericalError("steady: Newton stagnated after " +
                             std::to_string(options.max_halvings) +
                             " step halvings; residual history [" +
                             history_text(history) + "]");
      }
      lambda *= 0.5;
    }
    history.push_back(norm);
  }

  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!(v[i] > 0.0)) {
      throw NumericalError("steady: Newton converged to a field that is not positive at node " +
                           std::to_string(i) + " (value " + std::to_string(v[i]) + ")");
    }
  }
  result.field = Field(grid, std::move(v));
  result.residual = norm;
  result.newton_iters = iter;
  result.regime = SteadyRegime::Positive;
  return result;
}

}  // namespace growdom
