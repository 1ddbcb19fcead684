#include "rasec/beamforming.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include <cmath>
#include <complex>

namespace rasec {

namespace {

constexpr int kMaxPowerIterations = 10000;
constexpr double kVectorChangeTol = 1e-12;

// Rotate so the largest-magnitude component is real positive.
void canonicalize_phase(Eigen::VectorXcd& v) {
  Eigen::Index imax = 0;
  v.cwiseAbs().maxCoeff(&imax);
  const std::complex<double> pivot = v[imax];
  if (std::abs(pivot) > 0.0) {
    v *= std::conj(pivot) / std::abs(pivot);
  }
}

}  // namespace

Beamformer optimal_beamformer(const QuadraticForms& forms, double power_budget) {
  if (power_budget <= 0.0) {
    throw std::invalid_argument("optimal_beamformer: power budget must be positive");
  }
  const Eigen::Index K = forms.signal.rows();
  const Eigen::MatrixXcd identity_over_p =
      Eigen::MatrixXcd::Identity(K, K) / power_budget;
  const Eigen::MatrixXcd numerator = forms.signal + identity_over_p;    // A + I/P
  const Eigen::MatrixXcd denominator = forms.leakage + identity_over_p; // B + I/P

  // B + I/P is Hermitian positive definite, so reduce the pencil to an
  // ordinary Hermitian problem S = L^{-1} (A + I/P) L^{-H}.
  Eigen::LLT<Eigen::MatrixXcd> llt(denominator);
  if (llt.info() != Eigen::Success) {
    throw EigensolveError("optimal_beamformer: Cholesky factorization failed");
  }
  const auto L = llt.matrixL();
  Eigen::MatrixXcd S = L.solve(Eigen::MatrixXcd(L.solve(numerator)).adjoint());
  S = 0.5 * (S + S.adjoint().eval());

  // Power iteration. The top eigenvalue is >= 1 and the rest of the spectrum
  // sits at or below 1, so convergence is fast for any nonzero start.
  Eigen::VectorXcd u(K);
  {
    // any column of A with nonzero norm is proportional to h0
    Eigen::Index jmax = 0;
    const double cmax = forms.signal.colwise().norm().maxCoeff(&jmax);
    if (cmax > 0.0) {
      u = L.solve(Eigen::VectorXcd(forms.signal.col(jmax)));
    } else {
      u = Eigen::VectorXcd::Ones(K);
    }
  }
  u.normalize();

  bool converged = false;
  for (int iter = 0; iter < kMaxPowerIterations; ++iter) {
    Eigen::VectorXcd next = S * u;
    const double norm = next.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) {
      throw EigensolveError("optimal_beamformer: power iteration degenerated");
    }
    next /= norm;
    // align phases before measuring the change
    const std::complex<double> overlap = u.dot(next);
    if (std::abs(overlap) > 0.0) {
      next *= std::conj(overlap) / std::abs(overlap);
    }
    const double change = (next - u).norm();
    u = next;
    if (change <= kVectorChangeTol) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw EigensolveError("optimal_beamformer: power iteration did not converge");
  }

  // back-transform and scale to the power budget
  Eigen::VectorXcd v = L.adjoint().solve(u);
  v.normalize();
  v *= std::sqrt(power_budget);
  canonicalize_phase(v);
  return {std::move(v), power_budget};
}

double rayleigh_quotient(const QuadraticForms& forms, const Eigen::VectorXcd& v) {
  const double num = 1.0 + std::real(v.dot(forms.signal * v));
  const double den = 1.0 + std::real(v.dot(forms.leakage * v));
  return num / den;
}

}  // namespace rasec
