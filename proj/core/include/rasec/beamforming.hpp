// Closed-form optimal transmit beamformer for fixed pointing directions:
// the top generalized eigenvector of (B + I/P)^{-1} (A + I/P) scaled to the
// power budget.
#pragma once

#include <Eigen/Core>

#include <stdexcept>

#include "rasec/rates.hpp"

namespace rasec {

struct Beamformer {
  Eigen::VectorXcd weights;
  double power_budget = 0.0;  // W; optimizer output satisfies |weights|^2 = budget
};

struct EigensolveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Maximizes (1 + v^H A v) / (1 + v^H B v) over |v|^2 <= power_budget.
// The largest-magnitude component of the result is rotated to be real
// positive. Throws EigensolveError if the power iteration fails to converge.
Beamformer optimal_beamformer(const QuadraticForms& forms, double power_budget);

// (1 + v^H A v) / (1 + v^H B v)
double rayleigh_quotient(const QuadraticForms& forms, const Eigen::VectorXcd& v);

}  // namespace rasec
