#include "gtsp/harmonic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gtsp/error.hpp"
#include "gtsp/types.hpp"

namespace gtsp {

FrequencyGrid FrequencyGrid::prefix(std::size_t m) const {
  FrequencyGrid g = *this;
  g.freqs.resize(std::min(m, freqs.size()));
  return g;
}

BandCoefficients BandCoefficients::zeros(std::size_t m) {
  return BandCoefficients{std::vector<double>(m, 0.0), std::vector<double>(m, 0.0)};
}

BandCoefficients operator+(const BandCoefficients& a, const BandCoefficients& b) {
  if (a.m() != b.m()) throw Error(ErrorCode::LengthMismatch, "band coefficient sets differ in m");
  BandCoefficients out = a;
  for (std::size_t k = 0; k < a.m(); ++k) {
    out.cos_coeffs[k] += b.cos_coeffs[k];
    out.sin_coeffs[k] += b.sin_coeffs[k];
  }
  return out;
}

FrequencyGrid frequency_grid(double f0, std::size_t n, std::size_t m) {
  if (!(f0 > 0.0) || !std::isfinite(f0)) throw Error(ErrorCode::NonPositiveF0, std::to_string(f0));
  const std::size_t p = grid_power(n);
  if (m < 1 || m > p + 1) {
    throw Error(ErrorCode::TooManyFrequencies,
                "m = " + std::to_string(m) + " with p = " + std::to_string(p));
  }
  FrequencyGrid g;
  g.f0 = f0;
  g.p = p;
  const double denom = static_cast<double>(p + 2);
  g.df = f0 / denom;
  g.freqs.resize(m);
  // f0 - (k-1) f0/(p+2) == f0 (p+3-k)/(p+2); the integer form keeps every
  // grid point the correctly rounded rational when f0 = 1.
  for (std::size_t k = 0; k < m; ++k) {
    g.freqs[k] = f0 * static_cast<double>(p + 2 - k) / denom;
  }
  return g;
}

void design_row(double t, const FrequencyGrid& grid, std::span<double> out) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t k = 0; k < grid.m(); ++k) {
    const double phase = two_pi * grid.freqs[k] * t;
    out[2 * k] = t * std::cos(phase);
    out[2 * k + 1] = t * std::sin(phase);
  }
}

std::vector<double> design_row(double t, const FrequencyGrid& grid) {
  std::vector<double> row(2 * grid.m());
  design_row(t, grid, row);
  return row;
}

Eigen::MatrixXd design_matrix(std::span<const double> times, const FrequencyGrid& grid) {
  const auto n = static_cast<Eigen::Index>(times.size());
  const auto cols = static_cast<Eigen::Index>(2 * grid.m());
  Eigen::MatrixXd a(n, cols);
  std::vector<double> row(static_cast<std::size_t>(cols));
  for (Eigen::Index i = 0; i < n; ++i) {
    design_row(times[static_cast<std::size_t>(i)], grid, row);
    for (Eigen::Index j = 0; j < cols; ++j) a(i, j) = row[static_cast<std::size_t>(j)];
  }
  return a;
}

double evaluate_band(const BandCoefficients& coeffs, const FrequencyGrid& grid, double t) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const std::size_t m = std::min(coeffs.m(), grid.m());
  double sum = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    const double phase = two_pi * grid.freqs[k] * t;
    sum += coeffs.cos_coeffs[k] * t * std::cos(phase) + coeffs.sin_coeffs[k] * t * std::sin(phase);
  }
  return sum;
}

namespace {

void check_shapes(std::size_t n, std::size_t weights, const FrequencyGrid& grid) {
  if (weights != n) throw Error(ErrorCode::LengthMismatch, "weights vs. times");
  if (n <= 2 * grid.m()) {
    throw Error(ErrorCode::UnderdeterminedSystem,
                std::to_string(n) + " observations for " + std::to_string(2 * grid.m()) +
                    " unknowns");
  }
}

Eigen::VectorXd sqrt_weights(std::span<const double> weights) {
  Eigen::VectorXd s(static_cast<Eigen::Index>(weights.size()));
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!(weights[i] > 0.0)) throw Error(ErrorCode::InvalidArgument, "weights must be positive");
    s(static_cast<Eigen::Index>(i)) = std::sqrt(weights[i]);
  }
  return s;
}

}  // namespace

WeightedHarmonicSolver::WeightedHarmonicSolver(std::span<const double> times,
                                               std::span<const double> weights,
                                               const FrequencyGrid& grid, double rank_tolerance)
    : grid_(grid) {
  check_shapes(times.size(), weights.size(), grid);
  sqrt_w_ = sqrt_weights(weights);
  weighted_ = sqrt_w_.asDiagonal() * design_matrix(times, grid);
  factorize(rank_tolerance);
}

WeightedHarmonicSolver::WeightedHarmonicSolver(const Eigen::MatrixXd& design,
                                               std::span<const double> weights,
                                               const FrequencyGrid& grid, double rank_tolerance)
    : grid_(grid) {
  check_shapes(static_cast<std::size_t>(design.rows()), weights.size(), grid);
  const auto cols = static_cast<Eigen::Index>(2 * grid.m());
  if (design.cols() < cols) throw Error(ErrorCode::InvalidArgument, "design narrower than grid");
  sqrt_w_ = sqrt_weights(weights);
  weighted_ = sqrt_w_.asDiagonal() * design.leftCols(cols);
  factorize(rank_tolerance);
}

void WeightedHarmonicSolver::factorize(double rank_tolerance) {
  cod_.setThreshold(rank_tolerance);
  cod_.compute(weighted_);
  rank_ = static_cast<std::size_t>(cod_.rank());
}

BandFit WeightedHarmonicSolver::solve(std::span<const double> values) const {
  const auto n = weighted_.rows();
  if (static_cast<Eigen::Index>(values.size()) != n) {
    throw Error(ErrorCode::LengthMismatch, "values vs. times");
  }
  const Eigen::Map<const Eigen::VectorXd> y(values.data(), n);
  const Eigen::VectorXd rhs = sqrt_w_.cwiseProduct(y);
  const Eigen::VectorXd x = cod_.solve(rhs);

  BandFit fit;
  const std::size_t m = grid_.m();
  fit.coeffs = BandCoefficients::zeros(m);
  for (std::size_t k = 0; k < m; ++k) {
    fit.coeffs.cos_coeffs[k] = x(static_cast<Eigen::Index>(2 * k));
    fit.coeffs.sin_coeffs[k] = x(static_cast<Eigen::Index>(2 * k + 1));
  }

  const Eigen::VectorXd residual = rhs - weighted_ * x;
  const double gradient = (weighted_.transpose() * residual).lpNorm<Eigen::Infinity>();
  const double scale = (weighted_.cwiseAbs().transpose() * rhs.cwiseAbs()).lpNorm<Eigen::Infinity>();
  fit.diagnostics.rank = rank_;
  fit.diagnostics.rank_deficient = rank_deficient();
  fit.diagnostics.orthogonality = scale > 0.0 ? gradient / scale : 0.0;
  return fit;
}

BandFit weighted_fit(std::span<const double> times, std::span<const double> values,
                     std::span<const double> weights, const FrequencyGrid& grid,
                     double rank_tolerance) {
  if (values.size() != times.size()) throw Error(ErrorCode::LengthMismatch, "values vs. times");
  return WeightedHarmonicSolver(times, weights, grid, rank_tolerance).solve(values);
}

}  // namespace gtsp
