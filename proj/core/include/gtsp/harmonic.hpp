#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace gtsp {

/// Frequencies f_k = f0 - (k-1) df with df = f0 / (p + 2), p the least power
/// of two strictly greater than the window length.
struct FrequencyGrid {
  double f0 = 0.0;
  std::size_t p = 0;
  double df = 0.0;
  std::vector<double> freqs;

  std::size_t m() const noexcept { return freqs.size(); }
  /// Grid over the first m frequencies (same f0 and p).
  FrequencyGrid prefix(std::size_t m) const;
};

/// Coefficients of sum_k c_k t cos(2 pi f_k t) + s_k t sin(2 pi f_k t).
struct BandCoefficients {
  std::vector<double> cos_coeffs;
  std::vector<double> sin_coeffs;

  static BandCoefficients zeros(std::size_t m);
  std::size_t m() const noexcept { return cos_coeffs.size(); }
};

BandCoefficients operator+(const BandCoefficients& a, const BandCoefficients& b);

struct FitDiagnostics {
  std::size_t rank = 0;
  bool rank_deficient = false;
  /// ||A^T W r||_inf / || |A|^T W |y| ||_inf; ~0 for a least-squares solution.
  double orthogonality = 0.0;
};

struct BandFit {
  BandCoefficients coeffs;
  FitDiagnostics diagnostics;
};

FrequencyGrid frequency_grid(double f0, std::size_t n, std::size_t m);

/// [t cos(2 pi f_1 t), t sin(2 pi f_1 t), ..., t cos(2 pi f_m t), t sin(2 pi f_m t)]
std::vector<double> design_row(double t, const FrequencyGrid& grid);
void design_row(double t, const FrequencyGrid& grid, std::span<double> out);

/// n x 2m matrix of design rows.
Eigen::MatrixXd design_matrix(std::span<const double> times, const FrequencyGrid& grid);

double evaluate_band(const BandCoefficients& coeffs, const FrequencyGrid& grid, double t);

inline constexpr double kDefaultRankTolerance = 1e-10;

/// Weighted least squares for one design, reusable across right-hand sides
/// (both wavelet bands share times, weights and grid).
///
/// Rows and observations are scaled by sqrt(w) and the system is solved by a
/// complete orthogonal decomposition, which yields the minimum-norm solution
/// when the columns are numerically dependent.
class WeightedHarmonicSolver {
 public:
  WeightedHarmonicSolver(std::span<const double> times, std::span<const double> weights,
                         const FrequencyGrid& grid, double rank_tolerance = kDefaultRankTolerance);

  /// `design` may carry more columns than 2 * grid.m(); only the leading
  /// ones are used. Lets an m-search build the widest design once.
  WeightedHarmonicSolver(const Eigen::MatrixXd& design, std::span<const double> weights,
                         const FrequencyGrid& grid, double rank_tolerance = kDefaultRankTolerance);

  BandFit solve(std::span<const double> values) const;

  std::size_t rank() const noexcept { return rank_; }
  bool rank_deficient() const noexcept { return rank_ < static_cast<std::size_t>(weighted_.cols()); }
  const FrequencyGrid& grid() const noexcept { return grid_; }

 private:
  void factorize(double rank_tolerance);

  FrequencyGrid grid_;
  Eigen::VectorXd sqrt_w_;
  Eigen::MatrixXd weighted_;
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod_;
  std::size_t rank_ = 0;
};

/// Minimises sum_k w_k (y_k - model(t_k))^2. Throws UnderdeterminedSystem
/// when n <= 2m; numerically dependent columns are flagged in the diagnostics.
BandFit weighted_fit(std::span<const double> times, std::span<const double> values,
                     std::span<const double> weights, const FrequencyGrid& grid,
                     double rank_tolerance = kDefaultRankTolerance);

}  // namespace gtsp
