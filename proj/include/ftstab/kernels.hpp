#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "ftstab/grid.hpp"

namespace ftstab {

/// Parameters of a constant-coefficient backstepping kernel.
struct KernelParams {
  KernelParams(double lambda, double a, double c);

  double lambda;  ///< target damping rate, > 0
  double a;       ///< diffusion coefficient, > 0
  double c;       ///< reaction coefficient

  /// (lambda + c) / a; the closed forms require it to be positive.
  double ratio() const { return (lambda + c) / a; }
};

/// Direct kernel k(x,y) of the Volterra transform for constant (a, c),
/// expressed through I1. Requires 0 <= y <= x <= 1 and lambda + c > 0.
double kernel_k_const(double x, double y, const KernelParams& p);

/// Inverse kernel l(x,y), same closed form with J1 in place of I1.
double kernel_l_const(double x, double y, const KernelParams& p);

/// Both kernels sampled on the lower triangle {y_j <= x_i} of a grid.
class KernelField {
 public:
  /// Evaluates the constant-coefficient closed forms at every triangle node.
  static KernelField closed_form(const Grid& grid, const KernelParams& p);

  /// All-zero kernels; the transforms degenerate to the identity.
  static KernelField zeros(const Grid& grid);

  const Grid& grid() const { return grid_; }
  const KernelParams& params() const { return params_; }

  double k(int i, int j) const { return k_[index(i, j)]; }
  double l(int i, int j) const { return l_[index(i, j)]; }

 private:
  KernelField(Grid grid, KernelParams p);
  std::size_t index(int i, int j) const;

  Grid grid_;
  KernelParams params_;
  std::vector<double> k_;  // row-packed lower triangle
  std::vector<double> l_;
};

/// The boundary row k(1, .) with quadrature weights attached, so that the
/// feedback integral is a single dot product per step.
struct GainRow {
  double lambda = 0.0;
  std::vector<double> samples;       ///< k(1, y_j)
  std::vector<double> quad_weights;  ///< volterra_weights over [0, 1]

  /// Approximates the integral of k(1,y) * field(y) over [0,1].
  double apply(std::span<const double> field) const;
};

GainRow gain_row(const KernelParams& p, const Grid& grid);

/// h~(x) = h(x) - integral of k(x,y) h(y) over [0,x].
std::vector<double> direct_transform(std::span<const double> h,
                                     const KernelField& kf);

/// h(x) = h~(x) + integral of l(x,y) h~(y) over [0,x].
std::vector<double> inverse_transform(std::span<const double> h_tilde,
                                      const KernelField& kf);

struct KernelResiduals {
  double interior = 0.0;  ///< max |a k_xx - a k_yy - (lambda+c) k| inside the triangle
  double diagonal = 0.0;  ///< max |2a d/dx k(x,x) + (lambda+c)| along the diagonal
  double boundary = 0.0;  ///< max |k(x,0)|
};

/// Finite-difference check that the sampled k field satisfies its defining
/// equations. Needs at least 5 grid points.
KernelResiduals kernel_residual(const KernelField& kf);

/// Two-column CSV `y,k1y` at full precision.
void write_gain_csv(const GainRow& row, const Grid& grid, std::ostream& out);

}  // namespace ftstab
