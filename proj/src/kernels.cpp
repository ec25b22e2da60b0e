#include "ftstab/kernels.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "ftstab/bessel.hpp"
#include "ftstab/csv.hpp"
#include "ftstab/quadrature.hpp"

namespace ftstab {

KernelParams::KernelParams(double lambda_, double a_, double c_)
    : lambda(lambda_), a(a_), c(c_) {
  if (!std::isfinite(lambda) || !std::isfinite(a) || !std::isfinite(c)) {
    throw std::invalid_argument("KernelParams: parameters must be finite");
  }
  if (lambda <= 0.0) {
    throw std::invalid_argument("KernelParams: lambda must be > 0");
  }
  if (a <= 0.0) {
    throw std::invalid_argument("KernelParams: a must be > 0");
  }
}

namespace {

void check_triangle(double x, double y) {
  if (!(x >= 0.0 && x <= 1.0) || !(y >= 0.0)) {
    throw std::domain_error("kernel: need 0 <= y <= x <= 1");
  }
  if (y > x) {
    throw std::domain_error("kernel: y > x is outside the triangle");
  }
}

void check_regime(const KernelParams& p) {
  if (p.lambda + p.c <= 0.0) {
    throw std::domain_error(
        "kernel: closed form needs lambda + c > 0 (unsupported regime)");
  }
}

}  // namespace

double kernel_k_const(double x, double y, const KernelParams& p) {
  check_triangle(x, y);
  check_regime(p);
  const double beta = p.ratio();
  const double z = std::sqrt(beta * std::max(x * x - y * y, 0.0));
  return -beta * y * i1_over_z(z) + 0.0;  // +0.0 folds -0.0 at y = 0
}

double kernel_l_const(double x, double y, const KernelParams& p) {
  check_triangle(x, y);
  check_regime(p);
  const double beta = p.ratio();
  const double z = std::sqrt(beta * std::max(x * x - y * y, 0.0));
  return -beta * y * j1_over_z(z) + 0.0;
}

KernelField::KernelField(Grid grid, KernelParams p)
    : grid_(std::move(grid)), params_(p) {
  const std::size_t n = static_cast<std::size_t>(grid_.size());
  k_.assign(n * (n + 1) / 2, 0.0);
  l_.assign(n * (n + 1) / 2, 0.0);
}

std::size_t KernelField::index(int i, int j) const {
  return static_cast<std::size_t>(i) * (static_cast<std::size_t>(i) + 1) / 2 +
         static_cast<std::size_t>(j);
}

KernelField KernelField::closed_form(const Grid& grid, const KernelParams& p) {
  check_regime(p);
  KernelField kf(grid, p);
  const auto& x = grid.nodes();
  for (int i = 0; i < grid.size(); ++i) {
    for (int j = 0; j <= i; ++j) {
      kf.k_[kf.index(i, j)] = kernel_k_const(x[i], x[j], p);
      kf.l_[kf.index(i, j)] = kernel_l_const(x[i], x[j], p);
    }
  }
  return kf;
}

KernelField KernelField::zeros(const Grid& grid) {
  // lambda + c == 0, so the defining equations hold with k == l == 0.
  return KernelField(grid, KernelParams(1.0, 1.0, -1.0));
}

double GainRow::apply(std::span<const double> field) const {
  if (field.size() != samples.size()) {
    throw std::invalid_argument("GainRow: field length does not match grid");
  }
  double acc = 0.0;
  for (std::size_t j = 0; j < samples.size(); ++j) {
    acc += quad_weights[j] * samples[j] * field[j];
  }
  return acc;
}

GainRow gain_row(const KernelParams& p, const Grid& grid) {
  GainRow row;
  row.lambda = p.lambda;
  row.samples.resize(grid.size());
  for (int j = 0; j < grid.size(); ++j) {
    row.samples[j] = kernel_k_const(1.0, grid.nodes()[j], p);
  }
  row.quad_weights = volterra_weights(grid.size() - 1, grid.spacing());
  return row;
}

namespace {

enum class Which { k, l };

std::vector<double> volterra_apply(std::span<const double> f,
                                   const KernelField& kf, Which which,
                                   double sign) {
  const int n = kf.grid().size();
  if (static_cast<int>(f.size()) != n) {
    throw std::invalid_argument("transform: field length does not match grid");
  }
  const double h = kf.grid().spacing();
  std::vector<double> out(f.begin(), f.end());
  for (int i = 1; i < n; ++i) {
    const auto w = volterra_weights(i, h);
    double acc = 0.0;
    for (int j = 0; j <= i; ++j) {
      const double ker = which == Which::k ? kf.k(i, j) : kf.l(i, j);
      acc += w[j] * ker * f[j];
    }
    out[i] += sign * acc;
  }
  return out;
}

}  // namespace

std::vector<double> direct_transform(std::span<const double> h,
                                     const KernelField& kf) {
  return volterra_apply(h, kf, Which::k, -1.0);
}

std::vector<double> inverse_transform(std::span<const double> h_tilde,
                                      const KernelField& kf) {
  return volterra_apply(h_tilde, kf, Which::l, +1.0);
}

KernelResiduals kernel_residual(const KernelField& kf) {
  const int n = kf.grid().size();
  if (n < 5) {
    throw std::invalid_argument("kernel_residual: grid too coarse (need N >= 5)");
  }
  const double h = kf.grid().spacing();
  const double a = kf.params().a;
  const double rate = kf.params().lambda + kf.params().c;

  KernelResiduals res;
  // Interior of the triangle, one node away from every edge.
  for (int i = 2; i <= n - 2; ++i) {
    for (int j = 1; j <= i - 2; ++j) {
      const double kxx = (kf.k(i + 1, j) - 2.0 * kf.k(i, j) + kf.k(i - 1, j)) / (h * h);
      const double kyy = (kf.k(i, j + 1) - 2.0 * kf.k(i, j) + kf.k(i, j - 1)) / (h * h);
      res.interior = std::max(res.interior,
                              std::abs(a * kxx - a * kyy - rate * kf.k(i, j)));
    }
  }
  // Total derivative along the diagonal by a central difference of the
  // diagonal restriction.
  for (int i = 1; i <= n - 2; ++i) {
    const double dk = (kf.k(i + 1, i + 1) - kf.k(i - 1, i - 1)) / (2.0 * h);
    res.diagonal = std::max(res.diagonal, std::abs(2.0 * a * dk + rate));
  }
  for (int i = 0; i < n; ++i) {
    res.boundary = std::max(res.boundary, std::abs(kf.k(i, 0)));
  }
  return res;
}

void write_gain_csv(const GainRow& row, const Grid& grid, std::ostream& out) {
  out << "y,k1y\n";
  for (int j = 0; j < grid.size(); ++j) {
    out << fmt_full(grid.nodes()[j]) << ',' << fmt_full(row.samples[j]) << '\n';
  }
}

}  // namespace ftstab
