#include "sphgeo/elliptic_fn.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "sphgeo/errors.hpp"

namespace sg {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double agm(double a, double b) {
  for (int i = 0; i < 64 && std::abs(a - b) > kEps * a; ++i) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return 0.5 * (a + b);
}

// Real quarter period for any m < 1.
double quarter_period(double m) { return std::numbers::pi / (2.0 * agm(1.0, std::sqrt(1.0 - m))); }

void check_parameter(double m) {
  if (!(m < 1.0)) fail(ErrorCode::DomainError, "parameter m must be < 1");
}

}  // namespace

double complete_K(double m) {
  if (!(m >= 0.0) || !(m < 1.0)) fail(ErrorCode::DomainError, "complete_K needs 0 <= m < 1");
  return quarter_period(m);
}

SnCnDn jacobi_landen(double u, double m, int extra_steps) {
  check_parameter(m);
  std::vector<double> a{1.0}, c{0.0};
  double b = std::sqrt(1.0 - m);
  int extra = 0;
  for (int i = 0; i < 64; ++i) {
    const double ai = a.back();
    if (std::abs(ai - b) <= kEps * ai) {
      if (extra++ >= extra_steps) break;
    }
    a.push_back(0.5 * (ai + b));
    c.push_back(0.5 * (ai - b));
    b = std::sqrt(ai * b);
  }
  const std::size_t n = a.size() - 1;
  double phi = std::ldexp(a[n] * u, static_cast<int>(n));
  for (std::size_t i = n; i > 0; --i) {
    phi = 0.5 * (phi + std::asin(c[i] / a[i] * std::sin(phi)));
  }
  const double sn = std::sin(phi);
  return {sn, std::cos(phi), std::sqrt(std::max(0.0, 1.0 - m * sn * sn))};
}

SnCnDn jacobi_sn_cn_dn(double u, double m) {
  check_parameter(m);
  if (m < 0.0) {
    const double mu = m / (m - 1.0);
    const double w = std::sqrt(1.0 - m);
    const SnCnDn r = jacobi_sn_cn_dn(u * w, mu);
    return {r.sn / (r.dn * w), r.cn / r.dn, 1.0 / r.dn};
  }
  const double K = quarter_period(m);
  const double v = std::remainder(u, 4.0 * K);
  SnCnDn r = jacobi_landen(std::abs(v), m);
  if (v < 0) r.sn = -r.sn;
  return r;
}

double addition_determinant(const std::array<double, 4>& z, double m) {
  const double sum = z[0] + z[1] + z[2] + z[3];
  const double mag = std::abs(z[0]) + std::abs(z[1]) + std::abs(z[2]) + std::abs(z[3]);
  if (std::abs(sum) > 1e-9 * std::max(1.0, mag)) fail(ErrorCode::SumNotZero, "arguments must sum to zero");
  Eigen::Matrix4d rows;
  for (int i = 0; i < 4; ++i) {
    const SnCnDn f = jacobi_sn_cn_dn(z[i], m);
    rows.row(i) << f.cn, f.sn, f.dn, 1.0;
  }
  return rows.determinant();
}

EllipticModulus::EllipticModulus(double m) : m_(m) {
  check_parameter(m);
  K_ = quarter_period(m);
  Kp_ = (m > 0.0) ? quarter_period(1.0 - m) : 0.0;
}

}  // namespace sg
