#pragma once

// Jacobi elliptic functions and the complete elliptic integral of the first
// kind for real arguments and parameters m = k^2 < 1.

#include <array>

namespace sg {

struct SnCnDn {
  double sn = 0.0;
  double cn = 1.0;
  double dn = 1.0;
};

/// K(m) by the arithmetic-geometric mean, 0 <= m < 1.
double complete_K(double m);

/// sn, cn, dn for m < 1. Negative m goes through the real Jacobi
/// transformation to m/(m-1) in [0,1).
SnCnDn jacobi_sn_cn_dn(double u, double m);

/// Descending Landen recursion without argument reduction or parameter
/// transformation; accepts any m < 1. extra_steps prolongs the recursion past
/// convergence.
SnCnDn jacobi_landen(double u, double m, int extra_steps = 0);

/// det of the rows (cn z_i, sn z_i, dn z_i, 1); vanishes when sum z_i = 0.
double addition_determinant(const std::array<double, 4>& z, double m);

/// Parameter with cached quarter periods.
class EllipticModulus {
 public:
  explicit EllipticModulus(double m);

  double m() const { return m_; }
  /// K(m); for m < 0 the real quarter period pi / (2 agm(1, sqrt(1-m))).
  double K() const { return K_; }
  /// K(1-m) for m in (0,1), otherwise 0.
  double Kprime() const { return Kp_; }

  SnCnDn operator()(double u) const { return jacobi_sn_cn_dn(u, m_); }

 private:
  double m_;
  double K_;
  double Kp_;
};

}  // namespace sg
