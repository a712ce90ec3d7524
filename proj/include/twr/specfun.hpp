#pragma once

namespace twr {

/// Gamma function for x > 0; DomainError otherwise.
double gamma_fn(double x);

/// log Gamma(x) for x > 0.
double ln_gamma(double x);

/// Digamma psi(x) = Gamma'(x)/Gamma(x) for x > 0.
double digamma(double x);

/// Confluent hypergeometric function of the second kind (Tricomi U) for
/// a > 0, z > 0, from the integral
///   U(a, b, z) = 1/Gamma(a) * int_0^inf e^{-zt} t^{a-1} (1+t)^{b-a-1} dt
/// to relative tolerance `rel_tol`. DomainError for a <= 0 or z <= 0.
double tricomi_u(double a, double b, double z, double rel_tol = 1e-12);

/// Leading small-z behaviour of U(a, b, z):
///   b > 1:  Gamma(b-1)/Gamma(a) z^(1-b)
///   b = 1:  -(ln z + psi(a))/Gamma(a)
///   b < 1:  Gamma(1-b)/Gamma(1+a-b)
double tricomi_u_small_z(double a, double b, double z);

/// Binomial coefficient as a double.
double binomial(int n, int k);

}  // namespace twr
