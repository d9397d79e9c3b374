#pragma once

#include <cstddef>

namespace singh {

/// Regularized incomplete beta function I_x(a, b).
///
/// Degenerate shapes follow the point-mass convention used for c-box edges:
/// a = 0 is a point mass at 0 (returns 1 for every x), b = 0 is a point mass
/// at 1 (returns 0 below 1 and 1 at x = 1). Throws DomainError for x outside
/// [0, 1], negative or non-finite shapes, or a = b = 0.
double reg_inc_beta(double x, double a, double b);

/// CDF of Student's t distribution with nu degrees of freedom.
double student_t_cdf(double t, double nu);

/// Standard normal CDF, via erfc.
double normal_cdf(double z);

/// P(K = k) for K ~ Binomial(n, p).
double binomial_pmf(std::size_t k, std::size_t n, double p);

/// Skewness of the two-point scaled Bernoulli law, (1 - 2p) / sqrt(p (1 - p)).
double scaled_bernoulli_skewness(double p);

}  // namespace singh
