#pragma once

// Zeta/eta, digamma/polygamma, Hurwitz zeta and extended harmonic numbers.
// All functions are pure and reentrant. Unsupported arguments throw
// polyint::DomainError (or its PoleError subclass).

namespace polyint {

/// Riemann zeta for s > 1, plus s == 0 (returns -1/2).
double riemann_zeta(double s);

/// zeta(-n) for integer n >= 0, exact from the Bernoulli table (n <= 63).
double zeta_nonpositive(int n);

/// Dirichlet eta for s >= 0. eta(0) = 1/2 and eta(1) = log 2 are returned exactly.
double dirichlet_eta(double s);

double digamma(double x);

/// psi^{(k)}(x) = (-1)^{k+1} k! sum_{r>=0} (r + x)^{-k-1}; k == 0 gives digamma.
double polygamma(int k, double x);

/// Hurwitz zeta sum_{r>=0} (r + x)^{-s} for integer s >= 2 and x not a
/// nonpositive integer.
double hurwitz_zeta(int s, double x);

/// Extended harmonic number H_lambda^{(p)}, lambda > -1, p >= 1:
///   p == 1:  gamma + psi(lambda + 1)
///   p >= 2:  zeta(p) - zeta(p, lambda + 1)
/// Integer lambda <= 64 is summed directly.
double harmonic_extended(double lambda, int p);

}  // namespace polyint
