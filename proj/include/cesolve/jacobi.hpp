#pragma once

#include <vector>

namespace cesolve {

/// Degree and parameters of P_n^{(alpha,beta)}; alpha, beta need not lie in
/// the classical orthogonality range.
struct JacobiSpec {
    int n;
    double alpha;
    double beta;
};

/// Three-term recurrence in the degree. Where a recurrence denominator vanishes
/// (possible for non-classical parameters) the explicit binomial sum is used.
double jacobi_eval(const JacobiSpec& spec, double z);

/// d/dz P_n^{(alpha,beta)}(z) = (n + alpha + beta + 1)/2 P_{n-1}^{(alpha+1,beta+1)}(z).
double jacobi_derivative(const JacobiSpec& spec, double z);

/// Coefficients of P_n in powers of u = z - 1 (index k multiplies u^k).
std::vector<double> jacobi_coefficients_shifted(const JacobiSpec& spec);

/// All n roots. Throws ConsistencyError if a root is complex or not in (1, inf);
/// for degrees produced by physical levels this indicates a root-selection bug upstream.
std::vector<double> polynomial_roots(const JacobiSpec& spec);

} // namespace cesolve
