#include "cesolve/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include <Eigen/Dense>

#include "cesolve/errors.hpp"

namespace cesolve {

namespace {

// Generalized binomial C(x, k) for real x.
double binom(double x, int k) {
    double r = 1.0;
    for (int j = 1; j <= k; ++j)
        r *= (x - k + j) / j;
    return r;
}

// P_n = sum_k C(n+alpha, n-k) C(n+beta, k) ((z-1)/2)^k ((z+1)/2)^{n-k}
double binomial_sum(const JacobiSpec& s, double z) {
    const double lm = 0.5 * (z - 1.0), lp = 0.5 * (z + 1.0);
    double sum = 0.0;
    for (int k = 0; k <= s.n; ++k)
        sum += binom(s.n + s.alpha, s.n - k) * binom(s.n + s.beta, k) * std::pow(lm, k) *
               std::pow(lp, s.n - k);
    return sum;
}

struct RecCoeffs {
    double a1, a2, a3, a4;  // a1 P_m = (a2 + a3 z) P_{m-1} - a4 P_{m-2}
};

RecCoeffs rec(int m, double al, double be) {
    const double s = 2.0 * m + al + be;
    return {2.0 * m * (m + al + be) * (s - 2.0), (s - 1.0) * (al * al - be * be),
            (s - 1.0) * s * (s - 2.0), 2.0 * (m + al - 1.0) * (m + be - 1.0) * s};
}

// The recurrence divides by (m + alpha + beta)(2m + alpha + beta - 2); near a zero of
// either factor it loses digits, so those parameters go through the explicit sum.
bool recurrence_ok(const JacobiSpec& s) {
    constexpr double margin = 0.25;
    for (int m = 2; m <= s.n; ++m) {
        const double ab = s.alpha + s.beta;
        if (std::abs(m + ab) < margin || std::abs(2.0 * m + ab - 2.0) < margin)
            return false;
    }
    return true;
}

} // namespace

double jacobi_eval(const JacobiSpec& spec, double z) {
    if (spec.n < 0)
        throw InvalidParameter("Jacobi degree must be nonnegative");
    if (spec.n == 0)
        return 1.0;
    const double al = spec.alpha, be = spec.beta;
    double p1 = 0.5 * (al - be) + 0.5 * (al + be + 2.0) * z;
    if (spec.n == 1)
        return p1;
    if (!recurrence_ok(spec))
        return binomial_sum(spec, z);
    double p0 = 1.0;
    for (int m = 2; m <= spec.n; ++m) {
        const RecCoeffs r = rec(m, al, be);
        const double p2 = ((r.a2 + r.a3 * z) * p1 - r.a4 * p0) / r.a1;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

double jacobi_derivative(const JacobiSpec& spec, double z) {
    if (spec.n == 0)
        return 0.0;
    return 0.5 * (spec.n + spec.alpha + spec.beta + 1.0) *
           jacobi_eval({spec.n - 1, spec.alpha + 1.0, spec.beta + 1.0}, z);
}

std::vector<double> jacobi_coefficients_shifted(const JacobiSpec& spec) {
    // (z-1)/2 = u/2, (z+1)/2 = 1 + u/2: expand the binomial sum in u.
    const int n = spec.n;
    std::vector<double> out(n + 1, 0.0);
    for (int k = 0; k <= n; ++k) {
        const double w = binom(n + spec.alpha, n - k) * binom(n + spec.beta, k) * std::pow(0.5, k);
        // u^k (1 + u/2)^{n-k}
        for (int j = 0; j <= n - k; ++j)
            out[k + j] += w * binom(n - k, j) * std::pow(0.5, j);
    }
    return out;
}

std::vector<double> polynomial_roots(const JacobiSpec& spec) {
    const int n = spec.n;
    if (n == 0)
        return {};
    const std::vector<double> c = jacobi_coefficients_shifted(spec);
    if (c[n] == 0.0)
        throw ConsistencyError("Jacobi polynomial degenerates below degree " + std::to_string(n));
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i)
        comp(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i)
        comp(i, n - 1) = -c[i] / c[n];
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    if (es.info() != Eigen::Success)
        throw NumericalFailure("companion eigenvalue solve failed");

    std::vector<double> roots;
    roots.reserve(n);
    for (int i = 0; i < n; ++i) {
        const std::complex<double> u = es.eigenvalues()[i];
        if (std::abs(u.imag()) > 1e-6 * std::max(1.0, std::abs(u)))
            throw ConsistencyError("Jacobi polynomial has a complex root");
        double z = 1.0 + u.real();
        for (int it = 0; it < 20; ++it) {
            const double d = jacobi_derivative(spec, z);
            if (d == 0.0)
                break;
            const double step = jacobi_eval(spec, z) / d;
            z -= step;
            if (std::abs(step) < 1e-15 * std::abs(z))
                break;
        }
        if (!(z > 1.0))
            throw ConsistencyError("Jacobi root outside (1, inf)");
        roots.push_back(z);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace cesolve
