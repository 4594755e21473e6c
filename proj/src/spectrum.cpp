#include "cesolve/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "cesolve/errors.hpp"

namespace cesolve {

CubicCoeffs cubic_coefficients(const DkvParams& p, int n) {
    if (n < 0)
        throw InvalidParameter("level index must be nonnegative");
    const double b = p.b();
    return {2.0 * n + 1.0, -(p.A() + n * n + n - 0.5), 0.0, b * b};
}

CubicTriple make_triple(const DkvParams& p, int n) {
    CubicTriple tr{cubic_coefficients(p, n), {}, n, p.A(), p.b(), std::nullopt};
    tr.roots = solve_cubic(tr.coeffs);
    const bool real = std::all_of(tr.roots.begin(), tr.roots.end(),
                                  [](auto r) { return r.imag() == 0.0; });
    if (real) {
        const double beta = std::sqrt(tr.b);
        ScaledRoots s{};
        s.beta = beta;
        s.tau = (tr.A + n * n + n - 0.5) / tr.b;
        s.mu = (2.0 * n + 1.0) / beta;
        s.T = (n + 0.5) / beta;
        s.Z = tr.roots[0].real() / beta;
        s.X = tr.roots[1].real() / beta;
        s.Y = tr.roots[2].real() / beta;
        tr.scaled = s;
    }
    return tr;
}

double coupling_A_from_root(int n, double a, double b) {
    const double t = a + n;
    return n * n + 0.5 + (2.0 * n + 1.0) * a + b * b / (t * t);
}

double coupling_A_from_susy(int n, double sqrt_eps, double B) {
    const double d = n + 0.5 + sqrt_eps;
    return 0.25 * B * B / (d * d) + n * n + n + 1.0 + (2.0 * n + 1.0) * sqrt_eps;
}

std::optional<double> select_physical_root(const CubicTriple& triple) {
    if (!triple.all_real())
        return std::nullopt;
    const double t = triple.roots[1].real();
    const double lo = triple.n + 0.5;
    const double hi = std::sqrt(triple.b);
    if (t > lo + window_guard && t < hi - window_guard)
        return t - triple.n;
    return std::nullopt;
}

double energy_of(double a) {
    if (!(a > 0.5))
        throw InvalidParameter("a <= 1/2 is not normalizable at x -> -inf");
    const double k = a - 0.5;
    return -k * k;
}

BoundState make_state(const DkvParams& p, int n, double t) {
    BoundState s{};
    s.n = n;
    s.a = t - n;
    const double k = s.a - 0.5;
    s.E = -k * k;
    s.c = t;
    s.s = p.b() / t;
    s.alpha = s.s - s.c;
    s.beta = -s.s - s.c;
    return s;
}

LevelList enumerate_levels(const DkvParams& p, int n_max) {
    LevelList out;
    for (int n = 0; n <= n_max; ++n) {
        const CubicTriple tr = make_triple(p, n);
        const auto a = select_physical_root(tr);
        const double bound = 2.0 * (n + 0.5) * (n + 0.5) + 0.75;
        out.scan.push_back({n, p.A() > bound, a.has_value()});
        if (!a)
            break;
        out.levels.push_back(make_state(p, n, *a + n));
    }
    return out;
}

double rightmost_from_middle(double mu, double X) {
    return (1.0 + std::sqrt(1.0 + 4.0 * mu * X * X * X)) / (2.0 * mu * X * X);
}

RootCertificate root_certificate(const CubicTriple& triple) {
    if (!select_physical_root(triple))
        throw InvalidParameter("certificate requires an admissible middle root");
    const ScaledRoots& s = *triple.scaled;
    RootCertificate cert{};
    cert.leftmost_negative = s.Z < 0.0;
    cert.rightmost_above_one = s.Y > 1.0;
    for (double r : {s.Z, s.X, s.Y})
        cert.tau_residual = std::max(cert.tau_residual, std::abs(s.tau - s.mu * r - 1.0 / (r * r)));
    cert.closed_form_residual = std::abs(s.Y - rightmost_from_middle(s.mu, s.X));
    cert.closed_form_ok = cert.closed_form_residual < 1e-10 * std::max(1.0, s.Y);
    return cert;
}

} // namespace cesolve
