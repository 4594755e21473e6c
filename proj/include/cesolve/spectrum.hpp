#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "cesolve/cubic.hpp"
#include "cesolve/potential.hpp"

namespace cesolve {

/// Rescaled form of the energy condition with beta = sqrt(b):
/// tau = mu X + 1/X^2 for each root X = t/beta.
struct ScaledRoots {
    double beta;
    double tau;
    double mu;
    double T;  ///< (n + 1/2)/beta, left end of the admissible X window
    double Z;  ///< leftmost
    double X;  ///< middle
    double Y;  ///< rightmost
};

/// The three roots of (2n+1) t^3 - (A + n^2 + n - 1/2) t^2 + b^2 = 0, t = a + n.
struct CubicTriple {
    CubicCoeffs coeffs;
    std::array<std::complex<double>, 3> roots;
    int n;
    double A;
    double b;
    std::optional<ScaledRoots> scaled;  ///< present iff all roots are real

    bool all_real() const { return scaled.has_value(); }
};

/// One level: a_n is the unscaled root (a = t - n), E_n = -(a_n - 1/2)^2,
/// c = a_n + n, s = b/c, alpha = s - c, beta = -s - c.
struct BoundState {
    int n;
    double a;
    double E;
    double c;
    double s;
    double alpha;
    double beta;
};

CubicCoeffs cubic_coefficients(const DkvParams& p, int n);
CubicTriple make_triple(const DkvParams& p, int n);

/// Right-hand side of A = n^2 + 1/2 + (2n+1) a + b^2/(a+n)^2.
double coupling_A_from_root(int n, double a, double b);
/// Right-hand side of the SUSY form A = (B/2)^2/(n+1/2+sqrt_eps)^2 + n^2 + n + 1 + (2n+1) sqrt_eps.
double coupling_A_from_susy(int n, double sqrt_eps, double B);

/// The middle root, as a = t - n, iff three real roots exist and n + 1/2 < t < sqrt(b)
/// (strictly, with a 1e-12 exclusion band at both window ends).
std::optional<double> select_physical_root(const CubicTriple& triple);

inline constexpr double window_guard = 1e-12;

/// E = -(a - 1/2)^2; throws InvalidParameter for a <= 1/2.
double energy_of(double a);

/// Builds the level record for root t of the n-th cubic without checking admissibility.
BoundState make_state(const DkvParams& p, int n, double t);

struct LevelScan {
    int n;
    bool precondition;  ///< A > 2(n+1/2)^2 + 3/4
    bool admissible;
};

struct LevelList {
    std::vector<BoundState> levels;
    std::vector<LevelScan> scan;
};

/// n = 0, 1, ... up to n_max, stopping at the first n without an admissible middle root.
LevelList enumerate_levels(const DkvParams& p, int n_max);

struct RootCertificate {
    bool leftmost_negative;
    bool rightmost_above_one;
    double tau_residual;          ///< max |tau - mu R - 1/R^2| over the three scaled roots
    double closed_form_residual;  ///< |Y - [1 + sqrt(1 + 4 mu X^3)]/(2 mu X^2)|
    bool closed_form_ok;

    bool valid() const { return leftmost_negative && rightmost_above_one && closed_form_ok; }
};

/// Closed-form rightmost scaled root given the middle one.
double rightmost_from_middle(double mu, double X);

/// Throws InvalidParameter unless three real roots exist and the middle one is admissible.
RootCertificate root_certificate(const CubicTriple& triple);

} // namespace cesolve
