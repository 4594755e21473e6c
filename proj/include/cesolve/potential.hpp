#pragma once

#include <cmath>

#include "cesolve/grid.hpp"

namespace cesolve {

struct BoundState;

/// Couplings (A, B) of the Dutt-Khare-Varshni potentials; the z^-4 coupling
/// is frozen to -3/4.
class DkvParams {
public:
    DkvParams(double A, double B);

    double A() const { return A_; }
    double B() const { return B_; }
    double b() const { return 0.5 * B_; }

    static constexpr double fixed_g3 = -0.75;

private:
    double A_;
    double B_;
};

struct GeneralCouplings {
    double g0 = 0.0;
    double g1 = 0.0;
    double g2 = 0.0;
    double g3 = 0.0;
};

enum class DkvForm { V1, V2 };

GeneralCouplings couplings_of(const DkvParams& p, DkvForm which);

/// z(x) = (1 + e^{-2x})^{1/2}, evaluated without overflow for x < 0.
double z_of_x(double x);
/// log z(x), finite for every finite x.
double log_z(double x);
/// log(z(x) - 1), computed as -2x - log(1 + z) so that it stays accurate when z -> 1.
double log_z_minus_1(double x);
/// dz/dx = (1 - z^2)/z.
inline double dz_dx(double z) { return (1.0 - z * z) / z; }
/// dz/dx as a function of x, using 1 - z^2 = -e^{-2x} where that avoids cancellation.
double dz_of_x(double x);

/// V(x) = g0/(e^x z) + g1/z + g2/z^2 + g3/z^4.
double eval_general(const GeneralCouplings& g, double x);
double eval_dkv(const DkvParams& p, DkvForm which, double x);

/// Parameters of the mirrored V2 form with V1(x) = V2^{(-D,0,C,-3/4)}(-x) + shift.
struct MirrorMap {
    double C;
    double D;
    double shift;
};

MirrorMap mirror_params(const DkvParams& p);

/// Shape-invariant radial potentials on r > 0 that map onto V1/V2 under x = ln sinh r.
enum class SourceKind { U1, U2 };

struct SourceParams {
    double a;
    double b;
    SourceKind kind;
};

struct SourceValue {
    double V;
    double kappa2;
};

SourceValue eval_source(const SourceParams& sp, int n, double r);

/// Default r-cutoff for residual scans of the r = 0 singularity.
inline constexpr double default_r_cutoff = 1e-2;

/// max over the r-grid of |U + kappa^2 - [x'^2 (V + k^2) + (3/4)(x''/x')^2 - (1/2) x'''/x']|
/// for the map x = ln sinh r and the given level. Points with r < r_cutoff are skipped.
/// `delta_u` and `delta_kappa2` shift U and kappa^2; used to probe the affine structure.
double liouville_residual(const DkvParams& p, const BoundState& state, const Grid& r_grid,
                          double r_cutoff = default_r_cutoff, double delta_u = 0.0,
                          double delta_kappa2 = 0.0);

} // namespace cesolve
