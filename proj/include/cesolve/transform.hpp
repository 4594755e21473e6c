#pragma once

#include <functional>

#include "cesolve/grid.hpp"

namespace cesolve {

/// A coordinate map z(x) given by an autonomous first-order law z' = phi(z).
/// Higher derivatives follow by the chain rule:
/// z'' = phi phi_z, z''' = phi (phi_z^2 + phi phi_zz).
struct ZMap {
    std::function<double(double)> z;
    std::function<double(double)> phi;
    std::function<double(double)> dphi;
    std::function<double(double)> d2phi;

    struct Derivatives {
        double z, d1, d2, d3;
    };
    Derivatives at(double x) const;
};

/// z = (1 + e^{-2x})^{1/2}, the map behind V1/V2.
ZMap dkv_map();

/// F'' + Q F' + R F = 0.
struct SecondOrderCoeffs {
    std::function<double(double)> Q;
    std::function<double(double)> dQ;
    std::function<double(double)> R;
};

/// Jacobi equation (1-z^2) F'' + [beta - alpha - (alpha+beta+2) z] F' + n(n+alpha+beta+1) F = 0.
SecondOrderCoeffs jacobi_coeffs(double alpha, double beta, int n);

/// E - V = z'''/(2z') - (3/4)(z''/z')^2 + z'^2 [R - Q_z/2 - Q^2/4].
double master_rhs(const ZMap& map, const SecondOrderCoeffs& ode, double x);

/// max over grid of |master_rhs - (E - V(x))|.
double master_residual(const ZMap& map, const SecondOrderCoeffs& ode, double E,
                       const std::function<double(double)>& V, const Grid& grid);

/// E - V written out for a Jacobi-polynomial F and arbitrary z(x).
double jacobi_master_eval(double alpha, double beta, int n, const ZMap& map, double x);

/// The same expression once z' = (1 - z^2)/z is substituted (coefficients of 1, 1/z, 1/z^2, 1/z^4).
double piv_master_eval(double alpha, double beta, int n, double z);

double piv_energy(int n, double alpha, double beta);
double piv_coupling_A(int n, double alpha, double beta);
double piv_coupling_B(double alpha, double beta);

enum class TransformKind { PI, PII, PIII, PIV };

/// Defining laws: PI (z')^2/(1-z^2) = C, PII (z')^2/(1-z^2)^2 = C,
/// PIII z (z')^2/(1-z^2)^2 = C, PIV z^2 (z')^2/(1-z^2)^2 = C.
struct TransformClass {
    TransformKind kind;
    double C;
    double D = 0.0;         ///< PIV offset
    double sqrt_sign = 1.0; ///< branch of C^{1/2} used by the closed form
};

double class_combination(TransformKind kind, double z, double dz);

/// Closed-form (PI, PII, PIV) or implicit-inverted (PIII) solution of the class law.
/// PI: sin(sqrt(C) x); PII: tanh(sqrt(C) x); PIII: sqrt(C) x = atanh(sqrt z) - atan(sqrt z);
/// PIV: (1 + exp(2 sqrt(C) x + D))^{1/2}.
ZMap class_map(const TransformClass& tc);

/// max over grid of |class_combination(z, z') - C|, z' from the map's phi.
double class_ode_residual(const TransformClass& tc, const ZMap& map, const Grid& grid);
/// Same, with z' supplied by an independent derivative function.
double class_ode_residual(const TransformClass& tc, const std::function<double(double)>& z,
                          const std::function<double(double)>& dz, const Grid& grid);

} // namespace cesolve
