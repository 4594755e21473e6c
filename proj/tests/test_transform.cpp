#include <doctest.h>

#include "support.hpp"

using namespace cesolve;

namespace {

std::vector<std::pair<DkvParams, BoundState>> cases() {
    std::vector<std::pair<DkvParams, BoundState>> out;
    for (const DkvParams& p : {testing::fig1, testing::two_level, DkvParams(80.0, 40.0)})
        for (const BoundState& s : enumerate_levels(p, 10).levels)
            out.emplace_back(p, s);
    return out;
}

} // namespace

TEST_CASE("class laws hold for their closed forms") {
    const double C = 2.3, k = std::sqrt(C);
    SUBCASE("PI") {
        const TransformClass tc{TransformKind::PI, C};
        const Grid g(-1.4 / k, 1.4 / k, 1e-3);
        CHECK(class_ode_residual(tc, class_map(tc), g) < 1e-12);
        CHECK(class_ode_residual(
                  tc, [&](double x) { return std::sin(k * x); },
                  [&](double x) { return k * std::cos(k * x); }, g) < 1e-12);
    }
    SUBCASE("PII") {
        const TransformClass tc{TransformKind::PII, C};
        const Grid g(-3.0, 3.0, 1e-3);
        CHECK(class_ode_residual(tc, class_map(tc), g) < 1e-12);
        // sech^2 against 1 - tanh^2 loses digits once |tanh| -> 1
        CHECK(class_ode_residual(
                  tc, [&](double x) { return std::tanh(k * x); },
                  [&](double x) { return k / (std::cosh(k * x) * std::cosh(k * x)); },
                  Grid(-1.5, 1.5, 1e-3)) < 1e-12);
    }
    SUBCASE("PIII") {
        const TransformClass tc{TransformKind::PIII, C};
        const Grid g(0.05, 3.0, 1e-3);
        const ZMap m = class_map(tc);
        CHECK(class_ode_residual(tc, m, g) < 1e-12);
        // the implicit relation itself
        for (std::size_t i = 0; i < g.size(); i += 37) {
            const double q = std::sqrt(m.z(g[i]));
            CHECK(std::abs(std::atanh(q) - std::atan(q) - k * g[i]) < 1e-12 * std::max(1.0, k * g[i]));
        }
        CHECK_THROWS_AS(m.z(-1.0), InvalidParameter);
    }
    SUBCASE("PIV") {
        for (double D : {0.0, 0.7, -1.2}) {
            const TransformClass tc{TransformKind::PIV, C, D};
            const Grid g(-3.0, 3.0, 1e-3);
            CHECK(class_ode_residual(tc, class_map(tc), g) < 1e-12);
            auto z = [&](double x) { return std::sqrt(1.0 + std::exp(2 * k * x + D)); };
            auto dz = [&](double x) { return k * std::exp(2 * k * x + D) / z(x); };
            // 1 - z^2 from a separately computed z cancels as z -> 1, so stay on the z > 1.2 side
            CHECK(class_ode_residual(tc, z, dz, Grid((std::log(0.44) - D) / (2 * k), 3.0, 1e-3)) < 1e-12);
        }
    }
    CHECK_THROWS_AS(class_map({TransformKind::PII, -1.0}), InvalidParameter);
}

TEST_CASE("phi derivatives match finite differences") {
    for (TransformKind kind : {TransformKind::PI, TransformKind::PII, TransformKind::PIII, TransformKind::PIV}) {
        const ZMap m = class_map({kind, 1.7});
        const double zs = kind == TransformKind::PIV ? 1.6 : 0.4;
        const double h = 1e-5;
        CHECK(m.dphi(zs) == doctest::Approx((m.phi(zs + h) - m.phi(zs - h)) / (2 * h)).epsilon(1e-7));
        CHECK(m.d2phi(zs) == doctest::Approx((m.dphi(zs + h) - m.dphi(zs - h)) / (2 * h)).epsilon(1e-7));
    }
}

TEST_CASE("PIV map reflected is the DKV map") {
    const ZMap piv = class_map({TransformKind::PIV, 1.0, 0.0});
    const ZMap dkv = dkv_map();
    for (double x = -20.0; x <= 30.0; x += 0.173) {
        CHECK(std::abs(piv.z(-x) - z_of_x(x)) < 1e-12 * z_of_x(x));
        CHECK(std::abs(dkv.z(x) - z_of_x(x)) < 1e-12 * z_of_x(x));
    }
    const ZMap neg = class_map({TransformKind::PIV, 1.0, 0.0, -1.0});
    CHECK(neg.z(1.3) == doctest::Approx(z_of_x(1.3)));
}

TEST_CASE("master formula reproduces V1 - E for Jacobi solutions") {
    const Grid g(-10.0, 6.0, 1e-2);
    for (const auto& [p, s] : cases()) {
        INFO("A=" << p.A() << " n=" << s.n);
        const auto V = [&](double x) { return eval_dkv(p, DkvForm::V1, x); };
        CHECK(master_residual(dkv_map(), jacobi_coeffs(s.alpha, s.beta, s.n), s.E, V, g) < 1e-9);
        double worst = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i) {
            const double x = g[i];
            const double a = jacobi_master_eval(s.alpha, s.beta, s.n, dkv_map(), x);
            const double b = piv_master_eval(s.alpha, s.beta, s.n, z_of_x(x));
            worst = std::max(worst, std::abs(a - b));
            worst = std::max(worst, std::abs(b - (s.E - V(x))));
        }
        // absolute for the small couplings; terms scale with A otherwise
        CHECK(worst < 1e-9 * std::max(1.0, p.A() / 30.0));
        CHECK(piv_energy(s.n, s.alpha, s.beta) == doctest::Approx(s.E).epsilon(1e-12));
        CHECK(piv_coupling_A(s.n, s.alpha, s.beta) == doctest::Approx(p.A()).epsilon(1e-12));
        CHECK(piv_coupling_B(s.alpha, s.beta) == doctest::Approx(p.B()).epsilon(1e-12));
    }
}

TEST_CASE("mismatched energy is detected") {
    const BoundState s = enumerate_levels(testing::fig1, 0).levels.at(0);
    const auto V = [&](double x) { return eval_dkv(testing::fig1, DkvForm::V1, x); };
    const Grid g(-10.0, 6.0, 1e-2);
    CHECK(master_residual(dkv_map(), jacobi_coeffs(s.alpha, s.beta, 0), s.E + 1e-3, V, g) > 0.5e-3);
}
