#include "cesolve/natanzon.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "cesolve/errors.hpp"

namespace cesolve {

void check_positive_R(const NatanzonParams& np) {
    if (!(np.c0 > 0.0) || !(np.c1 > 0.0))
        throw InvalidParameter("R(z) must be positive on [0,1]: need c0 > 0 and c1 > 0");
    if (np.a > 0.0) {
        const double zs = (np.a + np.c0 - np.c1) / (2.0 * np.a);
        if (zs > 0.0 && zs < 1.0 && !(np.R(zs) > 0.0))
            throw InvalidParameter("R(z) must be positive on [0,1]: interior minimum <= 0");
    }
}

ZMap natanzon_law(const NatanzonParams& np) {
    ZMap m;
    m.phi = [np](double z) { return 2.0 * z * (1.0 - z) / std::sqrt(np.R(z)); };
    m.dphi = [np](double z) {
        const double R = np.R(z);
        const double p = 2.0 * z * (1.0 - z);
        return (2.0 - 4.0 * z) / std::sqrt(R) - 0.5 * p * np.dR(z) / (R * std::sqrt(R));
    };
    m.d2phi = [np](double z) {
        const double R = np.R(z), dR = np.dR(z), d2R = 2.0 * np.a;
        const double sR = std::sqrt(R);
        const double p = 2.0 * z * (1.0 - z), dp = 2.0 - 4.0 * z, d2p = -4.0;
        return d2p / sR - dp * dR / (R * sR) + 0.75 * p * dR * dR / (R * R * sR) -
               0.5 * p * d2R / (R * sR);
    };
    return m;
}

namespace {

double logistic(double w) {
    return w >= 0.0 ? 1.0 / (1.0 + std::exp(-w)) : std::exp(w) / (1.0 + std::exp(w));
}

// dw/dx in the logit variable
double logit_rate(const NatanzonParams& np, double w) { return 2.0 / std::sqrt(np.R(logistic(w))); }

// 8-point Gauss-Legendre on [lo, hi] of sqrt(R(sigma(u)))/2 = dx/dw
double dx_dw_integral(const NatanzonParams& np, double lo, double hi) {
    static constexpr std::array<double, 4> nodes{0.1834346424956498, 0.5255324099163290,
                                                 0.7966664774136267, 0.9602898564975363};
    static constexpr std::array<double, 4> weights{0.3626837833783620, 0.3137066458778873,
                                                   0.2223810344533745, 0.1012285362903763};
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    double s = 0.0;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        s += weights[k] * (std::sqrt(np.R(logistic(mid + half * nodes[k]))) +
                           std::sqrt(np.R(logistic(mid - half * nodes[k]))));
    }
    return 0.5 * half * s;
}

double dx_dw_panels(const NatanzonParams& np, double w0, double w1) {
    const int panels = std::max(1, static_cast<int>(std::ceil(std::abs(w1 - w0) / 0.125)));
    const double dw = (w1 - w0) / panels;
    double s = 0.0;
    for (int k = 0; k < panels; ++k)
        s += dx_dw_integral(np, w0 + k * dw, w0 + (k + 1) * dw);
    return s;
}

// Dormand-Prince 5(4) for the scalar autonomous ODE w' = rate(w).
class DormandPrince {
public:
    explicit DormandPrince(const NatanzonParams& np) : np_(np) {}

    // Advances w from x to x_end (either direction); returns accepted step count.
    int advance(double& w, double x, double x_end, double& h_guess) const {
        int accepted = 0;
        const double dir = x_end >= x ? 1.0 : -1.0;
        double h = dir * std::min(std::abs(h_guess), std::abs(x_end - x));
        int guard = 0;
        while (dir * (x_end - x) > 0.0) {
            if (++guard > 1000000)
                throw NumericalFailure("natanzon_z: step budget exhausted");
            if (dir * (x + h - x_end) > 0.0)
                h = x_end - x;
            const double k1 = rate(w);
            const double k2 = rate(w + h * (1.0 / 5.0) * k1);
            const double k3 = rate(w + h * (3.0 / 40.0 * k1 + 9.0 / 40.0 * k2));
            const double k4 = rate(w + h * (44.0 / 45.0 * k1 - 56.0 / 15.0 * k2 + 32.0 / 9.0 * k3));
            const double k5 = rate(w + h * (19372.0 / 6561.0 * k1 - 25360.0 / 2187.0 * k2 +
                                            64448.0 / 6561.0 * k3 - 212.0 / 729.0 * k4));
            const double k6 = rate(w + h * (9017.0 / 3168.0 * k1 - 355.0 / 33.0 * k2 +
                                            46732.0 / 5247.0 * k3 + 49.0 / 176.0 * k4 -
                                            5103.0 / 18656.0 * k5));
            const double w5 = w + h * (35.0 / 384.0 * k1 + 500.0 / 1113.0 * k3 + 125.0 / 192.0 * k4 -
                                       2187.0 / 6784.0 * k5 + 11.0 / 84.0 * k6);
            const double k7 = rate(w5);
            const double err = h * (71.0 / 57600.0 * k1 - 71.0 / 16695.0 * k3 + 71.0 / 1920.0 * k4 -
                                    17253.0 / 339200.0 * k5 + 22.0 / 525.0 * k6 - 1.0 / 40.0 * k7);
            const double scale = tol_ * (1.0 + std::abs(w5));
            const double ratio = std::abs(err) / scale;
            if (ratio <= 1.0) {
                x += h;
                w = w5;
                ++accepted;
            }
            const double factor = ratio == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(ratio, -0.2), 0.2, 5.0);
            h *= factor;
            h_guess = h;
        }
        return accepted;
    }

private:
    double rate(double w) const { return logit_rate(np_, w); }

    const NatanzonParams& np_;
    double tol_ = 1e-14;
};

} // namespace

SampledZ natanzon_z(const NatanzonParams& np, const Grid& grid, double x0) {
    check_positive_R(np);
    SampledZ out;
    out.x = grid.points();
    out.z.assign(grid.size(), 0.0);
    out.x0 = x0;
    out.steps = 0;
    std::vector<double> w(grid.size(), 0.0);
    const DormandPrince dp(np);

    std::size_t first_right = 0;
    while (first_right < grid.size() && out.x[first_right] < x0)
        ++first_right;

    double wcur = 0.0, xcur = x0, hg = 1e-2;
    for (std::size_t i = first_right; i < grid.size(); ++i) {
        out.steps += dp.advance(wcur, xcur, out.x[i], hg);
        xcur = out.x[i];
        w[i] = wcur;
    }
    wcur = 0.0;
    xcur = x0;
    hg = 1e-2;
    for (std::size_t i = first_right; i-- > 0;) {
        out.steps += dp.advance(wcur, xcur, out.x[i], hg);
        xcur = out.x[i];
        w[i] = wcur;
    }

    // Back-substitution into the integral form x(w) - x0 = int_0^w (dx/dw) du, accumulated
    // outward from the anchor between consecutive samples.
    out.residual = 0.0;
    auto check = [&](std::size_t i, double xq) {
        const double z = logistic(w[i]);
        out.z[i] = z;
        const double zp = 2.0 * z * (1.0 - z) / std::sqrt(np.R(z));
        out.residual = std::max(out.residual, std::abs(xq - (out.x[i] - x0)) * zp);
    };
    double xq = 0.0, wprev = 0.0;
    for (std::size_t i = first_right; i < grid.size(); ++i) {
        xq += dx_dw_panels(np, wprev, w[i]);
        wprev = w[i];
        check(i, xq);
    }
    xq = 0.0;
    wprev = 0.0;
    for (std::size_t i = first_right; i-- > 0;) {
        xq += dx_dw_panels(np, wprev, w[i]);
        wprev = w[i];
        check(i, xq);
    }
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(w[i] > w[i - 1]) || out.z[i] < out.z[i - 1])
            throw NumericalFailure("natanzon_z: sampled map is not strictly increasing");
    return out;
}

double natanzon_x_of_z(const NatanzonParams& np, double z, double x0) {
    check_positive_R(np);
    if (!(z > 0.0 && z < 1.0))
        throw InvalidParameter("natanzon_x_of_z needs z in (0,1)");
    return x0 + dx_dw_panels(np, 0.0, std::log(z / (1.0 - z)));
}

double natanzon_potential_z(const NatanzonParams& np, double z) {
    const ZMap law = natanzon_law(np);
    const double f = law.phi(z), fz = law.dphi(z), fzz = law.d2phi(z);
    // -z'''/(2z') + (3/4)(z''/z')^2 = phi_z^2/4 - phi phi_zz/2
    const double schwarz = 0.25 * fz * fz - 0.5 * f * fzz;
    return schwarz + (np.f * z * (z - 1.0) + np.h0 * (1.0 - z) + np.h1 * z) / np.R(z);
}

std::vector<double> natanzon_potential(const NatanzonParams& np, const SampledZ& map) {
    std::vector<double> v;
    v.reserve(map.z.size());
    for (double z : map.z)
        v.push_back(natanzon_potential_z(np, z));
    return v;
}

std::optional<NatanzonExponents> natanzon_exponents(const NatanzonParams& np, double E) {
    const double ra = np.f + 1.0 - np.a * E;
    const double rb = np.h0 + 1.0 - np.c0 * E;
    const double rd = np.h1 + 1.0 - np.c1 * E;
    if (ra < 0.0 || rb < 0.0 || rd < 0.0)
        return std::nullopt;
    return NatanzonExponents{std::sqrt(ra), std::sqrt(rb), std::sqrt(rd)};
}

std::optional<double> energy_condition_mismatch(const NatanzonParams& np, int n, double E) {
    const auto e = natanzon_exponents(np, E);
    if (!e)
        return std::nullopt;
    return e->alpha - e->beta - e->delta - (2.0 * n + 1.0);
}

double natanzon_threshold(const NatanzonParams& np) {
    double thr = std::min((np.h0 + 1.0) / np.c0, (np.h1 + 1.0) / np.c1);
    if (np.a > 0.0)
        thr = std::min(thr, (np.f + 1.0) / np.a);
    return thr;
}

std::vector<NatanzonLevel> natanzon_energies(const NatanzonParams& np, int n_max) {
    check_positive_R(np);
    std::vector<NatanzonLevel> levels;
    const double thr = natanzon_threshold(np);
    const double scale = std::max(1.0, std::abs(thr));
    for (int n = 0; n <= n_max; ++n) {
        double hi = thr - 1e-12 * scale;
        const auto m_hi = energy_condition_mismatch(np, n, hi);
        if (!m_hi || *m_hi <= 0.0)
            break;
        double step = 1e-3 * scale;
        double lo = hi;
        bool bracketed = false;
        for (int k = 0; k < 200; ++k) {
            lo = hi - step;
            const auto m_lo = energy_condition_mismatch(np, n, lo);
            if (!m_lo)
                break;
            if (*m_lo < 0.0) {
                bracketed = true;
                break;
            }
            hi = lo;
            step *= 2.0;
        }
        if (!bracketed)
            break;
        for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++it) {
            const double mid = 0.5 * (lo + hi);
            (*energy_condition_mismatch(np, n, mid) < 0.0 ? lo : hi) = mid;
        }
        const double E = 0.5 * (lo + hi);
        const auto e = *natanzon_exponents(np, E);
        levels.push_back({n, E, e, std::abs(e.alpha - e.beta - e.delta - (2.0 * n + 1.0))});
    }
    return levels;
}

double hypergeometric_terminating(int n, double b, double c, double z) {
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < n; ++k) {
        term *= (k - n) * (b + k) / ((c + k) * (k + 1.0)) * z;
        sum += term;
    }
    return sum;
}

double natanzon_psi_z(const NatanzonParams& np, const NatanzonLevel& level, double z) {
    const auto& e = level.exps;
    const double F = hypergeometric_terminating(level.n, e.alpha - level.n, e.beta + 1.0, z);
    return std::pow(np.R(z), 0.25) * std::pow(1.0 - z, 0.5 * e.delta) *
           std::pow(z, 0.5 * e.beta) * F;
}

} // namespace cesolve
