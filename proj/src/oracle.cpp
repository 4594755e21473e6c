#include "cesolve/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cesolve/errors.hpp"
#include "cesolve/wavefunction.hpp"

namespace cesolve {

DiscreteHamiltonian::DiscreteHamiltonian(std::vector<double> potential, double h, Scheme scheme)
    : V_(std::move(potential)), h_(h), scheme_(scheme) {
    if (V_.empty())
        throw InvalidParameter("empty Hamiltonian");
}

std::vector<double> DiscreteHamiltonian::shifted_diagonal(double E) const {
    const double kin = 2.0 / (h_ * h_);
    const double c = h_ * h_ / 12.0;
    std::vector<double> d(V_.size());
    for (std::size_t i = 0; i < V_.size(); ++i) {
        const double u = V_[i] - E;
        d[i] = kin + (scheme_ == Scheme::Numerov ? u / (1.0 - c * u) : u);
    }
    return d;
}

std::size_t DiscreteHamiltonian::count_below(double E) const {
    if (scheme_ == Scheme::Numerov) {
        const double c = h_ * h_ / 12.0;
        for (double v : V_)
            if (!(1.0 - c * (v - E) > 0.0))
                throw NumericalFailure("Numerov count: energy too far below the potential for this step");
    }
    const std::vector<double> d = shifted_diagonal(E);
    const double e2 = off_diagonal() * off_diagonal();
    const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
    std::size_t count = 0;
    double q = d[0];
    for (std::size_t i = 0;;) {
        if (q == 0.0)
            q = -tiny;
        if (q < 0.0)
            ++count;
        if (++i == d.size())
            break;
        q = d[i] - e2 / q;
    }
    return count;
}

namespace {

// Tridiagonal solve with partial pivoting (constant off-diagonal e).
std::vector<double> solve_tridiagonal(const std::vector<double>& diag, double e,
                                      std::vector<double> rhs) {
    const std::size_t n = diag.size();
    // Row i holds (l, d, u, uu) bands after pivoting.
    std::vector<double> d(diag), u(n, e), uu(n, 0.0), l(n, e);
    std::vector<int> piv(n, 0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(l[i + 1]) > std::abs(d[i])) {
            // swap rows i and i+1
            std::swap(d[i], l[i + 1]);
            std::swap(u[i], d[i + 1]);
            uu[i] = u[i + 1];
            u[i + 1] = 0.0;
            std::swap(rhs[i], rhs[i + 1]);
            piv[i] = 1;
        }
        if (d[i] == 0.0)
            d[i] = std::numeric_limits<double>::epsilon();
        const double m = l[i + 1] / d[i];
        d[i + 1] -= m * u[i];
        u[i + 1] -= m * uu[i];
        rhs[i + 1] -= m * rhs[i];
    }
    if (d[n - 1] == 0.0)
        d[n - 1] = std::numeric_limits<double>::epsilon();
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = rhs[i];
        if (i + 1 < n)
            s -= u[i] * x[i + 1];
        if (i + 2 < n)
            s -= uu[i] * x[i + 2];
        x[i] = s / d[i];
    }
    return x;
}

void normalize_max(std::vector<double>& v) {
    double m = 0.0;
    for (double x : v)
        m = std::max(m, std::abs(x));
    if (m > 0.0)
        for (double& x : v)
            x /= m;
}

} // namespace

std::vector<double> DiscreteHamiltonian::eigenvector(double E) const {
    const std::vector<double> d = shifted_diagonal(E);
    const double e = off_diagonal();
    const std::size_t n = d.size();
    // deterministic start vector
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = 1.0 + 0.5 * std::sin(0.7 * static_cast<double>(i) + 0.3);
    normalize_max(v);
    bool converged = false;
    for (int it = 0; it < 8; ++it) {
        std::vector<double> next = solve_tridiagonal(d, e, v);
        normalize_max(next);
        double diff = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            diff = std::max(diff, std::min(std::abs(next[i] - v[i]), std::abs(next[i] + v[i])));
        v = std::move(next);
        if (diff < 1e-12 && it > 0) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw NumericalFailure("inverse iteration did not converge");
    if (scheme_ == Scheme::Numerov) {
        const double c = h_ * h_ / 12.0;
        for (std::size_t i = 0; i < n; ++i)
            v[i] /= (1.0 - c * (V_[i] - E));
    }
    return v;
}

DiscreteHamiltonian build_hamiltonian(const std::function<double(double)>& V, const Grid& grid,
                                      Scheme scheme) {
    std::vector<double> pot;
    pot.reserve(grid.size() - 2);
    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
        const double v = V(grid[i]);
        if (!std::isfinite(v) || std::abs(v) > max_potential_magnitude)
            throw InvalidParameter("potential is singular on the grid at x = " +
                                   std::to_string(grid[i]));
        pot.push_back(v);
    }
    return DiscreteHamiltonian(std::move(pot), grid.h(), scheme);
}

DiscreteHamiltonian build_hamiltonian(const std::vector<double>& sampled, const Grid& grid,
                                      Scheme scheme) {
    if (sampled.size() != grid.size())
        throw InvalidParameter("sampled potential does not match the grid");
    return build_hamiltonian([&](double x) {
        const auto i = static_cast<std::size_t>(std::llround((x - grid.x_min()) / grid.h()));
        return sampled[i];
    }, grid, scheme);
}

namespace {

constexpr int bisection_budget = 300;

struct Bounds {
    double lo;
    double hi;
};

Bounds spectrum_bounds(const DiscreteHamiltonian& H, std::size_t k) {
    const auto& V = H.potential();
    const double vmin = *std::min_element(V.begin(), V.end());
    double lo = vmin - 1.0;
    if (H.count_below(lo) != 0)
        throw NumericalFailure("Sturm count nonzero below min V");
    double step = 1.0;
    double hi = vmin + step;
    for (int it = 0; H.count_below(hi) < k; ++it) {
        if (it > 200)
            throw NumericalFailure("could not bracket the requested eigenvalues");
        step *= 2.0;
        hi = vmin + step;
    }
    return {lo, hi};
}

double bisect_eigenvalue(const DiscreteHamiltonian& H, std::size_t index, Bounds b) {
    // smallest E with count_below(E) > index
    double lo = b.lo, hi = b.hi;
    for (int it = 0; it < bisection_budget; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= 1e-15 * std::max({1.0, std::abs(lo), std::abs(hi)}))
            return mid;
        (H.count_below(mid) > index ? hi : lo) = mid;
    }
    throw NumericalFailure("eigenvalue bisection exceeded its iteration budget");
}

} // namespace

std::vector<double> lowest_eigenvalues(const DiscreteHamiltonian& H, std::size_t k) {
    if (k < 1 || k > H.dimension())
        throw InvalidParameter("requested eigenvalue count out of range");
    const Bounds b = spectrum_bounds(H, k);
    std::vector<double> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
        out.push_back(bisect_eigenvalue(H, i, b));
    return out;
}

std::vector<Eigenpair> lowest_eigenpairs(const DiscreteHamiltonian& H, std::size_t k) {
    if (k < 1 || k > 10)
        throw InvalidParameter("lowest_eigenpairs supports 1 <= k <= 10");
    const std::vector<double> energies = lowest_eigenvalues(H, k);
    std::vector<Eigenpair> out;
    for (double E : energies) {
        std::vector<double> inner = H.eigenvector(E);
        std::vector<double> full(inner.size() + 2, 0.0);
        std::copy(inner.begin(), inner.end(), full.begin() + 1);
        double norm = 0.0, vmax = 0.0;
        for (double v : full) {
            norm += v * v;
            vmax = std::max(vmax, std::abs(v));
        }
        const double scale = 1.0 / std::sqrt(norm * H.h());
        const auto first = std::find_if(full.begin(), full.end(),
                                        [&](double v) { return std::abs(v) > 1e-8 * vmax; });
        const double sign = (first != full.end() && *first < 0.0) ? -1.0 : 1.0;
        for (double& v : full)
            v *= sign * scale;
        out.push_back({E, std::move(full)});
    }
    return out;
}

Grid default_dkv_grid() { return Grid(default_x_min, default_x_max, default_h); }

SpectrumReport verify_spectrum(const DkvParams& p, const std::vector<BoundState>& analytic,
                               const Grid& grid, const OracleTolerances& tol, Scheme scheme) {
    SpectrumReport rep{};
    rep.continuum_edge = std::min(0.0, p.A() - p.B() - 0.75);
    const DiscreteHamiltonian H =
        build_hamiltonian([&](double x) { return eval_dkv(p, DkvForm::V1, x); }, grid, scheme);
    rep.oracle_count = H.count_below(rep.continuum_edge);
    rep.analytic_count = analytic.size();
    rep.count_ok = rep.oracle_count == rep.analytic_count;

    std::vector<Eigenpair> pairs;
    const std::size_t k = std::min<std::size_t>(10, std::max(rep.oracle_count, analytic.size()));
    if (k > 0)
        pairs = lowest_eigenpairs(H, k);

    rep.passed = rep.count_ok;
    for (const BoundState& s : analytic) {
        LevelCheck lc{};
        lc.n = s.n;
        lc.E_analytic = s.E;
        lc.E_oracle = std::numeric_limits<double>::quiet_NaN();
        lc.delta_E = std::numeric_limits<double>::infinity();
        lc.nodes_analytic = -1;
        lc.normalizable = s.a > 0.5 && s.alpha > 0.0;
        const auto idx = static_cast<std::size_t>(s.n);
        if (idx < pairs.size() && idx < rep.oracle_count) {
            lc.E_oracle = pairs[idx].energy;
            lc.delta_E = std::abs(lc.E_oracle - s.E);
            if (lc.normalizable) {
                const WavefunctionEval psi(s, grid);
                const auto& a = psi.samples();
                std::vector<double> prod(a.size());
                for (std::size_t i = 0; i < a.size(); ++i)
                    prod[i] = a[i] * pairs[idx].vector[i];
                lc.overlap = std::abs(simpson(prod, grid.h()));
                lc.nodes_analytic = count_sign_changes(a).count;
            }
        }
        lc.passed = lc.normalizable && lc.delta_E < tol.energy && lc.overlap > 1.0 - tol.overlap &&
                    lc.nodes_analytic == s.n;
        rep.passed = rep.passed && lc.passed;
        rep.levels.push_back(lc);
    }
    return rep;
}

} // namespace cesolve
