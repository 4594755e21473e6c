#include "cesolve/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>

#include "cesolve/errors.hpp"

namespace cesolve {

JacobiSpec jacobi_parameters(const BoundState& state) {
    return {state.n, state.alpha, state.beta};
}

LogValue psi_log_eval(const BoundState& state, double x) {
    const double z = z_of_x(x);
    const double P = jacobi_eval(jacobi_parameters(state), z);
    if (P == 0.0)
        return {0.0, -std::numeric_limits<double>::infinity()};
    const double l = 0.5 * log_z(x) + 0.5 * state.beta * std::log1p(z) +
                     0.5 * state.alpha * log_z_minus_1(x) + std::log(std::abs(P));
    return {P > 0.0 ? 1.0 : -1.0, l};
}

double psi_eval(const BoundState& state, double x) {
    const LogValue v = psi_log_eval(state, x);
    return v.sign * std::exp(v.log_abs);
}

double chi_eval(const BoundState& state, double r) {
    if (!(r > 0.0))
        throw InvalidParameter("chi defined for r > 0");
    const double zm1 = 2.0 / std::expm1(2.0 * r);  // coth r - 1
    const double z = 1.0 + zm1;
    const double P = jacobi_eval(jacobi_parameters(state), z);
    return std::pow(zm1, 0.5 * state.alpha) * std::pow(z + 1.0, 0.5 * state.beta) * P;
}

double node_position(double c) {
    if (!(c > 1.0))
        throw InvalidParameter("node image requires c > 1");
    return -0.5 * std::log((c - 1.0) * (c + 1.0));
}

namespace {

struct LogSamples {
    std::vector<double> sign;
    std::vector<double> log_abs;
    double max_log;
};

LogSamples sample_log(const BoundState& state, const Grid& grid) {
    LogSamples s{std::vector<double>(grid.size()), std::vector<double>(grid.size()),
                 -std::numeric_limits<double>::infinity()};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const LogValue v = psi_log_eval(state, grid[i]);
        s.sign[i] = v.sign;
        s.log_abs[i] = v.log_abs;
        s.max_log = std::max(s.max_log, v.log_abs);
    }
    return s;
}

} // namespace

WavefunctionEval::WavefunctionEval(const BoundState& state, const Grid& grid)
    : state_(state), grid_(grid) {
    const LogSamples ls = sample_log(state, grid);
    std::vector<double> sq(grid.size());
    samples_.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        samples_[i] = ls.sign[i] * std::exp(ls.log_abs[i] - ls.max_log);
        sq[i] = samples_[i] * samples_[i];
    }
    const double integral = simpson(sq, grid.h());
    if (!(integral > 0.0) || !std::isfinite(integral))
        throw NumericalFailure("wavefunction norm is not finite");
    const double scale = 1.0 / std::sqrt(integral);
    for (double& v : samples_)
        v *= scale;
    log_norm_ = ls.max_log + 0.5 * std::log(integral);
}

double WavefunctionEval::operator()(double x) const {
    const LogValue v = psi_log_eval(state_, x);
    return v.sign * std::exp(v.log_abs - log_norm_);
}

double normalize(const BoundState& state, const Grid& grid) {
    return WavefunctionEval(state, grid).log_norm();
}

NodeCount count_sign_changes(const std::vector<double>& f) {
    NodeCount out{0, false};
    const std::size_t n = f.size();
    std::size_t last = n;  // index of the last nonzero sample
    for (std::size_t i = 0; i < n; ++i) {
        if (f[i] == 0.0)
            continue;
        if (last != n && (f[i] > 0.0) != (f[last] > 0.0)) {
            ++out.count;
            if (last < 2 || i + 2 >= n)
                out.near_boundary = true;
        }
        last = i;
    }
    return out;
}

NodeCount node_count(const BoundState& state, const Grid& grid) {
    const LogSamples ls = sample_log(state, grid);
    std::vector<double> f(ls.sign);
    // Samples far below the peak carry no reliable sign information.
    for (std::size_t i = 0; i < grid.size(); ++i)
        if (ls.log_abs[i] - ls.max_log < -600.0)
            f[i] = 0.0;
    const NodeCount nc = count_sign_changes(f);
    if (nc.near_boundary)
        std::cerr << "cesolve: sign change within two cells of the grid boundary; grid too small\n";
    return nc;
}

} // namespace cesolve
