// Acceptance criteria 1-9: one PASS/FAIL line each.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "cesolve/cesolve.hpp"

using namespace cesolve;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

int failures = 0;

void report(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = budget_s <= 0.0 || dt < budget_s;
    const bool ok = o.pass && in_time;
    failures += !ok;
    std::printf("%s [%d] %s: %s; %.3g s%s\n", ok ? "PASS" : "FAIL", id, title, o.detail.c_str(), dt,
                in_time ? "" : " (over budget)");
}

const DkvParams fig1(10.25, 12.5);
const DkvParams two_level(30.0, 32.0);

double uniform(std::mt19937_64& g, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(g);
}

} // namespace

int main() {
    report(1, "cubic roots and window, A = 10.25, B = 12.5", 1e-3, [] {
        const CubicTriple tr = make_triple(fig1, 0);
        const auto a = select_physical_root(tr);
        const double lo = 0.5, hi = std::sqrt(fig1.b());
        const double t0 = tr.roots[0].real(), t1 = tr.roots[1].real(), t2 = tr.roots[2].real();
        const bool ok = tr.all_real() && a && t1 > lo && t1 < hi && !(t0 > lo && t0 < hi) &&
                        !(t2 > lo && t2 < hi) && hi == 2.5;
        return Outcome{ok, fmt("roots %.6f %.6f %.6f", t0, t1, t2) + fmt(" window (%.1f, %.1f)", lo, hi)};
    });

    report(2, "Numerov oracle agreement, A = 10.25, B = 12.5", 10.0, [] {
        const auto levels = enumerate_levels(fig1, 50).levels;
        const Grid grid(-20.0, 60.0, 5e-3);
        const SpectrumReport r = verify_spectrum(fig1, levels, grid, {1e-4, 1e-6}, Scheme::Numerov);
        if (r.levels.empty())
            return Outcome{false, "no analytic level"};
        const LevelCheck& l = r.levels[0];
        const bool ok = l.delta_E < 1e-4 && l.overlap > 1.0 - 1e-6;
        return Outcome{ok, fmt("E0 = %.10f, |dE| = %.3g, 1 - overlap = %.3g", l.E_analytic, l.delta_E, 1.0 - l.overlap)};
    });

    report(3, "middle-root theorem over random instances", 5.0, [] {
        std::mt19937_64 g(2024);
        int instances = 0, counter = 0;
        while (instances < 10000) {
            const int n = static_cast<int>(uniform(g, 0.0, 8.0));
            const double b = uniform(g, 0.26, 500.0), A = uniform(g, -20.0, 400.0);
            const CubicTriple tr = make_triple(DkvParams(A, 2.0 * b), n);
            if (!tr.all_real() || !select_physical_root(tr))
                continue;
            ++instances;
            const RootCertificate c = root_certificate(tr);
            counter += !(c.leftmost_negative && c.rightmost_above_one);
        }
        return Outcome{counter == 0, fmt("%.0f instances, %.0f counterexamples", instances, counter)};
    });

    report(4, "mirror identity", 0.0, [] {
        std::mt19937_64 g(7);
        double worst = 0.0;
        for (int k = 0; k < 100; ++k) {
            const DkvParams p(uniform(g, -10.0, 40.0), uniform(g, 0.6, 40.0));
            const MirrorMap m = mirror_params(p);
            const GeneralCouplings v2{-m.D, 0.0, m.C, -0.75};
            for (int i = 0; i < 1000; ++i) {
                const double x = uniform(g, -30.0, 30.0);
                worst = std::max(worst, std::abs(eval_dkv(p, DkvForm::V1, x) - eval_general(v2, -x) - m.shift));
            }
        }
        return Outcome{worst < 1e-12, fmt("max residual %.3g over 1e5 samples", worst)};
    });

    report(5, "SUSY identities", 0.0, [] {
        const Grid grid(-15.0, 40.0, 1e-2);
        const BoundState g0 = enumerate_levels(fig1, 0).levels.at(0);
        const SuperpotentialSpec w0 = ground_superpotential(fig1, g0);
        const double r0 = susy_residual(w0, fig1, g0.E, grid);
        const auto levels = enumerate_levels(two_level, 10).levels;
        if (levels.size() != 2)
            return Outcome{false, "two-level set does not have two levels"};
        const BoundState& s1 = levels[1];
        const SuperpotentialSpec w1 = excited_superpotential(two_level, s1, polynomial_roots(jacobi_parameters(s1)));
        const double r1 = susy_residual(w1, two_level, s1.E, grid);
        const double g2 = susy_residual(ground_superpotential(two_level, levels[0]), two_level, levels[0].E, grid);
        const double rel = std::abs(w0.B1 * (1.0 + 2.0 * w0.C0) - fig1.B()) / fig1.B();
        const bool ok = r0 < 1e-9 && g2 < 1e-9 && r1 < 1e-6 && rel < 1e-12;
        return Outcome{ok, fmt("ground %.3g, excited %.3g, B1 relation %.3g", std::max(r0, g2), r1, rel)};
    });

    report(6, "level counting", 0.0, [] {
        auto count = [](const DkvParams& p, const std::vector<BoundState>& levels) {
            double left = 1.0, right = 1.0;
            for (const BoundState& s : levels) {
                left = std::min(left, s.a - 0.5);
                right = std::min(right, s.alpha);
            }
            const Grid grid(-std::max(20.0, 40.0 / left), std::max(60.0, 40.0 / right), 1e-2);
            const auto H = build_hamiltonian([&](double x) { return eval_dkv(p, DkvForm::V1, x); }, grid,
                                             Scheme::Numerov);
            return H.count_below(std::min(0.0, p.A() - p.B() - 0.75));
        };
        std::mt19937_64 g(99);
        int mismatch = 0;
        std::size_t total = 0;
        for (int i = 0; i < 50; ++i) {
            const DkvParams p(uniform(g, 0.0, 80.0), uniform(g, 1.0, 60.0));
            const auto levels = enumerate_levels(p, 50).levels;
            total += levels.size();
            mismatch += count(p, levels) != levels.size();
        }
        const std::size_t fig = count(fig1, enumerate_levels(fig1, 50).levels);
        return Outcome{mismatch == 0 && fig == 1,
                       fmt("%.0f mismatches over 50 sets (%.0f levels); reference count %.0f", mismatch,
                           static_cast<double>(total), static_cast<double>(fig))};
    });

    report(7, "transformation classes", 0.0, [] {
        const TransformClass piv{TransformKind::PIV, 1.0, 0.0};
        const double cls = class_ode_residual(piv, class_map(piv), Grid(-3.0, 3.0, 1e-3));
        double master = 0.0, liou = 0.0;
        const Grid xg(-10.0, 6.0, 1e-2), rg(1e-2, 10.0, 1e-2);
        for (const DkvParams& p : {fig1, two_level}) {
            for (const BoundState& s : enumerate_levels(p, 10).levels) {
                for (std::size_t i = 0; i < xg.size(); ++i) {
                    const double x = xg[i];
                    master = std::max(master, std::abs(jacobi_master_eval(s.alpha, s.beta, s.n, dkv_map(), x) -
                                                       piv_master_eval(s.alpha, s.beta, s.n, z_of_x(x))));
                }
                liou = std::max(liou, liouville_residual(p, s, rg));
            }
        }
        const bool ok = cls < 1e-12 && master < 1e-9 && liou < 1e-8;
        return Outcome{ok, fmt("class law %.3g, Jacobi/PIV forms %.3g, Liouville %.3g", cls, master, liou)};
    });

    report(8, "Natanzon logistic case", 0.0, [] {
        const NatanzonParams np{35.0, 0.0, 0.0, 0.0, 1.0, 1.0};
        const Grid grid(-40.0, 40.0, 1e-2);
        const auto levels = natanzon_energies(np, 50);
        const SampledZ m = natanzon_z(np, grid);
        const auto H = build_hamiltonian(natanzon_potential(np, m), grid, Scheme::Numerov);
        const auto oracle = lowest_eigenvalues(H, levels.size());
        double dE = 0.0, res = 0.0;
        for (std::size_t i = 0; i < levels.size(); ++i) {
            dE = std::max(dE, std::abs(oracle[i] - levels[i].E));
            res = std::max(res, levels[i].residual);
        }
        const bool ok = !levels.empty() && dE < 1e-4 && res < 1e-10 && m.residual < 1e-10 &&
                        H.count_below(natanzon_threshold(np)) == levels.size();
        return Outcome{ok, fmt("%.0f levels, max |dE| %.3g, energy condition %.3g", static_cast<double>(levels.size()), dE, res) +
                               fmt(", z-ODE %.3g", m.residual)};
    });

    report(9, "negative controls", 0.0, [] {
        const Grid grid(-20.0, 60.0, 5e-3);
        const CubicTriple tr = make_triple(fig1, 0);
        bool rejected = true;
        std::string why;
        for (int k : {0, 2}) {
            const BoundState bad = make_state(fig1, 0, tr.roots[static_cast<std::size_t>(k)].real());
            const SpectrumReport r = verify_spectrum(fig1, {bad}, grid);
            const LevelCheck& l = r.levels.at(0);
            const bool no_match = !(l.delta_E < 1e-4 && l.overlap > 1.0 - 1e-6);
            rejected = rejected && !r.passed && (no_match || !l.normalizable);
            why += (k == 0 ? "leftmost" : " rightmost");
            why += fmt(" (|dE| %.3g, normalizable %.0f)", l.delta_E, l.normalizable ? 1.0 : 0.0);
        }
        const Grid sg(-15.0, 40.0, 1e-2);
        const BoundState s1 = enumerate_levels(two_level, 10).levels.at(1);
        const SuperpotentialSpec w1 = excited_superpotential(two_level, s1, polynomial_roots(jacobi_parameters(s1)));
        const double bare = susy_residual(without_sum(w1), two_level, s1.E, sg);
        const bool margin = bare > 1e-2;
        return Outcome{rejected && margin, why + fmt("; excited residual without sum %.3g", bare)};
    });

    std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
