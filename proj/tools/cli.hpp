#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "cesolve/natanzon.hpp"
#include "cesolve/oracle.hpp"
#include "cesolve/potential.hpp"

namespace cesolve::cli {

/// Process exit codes.
enum Exit : int { ok = 0, verification_failed = 1, invalid_parameters = 2, missing_level = 3 };

enum class OutputFormat { table, csv, json };
enum class RootChoice { middle, leftmost, rightmost };

struct GridConfig {
    double x_min = default_x_min;
    double x_max = default_x_max;
    double h = default_h;
};

struct Tolerances {
    double energy = 1e-4;
    double overlap = 1e-6;
    double susy_ground = 1e-9;
    double susy_excited = 1e-6;
    double b1_relation = 1e-12;
    double liouville = 1e-8;
    double class_ode = 1e-12;
    double master = 1e-9;
    double energy_condition = 1e-10;
    double z_ode = 1e-10;
};

struct RunConfig {
    std::string command;
    double A = 10.25;
    double B = 12.5;
    int n_max = 50;
    int level = 0;
    GridConfig grid;
    Scheme scheme = Scheme::Numerov;
    OutputFormat output = OutputFormat::table;
    Tolerances tol;
    std::optional<double> tol_override;
    RootChoice select = RootChoice::middle;
    NatanzonParams natanzon{35.0, 0.0, 0.0, 0.0, 1.0, 1.0};
    std::optional<std::string> out_path;
    std::optional<std::string> csv_out;
    bool stamp = false;
};

using json = nlohmann::ordered_json;

/// Report builders (used by the CLI and by tests). They throw InvalidParameter for bad input.
json spectrum_report(const RunConfig& cfg);
json verify_report(const RunConfig& cfg);
json natanzon_report(const RunConfig& cfg);

/// Writes (x, psi_n) as CSV. Throws MissingLevel if level n does not exist.
void write_wavefunction_csv(const RunConfig& cfg, std::ostream& os);

struct MissingLevel : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Full CLI entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// printf-style "%.17g".
std::string format_double(double v);

} // namespace cesolve::cli
