#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "qbell/classical.hpp"
#include "qbell/fourprob.hpp"
#include "qbell/kernels.hpp"

namespace qbell::cli {

/// Exit codes shared by all subcommands.
inline constexpr int kOk = 0;
inline constexpr int kValidationError = 1;   // bad input
inline constexpr int kInvariantBreach = 2;   // internal consistency check failed

struct RunConfig {
    std::string subcommand;

    // Axis configuration (table, chsh): either explicit axes or the
    // coplanar family parameterized by theta in degrees.
    std::optional<double> coplanar_theta_deg;
    std::optional<std::array<Axis, 4>> axes;

    // bell: planar angles (degrees) of the three axes a, b, c.
    std::array<double, 3> bell_angles_deg{0.0, 120.0, 60.0};
    std::optional<std::array<Axis, 3>> bell_axes;

    Symmetry symmetry = Symmetry::symmetric;

    // Interpret all input angles as polarizer angles and double them.
    bool photon = false;

    // sweep
    double theta_min_deg = 0.0;
    double theta_max_deg = 180.0;
    int steps = 181;

    // lhv
    uint64_t trials = 1000000;
    uint64_t seed = 0;
    std::string strategy = "uniform";
    int threads = 0;
    kernels::Backend backend = kernels::Backend::auto_detect;

    // audit
    std::string audit_name;

    char delimiter = ','; // ',' for csv, '\t' for tsv
};

int run_table(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_chsh(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_lhv(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_audit(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_bell(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Dispatch on cfg.subcommand.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Strategy spec parser: "uniform", "point:<four signs>", sixteen
/// comma-separated weights, or "@<path>" to read sixteen weights from a
/// file. Throws std::invalid_argument on malformed specs.
LhvStrategy parse_strategy(const std::string& spec);

/// "x,y,z" -> Axis. Throws std::invalid_argument on malformed input.
Axis parse_axis(const std::string& text);

} // namespace qbell::cli
