#pragma once

// Command-line front end. Each command has a pure table/report builder and a
// thin I/O wrapper; run() dispatches argv onto them.

#include "tsallis/csv.hpp"
#include "tsallis/qubit.hpp"

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace tsallis::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitUsage = 2,
    kExitDomain = 3,
    kExitIo = 4,
};

/// Raised for malformed user input (exit code 2).
class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using StateSpec = std::variant<PureStateAngles, BlochVector>;

/// Parses "angles:<tau>,<phi>" or "bloch:<bx>,<by>,<bz>". Malformed text
/// raises usage_error; an over-long Bloch vector raises std::domain_error.
StateSpec parse_state_spec(const std::string& text);

/// Parses a comma-separated list of reals.
std::vector<double> parse_alpha_list(const std::string& text);

/// Human-readable evaluation report for `eval`.
void write_eval_report(const StateSpec& state, double alpha, double flag_tolerance,
                       std::ostream& out);

void write_bounds_report(double alpha, std::ostream& out);
CsvTable bounds_table(double alpha);

/// alpha,band_low,band_high on `steps` evenly spaced orders; the last row is
/// exactly alpha_max. Throws usage_error for invalid ranges.
CsvTable band_table(double alpha_min, double alpha_max, int steps);

/// alpha,r_alpha for alpha = 1 and integers 2..10.
CsvTable rtable();

/// check,alpha,status,observed,expected,tolerance.
CsvTable verify_table(const std::vector<double>& alphas, int grid_resolution,
                      std::uint64_t seed, bool* all_passed);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tsallis::cli
