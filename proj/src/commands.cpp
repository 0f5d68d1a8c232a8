#include "tsallis/commands.hpp"

#include "tsallis/bounds.hpp"
#include "tsallis/verify.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>

namespace tsallis::cli {

namespace {

double parse_real(const std::string& text) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || text.empty() || !std::isfinite(v)) {
        throw usage_error("not a number: '" + text + "'");
    }
    return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return parts;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string opt_real(const std::optional<double>& v) { return v ? format_real(*v) : ""; }

TsallisParam checked_alpha(double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw usage_error("alpha must be a finite positive number");
    }
    return TsallisParam(alpha);
}

MeasurementTriple triple_of(const StateSpec& state) {
    return std::visit(
        [](const auto& s) {
            if constexpr (std::is_same_v<std::decay_t<decltype(s)>, PureStateAngles>) {
                return probs_from_angles(s);
            } else {
                return probs_from_bloch(s);
            }
        },
        state);
}

void write_table(const CsvTable& table, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        table.write(out);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw std::ios_base::failure("cannot open '" + path + "' for writing");
    }
    table.write(file);
    file.flush();
    if (!file) {
        throw std::ios_base::failure("write to '" + path + "' failed");
    }
}

}  // namespace

StateSpec parse_state_spec(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw usage_error("state must be 'angles:<tau>,<phi>' or 'bloch:<bx>,<by>,<bz>'");
    }
    const std::string kind = text.substr(0, colon);
    const std::vector<std::string> parts = split(text.substr(colon + 1), ',');
    if (kind == "angles") {
        if (parts.size() != 2) throw usage_error("angles state needs exactly 2 components");
        return PureStateAngles(parse_real(parts[0]), parse_real(parts[1]));
    }
    if (kind == "bloch") {
        if (parts.size() != 3) throw usage_error("bloch state needs exactly 3 components");
        return BlochVector::make(parse_real(parts[0]), parse_real(parts[1]), parse_real(parts[2]));
    }
    throw usage_error("unknown state kind '" + kind + "'");
}

std::vector<double> parse_alpha_list(const std::string& text) {
    std::vector<double> out;
    for (const std::string& p : split(text, ',')) {
        out.push_back(checked_alpha(parse_real(p)).alpha());
    }
    return out;
}

void write_eval_report(const StateSpec& state, double alpha_value, double flag_tolerance,
                       std::ostream& out) {
    const TsallisParam alpha = checked_alpha(alpha_value);
    const MeasurementTriple t = triple_of(state);
    const double hx = tsallis_entropy(t.px, alpha);
    const double hy = tsallis_entropy(t.qy, alpha);
    const double hz = tsallis_entropy(t.rz, alpha);
    const double sum = hx + hy + hz;
    const BoundSet b = bound_set(alpha);

    out << "alpha: " << format_real(alpha.alpha()) << '\n';
    const auto pair_line = [&](const char* name, const ProbPair& p, double h) {
        out << name << ": p+ = " << format_real(p.plus()) << ", p- = " << format_real(p.minus())
            << ", entropy = " << format_real(h) << '\n';
    };
    pair_line("sigma_x", t.px, hx);
    pair_line("sigma_y", t.qy, hy);
    pair_line("sigma_z", t.rz, hz);
    out << "sum: " << format_real(sum) << '\n';
    out << "lower_bound: " << format_real(b.lower) << (b.lower_is_tight ? " (tight)" : " (not tight)")
        << '\n';
    out << "upper_bound_mixed: " << format_real(b.upper_mixed) << '\n';
    if (b.upper_pure) {
        out << "upper_bound_pure: " << format_real(*b.upper_pure) << '\n';
    } else {
        out << "upper_bound_pure: empirical only\n";
    }

    std::vector<std::string> flags;
    if (b.lower_is_tight && std::abs(sum - b.lower) <= flag_tolerance) {
        flags.emplace_back("lower bound attained");
    }
    if (std::abs(sum - b.upper_mixed) <= flag_tolerance) {
        flags.emplace_back("mixed-state maximum attained");
    }
    if (b.upper_pure && std::abs(sum - *b.upper_pure) <= flag_tolerance) {
        flags.emplace_back("pure-state maximum attained (within tolerance)");
    }
    out << "flags:";
    for (std::size_t i = 0; i < flags.size(); ++i) {
        out << (i ? "; " : " ") << flags[i];
    }
    out << '\n';
}

void write_bounds_report(double alpha_value, std::ostream& out) {
    const BoundSet b = bound_set(checked_alpha(alpha_value));
    out << "alpha: " << format_real(b.alpha.alpha()) << '\n';
    out << "lower: " << format_real(b.lower) << (b.lower_is_tight ? " (tight)" : " (not tight)")
        << '\n';
    out << "upper_mixed: " << format_real(b.upper_mixed) << " (tight)\n";
    if (b.upper_pure) {
        out << "upper_pure: " << format_real(*b.upper_pure)
            << (b.upper_pure_is_tight ? " (tight)" : " (not tight)") << '\n';
        out << "h_tilde: " << format_real(*b.h_tilde) << '\n';
        out << "r_alpha: " << format_real(*b.r_alpha) << '\n';
    } else {
        out << "upper_pure: empirical only\n";
        out << "h_tilde: " << format_real(h_tilde(b.alpha)) << '\n';
        out << "r_alpha: unsupported\n";
    }
}

CsvTable bounds_table(double alpha_value) {
    const BoundSet b = bound_set(checked_alpha(alpha_value));
    CsvTable t({"alpha", "lower", "lower_tight", "upper_mixed", "upper_pure", "upper_pure_tight",
                "h_tilde", "r_alpha"});
    t.add_row({format_real(b.alpha.alpha()), format_real(b.lower), yes_no(b.lower_is_tight),
               format_real(b.upper_mixed), opt_real(b.upper_pure), yes_no(b.upper_pure_is_tight),
               opt_real(b.h_tilde), opt_real(b.r_alpha)});
    return t;
}

CsvTable band_table(double alpha_min, double alpha_max, int steps) {
    if (!(alpha_min > 0.0) || !(alpha_min < alpha_max) || !std::isfinite(alpha_max)) {
        throw usage_error("band needs 0 < alpha-min < alpha-max");
    }
    if (steps < 2) {
        throw usage_error("band needs at least 2 steps");
    }
    CsvTable t({"alpha", "band_low", "band_high"});
    for (int k = 0; k < steps; ++k) {
        const double a = k == steps - 1
                             ? alpha_max
                             : alpha_min + (alpha_max - alpha_min) * (static_cast<double>(k) / (steps - 1));
        const TsallisParam alpha(a);
        if (!has_tight_bounds(alpha)) {
            throw usage_error("band is defined only for alpha in (0, 1] and integer alpha >= 2; "
                              "got " + format_real(a));
        }
        const Band band = rescaled_band(alpha);
        t.add_row({format_real(a), format_real(band.low), format_real(band.high)});
    }
    return t;
}

CsvTable rtable() {
    CsvTable t({"alpha", "r_alpha"});
    for (int n = 1; n <= 10; ++n) {
        const TsallisParam alpha(n);
        t.add_row({format_real(n), format_real(rescaled_band(alpha).high)});
    }
    return t;
}

CsvTable verify_table(const std::vector<double>& alphas, int grid_resolution,
                      std::uint64_t seed, bool* all_passed) {
    if (grid_resolution < 2) {
        throw usage_error("grid resolution must be at least 2");
    }
    const auto results = verify::run_suite(alphas, grid_resolution, seed);
    CsvTable t({"check", "alpha", "status", "observed", "expected", "tolerance"});
    bool ok = true;
    for (const auto& r : results) {
        ok = ok && r.status != "fail";
        t.add_row({r.check, format_real(r.alpha), r.status, format_real(r.observed),
                   format_real(r.expected), format_real(r.tolerance)});
    }
    if (all_passed) *all_passed = ok;
    return t;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tsallis-entropy uncertainty and certainty bounds for the three Pauli "
                 "observables of a qubit"};
    app.require_subcommand(1);

    std::function<int()> action;

    std::string state;
    double alpha = 1.0;
    double flag_tol = 1e-6;
    auto* eval = app.add_subcommand("eval", "Evaluate the three entropies of a state");
    eval->add_option("state", state, "angles:<tau>,<phi> (radians) or bloch:<bx>,<by>,<bz>")
        ->required();
    eval->add_option("--alpha", alpha, "Entropic order")->required();
    eval->add_option("--tol", flag_tol, "Tolerance for the attainment flags");
    eval->callback([&] {
        action = [&] {
            write_eval_report(parse_state_spec(state), alpha, flag_tol, out);
            return int{kExitOk};
        };
    });

    std::string out_path;
    auto* bounds = app.add_subcommand("bounds", "Print the analytic bounds at one order");
    bounds->add_option("alpha,--alpha", alpha, "Entropic order")->required();
    bounds->add_option("--out", out_path, "Also write the bound set as CSV");
    bounds->callback([&] {
        action = [&] {
            write_bounds_report(alpha, out);
            if (!out_path.empty()) write_table(bounds_table(alpha), out_path, out);
            return int{kExitOk};
        };
    });

    double alpha_min = 0.01;
    double alpha_max = 1.0;
    int steps = 100;
    auto* band = app.add_subcommand("band", "Rescaled average-entropy band as CSV");
    band->add_option("alpha_min,--alpha-min", alpha_min)->required();
    band->add_option("alpha_max,--alpha-max", alpha_max)->required();
    band->add_option("steps,--steps", steps)->required();
    band->add_option("out,--out", out_path, "Output file (default: stdout)");
    band->callback([&] {
        action = [&] {
            write_table(band_table(alpha_min, alpha_max, steps), out_path, out);
            return int{kExitOk};
        };
    });

    auto* rt = app.add_subcommand("rtable", "Upper band endpoint for alpha = 1..10 as CSV");
    rt->add_option("out,--out", out_path, "Output file (default: stdout)");
    rt->callback([&] {
        action = [&] {
            write_table(rtable(), out_path, out);
            return int{kExitOk};
        };
    });

    std::string alpha_list = "0.5,1,2,4";
    int grid = 2001;
    std::uint64_t seed = kDefaultSeed;
    auto* ver = app.add_subcommand("verify", "Brute-force verification of every bound");
    ver->add_option("alphas,--alpha", alpha_list, "Comma-separated orders");
    ver->add_option("--grid", grid, "Grid points per axis of the reduced domain");
    ver->add_option("--seed", seed, "Seed for random state samples");
    ver->add_option("--out", out_path, "Also write the summary CSV to a file");
    ver->callback([&] {
        action = [&] {
            bool ok = false;
            const CsvTable t = verify_table(parse_alpha_list(alpha_list), grid, seed, &ok);
            t.write(out);
            if (!out_path.empty()) write_table(t, out_path, out);
            return int{ok ? kExitOk : kExitVerificationFailed};
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        return action ? action() : int{kExitUsage};
    } catch (const usage_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::ios_base::failure& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }
}

}  // namespace tsallis::cli
