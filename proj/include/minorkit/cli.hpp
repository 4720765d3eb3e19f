#pragma once

/**
 * @file cli.hpp
 * @brief Command-line front end: configuration, dispatch, report emission.
 *
 * Commands:
 *   verify johnson|lemmas|bt|specialization|accretive
 *   repro remark45
 *   search complex
 *   bench det
 * Global flags --seed, --out, --format json|text may appear anywhere.
 *
 * Exit status: 0 all claims verified (search and bench: run completed),
 * 1 some claim refuted, 2 numeric non-convergence, 64 usage error,
 * 65 input error, 70 internal error.
 */

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "minorkit/rng.hpp"

namespace minorkit {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitNumeric = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitInput = 65;
inline constexpr int kExitInternal = 70;

enum class OutputFormat { json, text };

struct RunConfig {
    std::string command;    // verify, repro, search, bench
    std::string subcommand; // johnson, lemmas, ..., remark45, complex, det
    std::size_t n = 8;      // order for johnson / lemmas
    std::size_t max_n = 8;  // symbolic cap
    std::size_t m = 7;      // specialization order
    std::size_t dim = 5;    // bt order, accretive / search max order
    std::size_t trials = 50;
    std::size_t iters = 100000;
    std::size_t order = 6; // bench
    std::string mode = "symbolic";
    std::string scalar = "rat"; // bt: rat|real; bench: int|poly
    std::string algo = "bareiss";
    std::optional<double> tol;
    std::optional<std::string> init_path;
    std::uint64_t seed = kDefaultSeed;
    std::optional<std::string> out_path;
    OutputFormat format = OutputFormat::json;
};

/// Executes a validated config, writing the report stream to `out`.
int run(const RunConfig& config, std::ostream& out);

/// Parses argv-style arguments (without the program name) and runs them.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace minorkit
