#ifndef JSCC_SWEEP_HPP
#define JSCC_SWEEP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "jscc/cognitive.hpp"
#include "jscc/model.hpp"

namespace jscc {

/// -10 log10(x); +inf at x = 0.
double to_db(double linear);

using Cell = std::variant<double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// One front-end request: a single sweep axis (the region and coexist
/// commands sweep internally), echoed in full into the output.
struct SweepRequest {
    enum class Command { Bounds, Schemes, Mismatch, Region, Coexist, Verify };
    Command command = Command::Bounds;

    // point-to-point parameters
    double sigma_v2 = 1.0;
    double sigma_s2 = 1.0;
    double rho = 0.3;
    double p = 10.0;
    double n = 1.0;

    // sweep axis: "snr_db" or "rho" for bounds/schemes; mismatch sweeps
    // the actual SNR; coexist sweeps rho
    std::string axis = "snr_db";
    double from = 0.0;
    double to = 20.0;
    int points = 41;

    // schemes
    std::string scheme = "all";
    bool optimize = false;
    std::optional<double> gamma;
    std::optional<double> pa;

    // mismatch
    double design_snr_db = 10.0;

    // cognitive radio
    double p1 = 1.0, p2 = 1.0;
    double h1 = 0.5, h2 = 0.5;
    double n1 = 1.0, n2 = 1.0;
    double sigma_v1_2 = 1.0, sigma_v2_2 = 1.0;
    std::optional<std::string> regime;
    RegionGrid region_grid;

    // verify
    std::uint64_t seed = 1;
    std::size_t samples = 1'000'000;
    int tuples = 100;

    // output
    std::string out;  // empty writes to stdout
    std::string format = "csv";
};

/// Computes the records for a request. Throws on invalid requests,
/// infeasible constraints, and non-finite results.
Table build_table(const SweepRequest& request);

std::string to_csv(const Table& table);
std::string to_json(const SweepRequest& request, const Table& table);

/// Joins a relative output path against the JSCC_OUT_DIR environment
/// variable when it is set.
std::string resolve_output_path(const std::string& out);

struct RunResult {
    int exit_code;
    std::string message;  // single-line error when exit_code != 0
};

/// Executes the request and writes the table to the resolved output.
RunResult run(const SweepRequest& request);

}  // namespace jscc

#endif
