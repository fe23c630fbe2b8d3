// Command-line front end: parameter sweeps with CSV/JSON export.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "jscc/sweep.hpp"

namespace {

using jscc::SweepRequest;

void add_output_flags(CLI::App* cmd, SweepRequest& req) {
    cmd->add_option("--out", req.out,
                    "output path (stdout if omitted; relative paths resolve "
                    "against JSCC_OUT_DIR)");
    cmd->add_option("--format", req.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
}

void add_model_flags(CLI::App* cmd, SweepRequest& req) {
    cmd->add_option("--sigma-v2", req.sigma_v2, "source variance");
    cmd->add_option("--sigma-s2", req.sigma_s2, "interference variance");
    cmd->add_option("--rho", req.rho, "source-interference correlation");
    cmd->add_option("--n", req.n, "noise variance (linear)");
    cmd->add_option("--p", req.p, "transmit power (linear)");
}

// one sweep axis per request: either an SNR range or a rho range
void add_axis_flags(CLI::App* cmd, SweepRequest& req, double* snr_from, double* snr_to,
                    double* rho_from, double* rho_to) {
    cmd->add_option("--snr-db-from", *snr_from, "sweep start, P/N in dB");
    cmd->add_option("--snr-db-to", *snr_to, "sweep end, P/N in dB");
    cmd->add_option("--rho-from", *rho_from, "sweep start in rho");
    cmd->add_option("--rho-to", *rho_to, "sweep end in rho");
    cmd->add_option("--points", req.points, "sweep points");
}

void resolve_axis(CLI::App* cmd, SweepRequest& req, double snr_from, double snr_to,
                  double rho_from, double rho_to) {
    const bool snr = cmd->count("--snr-db-from") || cmd->count("--snr-db-to");
    const bool rho = cmd->count("--rho-from") || cmd->count("--rho-to");
    if (snr && rho) throw CLI::ValidationError("exactly one sweep axis per request");
    if (rho) {
        req.axis = "rho";
        req.from = rho_from;
        req.to = rho_to;
    } else {
        req.axis = "snr_db";
        req.from = snr_from;
        req.to = snr_to;
    }
}

void add_cognitive_flags(CLI::App* cmd, SweepRequest& req, std::string& regime,
                         int& grid_points) {
    cmd->add_option("--p1", req.p1, "primary power");
    cmd->add_option("--p2", req.p2, "secondary power");
    cmd->add_option("--h1", req.h1, "gain, user 1 at receiver 2");
    cmd->add_option("--h2", req.h2, "gain, user 2 at receiver 1");
    cmd->add_option("--n1", req.n1, "receiver 1 noise");
    cmd->add_option("--n2", req.n2, "receiver 2 noise");
    cmd->add_option("--sigma-v1-2", req.sigma_v1_2, "primary source variance");
    cmd->add_option("--sigma-v2-2", req.sigma_v2_2, "secondary source variance");
    cmd->add_option("--regime", regime, "weak|very-strong (checked against the gains)")
        ->check(CLI::IsMember({"weak", "very-strong"}));
    cmd->add_option("--grid-points", grid_points, "allocation grid points per axis");
    cmd->add_option("--rho-x-points", req.region_grid.rho_x_points, "rho_x sweep points");
    cmd->add_option("--splits", req.region_grid.split_points, "sum-rate splits per rho_x");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"distortion bounds, coding schemes, and Monte-Carlo checks for "
                 "transmission of a Gaussian source over a channel with "
                 "transmitter-known correlated interference"};
    app.require_subcommand(1);

    SweepRequest req;
    double snr_from = 0.0, snr_to = 20.0, rho_from = 0.0, rho_to = 1.0;
    double gamma = 1.0, pa = 0.0;
    int grid_points = 64;
    std::string regime;

    auto* bounds = app.add_subcommand("bounds", "outer bounds along an SNR or rho sweep");
    add_model_flags(bounds, req);
    add_axis_flags(bounds, req, &snr_from, &snr_to, &rho_from, &rho_to);
    add_output_flags(bounds, req);

    auto* schemes = app.add_subcommand("schemes", "achievable distortions along a sweep");
    add_model_flags(schemes, req);
    add_axis_flags(schemes, req, &snr_from, &snr_to, &rho_from, &rho_to);
    schemes->add_option("--scheme", req.scheme, "uncoded|naive-dpc|digital-dpc|hda|all")
        ->check(CLI::IsMember({"uncoded", "naive-dpc", "digital-dpc", "hda", "all"}));
    schemes->add_flag("--optimize", req.optimize,
                      "minimize over (gamma, pa) per point (default unless --gamma/--pa)");
    auto* sg = schemes->add_option("--gamma", gamma, "fixed mixing coefficient");
    auto* sp = schemes->add_option("--pa", pa, "fixed analog power");
    add_output_flags(schemes, req);

    auto* mismatch = app.add_subcommand(
        "mismatch", "scheme performance when the actual SNR deviates from the design");
    mismatch->add_option("--sigma-v2", req.sigma_v2, "source variance");
    mismatch->add_option("--sigma-s2", req.sigma_s2, "interference variance");
    mismatch->add_option("--rho", req.rho, "correlation");
    mismatch->add_option("--n", req.n, "design noise variance");
    mismatch->add_option("--design-snr-db", req.design_snr_db, "design SNR in dB");
    mismatch->add_option("--actual-snr-db-from", req.from, "actual SNR sweep start");
    mismatch->add_option("--actual-snr-db-to", req.to, "actual SNR sweep end");
    mismatch->add_option("--points", req.points, "sweep points");
    auto* mp = mismatch->add_option("--pa", pa, "override the design-optimal analog power");
    auto* mg = mismatch->add_option("--gamma", gamma, "mixing coefficient for --pa override");
    add_output_flags(mismatch, req);

    auto* region = app.add_subcommand("region", "inner and outer distortion-region frontiers");
    add_cognitive_flags(region, req, regime, grid_points);
    region->add_option("--rho", req.rho, "source correlation");
    add_output_flags(region, req);

    auto* coexist = app.add_subcommand(
        "coexist", "secondary distortion with the primary held at its no-secondary level");
    add_cognitive_flags(coexist, req, regime, grid_points);
    coexist->add_option("--rho-from", req.from, "rho sweep start");
    coexist->add_option("--rho-to", req.to, "rho sweep end");
    coexist->add_option("--points", req.points, "sweep points");
    add_output_flags(coexist, req);

    auto* verify = app.add_subcommand(
        "verify", "Monte-Carlo agreement checks of the closed forms on random tuples");
    verify->add_option("--seed", req.seed, "PRNG seed");
    verify->add_option("--samples", req.samples, "samples per check");
    verify->add_option("--tuples", req.tuples, "random parameter tuples");
    add_output_flags(verify, req);

    CLI11_PARSE(app, argc, argv);

    try {
        if (bounds->parsed()) {
            req.command = SweepRequest::Command::Bounds;
            resolve_axis(bounds, req, snr_from, snr_to, rho_from, rho_to);
        } else if (schemes->parsed()) {
            req.command = SweepRequest::Command::Schemes;
            resolve_axis(schemes, req, snr_from, snr_to, rho_from, rho_to);
            if (sg->count()) req.gamma = gamma;
            if (sp->count()) req.pa = pa;
        } else if (mismatch->parsed()) {
            req.command = SweepRequest::Command::Mismatch;
            req.axis = "actual_snr_db";
            if (!mismatch->count("--actual-snr-db-from")) req.from = req.design_snr_db;
            if (!mismatch->count("--actual-snr-db-to")) req.to = req.design_snr_db + 10.0;
            if (mp->count()) req.pa = pa;
            if (mg->count()) req.gamma = gamma;
        } else if (region->parsed()) {
            req.command = SweepRequest::Command::Region;
            if (!regime.empty()) req.regime = regime;
            req.region_grid.gamma_points = grid_points;
            req.region_grid.pa_points = grid_points;
        } else if (coexist->parsed()) {
            req.command = SweepRequest::Command::Coexist;
            req.region_grid.gamma_points = grid_points;
            req.region_grid.pa_points = grid_points;
            req.axis = "rho";
            if (!coexist->count("--rho-from")) req.from = 0.0;
            if (!coexist->count("--rho-to")) req.to = 0.0;
            if (!coexist->count("--points")) req.points = 1;
        } else if (verify->parsed()) {
            req.command = SweepRequest::Command::Verify;
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    }

    const auto result = jscc::run(req);
    if (result.exit_code != 0) std::cerr << result.message << "\n";
    return result.exit_code;
}
