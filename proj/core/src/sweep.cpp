#include "jscc/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "jscc/bounds.hpp"
#include "jscc/mc_oracle.hpp"
#include "jscc/mismatch.hpp"
#include "jscc/schemes.hpp"

namespace jscc {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

double linspace_at(double lo, double hi, int count, int i) {
    return count <= 1 ? lo : lo + (hi - lo) * i / (count - 1);
}

std::string format_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void ensure_finite(double x, const char* what) {
    if (!std::isfinite(x)) {
        throw std::runtime_error(std::string("non-finite result: ") + what);
    }
}

struct RowBuilder {
    Table* table;
    std::vector<Cell> row;

    explicit RowBuilder(Table& t) : table(&t) {}

    RowBuilder& col(const std::string& name, double value) {
        if (table->rows.empty()) table->columns.push_back(name);
        row.emplace_back(value);
        return *this;
    }
    /// numeric column followed by its -10 log10 sibling
    RowBuilder& col_db(const std::string& name, double value) {
        ensure_finite(value, name.c_str());
        col(name, value);
        col(name + "_db", to_db(value));
        return *this;
    }
    RowBuilder& col(const std::string& name, const std::string& value) {
        if (table->rows.empty()) table->columns.push_back(name);
        row.emplace_back(value);
        return *this;
    }
    void commit() {
        if (!table->rows.empty() && row.size() != table->columns.size()) {
            throw std::logic_error("ragged table row");
        }
        table->rows.push_back(std::move(row));
        row.clear();
    }
};

struct SchemeSelection {
    bool uncoded, naive, digital, hda;
};

SchemeSelection parse_selection(const std::string& scheme) {
    if (scheme == "all") return {true, true, true, true};
    const auto tag = scheme_from_string(scheme);
    if (!tag) throw std::invalid_argument("unknown scheme: " + scheme);
    return {tag == Scheme::Uncoded, tag == Scheme::NaiveDpc, tag == Scheme::DigitalDpc,
            tag == Scheme::Hda};
}

void sweep_axis(const SweepRequest& req, const std::function<void(double)>& body) {
    if (req.points < 1) throw std::invalid_argument("points must be >= 1");
    for (int i = 0; i < req.points; ++i) body(linspace_at(req.from, req.to, req.points, i));
}

Table build_bounds(const SweepRequest& req) {
    Table table;
    const bool snr_axis = req.axis == "snr_db";
    if (!snr_axis && req.axis != "rho") {
        throw std::invalid_argument("bounds sweeps snr_db or rho");
    }
    sweep_axis(req, [&](double x) {
        const double p = snr_axis ? req.n * std::pow(10.0, x / 10.0) : req.p;
        const double rho = snr_axis ? req.rho : x;
        const SourceModel model{req.sigma_v2, req.sigma_s2, rho};
        const ChannelSpec channel{p, req.n};
        RowBuilder row{table};
        if (snr_axis) {
            row.col("snr_db", x);
        } else {
            row.col("rho", rho);
        }
        row.col("p", p).col("n", req.n).col("sigma_v2", req.sigma_v2).col("sigma_s2",
                                                                          req.sigma_s2);
        if (snr_axis) row.col("rho", rho);
        row.col_db("d_ob1", outer_bound_1(model, channel))
            .col_db("d_ob2", outer_bound_2(model, channel))
            .col_db("d_ob", combined_outer(model, channel))
            .commit();
    });
    return table;
}

Table build_schemes(const SweepRequest& req) {
    Table table;
    const bool snr_axis = req.axis == "snr_db";
    if (!snr_axis && req.axis != "rho") {
        throw std::invalid_argument("schemes sweeps snr_db or rho");
    }
    const auto sel = parse_selection(req.scheme);
    const bool fixed_alloc = !req.optimize && (req.gamma.has_value() || req.pa.has_value());

    sweep_axis(req, [&](double x) {
        const double p = snr_axis ? req.n * std::pow(10.0, x / 10.0) : req.p;
        const double rho = snr_axis ? req.rho : x;
        const SourceModel model{req.sigma_v2, req.sigma_s2, rho};
        const ChannelSpec channel{p, req.n};

        RowBuilder row{table};
        if (snr_axis) {
            row.col("snr_db", x);
        } else {
            row.col("rho", rho);
        }
        row.col("p", p).col("n", req.n).col("sigma_v2", req.sigma_v2).col("sigma_s2",
                                                                          req.sigma_s2);
        if (snr_axis) row.col("rho", rho);

        if (sel.uncoded) row.col_db("d_uncoded", uncoded_distortion(model, channel));
        if (sel.naive) row.col_db("d_naive_dpc", naive_dpc_distortion(model, channel));

        double used_gamma = kNan, used_pa = kNan;
        if (sel.digital || sel.hda) {
            if (fixed_alloc) {
                const Allocation alloc{req.gamma.value_or(1.0), req.pa.value_or(0.0)};
                used_gamma = alloc.gamma;
                used_pa = alloc.pa;
                if (sel.digital)
                    row.col_db("d_digital_dpc", digital_dpc_distortion(model, channel, alloc));
                if (sel.hda) row.col_db("d_hda", hda_distortion(model, channel, alloc));
            } else {
                if (sel.digital) {
                    const auto best = optimize_scheme(model, channel, Scheme::DigitalDpc);
                    used_gamma = best.best.allocation.gamma;
                    used_pa = best.best.allocation.pa;
                    row.col_db("d_digital_dpc", best.best.distortion);
                }
                if (sel.hda) {
                    const auto best = optimize_scheme(model, channel, Scheme::Hda);
                    if (!sel.digital) {
                        used_gamma = best.best.allocation.gamma;
                        used_pa = best.best.allocation.pa;
                    }
                    row.col_db("d_hda", best.best.distortion);
                }
            }
            row.col("gamma", used_gamma).col("pa", used_pa);
        }

        row.col_db("d_ob1", outer_bound_1(model, channel))
            .col_db("d_ob2", outer_bound_2(model, channel))
            .col_db("d_ob", combined_outer(model, channel))
            .commit();
    });
    return table;
}

Table build_mismatch(const SweepRequest& req) {
    Table table;
    const double p = req.n * std::pow(10.0, req.design_snr_db / 10.0);
    const SourceModel model{req.sigma_v2, req.sigma_s2, req.rho};
    const ChannelSpec design{p, req.n};
    const Allocation alloc = req.pa.has_value()
                                 ? Allocation{req.gamma.value_or(1.0), *req.pa}
                                 : design_allocation(model, design);
    const double d_matched = digital_dpc_distortion(model, design, alloc);

    sweep_axis(req, [&](double actual_snr_db) {
        const double n_actual = p / std::pow(10.0, actual_snr_db / 10.0);
        const ChannelSpec channel{p, req.n, n_actual};
        double d_digital, d_hda_v;
        if (n_actual > req.n) {
            d_digital = d_hda_v = degraded_distortion(model, channel, alloc);
        } else {
            d_digital = digital_dpc_mismatch(model, channel, alloc);
            d_hda_v = hda_mismatch(model, channel, alloc);
        }
        const auto informed =
            optimize_scheme(model, ChannelSpec{p, n_actual}, Scheme::DigitalDpc);

        RowBuilder{table}
            .col("actual_snr_db", actual_snr_db)
            .col("n_actual", n_actual)
            .col("design_snr_db", req.design_snr_db)
            .col("p", p)
            .col("n", req.n)
            .col("sigma_v2", req.sigma_v2)
            .col("sigma_s2", req.sigma_s2)
            .col("rho", req.rho)
            .col("gamma", alloc.gamma)
            .col("pa", alloc.pa)
            .col_db("d_digital_dpc", d_digital)
            .col_db("d_hda", d_hda_v)
            .col_db("d_matched", d_matched)
            .col_db("d_informed", informed.best.distortion)
            .commit();
    });
    return table;
}

CognitiveConfig cognitive_config(const SweepRequest& req, double rho) {
    return CognitiveConfig{req.p1, req.p2, req.h1, req.h2,
                           req.sigma_v1_2, req.sigma_v2_2, rho, req.n1, req.n2};
}

void check_regime_flag(const SweepRequest& req, const CognitiveConfig& cfg) {
    const Regime actual = classify_regime(cfg);
    if (req.regime) {
        if (*req.regime != to_string(actual)) {
            throw std::invalid_argument("requested regime '" + *req.regime +
                                        "' but the gains classify as '" +
                                        std::string(to_string(actual)) + "'");
        }
    }
    if (actual == Regime::Other) {
        throw std::invalid_argument("no capacity characterization for this regime");
    }
}

Table build_region(const SweepRequest& req) {
    const auto cfg = cognitive_config(req, req.rho);
    check_regime_flag(req, cfg);
    const auto inner = inner_region(cfg, req.region_grid);
    const auto outer = outer_region(cfg, req.region_grid);

    Table table;
    const auto emit = [&](const RegionFrontier& frontier, const char* kind) {
        for (const auto& pt : frontier.points) {
            RowBuilder{table}
                .col("kind", std::string(kind))
                .col_db("d1", pt.d1)
                .col_db("d2", pt.d2)
                .col("gamma", pt.gamma)
                .col("pa", pt.pa)
                .col("rho_x", pt.rho_x)
                .col("p1", req.p1)
                .col("p2", req.p2)
                .col("h1", req.h1)
                .col("h2", req.h2)
                .col("n1", req.n1)
                .col("n2", req.n2)
                .col("sigma_v1_2", req.sigma_v1_2)
                .col("sigma_v2_2", req.sigma_v2_2)
                .col("rho", req.rho)
                .commit();
        }
    };
    emit(inner, "inner");
    emit(outer, "outer");
    return table;
}

Table build_coexist(const SweepRequest& req) {
    Table table;
    sweep_axis(req, [&](double rho) {
        const auto cfg = cognitive_config(req, rho);
        check_regime_flag(req, cfg);
        const auto result = coexistence(cfg, req.region_grid);
        RowBuilder{table}
            .col("rho", rho)
            .col("regime", std::string(to_string(classify_regime(cfg))))
            .col_db("d2_outer", result.outer)
            .col_db("d2_achievable", result.achievable)
            .col("gamma_achievable", result.achievable_allocation.gamma)
            .col("pa_achievable", result.achievable_allocation.pa)
            .col("p1", req.p1)
            .col("p2", req.p2)
            .col("h1", req.h1)
            .col("h2", req.h2)
            .col("n1", req.n1)
            .col("n2", req.n2)
            .col("sigma_v1_2", req.sigma_v1_2)
            .col("sigma_v2_2", req.sigma_v2_2)
            .commit();
    });
    return table;
}

Table build_verify(const SweepRequest& req) {
    if (req.tuples < 1) throw std::invalid_argument("tuples must be >= 1");
    Table table;
    Xoshiro256pp rng(req.seed);
    const auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * rng.uniform(); };
    const McConfig base{req.seed, req.samples, 3.0};

    for (int t = 0; t < req.tuples; ++t) {
        const double sigma_v2 = uniform(0.1, 10.0);
        const double sigma_s2 = uniform(0.1, 10.0);
        const double rho = uniform(-0.99, 0.99);
        const double n = uniform(0.5, 2.0);
        const double p = n * std::pow(10.0, uniform(-1.0, 2.0));
        const double gamma = uniform(0.0, 1.0);
        const double pa = uniform(0.0, 1.0) * p;
        const double n_actual = n * uniform(0.3, 1.0);

        const SourceModel model{sigma_v2, sigma_s2, rho};
        const ChannelSpec channel{p, n};
        const Allocation alloc{gamma, pa};
        McConfig mc = base;
        mc.seed = derive_seed(req.seed, 0x1000 + static_cast<std::uint64_t>(t));

        const double d_star = analog_params(model, channel, alloc).d_star;
        const double d_sep = digital_dpc_distortion(model, channel, alloc);
        const double d_hda_v = hda_distortion(model, channel, alloc);
        const double d_star_a = analog_params_at(model, channel, alloc, n_actual).d_star;
        const WzMismatchInputs wz{d_star, d_star_a, d_sep};

        struct Check {
            const char* name;
            double analytic;
            Estimate sim;
        };
        const Check checks[] = {
            {"d_star", d_star, simulate_linear_mmse(model, channel, alloc, mc)},
            {"d_sep", d_sep,
             simulate_scheme_idealized(model, channel, alloc, Scheme::DigitalDpc, mc)},
            {"d_hda", d_hda_v, simulate_scheme_idealized(model, channel, alloc, Scheme::Hda, mc)},
            {"wz_mismatch", wz_mismatch_distortion(wz).distortion,
             simulate_wz_mismatch(wz, mc)},
        };
        for (const auto& check : checks) {
            const double z = (check.sim.mean - check.analytic) / check.sim.std_error;
            RowBuilder{table}
                .col("check", std::string(check.name))
                .col("tuple", static_cast<double>(t))
                .col("sigma_v2", sigma_v2)
                .col("sigma_s2", sigma_s2)
                .col("rho", rho)
                .col("p", p)
                .col("n", n)
                .col("n_actual", n_actual)
                .col("gamma", gamma)
                .col("pa", pa)
                .col("analytic", check.analytic)
                .col("empirical", check.sim.mean)
                .col("std_error", check.sim.std_error)
                .col("z", z)
                .commit();
        }
    }
    return table;
}

int verify_exit_code(const Table& table, std::string& message) {
    // binomial allowance at 3 sigma; anything beyond 4 sigma fails outright
    std::size_t z_col = 0;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (table.columns[c] == "z") z_col = c;
    }
    int beyond3 = 0;
    for (const auto& row : table.rows) {
        const double z = std::abs(std::get<double>(row[z_col]));
        if (z > 4.0) {
            message = "verify failed: a check exceeded 4 standard errors";
            return 1;
        }
        if (z > 3.0) ++beyond3;
    }
    const int budget = std::max<int>(2, static_cast<int>(table.rows.size()) / 50);
    if (beyond3 > budget) {
        message = "verify failed: " + std::to_string(beyond3) +
                  " checks beyond 3 standard errors (budget " + std::to_string(budget) + ")";
        return 1;
    }
    return 0;
}

}  // namespace

double to_db(double linear) {
    const double db = -10.0 * std::log10(linear);
    return db == 0.0 ? 0.0 : db;  // normalize -0
}

Table build_table(const SweepRequest& request) {
    switch (request.command) {
        case SweepRequest::Command::Bounds: return build_bounds(request);
        case SweepRequest::Command::Schemes: return build_schemes(request);
        case SweepRequest::Command::Mismatch: return build_mismatch(request);
        case SweepRequest::Command::Region: return build_region(request);
        case SweepRequest::Command::Coexist: return build_coexist(request);
        case SweepRequest::Command::Verify: return build_verify(request);
    }
    throw std::invalid_argument("unknown command");
}

std::string to_csv(const Table& table) {
    std::ostringstream os;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        os << (c ? "," : "") << table.columns[c];
    }
    os << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) os << ",";
            if (const double* d = std::get_if<double>(&row[c])) {
                if (std::isnan(*d)) {
                    // not applicable: leave the cell empty
                } else if (std::isinf(*d)) {
                    os << (*d > 0 ? "inf" : "-inf");
                } else {
                    os << format_g17(*d);
                }
            } else {
                os << std::get<std::string>(row[c]);
            }
        }
        os << "\n";
    }
    return os.str();
}

std::string to_json(const SweepRequest& request, const Table& table) {
    nlohmann::json echo{
        {"sigma_v2", request.sigma_v2}, {"sigma_s2", request.sigma_s2},
        {"rho", request.rho},           {"p", request.p},
        {"n", request.n},               {"axis", request.axis},
        {"from", request.from},         {"to", request.to},
        {"points", request.points},     {"scheme", request.scheme},
        {"optimize", request.optimize}, {"design_snr_db", request.design_snr_db},
        {"p1", request.p1},             {"p2", request.p2},
        {"h1", request.h1},             {"h2", request.h2},
        {"n1", request.n1},             {"n2", request.n2},
        {"sigma_v1_2", request.sigma_v1_2}, {"sigma_v2_2", request.sigma_v2_2},
        {"seed", request.seed},         {"samples", request.samples},
        {"tuples", request.tuples},     {"format", request.format},
    };
    const char* names[] = {"bounds", "schemes", "mismatch", "region", "coexist", "verify"};
    echo["command"] = names[static_cast<int>(request.command)];
    if (request.gamma) echo["gamma"] = *request.gamma;
    if (request.pa) echo["pa"] = *request.pa;
    if (request.regime) echo["regime"] = *request.regime;

    nlohmann::json records = nlohmann::json::array();
    for (const auto& row : table.rows) {
        nlohmann::json rec;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (const double* d = std::get_if<double>(&row[c])) {
                rec[table.columns[c]] = *d;  // non-finite values serialize as null
            } else {
                rec[table.columns[c]] = std::get<std::string>(row[c]);
            }
        }
        records.push_back(std::move(rec));
    }
    nlohmann::json root{{"request", std::move(echo)}, {"records", std::move(records)}};
    return root.dump(2) + "\n";
}

std::string resolve_output_path(const std::string& out) {
    if (out.empty()) return out;
    const std::filesystem::path path{out};
    if (path.is_absolute()) return out;
    if (const char* dir = std::getenv("JSCC_OUT_DIR"); dir && *dir) {
        return (std::filesystem::path{dir} / path).string();
    }
    return out;
}

RunResult run(const SweepRequest& request) {
    try {
        const Table table = build_table(request);
        const std::string text =
            request.format == "json" ? to_json(request, table) : to_csv(table);
        if (request.format != "json" && request.format != "csv") {
            return {1, "error: unknown format: " + request.format};
        }
        const std::string path = resolve_output_path(request.out);
        if (path.empty()) {
            std::cout << text;
        } else {
            std::ofstream file(path, std::ios::binary);
            if (!file) return {1, "error: cannot open output file: " + path};
            file << text;
        }
        std::string message;
        if (request.command == SweepRequest::Command::Verify) {
            if (const int code = verify_exit_code(table, message)) {
                return {code, "error: " + message};
            }
        }
        return {0, ""};
    } catch (const std::exception& ex) {
        return {1, std::string("error: ") + ex.what()};
    }
}

}  // namespace jscc
