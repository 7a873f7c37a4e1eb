#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mixport/entanglement.hpp"
#include "mixport/figures.hpp"
#include "mixport/metrics.hpp"
#include "mixport/serialize.hpp"
#include "mixport/verify.hpp"

namespace {

using namespace mixport;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitConfig = 2;

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct RunConfig {
    std::string channel_text;
    std::string input_text = "0.5,0,0";
    std::string family;
    std::string param_grid;
    std::string y_grid = "0:0.5:21";
    std::string output;
    std::string output_dir = ".";
    std::string format = "csv";
    std::uint64_t seed = 12345;
    long samples = 1000;
};

std::vector<double> parse_grid(const std::string& text) {
    // Either an explicit comma list or lo:hi:count.
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        std::istringstream ss(text);
        std::string lo_s, hi_s, n_s;
        if (!std::getline(ss, lo_s, ':') || !std::getline(ss, hi_s, ':') ||
            !std::getline(ss, n_s)) {
            throw ConfigError("grid must be lo:hi:count, got '" + text + "'");
        }
        const double lo = std::stod(lo_s);
        const double hi = std::stod(hi_s);
        const int n = std::stoi(n_s);
        if (n < 1) {
            throw ConfigError("grid count must be >= 1");
        }
        for (int i = 0; i < n; ++i) {
            out.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
        }
        return out;
    }
    std::istringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(std::stod(item));
    }
    if (out.empty()) {
        throw ConfigError("empty grid '" + text + "'");
    }
    return out;
}

QubitState parse_input(const std::string& text) {
    std::istringstream ss(text);
    std::string item;
    std::vector<double> fields;
    while (std::getline(ss, item, ',')) {
        fields.push_back(std::stod(item));
    }
    if (fields.size() != 3) {
        throw ConfigError("input must be x,Re(y),Im(y), got '" + text + "'");
    }
    return QubitState(fields[0], Complex(fields[1], fields[2]));
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot open '" + path + "' for writing");
    }
    out << content;
    if (!out) {
        throw Error("failed while writing '" + path + "'");
    }
}

std::string matrix_text(const ComplexMatrix& m) {
    std::ostringstream out;
    out << "[";
    for (int i = 0; i < m.dim(); ++i) {
        out << (i == 0 ? "[" : " [");
        for (int j = 0; j < m.dim(); ++j) {
            const Complex z = m(i, j);
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.10g%+.10gi", z.real(), z.imag());
            out << buf << (j + 1 < m.dim() ? ", " : "");
        }
        out << "]" << (i + 1 < m.dim() ? "\n" : "");
    }
    out << "]";
    return out.str();
}

metrics::Branch branch_of(teleport::BellOutcome outcome) {
    return (outcome == teleport::BellOutcome::PhiPlus ||
            outcome == teleport::BellOutcome::PhiMinus)
               ? metrics::Branch::Phi
               : metrics::Branch::Psi;
}

int cmd_teleport(const RunConfig& cfg) {
    const channels::ChannelSpec spec = channels::parse_spec(cfg.channel_text);
    const channels::Channel channel = channels::build(spec);
    const QubitState input = parse_input(cfg.input_text);
    const DensityMatrix rho1 = from_qubit(input);

    if (channel.warning) {
        std::cerr << "warning: " << *channel.warning << "\n";
    }

    const teleport::TeleportRun run = teleport::run(input, channel);

    serialize::json report = serialize::run_to_json(run);
    report["channel_physical"] = channel.physical;
    if (channel.physical) {
        serialize::json measures;
        for (const auto& m : entanglement::measure_all(channel.state)) {
            measures[entanglement::measure_name(m.measure)] = m.value;
        }
        report["channel_measures"] = std::move(measures);
    }
    double prob_sum = 0.0;
    for (std::size_t k = 0; k < run.outcomes.size(); ++k) {
        const auto& outcome = run.outcomes[k];
        prob_sum += outcome.probability;
        if (outcome.degenerate) {
            continue;
        }
        const double d = metrics::hs_distance_sq(rho1, *outcome.bob_corrected);
        report["outcomes"][k]["distortion"] = d;
        const auto closed =
            metrics::closed_form(spec, branch_of(outcome.outcome), input.x, std::abs(input.y));
        if (closed) {
            report["outcomes"][k]["distortion_closed_form"] = *closed;
            report["outcomes"][k]["distortion_abs_err"] = std::abs(d - *closed);
        }
    }
    report["probability_sum"] = prob_sum;

    if (cfg.format == "json") {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << "channel: " << channels::to_text(spec)
                  << (channel.physical ? "" : "  (not PSD: formal continuation)") << "\n";
        if (channel.physical) {
            for (const auto& m : entanglement::measure_all(channel.state)) {
                std::cout << "channel " << entanglement::measure_name(m.measure) << ": "
                          << m.value << "\n";
            }
        }
        std::cout << "input: x=" << input.x << " y=" << input.y.real() << "+" << input.y.imag()
                  << "i\n\n";
        for (const auto& outcome : run.outcomes) {
            std::cout << "outcome " << teleport::outcome_name(outcome.outcome)
                      << "  probability " << outcome.probability << "\n";
            if (outcome.degenerate) {
                std::cout << "  degenerate outcome: no conditional state\n\n";
                continue;
            }
            std::cout << "  bob_raw:\n" << matrix_text(outcome.bob_raw->mat()) << "\n";
            std::cout << "  bob_corrected:\n" << matrix_text(outcome.bob_corrected->mat())
                      << "\n";
            const double d = metrics::hs_distance_sq(rho1, *outcome.bob_corrected);
            std::cout << "  distortion (pipeline):    " << d << "\n";
            const auto closed = metrics::closed_form(spec, branch_of(outcome.outcome), input.x,
                                                     std::abs(input.y));
            if (closed) {
                std::cout << "  distortion (closed form): " << *closed << "  |err| "
                          << std::abs(d - *closed) << "\n";
            }
            std::cout << "\n";
        }
        std::cout << "probability sum: " << prob_sum << "\n";
    }
    if (!cfg.output.empty()) {
        write_file(cfg.output, report.dump(2) + "\n");
    }
    return kExitOk;
}

std::string sweep_csv(const std::vector<metrics::DistortionRecord>& records) {
    std::string csv = "family,p1_or_r,abs_y,branch,D_pipeline,D_closed_form,abs_err\n";
    for (const auto& rec : records) {
        csv += rec.family;
        csv += ',';
        csv += figures::format_float(rec.param);
        csv += ',';
        csv += figures::format_float(rec.abs_y);
        csv += ',';
        csv += metrics::branch_name(rec.branch);
        csv += ',';
        csv += figures::format_float(rec.d_pipeline);
        csv += ',';
        if (rec.d_closed) {
            csv += figures::format_float(*rec.d_closed);
            csv += ',';
            csv += figures::format_float(std::abs(rec.d_pipeline - *rec.d_closed));
        } else {
            csv += ',';
        }
        csv += '\n';
    }
    return csv;
}

int cmd_sweep(const RunConfig& cfg) {
    const std::vector<double> params = parse_grid(cfg.param_grid);
    const std::vector<double> ys = parse_grid(cfg.y_grid);
    const auto records = metrics::sweep_distortions(cfg.family, params, ys);

    std::string payload;
    if (cfg.format == "json") {
        serialize::json arr = serialize::json::array();
        for (const auto& rec : records) {
            serialize::json j = {{"family", rec.family},
                                 {"p1_or_r", rec.param},
                                 {"abs_y", rec.abs_y},
                                 {"branch", metrics::branch_name(rec.branch)},
                                 {"D_pipeline", rec.d_pipeline}};
            if (rec.d_closed) {
                j["D_closed_form"] = *rec.d_closed;
                j["abs_err"] = std::abs(rec.d_pipeline - *rec.d_closed);
            }
            arr.push_back(std::move(j));
        }
        payload = arr.dump(2) + "\n";
    } else {
        payload = sweep_csv(records);
    }
    if (cfg.output.empty()) {
        std::cout << payload;
    } else {
        write_file(cfg.output, payload);
        std::cout << "wrote " << cfg.output << " (" << records.size() << " records)\n";
    }
    return kExitOk;
}

int cmd_figures(const RunConfig& cfg) {
    for (const auto& fig : figures::generate_figures()) {
        const std::string path = cfg.output_dir + "/" + fig.name;
        write_file(path, fig.csv);
        std::cout << "wrote " << path << "\n";
    }
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
    const verify::VerifyReport report = verify::run_all(cfg.seed, cfg.samples);

    for (const auto& property : report.properties) {
        const bool asserted = blockprops::property_asserted(property.property_id);
        std::cout << (asserted ? (property.violations == 0 ? "[ok]      " : "[FAIL]    ")
                               : "[finding] ")
                  << blockprops::property_name(property.property_id)
                  << "  samples=" << property.samples << " violations=" << property.violations
                  << " worst_margin=" << property.worst_margin << "\n";
        for (const auto& link : property.links) {
            std::cout << "            link " << link.name << ": violations=" << link.violations
                      << " worst_margin=" << link.worst_margin << "\n";
        }
        if (property.property_id == blockprops::PropertyId::P1Converse && property.witness) {
            std::cout << "            counterexample witness (full matrix not PSD):\n"
                      << matrix_text(*property.witness) << "\n";
        }
    }
    for (const auto& suite : report.suites) {
        std::cout << (suite.failures == 0 ? "[ok]      " : "[FAIL]    ") << suite.name
                  << "  checks=" << suite.checks << " failures=" << suite.failures
                  << " max_abs_err=" << suite.max_abs_err << "\n";
        for (const auto& note : suite.notes) {
            std::cout << "            " << note << "\n";
        }
    }

    const bool ok = verify::all_asserted_pass(report);
    std::cout << (ok ? "verify: all asserted invariants hold\n"
                     : "verify: ASSERTED INVARIANT FAILED\n");
    if (!cfg.output.empty()) {
        write_file(cfg.output, serialize::verify_report_to_json(report).dump(2) + "\n");
    }
    return ok ? kExitOk : kExitInternal;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"mixport: single-qubit teleportation over two-qubit mixed channels"};
    app.require_subcommand(1);

    RunConfig cfg;

    CLI::App* teleport_cmd =
        app.add_subcommand("teleport", "run the protocol for one input and channel");
    teleport_cmd->add_option("--channel", cfg.channel_text,
                             "channel spec, e.g. meps | mems2:p1=0.6 | werner:r=0.5 | "
                             "xz:a=..,b=..,c=..,d=..,e=..")
        ->required();
    teleport_cmd->add_option("--input", cfg.input_text, "input qubit as x,Re(y),Im(y)")
        ->required();
    teleport_cmd->add_option("--format", cfg.format, "text|json")->default_val("text");
    teleport_cmd->add_option("--output", cfg.output, "write the JSON report to a file");

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "distortion sweep at x = 1/2");
    sweep_cmd->add_option("--family", cfg.family, "mems2|mems3|mems4|werner")->required();
    sweep_cmd
        ->add_option("--params", cfg.param_grid, "p1 (or r) grid: lo:hi:count or comma list")
        ->required();
    sweep_cmd->add_option("--y", cfg.y_grid, "|y| grid: lo:hi:count or comma list")
        ->default_val("0:0.5:21");
    sweep_cmd->add_option("--format", cfg.format, "csv|json")->default_val("csv");
    sweep_cmd->add_option("--output", cfg.output, "output file (default stdout)");

    CLI::App* figures_cmd =
        app.add_subcommand("figures", "emit fig1.csv..fig5.csv distortion/entropy curves");
    figures_cmd->add_option("--output-dir", cfg.output_dir, "target directory")
        ->default_val(".");

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "randomized property suites and oracle grids");
    verify_cmd->add_option("--samples", cfg.samples, "random samples per suite")
        ->default_val(1000);
    verify_cmd->add_option("--seed", cfg.seed, "harness seed (MIXPORT_SEED overrides)")
        ->default_val(12345);
    verify_cmd->add_option("--output", cfg.output, "write the JSON report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
            return app.exit(e);
        }
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (*verify_cmd) {
            if (const char* env_seed = std::getenv("MIXPORT_SEED")) {
                char* end = nullptr;
                const unsigned long long v = std::strtoull(env_seed, &end, 10);
                if (end == env_seed || *end != '\0') {
                    std::cerr << "error: MIXPORT_SEED is not an integer: '" << env_seed << "'\n";
                    return kExitConfig;
                }
                cfg.seed = v;
            }
            return cmd_verify(cfg);
        }
        if (*teleport_cmd) {
            return cmd_teleport(cfg);
        }
        if (*sweep_cmd) {
            return cmd_sweep(cfg);
        }
        if (*figures_cmd) {
            return cmd_figures(cfg);
        }
        return kExitConfig;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const InvalidParams& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const InvalidState& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const OutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
