// qcorr: classify qubit channels, quantify the quantum correlations they
// create on classically correlated inputs, and reproduce the figure data.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli.hpp"
#include "qcorr/errors.hpp"

namespace {

using qcorr::cli::RunConfig;

constexpr int kExitParse = 2;
constexpr int kExitInvalidChannel = 3;
constexpr int kExitDomain = 4;

void add_common_options(CLI::App* cmd, RunConfig& cfg, bool with_input = true) {
  if (with_input) {
    cmd->add_option("--input", cfg.input_path, "Path to a JSON spec file");
    cmd->add_option("--inline", cfg.inline_json, "Inline JSON spec");
  }
  cmd->add_option("--format", cfg.format, "Output format: json or csv (sweep commands)")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--order", cfg.order, "Quadrature order")->check(CLI::PositiveNumber);
  cmd->add_option("--mc-samples", cfg.mc_samples, "Use Monte Carlo with this many samples");
  cmd->add_option("--seed", cfg.seed, "Seed for every random draw");
  cmd->add_option("--tol", cfg.tol, "Classification tolerance");
  cmd->add_option("--output", cfg.output_path, "Output path, '-' for stdout");
}

void write_output(const RunConfig& cfg, const std::string& text) {
  if (cfg.output_path == "-" || cfg.output_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream out(cfg.output_path, std::ios::binary);
  if (!out) throw qcorr::DomainError("cannot open output file: " + cfg.output_path);
  out << text;
}

std::string render(const qcorr::cli::ordered_json& j) { return j.dump(2) + "\n"; }

std::string render_table(const RunConfig& cfg, const qcorr::cli::SweepTable& table) {
  if (cfg.format == "csv") return qcorr::cli::render_csv(table);
  return qcorr::cli::render_json(table).dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum-correlation analysis of qubit channels"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string command;

  auto* classify = app.add_subcommand("classify", "Unital / semi-classical / CPTP report");
  add_common_options(classify, cfg);
  auto* measure = app.add_subcommand("measure", "Correlation measures of a state");
  add_common_options(measure, cfg);
  auto* create = app.add_subcommand("create", "Correlations a channel creates on a CC state");
  add_common_options(create, cfg);
  auto* power = app.add_subcommand("power", "Correlating power of a channel");
  add_common_options(power, cfg);
  auto* qmax = app.add_subcommand("qmax", "Maximum created correlation over input axes");
  add_common_options(qmax, cfg);
  auto* nearest = app.add_subcommand("nearest-cc", "Nearest classically correlated state");
  add_common_options(nearest, cfg);

  auto* scan = app.add_subcommand("scan-ad", "Amplitude-damping power sweep");
  add_common_options(scan, cfg, false);
  scan->add_option("--gamma-min", cfg.gamma_min, "Sweep start");
  scan->add_option("--gamma-max", cfg.gamma_max, "Sweep end");
  scan->add_option("--steps", cfg.steps, "Number of sweep points");

  auto* compare = app.add_subcommand("compare-geometric", "Q and Q_G across block overlaps");
  add_common_options(compare, cfg, false);
  compare->add_option("--p0", cfg.p0, "Weight of the first block");
  compare->add_option("--steps", cfg.sweep_steps, "Number of sweep points");

  for (auto* cmd : {classify, measure, create, power, qmax, nearest, scan, compare})
    cmd->callback([&command, cmd] { command = cmd->get_name(); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    using namespace qcorr::cli;
    if (command == "classify") {
      const auto input = load_input(cfg);
      write_output(cfg, render(cmd_classify(parse_channel_json(input, false), cfg.tol)));
    } else if (command == "measure") {
      const auto input = load_input(cfg);
      write_output(cfg, render(cmd_measure(parse_state_json(input), cfg.tol)));
    } else if (command == "create") {
      const auto input = load_input(cfg);
      if (!input.is_object() || !input.contains("channel") || !input.contains("state"))
        throw qcorr::ParseError("create needs {\"channel\": ..., \"state\": ...}");
      const auto ch = parse_channel_json(input["channel"]);
      const auto st = parse_state_json(input["state"]);
      write_output(cfg, render(cmd_create(ch, st, cfg.tol)));
    } else if (command == "power") {
      const auto input = load_input(cfg);
      write_output(
          cfg, render(cmd_power(parse_channel_json(input), scheme_from_config(cfg), cfg.tol)));
    } else if (command == "qmax") {
      const auto input = load_input(cfg);
      write_output(cfg, render(cmd_qmax(parse_channel_json(input), cfg.tol)));
    } else if (command == "nearest-cc") {
      const auto input = load_input(cfg);
      write_output(cfg, render(cmd_nearest_cc(parse_state_json(input), cfg.tol)));
    } else if (command == "scan-ad") {
      write_output(cfg,
                   render_table(cfg, cmd_scan_ad(cfg.gamma_min, cfg.gamma_max, cfg.steps, cfg.order)));
    } else if (command == "compare-geometric") {
      write_output(cfg, render_table(cfg, cmd_compare_geometric(cfg.p0, cfg.sweep_steps)));
    }
  } catch (const qcorr::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const qcorr::InvalidChannelError& e) {
    std::cerr << "invalid channel: " << e.what() << "\n";
    return kExitInvalidChannel;
  } catch (const qcorr::NotTracePreservingError& e) {
    std::cerr << "invalid channel: " << e.what() << "\n";
    return kExitInvalidChannel;
  } catch (const qcorr::NotPositiveError& e) {
    std::cerr << "invalid channel: " << e.what() << "\n";
    return kExitInvalidChannel;
  } catch (const qcorr::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return 0;
}
