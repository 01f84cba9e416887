// Command implementations and wire formats for the qcorr CLI.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcorr/channels.hpp"
#include "qcorr/geometry.hpp"
#include "qcorr/measures.hpp"
#include "qcorr/power.hpp"
#include "qcorr/states.hpp"

namespace qcorr::cli {

using ordered_json = nlohmann::ordered_json;

struct RunConfig {
  std::string input_path;
  std::string inline_json;
  std::string format = "json";  // json | csv (csv applies to the sweep commands)
  int order = 64;
  long mc_samples = 0;  // > 0 selects the Monte Carlo scheme
  std::uint64_t seed = 0;
  double tol = 1e-8;
  std::string output_path = "-";
  // scan-ad
  double gamma_min = 0.0;
  double gamma_max = 1.0;
  int steps = 11;
  // compare-geometric
  double p0 = 0.5;
  int sweep_steps = 41;
};

// Channel parsed from {"kraus": [...]} or {"affine": {...}}; a Kraus channel
// always carries its derived affine form.
struct ParsedChannel {
  std::optional<KrausChannel> kraus;
  AffineChannel affine;
  std::string name;
  ordered_json echo;
};

struct QcSpec {
  double p0 = 0.5;
  double p1 = 0.5;
  Vec3 n0;
  Vec3 n1;
};

struct ParsedState {
  std::optional<QcSpec> qc;
  std::optional<CCState> cc;
  ordered_json echo;
};

// Wire-format readers; throw ParseError on malformed input and
// InvalidChannelError / NotTracePreservingError on well-formed but invalid
// channels (unless validate is false, as used by classify).
ParsedChannel parse_channel_json(const ordered_json& j, bool validate = true);
ParsedState parse_state_json(const ordered_json& j);
ordered_json channel_to_json(const AffineChannel& a);

// Reads --input / --inline into a JSON document.
ordered_json load_input(const RunConfig& cfg);

SphereScheme scheme_from_config(const RunConfig& cfg);

ordered_json cmd_classify(const ParsedChannel& ch, double tol);
ordered_json cmd_measure(const ParsedState& st, double tol);
ordered_json cmd_create(const ParsedChannel& ch, const ParsedState& st, double tol);
ordered_json cmd_power(const ParsedChannel& ch, const SphereScheme& scheme, double tol);
ordered_json cmd_qmax(const ParsedChannel& ch, double tol);
ordered_json cmd_nearest_cc(const ParsedState& st, double tol);

struct SweepTable {
  std::vector<std::string> columns;
  std::vector<std::array<double, 3>> rows;
};

SweepTable cmd_scan_ad(double gamma_min, double gamma_max, int steps, int order);
SweepTable cmd_compare_geometric(double p0, int steps);

std::string render_csv(const SweepTable& table);
ordered_json render_json(const SweepTable& table);

// Number formatting shared by every CSV: 12 significant digits.
std::string format_csv_number(double v);

}  // namespace qcorr::cli
