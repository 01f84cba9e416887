#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qcorr::cli {

namespace {

double number_at(const ordered_json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string("expected a number for ") + what);
  return j.get<double>();
}

Vec3 vec3_at(const ordered_json& j, const char* what) {
  if (!j.is_array() || j.size() != 3)
    throw ParseError(std::string(what) + " must be an array of 3 reals");
  return {number_at(j[0], what), number_at(j[1], what), number_at(j[2], what)};
}

ComplexMatrix kraus_matrix(const ordered_json& j) {
  if (!j.is_array() || j.size() != 4)
    throw ParseError("each Kraus operator must list 4 [re, im] entries row-major");
  ComplexMatrix k(2);
  for (int e = 0; e < 4; ++e) {
    const auto& entry = j[e];
    if (!entry.is_array() || entry.size() != 2)
      throw ParseError("Kraus entries must be [re, im] pairs");
    k(e / 2, e % 2) = cplx(number_at(entry[0], "kraus entry"), number_at(entry[1], "kraus entry"));
  }
  return k;
}

Mat3 lambda_matrix(const ordered_json& j) {
  Mat3 m;
  if (j.is_array() && j.size() == 9) {
    for (int k = 0; k < 9; ++k) m.a[k] = number_at(j[k], "lambda");
    return m;
  }
  if (j.is_array() && j.size() == 3) {
    for (int i = 0; i < 3; ++i) {
      if (!j[i].is_array() || j[i].size() != 3)
        throw ParseError("lambda rows must hold 3 reals");
      for (int c = 0; c < 3; ++c) m(i, c) = number_at(j[i][c], "lambda");
    }
    return m;
  }
  throw ParseError("lambda must be 9 reals row-major or 3 rows of 3");
}

// Necessary CPTP conditions checkable from the affine form alone.
void screen_affine(const AffineChannel& a) {
  if (!a.lambda.is_finite() || !a.t.is_finite())
    throw InvalidChannelError("channel parameters must be finite");
  const Svd3 svd = svd3_rotations(a.lambda);
  for (double s : {svd.d.x, svd.d.y, svd.d.z})
    if (std::abs(s) > 1.0 + kTol.cptp)
      throw InvalidChannelError("affine channel contracts must have singular values <= 1");
  constexpr int kScan = 512;
  constexpr double golden_angle = 2.39996322972865332;
  for (int k = 0; k < kScan; ++k) {
    const double z = 1.0 - 2.0 * (k + 0.5) / kScan;
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden_angle * k;
    const Vec3 n{s * std::cos(phi), s * std::sin(phi), z};
    if ((a.lambda * n + a.t).norm() > 1.0 + 1e-8)
      throw InvalidChannelError("affine channel maps the Bloch ball outside itself");
  }
}

bool affine_passes_screen(const AffineChannel& a) {
  try {
    screen_affine(a);
    return true;
  } catch (const InvalidChannelError&) {
    return false;
  }
}

ordered_json vec3_to_json(const Vec3& v) { return ordered_json::array({v.x, v.y, v.z}); }

}  // namespace

ParsedChannel parse_channel_json(const ordered_json& j, bool validate) {
  if (!j.is_object()) throw ParseError("channel spec must be a JSON object");
  ParsedChannel out;
  out.echo = j;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("channel name must be a string");
    out.name = j["name"].get<std::string>();
  }

  if (j.contains("kraus")) {
    const auto& list = j["kraus"];
    if (!list.is_array() || list.empty())
      throw ParseError("kraus must be a nonempty list of operators");
    KrausChannel k;
    k.name = out.name;
    for (const auto& op : list) k.kraus.push_back(kraus_matrix(op));
    if (validate) {
      const ValidityReport report = validate_cptp(k);
      if (!report.valid) throw InvalidChannelError("Kraus channel fails the CPTP check");
    }
    out.kraus = k;
    out.affine = affine_from_kraus(k);
    out.affine.name = out.name;
    return out;
  }

  if (j.contains("affine")) {
    const auto& aff = j["affine"];
    if (!aff.is_object() || !aff.contains("lambda") || !aff.contains("t"))
      throw ParseError("affine spec needs lambda and t");
    out.affine.lambda = lambda_matrix(aff["lambda"]);
    out.affine.t = vec3_at(aff["t"], "t");
    out.affine.name = out.name;
    if (validate) screen_affine(out.affine);
    return out;
  }

  throw ParseError("channel spec must contain kraus or affine");
}

ParsedState parse_state_json(const ordered_json& j) {
  if (!j.is_object()) throw ParseError("state spec must be a JSON object");
  ParsedState out;
  out.echo = j;
  if (j.contains("qc")) {
    const auto& q = j["qc"];
    if (!q.is_object() || !q.contains("p0") || !q.contains("p1") || !q.contains("n0") ||
        !q.contains("n1"))
      throw ParseError("qc state needs p0, p1, n0, n1");
    QcSpec spec;
    spec.p0 = number_at(q["p0"], "p0");
    spec.p1 = number_at(q["p1"], "p1");
    spec.n0 = vec3_at(q["n0"], "n0");
    spec.n1 = vec3_at(q["n1"], "n1");
    if (std::abs(spec.p0 + spec.p1 - 1.0) > 1e-9 || spec.p0 < -1e-12 || spec.p1 < -1e-12)
      throw DomainError("qc probabilities must be nonnegative and sum to one");
    if (spec.n0.norm() > 1.0 + 1e-9 || spec.n1.norm() > 1.0 + 1e-9)
      throw DomainError("qc Bloch vectors must lie in the unit ball");
    out.qc = spec;
    return out;
  }
  if (j.contains("cc")) {
    const auto& c = j["cc"];
    if (!c.is_object() || !c.contains("p") || !c.contains("u_axis") || !c.contains("v_axis"))
      throw ParseError("cc state needs p, u_axis, v_axis");
    CCState cc;
    const auto& p = c["p"];
    if (!p.is_array() || p.size() != 2 || !p[0].is_array() || p[0].size() != 2 ||
        !p[1].is_array() || p[1].size() != 2)
      throw ParseError("cc probabilities must be a 2x2 array");
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k) cc.p[i][k] = number_at(p[i][k], "p");
    cc.u_axis = vec3_at(c["u_axis"], "u_axis");
    cc.v_axis = vec3_at(c["v_axis"], "v_axis");
    validate_cc(cc);
    out.cc = cc;
    return out;
  }
  throw ParseError("state spec must contain qc or cc");
}

ordered_json channel_to_json(const AffineChannel& a) {
  ordered_json aff;
  ordered_json lambda = ordered_json::array();
  for (double v : a.lambda.a) lambda.push_back(v);
  aff["lambda"] = lambda;
  aff["t"] = vec3_to_json(a.t);
  ordered_json out;
  if (!a.name.empty()) out["name"] = a.name;
  out["affine"] = aff;
  return out;
}

ordered_json load_input(const RunConfig& cfg) {
  if (!cfg.inline_json.empty() && !cfg.input_path.empty())
    throw ParseError("provide either --input or --inline, not both");
  std::string text;
  if (!cfg.inline_json.empty()) {
    text = cfg.inline_json;
  } else if (!cfg.input_path.empty()) {
    std::ifstream in(cfg.input_path);
    if (!in) throw ParseError("cannot open input file: " + cfg.input_path);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    throw ParseError("this command needs --input or --inline");
  }
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("input is not valid JSON");
  return j;
}

SphereScheme scheme_from_config(const RunConfig& cfg) {
  if (cfg.mc_samples > 0)
    return SphereScheme::monte_carlo_scheme(static_cast<int>(cfg.mc_samples), cfg.seed);
  return SphereScheme::gauss(cfg.order);
}

namespace {

ordered_json scheme_to_json(const SphereScheme& s) {
  ordered_json j;
  if (s.kind == SphereScheme::Kind::gauss_product) {
    j["kind"] = "gauss_product";
    j["order"] = s.order_or_samples;
  } else {
    j["kind"] = "monte_carlo";
    j["samples"] = s.order_or_samples;
    j["seed"] = s.seed;
  }
  return j;
}

}  // namespace

ordered_json cmd_classify(const ParsedChannel& ch, double tol) {
  ordered_json out;
  out["command"] = "classify";
  out["channel"] = ch.echo;
  bool cptp = false;
  if (ch.kraus) {
    const ValidityReport report = validate_cptp(*ch.kraus);
    cptp = report.valid;
    out["trace_residual"] = report.trace_residual;
    out["min_choi_eigenvalue"] = report.min_choi_eigenvalue;
  } else {
    cptp = affine_passes_screen(ch.affine);
  }
  const CanonicalForm cf = canonical_form(ch.affine);
  out["cptp"] = cptp;
  out["unital"] = is_unital(ch.affine, tol);
  out["semiclassical"] = is_semiclassical(ch.affine, tol);
  out["lambda_canonical"] = ordered_json::array({cf.lambda_d.x, cf.lambda_d.y, cf.lambda_d.z});
  out["t_canonical"] = vec3_to_json(cf.t_c);
  out["tol"] = tol;
  return out;
}

ordered_json cmd_measure(const ParsedState& st, double tol) {
  ordered_json out;
  out["command"] = "measure";
  out["input"] = st.echo;
  if (st.qc) {
    const CorrelationReport report =
        correlation_report(qc_from_bloch(st.qc->p0, st.qc->n0, st.qc->p1, st.qc->n1));
    out["q_value"] = report.q_value;
    out["method"] = "commutator";
  } else if (st.cc) {
    // CC states carry no quantum correlations; the commutator value of the
    // assembled blocks doubles as a consistency figure.
    const CorrelationReport report = correlation_report(*st.cc);
    out["q_value"] = report.q_value;
    out["c_value"] = report.c_value;
    out["method"] = "commutator";
  } else {
    throw ParseError("measure needs a qc or cc state");
  }
  out["tol"] = tol;
  return out;
}

ordered_json cmd_create(const ParsedChannel& ch, const ParsedState& st, double tol) {
  if (!st.cc) throw DomainError("create needs a cc input state");
  ordered_json out;
  out["command"] = "create";
  out["channel"] = ch.echo;
  out["state"] = st.echo;
  out["c_initial"] = classical_correlation(*st.cc);
  out["q_created"] = created_correlation(ch.affine, *st.cc);
  out["q_output_commutator"] = quantum_correlation(apply_to_cc(ch.affine, *st.cc));
  out["tol"] = tol;
  return out;
}

ordered_json cmd_power(const ParsedChannel& ch, const SphereScheme& scheme, double tol) {
  const PowerResult result = correlating_power(ch.affine, scheme);
  ordered_json out;
  out["command"] = "power";
  out["channel"] = ch.echo;
  out["value"] = result.value;
  out["estimated_error"] = result.estimated_error;
  out["scheme"] = scheme_to_json(scheme);
  out["tol"] = tol;
  return out;
}

ordered_json cmd_qmax(const ParsedChannel& ch, double tol) {
  constexpr int kLattice = 4096;
  constexpr int kRefine = 50;
  const QMaxResult result = q_max(ch.affine, kLattice, kRefine);
  ordered_json out;
  out["command"] = "qmax";
  out["channel"] = ch.echo;
  out["value"] = result.value;
  out["argmax_n"] = vec3_to_json(result.argmax_n);
  out["closed_form_value"] = result.closed_form_value;
  ordered_json search;
  search["lattice_points"] = kLattice;
  search["refine_iterations"] = kRefine;
  out["search"] = search;
  out["tol"] = tol;
  return out;
}

ordered_json cmd_nearest_cc(const ParsedState& st, double tol) {
  if (!st.qc) throw DomainError("nearest-cc needs a qc state with pure blocks");
  const QcSpec& q = *st.qc;
  if (std::abs(q.n0.norm() - 1.0) > 1e-9 || std::abs(q.n1.norm() - 1.0) > 1e-9)
    throw DomainError("nearest-cc blocks must be pure (unit Bloch vectors)");
  const NearestCCResult r = nearest_cc(q.p0, q.p1, q.n0, q.n1);
  ordered_json out;
  out["command"] = "nearest-cc";
  out["input"] = st.echo;
  out["f_max"] = r.f_max;
  out["q_geometric"] = r.q_geometric;
  out["case"] = r.case_tag == CaseTag::aligned ? "aligned" : "anti";
  out["s0"] = vec3_to_json(r.s0);
  out["s1"] = vec3_to_json(r.s1);
  out["xi"] = r.xi;
  out["theta"] = r.theta;
  out["tol"] = tol;
  return out;
}

SweepTable cmd_scan_ad(double gamma_min, double gamma_max, int steps, int order) {
  if (!(gamma_min >= 0.0 && gamma_max <= 1.0 && gamma_min <= gamma_max) || steps < 2)
    throw DomainError("scan-ad needs 0 <= gamma_min <= gamma_max <= 1 and steps >= 2");
  SweepTable table;
  table.columns = {"gamma", "p_quadrature", "p_closed_form"};
  for (int k = 0; k < steps; ++k) {
    const double gamma = gamma_min + (gamma_max - gamma_min) * k / (steps - 1);
    const AffineChannel ch = affine_from_kraus(amplitude_damping(gamma));
    const double quad = correlating_power(ch, SphereScheme::gauss(order)).value;
    table.rows.push_back({gamma, quad, power_ad_closed_form(gamma)});
  }
  return table;
}

SweepTable cmd_compare_geometric(double p0, int steps) {
  if (steps < 3) throw DomainError("compare-geometric needs steps >= 3");
  if (!(p0 >= 0.0 && p0 <= 1.0)) throw DomainError("p0 must lie in [0, 1]");
  SweepTable table;
  table.columns = {"n0_dot_n1", "q", "q_geometric"};
  const double p1 = 1.0 - p0;
  for (int k = 0; k < steps; ++k) {
    const double x = -1.0 + 2.0 * k / (steps - 1);
    // Representative pair with n0.n1 = x: n0 = z-hat, n1 in the xz-plane.
    const Vec3 n0 = Vec3::unit_z();
    const Vec3 n1{std::sqrt(std::max(0.0, 1.0 - x * x)), 0.0, x};
    const double q = quantum_correlation_bloch(p0, p1, n0, n1);
    const double qg = geometric_measure(p0, p1, n0, n1);
    table.rows.push_back({x, q, qg});
  }
  return table;
}

std::string format_csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string render_csv(const SweepTable& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += format_csv_number(row[c]);
    }
    out += '\n';
  }
  return out;
}

ordered_json render_json(const SweepTable& table) {
  ordered_json out;
  out["columns"] = table.columns;
  ordered_json rows = ordered_json::array();
  for (const auto& row : table.rows) rows.push_back(ordered_json::array({row[0], row[1], row[2]}));
  out["rows"] = rows;
  return out;
}

}  // namespace qcorr::cli
