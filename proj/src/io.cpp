#include "sheath/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace sheath {

namespace {

void append_g17(std::string& out, double v) {
  char buf[32];
  const int n = std::snprintf(buf, sizeof buf, "%.17g", v);
  out.append(buf, static_cast<std::size_t>(n));
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path.string() + "' for writing");
  f.write(text.data(), static_cast<std::streamsize>(text.size()));
  f.close();
  if (!f) throw IoError("write to '" + path.string() + "' failed");
}

std::vector<double> split_row(const std::string& line, std::size_t line_no) {
  std::vector<double> row;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    std::size_t comma = line.find(',', pos);
    if (comma == std::string::npos) comma = line.size();
    const std::string field = line.substr(pos, comma - pos);
    char* end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    if (field.empty() || end != field.c_str() + field.size()) {
      throw IoError("snapshot line " + std::to_string(line_no) + ": bad field '" + field + "'");
    }
    row.push_back(v);
    pos = comma + 1;
  }
  return row;
}

// NaN and infinities become null.
nlohmann::ordered_json num(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

nlohmann::ordered_json budget_json(const TimeStepBudget& b) {
  nlohmann::ordered_json j;
  j["dt_convective"] = num(b.dt_convective);
  j["dt_source"] = num(b.dt_source);
  j["dt_plasma"] = num(b.dt_plasma);
  j["dt_chosen"] = num(b.dt_chosen);
  j["cap_exceeds_budget"] = b.cap_exceeds_budget;
  return j;
}

nlohmann::ordered_json diagnostics_json(const Diagnostics& d) {
  nlohmann::ordered_json j;
  j["ambipolarity_err"] = num(d.ambipolarity_err);
  j["phi_peak"] = num(d.phi_peak);
  j["phi_peak_rel_err"] = num(d.phi_peak_rel_err);
  j["ion_total"] = num(d.ion_total);
  j["steady_residual"] = num(d.steady_residual);
  j["dt_budget"] = budget_json(d.dt_budget);
  auto diff = nlohmann::ordered_json::array();
  for (double v : d.sheath_diffusion_estimate) diff.push_back(num(v));
  j["sheath_diffusion_estimate"] = std::move(diff);
  j["oscillation_index"] = num(d.oscillation_index);
  j["sheath_edge_mach"] = {{"left", num(d.sheath_edge_mach.left)},
                           {"right", num(d.sheath_edge_mach.right)}};
  return j;
}

} // namespace

std::string format_snapshot(const PlasmaState& s, const Mesh& mesh) {
  std::string out = kSnapshotHeader;
  out += '\n';
  out.reserve(out.size() + mesh.size() * 8 * 25);
  for (std::size_t j = 0; j < mesh.size(); ++j) {
    const double ne = s.electrons.density[j];
    const double ni = s.ions.density[j];
    const double me = s.electrons.momentum[j];
    const double mi = s.ions.momentum[j];
    const double row[] = {mesh.center(j),           ne, ni, floored_velocity(ne, me),
                          floored_velocity(ni, mi), me, mi, s.phi[j]};
    for (std::size_t k = 0; k < 8; ++k) {
      if (k) out += ',';
      append_g17(out, row[k]);
    }
    out += '\n';
  }
  return out;
}

void write_snapshot(const PlasmaState& s, const Mesh& mesh, const std::filesystem::path& path) {
  write_text(path, format_snapshot(s, mesh));
}

Snapshot parse_snapshot(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kSnapshotHeader) {
    throw IoError("snapshot header must be '" + std::string(kSnapshotHeader) + "'");
  }
  Snapshot snap;
  PlasmaState& s = snap.state;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::vector<double> row = split_row(line, line_no);
    if (row.size() != 8) {
      throw IoError("snapshot line " + std::to_string(line_no) + ": expected 8 fields");
    }
    snap.x.push_back(row[0]);
    s.electrons.density.push_back(row[1]);
    s.ions.density.push_back(row[2]);
    s.electrons.momentum.push_back(row[5]);
    s.ions.momentum.push_back(row[6]);
    s.phi.push_back(row[7]);
  }
  return snap;
}

Snapshot read_snapshot(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << f.rdbuf();
  try {
    return parse_snapshot(buf.str());
  } catch (const IoError& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

std::vector<CheckResult> evaluate_checks(const AcceptanceChecks& checks, const Diagnostics& d) {
  std::vector<CheckResult> out;
  const auto add = [&](const char* name, double value, const std::optional<double>& limit) {
    if (limit) out.push_back({name, value, *limit, value <= *limit});
  };
  add("ambipolarity_max", d.ambipolarity_err, checks.ambipolarity_max);
  add("phi_peak_rel_tol", d.phi_peak_rel_err, checks.phi_peak_rel_tol);
  add("oscillation_max", d.oscillation_index, checks.oscillation_max);
  return out;
}

std::string format_summary(const RunSummary& r) {
  nlohmann::ordered_json j;
  j["status"] = r.status;
  j["scenario"] = r.scenario;
  j["steps"] = r.steps;
  j["time"] = num(r.time);
  j["reached_steady"] = r.reached_steady;
  j["steady_residual"] = r.final ? num(r.final->steady_residual) : nlohmann::ordered_json();
  j["wall_clock_s"] = r.wall_clock_s;
  j["targets"] = {{"v_f_bar", num(r.targets.v_f_bar)},
                  {"v_s_bar", num(r.targets.v_s_bar)},
                  {"phi_peak", num(r.targets.phi_peak)}};
  j["final"] = r.final ? diagnostics_json(*r.final) : nlohmann::ordered_json();
  auto checks = nlohmann::ordered_json::array();
  for (const CheckResult& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"value", num(c.value)},
                      {"threshold", num(c.threshold)},
                      {"pass", c.pass}});
  }
  j["checks"] = std::move(checks);
  auto hist = nlohmann::ordered_json::array();
  for (const DiagnosticsRecord& h : r.history) {
    hist.push_back({{"step", h.step},
                    {"time", num(h.time)},
                    {"dt", num(h.dt)},
                    {"ambipolarity_err", num(h.ambipolarity_err)},
                    {"phi_peak", num(h.phi_peak)},
                    {"ion_total", num(h.ion_total)},
                    {"steady_residual", num(h.steady_residual)}});
  }
  j["history"] = std::move(hist);
  j["warnings"] = r.warnings;
  j["error"] = r.error;
  j["overrides"] = r.overrides;
  j["config"] = r.config_text;
  return j.dump(2) + "\n";
}

void write_summary(const RunSummary& summary, const std::filesystem::path& path) {
  write_text(path, format_summary(summary));
}

} // namespace sheath
