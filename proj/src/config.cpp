#include "sheath/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

#include "sheath/errors.hpp"

namespace sheath {

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

double parse_plain(std::string_view s) {
  s = trim(s);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigError("not a number: '" + std::string(s) + "'");
  }
  return v;
}

std::uint64_t parse_count(std::string_view s) {
  s = trim(s);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigError("not a non-negative integer: '" + std::string(s) + "'");
  }
  return v;
}

bool parse_bool(std::string_view s) {
  s = trim(s);
  if (s == "true") return true;
  if (s == "false") return false;
  throw ConfigError("expected true or false, got '" + std::string(s) + "'");
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

using Setter = std::function<void(RunConfig&, std::string_view)>;

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = {
      {"scenario.name", [](RunConfig& c, std::string_view v) { c.scenario = std::string(v); }},

      {"plasma.eps", [](RunConfig& c, std::string_view v) { c.eps = parse_number(v); }},
      {"plasma.kappa", [](RunConfig& c, std::string_view v) { c.kappa = parse_number(v); }},
      {"plasma.chi", [](RunConfig& c, std::string_view v) { c.chi = parse_number(v); }},
      {"plasma.macro_to_mfp",
       [](RunConfig& c, std::string_view v) { c.macro_to_mfp = parse_number(v); }},
      {"plasma.sigma_ratio",
       [](RunConfig& c, std::string_view v) { c.sigma_ratio = parse_number(v); }},

      {"mesh.n_cells", [](RunConfig& c, std::string_view v) { c.n_cells = parse_count(v); }},

      {"scheme.splitting",
       [](RunConfig& c, std::string_view v) { c.scheme.splitting = parse_splitting(v); }},
      {"scheme.electron_flux",
       [](RunConfig& c, std::string_view v) { c.scheme.electron_flux = parse_flux_variant(v); }},
      {"scheme.ion_flux",
       [](RunConfig& c, std::string_view v) { c.scheme.ion_flux = parse_flux_variant(v); }},
      {"scheme.electron_bc",
       [](RunConfig& c, std::string_view v) { c.scheme.electron_bc = parse_electron_bc(v); }},
      {"scheme.ion_diffusion_tuning",
       [](RunConfig& c, std::string_view v) { c.scheme.ion_diffusion_tuning = parse_number(v); }},
      {"scheme.cfl_safety",
       [](RunConfig& c, std::string_view v) { c.scheme.cfl_safety = parse_number(v); }},
      {"scheme.dt_cap",
       [](RunConfig& c, std::string_view v) {
         if (trim(v) == "none") c.scheme.dt_cap.reset();
         else c.scheme.dt_cap = parse_number(v);
       }},
      {"scheme.backend",
       [](RunConfig& c, std::string_view v) { c.scheme.backend = parse_backend(v); }},

      {"run.t_final", [](RunConfig& c, std::string_view v) { c.scheme.t_final = parse_number(v); }},
      {"run.steady_tol",
       [](RunConfig& c, std::string_view v) { c.scheme.steady_tol = parse_number(v); }},
      {"run.steady_window",
       [](RunConfig& c, std::string_view v) {
         const std::uint64_t w = parse_count(v);
         if (w > UINT32_MAX) throw ConfigError("steady_window too large");
         c.scheme.steady_window = static_cast<std::uint32_t>(w);
       }},
      {"run.history_every",
       [](RunConfig& c, std::string_view v) { c.scheme.history_every = parse_count(v); }},

      {"output.dir", [](RunConfig& c, std::string_view v) { c.output_dir = std::string(v); }},
      {"output.snapshot_every",
       [](RunConfig& c, std::string_view v) { c.scheme.snapshot_every = parse_count(v); }},
      {"output.snapshot_interval",
       [](RunConfig& c, std::string_view v) { c.snapshot_interval = parse_number(v); }},
      {"output.snapshot_final",
       [](RunConfig& c, std::string_view v) { c.snapshot_final = parse_bool(v); }},

      {"checks.ambipolarity_max",
       [](RunConfig& c, std::string_view v) { c.checks.ambipolarity_max = parse_number(v); }},
      {"checks.phi_peak_rel_tol",
       [](RunConfig& c, std::string_view v) { c.checks.phi_peak_rel_tol = parse_number(v); }},
      {"checks.oscillation_max",
       [](RunConfig& c, std::string_view v) { c.checks.oscillation_max = parse_number(v); }},
  };
  return table;
}

void assign(RunConfig& cfg, std::string_view key, std::string_view value) {
  const auto& table = setters();
  const auto it = table.find(key);
  if (it == table.end()) throw ConfigError("unknown key '" + std::string(key) + "'");
  if (value.empty()) throw ConfigError("empty value for '" + std::string(key) + "'");
  it->second(cfg, value);
}

struct Preset {
  const char* name;
  const char* text;
};

// Parameters follow the figure captions: gap of 50 Debye lengths for the
// hydrogen and argon cases, 500 for the large domain.
constexpr Preset kPresets[] = {
    {"hydrogen_collisionless", R"([scenario]
name = hydrogen_collisionless

[plasma]
eps = 1/1836
kappa = 0.0025
chi = 4e-4
macro_to_mfp = 0
sigma_ratio = 0.1

[mesh]
n_cells = 256

[scheme]
splitting = lie-modified
electron_flux = controlled-rusanov
ion_flux = scaled-fixed-hll
electron_bc = consistent
dt_cap = 2e-5

[run]
t_final = 4

[checks]
ambipolarity_max = 0.05
phi_peak_rel_tol = 0.05
)"},
    {"hydrogen_collisional", R"([scenario]
name = hydrogen_collisional

[plasma]
eps = 1/1836
kappa = 0.0025
chi = 4e-4
macro_to_mfp = 1000
sigma_ratio = 0.1

[mesh]
n_cells = 256

[scheme]
splitting = lie-modified
electron_flux = controlled-rusanov
ion_flux = scaled-fixed-hll
electron_bc = consistent
dt_cap = 2e-5

[run]
t_final = 4

[checks]
ambipolarity_max = 0.05
)"},
    {"argon_collisionless", R"([scenario]
name = argon_collisionless

[plasma]
eps = 1.36e-5
kappa = 0.0025
chi = 4e-4
macro_to_mfp = 0
sigma_ratio = 0.1

[mesh]
n_cells = 256

[scheme]
splitting = lie-modified
electron_flux = controlled-rusanov
ion_flux = scaled-fixed-hll
electron_bc = consistent
dt_cap = 4e-6

[run]
t_final = 4

[checks]
ambipolarity_max = 0.05
phi_peak_rel_tol = 0.05
)"},
    {"large_domain", R"([scenario]
name = large_domain

[plasma]
eps = 1/1836
kappa = 0.0025
chi = 4e-6
macro_to_mfp = 0
sigma_ratio = 0.1

[mesh]
n_cells = 1024

[scheme]
splitting = lie-modified
electron_flux = controlled-rusanov
ion_flux = scaled-fixed-hll
electron_bc = consistent
dt_cap = 6e-6

[run]
t_final = 4

[checks]
ambipolarity_max = 0.05
phi_peak_rel_tol = 0.05
)"},
};

} // namespace

double parse_number(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_plain(text);
  const double num = parse_plain(text.substr(0, slash));
  const double den = parse_plain(text.substr(slash + 1));
  if (den == 0.0) throw ConfigError("zero denominator in '" + std::string(text) + "'");
  return num / den;
}

NondimParams RunConfig::params() const {
  try {
    return NondimParams::make(eps, kappa, chi, macro_to_mfp, sigma_ratio);
  } catch (const ParameterError& e) {
    throw ConfigError(e.what());
  }
}

void RunConfig::validate() const {
  if (scenario.empty()) throw ConfigError("scenario.name must not be empty");
  (void)params();
  if (n_cells < 4) throw ConfigError("mesh.n_cells must be >= 4");
  scheme.validate();
  if (!(snapshot_interval >= 0.0) || !std::isfinite(snapshot_interval)) {
    throw ConfigError("output.snapshot_interval must be >= 0");
  }
  if (output_dir.empty()) throw ConfigError("output.dir must not be empty");
  for (const auto& t : {checks.ambipolarity_max, checks.phi_peak_rel_tol, checks.oscillation_max}) {
    if (t && !(*t >= 0.0)) throw ConfigError("check thresholds must be >= 0");
  }
}

RunConfig parse_config(std::string_view text) {
  RunConfig cfg;
  std::string section;
  std::map<std::string, std::size_t, std::less<>> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) {
        throw ConfigParseError(line_no, "malformed section header");
      }
      section = std::string(trim(line.substr(1, line.size() - 2)));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigParseError(line_no, "expected key = value");
    if (section.empty()) throw ConfigParseError(line_no, "key outside of a section");
    const std::string key = section + "." + std::string(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (const auto prev = seen.find(key); prev != seen.end()) {
      throw ConfigParseError(line_no, "duplicate key '" + key + "' (first on line " +
                                          std::to_string(prev->second) + ")");
    }
    seen.emplace(key, line_no);
    try {
      assign(cfg, key, value);
    } catch (const ConfigParseError&) {
      throw;
    } catch (const ConfigError& e) {
      throw ConfigParseError(line_no, e.what());
    }
  }
  cfg.validate();
  return cfg;
}

void apply_override(RunConfig& cfg, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) {
    throw ConfigError("override '" + std::string(assignment) + "' is not section.key=value");
  }
  const std::string_view key = trim(assignment.substr(0, eq));
  if (key.find('.') == std::string_view::npos) {
    throw ConfigError("override key '" + std::string(key) + "' needs a section prefix");
  }
  assign(cfg, key, trim(assignment.substr(eq + 1)));
  cfg.validate();
}

std::string to_config_text(const RunConfig& c) {
  std::ostringstream o;
  o << "[scenario]\nname = " << c.scenario << "\n\n";
  o << "[plasma]\neps = " << fmt(c.eps) << "\nkappa = " << fmt(c.kappa) << "\nchi = " << fmt(c.chi)
    << "\nmacro_to_mfp = " << fmt(c.macro_to_mfp) << "\nsigma_ratio = " << fmt(c.sigma_ratio)
    << "\n\n";
  o << "[mesh]\nn_cells = " << c.n_cells << "\n\n";
  const SchemeConfig& s = c.scheme;
  o << "[scheme]\nsplitting = " << to_string(s.splitting)
    << "\nelectron_flux = " << to_string(s.electron_flux) << "\nion_flux = " << to_string(s.ion_flux)
    << "\nelectron_bc = " << to_string(s.electron_bc)
    << "\nion_diffusion_tuning = " << fmt(s.ion_diffusion_tuning)
    << "\ncfl_safety = " << fmt(s.cfl_safety)
    << "\ndt_cap = " << (s.dt_cap ? fmt(*s.dt_cap) : std::string("none"))
    << "\nbackend = " << to_string(s.backend) << "\n\n";
  o << "[run]\nt_final = " << fmt(s.t_final) << "\nsteady_tol = " << fmt(s.steady_tol)
    << "\nsteady_window = " << s.steady_window << "\nhistory_every = " << s.history_every
    << "\n\n";
  o << "[output]\ndir = " << c.output_dir << "\nsnapshot_every = " << s.snapshot_every
    << "\nsnapshot_interval = " << fmt(c.snapshot_interval)
    << "\nsnapshot_final = " << (c.snapshot_final ? "true" : "false") << "\n";
  const AcceptanceChecks& k = c.checks;
  if (k.ambipolarity_max || k.phi_peak_rel_tol || k.oscillation_max) {
    o << "\n[checks]\n";
    if (k.ambipolarity_max) o << "ambipolarity_max = " << fmt(*k.ambipolarity_max) << "\n";
    if (k.phi_peak_rel_tol) o << "phi_peak_rel_tol = " << fmt(*k.phi_peak_rel_tol) << "\n";
    if (k.oscillation_max) o << "oscillation_max = " << fmt(*k.oscillation_max) << "\n";
  }
  return o.str();
}

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const Preset& p : kPresets) names.emplace_back(p.name);
  return names;
}

std::string preset_text(std::string_view name) {
  for (const Preset& p : kPresets) {
    if (name == p.name) return p.text;
  }
  throw ConfigError("unknown preset '" + std::string(name) + "'");
}

} // namespace sheath
