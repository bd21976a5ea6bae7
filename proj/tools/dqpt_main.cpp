// dqpt: quench dynamics of two-band lattice models under twisted boundary
// conditions. Subcommands compute rate-function series, critical quantities,
// flux scans, finite-size scaling sweeps, the thermodynamic-limit rate
// function, and the interacting-chain rate function via exact
// diagonalization.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dqpt/band_models.hpp"
#include "dqpt/critical.hpp"
#include "dqpt/ed/interacting_ssh.hpp"
#include "dqpt/errors.hpp"
#include "dqpt/loschmidt.hpp"
#include "dqpt/series_io.hpp"
#include "dqpt/thermo.hpp"

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kTwoPi = 2.0 * kPi;

// Angles accept plain radians ("1.4111") or pi units ("0.783pi").
double parse_angle(const std::string& text) {
  std::string body = text;
  double factor = 1.0;
  if (body.size() > 2 && body.substr(body.size() - 2) == "pi") {
    body = body.substr(0, body.size() - 2);
    factor = kPi;
  }
  std::size_t used = 0;
  const double value = std::stod(body, &used);
  if (used != body.size()) throw CLI::ValidationError("angle", "cannot parse angle '" + text + "'");
  return value * factor;
}

double canonical_flux(const std::string& text) {
  double phi = std::fmod(parse_angle(text), kTwoPi);
  if (phi < 0.0) phi += kTwoPi;
  return phi;
}

std::string fmt(double v, int digits = 6) {
  std::ostringstream out;
  out.precision(digits);
  out << v;
  return out.str();
}

// Flat JSON config mirroring the flags of one subcommand.
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App*, bool, bool, std::string) const override { return "{}"; }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    nlohmann::json doc = nlohmann::json::parse(input);
    if (!doc.is_object())
      throw CLI::ConfigError::Extras("config must be a flat JSON object of flag values");
    std::vector<CLI::ConfigItem> items;
    for (const auto& [key, value] : doc.items()) {
      CLI::ConfigItem item;
      item.name = key;
      if (value.is_array()) {
        for (const auto& element : value) item.inputs.push_back(scalar_repr(element));
      } else {
        item.inputs.push_back(scalar_repr(value));
      }
      items.push_back(item);
    }
    return items;
  }

 private:
  static std::string scalar_repr(const nlohmann::json& value) {
    if (value.is_string()) return value.get<std::string>();
    if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
    std::ostringstream out;
    out.precision(17);
    if (value.is_number_integer())
      out << value.get<long long>();
    else
      out << value.get<double>();
    return out.str();
  }
};

struct ModelOptions {
  std::string model = "ssh";
  double gi = 0.0, gf = 0.0;
  double theta_i = 0.0, theta_f = 0.0, jv = 0.0;
  double j1 = 1.0, j2i = 0.0, j2f = 0.0, j3 = 0.0, j4 = 0.0, alpha = 1.0;
  double mui = 0.0, muf = 0.0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--model", model, "Model: ssh | creutz | lrssh | qwz")
        ->check(CLI::IsMember({"ssh", "creutz", "lrssh", "qwz"}))
        ->capture_default_str();
    cmd->add_option("--gi", gi, "SSH prequench gamma = J2/J1");
    cmd->add_option("--gf", gf, "SSH postquench gamma");
    cmd->add_option("--ti", theta_i, "Creutz prequench theta");
    cmd->add_option("--tf", theta_f, "Creutz postquench theta");
    cmd->add_option("--jv", jv, "Creutz jv_tilde = J_v/2J in [0,1)");
    cmd->add_option("--j1", j1, "Long-range SSH J1")->capture_default_str();
    cmd->add_option("--j2i", j2i, "Long-range SSH prequench J2");
    cmd->add_option("--j2f", j2f, "Long-range SSH postquench J2");
    cmd->add_option("--j3", j3, "Long-range SSH J3")->capture_default_str();
    cmd->add_option("--j4", j4, "Long-range SSH J4")->capture_default_str();
    cmd->add_option("--alpha", alpha, "Long-range SSH decay exponent")->capture_default_str();
    cmd->add_option("--mui", mui, "QWZ prequench chemical potential");
    cmd->add_option("--muf", muf, "QWZ postquench chemical potential");
  }

  dqpt::QuenchSpec quench(int size) const {
    using namespace dqpt;
    if (model == "ssh") return make_quench(Ssh{gi}, Ssh{gf});
    if (model == "creutz")
      return make_quench(Creutz{theta_i, jv}, Creutz{theta_f, jv});
    if (model == "lrssh") {
      if (size < 2) throw std::invalid_argument("lrssh requires --L to fix half_range = L/2");
      const int half = size / 2;
      return make_quench(LongRangeSsh{j1, j2i, j3, j4, alpha, half},
                         LongRangeSsh{j1, j2f, j3, j4, alpha, half});
    }
    return make_quench(QiWuZhang{mui}, QiWuZhang{muf});
  }
};

std::filesystem::path output_path(const std::string& out, const std::string& stem,
                                  dqpt::SeriesFormat format) {
  if (!out.empty()) return out;
  return stem + "." + dqpt::format_extension(format);
}

double default_dt(const dqpt::QuenchSpec& quench, int size, double t_max) {
  double dt = t_max / 4000.0;
  try {
    const auto set = dqpt::solve_critical_set(quench, std::max(size, 2), 1);
    double t1 = std::numeric_limits<double>::infinity();
    for (const auto& pair : set.pairs)
      if (!pair.t_star.empty()) t1 = std::min(t1, pair.t_star.front());
    if (std::isfinite(t1)) dt = std::min(dt, t1 / 400.0);
  } catch (const std::exception&) {
    // no critical set: keep the uniform default
  }
  return dt;
}

nlohmann::json critical_set_json(const dqpt::CriticalSet& set, const dqpt::QuenchSpec& quench,
                                 int size) {
  nlohmann::json doc;
  doc["metadata"] = {{"quench", dqpt::describe_quench(quench)}, {"L", size}};
  doc["pairs"] = nlohmann::json::array();
  for (const auto& pair : set.pairs) {
    nlohmann::json p;
    if (pair.k_c.dims == 1) {
      p["k_c"] = pair.k_c.kx;
      p["k_c_over_pi"] = pair.k_c.kx / kPi;
    } else {
      p["k_c"] = {pair.k_c.kx, pair.k_c.ky};
      p["k_c_over_pi"] = {pair.k_c.kx / kPi, pair.k_c.ky / kPi};
    }
    p["eps_f"] = pair.eps_f;
    p["phi_c"] = pair.phi_c;
    p["phi_c_over_pi"] = pair.phi_c / kPi;
    if (pair.phi_c_y) {
      p["phi_c_y"] = *pair.phi_c_y;
      p["phi_c_y_over_pi"] = *pair.phi_c_y / kPi;
    }
    p["t_star"] = pair.t_star;
    p["multiplicity"] = pair.multiplicity;
    doc["pairs"].push_back(p);
  }
  if (set.t1_interval) doc["t1_interval"] = {set.t1_interval->lo, set.t1_interval->hi};
  return doc;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << text;
}

// ---------------------------------------------------------------------------

int run_rate(const ModelOptions& model, int size, int size_y, const std::string& flux_text,
             const std::string& flux_y_text, double t_max, double dt, bool insert_critical,
             const std::string& out, const std::string& format_name) {
  const auto format = dqpt::format_from_name(format_name);
  const double phi = canonical_flux(flux_text);
  const dqpt::QuenchSpec quench = model.quench(size);
  const bool two_d = dqpt::model_dims(quench.initial) == 2;
  const dqpt::MomentumGrid grid =
      two_d ? dqpt::make_grid(size, size_y > 0 ? size_y : size, phi, canonical_flux(flux_y_text))
            : dqpt::make_grid(size, phi);

  dqpt::TimeWindow window{t_max, dt > 0.0 ? dt : default_dt(quench, size, t_max)};
  std::vector<double> times = dqpt::uniform_times(window);
  if (insert_critical) times = dqpt::with_critical_times(std::move(times), quench, size, t_max);

  const dqpt::RateSeries series = dqpt::rate_function(quench, grid, times);
  const auto path = output_path(out, "rate", format);
  dqpt::write_series(series, path, format);

  const auto peaks = dqpt::local_maxima(series);
  std::ostringstream summary;
  summary << "rate: wrote " << path.string() << " (" << series.times.size() << " samples)";
  if (!peaks.empty()) {
    summary << "; peaks at t =";
    for (std::size_t i = 0; i < std::min<std::size_t>(peaks.size(), 4); ++i)
      summary << " " << fmt(peaks[i].t, 4) << " (lambda=" << fmt(peaks[i].lambda, 4) << ")";
  }
  std::cout << summary.str() << "\n";
  return 0;
}

int run_critical(const ModelOptions& model, int size, int size_y, int n_max,
                 const std::string& axis_name, const std::string& out,
                 const std::string& format_name) {
  const auto format = dqpt::format_from_name(format_name);
  const dqpt::QuenchSpec quench = model.quench(size);
  dqpt::CriticalSet set;
  if (dqpt::model_dims(quench.initial) == 2) {
    const dqpt::TwistAxis axis = axis_name == "y"    ? dqpt::TwistAxis::y
                                 : axis_name == "both" ? dqpt::TwistAxis::both
                                                       : dqpt::TwistAxis::x;
    set = dqpt::qwz_critical_pairs(quench, size, size_y > 0 ? size_y : size, axis, n_max);
  } else {
    set = dqpt::solve_critical_set(quench, size, n_max);
  }

  const auto path = output_path(out, "critical", format);
  if (format == dqpt::SeriesFormat::json) {
    write_text(path, critical_set_json(set, quench, size).dump(2) + "\n");
  } else {
    std::ostringstream csv;
    csv << "kx,ky,eps_f,phi_c,phi_c_y,multiplicity,t_star\n";
    csv.precision(17);
    for (const auto& pair : set.pairs) {
      csv << pair.k_c.kx << "," << (pair.k_c.dims == 2 ? pair.k_c.ky : 0.0) << "," << pair.eps_f
          << "," << pair.phi_c << "," << (pair.phi_c_y ? *pair.phi_c_y : 0.0) << ","
          << pair.multiplicity << ",";
      for (std::size_t i = 0; i < pair.t_star.size(); ++i)
        csv << (i ? ";" : "") << pair.t_star[i];
      csv << "\n";
    }
    write_text(path, csv.str());
  }

  std::ostringstream summary;
  summary << "critical: " << set.pairs.size() << " pair(s), " << set.total_momentum_count()
          << " momenta";
  for (const auto& pair : set.pairs) {
    summary << "; k_c/pi=" << fmt(pair.k_c.kx / kPi, 4);
    if (pair.k_c.dims == 2) summary << "," << fmt(pair.k_c.ky / kPi, 4);
    summary << " phi_c/pi=" << fmt(pair.phi_c / kPi, 4) << " t*=";
    for (std::size_t i = 0; i < pair.t_star.size(); ++i)
      summary << (i ? "," : "") << fmt(pair.t_star[i], 4);
  }
  summary << "; wrote " << path.string();
  std::cout << summary.str() << "\n";
  return 0;
}

int run_flux_scan(const ModelOptions& model, int size, const std::string& phi_min_text,
                  const std::string& phi_max_text, int phi_count, double t_max, double dt,
                  bool include_critical, const std::string& out,
                  const std::string& format_name) {
  const auto format = dqpt::format_from_name(format_name);
  const dqpt::QuenchSpec quench = model.quench(size);
  const double phi_min = parse_angle(phi_min_text);
  const double phi_max = parse_angle(phi_max_text);
  if (phi_count < 2) throw std::invalid_argument("flux-scan: --phi-count must be >= 2");

  std::vector<double> fluxes;
  for (int i = 0; i < phi_count; ++i)
    fluxes.push_back(phi_min + (phi_max - phi_min) * i / (phi_count - 1));
  if (include_critical) {
    try {
      const auto set = dqpt::solve_critical_set(quench, size, 1);
      for (const auto& pair : set.pairs)
        if (pair.phi_c >= phi_min && pair.phi_c <= phi_max) fluxes.push_back(pair.phi_c);
    } catch (const std::exception&) {
    }
    std::sort(fluxes.begin(), fluxes.end());
    fluxes.erase(std::unique(fluxes.begin(), fluxes.end()), fluxes.end());
  }

  dqpt::TimeWindow window{t_max, dt > 0.0 ? dt : default_dt(quench, size, t_max)};
  const auto points = dqpt::lambda_max_vs_flux(quench, size, fluxes, window);

  const auto path = output_path(out, "flux-scan", format);
  if (format == dqpt::SeriesFormat::csv) {
    std::ostringstream csv;
    csv << "phi,phi_over_pi,lambda_max\n";
    csv.precision(17);
    for (const auto& p : points) {
      csv << p.flux << "," << p.flux / kPi << ",";
      if (!p.has_value)
        csv << "nan";
      else if (std::isinf(p.lambda_max))
        csv << "inf";
      else
        csv << p.lambda_max;
      csv << "\n";
    }
    write_text(path, csv.str());
  } else {
    nlohmann::json doc;
    doc["metadata"] = {{"quench", dqpt::describe_quench(quench)}, {"L", size}};
    doc["phi"] = nlohmann::json::array();
    doc["lambda_max"] = nlohmann::json::array();
    for (const auto& p : points) {
      doc["phi"].push_back(p.flux);
      if (!p.has_value)
        doc["lambda_max"].push_back(nullptr);
      else if (std::isinf(p.lambda_max))
        doc["lambda_max"].push_back("inf");
      else
        doc["lambda_max"].push_back(p.lambda_max);
    }
    write_text(path, doc.dump(2) + "\n");
  }

  std::ostringstream summary;
  summary << "flux-scan: " << points.size() << " flux values";
  std::vector<double> divergent;
  for (const auto& p : points)
    if (p.has_value && std::isinf(p.lambda_max)) divergent.push_back(p.flux);
  if (!divergent.empty()) {
    summary << "; divergent at phi/pi =";
    for (double phi : divergent) summary << " " << fmt(phi / kPi, 4);
  }
  summary << "; wrote " << path.string();
  std::cout << summary.str() << "\n";
  return 0;
}

int run_scaling(const ModelOptions& model, std::vector<int> sizes, const std::string& flux_text,
                double t_max, double dt, const std::string& out,
                const std::string& format_name) {
  const auto format = dqpt::format_from_name(format_name);
  if (sizes.empty()) throw std::invalid_argument("scaling: --sizes must not be empty");
  const double phi = canonical_flux(flux_text);
  const dqpt::QuenchSpec quench = model.quench(sizes.front());
  dqpt::TimeWindow window{t_max, dt > 0.0 ? dt : default_dt(quench, sizes.front(), t_max)};
  const auto points = dqpt::size_sweep(quench, sizes, phi, window);

  const auto path = output_path(out, "scaling", format);
  if (format == dqpt::SeriesFormat::csv) {
    std::ostringstream csv;
    csv << "L,t_peak,lambda_max\n";
    csv.precision(17);
    for (const auto& p : points) {
      csv << p.size << ",";
      if (p.has_value)
        csv << p.t_peak << "," << p.lambda_max;
      else
        csv << "nan,nan";
      csv << "\n";
    }
    write_text(path, csv.str());
  } else {
    nlohmann::json doc;
    doc["metadata"] = {{"quench", dqpt::describe_quench(quench)}, {"flux", phi}};
    doc["L"] = nlohmann::json::array();
    doc["t_peak"] = nlohmann::json::array();
    doc["lambda_max"] = nlohmann::json::array();
    for (const auto& p : points) {
      doc["L"].push_back(p.size);
      doc["t_peak"].push_back(p.has_value ? nlohmann::json(p.t_peak) : nlohmann::json());
      doc["lambda_max"].push_back(p.has_value ? nlohmann::json(p.lambda_max) : nlohmann::json());
    }
    write_text(path, doc.dump(2) + "\n");
  }

  std::ostringstream summary;
  summary << "scaling: " << points.size() << " sizes";
  if (!points.empty() && points.back().has_value)
    summary << "; L=" << points.back().size << " t1*=" << fmt(points.back().t_peak, 5)
            << " lambda_max=" << fmt(points.back().lambda_max, 5);
  summary << "; wrote " << path.string();
  std::cout << summary.str() << "\n";
  return 0;
}

int run_thermo(const ModelOptions& model, int size, double t_max, double dt,
               const std::string& out, const std::string& format_name) {
  const auto format = dqpt::format_from_name(format_name);
  const dqpt::QuenchSpec quench = model.quench(size);
  dqpt::TimeWindow window{t_max, dt > 0.0 ? dt : t_max / 400.0};
  const auto times = dqpt::uniform_times(window);
  const dqpt::RateSeries series = dqpt::thermo_series(quench, times);
  const auto path = output_path(out, "thermo", format);
  dqpt::write_series(series, path, format);

  const auto peaks = dqpt::local_maxima(series);
  std::ostringstream summary;
  summary << "thermo: wrote " << path.string() << " (" << series.times.size() << " samples)";
  if (!peaks.empty())
    summary << "; first peak t=" << fmt(peaks.front().t, 4)
            << " lambda=" << fmt(peaks.front().lambda, 4);
  std::cout << summary.str() << "\n";
  return 0;
}

int run_ed(int l_cells, double u, double j1, double j2i, double j2f,
           const std::string& flux_text, double t_max, double dt, const std::string& out,
           const std::string& format_name) {
  const auto format = dqpt::format_from_name(format_name);
  dqpt::ed::EdQuench quench;
  quench.l_cells = l_cells;
  quench.u = u;
  quench.j1 = j1;
  quench.j2_initial = j2i;
  quench.j2_final = j2f;
  quench.flux = canonical_flux(flux_text);

  dqpt::TimeWindow window{t_max, dt > 0.0 ? dt : t_max / 4000.0};
  const auto times = dqpt::uniform_times(window);
  const dqpt::RateSeries series = dqpt::ed::ed_rate_function(quench, times);
  const auto path = output_path(out, "ed", format);
  dqpt::write_series(series, path, format);

  const auto peaks = dqpt::local_maxima(series);
  double best_lambda = 0.0, best_t = 0.0;
  for (const auto& p : peaks)
    if (p.lambda > best_lambda) {
      best_lambda = p.lambda;
      best_t = p.t;
    }
  std::ostringstream summary;
  summary << "ed: wrote " << path.string() << " (" << series.times.size() << " samples)";
  if (best_lambda > 0.0)
    summary << "; highest peak lambda=" << fmt(best_lambda, 4) << " at t=" << fmt(best_t, 4);
  std::cout << summary.str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Loschmidt-echo rate functions and critical quantities of quenched "
               "two-band lattice models under twisted boundary conditions"};
  app.require_subcommand(1);
  const auto json_config = std::make_shared<JsonConfig>();

  auto add_common = [&](CLI::App* cmd) {
    cmd->config_formatter(json_config);
    cmd->set_config("--config", "", "Flat JSON config mirroring the flags; flags override");
  };

  // rate
  ModelOptions rate_model;
  int rate_L = 20, rate_Ly = 0;
  std::string rate_flux = "0", rate_flux_y = "0";
  double rate_tmax = 10.0, rate_dt = 0.0;
  bool rate_no_tstar = false;
  std::string rate_out, rate_format = "csv";
  auto* rate_cmd = app.add_subcommand("rate", "Rate function lambda(t) on a finite flux grid");
  rate_model.attach(rate_cmd);
  rate_cmd->add_option("--L", rate_L, "Lattice size (x size for the 2D model)")->capture_default_str();
  rate_cmd->add_option("--Ly", rate_Ly, "y size (2D model; defaults to --L)");
  rate_cmd->add_option("--flux", rate_flux, "Boundary flux, radians or '0.783pi'")->capture_default_str();
  rate_cmd->add_option("--flux-y", rate_flux_y, "y-axis flux (2D model)")->capture_default_str();
  rate_cmd->add_option("--tmax", rate_tmax, "Time window [0, tmax]")->capture_default_str();
  rate_cmd->add_option("--dt", rate_dt, "Time step (default: tmax/4000, refined near t*)");
  rate_cmd->add_flag("--no-critical-times", rate_no_tstar,
                     "Do not insert the exact critical times into the sampling grid");
  rate_cmd->add_option("--out", rate_out, "Output path (default rate.<format>)");
  rate_cmd->add_option("--format", rate_format, "csv | json")->capture_default_str();
  add_common(rate_cmd);

  // critical
  ModelOptions crit_model;
  int crit_L = 20, crit_Ly = 0, crit_n = 2;
  std::string crit_axis = "x", crit_out, crit_format = "json";
  auto* crit_cmd =
      app.add_subcommand("critical", "Critical momenta, fluxes, and times of a quench");
  crit_model.attach(crit_cmd);
  crit_cmd->add_option("--L", crit_L, "Lattice size")->capture_default_str();
  crit_cmd->add_option("--Ly", crit_Ly, "y size (2D model; defaults to --L)");
  crit_cmd->add_option("--n", crit_n, "Number of critical times per pair")->capture_default_str();
  crit_cmd->add_option("--axis", crit_axis, "2D twist axis: x | y | both")
      ->check(CLI::IsMember({"x", "y", "both"}))
      ->capture_default_str();
  crit_cmd->add_option("--out", crit_out, "Output path (default critical.<format>)");
  crit_cmd->add_option("--format", crit_format, "csv | json")->capture_default_str();
  add_common(crit_cmd);

  // flux-scan
  ModelOptions scan_model;
  int scan_L = 20, scan_count = 65;
  std::string scan_phi_min = "0", scan_phi_max = "1pi";
  double scan_tmax = 10.0, scan_dt = 0.0;
  bool scan_no_critical = false;
  std::string scan_out, scan_format = "csv";
  auto* scan_cmd =
      app.add_subcommand("flux-scan", "lambda_max versus flux over a window");
  scan_model.attach(scan_cmd);
  scan_cmd->add_option("--L", scan_L, "Lattice size")->capture_default_str();
  scan_cmd->add_option("--phi-min", scan_phi_min, "Scan start (radians or '0.5pi')")->capture_default_str();
  scan_cmd->add_option("--phi-max", scan_phi_max, "Scan end")->capture_default_str();
  scan_cmd->add_option("--phi-count", scan_count, "Number of scan points")->capture_default_str();
  scan_cmd->add_option("--tmax", scan_tmax, "Time window")->capture_default_str();
  scan_cmd->add_option("--dt", scan_dt, "Time step");
  scan_cmd->add_flag("--no-include-critical", scan_no_critical,
                     "Do not add the computed critical fluxes to the scan grid");
  scan_cmd->add_option("--out", scan_out, "Output path (default flux-scan.<format>)");
  scan_cmd->add_option("--format", scan_format, "csv | json")->capture_default_str();
  add_common(scan_cmd);

  // scaling
  ModelOptions scale_model;
  std::vector<int> scale_sizes;
  std::string scale_flux = "0";
  double scale_tmax = 4.0, scale_dt = 0.0;
  std::string scale_out, scale_format = "csv";
  auto* scale_cmd =
      app.add_subcommand("scaling", "First-peak time and height versus system size");
  scale_model.attach(scale_cmd);
  scale_cmd->add_option("--sizes", scale_sizes, "System sizes")->delimiter(',')->required();
  scale_cmd->add_option("--flux", scale_flux, "Fixed flux")->capture_default_str();
  scale_cmd->add_option("--tmax", scale_tmax, "Time window")->capture_default_str();
  scale_cmd->add_option("--dt", scale_dt, "Time step");
  scale_cmd->add_option("--out", scale_out, "Output path (default scaling.<format>)");
  scale_cmd->add_option("--format", scale_format, "csv | json")->capture_default_str();
  add_common(scale_cmd);

  // thermo
  ModelOptions thermo_model;
  int thermo_L = 20;
  double thermo_tmax = 10.0, thermo_dt = 0.0;
  std::string thermo_out, thermo_format = "csv";
  auto* thermo_cmd =
      app.add_subcommand("thermo", "Thermodynamic-limit rate function by quadrature");
  thermo_model.attach(thermo_cmd);
  thermo_cmd->add_option("--L", thermo_L, "Size fixing half_range for the long-range model")
      ->capture_default_str();
  thermo_cmd->add_option("--tmax", thermo_tmax, "Time window")->capture_default_str();
  thermo_cmd->add_option("--dt", thermo_dt, "Time step (default tmax/400)");
  thermo_cmd->add_option("--out", thermo_out, "Output path (default thermo.<format>)");
  thermo_cmd->add_option("--format", thermo_format, "csv | json")->capture_default_str();
  add_common(thermo_cmd);

  // ed
  int ed_L = 5;
  double ed_u = 0.0, ed_j1 = 1.0, ed_j2i = 0.0, ed_j2f = 0.0;
  double ed_tmax = 5.0, ed_dt = 0.0;
  std::string ed_flux = "0", ed_out, ed_format = "csv";
  auto* ed_cmd = app.add_subcommand(
      "ed", "Interacting-chain rate function at half filling (exact diagonalization)");
  ed_cmd->add_option("--L", ed_L, "Unit cells")->capture_default_str();
  ed_cmd->add_option("--U", ed_u, "Nearest-neighbor repulsion")->capture_default_str();
  ed_cmd->add_option("--j1", ed_j1, "Intracell hopping")->capture_default_str();
  ed_cmd->add_option("--j2i", ed_j2i, "Prequench intercell hopping")->required();
  ed_cmd->add_option("--j2f", ed_j2f, "Postquench intercell hopping")->required();
  ed_cmd->add_option("--flux", ed_flux, "Boundary flux")->capture_default_str();
  ed_cmd->add_option("--tmax", ed_tmax, "Time window")->capture_default_str();
  ed_cmd->add_option("--dt", ed_dt, "Time step");
  ed_cmd->add_option("--out", ed_out, "Output path (default ed.<format>)");
  ed_cmd->add_option("--format", ed_format, "csv | json")->capture_default_str();
  add_common(ed_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (rate_cmd->parsed())
      return run_rate(rate_model, rate_L, rate_Ly, rate_flux, rate_flux_y, rate_tmax, rate_dt,
                      !rate_no_tstar, rate_out, rate_format);
    if (crit_cmd->parsed())
      return run_critical(crit_model, crit_L, crit_Ly, crit_n, crit_axis, crit_out, crit_format);
    if (scan_cmd->parsed())
      return run_flux_scan(scan_model, scan_L, scan_phi_min, scan_phi_max, scan_count, scan_tmax,
                           scan_dt, !scan_no_critical, scan_out, scan_format);
    if (scale_cmd->parsed())
      return run_scaling(scale_model, scale_sizes, scale_flux, scale_tmax, scale_dt, scale_out,
                         scale_format);
    if (thermo_cmd->parsed())
      return run_thermo(thermo_model, thermo_L, thermo_tmax, thermo_dt, thermo_out, thermo_format);
    if (ed_cmd->parsed())
      return run_ed(ed_L, ed_u, ed_j1, ed_j2i, ed_j2f, ed_flux, ed_tmax, ed_dt, ed_out, ed_format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "argument error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
