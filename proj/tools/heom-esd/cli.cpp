#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"

namespace heomesd::cli {

namespace {

std::string error_message(heom_status status) {
  const std::string detail = heom_last_error();
  return detail.empty() ? heom_status_string(status) : detail;
}

int exit_code_for(heom_status status) {
  switch (status) {
    case HEOM_OK: return kExitOk;
    case HEOM_ERR_DOMAIN:
    case HEOM_ERR_SINGULAR:
    case HEOM_ERR_INVALID_STATE: return kExitUsage;
    case HEOM_ERR_IO: return kExitIo;
    default: return kExitNumerical;
  }
}

void require_range(bool ok, const std::string& key, double value, const char* rule) {
  if (!ok) {
    std::ostringstream ss;
    ss << key << ": " << format_number(value) << " is out of range (" << rule << ")";
    throw UsageError(ss.str());
  }
}

void validate_params(const heom_params& p) {
  require_range(std::isfinite(p.epsilon) && p.epsilon > 0.0, "epsilon", p.epsilon, "> 0");
  require_range(std::isfinite(p.eta) && p.eta >= 0.0, "eta", p.eta, ">= 0");
  require_range(std::isfinite(p.gamma) && p.gamma > 0.0, "gamma", p.gamma, "> 0");
  require_range(std::isfinite(p.beta) && p.beta > 0.0, "beta", p.beta, "> 0");
  require_range(p.matsubara >= 0, "matsubara", p.matsubara, ">= 0");
  require_range(p.depth >= 1, "depth", p.depth, ">= 1");
  require_range(std::isfinite(p.dt) && p.dt > 0.0, "dt", p.dt, "> 0");
  require_range(std::isfinite(p.t_final) && p.t_final > 0.0, "t-final", p.t_final, "> 0");
  require_range(p.sample_every >= 1, "sample-every", p.sample_every, ">= 1");
  require_range(p.threads >= 1, "threads", p.threads, ">= 1");
  require_range(std::isfinite(p.burn_in) && p.burn_in >= 0.0, "burn-in", p.burn_in, ">= 0");
}

void validate_sweep_bound(const std::string& axis, double v) {
  const std::string key = "sweep (" + axis + ")";
  if (axis == "eta") {
    require_range(std::isfinite(v) && v >= 0.0, key, v, ">= 0");
  } else {
    require_range(std::isfinite(v) && v > 0.0, key, v, "> 0");
  }
}

heom_axis axis_of(const std::string& name) {
  if (name == "eta") return HEOM_AXIS_ETA;
  if (name == "gamma") return HEOM_AXIS_GAMMA;
  return HEOM_AXIS_BETA;
}

const char* converge_axis_label(heom_converge_axis axis) {
  switch (axis) {
    case HEOM_CONVERGE_DT: return "dt";
    case HEOM_CONVERGE_DEPTH: return "L";
    case HEOM_CONVERGE_MATSUBARA: return "K";
  }
  return "?";
}

struct RunDeleter {
  void operator()(heom_run* r) const { heom_run_destroy(r); }
};
struct SweepDeleter {
  void operator()(heom_sweep* s) const { heom_sweep_destroy(s); }
};

int load_initial(const RunConfig& config, heom_complex* rho, std::ostream& diag) {
  const heom_status st = heom_state_preset(config.initial.c_str(), rho);
  if (st != HEOM_OK) {
    diag << "heom-esd: initial state '" << config.initial << "': " << error_message(st) << "\n";
    return exit_code_for(st);
  }
  return kExitOk;
}

int run_evolve(const RunConfig& config, std::ostream& csv, std::ostream& diag) {
  heom_complex rho[16];
  if (int code = load_initial(config, rho, diag)) return code;
  heom_run* raw = nullptr;
  const heom_status st = heom_run_create(&config.params, rho, &raw);
  std::unique_ptr<heom_run, RunDeleter> run(raw);
  if (st != HEOM_OK) {
    diag << "heom-esd: evolve failed: " << error_message(st) << "\n";
    return exit_code_for(st);
  }
  write_metadata(csv, config);
  csv << "time,concurrence,lambda_gap,trace_err,herm_err\n";
  const std::size_t n = heom_run_sample_count(run.get());
  for (std::size_t i = 0; i < n; ++i) {
    heom_sample s;
    heom_run_sample(run.get(), i, &s);
    csv << format_number(s.time) << ',' << format_number(s.concurrence) << ','
        << format_number(s.lambda_gap) << ',' << format_number(s.trace_err) << ','
        << format_number(s.herm_err) << '\n';
  }
  return kExitOk;
}

int run_sweep_command(const RunConfig& config, std::ostream& csv, std::ostream& diag) {
  if (!config.sweep) throw UsageError("sweep: --sweep AXIS:START:STOP:N is required");
  heom_complex rho[16];
  if (int code = load_initial(config, rho, diag)) return code;
  const SweepAxisSpec& axis = *config.sweep;
  heom_sweep* raw = nullptr;
  const heom_status st = heom_sweep_create(&config.params, rho, axis_of(axis.axis), axis.start,
                                           axis.stop, axis.points, &raw);
  std::unique_ptr<heom_sweep, SweepDeleter> sweep(raw);
  if (st != HEOM_OK) {
    diag << "heom-esd: sweep failed: " << error_message(st) << "\n";
    return exit_code_for(st);
  }
  write_metadata(csv, config);
  csv << "param,value,t_death_first,t_rebirth_first,n_events,status\n";
  const std::size_t n = heom_sweep_point_count(sweep.get());
  for (std::size_t i = 0; i < n; ++i) {
    heom_sweep_point p;
    heom_sweep_point_get(sweep.get(), i, &p);
    csv << axis.axis << ',' << format_number(p.value) << ',';
    if (p.status == HEOM_OK) {
      if (p.has_death) csv << format_number(p.t_death);
      csv << ',';
      if (p.has_rebirth) csv << format_number(p.t_rebirth);
      csv << ',' << p.n_events << ",ok\n";
    } else {
      csv << ",,," << heom_status_string(p.status) << '\n';
      diag << "heom-esd: " << axis.axis << " = " << format_number(p.value) << ": "
           << heom_sweep_point_message(sweep.get(), i) << "\n";
    }
  }
  return kExitOk;
}

int run_converge_command(const RunConfig& config, std::ostream& csv, std::ostream& diag) {
  heom_complex rho[16];
  if (int code = load_initial(config, rho, diag)) return code;
  heom_converge_row rows[3];
  const heom_status st = heom_converge(&config.params, rho, rows);
  if (st != HEOM_OK) {
    diag << "heom-esd: converge failed: " << error_message(st) << "\n";
    return exit_code_for(st);
  }
  write_metadata(csv, config);
  csv << "axis,coarse,fine,max_abs_dev\n";
  for (const auto& r : rows) {
    csv << converge_axis_label(r.axis) << ',' << format_number(r.coarse) << ','
        << format_number(r.fine) << ',' << format_number(r.max_abs_dev) << '\n';
  }
  return kExitOk;
}

}  // namespace

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

SweepAxisSpec parse_sweep(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.size() != 4) {
    throw UsageError("sweep: expected AXIS:START:STOP:N, got '" + text + "'");
  }
  SweepAxisSpec spec;
  spec.axis = parts[0];
  if (spec.axis != "eta" && spec.axis != "gamma" && spec.axis != "beta") {
    throw UsageError("sweep: axis must be eta, gamma or beta, got '" + spec.axis + "'");
  }
  try {
    std::size_t used = 0;
    spec.start = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument("start");
    spec.stop = std::stod(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument("stop");
    spec.points = std::stoi(parts[3], &used);
    if (used != parts[3].size()) throw std::invalid_argument("points");
  } catch (const std::logic_error&) {
    throw UsageError("sweep: malformed number in '" + text + "'");
  }
  if (spec.points < 2) throw UsageError("sweep: N must be at least 2");
  validate_sweep_bound(spec.axis, spec.start);
  validate_sweep_bound(spec.axis, spec.stop);
  return spec;
}

RunConfig parse_config(const std::vector<std::string>& args) {
  RunConfig config;
  heom_params_default(&config.params);
  heom_params& p = config.params;
  std::string sweep_text;

  CLI::App app{"Entanglement sudden death and rebirth of two qubits in Drude baths", "heom-esd"};
  app.fallthrough();
  app.require_subcommand(1);
  app.allow_config_extras(false);
  app.set_config("--config", "", "key = value file; flags take precedence");
  app.add_option("--epsilon", p.epsilon, "qubit splitting");
  app.add_option("--eta", p.eta, "bath coupling strength");
  app.add_option("--gamma", p.gamma, "Drude cutoff frequency");
  app.add_option("--beta", p.beta, "inverse temperature");
  app.add_option("--matsubara", p.matsubara, "Matsubara terms K");
  app.add_option("--depth", p.depth, "hierarchy depth L");
  app.add_option("--dt", p.dt, "RK4 step");
  app.add_option("--t-final", p.t_final, "end time");
  app.add_option("--initial", config.initial, "bell-psi-minus | product-ee | file:<path>");
  app.add_option("--sweep", sweep_text, "AXIS:START:STOP:N");
  app.add_option("--out", config.out, "output CSV (default: standard output)");
  app.add_option("--sample-every", p.sample_every, "steps between samples");
  app.add_option("--threads", p.threads, "workers per right-hand-side evaluation");
  app.add_option("--burn-in", p.burn_in, "equilibrate the bath for this long before t = 0");
  for (const char* name : {"evolve", "sweep", "converge"}) {
    app.add_subcommand(name)->callback([&config, name] { config.subcommand = name; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw UsageError(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  validate_params(p);
  if (!sweep_text.empty()) config.sweep = parse_sweep(sweep_text);
  if (config.subcommand == "sweep" && !config.sweep) {
    throw UsageError("sweep: --sweep AXIS:START:STOP:N is required");
  }
  return config;
}

void write_metadata(std::ostream& out, const RunConfig& config) {
  const heom_params& p = config.params;
  out << "# heom-esd " << heom_version() << ' ' << config.subcommand << '\n'
      << "# epsilon = " << format_number(p.epsilon) << '\n'
      << "# zeta = " << format_number(p.zeta) << '\n'
      << "# eta = " << format_number(p.eta) << '\n'
      << "# gamma = " << format_number(p.gamma) << '\n'
      << "# beta = " << format_number(p.beta) << '\n'
      << "# matsubara = " << p.matsubara << '\n'
      << "# depth = " << p.depth << '\n'
      << "# dt = " << format_number(p.dt) << '\n'
      << "# t-final = " << format_number(p.t_final) << '\n'
      << "# sample-every = " << p.sample_every << '\n'
      << "# burn-in = " << format_number(p.burn_in) << '\n'
      << "# initial = " << config.initial << '\n';
  if (config.sweep) {
    const auto& s = *config.sweep;
    out << "# sweep = " << s.axis << ':' << format_number(s.start) << ':'
        << format_number(s.stop) << ':' << s.points << '\n';
  }
}

int run(const RunConfig& config, std::ostream& csv, std::ostream& diag) {
  if (config.subcommand == "evolve") return run_evolve(config, csv, diag);
  if (config.subcommand == "sweep") return run_sweep_command(config, csv, diag);
  if (config.subcommand == "converge") return run_converge_command(config, csv, diag);
  throw UsageError("unknown subcommand '" + config.subcommand + "'");
}

int main_entry(const std::vector<std::string>& args, std::ostream& stdout_stream,
               std::ostream& diag) {
  RunConfig config;
  try {
    config = parse_config(args);
  } catch (const UsageError& e) {
    diag << "heom-esd: " << e.what() << "\n";
    return kExitUsage;
  }

  std::ofstream file;
  if (!config.out.empty()) {
    file.open(config.out);
    if (!file) {
      diag << "heom-esd: cannot open '" << config.out << "' for writing\n";
      return kExitIo;
    }
  }
  // Data is buffered so a failed run leaves no partial CSV rows behind.
  std::ostringstream buffer;
  int code;
  try {
    code = run(config, buffer, diag);
  } catch (const UsageError& e) {
    diag << "heom-esd: " << e.what() << "\n";
    return kExitUsage;
  }
  if (code != kExitOk) return code;
  std::ostream& out = config.out.empty() ? stdout_stream : file;
  out << buffer.str();
  out.flush();
  if (!out) {
    diag << "heom-esd: write failed\n";
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace heomesd::cli
