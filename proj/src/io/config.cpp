#include "config.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <variant>

namespace ahs::io {

namespace {

using Member =
    std::variant<int Config::*, long long Config::*, double Config::*,
                 bool Config::*, std::string Config::*,
                 std::vector<int> Config::*, std::vector<double> Config::*>;

struct KeyDef {
  const char* key;
  Member member;
};

// One entry per schema key; kind is carried by the member pointer type.
const std::vector<KeyDef>& schema() {
  static const std::vector<KeyDef> defs = {
      {"grid.size", &Config::grid_size},
      {"grid.cdim", &Config::grid_cdim},
      {"geometry.preset", &Config::geometry_preset},
      {"geometry.amplitude", &Config::geometry_amplitude},
      {"background.kind", &Config::background_kind},
      {"background.epsilon", &Config::background_epsilon},
      {"background.eta_reduction", &Config::background_eta_reduction},
      {"operator.kind", &Config::operator_kind},
      {"operator.k", &Config::operator_k},
      {"rhs.mode", &Config::rhs_mode},
      {"rhs.field", &Config::rhs_field},
      {"rhs.amplitude", &Config::rhs_amplitude},
      {"rhs.frequency", &Config::rhs_frequency},
      {"rhs.snapshot", &Config::rhs_snapshot},
      {"normalization.mode", &Config::normalization_mode},
      {"path.t_target", &Config::path_t_target},
      {"path.dt_init", &Config::path_dt_init},
      {"path.dt_min", &Config::path_dt_min},
      {"path.dt_max", &Config::path_dt_max},
      {"path.newton_tol", &Config::path_newton_tol},
      {"path.newton_max_iters", &Config::path_newton_max_iters},
      {"path.krylov_rtol", &Config::path_krylov_rtol},
      {"path.krylov_restart", &Config::path_krylov_restart},
      {"path.krylov_cap", &Config::path_krylov_cap},
      {"path.take_snapshots", &Config::path_take_snapshots},
      {"path.allow_uncertified", &Config::path_allow_uncertified},
      {"mms.u_star", &Config::mms_u_star},
      {"mms.amplitude", &Config::mms_amplitude},
      {"mms.frequency", &Config::mms_frequency},
      {"mms.mode", &Config::mms_mode},
      {"mms.sizes", &Config::mms_sizes},
      {"monitor.A", &Config::monitor_A},
      {"monitor.theta", &Config::monitor_theta},
      {"check.candidate", &Config::check_candidate},
      {"check.amplitude", &Config::check_amplitude},
      {"check.frequency", &Config::check_frequency},
      {"sweep.parameter", &Config::sweep_parameter},
      {"sweep.values", &Config::sweep_values},
      {"sweep.sizes", &Config::sweep_sizes},
      {"run.seed", &Config::run_seed},
      {"run.out", &Config::run_out},
  };
  return defs;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value,
                            const char* want) {
  fail(Status::config_error, "configuration key '" + key + "': cannot read '" +
                                 value + "' as " + want);
}

long long parse_ll(const std::string& key, const std::string& value) {
  const std::string t = trim(value);
  if (t.empty()) bad_value(key, value, "an integer");
  char* end = nullptr;
  long long r = std::strtoll(t.c_str(), &end, 10);
  if (end != t.c_str() + t.size()) bad_value(key, value, "an integer");
  return r;
}

double parse_real(const std::string& key, const std::string& value) {
  const std::string t = trim(value);
  if (t.empty()) bad_value(key, value, "a number");
  char* end = nullptr;
  double r = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size()) bad_value(key, value, "a number");
  return r;
}

bool parse_bool(const std::string& key, const std::string& value) {
  const std::string t = trim(value);
  if (t == "true") return true;
  if (t == "false") return false;
  bad_value(key, value, "true or false");
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::string cur;
  std::stringstream ss(value);
  while (std::getline(ss, cur, ',')) out.push_back(trim(cur));
  if (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

void apply(Config& cfg, const std::string& key, const std::string& value) {
  const auto& defs = schema();
  auto it = std::find_if(defs.begin(), defs.end(),
                         [&](const KeyDef& d) { return key == d.key; });
  require(it != defs.end(), Status::config_error,
          "unknown configuration key '" + key + "'");
  std::visit(
      [&](auto mem) {
        using T = std::remove_cvref_t<decltype(cfg.*mem)>;
        if constexpr (std::is_same_v<T, int>) {
          long long v = parse_ll(key, value);
          require(v >= -2147483648LL && v <= 2147483647LL,
                  Status::config_error,
                  "configuration key '" + key + "': value out of range");
          cfg.*mem = static_cast<int>(v);
        } else if constexpr (std::is_same_v<T, long long>) {
          cfg.*mem = parse_ll(key, value);
        } else if constexpr (std::is_same_v<T, double>) {
          cfg.*mem = parse_real(key, value);
        } else if constexpr (std::is_same_v<T, bool>) {
          cfg.*mem = parse_bool(key, value);
        } else if constexpr (std::is_same_v<T, std::string>) {
          cfg.*mem = trim(value);
        } else if constexpr (std::is_same_v<T, std::vector<int>>) {
          std::vector<int> v;
          for (const auto& s : split_list(value))
            v.push_back(static_cast<int>(parse_ll(key, s)));
          cfg.*mem = std::move(v);
        } else {
          std::vector<double> v;
          for (const auto& s : split_list(value))
            v.push_back(parse_real(key, s));
          cfg.*mem = std::move(v);
        }
      },
      it->member);
}

} // namespace

Config parse_config(const std::string& text) {
  Config cfg;
  std::string section;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    std::size_t cut = line.find_first_of("#;");
    if (cut != std::string::npos) line.erase(cut);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      require(line.back() == ']' && line.size() > 2, Status::config_error,
              "problem file line " + std::to_string(lineno) +
                  ": malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    std::size_t eq = line.find('=');
    require(eq != std::string::npos && eq > 0, Status::config_error,
            "problem file line " + std::to_string(lineno) +
                ": expected key = value");
    require(!section.empty(), Status::config_error,
            "problem file line " + std::to_string(lineno) +
                ": key outside any [section]");
    std::string key = section + "." + trim(line.substr(0, eq));
    try {
      apply(cfg, key, line.substr(eq + 1));
    } catch (const Error& e) {
      fail(e.status(),
           "problem file line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return cfg;
}

Config load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), Status::io_error,
          "cannot read problem file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

void apply_override(Config& cfg, const std::string& key,
                    const std::string& value) {
  apply(cfg, trim(key), value);
}

std::vector<std::string> config_keys() {
  std::vector<std::string> keys;
  for (const auto& d : schema()) keys.push_back(d.key);
  std::sort(keys.begin(), keys.end());
  return keys;
}

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string render_config(const Config& cfg) {
  std::string out;
  std::string section;
  for (const auto& d : schema()) {  // schema order groups sections
    std::string key = d.key;
    std::size_t dot = key.find('.');
    std::string sec = key.substr(0, dot);
    if (sec != section) {
      if (!out.empty()) out += "\n";
      out += "[" + sec + "]\n";
      section = sec;
    }
    out += key.substr(dot + 1) + " = ";
    std::visit(
        [&](auto mem) {
          using T = std::remove_cvref_t<decltype(cfg.*mem)>;
          if constexpr (std::is_same_v<T, int> ||
                        std::is_same_v<T, long long>) {
            out += std::to_string(cfg.*mem);
          } else if constexpr (std::is_same_v<T, double>) {
            out += format_g17(cfg.*mem);
          } else if constexpr (std::is_same_v<T, bool>) {
            out += (cfg.*mem) ? "true" : "false";
          } else if constexpr (std::is_same_v<T, std::string>) {
            out += cfg.*mem;
          } else if constexpr (std::is_same_v<T, std::vector<int>>) {
            const auto& v = cfg.*mem;
            for (std::size_t i = 0; i < v.size(); ++i)
              out += (i ? "," : "") + std::to_string(v[i]);
          } else {
            const auto& v = cfg.*mem;
            for (std::size_t i = 0; i < v.size(); ++i)
              out += (i ? "," : "") + format_g17(v[i]);
          }
        },
        d.member);
    out += "\n";
  }
  return out;
}

} // namespace ahs::io
