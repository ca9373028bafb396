#include "artifacts.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace ahs::io {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), Status::io_error, "cannot write '" + path + "'");
  return out;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// "key = value" line of a snapshot or summary header
std::pair<std::string, std::string> header_line(const std::string& path,
                                                const std::string& line) {
  std::size_t eq = line.find('=');
  require(eq != std::string::npos, Status::io_error,
          "'" + path + "': malformed header line '" + line + "'");
  return {trim(line.substr(0, eq)), trim(line.substr(eq + 1))};
}

} // namespace

void write_field_snapshot(const std::string& path,
                          const fields::ScalarField& f,
                          const std::string& field_name,
                          const std::string& preset) {
  auto out = open_out(path);
  const auto& g = f.grid;
  out << "ahs-field 1\n";
  out << "name = " << field_name << "\n";
  out << "preset = " << preset << "\n";
  out << "cdim = " << g.cdim << "\n";
  out << "sizes =";
  for (int a = 0; a < g.axes(); ++a) out << " " << g.size[a];
  out << "\nperiod =";
  for (int a = 0; a < g.axes(); ++a) out << " " << format_g17(g.period[a]);
  out << "\nspacing =";
  for (int a = 0; a < g.axes(); ++a) out << " " << format_g17(g.spacing(a));
  out << "\ncount = " << f.v.size() << "\n";
  for (double v : f.v) out << format_g17(v) << "\n";
  require(out.good(), Status::io_error, "write failed for '" + path + "'");
}

FieldSnapshot read_field_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), Status::io_error,
          "cannot read field snapshot '" + path + "'");
  std::string line;
  require(std::getline(in, line) && trim(line) == "ahs-field 1",
          Status::io_error, "'" + path + "' is not a field snapshot");

  FieldSnapshot snap;
  fields::PeriodicGrid g;
  std::size_t count = 0;
  bool have_sizes = false;
  while (std::getline(in, line)) {
    auto [key, value] = header_line(path, line);
    if (key == "name") {
      snap.name = value;
    } else if (key == "preset") {
      snap.preset = value;
    } else if (key == "cdim") {
      g.cdim = std::atoi(value.c_str());
    } else if (key == "sizes") {
      std::stringstream ss(value);
      for (int a = 0; a < fields::max_axes && (ss >> g.size[a]); ++a) {}
      have_sizes = true;
    } else if (key == "period") {
      std::stringstream ss(value);
      for (int a = 0; a < fields::max_axes && (ss >> g.period[a]); ++a) {}
    } else if (key == "spacing") {
      // informational; period is authoritative
    } else if (key == "count") {
      count = std::strtoull(value.c_str(), nullptr, 10);
      break;
    } else {
      fail(Status::io_error,
           "'" + path + "': unknown header key '" + key + "'");
    }
  }
  require(have_sizes && count > 0, Status::io_error,
          "'" + path + "': incomplete snapshot header");
  g.validate();
  require(count == g.points(), Status::io_error,
          "'" + path + "': count does not match grid sizes");

  snap.field = fields::ScalarField(g);
  for (std::size_t p = 0; p < count; ++p) {
    require(static_cast<bool>(std::getline(in, line)), Status::io_error,
            "'" + path + "': truncated at value " + std::to_string(p));
    const std::string t = trim(line);
    char* end = nullptr;
    snap.field.v[p] = std::strtod(t.c_str(), &end);
    require(end == t.c_str() + t.size() && !t.empty(), Status::io_error,
            "'" + path + "': bad value line '" + line + "'");
  }
  return snap;
}

void write_csv(const std::string& path, const std::vector<std::string>& columns,
               const std::vector<std::vector<std::string>>& rows) {
  auto out = open_out(path);
  for (std::size_t i = 0; i < columns.size(); ++i)
    out << (i ? "," : "") << columns[i];
  out << "\n";
  for (const auto& row : rows) {
    require(row.size() == columns.size(), Status::internal_error,
            "csv row width mismatch for '" + path + "'");
    for (std::size_t i = 0; i < row.size(); ++i)
      out << (i ? "," : "") << row[i];
    out << "\n";
  }
  require(out.good(), Status::io_error, "write failed for '" + path + "'");
}

void write_summary(const std::string& path,
                   const std::vector<std::pair<std::string, std::string>>& kv) {
  auto out = open_out(path);
  out << "ahs-summary 1\n";
  for (const auto& [k, v] : kv) out << k << " = " << v << "\n";
  require(out.good(), Status::io_error, "write failed for '" + path + "'");
}

void write_text(const std::string& path, const std::string& text) {
  auto out = open_out(path);
  out << text;
  require(out.good(), Status::io_error, "write failed for '" + path + "'");
}

std::map<std::string, std::string> read_summary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), Status::io_error, "cannot read summary '" + path + "'");
  std::string line;
  require(std::getline(in, line) && trim(line) == "ahs-summary 1",
          Status::io_error, "'" + path + "' is not a summary file");
  std::map<std::string, std::string> kv;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    auto [key, value] = header_line(path, line);
    kv[key] = value;
  }
  return kv;
}

} // namespace ahs::io
