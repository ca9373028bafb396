#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "config.hpp"
#include "grid.hpp"

namespace ahs::io {

/// Field snapshot: structured-text header followed by one %.17g value per
/// line in row-major axis order. Round-trips bitwise (17 significant digits;
/// nan allowed). Header keys: name, preset, cdim, sizes, period, spacing,
/// count; spacing is informational, reconstruction uses sizes and period.
struct FieldSnapshot {
  std::string name;
  std::string preset;
  fields::ScalarField field;
};

void write_field_snapshot(const std::string& path,
                          const fields::ScalarField& f,
                          const std::string& field_name,
                          const std::string& preset);

FieldSnapshot read_field_snapshot(const std::string& path);

/// CSV with a header row; cells are pre-rendered (writers use format_g17 for
/// doubles so identical runs produce identical bytes).
void write_csv(const std::string& path, const std::vector<std::string>& columns,
               const std::vector<std::vector<std::string>>& rows);

/// Summary: "ahs-summary 1" followed by key = value lines in given order.
void write_summary(const std::string& path,
                   const std::vector<std::pair<std::string, std::string>>& kv);

/// Whole-file text write; io_error on failure.
void write_text(const std::string& path, const std::string& text);

/// Reads a summary back as a map; io_error on missing file or bad magic.
std::map<std::string, std::string> read_summary(const std::string& path);

} // namespace ahs::io
