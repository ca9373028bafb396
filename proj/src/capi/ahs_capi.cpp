#include "ahs.h"

#include <string>

#include "run.hpp"

using ahs::Error;
using ahs::Status;

struct ahs_problem {
  ahs::io::Config cfg;
};

struct ahs_run {
  ahs::run::RunOutcome oc;
};

namespace {

thread_local std::string g_last_error;

int set_error(Status s, const std::string& msg) {
  g_last_error = msg;
  return static_cast<int>(s);
}

int ok() {
  g_last_error.clear();
  return static_cast<int>(Status::ok);
}

// Uniform exception boundary: the library never lets C++ exceptions cross
// the C surface.
template <class F>
int guarded(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    return set_error(e.status(), e.what());
  } catch (const std::exception& e) {
    return set_error(Status::internal_error, e.what());
  } catch (...) {
    return set_error(Status::internal_error, "unknown failure");
  }
}

} // namespace

extern "C" {

int ahs_problem_create_from_file(const char* path, ahs_problem** out) {
  if (!path || !out)
    return set_error(Status::argument_error,
                     "ahs_problem_create_from_file: NULL argument");
  *out = nullptr;
  return guarded([&] {
    auto* p = new ahs_problem{ahs::io::load_config(path)};
    *out = p;
    return ok();
  });
}

int ahs_problem_create_from_string(const char* text, ahs_problem** out) {
  if (!text || !out)
    return set_error(Status::argument_error,
                     "ahs_problem_create_from_string: NULL argument");
  *out = nullptr;
  return guarded([&] {
    auto* p = new ahs_problem{ahs::io::parse_config(text)};
    *out = p;
    return ok();
  });
}

int ahs_problem_override(ahs_problem* p, const char* key, const char* value) {
  if (!p || !key || !value)
    return set_error(Status::argument_error,
                     "ahs_problem_override: NULL argument");
  return guarded([&] {
    ahs::io::apply_override(p->cfg, key, value);
    return ok();
  });
}

void ahs_problem_destroy(ahs_problem* p) { delete p; }

int ahs_problem_run(ahs_problem* p, const char* command, const char* out_dir,
                    ahs_run** out) {
  if (!p || !command || !out)
    return set_error(Status::argument_error, "ahs_problem_run: NULL argument");
  *out = nullptr;
  return guarded([&] {
    ahs::io::Config cfg = p->cfg;
    if (out_dir) cfg.run_out = out_dir;
    ahs::run::RunOutcome oc = ahs::run::run_command(cfg, command);
    if (oc.status == Status::argument_error) {
      // unknown command: no result object, mirror other argument mistakes
      return set_error(oc.status, oc.message);
    }
    Status s = oc.status;
    const std::string msg = oc.message;
    *out = new ahs_run{std::move(oc)};
    if (s == Status::ok) return ok();
    return set_error(s, msg);
  });
}

int ahs_run_status(const ahs_run* r) {
  if (!r)
    return set_error(Status::argument_error, "ahs_run_status: NULL handle");
  return static_cast<int>(r->oc.status);
}

const char* ahs_run_message(const ahs_run* r) {
  return r ? r->oc.message.c_str() : "";
}

int ahs_run_scalar(const ahs_run* r, const char* name, double* out) {
  if (!r || !name || !out)
    return set_error(Status::argument_error, "ahs_run_scalar: NULL argument");
  for (const auto& [k, v] : r->oc.scalars) {
    if (k == name) {
      *out = v;
      return ok();
    }
  }
  return set_error(Status::argument_error,
                   std::string("no scalar named '") + name + "' in this run");
}

int ahs_run_row_count(const ahs_run* r, size_t* out) {
  if (!r || !out)
    return set_error(Status::argument_error,
                     "ahs_run_row_count: NULL argument");
  *out = r->oc.rows.size();
  return ok();
}

int ahs_run_column_count(const ahs_run* r, size_t* out) {
  if (!r || !out)
    return set_error(Status::argument_error,
                     "ahs_run_column_count: NULL argument");
  *out = r->oc.columns.size();
  return ok();
}

const char* ahs_run_column_name(const ahs_run* r, size_t column) {
  if (!r || column >= r->oc.columns.size()) return nullptr;
  return r->oc.columns[column].c_str();
}

const char* ahs_run_cell(const ahs_run* r, size_t row, size_t column) {
  if (!r || row >= r->oc.rows.size() || column >= r->oc.rows[row].size())
    return nullptr;
  return r->oc.rows[row][column].c_str();
}

void ahs_run_destroy(ahs_run* r) { delete r; }

const char* ahs_status_name(int status) {
  return ahs::status_name(static_cast<Status>(status));
}

int ahs_exit_code(int status) {
  switch (static_cast<Status>(status)) {
    case Status::ok: return 0;
    case Status::not_certified: return 2;
    case Status::path_failure: return 3;
    case Status::internal_error: return 4;
    case Status::config_error:
    case Status::argument_error:
    case Status::io_error: return 1;
  }
  return 4;
}

const char* ahs_last_error(void) { return g_last_error.c_str(); }

} // extern "C"
