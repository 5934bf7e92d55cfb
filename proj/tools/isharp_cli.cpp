// Copyright 2026 The isharp authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Command-line front end. Talks to the shared library exclusively through
// the public C API. Exit codes: 0 success (and zero failures for the check
// commands), 2 bad input (unknown knot or field, parse errors), 3 shape
// required at the exceptional slope, 1 anything else.

#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "isharp/isharp.h"

namespace {

constexpr const char* kDbEnvVar = "ISHARP_DB";

int exit_code_for(ish_status status) {
  switch (status) {
    case ISH_OK:
      return 0;
    case ISH_ERR_UNKNOWN_KNOT:
    case ISH_ERR_UNKNOWN_FIELD:
    case ISH_ERR_PARSE:
    case ISH_ERR_INVALID_ARGUMENT:
      return 2;
    case ISH_ERR_SHAPE_REQUIRED:
      return 3;
    default:
      return 1;
  }
}

int report_error(ish_status status) {
  std::fprintf(stderr, "error: %s\n", ish_last_error());
  return exit_code_for(status);
}

struct DbHandle {
  ish_db* db = nullptr;
  ~DbHandle() { ish_db_free(db); }
};

// Builtin records overlaid with the --db file or $ISHARP_DB when present.
ish_status open_db(const std::string& db_flag, DbHandle* out) {
  ish_status st = ish_db_builtin(&out->db);
  if (st != ISH_OK) return st;
  std::string path = db_flag;
  if (path.empty()) {
    if (const char* env = std::getenv(kDbEnvVar)) path = env;
  }
  if (!path.empty()) st = ish_db_merge_file(out->db, path.c_str());
  return st;
}

struct Printed {
  char* text = nullptr;
  ~Printed() { ish_string_free(text); }

  int emit(ish_status status) const {
    if (status != ISH_OK) return report_error(status);
    std::fputs(text ? text : "", stdout);
    return 0;
  }
};

struct CommonOpts {
  std::string field = "C";
  std::string bundle = "triv";
  std::string db;
  std::string format = "table";

  ish_format fmt() const {
    return format == "json" ? ISH_FORMAT_JSON : ISH_FORMAT_TABLE;
  }
  ish_bundle bun() const {
    return bundle == "mu" ? ISH_BUNDLE_MERIDIAN : ISH_BUNDLE_TRIVIAL;
  }
};

void add_common(CLI::App* cmd, CommonOpts* opts, bool with_bundle = false) {
  cmd->add_option("--field", opts->field, "coefficient field: C, char0, F2 or Fp:<p>")
      ->capture_default_str();
  if (with_bundle) {
    cmd->add_option("--bundle", opts->bundle, "bundle class: triv or mu")
        ->check(CLI::IsMember({"triv", "mu"}))
        ->capture_default_str();
  }
  cmd->add_option("--db", opts->db,
                  "knot database file overlaid on the builtin records "
                  "(default: $" + std::string(kDbEnvVar) + ")");
  cmd->add_option("--format", opts->format, "output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"framed instanton homology dimensions of knot surgeries"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ish_version()));

  int rc = 0;

  // dim <knot> <slope>
  {
    auto opts = std::make_shared<CommonOpts>();
    auto knot = std::make_shared<std::string>();
    auto slope = std::make_shared<std::string>();
    CLI::App* cmd = app.add_subcommand("dim", "dimension at one surgery slope");
    cmd->add_option("knot", *knot, "knot name (e.g. T23, fig8, unknot)")->required();
    cmd->add_option("slope", *slope, "surgery slope p/q, integer, or inf")->required();
    add_common(cmd, opts.get(), true);
    cmd->callback([=, &rc] {
      DbHandle db;
      ish_status st = open_db(opts->db, &db);
      Printed out;
      if (st == ISH_OK) {
        st = ish_render_dim(db.db, knot->c_str(), opts->field.c_str(),
                            slope->c_str(), opts->bun(), opts->fmt(), &out.text);
      }
      rc = out.emit(st);
    });
  }

  // table <knot> --from --to [--den-max]
  {
    auto opts = std::make_shared<CommonOpts>();
    auto knot = std::make_shared<std::string>();
    auto n_lo = std::make_shared<std::int64_t>(-5);
    auto n_hi = std::make_shared<std::int64_t>(5);
    auto den_max = std::make_shared<std::int64_t>(1);
    CLI::App* cmd = app.add_subcommand("table", "dimension table over a slope range");
    cmd->add_option("knot", *knot)->required();
    cmd->add_option("--from", *n_lo, "lowest integer slope")->capture_default_str();
    cmd->add_option("--to", *n_hi, "highest integer slope")->capture_default_str();
    cmd->add_option("--den-max", *den_max,
                    "include rational slopes with denominator up to this")
        ->capture_default_str();
    add_common(cmd, opts.get());
    cmd->callback([=, &rc] {
      DbHandle db;
      ish_status st = open_db(opts->db, &db);
      Printed out;
      if (st == ISH_OK) {
        st = ish_render_table(db.db, knot->c_str(), opts->field.c_str(), *n_lo,
                              *n_hi, *den_max, opts->fmt(), &out.text);
      }
      rc = out.emit(st);
    });
  }

  // farey <slope>
  {
    auto opts = std::make_shared<CommonOpts>();
    auto slope = std::make_shared<std::string>();
    CLI::App* cmd = app.add_subcommand("farey", "Farey decomposition tree of a slope");
    cmd->add_option("slope", *slope)->required();
    cmd->add_option("--format", opts->format, "output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
    cmd->callback([=, &rc] {
      Printed out;
      ish_status st = ish_render_farey(slope->c_str(), opts->fmt(), &out.text);
      rc = out.emit(st);
    });
  }

  // check-triangles <knot>
  {
    auto opts = std::make_shared<CommonOpts>();
    auto knot = std::make_shared<std::string>();
    auto den_max = std::make_shared<std::int64_t>(10);
    auto num_max = std::make_shared<std::int64_t>(25);
    CLI::App* cmd = app.add_subcommand(
        "check-triangles", "exactness feasibility sweep over slope triads");
    cmd->add_option("knot", *knot)->required();
    cmd->add_option("--den-max", *den_max)->capture_default_str();
    cmd->add_option("--num-max", *num_max)->capture_default_str();
    add_common(cmd, opts.get());
    cmd->callback([=, &rc] {
      DbHandle db;
      ish_status st = open_db(opts->db, &db);
      Printed out;
      std::int64_t failures = 0;
      if (st == ISH_OK) {
        st = ish_render_check_triangles(db.db, knot->c_str(), opts->field.c_str(),
                                        *den_max, *num_max, opts->fmt(), &out.text,
                                        &failures);
      }
      rc = out.emit(st);
      if (rc == 0 && failures > 0) rc = 1;
    });
  }

  // check-grading [k_class]
  {
    auto opts = std::make_shared<CommonOpts>();
    auto k_class = std::make_shared<std::string>("all");
    CLI::App* cmd = app.add_subcommand(
        "check-grading", "Z/4 shift-table and V/W-contradiction self-checks");
    cmd->add_option("k_class", *k_class, "positive, zero, negative or all")
        ->check(CLI::IsMember({"positive", "zero", "negative", "all"}))
        ->capture_default_str();
    cmd->add_option("--format", opts->format, "output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
    cmd->callback([=, &rc] {
      Printed out;
      std::int64_t failures = 0;
      ish_status st = ish_render_check_grading(k_class->c_str(), opts->fmt(),
                                               &out.text, &failures);
      rc = out.emit(st);
      if (rc == 0 && failures > 0) rc = 1;
    });
  }

  // su2 <knot> --interval lo hi
  {
    auto opts = std::make_shared<CommonOpts>();
    auto knot = std::make_shared<std::string>();
    auto interval = std::make_shared<std::vector<std::string>>();
    auto den_max = std::make_shared<std::int64_t>(12);
    CLI::App* cmd = app.add_subcommand(
        "su2", "SU(2)-abelian dimension obstruction over a slope interval");
    cmd->add_option("knot", *knot)->required();
    cmd->add_option("--interval", *interval, "open interval bounds lo hi")
        ->expected(2)
        ->required();
    cmd->add_option("--den-max", *den_max)->capture_default_str();
    add_common(cmd, opts.get());
    cmd->callback([=, &rc] {
      DbHandle db;
      ish_status st = open_db(opts->db, &db);
      Printed out;
      if (st == ISH_OK) {
        st = ish_render_su2(db.db, knot->c_str(), opts->field.c_str(),
                            (*interval)[0].c_str(), (*interval)[1].c_str(),
                            *den_max, opts->fmt(), &out.text);
      }
      rc = out.emit(st);
    });
  }

  // db-validate [path]
  {
    auto opts = std::make_shared<CommonOpts>();
    auto path = std::make_shared<std::string>();
    CLI::App* cmd =
        app.add_subcommand("db-validate", "lint a knot database file");
    cmd->add_option("path", *path,
                    "database file (default: builtin plus --db/$" +
                        std::string(kDbEnvVar) + " overlay)");
    add_common(cmd, opts.get());
    cmd->callback([=, &rc] {
      DbHandle db;
      ish_status st;
      if (!path->empty()) {
        st = ish_db_load(path->c_str(), &db.db);
      } else {
        st = open_db(opts->db, &db);
      }
      Printed out;
      std::int64_t violations = 0;
      if (st == ISH_OK) {
        st = ish_render_db_validate(db.db, opts->fmt(), &out.text, &violations);
      }
      rc = out.emit(st);
      if (rc == 0 && violations > 0) rc = 1;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    // CLI11 returns 0 for --help/--version; everything else is bad input.
    return code == 0 ? 0 : 2;
  }
  return rc;
}
