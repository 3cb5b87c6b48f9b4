#pragma once

#include <string>
#include <string_view>

#include "cgmcr/model.hpp"
#include "cgmcr/stability.hpp"

namespace cgmcr {

// Line-oriented model format:
//
//   # comment to end of line
//   conflict "<name>"                  optional, first statement
//   dm <id>
//   env                                enables exogenous moves
//   state <id>
//   move <owner> <from> -> <to>
//   prefer <dm>: <id> (>|=) <id> ...   most preferred first
//
// Identifiers match [A-Za-z0-9_]+; tokens are separated by spaces or tabs;
// names must be declared before use.
//
// Throws ParseError at the first offending line. Semantic checks that need
// the whole file (preference totality, missing preference lines) are left
// to validate_model().
ConflictModel parse_model(std::string_view source);

// Canonical text: header, DMs, env, states, moves sorted by (owner, from,
// to), one prefer line per DM in declaration order.
std::string serialize_model(const ConflictModel& model);

struct DotOptions {
  bool color_by_owner = true;
  bool show_ranks = false;
};

std::string export_dot(const ConflictModel& model, const DotOptions& options = {});

enum class ReportFormat { kTable, kJson };

// Table: one row per state, a column per (concept, DM) holding Y/N and an
// `eq` column marking equilibria with `*`. JSON: fields model, options,
// states, dms, concepts, verdicts, equilibria, witnesses.
std::string render_report(const StabilityReport& report, ReportFormat format);

std::string render_validation(const ValidationReport& report);

}  // namespace cgmcr
