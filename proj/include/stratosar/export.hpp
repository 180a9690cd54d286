// Report serialization: per-slot CSV tables, a machine-readable JSON
// summary, and self-contained matplotlib plot scripts.  Formats are
// documented in docs/csv_schema.md.  A report without a plan (failed run)
// produces header-only tables and a valid summary carrying the error.
#pragma once

#include <string>

#include "stratosar/run.hpp"

namespace stratosar::exporter {

void write_results_csv(const run::RunReport& report, const std::string& path);
void write_energy_csv(const run::RunReport& report, const std::string& path);
void write_convergence_csv(const run::RunReport& report,
                           const std::string& path);
void write_summary_json(const run::RunReport& report, const std::string& path);

/// Drops plot_trajectory.py / plot_power.py / plot_energy.py into `dir`;
/// each reads the CSVs beside it and writes a PNG next to them.
void write_plot_scripts(const std::string& dir);

/// Creates `dir` (and parents) and writes every artifact into it.
void write_all(const run::RunReport& report, const std::string& dir);

}  // namespace stratosar::exporter
