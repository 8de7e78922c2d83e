#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace accred::cli {

struct FamilyOptions {
  std::string family = "HamAmal";
  int index = 0;
  std::string code_file;  // overrides the family when set
};

void run_codes_radius(std::ostream& out, const std::string& file);
void run_codes_gcr(std::ostream& out, const std::string& file, int t);
void run_codes_normal(std::ostream& out, const std::string& file);
void run_codes_family(std::ostream& out, const std::string& family, int index,
                      const std::string& emit_file);

void run_complexity_compute(std::ostream& out, const std::string& set, std::size_t limit);
void run_complexity_decompose(std::ostream& out, const std::string& set, std::size_t limit);
void run_complexity_sidon(std::ostream& out, const std::string& set);

struct PlanOptions {
  FamilyOptions code;
  int blocks = 1;
  std::string set = "1,-1";
  std::string weights = "random:0";  // file path or random:<seed>
  std::string mode = "separate";     // separate, joint, gcr
};

void run_protocol_plan(std::ostream& out, const PlanOptions& options);

struct SimulateOptions {
  FamilyOptions code;
  int blocks = 1;
  std::string set = "1,-1";
  int trials = 100;
  std::uint64_t seed = 0;
  std::string mode = "linear";    // linear, monomial
  std::string backend = "exact";  // exact, float
  std::string emit_csv;
  bool quiet = false;
};

// Returns false when some trial failed.
bool run_simulate(std::ostream& out, const SimulateOptions& options);

struct TableOptions {
  std::string cap = "10";
  int first = 0;
  int last = 9;
  bool truncate = false;
};

void run_analysis_table(std::ostream& out, const TableOptions& options);
void run_analysis_pareto(std::ostream& out, const TableOptions& options, bool hull);
void run_analysis_bound(std::ostream& out, int m, double nu_min, double nu_max, int steps);

}  // namespace accred::cli
