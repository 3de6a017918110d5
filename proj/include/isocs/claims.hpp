#pragma once

#include <span>
#include <string>
#include <vector>

namespace isocs::claims {

enum class Verdict { confirmed, refuted, divergent_formula, degenerate_input };

const char* verdict_name(Verdict v);

struct Config {
  double gamma = 2.0;
  double beta = 0.5;
  int trunc = 64;
  double tol = 1e-8;
  void validate() const;  // trunc >= 8, tol > 0, gamma > 1, beta > 0
};

struct Report {
  std::string id;
  Verdict verdict;
  double max_residual;
  std::string notes;
  std::vector<std::string> params_grid;
};

// Registered claim ids in execution order (C1..C19).
std::vector<std::string> all_ids();
// Short description of what each claim checks.
std::string describe(const std::string& id);

// Runs the selected claims (empty selection => empty report; the CLI passes
// all_ids() when the user selects nothing). Unknown ids throw. Execution is
// parallel; the report order and bytes are deterministic for a fixed config.
std::vector<Report> run(std::span<const std::string> ids, const Config& cfg);

// Deterministic JSON serialization of a report list.
std::string to_json(std::span<const Report> reports, const Config& cfg);

}  // namespace isocs::claims
