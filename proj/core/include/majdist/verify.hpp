#pragma once

#include <string>
#include <vector>

#include "majdist/closed_forms.hpp"
#include "majdist/qpoly.hpp"
#include "majdist/tableaux.hpp"

namespace majdist {

enum class ReportStatus { all_pass, mismatches, conjecture_consistent, conjecture_refuted };

std::string to_string(ReportStatus s);

/// One grid point. expected comes from an oracle (or the independent side of
/// an identity), actual from the formula under test.
struct Finding {
  std::string shape;  // empty when the case is not tied to one shape
  Params params;
  std::string label;
  QPoly expected;
  QPoly actual;
  bool equal = true;
  bool property_ok = true;  // suite-specific side conditions (unimodality, ...)
  ShapeStats stats;         // of actual

  bool passed() const { return equal && property_ok; }
};

struct Report {
  std::string suite_id;
  std::string grid;
  FormulaStatus kind = FormulaStatus::theorem;
  std::vector<Finding> cases;
  ReportStatus status = ReportStatus::all_pass;

  std::size_t failures() const;
  // True unless a theorem-status case failed.
  bool ok() const { return status != ReportStatus::mismatches; }
};

struct SuiteBounds {
  int max = 0;  // principal grid bound; 0 selects the suite default
  int jobs = 1;
  OracleConfig oracle;
  int permutation_limit = 10;
};

std::vector<std::string> suite_ids();
// Throws DomainError for an unknown suite.
int default_bound(const std::string& suite_id);
std::string grid_description(const std::string& suite_id, int max);

// Deterministic: findings come out in grid order whatever bounds.jobs is.
Report run_suite(const std::string& suite_id, const SuiteBounds& bounds = {});

// Every nonzero two-row f_{(n-k,k),i}, i <= k <= n/2, has darga n*i.
bool cocentricity(int n, int i);

// Unimodality of every A_{n,k}, the RSK decomposition of A_n, and unimodality
// of every two-row skew shape with at most n cells.
Report sagan(int n, const SuiteBounds& bounds = {});

}  // namespace majdist
