#pragma once

#include <vector>

#include "mega/netmodel.hpp"

namespace mega {

/// Entropy-based evaluation of one placement.
struct FitnessReport {
  double h_cov = 0.0;
  double h_con = 0.0;
  double fitness = 0.0;  // h_cov - h_con
  int psi = 0;
  int phi = 0;
  int component_count = 0;
  std::vector<double> coverage_probs;      // n_j / n, one per router
  std::vector<double> connectivity_probs;  // |G_j| / (n + m), one per component

  friend bool operator==(const FitnessReport&, const FitnessReport&) = default;
};

/// -sum p ln p over the positive entries (0 ln 0 = 0).
double shannon_sum(const std::vector<double>& probs);

/// Normalized coverage entropy of the per-router assigned-client shares.
/// Lies in [0, 1]. With a single router the log normalizer vanishes and the
/// covered fraction n_1 / n is returned instead.
double coverage_entropy(const CoverageAssignment& cov, int n, int m);

/// Normalized entropy of component-size fractions |G_j| / (n + m);
/// zero for a single component.
double connectivity_entropy(const ComponentDecomposition& dec, int n, int m);

FitnessReport evaluate(const Scenario& s, const Placement& p);

}  // namespace mega
