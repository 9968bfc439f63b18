#include "mega/entropy.hpp"

#include <algorithm>
#include <cmath>

namespace mega {

namespace {

std::vector<double> coverage_shares(const CoverageAssignment& cov, int n) {
  std::vector<double> p;
  p.reserve(cov.per_router.size());
  for (int nj : cov.per_router) p.push_back(static_cast<double>(nj) / n);
  return p;
}

std::vector<double> component_shares(const ComponentDecomposition& dec, int n, int m) {
  std::vector<double> p;
  p.reserve(dec.components.size());
  for (const auto& c : dec.components) p.push_back(static_cast<double>(c.size()) / (n + m));
  return p;
}

double normalized_coverage(const std::vector<double>& shares, int m) {
  if (m == 1) return shares.empty() ? 0.0 : shares.front();
  return std::clamp(shannon_sum(shares) / std::log(static_cast<double>(m)), 0.0, 1.0);
}

double normalized_connectivity(const std::vector<double>& shares) {
  if (shares.size() <= 1) return 0.0;
  return shannon_sum(shares) / std::log(static_cast<double>(shares.size()));
}

}  // namespace

double shannon_sum(const std::vector<double>& probs) {
  double h = 0.0;
  for (double p : probs)
    if (p > 0.0) h -= p * std::log(p);
  return h;
}

double coverage_entropy(const CoverageAssignment& cov, int n, int m) {
  return normalized_coverage(coverage_shares(cov, n), m);
}

double connectivity_entropy(const ComponentDecomposition& dec, int n, int m) {
  return normalized_connectivity(component_shares(dec, n, m));
}

FitnessReport evaluate(const Scenario& s, const Placement& p) {
  const int n = s.client_count();
  const int m = s.router_count();
  const CoverageAssignment cov = compute_coverage(s, p);
  const ComponentDecomposition dec = decompose(s, p, cov);

  FitnessReport r;
  r.coverage_probs = coverage_shares(cov, n);
  r.connectivity_probs = component_shares(dec, n, m);
  r.h_cov = normalized_coverage(r.coverage_probs, m);
  r.h_con = normalized_connectivity(r.connectivity_probs);
  r.fitness = r.h_cov - r.h_con;
  r.psi = cov.covered();
  r.phi = connectivity(dec);
  r.component_count = dec.count();
  return r;
}

}  // namespace mega
