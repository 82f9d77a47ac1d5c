#include "strongdim/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace smd {

namespace {

double max_off_diagonal(const SymmetricMatrix& a) {
  double best = 0.0;
  for (int p = 0; p < a.order(); ++p)
    for (int q = p + 1; q < a.order(); ++q) best = std::max(best, std::abs(a.at(p, q)));
  return best;
}

// One Givens rotation zeroing a(p, q).
void rotate(SymmetricMatrix& a, int p, int q) {
  const double apq = a.at(p, q);
  if (apq == 0.0) return;
  const double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const double app = a.at(p, p);
  const double aqq = a.at(q, q);
  a.set(p, p, app - t * apq);
  a.set(q, q, aqq + t * apq);
  a.set(p, q, 0.0);
  for (int i = 0; i < a.order(); ++i) {
    if (i == p || i == q) continue;
    const double aip = a.at(i, p);
    const double aiq = a.at(i, q);
    a.set(i, p, c * aip - s * aiq);
    a.set(i, q, s * aip + c * aiq);
  }
}

}  // namespace

SymmetricMatrix laplacian(const Graph& g) {
  const int n = g.order();
  SymmetricMatrix l(n);
  for (int v = 0; v < n; ++v) l.set(v, v, static_cast<double>(g.degree(v)));
  for (const auto& [u, v] : g.edges()) l.set(u, v, -1.0);
  return l;
}

std::vector<double> symmetric_eigenvalues(SymmetricMatrix a, double tol, int max_sweeps) {
  if (tol <= 0.0) throw std::invalid_argument("symmetric_eigenvalues: tol must be positive");
  const int n = a.order();
  if (n <= 1) return n == 1 ? std::vector<double>{a.at(0, 0)} : std::vector<double>{};
  bool converged = false;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (max_off_diagonal(a) < tol) {
      converged = true;
      break;
    }
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) rotate(a, p, q);
  }
  if (!converged && max_off_diagonal(a) >= tol)
    throw std::runtime_error("symmetric_eigenvalues: no convergence after " +
                             std::to_string(max_sweeps) + " sweeps");
  std::vector<double> eig(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) eig[static_cast<std::size_t>(i)] = a.at(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

double algebraic_connectivity(const Graph& g, double tol) {
  if (g.order() < 2)
    throw std::invalid_argument("algebraic_connectivity: needs order >= 2");
  return symmetric_eigenvalues(laplacian(g), tol)[1];
}

double spectral_clique_upper_bound(const Graph& g) {
  const int n = g.order();
  if (n < 2 || !is_connected(g))
    throw std::invalid_argument("spectral_clique_upper_bound: graph must be connected");
  if (g.edge_count() == static_cast<long long>(n) * (n - 1) / 2)
    throw std::invalid_argument("spectral_clique_upper_bound: graph must be non-complete");
  const double mu = algebraic_connectivity(g, 1e-12);
  const double delta = static_cast<double>(g.max_degree());
  return static_cast<double>(n) * (delta - mu + 1.0) / (static_cast<double>(n) - mu);
}

int spectral_dims_lower_bound(const Graph& h) {
  const GraphProfile p = profile(h);
  if (h.order() < 2 || !p.connected)
    throw std::invalid_argument("spectral_dims_lower_bound: graph must be connected, order >= 2");
  if (p.diameter != 2)
    throw std::invalid_argument("spectral_dims_lower_bound: diameter must be exactly 2");
  const double n = static_cast<double>(h.order());
  const double mu = algebraic_connectivity(h, 1e-12);
  double x = n * (n - static_cast<double>(p.max_degree) - 1.0) / (n - mu);
  // the exact bound is rational in mu; snap near-integers before the ceiling
  const double nearest = std::round(x);
  if (std::abs(x - nearest) <= 1e-9) x = nearest;
  return static_cast<int>(std::ceil(x));
}

}  // namespace smd
