#pragma once

#include <vector>

#include "strongdim/graph.hpp"

namespace smd {

/// Dense real symmetric matrix; symmetry is maintained by construction (set
/// writes both triangles).
class SymmetricMatrix {
public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(int order)
      : n_(order), a_(static_cast<std::size_t>(order) * order, 0.0) {}

  int order() const noexcept { return n_; }
  double at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  void set(int i, int j, double v) {
    a_[static_cast<std::size_t>(i) * n_ + j] = v;
    a_[static_cast<std::size_t>(j) * n_ + i] = v;
  }

private:
  int n_ = 0;
  std::vector<double> a_;
};

/// Graph Laplacian L = D - A; every row sums to zero exactly.
SymmetricMatrix laplacian(const Graph& g);

/// All eigenvalues, ascending, by the cyclic Jacobi rotation method. Sweeps
/// until every off-diagonal magnitude drops below tol; throws
/// std::runtime_error after max_sweeps sweeps without convergence.
std::vector<double> symmetric_eigenvalues(SymmetricMatrix a, double tol, int max_sweeps = 100);

/// Second-smallest Laplacian eigenvalue (zero iff disconnected, for
/// tolerance-sized values of zero). Requires order >= 2. Absolute error is
/// within 10*tol*n of the exact value.
double algebraic_connectivity(const Graph& g, double tol);

/// n*(max_degree - mu + 1)/(n - mu), an upper bound on the clique number of
/// a connected non-complete graph. Uses tol = 1e-12 internally.
double spectral_clique_upper_bound(const Graph& g);

/// ceil(n*(n - max_degree - 1)/(n - mu)) for connected diameter-two graphs:
/// a lower bound on the strong metric dimension. Values within 1e-9 of an
/// integer snap to it before the ceiling is taken.
int spectral_dims_lower_bound(const Graph& h);

}  // namespace smd
