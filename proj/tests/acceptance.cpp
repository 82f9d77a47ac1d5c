// Acceptance suite: end-to-end checks of every advertised identity, bound
// and behavior at desk scale. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fail.

#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "strongdim/cli.hpp"
#include "strongdim/closed_forms.hpp"
#include "strongdim/exact.hpp"
#include "strongdim/families.hpp"
#include "strongdim/metric.hpp"
#include "strongdim/rng.hpp"
#include "strongdim/spectral.hpp"
#include "strongdim/verify.hpp"

using namespace smd;

namespace {

struct Checker {
  int checks = 0;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

Graph connected_gnp(int n, double p, std::uint64_t seed) {
  return generate({GraphFamily::gnp_random_connected, n, p, seed});
}

Graph plain_gnp(int n, double p, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng::unit(engine) < p) g.add_edge(u, v);
  return g;
}

Graph named(GraphFamily f, int n) { return generate({f, n}); }

bool is_complete(const Graph& g) {
  return g.edge_count() == static_cast<long long>(g.order()) * (g.order() - 1) / 2;
}

// Shared stream for criteria 2, 3 and 8: 500 seeded connected graphs with
// orders in [2, 9], kept with their twin-free clique witnesses.
struct StreamItem {
  Graph graph;
  WitnessedValue varpi;
  int dims = 0;
};

const std::vector<StreamItem>& stream500() {
  static const std::vector<StreamItem> items = [] {
    std::vector<StreamItem> out;
    out.reserve(500);
    for (int i = 0; i < 500; ++i) {
      std::mt19937_64 engine(rng::substream(1001, static_cast<std::uint64_t>(i)));
      const int n = rng::between(engine, 2, 9);
      StreamItem item;
      item.graph = connected_gnp(n, 0.5, engine());
      item.varpi = twin_free_clique_number(item.graph);
      item.dims = dims_exact(item.graph).value;
      out.push_back(std::move(item));
    }
    return out;
  }();
  return items;
}

void criterion_baseline(Checker& c) {
  for (int n = 3; n <= 9; ++n) {
    const int got = dims_exact(named(GraphFamily::cycle, n)).value;
    c.require(got == (n + 1) / 2,
              "cycle n=" + std::to_string(n) + " gave " + std::to_string(got));
  }
  for (int i = 0; i < 50; ++i) {
    std::mt19937_64 engine(rng::substream(1000, static_cast<std::uint64_t>(i)));
    const int n = rng::between(engine, 2, 10);
    const Graph t = generate({GraphFamily::tree_random, n, 0.0, engine()});
    int leaves = 0;
    for (int v = 0; v < n; ++v) leaves += t.degree(v) == 1;
    const int got = dims_exact(t).value;
    c.require(got == leaves - 1, "tree trial " + std::to_string(i) + " gave " +
                                     std::to_string(got) + ", leaves " + std::to_string(leaves));
  }
  for (int n = 2; n <= 7; ++n) {
    const int got = dims_exact(named(GraphFamily::complete, n)).value;
    c.require(got == n - 1,
              "complete n=" + std::to_string(n) + " gave " + std::to_string(got));
  }
}

void criterion_twin_clique(Checker& c) {
  int diameter_two_hits = 0;
  for (const StreamItem& item : stream500()) {
    const int n = item.graph.order();
    c.require(item.dims <= n - item.varpi.value, "upper bound violated at n=" +
                                                     std::to_string(n));
    if (profile(item.graph).diameter == 2) {
      ++diameter_two_hits;
      c.require(item.dims == n - item.varpi.value,
                "diameter-two equality violated at n=" + std::to_string(n));
    }
  }
  c.require(diameter_two_hits > 0, "stream produced no diameter-two graphs");
}

void criterion_constructive(Checker& c) {
  for (const StreamItem& item : stream500()) {
    std::vector<int> complement;
    for (int v = 0; v < item.graph.order(); ++v)
      if (std::find(item.varpi.witness.begin(), item.varpi.witness.end(), v) ==
          item.varpi.witness.end())
        complement.push_back(v);
    c.require(is_strong_resolving_set(item.graph, complement),
              "complement of a twin-free clique failed to resolve");
  }
}

void criterion_corona_reduction(Checker& c) {
  for (int i = 0; i < 50; ++i) {
    std::mt19937_64 engine(rng::substream(1002, static_cast<std::uint64_t>(i)));
    const Graph g = connected_gnp(rng::between(engine, 1, 3), 0.5, engine());
    const Graph h = plain_gnp(rng::between(engine, 1, 3), 0.5, engine());
    c.require(dims_exact(corona(g, h)).value ==
                  dims_exact(corona_reduction_graph(g, h)).value,
              "reduction mismatch on trial " + std::to_string(i));
  }
  const std::vector<std::pair<Graph, Graph>> named_pairs = {
      {Graph(1), Graph(1)},
      {Graph(1), named(GraphFamily::cycle, 4)},
      {named(GraphFamily::path, 2), named(GraphFamily::complete, 2)},
      {named(GraphFamily::path, 3), Graph(1)},
      {named(GraphFamily::cycle, 3), named(GraphFamily::complete, 2)},
      {named(GraphFamily::complete, 2), Graph(2)},
      {named(GraphFamily::path, 3), named(GraphFamily::path, 3)},
      {named(GraphFamily::star, 4), named(GraphFamily::complete, 2)},
  };
  for (std::size_t i = 0; i < named_pairs.size(); ++i) {
    const auto& [g, h] = named_pairs[i];
    c.require(dims_exact(corona(g, h)).value ==
                  dims_exact(corona_reduction_graph(g, h)).value,
              "reduction mismatch on named pair " + std::to_string(i));
  }
}

void criterion_corona_formula(Checker& c) {
  for (int i = 0; i < 40; ++i) {
    std::mt19937_64 engine(rng::substream(1003, static_cast<std::uint64_t>(i)));
    const int n1 = rng::between(engine, 1, 4);
    const int n2 = rng::between(engine, 1, 3);
    if (n1 * (1 + n2) > 16) continue;
    const Graph g = connected_gnp(n1, 0.5, engine());
    const Graph h = plain_gnp(n2, 0.5, engine());
    const FormulaResult fr = dims_corona(g, h);
    c.require(fr.value == dims_exact(corona(g, h)).value,
              "corona formula mismatch on trial " + std::to_string(i));
  }
  // varpi(K2) = 1: both endpoints of an edge are true twins
  const Graph c4 = named(GraphFamily::cycle, 4);
  const Graph k2 = named(GraphFamily::complete, 2);
  const FormulaResult ck = dims_corona(c4, k2);
  const int ck_oracle = dims_exact(corona(c4, k2)).value;
  c.require(ck.value == ck_oracle && ck_oracle == 8 - twin_free_clique_number(k2).value,
            "corona of a 4-cycle with an edge: formula " + std::to_string(ck.value) +
                ", solver " + std::to_string(ck_oracle));
  for (int n1 = 2; n1 <= 8; ++n1) {
    const Graph g = n1 >= 3 ? named(GraphFamily::cycle, n1) : named(GraphFamily::path, n1);
    const FormulaResult fr = dims_corona(g, Graph(1));
    c.require(fr.value == n1 - 1 && fr.value == dims_exact(corona(g, Graph(1))).value,
              "pendant corona at n1=" + std::to_string(n1));
  }
}

void criterion_joins(Checker& c) {
  for (int i = 0; i < 100; ++i) {
    std::mt19937_64 engine(rng::substream(1004, static_cast<std::uint64_t>(i)));
    const int n1 = rng::between(engine, 2, 6);
    const int n2 = rng::between(engine, 2, 6);
    const Graph g = connected_gnp(n1, 0.5, engine());
    const Graph h = connected_gnp(n2, 0.5, engine());
    const Graph j = join(g, h);
    c.require(dims_join(g, h).value == dims_exact(j).value,
              "join dimension mismatch on trial " + std::to_string(i));
    c.require(varpi_join(g, h).value == twin_free_clique_number(j).value,
              "join twin-free clique mismatch on trial " + std::to_string(i));
  }
  const Graph p3 = named(GraphFamily::path, 3);
  const FormulaResult f = dims_join(p3, p3);
  c.require(f.value == 3 && f.theorem_id == "join-dims-iii",
            "join of two short paths should be case iii with value 3");
}

void criterion_triangle_free(Checker& c) {
  const Graph k2 = named(GraphFamily::complete, 2);
  const Graph p3 = named(GraphFamily::path, 3);
  const int direct = dims_exact(corona(k2, p3)).value;
  c.require(direct == 4 && dims_corona_triangle_free(k2, p3).value == 4,
            "corona of an edge with short paths should have dimension 4");
  int applicable = 0;
  for (int i = 0; applicable < 20 && i < 400; ++i) {
    std::mt19937_64 engine(rng::substream(1005, static_cast<std::uint64_t>(i)));
    const Graph g = connected_gnp(rng::between(engine, 1, 3), 0.5, engine());
    const Graph h = plain_gnp(rng::between(engine, 3, 4), 0.35, engine());
    try {
      const FormulaResult fr = dims_corona_triangle_free(g, h);
      ++applicable;
      c.require(fr.value == dims_exact(corona(g, h)).value,
                "triangle-free corona mismatch on trial " + std::to_string(i));
    } catch (const hypothesis_error&) {
    }
  }
  c.require(applicable == 20, "expected 20 applicable triangle-free samples, got " +
                                  std::to_string(applicable));
}

void criterion_mmd_bound(Checker& c) {
  for (const StreamItem& item : stream500())
    c.require(dims_mmd_lower_bound(item.graph) <= item.dims,
              "cover bound exceeded the dimension");
  c.require(dims_mmd_lower_bound(named(GraphFamily::cycle, 4)) == 2, "4-cycle bound");
  c.require(dims_mmd_lower_bound(named(GraphFamily::path, 4)) == 1, "4-path bound");
  c.require(dims_mmd_lower_bound(named(GraphFamily::complete, 4)) == 3, "K4 bound");
}

void criterion_spectral_clique(Checker& c) {
  int sampled = 0;
  for (int i = 0; sampled < 200 && i < 1000; ++i) {
    std::mt19937_64 engine(rng::substream(1006, static_cast<std::uint64_t>(i)));
    const int n = rng::between(engine, 4, 12);
    const Graph g = connected_gnp(n, 0.5, engine());
    if (is_complete(g)) continue;
    ++sampled;
    c.require(clique_number(g).value <= spectral_clique_upper_bound(g) + 1e-9,
              "clique bound violated at n=" + std::to_string(n));
  }
  c.require(sampled == 200, "expected 200 non-complete samples");
  for (int r = 3; r <= 5; ++r) {
    const Graph g = cartesian(named(GraphFamily::complete, r), named(GraphFamily::complete, 2));
    const double mu = algebraic_connectivity(g, 1e-12);
    const double bound = spectral_clique_upper_bound(g);
    c.require(std::abs(mu - 2.0) <= 1e-8,
              "hypercube-of-cliques connectivity at r=" + std::to_string(r));
    c.require(std::abs(bound - r) <= 1e-6, "bound not tight at r=" + std::to_string(r));
  }
}

void criterion_spectral_dims(Checker& c) {
  int sampled = 0;
  for (int i = 0; i < 300; ++i) {
    std::mt19937_64 engine(rng::substream(1007, static_cast<std::uint64_t>(i)));
    const int n = rng::between(engine, 4, 10);
    const Graph g = connected_gnp(n, 0.5, engine());
    if (profile(g).diameter != 2) continue;
    ++sampled;
    c.require(spectral_dims_lower_bound(g) <= dims_exact(g).value,
              "dimension bound violated at n=" + std::to_string(n));
  }
  c.require(sampled >= 50, "too few diameter-two samples: " + std::to_string(sampled));
  const Graph pet = named(GraphFamily::petersen, 10);
  c.require(spectral_dims_lower_bound(pet) == 8 && dims_exact(pet).value == 8,
            "petersen bound should be tight at 8");
}

void criterion_eigensolver(Checker& c) {
  for (int i = 0; i < 100; ++i) {
    std::mt19937_64 engine(rng::substream(1008, static_cast<std::uint64_t>(i)));
    const int n = rng::between(engine, 2, 16);
    const Graph g = plain_gnp(n, 0.5, engine());
    const auto eig = symmetric_eigenvalues(laplacian(g), 1e-12);
    double sum = 0;
    for (double e : eig) sum += e;
    double trace = 0;
    for (int v = 0; v < n; ++v) trace += g.degree(v);
    c.require(std::abs(sum - trace) <= 1e-6, "trace mismatch at n=" + std::to_string(n));
    c.require(std::abs(eig.front()) <= 1e-8, "smallest eigenvalue escaped zero");
    c.require((eig[1] > 1e-8) == is_connected(g), "connectivity test via mu failed");
  }
}

void criterion_determinism(Checker& c) {
  const std::vector<std::string> args = {"verify",  "--theorem", "corona-dims",
                                         "--trials", "50",       "--seed",
                                         "42",       "--format",  "json"};
  std::ostringstream out1, err1, out2, err2;
  const int code1 = run_cli(args, out1, err1);
  const int code2 = run_cli(args, out2, err2);
  c.require(code1 == 0 && code2 == 0, "verification run failed");
  c.require(out1.str() == out2.str(), "verification output is not byte-identical");
  c.require(!out1.str().empty(), "verification output is empty");
}

struct Criterion {
  int id;
  const char* name;
  std::function<void(Checker&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "baseline dimensions: cycles, random trees, complete graphs", criterion_baseline},
      {2, "twin-free clique bound, equality at diameter two", criterion_twin_clique},
      {3, "complement of a maximum twin-free clique strongly resolves", criterion_constructive},
      {4, "corona reduction preserves the dimension", criterion_corona_reduction},
      {5, "corona closed form matches the solver", criterion_corona_formula},
      {6, "join closed forms match the solver", criterion_joins},
      {7, "triangle-free corona corollary", criterion_triangle_free},
      {8, "minimum cover of the MMD graph bounds the dimension", criterion_mmd_bound},
      {9, "spectral clique bound, tight on prisms of cliques", criterion_spectral_clique},
      {10, "spectral dimension bound, tight on the petersen graph", criterion_spectral_dims},
      {11, "eigensolver trace, semidefiniteness and connectivity", criterion_eigensolver},
      {12, "verification reports are byte-deterministic", criterion_determinism},
  };

  int failed = 0;
  for (const Criterion& criterion : criteria) {
    Checker checker;
    criterion.run(checker);
    const bool ok = checker.failures.empty();
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << criterion.id << ' ' << criterion.name << " ("
              << checker.checks << " checks)\n";
    if (!ok) {
      ++failed;
      for (const std::string& f : checker.failures) std::cout << "       " << f << '\n';
    }
  }
  std::cout << (failed == 0 ? "acceptance: all criteria passed\n"
                            : "acceptance: " + std::to_string(failed) + " criteria failed\n");
  return failed == 0 ? 0 : 1;
}
