#pragma once

#include <Eigen/Dense>
#include <Eigen/IterativeLinearSolvers>
#include <Eigen/Sparse>
#include <cmath>
#include <vector>

#include "dynres/errors.hpp"
#include "dynres/types.hpp"
#include "dynres/union_find.hpp"
#include "dynres/weighted_view.hpp"

namespace dynres {

struct SolveOptions {
  enum class Kind { PreconditionedIterative, DenseFallback };
  double tolerance = 1e-8;          // relative residual
  int max_iterations = 0;           // 0: solver default (10n + 1000)
  Kind kind = Kind::PreconditionedIterative;
  std::size_t dense_threshold = 300;  // components below this solve densely
};

// Assembled Laplacian of a weighted multigraph together with its component
// labeling. Immutable after construction and safely shareable read-only.
class LaplacianSystem {
 public:
  explicit LaplacianSystem(const WeightedGraphView& view)
      : lap_(static_cast<Eigen::Index>(view.vertex_count), static_cast<Eigen::Index>(view.vertex_count)),
        component_(view.vertex_count) {
    const std::size_t n = view.vertex_count;
    UnionFind uf(n);
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(view.edges.size() * 4);
    for (const WeightedEdge& e : view.edges) {
      if (e.u >= n || e.v >= n) throw UnknownVertex("edge endpoint out of range");
      if (!(e.weight > 0.0) || !std::isfinite(e.weight))
        throw NonPositiveWeight("edge weight must be positive and finite");
      if (e.u == e.v) continue;  // a self-loop contributes nothing to the Laplacian
      trip.emplace_back(e.u, e.u, e.weight);
      trip.emplace_back(e.v, e.v, e.weight);
      trip.emplace_back(e.u, e.v, -e.weight);
      trip.emplace_back(e.v, e.u, -e.weight);
      uf.unite(e.u, e.v);
    }
    lap_.setFromTriplets(trip.begin(), trip.end());
    for (std::size_t u = 0; u < n; ++u) component_[u] = uf.find(u);
  }

  std::size_t vertex_count() const { return component_.size(); }
  const Eigen::SparseMatrix<double>& matrix() const { return lap_; }

  bool same_component(VertexId s, VertexId t) const {
    check_(s);
    check_(t);
    return component_[s] == component_[t];
  }

  std::vector<VertexId> component_members(VertexId s) const {
    check_(s);
    std::vector<VertexId> out;
    for (std::size_t u = 0; u < component_.size(); ++u)
      if (component_[u] == component_[s]) out.push_back(static_cast<VertexId>(u));
    return out;
  }

 private:
  void check_(VertexId u) const {
    if (u >= component_.size()) throw UnknownVertex("vertex " + std::to_string(u) + " out of range");
  }

  Eigen::SparseMatrix<double> lap_;
  std::vector<std::size_t> component_;
};

inline LaplacianSystem assemble(const WeightedGraphView& view) { return LaplacianSystem(view); }

namespace detail {

// Solve the grounded system restricted to the component of s and t: ground
// the first component vertex, solve L'x = chi(s,t)', and return x_s - x_t.
inline double solve_grounded(const LaplacianSystem& sys, VertexId s, VertexId t, const SolveOptions& opts) {
  std::vector<VertexId> comp = sys.component_members(s);
  const std::size_t k = comp.size();
  // local index: comp[0] is grounded and dropped
  std::vector<Eigen::Index> local(sys.vertex_count(), -1);
  for (std::size_t i = 1; i < k; ++i) local[comp[i]] = static_cast<Eigen::Index>(i - 1);

  const Eigen::Index dim = static_cast<Eigen::Index>(k - 1);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(dim);
  if (local[s] >= 0) rhs[local[s]] += 1.0;
  if (local[t] >= 0) rhs[local[t]] -= 1.0;

  std::vector<Eigen::Triplet<double>> trip;
  const auto& L = sys.matrix();
  for (VertexId u : comp) {
    if (local[u] < 0) continue;
    for (Eigen::SparseMatrix<double>::InnerIterator it(L, u); it; ++it) {
      Eigen::Index row = local[static_cast<VertexId>(it.row())];
      if (row >= 0) trip.emplace_back(row, local[u], it.value());
    }
  }

  Eigen::VectorXd x;
  if (opts.kind == SolveOptions::Kind::DenseFallback || k <= opts.dense_threshold) {
    Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(dim, dim);
    for (const auto& tr : trip) dense(tr.row(), tr.col()) += tr.value();
    x = dense.ldlt().solve(rhs);
  } else {
    Eigen::SparseMatrix<double> sub(dim, dim);
    sub.setFromTriplets(trip.begin(), trip.end());
    Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper> cg;
    cg.setTolerance(opts.tolerance);
    cg.setMaxIterations(opts.max_iterations > 0 ? opts.max_iterations
                                                : static_cast<int>(10 * k + 1000));
    cg.compute(sub);
    x = cg.solve(rhs);
  }

  double xs = local[s] >= 0 ? x[local[s]] : 0.0;
  double xt = local[t] >= 0 ? x[local[t]] : 0.0;
  return xs - xt;
}

}  // namespace detail

// chi(s,t)^T L+ chi(s,t) via one grounded solve on the component of s and t.
inline double effective_resistance(const LaplacianSystem& sys, VertexId s, VertexId t,
                                   const SolveOptions& opts = {}) {
  if (s >= sys.vertex_count() || t >= sys.vertex_count())
    throw UnknownVertex("query vertex out of range");
  if (s == t) return 0.0;
  if (!sys.same_component(s, t))
    throw Disconnected("vertices " + std::to_string(s) + " and " + std::to_string(t) +
                       " are in different components");
  return detail::solve_grounded(sys, s, t, opts);
}

// Dense Moore-Penrose pseudoinverse, test-oracle use only.
inline Eigen::MatrixXd pinv_dense(const LaplacianSystem& sys, std::size_t cap = 2048) {
  const std::size_t n = sys.vertex_count();
  if (n > cap) throw TooLarge("pinv_dense: " + std::to_string(n) + " vertices exceeds cap");
  Eigen::MatrixXd dense = Eigen::MatrixXd(sys.matrix());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense);
  const Eigen::VectorXd& ev = es.eigenvalues();
  double lmax = n > 0 ? std::abs(ev[static_cast<Eigen::Index>(n) - 1]) : 0.0;
  double cut = lmax * 1e-10;
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (ev[i] > cut) inv[i] = 1.0 / ev[i];
  return es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().transpose();
}

inline double er_from_pinv(const Eigen::MatrixXd& pinv, VertexId s, VertexId t) {
  return pinv(s, s) + pinv(t, t) - 2.0 * pinv(s, t);
}

}  // namespace dynres
