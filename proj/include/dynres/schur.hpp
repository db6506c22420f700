#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <unordered_map>
#include <vector>

#include "dynres/graph.hpp"
#include "dynres/laplacian.hpp"
#include "dynres/schur_sketch.hpp"
#include "dynres/terminal_set.hpp"
#include "dynres/walk_run.hpp"

namespace dynres {

// Dense Laplacian on T-indexed coordinates. Symmetric, PSD, zero row sums.
struct ExactSchur {
  std::vector<VertexId> terminals;  // coordinate order
  Eigen::MatrixXd lap;

  Eigen::Index index_of(VertexId u) const {
    auto it = std::find(terminals.begin(), terminals.end(), u);
    return it == terminals.end() ? -1 : static_cast<Eigen::Index>(it - terminals.begin());
  }
};

// Algebraic Schur complement L_TT - L_TF L_FF^+ L_FT. Eliminated components
// that touch no terminal drop out (their coupling block is zero), which the
// pseudoinverse of L_FF handles uniformly.
inline ExactSchur exact_schur(const DynamicMultigraph& g, const TerminalSet& terminals,
                              std::size_t cap = 2048) {
  const std::size_t n = g.vertex_count();
  if (n > cap) throw TooLarge("exact_schur: " + std::to_string(n) + " vertices exceeds cap");

  ExactSchur out;
  std::vector<Eigen::Index> t_index(n, -1), f_index(n, -1);
  std::vector<VertexId> f_list;
  for (VertexId u = 0; u < n; ++u) {
    if (terminals.contains(u)) {
      t_index[u] = static_cast<Eigen::Index>(out.terminals.size());
      out.terminals.push_back(u);
    } else {
      f_index[u] = static_cast<Eigen::Index>(f_list.size());
      f_list.push_back(u);
    }
  }
  const Eigen::Index nt = static_cast<Eigen::Index>(out.terminals.size());
  const Eigen::Index nf = static_cast<Eigen::Index>(f_list.size());

  Eigen::MatrixXd ltt = Eigen::MatrixXd::Zero(nt, nt);
  Eigen::MatrixXd lff = Eigen::MatrixXd::Zero(nf, nf);
  Eigen::MatrixXd ltf = Eigen::MatrixXd::Zero(nt, nf);
  g.for_each_live_edge([&](EdgeId, VertexId u, VertexId v) {
    auto add = [&](Eigen::MatrixXd& m, Eigen::Index i, Eigen::Index j, double w) { m(i, j) += w; };
    bool ut = t_index[u] >= 0, vt = t_index[v] >= 0;
    if (ut && vt) {
      add(ltt, t_index[u], t_index[u], 1.0);
      add(ltt, t_index[v], t_index[v], 1.0);
      add(ltt, t_index[u], t_index[v], -1.0);
      add(ltt, t_index[v], t_index[u], -1.0);
    } else if (!ut && !vt) {
      add(lff, f_index[u], f_index[u], 1.0);
      add(lff, f_index[v], f_index[v], 1.0);
      add(lff, f_index[u], f_index[v], -1.0);
      add(lff, f_index[v], f_index[u], -1.0);
    } else {
      VertexId t = ut ? u : v;
      VertexId f = ut ? v : u;
      add(ltt, t_index[t], t_index[t], 1.0);
      add(lff, f_index[f], f_index[f], 1.0);
      add(ltf, t_index[t], f_index[f], -1.0);
    }
  });

  if (nf == 0) {
    out.lap = ltt;
    return out;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(lff);
  const Eigen::VectorXd& ev = es.eigenvalues();
  double cut = (ev.size() > 0 ? std::abs(ev[ev.size() - 1]) : 0.0) * 1e-12;
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(nf);
  for (Eigen::Index i = 0; i < nf; ++i)
    if (ev[i] > cut) inv[i] = 1.0 / ev[i];
  Eigen::MatrixXd pinv_ff = es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().transpose();
  Eigen::MatrixXd sc = ltt - ltf * pinv_ff * ltf.transpose();
  out.lap = 0.5 * (sc + sc.transpose());
  return out;
}

// Pairwise effective resistance between two terminals of the complement.
inline double effective_resistance(const ExactSchur& sc, VertexId u, VertexId v) {
  Eigen::Index i = sc.index_of(u), j = sc.index_of(v);
  if (i < 0 || j < 0) throw UnknownVertex("vertex is not a terminal of the Schur complement");
  if (i == j) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sc.lap);
  const Eigen::VectorXd& ev = es.eigenvalues();
  double cut = (ev.size() > 0 ? std::abs(ev[ev.size() - 1]) : 0.0) * 1e-12;
  double r = 0.0;
  for (Eigen::Index k = 0; k < ev.size(); ++k) {
    if (ev[k] <= cut) continue;
    double d = es.eigenvectors()(i, k) - es.eigenvectors()(j, k);
    r += d * d / ev[k];
  }
  if (r <= 0.0) throw Disconnected("terminals lie in different components of the complement");
  return r;
}

struct SketchStats {
  std::size_t walks = 0;
  std::size_t capped = 0;
};

// Monte Carlo Schur sparsifier: for each live edge e=(u,v) and each of rho
// replicas, run two half walks from u and v until they hit T or the step cap;
// when both reach T the combined walk of length l (both halves plus e itself)
// contributes the H-edge (t1, t2) with weight 1/(rho*l).
inline SchurSketch sample_schur_sketch(const DynamicMultigraph& g, const TerminalSet& terminals,
                                       std::uint32_t rho, std::uint32_t step_cap, RandomStream& rng,
                                       SketchStats* stats = nullptr) {
  SchurSketch sketch;
  WalkId next = 0;
  g.for_each_live_edge([&](EdgeId, VertexId u, VertexId v) {
    for (std::uint32_t i = 0; i < rho; ++i) {
      WalkRun a = run_walk(g, terminals, u, step_cap, rng);
      WalkRun b = run_walk(g, terminals, v, step_cap, rng);
      WalkId w = next++;
      if (stats) ++stats->walks;
      if (a.reached_terminal && b.reached_terminal) {
        HEdge e;
        e.t1 = a.vertices.back();
        e.t2 = b.vertices.back();
        e.length = static_cast<std::uint32_t>(a.length() + b.length() + 1);
        e.weight = 1.0 / (static_cast<double>(rho) * e.length);
        sketch.set(w, e);
      } else if (stats) {
        ++stats->capped;
      }
    }
  });
  return sketch;
}

// Exact partial Schur complement from terminal-free walks with at most
// max_interior interior (non-terminal) vertices: a walk t0, u_1, ..., u_k, t1
// contributes prod_i 1/deg(u_i) times the product of edge multiplicities
// along its vertex sequence, counted once per undirected walk. Computed by a
// transfer recurrence over interior vertices; the directed t0->t1 sum equals
// the undirected mass (reversal is a weight-preserving bijection), and closed
// walks are dropped because self-loops vanish in a Laplacian.
inline ExactSchur enumerate_terminal_free_walks(const DynamicMultigraph& g,
                                                const TerminalSet& terminals,
                                                std::size_t max_interior) {
  const std::size_t n = g.vertex_count();
  if (n > 12 || max_interior > 32)
    throw TooLarge("enumerate_terminal_free_walks is restricted to <=12 vertices, <=32 interiors");

  ExactSchur out;
  std::vector<Eigen::Index> t_index(n, -1);
  for (VertexId u = 0; u < n; ++u)
    if (terminals.contains(u)) {
      t_index[u] = static_cast<Eigen::Index>(out.terminals.size());
      out.terminals.push_back(u);
    }
  const Eigen::Index nt = static_cast<Eigen::Index>(out.terminals.size());
  out.lap = Eigen::MatrixXd::Zero(nt, nt);

  std::vector<std::vector<double>> mult(n, std::vector<double>(n, 0.0));
  g.for_each_live_edge([&](EdgeId, VertexId u, VertexId v) {
    mult[u][v] += 1.0;
    mult[v][u] += 1.0;
  });

  Eigen::MatrixXd mass = Eigen::MatrixXd::Zero(nt, nt);
  for (Eigen::Index ti = 0; ti < nt; ++ti) {
    VertexId t0 = out.terminals[ti];
    // cur[f]: sum over walks t0 -> f with all interiors' 1/deg factors applied
    std::vector<double> cur(n, 0.0);
    for (VertexId f = 0; f < n; ++f)
      if (t_index[f] < 0 && mult[t0][f] > 0.0) cur[f] = mult[t0][f] / static_cast<double>(g.degree(f));
    // direct T-T edges (no interior)
    for (Eigen::Index tj = 0; tj < nt; ++tj)
      if (tj != ti) mass(ti, tj) += mult[t0][out.terminals[tj]];
    for (std::size_t used = 1; used <= max_interior; ++used) {
      for (Eigen::Index tj = 0; tj < nt; ++tj) {
        if (tj == ti) continue;
        VertexId t1 = out.terminals[tj];
        for (VertexId f = 0; f < n; ++f)
          if (cur[f] > 0.0) mass(ti, tj) += cur[f] * mult[f][t1];
      }
      if (used == max_interior) break;
      std::vector<double> nxt(n, 0.0);
      for (VertexId f = 0; f < n; ++f) {
        if (cur[f] <= 0.0) continue;
        for (VertexId x = 0; x < n; ++x)
          if (t_index[x] < 0 && mult[f][x] > 0.0)
            nxt[x] += cur[f] * mult[f][x] / static_cast<double>(g.degree(x));
      }
      cur.swap(nxt);
    }
  }

  for (Eigen::Index i = 0; i < nt; ++i)
    for (Eigen::Index j = 0; j < nt; ++j) {
      if (i == j) continue;
      double w = 0.5 * (mass(i, j) + mass(j, i));  // equal in exact arithmetic
      out.lap(i, j) -= 0.5 * w;
      out.lap(j, i) -= 0.5 * w;
      out.lap(i, i) += 0.5 * w;
      out.lap(j, j) += 0.5 * w;
    }
  return out;
}

}  // namespace dynres
