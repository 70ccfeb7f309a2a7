#pragma once

// Brute-force reference computations used to cross-check the library.
// Each one works from definitions and shares no code with src/.

#include "dgg/graph.hpp"
#include "dgg/group.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

// Multiplicity-weighted number of saturated chains from the bottom to v,
// by explicit depth-first enumeration of every chain.
inline dgg::BigInt enumerate_paths(const dgg::GradedGraph& g, dgg::VertexId v) {
  if (g.rank(v) == 0) return 1;
  dgg::BigInt total = 0;
  for (const auto& nb : g.down(v)) total += enumerate_paths(g, nb.vertex) * nb.m;
  return total;
}

// Standard Young tableaux of shape `parts`, counted by trying every
// filling of the diagram with 1..n and keeping the increasing ones.
inline std::uint64_t brute_force_syt(const std::vector<int>& parts) {
  const int n = std::accumulate(parts.begin(), parts.end(), 0);
  std::vector<int> fill(n);
  std::iota(fill.begin(), fill.end(), 1);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    int offset = 0;
    for (std::size_t i = 0; i < parts.size() && ok; ++i) {
      for (int j = 0; j < parts[i] && ok; ++j) {
        const int v = fill[offset + j];
        if (j > 0 && fill[offset + j - 1] > v) ok = false;
        if (i > 0 && fill[offset - parts[i - 1] + j] > v) ok = false;
      }
      offset += parts[i];
    }
    if (ok) ++count;
  } while (std::next_permutation(fill.begin(), fill.end()));
  return count;
}

// Longest increasing subsequence; equals the first row of the RSK shape.
inline int longest_increasing(const std::vector<int>& w) {
  std::vector<int> best(w.size(), 1);
  int out = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (w[j] < w[i]) best[i] = std::max(best[i], best[j] + 1);
    }
    out = std::max(out, best[i]);
  }
  return out;
}

// Irreducible degrees from the regular representation, in floating point.
// A random central element z = sum c_C (class sum C) acts on the group
// algebra with eigenvalue omega_chi(z) of multiplicity d_chi^2, so the
// multiplicities of the distinct eigenvalues give the degree multiset.
inline std::vector<std::uint64_t> regular_character_degrees(const dgg::FiniteGroup& g, unsigned seed = 7) {
  const std::size_t n = g.order();
  std::vector<int> cls(n, -1);
  int classes = 0;
  for (dgg::Elem x = 0; x < n; ++x) {
    if (cls[x] >= 0) continue;
    for (dgg::Elem y = 0; y < n; ++y) cls[g.mul(g.mul(g.inverse(y), x), y)] = classes;
    ++classes;
  }
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> coef(1.0, 2.0);
  std::vector<double> c(classes);
  for (auto& v : c) v = coef(rng);

  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (dgg::Elem x = 0; x < n; ++x) {
    for (dgg::Elem h = 0; h < n; ++h) m(g.mul(x, h), h) += c[cls[x]];
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXd> solver(m);
  std::vector<std::complex<double>> eig(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::vector<bool> used(n, false);
  std::vector<std::uint64_t> degrees;
  for (std::size_t i = 0; i < n; ++i) {
    if (used[i]) continue;
    std::size_t mult = 0;
    for (std::size_t j = i; j < n; ++j) {
      if (!used[j] && std::abs(eig[j] - eig[i]) < 1e-6) {
        used[j] = true;
        ++mult;
      }
    }
    const auto d = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(mult))));
    if (d * d != mult) return {};  // eigenvalue clash; caller treats as failure
    degrees.push_back(d);
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

}  // namespace oracle
