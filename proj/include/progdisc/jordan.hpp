#pragma once

#include "progdisc/chains.hpp"

#include <utility>

namespace progdisc {

// k-th principal overlap between the two supports:
//   kappa_k = (-1)^k * prod_{t=0}^{k-1} (n - t) / (n + m - t)
// for 0 <= k <= n (kappa_0 = 1). Throws std::out_of_range otherwise.
Rational kappa_closed(int k, const ProblemSize& size);

// The same value recovered from consecutive chain invariants,
// kappa_k = S_k - S_{k-1}, valid for 1 <= k <= n.
Rational kappa_from_invariants(int k, const ProblemSize& size);

// Number of chain positions across all totals whose Jordan value is
// kappa_k, which is 2n + m + 1 - 2k.
int multiplicity(int k, const ProblemSize& size);

struct JordanEntry {
  int k;
  Rational kappa;
  int mult;
};

// The complete signed spectrum. Multiplicities sum to the support dimension;
// the k = 0 entry counts the intersection of the two supports.
std::vector<JordanEntry> spectrum(const ProblemSize& size);

// Diagonalizes a two-element chain by one rotation applied identically to
// both sides. The angle solves g12 tan^2 + (g11 - g22) tan - g12 = 0, the
// root picked so the leading diagonal dominates; with g12 = 0 the chain is
// already diagonal and is returned unrotated. Returns the signed diagonal
// (kappa0, kappa1). Throws std::invalid_argument unless the chain has
// exactly two elements; throws std::logic_error if the rotation fails to
// null the off-diagonal entries.
std::pair<double, double> two_chain_rotation(const ChainPair& chain);

// Absolute Jordan values of one chain, descending, from a dense SVD of its
// Gram matrix. Values are clipped to [0, 1]; a value beyond 1 + 1e-12
// signals a defect and throws std::logic_error.
std::vector<double> jordan_numeric(const ChainPair& chain);

}  // namespace progdisc
