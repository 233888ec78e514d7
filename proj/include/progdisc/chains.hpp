#pragma once

#include "progdisc/symbasis.hpp"

namespace progdisc {

// Number of basis vectors on each side with total excitation N, which is
// min(N, 2n+m-N, n) + 1. Throws std::out_of_range unless 0 <= N <= 2n+m.
int chain_size(int N, const ProblemSize& size);

// The two matched basis-vector chains at a fixed total excitation N together
// with their exact cross-Gram matrix gram[i][j] = <v[i] | vp[j]>.
//
// Position i carries the same fixed register index on both sides (C index
// for v, A index for vp); any such pairing makes the Gram matrix symmetric.
// The element order walks the shared-term graph the way the worked example
// does: lowest fixed index first, then the highest, then depth first,
// visiting neighbors in descending index order.
struct ChainPair {
  int N;
  ProblemSize size;
  std::vector<BasisVector> v;
  std::vector<BasisVector> vp;
  std::vector<std::vector<SqrtRational>> gram;

  int length() const { return static_cast<int>(v.size()); }
};

ChainPair build_chain_pair(int N, const ProblemSize& size);

// Exact check that gram[i][j] == gram[j][i] for all i, j.
bool verify_mirror(const ChainPair& chain);

// Sum of the diagonal cross overlaps at total excitation N, evaluated
// directly from the self-paired product terms:
//   sum over terms (i, N-2i, i) of C(n,i) C(m,N-2i) / C(n+m, N-i).
// This equals the signed sum of the chain's Jordan diagonal.
Rational invariant_S(int N, const ProblemSize& size);

// The same quantity read off a built chain's Gram diagonal. Every diagonal
// entry is exactly rational (self-paired terms have equal weight on both
// sides); throws std::domain_error if one is not.
Rational invariant_from_gram(const ChainPair& chain);

}  // namespace progdisc
