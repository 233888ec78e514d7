#pragma once

#include "progdisc/rational.hpp"

#include <vector>

namespace progdisc {

// Copy counts for one discrimination instance: n program copies on each of
// registers A and C, m data copies on register B. The two hypotheses are
// "data matches A" (H1 side) and "data matches C" (H2 side).
struct ProblemSize {
  int n;
  int m;

  // Throws std::invalid_argument unless n >= 1 and m >= 1.
  ProblemSize(int n_, int m_);

  // Dimension of the support of each mean input state.
  int support_dim() const { return (n + 1) * (n + m + 1); }

  // Dimension of the intersection of the two supports.
  int intersection_dim() const { return 2 * n + m + 1; }

  // Dimension of the joint span of the two supports.
  int span_dim() const { return 2 * n * n + 2 * n * m + 2 * n + m + 1; }

  bool operator==(const ProblemSize& o) const { return n == o.n && m == o.m; }
  bool operator!=(const ProblemSize& o) const { return !(*this == o); }
};

enum class Side { H1, H2 };

// One product-basis term |e_a>_A |e_b>_B |e_c>_C of a basis vector, carrying
// the squared amplitude it would have inside an H1 vector and inside an H2
// vector. Only the side matching the owning vector applies; the other is kept
// because cross overlaps need both factors.
struct BracketTerm {
  int a;
  int b;
  int c;
  Rational amp_sq_h1;
  Rational amp_sq_h2;
};

// A support basis vector. H1 vectors are |e_j> of the symmetric AB register
// tensored with |e_k>_C (0 <= j <= n+m, 0 <= k <= n); H2 vectors are |e_j>_A
// tensored with |e_k> of the symmetric BC register (0 <= j <= n,
// 0 <= k <= n+m). terms holds the product-basis expansion.
struct BasisVector {
  Side side;
  int j;
  int k;
  ProblemSize size;
  std::vector<BracketTerm> terms;

  // Total excitation number, conserved across the expansion.
  int total() const { return j + k; }

  // The register index that stays fixed across all terms: c for an H1
  // vector, a for an H2 vector. Chains are keyed by this value.
  int fixed_index() const { return side == Side::H1 ? k : j; }
};

// One term of the expansion of a symmetric-register basis state over a pair
// of smaller symmetric registers.
struct SplitTerm {
  int i1;
  int i2;
  Rational amp_sq;
};

// Expands |e_k> of an (r1+r2)-copy symmetric register over the product of an
// r1-copy and an r2-copy register: terms (i1, i2) with i1 + i2 = k and
// squared amplitude C(r1,i1) C(r2,i2) / C(r1+r2,k), listed with i1 ascending.
// Throws std::out_of_range unless 0 <= k <= r1 + r2.
std::vector<SplitTerm> split_symmetric(int k, int r1, int r2);

// Builds the (side, j, k) basis vector with its product-basis expansion.
// Throws std::out_of_range when (j, k) is outside the side's index ranges.
BasisVector basis_vector(Side side, int j, int k, const ProblemSize& size);

// Exact inner product <v|vp> of an H1 vector with an H2 vector. The two
// expansions share at most one product term (asserted); the result is the
// geometric mean of its two squared amplitudes, or zero.
SqrtRational overlap(const BasisVector& v, const BasisVector& vp);

}  // namespace progdisc
