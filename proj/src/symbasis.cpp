#include "progdisc/symbasis.hpp"

#include <cassert>
#include <string>

namespace progdisc {

ProblemSize::ProblemSize(int n_, int m_) : n(n_), m(m_) {
  if (n < 1 || m < 1) {
    throw std::invalid_argument("copy counts must be at least 1, got n=" +
                                std::to_string(n_) + " m=" + std::to_string(m_));
  }
}

std::vector<SplitTerm> split_symmetric(int k, int r1, int r2) {
  if (r1 < 0 || r2 < 0 || k < 0 || k > r1 + r2) {
    throw std::out_of_range("split index " + std::to_string(k) +
                            " outside register pair (" + std::to_string(r1) +
                            ", " + std::to_string(r2) + ")");
  }
  BigInt total = binomial(r1 + r2, k);
  std::vector<SplitTerm> out;
  for (int i1 = std::max(0, k - r2); i1 <= std::min(r1, k); ++i1) {
    int i2 = k - i1;
    out.push_back({i1, i2, Rational(binomial(r1, i1) * binomial(r2, i2), total)});
  }
  return out;
}

namespace {

Rational amp_sq_h1_of(int a, int b, const ProblemSize& size) {
  return Rational(binomial(size.n, a) * binomial(size.m, b),
                  binomial(size.n + size.m, a + b));
}

Rational amp_sq_h2_of(int b, int c, const ProblemSize& size) {
  return Rational(binomial(size.m, b) * binomial(size.n, c),
                  binomial(size.n + size.m, b + c));
}

}  // namespace

BasisVector basis_vector(Side side, int j, int k, const ProblemSize& size) {
  int j_max = side == Side::H1 ? size.n + size.m : size.n;
  int k_max = side == Side::H1 ? size.n : size.n + size.m;
  if (j < 0 || j > j_max || k < 0 || k > k_max) {
    throw std::out_of_range("basis index (" + std::to_string(j) + ", " +
                            std::to_string(k) + ") outside support");
  }
  BasisVector v{side, j, k, size, {}};
  if (side == Side::H1) {
    for (const auto& s : split_symmetric(j, size.n, size.m)) {
      v.terms.push_back({s.i1, s.i2, k, s.amp_sq, amp_sq_h2_of(s.i2, k, size)});
    }
  } else {
    for (const auto& s : split_symmetric(k, size.m, size.n)) {
      v.terms.push_back({j, s.i1, s.i2, amp_sq_h1_of(j, s.i1, size), s.amp_sq});
    }
  }
  return v;
}

SqrtRational overlap(const BasisVector& v, const BasisVector& vp) {
  if (v.side != Side::H1 || vp.side != Side::H2) {
    throw std::invalid_argument("overlap takes an H1 vector then an H2 vector");
  }
  if (v.size != vp.size) {
    throw std::invalid_argument("overlap across different problem sizes");
  }
  SqrtRational result;
  int shared = 0;
  for (const auto& t1 : v.terms) {
    for (const auto& t2 : vp.terms) {
      if (t1.a == t2.a && t1.b == t2.b && t1.c == t2.c) {
        ++shared;
        result = SqrtRational::sqrt_of(Rational(t1.amp_sq_h1 * t2.amp_sq_h2));
      }
    }
  }
  assert(shared <= 1);
  (void)shared;
  return result;
}

}  // namespace progdisc
