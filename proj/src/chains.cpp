#include "progdisc/chains.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace progdisc {

namespace {

void check_total(int N, const ProblemSize& size) {
  if (N < 0 || N > 2 * size.n + size.m) {
    throw std::out_of_range("total excitation " + std::to_string(N) +
                            " outside [0, " +
                            std::to_string(2 * size.n + size.m) + "]");
  }
}

}  // namespace

int chain_size(int N, const ProblemSize& size) {
  check_total(N, size);
  return std::min({N, 2 * size.n + size.m - N, size.n}) + 1;
}

ChainPair build_chain_pair(int N, const ProblemSize& size) {
  check_total(N, size);
  const int c_lo = std::max(0, N - (size.n + size.m));
  const int c_hi = std::min(size.n, N);

  // Walk the fixed indices. Positions p and a share a product term exactly
  // when the middle register index N - p - a lies in [0, m].
  std::vector<int> order{c_lo};
  std::vector<char> seen(c_hi - c_lo + 1, 0);
  seen[0] = 1;
  std::vector<int> stack;
  if (c_hi != c_lo) {
    order.push_back(c_hi);
    seen[c_hi - c_lo] = 1;
    stack.push_back(c_hi);
  }
  stack.push_back(c_lo);
  while (!stack.empty()) {
    int p = stack.back();
    stack.pop_back();
    int a_top = std::min(c_hi, N - p);
    int a_bot = std::max(c_lo, N - p - size.m);
    for (int a = a_top; a >= a_bot; --a) {
      if (!seen[a - c_lo]) {
        seen[a - c_lo] = 1;
        order.push_back(a);
        stack.push_back(a);
      }
    }
  }
  // The shared-term graph is connected for every size we build, but an
  // unvisited index would silently drop an element, so sweep up just in case.
  for (int a = c_lo; a <= c_hi; ++a) {
    if (!seen[a - c_lo]) order.push_back(a);
  }
  assert(static_cast<int>(order.size()) == chain_size(N, size));

  ChainPair chain{N, size, {}, {}, {}};
  for (int c : order) {
    chain.v.push_back(basis_vector(Side::H1, N - c, c, size));
    chain.vp.push_back(basis_vector(Side::H2, c, N - c, size));
  }
  const int L = chain.length();
  chain.gram.assign(L, std::vector<SqrtRational>(L));
  for (int i = 0; i < L; ++i) {
    for (int j = 0; j < L; ++j) {
      chain.gram[i][j] = overlap(chain.v[i], chain.vp[j]);
    }
  }
  return chain;
}

bool verify_mirror(const ChainPair& chain) {
  const int L = chain.length();
  for (int i = 0; i < L; ++i) {
    for (int j = i + 1; j < L; ++j) {
      if (chain.gram[i][j] != chain.gram[j][i]) return false;
    }
  }
  return true;
}

Rational invariant_S(int N, const ProblemSize& size) {
  check_total(N, size);
  Rational sum = 0;
  for (int i = 0; i <= size.n; ++i) {
    int j = N - 2 * i;
    if (j < 0 || j > size.m) continue;
    sum += Rational(binomial(size.n, i) * binomial(size.m, j),
                    binomial(size.n + size.m, N - i));
  }
  return sum;
}

Rational invariant_from_gram(const ChainPair& chain) {
  Rational sum = 0;
  for (int i = 0; i < chain.length(); ++i) {
    sum += chain.gram[i][i].as_rational();
  }
  return sum;
}

}  // namespace progdisc
