#include "progdisc/jordan.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <string>

namespace progdisc {

namespace {

void check_level(int k, int hi, const char* what) {
  if (k < 0 || k > hi) {
    throw std::out_of_range(std::string(what) + " index " + std::to_string(k) +
                            " outside [0, " + std::to_string(hi) + "]");
  }
}

}  // namespace

Rational kappa_closed(int k, const ProblemSize& size) {
  check_level(k, size.n, "overlap");
  Rational prod = 1;
  for (int t = 0; t < k; ++t) {
    prod *= Rational(size.n - t, size.n + size.m - t);
  }
  return k % 2 == 0 ? prod : Rational(-prod);
}

Rational kappa_from_invariants(int k, const ProblemSize& size) {
  if (k < 1 || k > size.n) {
    throw std::out_of_range("invariant recurrence needs 1 <= k <= n, got " +
                            std::to_string(k));
  }
  return invariant_S(k, size) - invariant_S(k - 1, size);
}

int multiplicity(int k, const ProblemSize& size) {
  check_level(k, size.n, "overlap");
  return 2 * size.n + size.m + 1 - 2 * k;
}

std::vector<JordanEntry> spectrum(const ProblemSize& size) {
  std::vector<JordanEntry> out;
  for (int k = 0; k <= size.n; ++k) {
    out.push_back({k, kappa_closed(k, size), multiplicity(k, size)});
  }
  return out;
}

std::pair<double, double> two_chain_rotation(const ChainPair& chain) {
  if (chain.length() != 2) {
    throw std::invalid_argument("rotation expects a two-element chain, got " +
                                std::to_string(chain.length()) + " elements");
  }
  const double g11 = chain.gram[0][0].value();
  const double g12 = chain.gram[0][1].value();
  const double g21 = chain.gram[1][0].value();
  const double g22 = chain.gram[1][1].value();

  if (chain.gram[0][1].is_zero()) return {g11, g22};

  const double scale = std::max({std::abs(g11), std::abs(g12), std::abs(g22), 1.0});
  auto rotated = [&](double t) {
    double c = 1.0 / std::sqrt(1.0 + t * t);
    double s = t * c;
    double d1 = c * c * g11 + 2 * c * s * g12 + s * s * g22;
    double d2 = s * s * g11 - 2 * c * s * g12 + c * c * g22;
    double off_lo = -c * s * g11 + (c * c - s * s) * g12 + c * s * g22;
    double off_hi = -c * s * g11 + (c * c - s * s) * g21 + c * s * g22;
    if (std::abs(off_lo) > 1e-12 * scale || std::abs(off_hi) > 1e-12 * scale) {
      throw std::logic_error("rotation left a nonzero off-diagonal overlap");
    }
    return std::pair<double, double>{d1, d2};
  };

  const double b = g11 - g22;
  const double disc = std::sqrt(b * b + 4 * g12 * g12);
  // The two roots differ by a quarter turn and swap the diagonal.
  auto first = rotated((-b + disc) / (2 * g12));
  auto second = rotated((-b - disc) / (2 * g12));
  return first.first >= std::abs(first.second) ? first : second;
}

std::vector<double> jordan_numeric(const ChainPair& chain) {
  const int L = chain.length();
  Eigen::MatrixXd g(L, L);
  for (int i = 0; i < L; ++i) {
    for (int j = 0; j < L; ++j) g(i, j) = chain.gram[i][j].value();
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(g);
  std::vector<double> values(L);
  for (int i = 0; i < L; ++i) {
    double s = svd.singularValues()(i);
    if (s > 1.0 + 1e-12) {
      throw std::logic_error("singular value exceeds 1: " + std::to_string(s));
    }
    values[i] = std::min(s, 1.0);
  }
  return values;
}

}  // namespace progdisc
