#include "progdisc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>

namespace progdisc {

namespace {

constexpr long long kBatchSamples = 1024;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Coordinates of the r-copy symmetric state of one Bloch vector: the k-th
// amplitude is cos^(r-k)(theta/2) sin^k(theta/2) e^(ik phi) sqrt(C(r,k)).
Eigen::VectorXcd symmetric_coords(int r, double theta, double phi) {
  Eigen::VectorXcd coords(r + 1);
  const double co = std::cos(theta / 2.0);
  const double si = std::sin(theta / 2.0);
  for (int k = 0; k <= r; ++k) {
    double mag = std::pow(co, r - k) * std::pow(si, k) *
                 std::sqrt(to_double(Rational(binomial(r, k))));
    coords(k) = std::polar(mag, k * phi);
  }
  return coords;
}

}  // namespace

int dense_side(const ProblemSize& size) {
  return (size.n + 1) * (size.m + 1) * (size.n + 1);
}

int dense_coord(int a, int b, int c, const ProblemSize& size) {
  return (a * (size.m + 1) + b) * (size.n + 1) + c;
}

Eigen::VectorXd embed_basis_vector(const BasisVector& v) {
  Eigen::VectorXd coords = Eigen::VectorXd::Zero(dense_side(v.size));
  for (const BracketTerm& t : v.terms) {
    const Rational& amp_sq = v.side == Side::H1 ? t.amp_sq_h1 : t.amp_sq_h2;
    coords(dense_coord(t.a, t.b, t.c, v.size)) = std::sqrt(to_double(amp_sq));
  }
  return coords;
}

Eigen::MatrixXd rho_exact(Side side, const ProblemSize& size) {
  const int len = dense_side(size);
  const int j_hi = side == Side::H1 ? size.n + size.m : size.n;
  const int k_hi = side == Side::H1 ? size.n : size.n + size.m;
  Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(len, len);
  for (int j = 0; j <= j_hi; ++j) {
    for (int k = 0; k <= k_hi; ++k) {
      Eigen::VectorXd vec = embed_basis_vector(basis_vector(side, j, k, size));
      rho.noalias() += vec * vec.transpose();
    }
  }
  return rho / size.support_dim();
}

Eigen::MatrixXcd rho_montecarlo(Side side, const ProblemSize& size,
                                long long samples, std::uint64_t seed) {
  if (samples < 1) {
    throw std::invalid_argument("sample count must be positive, got " +
                                std::to_string(samples));
  }
  const int len = dense_side(size);
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(len, len);
  const long long batches = (samples + kBatchSamples - 1) / kBatchSamples;
  for (long long batch = 0; batch < batches; ++batch) {
    std::mt19937_64 gen(
        splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(batch))));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const long long count =
        std::min(kBatchSamples, samples - batch * kBatchSamples);
    Eigen::MatrixXcd states(len, count);
    for (long long s = 0; s < count; ++s) {
      const double theta1 = std::acos(1.0 - 2.0 * unit(gen));
      const double phi1 = 2.0 * std::numbers::pi * unit(gen);
      const double theta2 = std::acos(1.0 - 2.0 * unit(gen));
      const double phi2 = 2.0 * std::numbers::pi * unit(gen);
      Eigen::VectorXcd a = symmetric_coords(size.n, theta1, phi1);
      Eigen::VectorXcd c = symmetric_coords(size.n, theta2, phi2);
      Eigen::VectorXcd b = side == Side::H1
                               ? symmetric_coords(size.m, theta1, phi1)
                               : symmetric_coords(size.m, theta2, phi2);
      for (int ia = 0; ia <= size.n; ++ia) {
        for (int ib = 0; ib <= size.m; ++ib) {
          for (int ic = 0; ic <= size.n; ++ic) {
            states(dense_coord(ia, ib, ic, size), s) = a(ia) * b(ib) * c(ic);
          }
        }
      }
    }
    acc.noalias() += states * states.adjoint();
  }
  return acc / static_cast<double>(samples);
}

std::vector<double> global_jordan_svd(const ProblemSize& size) {
  const int dim = size.support_dim();
  const int len = dense_side(size);
  Eigen::MatrixXd v1(len, dim);
  Eigen::MatrixXd v2(len, dim);
  int col = 0;
  for (int j = 0; j <= size.n + size.m; ++j) {
    for (int k = 0; k <= size.n; ++k) {
      v1.col(col) = embed_basis_vector(basis_vector(Side::H1, j, k, size));
      v2.col(col) = embed_basis_vector(basis_vector(Side::H2, k, j, size));
      ++col;
    }
  }
  Eigen::MatrixXd gram = v1.transpose() * v2;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(gram);
  return {svd.singularValues().data(), svd.singularValues().data() + dim};
}

double helstrom_numeric(const ProblemSize& size, const Priors& priors) {
  const double eta = priors.eta();
  Eigen::MatrixXd lambda = (1.0 - eta) * rho_exact(Side::H2, size) -
                           eta * rho_exact(Side::H1, size);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lambda,
                                                        Eigen::EigenvaluesOnly);
  return 0.5 * (1.0 - solver.eigenvalues().cwiseAbs().sum());
}

}  // namespace progdisc
