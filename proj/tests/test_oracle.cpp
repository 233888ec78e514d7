#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "progdisc/jordan.hpp"
#include "progdisc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

using progdisc::BasisVector;
using progdisc::Priors;
using progdisc::ProblemSize;
using progdisc::Side;

namespace {

// Columns are the embedded basis vectors of one side, in (j, k) order.
Eigen::MatrixXd embedded_basis(Side side, const ProblemSize& size) {
  const int j_hi = side == Side::H1 ? size.n + size.m : size.n;
  const int k_hi = side == Side::H1 ? size.n : size.n + size.m;
  Eigen::MatrixXd cols(progdisc::dense_side(size), size.support_dim());
  int col = 0;
  for (int j = 0; j <= j_hi; ++j) {
    for (int k = 0; k <= k_hi; ++k) {
      cols.col(col++) =
          progdisc::embed_basis_vector(progdisc::basis_vector(side, j, k, size));
    }
  }
  return cols;
}

// Permutation matrix that swaps registers A and C on the product grid.
Eigen::MatrixXd register_swap(const ProblemSize& size) {
  const int len = progdisc::dense_side(size);
  Eigen::MatrixXd swap = Eigen::MatrixXd::Zero(len, len);
  for (int a = 0; a <= size.n; ++a) {
    for (int b = 0; b <= size.m; ++b) {
      for (int c = 0; c <= size.n; ++c) {
        swap(progdisc::dense_coord(c, b, a, size),
             progdisc::dense_coord(a, b, c, size)) = 1.0;
      }
    }
  }
  return swap;
}

double median_entry_error(const Eigen::MatrixXcd& sampled,
                          const Eigen::MatrixXd& exact) {
  std::vector<double> errors;
  for (int i = 0; i < exact.rows(); ++i) {
    for (int j = 0; j < exact.cols(); ++j) {
      errors.push_back(std::abs(sampled(i, j) - std::complex<double>(exact(i, j))));
    }
  }
  std::sort(errors.begin(), errors.end());
  return errors[errors.size() / 2];
}

}  // namespace

TEST_CASE("product grid dimensions and coordinates") {
  ProblemSize s23(2, 3);
  CHECK(progdisc::dense_side(ProblemSize(1, 1)) == 8);
  CHECK(progdisc::dense_side(s23) == 36);

  std::vector<bool> hit(36, false);
  for (int a = 0; a <= 2; ++a) {
    for (int b = 0; b <= 3; ++b) {
      for (int c = 0; c <= 2; ++c) {
        int flat = progdisc::dense_coord(a, b, c, s23);
        CHECK(flat >= 0);
        CHECK(flat < 36);
        CHECK_FALSE(hit[flat]);
        hit[flat] = true;
      }
    }
  }
}

TEST_CASE("embedded amplitudes of small basis vectors") {
  ProblemSize s(2, 3);

  Eigen::VectorXd ground =
      progdisc::embed_basis_vector(progdisc::basis_vector(Side::H1, 0, 0, s));
  CHECK(ground(progdisc::dense_coord(0, 0, 0, s)) == 1.0);
  CHECK(ground.norm() == doctest::Approx(1.0).epsilon(1e-14));

  Eigen::VectorXd one_h1 =
      progdisc::embed_basis_vector(progdisc::basis_vector(Side::H1, 1, 0, s));
  CHECK(one_h1(progdisc::dense_coord(0, 1, 0, s)) ==
        doctest::Approx(std::sqrt(3.0 / 5.0)).epsilon(1e-14));
  CHECK(one_h1(progdisc::dense_coord(1, 0, 0, s)) ==
        doctest::Approx(std::sqrt(2.0 / 5.0)).epsilon(1e-14));
  CHECK(one_h1.norm() == doctest::Approx(1.0).epsilon(1e-14));

  Eigen::VectorXd one_h2 =
      progdisc::embed_basis_vector(progdisc::basis_vector(Side::H2, 0, 1, s));
  CHECK(one_h2(progdisc::dense_coord(0, 1, 0, s)) ==
        doctest::Approx(std::sqrt(3.0 / 5.0)).epsilon(1e-14));
  CHECK(one_h2(progdisc::dense_coord(0, 0, 1, s)) ==
        doctest::Approx(std::sqrt(2.0 / 5.0)).epsilon(1e-14));
}

TEST_CASE("each embedded basis is orthonormal") {
  for (ProblemSize s : {ProblemSize(1, 1), ProblemSize(2, 3), ProblemSize(3, 2)}) {
    for (Side side : {Side::H1, Side::H2}) {
      Eigen::MatrixXd cols = embedded_basis(side, s);
      Eigen::MatrixXd gram = cols.transpose() * cols;
      double defect =
          (gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols()))
              .cwiseAbs()
              .maxCoeff();
      CHECK(defect < 1e-12);
    }
  }
}

TEST_CASE("embedded dot products reproduce the exact cross overlaps") {
  ProblemSize s(2, 3);
  for (int j1 = 0; j1 <= 5; ++j1) {
    for (int k1 = 0; k1 <= 2; ++k1) {
      BasisVector v = progdisc::basis_vector(Side::H1, j1, k1, s);
      Eigen::VectorXd dv = progdisc::embed_basis_vector(v);
      for (int j2 = 0; j2 <= 2; ++j2) {
        for (int k2 = 0; k2 <= 5; ++k2) {
          BasisVector vp = progdisc::basis_vector(Side::H2, j2, k2, s);
          double expected = progdisc::overlap(v, vp).value();
          CHECK(dv.dot(progdisc::embed_basis_vector(vp)) ==
                doctest::Approx(expected).epsilon(1e-13));
        }
      }
    }
  }
}

TEST_CASE("exact mean state is the scaled support projector") {
  for (ProblemSize s : {ProblemSize(1, 1), ProblemSize(2, 3)}) {
    for (Side side : {Side::H1, Side::H2}) {
      Eigen::MatrixXd rho = progdisc::rho_exact(side, s);
      CHECK(rho.rows() == progdisc::dense_side(s));
      CHECK(rho.trace() == doctest::Approx(1.0).epsilon(1e-13));
      CHECK((rho - rho.transpose()).cwiseAbs().maxCoeff() < 1e-14);

      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(rho);
      const double weight = 1.0 / s.support_dim();
      int occupied = 0;
      for (int i = 0; i < rho.rows(); ++i) {
        double ev = solver.eigenvalues()(i);
        CHECK(ev > -1e-12);
        if (ev > 0.5 * weight) {
          CHECK(ev == doctest::Approx(weight).epsilon(1e-10));
          ++occupied;
        } else {
          CHECK(std::abs(ev) < 1e-12);
        }
      }
      CHECK(occupied == s.support_dim());
    }
  }
}

TEST_CASE("the two mean states are register mirrors") {
  for (ProblemSize s : {ProblemSize(1, 1), ProblemSize(2, 3)}) {
    Eigen::MatrixXd swap = register_swap(s);
    Eigen::MatrixXd mirrored =
        swap * progdisc::rho_exact(Side::H1, s) * swap.transpose();
    double defect =
        (mirrored - progdisc::rho_exact(Side::H2, s)).cwiseAbs().maxCoeff();
    CHECK(defect < 1e-14);
  }
}

TEST_CASE("mean states overlap for every size") {
  for (int n = 1; n <= 4; ++n) {
    for (int m = 1; m <= 4; ++m) {
      ProblemSize s(n, m);
      Eigen::MatrixXd r1 = progdisc::rho_exact(Side::H1, s);
      Eigen::MatrixXd r2 = progdisc::rho_exact(Side::H2, s);
      CHECK((r1 * r2).trace() > 0.0);
    }
  }
}

TEST_CASE("a single sampled state is a unit-trace projector") {
  ProblemSize s(1, 2);
  Eigen::MatrixXcd rho = progdisc::rho_montecarlo(Side::H1, s, 1, 7);
  CHECK(rho.trace().real() == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(std::abs(rho.trace().imag()) < 1e-15);
  CHECK((rho - rho.adjoint()).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((rho * rho - rho).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("sampling rejects a nonpositive sample count") {
  CHECK_THROWS_AS(
      (void)progdisc::rho_montecarlo(Side::H1, ProblemSize(1, 1), 0, 1),
      std::invalid_argument);
}

TEST_CASE("sampling is deterministic for a fixed seed") {
  ProblemSize s(1, 1);
  Eigen::MatrixXcd first = progdisc::rho_montecarlo(Side::H2, s, 3000, 42);
  Eigen::MatrixXcd second = progdisc::rho_montecarlo(Side::H2, s, 3000, 42);
  CHECK((first - second).cwiseAbs().maxCoeff() == 0.0);

  Eigen::MatrixXcd other = progdisc::rho_montecarlo(Side::H2, s, 3000, 43);
  CHECK((first - other).cwiseAbs().maxCoeff() > 0.0);
}

TEST_CASE("sampled mean state approaches the exact one") {
  ProblemSize s(1, 1);
  for (Side side : {Side::H1, Side::H2}) {
    Eigen::MatrixXcd sampled = progdisc::rho_montecarlo(side, s, 100000, 2024);
    Eigen::MatrixXd exact = progdisc::rho_exact(side, s);
    CHECK(sampled.trace().real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK((sampled.real() - exact).cwiseAbs().maxCoeff() < 8e-3);
    CHECK(sampled.imag().cwiseAbs().maxCoeff() < 8e-3);
  }
}

TEST_CASE("sampling error shrinks when the sample count doubles") {
  ProblemSize s(1, 1);
  Eigen::MatrixXd exact = progdisc::rho_exact(Side::H1, s);
  double coarse = median_entry_error(
      progdisc::rho_montecarlo(Side::H1, s, 20000, 15), exact);
  double fine = median_entry_error(
      progdisc::rho_montecarlo(Side::H1, s, 40000, 15), exact);
  CHECK(coarse / fine >= 1.3);
}

TEST_CASE("global cross-Gram singular values match the closed spectrum") {
  ProblemSize s11(1, 1);
  std::vector<double> values = progdisc::global_jordan_svd(s11);
  REQUIRE(values.size() == 6);
  for (int i = 0; i < 4; ++i) CHECK(values[i] == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(values[4] == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(values[5] == doctest::Approx(0.5).epsilon(1e-10));

  ProblemSize s23(2, 3);
  std::vector<double> v23 = progdisc::global_jordan_svd(s23);
  REQUIRE(v23.size() == 18);
  for (int i = 0; i < 8; ++i) CHECK(v23[i] == doctest::Approx(1.0).epsilon(1e-10));
  for (int i = 8; i < 14; ++i) CHECK(v23[i] == doctest::Approx(0.4).epsilon(1e-10));
  for (int i = 14; i < 18; ++i) CHECK(v23[i] == doctest::Approx(0.1).epsilon(1e-10));
}

TEST_CASE("global singular values carry the closed multiplicities") {
  for (int n = 1; n <= 4; ++n) {
    for (int m = 1; m <= 4; ++m) {
      ProblemSize s(n, m);
      std::vector<double> values = progdisc::global_jordan_svd(s);
      REQUIRE(static_cast<int>(values.size()) == s.support_dim());

      std::vector<double> expected;
      for (const progdisc::JordanEntry& entry : progdisc::spectrum(s)) {
        double mag = std::abs(progdisc::to_double(entry.kappa));
        expected.insert(expected.end(), entry.mult, mag);
      }
      std::sort(expected.rbegin(), expected.rend());

      int unit = 0;
      for (int i = 0; i < s.support_dim(); ++i) {
        CHECK(std::abs(values[i] - expected[i]) < 1e-10);
        if (values[i] >= 1.0 - 1e-10) ++unit;
      }
      CHECK(unit == s.intersection_dim());
    }
  }
}

TEST_CASE("dense minimum-error evaluation matches the closed form") {
  Priors even = Priors::from_rational(progdisc::Rational(1, 2));

  double p11 = progdisc::helstrom_numeric(ProblemSize(1, 1), even);
  CHECK(p11 == doctest::Approx(0.5 * (1.0 - 0.5 * std::sqrt(1.0 / 3.0)))
                   .epsilon(1e-12));

  double p21 = progdisc::helstrom_numeric(ProblemSize(2, 1), even);
  CHECK(p21 ==
        doctest::Approx(0.5 * (1.0 - (std::sqrt(2.0) + std::sqrt(5.0)) / 9.0))
            .epsilon(1e-12));

  CHECK(progdisc::helstrom_numeric(ProblemSize(2, 2), Priors::from_double(1.0)) <
        1e-12);

  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 3; ++m) {
      ProblemSize s(n, m);
      for (int tick = 0; tick <= 10; ++tick) {
        Priors priors = Priors::from_double(tick / 10.0);
        CHECK(std::abs(progdisc::helstrom_numeric(s, priors) -
                       progdisc::min_error(s, priors)) < 1e-9);
      }
    }
  }
}
