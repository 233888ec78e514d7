#pragma once

#include "progdisc/discrim.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace progdisc {

// The oracle works in the compact symmetric product coordinates: a state of
// the three registers lives on (n+1)(m+1)(n+1) amplitudes indexed by
// (i_A, i_B, i_C) with i_A, i_C in [0, n] and i_B in [0, m], flattened as
// (i_A*(m+1) + i_B)*(n+1) + i_C. Everything here recomputes library results
// by dense linear algebra and never calls the closed-form paths it checks.

// Side length of the product grid, (n+1)(m+1)(n+1).
int dense_side(const ProblemSize& size);

// Flat coordinate of |e_a>_A |e_b>_B |e_c>_C on the product grid.
int dense_coord(int a, int b, int c, const ProblemSize& size);

// Real amplitude vector of one basis element on the product grid: each
// expansion term contributes the positive square root of its squared
// amplitude at a single coordinate. Unit norm.
Eigen::VectorXd embed_basis_vector(const BasisVector& v);

// Equal-weight average of the projectors onto all support basis vectors of
// one side: (1/D) times the projector onto that support, trace 1.
Eigen::MatrixXd rho_exact(Side side, const ProblemSize& size);

// Sample average of projectors onto product states drawn from two
// independent Bloch spheres (cos theta uniform on [-1,1], phi uniform on
// [0, 2pi)). Side H1 prepares the data register like A, side H2 like C.
// Samples are consumed in fixed batches, each batch reseeded from
// (seed, batch index), so a given seed always yields the same matrix.
// Throws std::invalid_argument when samples < 1.
Eigen::MatrixXcd rho_montecarlo(Side side, const ProblemSize& size,
                                long long samples, std::uint64_t seed);

// Singular values, descending, of the full D x D cross-Gram between the two
// embedded bases. Matches the closed spectrum magnitudes with their
// multiplicities.
std::vector<double> global_jordan_svd(const ProblemSize& size);

// Minimum-error probability from a dense eigendecomposition of
// eta2 * rho2 - eta1 * rho1: one half times (1 - sum of |eigenvalue|).
double helstrom_numeric(const ProblemSize& size, const Priors& priors);

}  // namespace progdisc
