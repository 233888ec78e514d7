#pragma once

#include "progdisc/jordan.hpp"

#include <optional>

namespace progdisc {

// Prior weight of the first hypothesis (the second gets the complement).
// A value built from a rational keeps it, and downstream computations then
// take the exact path. Construction validates 0 <= eta <= 1.
class Priors {
 public:
  static Priors from_rational(const Rational& eta1);
  static Priors from_double(double eta1);

  bool exact() const { return exact_; }
  double eta() const { return eta_float_; }

  // Throws std::logic_error when the prior was not given as a rational.
  const Rational& eta_rational() const;

  // Bias eta2 - eta1 = 1 - 2 eta1.
  double bias() const { return 1.0 - 2.0 * eta_float_; }
  Rational bias_rational() const;

 private:
  Priors() = default;
  bool exact_ = false;
  Rational eta_rational_ = 0;
  double eta_float_ = 0;
};

enum class Branch { left, middle, right };

// Optimal failure contribution of a single overlap pair with weights alpha
// and beta on the two hypotheses. The optimum is piecewise: below the
// pair's validity window the left expression applies, above it the right
// one, inside it the geometric-mean expression.
struct PairOutcome {
  double value;
  Branch branch;
};

PairOutcome q_pair_opt(const Rational& kappa, const Priors& priors,
                       const Rational& alpha, const Rational& beta);

// Priors window inside which every pair with |kappa| < 1 sits in its middle
// branch: [n^2 / ((n+m)^2 + n^2), (n+m)^2 / ((n+m)^2 + n^2)].
std::pair<Rational, Rational> validity_interval(const ProblemSize& size);

// Sum of the overlap magnitudes, sum_{k>=1} |kappa_k|. The closed-form
// bounds on the success probability are built from it.
Rational k_series(const ProblemSize& size);

// Per-pair breakdown row of the unambiguous optimum.
struct PairTerm {
  int k;
  Rational kappa;
  int mult;
  Branch branch;
  double q_value;
};

// Optimal unambiguous-discrimination failure probability for the mean input
// states at the given priors, assembled pair by pair. With a rational prior
// the failure probability has the exact form
//   base + radical_coeff * sqrt(eta (1 - eta)),
// and q_exact is set whenever that value is itself rational (the radical
// part vanishes or eta (1 - eta) is a perfect square).
struct UnambiguousResult {
  double q_fail;
  double p_success;
  bool eta_in_validity;
  bool exact_form_valid;    // base/radical_coeff hold exact values
  Rational base;
  Rational radical_coeff;
  std::optional<Rational> q_exact;
  std::vector<PairTerm> pairs;
};

UnambiguousResult unambiguous(const ProblemSize& size, const Priors& priors);

// Minimum-error (Helstrom) probability for the same pair of mean states.
double min_error(const ProblemSize& size, const Priors& priors);

// Everything the command-line front end reports for one (size, priors).
struct DiscriminationReport {
  ProblemSize size;
  Priors priors;
  UnambiguousResult unamb;
  double p_error;
  std::pair<Rational, Rational> validity;
};

DiscriminationReport discrimination_report(const ProblemSize& size,
                                           const Priors& priors);

}  // namespace progdisc
