#include "progdisc/discrim.hpp"

#include <cmath>
#include <string>

namespace progdisc {

namespace {

Rational abs_rational(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// Pair validity window endpoints for weights (alpha, beta):
// lower = beta kappa^2 / (alpha + beta kappa^2), upper = beta / (beta + alpha kappa^2).
std::pair<Rational, Rational> pair_window(const Rational& kap_sq,
                                          const Rational& alpha,
                                          const Rational& beta) {
  return {Rational(beta * kap_sq / (alpha + beta * kap_sq)),
          Rational(beta / (beta + alpha * kap_sq))};
}

Branch pick_branch_exact(const Rational& eta, const Rational& lo, const Rational& hi) {
  if (eta < lo) return Branch::left;
  if (eta > hi) return Branch::right;
  return Branch::middle;
}

Branch pick_branch_float(double eta, double lo, double hi) {
  if (eta < lo) return Branch::left;
  if (eta > hi) return Branch::right;
  return Branch::middle;
}

// sqrt of a nonnegative rational when it is exactly rational.
std::optional<Rational> exact_sqrt(const Rational& q) {
  auto root = SqrtRational::sqrt_of(q);
  if (!root.is_perfect_square()) return std::nullopt;
  return root.as_rational();
}

}  // namespace

Priors Priors::from_rational(const Rational& eta1) {
  if (eta1 < 0 || eta1 > 1) {
    throw std::invalid_argument("prior must lie in [0, 1], got " +
                                to_fraction_string(eta1));
  }
  Priors p;
  p.exact_ = true;
  p.eta_rational_ = eta1;
  p.eta_float_ = to_double(eta1);
  return p;
}

Priors Priors::from_double(double eta1) {
  if (!(eta1 >= 0.0 && eta1 <= 1.0)) {
    throw std::invalid_argument("prior must lie in [0, 1], got " +
                                std::to_string(eta1));
  }
  Priors p;
  p.exact_ = false;
  p.eta_float_ = eta1;
  return p;
}

const Rational& Priors::eta_rational() const {
  if (!exact_) throw std::logic_error("prior carries no exact value");
  return eta_rational_;
}

Rational Priors::bias_rational() const { return 1 - 2 * eta_rational(); }

PairOutcome q_pair_opt(const Rational& kappa, const Priors& priors,
                       const Rational& alpha, const Rational& beta) {
  if (alpha <= 0 || beta <= 0) {
    throw std::invalid_argument("pair weights must be positive");
  }
  Rational kap_sq = kappa * kappa;
  if (kap_sq > 1) {
    throw std::invalid_argument("overlap magnitude exceeds 1");
  }
  auto [lo, hi] = pair_window(kap_sq, alpha, beta);

  Branch branch;
  if (priors.exact()) {
    branch = pick_branch_exact(priors.eta_rational(), lo, hi);
  } else {
    branch = pick_branch_float(priors.eta(), to_double(lo), to_double(hi));
  }

  double eta = priors.eta();
  double a = to_double(alpha);
  double b = to_double(beta);
  double ks = to_double(kap_sq);
  double value = 0;
  switch (branch) {
    case Branch::left:
      value = eta * a + (1 - eta) * b * ks;
      break;
    case Branch::middle:
      value = 2 * std::sqrt(eta * (1 - eta) * a * b * ks);
      break;
    case Branch::right:
      value = eta * a * ks + (1 - eta) * b;
      break;
  }
  return {value, branch};
}

std::pair<Rational, Rational> validity_interval(const ProblemSize& size) {
  BigInt nn = BigInt(size.n) * size.n;
  BigInt ss = BigInt(size.n + size.m) * (size.n + size.m);
  return {Rational(nn, nn + ss), Rational(ss, nn + ss)};
}

Rational k_series(const ProblemSize& size) {
  Rational sum = 0;
  for (int k = 1; k <= size.n; ++k) {
    sum += abs_rational(kappa_closed(k, size));
  }
  return sum;
}

UnambiguousResult unambiguous(const ProblemSize& size, const Priors& priors) {
  const int D = size.support_dim();
  const Rational weight(1, D);

  UnambiguousResult out;
  out.exact_form_valid = priors.exact();

  // Accumulate the failure probability as base + radical_coeff * sqrt(eta(1-eta)).
  Rational base = 0;
  Rational radical_coeff = 0;
  double base_f = 0;
  double radical_f = 0;
  const double eta_f = priors.eta();

  for (int k = 0; k <= size.n; ++k) {
    Rational kappa = kappa_closed(k, size);
    Rational kap_sq = kappa * kappa;
    int mult = multiplicity(k, size);
    auto [lo, hi] = pair_window(kap_sq, weight, weight);

    Branch branch = priors.exact()
                        ? pick_branch_exact(priors.eta_rational(), lo, hi)
                        : pick_branch_float(eta_f, to_double(lo), to_double(hi));

    double q_value = 0;
    switch (branch) {
      case Branch::left:
        if (priors.exact()) {
          const Rational& eta = priors.eta_rational();
          base += mult * weight * (eta + (1 - eta) * kap_sq);
        }
        q_value = (eta_f + (1 - eta_f) * to_double(kap_sq)) / D;
        base_f += mult * q_value;
        break;
      case Branch::right:
        if (priors.exact()) {
          const Rational& eta = priors.eta_rational();
          base += mult * weight * (eta * kap_sq + (1 - eta));
        }
        q_value = (eta_f * to_double(kap_sq) + (1 - eta_f)) / D;
        base_f += mult * q_value;
        break;
      case Branch::middle: {
        Rational coeff = 2 * mult * weight * abs_rational(kappa);
        if (priors.exact()) radical_coeff += coeff;
        double per_unit = 2 * std::abs(to_double(kappa)) / D;
        radical_f += mult * per_unit;
        q_value = per_unit * std::sqrt(eta_f * (1 - eta_f));
        break;
      }
    }
    out.pairs.push_back({k, kappa, mult, branch, q_value});
  }

  double radical_value = std::sqrt(eta_f * (1 - eta_f));
  out.q_fail = base_f + radical_f * radical_value;

  if (priors.exact()) {
    out.base = base;
    out.radical_coeff = radical_coeff;
    const Rational& eta = priors.eta_rational();
    Rational radicand = eta * (1 - eta);
    if (radical_coeff == 0) {
      out.q_exact = base;
    } else if (auto root = exact_sqrt(radicand)) {
      out.q_exact = Rational(base + radical_coeff * *root);
    }
    out.q_fail = out.q_exact
                     ? to_double(*out.q_exact)
                     : to_double(base) + to_double(radical_coeff) * radical_value;
  }
  out.p_success = 1.0 - out.q_fail;

  auto [lo, hi] = validity_interval(size);
  if (priors.exact()) {
    const Rational& eta = priors.eta_rational();
    out.eta_in_validity = eta >= lo && eta <= hi;
  } else {
    out.eta_in_validity = eta_f >= to_double(lo) && eta_f <= to_double(hi);
  }
  return out;
}

double min_error(const ProblemSize& size, const Priors& priors) {
  const int D = size.support_dim();
  double acc = 0;
  if (priors.exact()) {
    Rational c = priors.bias_rational();
    Rational one_minus_c_sq = 1 - c * c;
    double abs_c = std::abs(to_double(c));
    for (int k = 0; k <= size.n; ++k) {
      Rational kappa = kappa_closed(k, size);
      double s = std::sqrt(to_double(Rational(1 - one_minus_c_sq * kappa * kappa)));
      if (s < abs_c * (1 - 1e-12)) {
        throw std::logic_error("pair eigenvalue split fell below the bias");
      }
      acc += multiplicity(k, size) * s;
    }
  } else {
    double c = priors.bias();
    double one_minus_c_sq = 1 - c * c;
    double abs_c = std::abs(c);
    for (int k = 0; k <= size.n; ++k) {
      double kappa = to_double(kappa_closed(k, size));
      double s = std::sqrt(1 - one_minus_c_sq * kappa * kappa);
      if (s < abs_c * (1 - 1e-12)) {
        throw std::logic_error("pair eigenvalue split fell below the bias");
      }
      acc += multiplicity(k, size) * s;
    }
  }
  return 0.5 * (1.0 - acc / D);
}

DiscriminationReport discrimination_report(const ProblemSize& size,
                                           const Priors& priors) {
  return {size, priors, unambiguous(size, priors), min_error(size, priors),
          validity_interval(size)};
}

}  // namespace progdisc
