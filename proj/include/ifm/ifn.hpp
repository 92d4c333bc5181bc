#pragma once

// Scalar algebra of intuitionistic fuzzy numbers <mu, nu>.

namespace ifm {

/// Construction tolerance on mu + nu <= 1.
inline constexpr double kSumTolerance = 1e-12;

/// A <mu, nu> pair with each component in [0,1] and no sum constraint.
/// Differences and p > 1 means can leave the IFN domain, so matrices store
/// these and validate only at ingest.
struct ComponentPair {
  double mu = 0.0;
  double nu = 0.0;

  friend bool operator==(const ComponentPair&, const ComponentPair&) = default;
};

inline constexpr ComponentPair kTop{1.0, 0.0};
inline constexpr ComponentPair kBottom{0.0, 1.0};

/// A validated intuitionistic fuzzy number: mu, nu in [0,1], mu + nu <= 1.
class Ifn {
 public:
  double mu() const noexcept { return value_.mu; }
  double nu() const noexcept { return value_.nu; }
  ComponentPair pair() const noexcept { return value_; }
  operator ComponentPair() const noexcept { return value_; }

  friend bool operator==(const Ifn&, const Ifn&) = default;

 private:
  friend Ifn make_ifn(double mu, double nu);
  explicit Ifn(ComponentPair value) : value_(value) {}
  ComponentPair value_;
};

/// Throws Error{OutOfRange} or Error{SumViolation}.
Ifn make_ifn(double mu, double nu);

/// True when the pair is a member of the IFN domain (within kSumTolerance).
bool is_valid_ifn(ComponentPair a) noexcept;

/// Dominance partial order: a.mu <= b.mu and a.nu >= b.nu.
bool dominance_leq(ComponentPair a, ComponentPair b) noexcept;

/// Weighted power mean (lambda*x^p + (1-lambda)*y^p)^(1/p).
///
/// A term with weight exactly zero is dropped. For p < 0 a zero argument with
/// positive weight makes the mean 0, the limit of the negative-exponent mean.
/// Throws Error{ZeroP} when p == 0.
double gen_mean_scalar(double x, double y, double lambda, double p);

/// gen_mean_scalar applied to mu and nu independently.
ComponentPair gen_mean_pair(ComponentPair a, ComponentPair b, double lambda, double p);

/// Convex combination of max-min and arithmetic mean:
/// mu = lambda*min + (1-lambda)*avg, nu = lambda*max + (1-lambda)*avg.
ComponentPair star_scalar(ComponentPair a, ComponentPair b, double lambda) noexcept;

/// <lambda*mu, (1-lambda)*nu>.
Ifn scalar_mult(double lambda, Ifn a);

/// Difference of a from b, <b.mu - a.mu, a.nu - b.nu>. Requires a <= b.
ComponentPair ifn_diff(Ifn b, Ifn a);

}  // namespace ifm
