#ifndef PHILAB_TRANSFORMS_HPP_
#define PHILAB_TRANSFORMS_HPP_

#include <array>
#include <complex>
#include <functional>

#include "philab/random.hpp"

namespace philab {

using Complex = std::complex<double>;

/// Parametric Laplace transform phi(v) = E[exp(-v Z)] of a positive
/// mixing variable Z.  Two whitelisted families:
///   Gamma(shape a, rate b):   phi(v) = (1 + v/b)^(-a)
///   PositiveStable(index a):  phi(v) = exp(-v^a), 0 < a < 1
struct LtSpec {
  enum class Family { Gamma, PositiveStable };

  Family family = Family::Gamma;
  double shape = 1.0;  // Gamma
  double rate = 1.0;   // Gamma
  double index = 0.5;  // PositiveStable

  static LtSpec gamma(double shape, double rate);
  static LtSpec positive_stable(double index);
};

/// phi(v) for v >= 0.  Strictly decreasing, phi(0) = 1.
double lt_eval(const LtSpec& phi, double v);

/// Analytic continuation of phi to {Re v >= 0} with principal branches.
Complex lt_eval(const LtSpec& phi, Complex v);

/// v >= 0 with phi(v) = z, for z in (0,1].  Closed form for both families.
double lt_inverse(const LtSpec& phi, double z);

/// Monotone-bisection fallback inverse for a strictly decreasing f with
/// f(0) >= target: bracket [0, 2^m] doubled until covered, absolute
/// tolerance on the argument.
double invert_decreasing(const std::function<double(double)>& f, double target,
                         double tol = 1e-12);

/// E[Z]; +infinity for the positive stable family.
double lt_mean(const LtSpec& phi);

/// One draw of Z with Laplace transform phi.  Gamma via the standard gamma
/// generator; PositiveStable via Kanter's representation of the one-sided
/// stable law.
double sample_subordinator(const LtSpec& phi, RandomStream& rng);

/// ID characteristic exponent psi with omega = exp(-psi) an ID CF.
///   Drift(b):            psi(t) = -i b t
///   SymmetricStable(a):  psi(t) = |t|^a, 0 < a <= 2
///   ExpExponent(l):      psi(t) = Log(1 - i t / l), principal branch
struct PsiSpec {
  enum class Family { Drift, SymmetricStable, ExpExponent };

  Family family = Family::SymmetricStable;
  double b = 1.0;      // Drift
  double index = 1.0;  // SymmetricStable
  double rate = 1.0;   // ExpExponent

  static PsiSpec drift(double b);
  static PsiSpec symmetric_stable(double index);
  static PsiSpec exp_exponent(double rate);
};

Complex psi_eval(const PsiSpec& psi, double t);

/// The phi-ID characteristic function f(t) = phi(psi(t)).
Complex phi_id_cf(const LtSpec& phi, const PsiSpec& psi, double t);

/// Bivariate exponent-measure functional T(y) = mu([lambda, y]^c) with
/// bottom lambda = (0,0) for both families:
///   IndepFrechet(a1,a2):  T(y) = y1^(-a1) + y2^(-a2)
///   Logistic(a, r):       T(y) = (y1^(-a/r) + y2^(-a/r))^r, 0 < r <= 1
struct ExponentMeasureSpec {
  enum class Family { IndepFrechet, Logistic };

  Family family = Family::IndepFrechet;
  double alpha1 = 1.0;  // IndepFrechet
  double alpha2 = 1.0;  // IndepFrechet
  double alpha = 1.0;   // Logistic
  double r = 1.0;       // Logistic

  std::array<double, 2> bottom() const { return {0.0, 0.0}; }

  static ExponentMeasureSpec indep_frechet(double alpha1, double alpha2);
  static ExponentMeasureSpec logistic(double alpha, double r);
};

/// T(y) for y strictly above the bottom.  A coordinate equal to +infinity
/// contributes its analytic limit (zero).
double exponent_measure_eval(const ExponentMeasureSpec& mu, double y1,
                             double y2);

/// The MID distribution function G(y) = exp(-T(y)).
double mid_df_eval(const ExponentMeasureSpec& mu, double y1, double y2);

/// The phi-MID distribution function F(y) = phi(T(y)).
double phi_mid_df_eval(const LtSpec& phi, const ExponentMeasureSpec& mu,
                       double y1, double y2);

/// Recovers the underlying MID value G = exp(-phi^{-1}(F)) from a phi-MID
/// value F in (0,1].
double recover_mid_from_phi_mid(const LtSpec& phi, double f_value);

}  // namespace philab

#endif  // PHILAB_TRANSFORMS_HPP_
