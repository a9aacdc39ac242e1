#include "philab/transforms.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "philab/errors.hpp"

namespace philab {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();

void check_gamma_params(double shape, double rate) {
  if (!(shape > 0.0) || !(rate > 0.0))
    throw std::domain_error("gamma LT requires shape > 0 and rate > 0");
}

void check_stable_index(double index) {
  if (!(index > 0.0) || !(index < 1.0))
    throw std::domain_error("positive stable LT requires index in (0,1)");
}

// Kanter's representation of the one-sided stable law with LT exp(-s^a):
// Z = (A(pi U) / E)^((1-a)/a), U uniform, E exponential, with
// A(u) = sin((1-a)u) sin(a u)^(a/(1-a)) / sin(u)^(1/(1-a)).
double kanter_draw(double a, RandomStream& rng) {
  const double u = kPi * uniform01(rng);
  const double e = exp_draw(rng);
  const double A = std::sin((1.0 - a) * u) *
                   std::pow(std::sin(a * u), a / (1.0 - a)) /
                   std::pow(std::sin(u), 1.0 / (1.0 - a));
  return std::pow(A / e, (1.0 - a) / a);
}

}  // namespace

LtSpec LtSpec::gamma(double shape, double rate) {
  check_gamma_params(shape, rate);
  LtSpec s;
  s.family = Family::Gamma;
  s.shape = shape;
  s.rate = rate;
  return s;
}

LtSpec LtSpec::positive_stable(double index) {
  check_stable_index(index);
  LtSpec s;
  s.family = Family::PositiveStable;
  s.index = index;
  return s;
}

double lt_eval(const LtSpec& phi, double v) {
  if (v < 0.0) throw std::domain_error("lt_eval: v must be >= 0");
  if (v == kInf) return 0.0;
  switch (phi.family) {
    case LtSpec::Family::Gamma:
      return std::pow(1.0 + v / phi.rate, -phi.shape);
    case LtSpec::Family::PositiveStable:
      return std::exp(-std::pow(v, phi.index));
  }
  throw std::logic_error("unreachable LT family");
}

Complex lt_eval(const LtSpec& phi, Complex v) {
  switch (phi.family) {
    case LtSpec::Family::Gamma:
      return std::pow(1.0 + v / phi.rate, Complex(-phi.shape));
    case LtSpec::Family::PositiveStable:
      if (v == Complex(0.0, 0.0)) return Complex(1.0, 0.0);
      return std::exp(-std::pow(v, Complex(phi.index)));
  }
  throw std::logic_error("unreachable LT family");
}

double lt_inverse(const LtSpec& phi, double z) {
  if (!(z > 0.0) || z > 1.0)
    throw std::domain_error("lt_inverse: z must be in (0,1]");
  switch (phi.family) {
    case LtSpec::Family::Gamma:
      return phi.rate * (std::pow(z, -1.0 / phi.shape) - 1.0);
    case LtSpec::Family::PositiveStable:
      return std::pow(-std::log(z), 1.0 / phi.index);
  }
  throw std::logic_error("unreachable LT family");
}

double invert_decreasing(const std::function<double(double)>& f, double target,
                         double tol) {
  if (f(0.0) <= target) return 0.0;
  double hi = 1.0;
  while (f(hi) > target) {
    hi *= 2.0;
    if (hi > 1e300) throw numeric_error("invert_decreasing: bracket overflow");
  }
  double lo = 0.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) > target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double lt_mean(const LtSpec& phi) {
  switch (phi.family) {
    case LtSpec::Family::Gamma:
      return phi.shape / phi.rate;
    case LtSpec::Family::PositiveStable:
      return kInf;
  }
  throw std::logic_error("unreachable LT family");
}

double sample_subordinator(const LtSpec& phi, RandomStream& rng) {
  switch (phi.family) {
    case LtSpec::Family::Gamma: {
      std::gamma_distribution<double> dist(phi.shape, 1.0 / phi.rate);
      return dist(rng);
    }
    case LtSpec::Family::PositiveStable:
      return kanter_draw(phi.index, rng);
  }
  throw std::logic_error("unreachable LT family");
}

PsiSpec PsiSpec::drift(double b) {
  PsiSpec s;
  s.family = Family::Drift;
  s.b = b;
  return s;
}

PsiSpec PsiSpec::symmetric_stable(double index) {
  if (!(index > 0.0) || index > 2.0)
    throw std::domain_error("symmetric stable exponent requires index in (0,2]");
  PsiSpec s;
  s.family = Family::SymmetricStable;
  s.index = index;
  return s;
}

PsiSpec PsiSpec::exp_exponent(double rate) {
  if (!(rate > 0.0))
    throw std::domain_error("exponential exponent requires rate > 0");
  PsiSpec s;
  s.family = Family::ExpExponent;
  s.rate = rate;
  return s;
}

Complex psi_eval(const PsiSpec& psi, double t) {
  switch (psi.family) {
    case PsiSpec::Family::Drift:
      return Complex(0.0, -psi.b * t);
    case PsiSpec::Family::SymmetricStable:
      return Complex(std::pow(std::abs(t), psi.index), 0.0);
    case PsiSpec::Family::ExpExponent:
      return std::log(Complex(1.0, -t / psi.rate));
  }
  throw std::logic_error("unreachable psi family");
}

Complex phi_id_cf(const LtSpec& phi, const PsiSpec& psi, double t) {
  return lt_eval(phi, psi_eval(psi, t));
}

ExponentMeasureSpec ExponentMeasureSpec::indep_frechet(double alpha1,
                                                       double alpha2) {
  if (!(alpha1 > 0.0) || !(alpha2 > 0.0))
    throw std::domain_error("Frechet exponent measure requires alpha > 0");
  ExponentMeasureSpec s;
  s.family = Family::IndepFrechet;
  s.alpha1 = alpha1;
  s.alpha2 = alpha2;
  return s;
}

ExponentMeasureSpec ExponentMeasureSpec::logistic(double alpha, double r) {
  if (!(alpha > 0.0) || !(r > 0.0) || r > 1.0)
    throw std::domain_error(
        "logistic exponent measure requires alpha > 0 and r in (0,1]");
  ExponentMeasureSpec s;
  s.family = Family::Logistic;
  s.alpha = alpha;
  s.r = r;
  return s;
}

double exponent_measure_eval(const ExponentMeasureSpec& mu, double y1,
                             double y2) {
  const auto bottom = mu.bottom();
  if (!(y1 > bottom[0]) || !(y2 > bottom[1]))
    throw std::domain_error(
        "exponent_measure_eval: point must lie strictly above the bottom");
  switch (mu.family) {
    case ExponentMeasureSpec::Family::IndepFrechet: {
      const double t1 = (y1 == kInf) ? 0.0 : std::pow(y1, -mu.alpha1);
      const double t2 = (y2 == kInf) ? 0.0 : std::pow(y2, -mu.alpha2);
      return t1 + t2;
    }
    case ExponentMeasureSpec::Family::Logistic: {
      const double p = mu.alpha / mu.r;
      const double t1 = (y1 == kInf) ? 0.0 : std::pow(y1, -p);
      const double t2 = (y2 == kInf) ? 0.0 : std::pow(y2, -p);
      if (t1 + t2 == 0.0) return 0.0;
      return std::pow(t1 + t2, mu.r);
    }
  }
  throw std::logic_error("unreachable exponent measure family");
}

double mid_df_eval(const ExponentMeasureSpec& mu, double y1, double y2) {
  return std::exp(-exponent_measure_eval(mu, y1, y2));
}

double phi_mid_df_eval(const LtSpec& phi, const ExponentMeasureSpec& mu,
                       double y1, double y2) {
  return lt_eval(phi, exponent_measure_eval(mu, y1, y2));
}

double recover_mid_from_phi_mid(const LtSpec& phi, double f_value) {
  if (!(f_value > 0.0) || f_value > 1.0)
    throw std::domain_error("recover_mid_from_phi_mid: F must be in (0,1]");
  return std::exp(-lt_inverse(phi, f_value));
}

}  // namespace philab
