#include "nrules/rate_function.hpp"

#include <algorithm>
#include <cmath>

namespace nrules {

double RateFunction::operator()(double t) const {
  if (t < start || t >= cutoff) return 0.0;
  switch (form) {
    case RateForm::exponential_decay:
      return param * std::exp(-param * (t - start));
    case RateForm::constant:
      return param;
    case RateForm::ramp:
      return param * (t - start);
  }
  return 0.0;
}

double RateFunction::integral(double a, double b) const {
  const double lo = std::max(a, start);
  const double hi = std::min(b, cutoff);
  if (hi <= lo) return 0.0;
  switch (form) {
    case RateForm::exponential_decay:
      return std::exp(-param * (lo - start)) - std::exp(-param * (hi - start));
    case RateForm::constant:
      return param * (hi - lo);
    case RateForm::ramp:
      return 0.5 * param * ((hi - start) * (hi - start) - (lo - start) * (lo - start));
  }
  return 0.0;
}

RateFunction exponential_decay_rate(double lambda, double start, double cutoff) {
  return RateFunction{RateForm::exponential_decay, lambda, start, cutoff};
}

RateFunction constant_rate(double level, double start, double cutoff) {
  return RateFunction{RateForm::constant, level, start, cutoff};
}

double decay_current(double t, const RateFunction& rf) { return rf(t); }

std::string to_string(RateForm form) {
  switch (form) {
    case RateForm::exponential_decay: return "exponential-decay";
    case RateForm::constant: return "constant";
    case RateForm::ramp: return "ramp";
  }
  return "?";
}

}  // namespace nrules
