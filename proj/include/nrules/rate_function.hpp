#pragma once

#include <string>

namespace nrules {

enum class RateForm { exponential_decay, constant, ramp };

// Time-dependent probability current J(t) carried by an edge. The value is an
// absolute current (mass per second), identically zero before `start` and at
// or after `cutoff`.
//
//   exponential_decay: param * exp(-param * (t - start))
//   constant:          param
//   ramp:              param * (t - start)
struct RateFunction {
  RateForm form = RateForm::exponential_decay;
  double param = 0.0;   // lambda (1/s), level, or slope depending on form
  double start = 0.0;
  double cutoff = 0.0;

  double operator()(double t) const;

  // Exact integral over [a, b] clipped to the active window. Used by the
  // integrator tests as a cross-check against the midpoint rule.
  double integral(double a, double b) const;
};

RateFunction exponential_decay_rate(double lambda, double start, double cutoff);
RateFunction constant_rate(double level, double start, double cutoff);

// Instantaneous current of a decay edge; zero at or after the cutoff.
double decay_current(double t, const RateFunction& rf);

std::string to_string(RateForm form);

}  // namespace nrules
