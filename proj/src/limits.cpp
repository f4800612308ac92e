#include "qzeta/limits.hpp"

#include <algorithm>
#include <ios>
#include <stdexcept>
#include <string>
#include <utility>

#include "qzeta/genfuncs.hpp"

namespace qzeta {

namespace {

unsigned digits10_for(unsigned bits) { return (bits * 30103u + 99999u) / 100000u; }

// Copy of x rounded to the scope's precision.
HPFloat local(const HPReal& x, const PrecisionScope& scope) {
  HPFloat r = x.value();
  r.precision(digits10_for(scope.bits()));
  return r;
}

HPFloat truncation_floor(const PrecisionScope& scope) {
  HPFloat one = 1;
  return ldexp(one, -static_cast<int>(scope.bits() + 8));
}

HPFloat pi_value() {
  HPFloat pi;
  mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
  return pi;
}

void require_unit_interval(const HPFloat& q, bool allow_zero) {
  if (q >= 1 || q < 0 || (!allow_zero && q == 0)) {
    throw std::domain_error(std::string("q must lie in ") + (allow_zero ? "[0, 1)" : "(0, 1)") +
                            ", got " + q.str(20, std::ios_base::scientific));
  }
}

// prod_{n>=1} (1 - q^(2n)) / (1 - q^(2n-1))
HPFloat psi_value(const HPFloat& q, const HPFloat& eps) {
  HPFloat num = 1;
  HPFloat den = 1;
  HPFloat odd = q;
  const HPFloat q2 = q * q;
  while (odd >= eps) {
    den *= 1 - odd;
    num *= 1 - odd * q;
    odd *= q2;
  }
  return num / den;
}

// prod_{n>=1} (1 - q^n)
HPFloat phi_value(const HPFloat& q, const HPFloat& eps) {
  HPFloat prod = 1;
  HPFloat qn = q;
  while (qn >= eps) {
    prod *= 1 - qn;
    qn *= q;
  }
  return prod;
}

// sum_k q^k (1+x) P4(x) / (1-x)^6 with x = q^(2k+1)
HPFloat s6_value(const HPFloat& q, const HPFloat& eps) {
  HPFloat sum = 0;
  HPFloat qk = 1;
  HPFloat x = q;
  const HPFloat q2 = q * q;
  HPFloat poly;
  HPFloat t;
  for (;;) {
    poly = kOnePlusXTimesP4.back();
    for (std::size_t i = kOnePlusXTimesP4.size() - 1; i-- > 0;) {
      poly *= x;
      poly += kOnePlusXTimesP4[i];
    }
    t = 1 - x;
    t *= t;
    t = t * t * t;
    const HPFloat term = qk * poly / t;
    if (term < eps) {
      break;
    }
    sum += term;
    qk *= q;
    x *= q2;
  }
  return sum;
}

HPFloat pow6(const HPFloat& x) {
  const HPFloat x2 = x * x;
  return x2 * x2 * x2;
}

template <typename Eval>
HPReal pointwise(const HPReal& q_in, unsigned requested_bits, Eval eval) {
  PrecisionScope scope(working_precision(requested_bits));
  const HPFloat q = local(q_in, scope);
  require_unit_interval(q, true);
  return {eval(q, truncation_floor(scope)), scope.bits()};
}

template <typename Eval>
LimitTrace run_trace(std::string name, HPReal target, std::span<const HPReal> schedule,
                     unsigned requested_bits, double tolerance, Eval eval) {
  PrecisionScope scope(working_precision(requested_bits));
  const HPFloat target_value = local(target, scope);

  LimitTrace trace;
  trace.target_name = std::move(name);
  trace.target = std::move(target);
  trace.precision_bits = scope.bits();
  trace.tolerance = tolerance;

  HPFloat previous = 0;
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    const HPFloat q = local(schedule[i], scope);
    require_unit_interval(q, false);
    if (i > 0 && q <= previous) {
      throw std::invalid_argument("limit schedule must be strictly increasing");
    }
    previous = q;
    trace.schedule.emplace_back(q, scope.bits());
  }

  for (const HPReal& q : trace.schedule) {
    HPFloat value = eval(q);
    HPFloat abs_error = abs(value - target_value);
    HPFloat rel_error = abs_error / abs(target_value);
    trace.entries.push_back({q, {std::move(value), scope.bits()}, {std::move(abs_error), scope.bits()},
                             {std::move(rel_error), scope.bits()}});
  }

  const auto& e = trace.entries;
  if (!e.empty()) {
    const std::size_t tail = std::min<std::size_t>(3, e.size());
    bool decreasing = true;
    for (std::size_t i = e.size() - tail + 1; i < e.size(); ++i) {
      decreasing = decreasing && e[i].rel_error.value() < e[i - 1].rel_error.value();
    }
    trace.converged = decreasing && e.back().rel_error.value() < tolerance;
  }
  return trace;
}

} // namespace

unsigned working_precision(unsigned requested_bits) {
  return std::max(requested_bits, kMinPrecisionBits);
}

PrecisionScope::PrecisionScope(unsigned bits)
    : bits_(bits), saved_digits10_(HPFloat::default_precision()) {
  HPFloat::default_precision(digits10_for(bits));
}

PrecisionScope::~PrecisionScope() { HPFloat::default_precision(saved_digits10_); }

HPReal::HPReal(HPFloat value, unsigned precision_bits)
    : value_(std::move(value)), precision_bits_(precision_bits) {}

std::string HPReal::str(int digits) const {
  if (digits <= 0) {
    digits = static_cast<int>(precision_bits_ * 30103u / 100000u);
  }
  return value_.str(digits, std::ios_base::scientific);
}

std::vector<HPReal> geometric_schedule(int k_min, int k_max, unsigned precision_bits) {
  if (k_min < 1 || k_max < k_min) {
    throw std::invalid_argument("geometric_schedule: need 1 <= k_min <= k_max");
  }
  PrecisionScope scope(working_precision(precision_bits));
  std::vector<HPReal> out;
  for (int k = k_min; k <= k_max; ++k) {
    HPFloat one = 1;
    out.emplace_back(HPFloat(1 - ldexp(one, -k)), scope.bits());
  }
  return out;
}

HPReal half_pi(unsigned precision_bits) {
  PrecisionScope scope(working_precision(precision_bits));
  return {HPFloat(pi_value() / 2), scope.bits()};
}

HPReal pi6_over_64(unsigned precision_bits) {
  PrecisionScope scope(working_precision(precision_bits));
  return {HPFloat(pow6(pi_value()) / 64), scope.bits()};
}

HPReal pi6_over_960(unsigned precision_bits) {
  PrecisionScope scope(working_precision(precision_bits));
  return {HPFloat(pow6(pi_value()) / 960), scope.bits()};
}

HPReal four_pi6(unsigned precision_bits) {
  PrecisionScope scope(working_precision(precision_bits));
  return {HPFloat(3840 * (pow6(pi_value()) / 960)), scope.bits()};
}

HPReal psi2_scaled(const HPReal& q, unsigned precision_bits) {
  return pointwise(q, precision_bits, [](const HPFloat& x, const HPFloat& eps) {
    const HPFloat psi = psi_value(x, eps);
    return HPFloat((1 - x) * psi * psi);
  });
}

HPReal psi12_scaled(const HPReal& q, unsigned precision_bits) {
  return pointwise(q, precision_bits, [](const HPFloat& x, const HPFloat& eps) {
    const HPFloat psi = psi_value(x, eps);
    return HPFloat(pow6(1 - x) * pow6(psi * psi));
  });
}

HPReal phi12_scaled(const HPReal& q, unsigned precision_bits) {
  return pointwise(q, precision_bits, [](const HPFloat& x, const HPFloat& eps) {
    const HPFloat phi = phi_value(x, eps);
    return HPFloat(pow6(1 - x) * pow6(phi * phi));
  });
}

HPReal s6_minus_phi12_scaled(const HPReal& q, unsigned precision_bits) {
  return pointwise(q, precision_bits, [](const HPFloat& x, const HPFloat& eps) {
    const HPFloat phi = phi_value(x, eps);
    return HPFloat(pow6(1 - x) * (s6_value(x, eps) - pow6(phi * phi)));
  });
}

HPReal shifted_psi12_scaled(const HPReal& q, unsigned precision_bits) {
  return pointwise(q, precision_bits, [](const HPFloat& x, const HPFloat& eps) {
    const HPFloat psi = psi_value(x, eps);
    return HPFloat(256 * x * pow6(1 - x) * pow6(psi * psi));
  });
}

LimitTrace eval_psi2_limit(std::span<const HPReal> schedule, unsigned precision_bits,
                           double tolerance) {
  return run_trace("pi/2", half_pi(precision_bits), schedule, precision_bits, tolerance,
                   [&](const HPReal& q) { return psi2_scaled(q, precision_bits).value(); });
}

LimitTrace eval_psi12_limit(std::span<const HPReal> schedule, unsigned precision_bits,
                            double tolerance) {
  return run_trace("pi^6/64", pi6_over_64(precision_bits), schedule, precision_bits, tolerance,
                   [&](const HPReal& q) { return psi12_scaled(q, precision_bits).value(); });
}

LimitTrace eval_s6_minus_phi12_limit(std::span<const HPReal> schedule, unsigned precision_bits,
                                     double tolerance) {
  LimitTrace trace =
      run_trace("4*pi^6", four_pi6(precision_bits), schedule, precision_bits, tolerance,
                [&](const HPReal& q) { return s6_minus_phi12_scaled(q, precision_bits).value(); });
  for (const HPReal& q : trace.schedule) {
    trace.vanishing_track.push_back({q, phi12_scaled(q, precision_bits)});
  }
  return trace;
}

HPReal odd_zeta6_partial(std::size_t K, unsigned precision_bits) {
  PrecisionScope scope(working_precision(precision_bits));
  HPFloat sum = 0;
  HPFloat odd;
  // Smallest terms first.
  for (std::size_t k = K + 1; k-- > 0;) {
    odd = 2 * k + 1;
    sum += 1 / pow6(odd);
  }
  return {std::move(sum), scope.bits()};
}

} // namespace qzeta
