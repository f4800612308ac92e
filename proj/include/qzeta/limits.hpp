#ifndef QZETA_LIMITS_HPP
#define QZETA_LIMITS_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

namespace qzeta {

using HPFloat = boost::multiprecision::mpfr_float;

/// Lowest working precision of the limits layer, in mantissa bits.
inline constexpr unsigned kMinPrecisionBits = 128;
inline constexpr unsigned kDefaultPrecisionBits = 256;
/// Relative error a trace must reach at the end of its schedule.
inline constexpr double kDefaultLimitTolerance = 5e-3;

/// Precision actually used for a request: never below kMinPrecisionBits.
unsigned working_precision(unsigned requested_bits);

// Sets the MPFR default precision for every value created in its lifetime
// and restores the previous default on exit. Not thread-safe: the default is
// process-wide.
class PrecisionScope {
public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

  unsigned bits() const noexcept { return bits_; }

private:
  unsigned bits_;
  unsigned saved_digits10_;
};

// A real number together with the precision it was computed at.
class HPReal {
public:
  HPReal() = default;
  HPReal(HPFloat value, unsigned precision_bits);

  const HPFloat& value() const noexcept { return value_; }
  unsigned precision_bits() const noexcept { return precision_bits_; }
  double to_double() const { return value_.convert_to<double>(); }

  // Scientific notation with as many significant digits as the precision
  // supports (or `digits` when given).
  std::string str(int digits = 0) const;

private:
  HPFloat value_;
  unsigned precision_bits_ = 0;
};

struct LimitEntry {
  HPReal q;
  HPReal value;
  HPReal abs_error;
  HPReal rel_error;
};

struct TrackEntry {
  HPReal q;
  HPReal value;
};

struct LimitTrace {
  std::string target_name;
  HPReal target;
  std::vector<HPReal> schedule;
  std::vector<LimitEntry> entries;
  // (1-q)^6 phi^12(q) alongside the S6 trace; empty for the other traces.
  std::vector<TrackEntry> vanishing_track;
  unsigned precision_bits = 0;
  double tolerance = kDefaultLimitTolerance;
  // Relative errors strictly decrease over the last three entries and the
  // final one is below tolerance.
  bool converged = false;
};

/// q_k = 1 - 2^-k for k_min <= k <= k_max.
std::vector<HPReal> geometric_schedule(int k_min, int k_max, unsigned precision_bits);

// Limit values, from MPFR's pi at the working precision.
HPReal half_pi(unsigned precision_bits);                 // pi/2
HPReal pi6_over_64(unsigned precision_bits);             // pi^6/64
HPReal pi6_over_960(unsigned precision_bits);            // pi^6/960
HPReal four_pi6(unsigned precision_bits);                // 3840 pi^6/960

// Pointwise evaluations for 0 <= q < 1. Infinite products stop once a factor
// is within 2^-(bits+8) of 1 and sums once a term drops below 2^-(bits+8).
// Throws std::domain_error outside [0, 1).
HPReal psi2_scaled(const HPReal& q, unsigned precision_bits);          // (1-q) psi^2
HPReal psi12_scaled(const HPReal& q, unsigned precision_bits);         // (1-q)^6 psi^12
HPReal phi12_scaled(const HPReal& q, unsigned precision_bits);         // (1-q)^6 phi^12
HPReal s6_minus_phi12_scaled(const HPReal& q, unsigned precision_bits); // (1-q)^6 (S6 - phi^12)
HPReal shifted_psi12_scaled(const HPReal& q, unsigned precision_bits); // 256 q (1-q)^6 psi^12

// Traces require every q in (0, 1) and a strictly increasing schedule.
LimitTrace eval_psi2_limit(std::span<const HPReal> schedule, unsigned precision_bits,
                           double tolerance = kDefaultLimitTolerance);
LimitTrace eval_psi12_limit(std::span<const HPReal> schedule, unsigned precision_bits,
                            double tolerance = kDefaultLimitTolerance);
LimitTrace eval_s6_minus_phi12_limit(std::span<const HPReal> schedule, unsigned precision_bits,
                                     double tolerance = kDefaultLimitTolerance);

/// sum_{k=0}^{K} (2k+1)^-6
HPReal odd_zeta6_partial(std::size_t K, unsigned precision_bits);

} // namespace qzeta

#endif
