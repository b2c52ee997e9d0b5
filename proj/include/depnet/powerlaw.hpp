#ifndef DEPNET_POWERLAW_HPP
#define DEPNET_POWERLAW_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "depnet/metrics.hpp"

namespace depnet {

enum class FitMethod {
  frequency,  ///< log count against log degree
  ccdf,       ///< log P(K >= k) against log degree; alpha = |slope| + 1
};

/// Estimate of P(k) ~ k^-alpha from a log-log regression.
struct PowerLawFit {
  double alpha = 0.0;
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::size_t points_used = 0;
  std::uint32_t k_min = 1;
  FitMethod method = FitMethod::frequency;
};

class FitError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Ordinary least squares of y on x. Needs two distinct x values.
LinearFit least_squares(std::span<const double> x, std::span<const double> y);

/// Fits degrees >= max(k_min, 1); degree 0 never enters. Throws FitError
/// with fewer than 3 usable degree values.
PowerLawFit fit_power_law(const DegreeHistogram& hist, std::uint32_t k_min = 1,
                          FitMethod method = FitMethod::frequency);

struct ScatterPoint {
  std::uint32_t degree = 0;
  std::uint64_t count = 0;

  bool operator==(const ScatterPoint&) const = default;
};

/// (degree, count) for every degree >= 1 with a non-zero count, ascending.
std::vector<ScatterPoint> emit_scatter(const DegreeHistogram& hist);

struct CcdfPoint {
  std::uint32_t degree = 0;
  double fraction = 0.0;  // share of tail vertices with degree >= `degree`
};

/// Complementary cumulative distribution over degrees >= max(k_min, 1).
std::vector<CcdfPoint> ccdf(const DegreeHistogram& hist, std::uint32_t k_min = 1);

std::string_view to_string(FitMethod method);
std::optional<FitMethod> parse_fit_method(std::string_view text);

}  // namespace depnet

#endif  // DEPNET_POWERLAW_HPP
