#include "depnet/powerlaw.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace depnet {

LinearFit least_squares(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw FitError("least squares needs at least two paired points");
  const auto count = static_cast<double>(x.size());
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mean_x += x[i];
    mean_y += y[i];
  }
  mean_x /= count;
  mean_y /= count;

  // centred sums
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mean_x, dy = y[i] - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) throw FitError("least squares needs at least two distinct x values");

  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  if (syy == 0.0) {
    fit.r_squared = 1.0;  // y is constant and the fitted line is exact
  } else {
    double ss_res = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double r = y[i] - (fit.intercept + fit.slope * x[i]);
      ss_res += r * r;
    }
    fit.r_squared = std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
  }
  return fit;
}

std::vector<CcdfPoint> ccdf(const DegreeHistogram& hist, std::uint32_t k_min) {
  const std::uint32_t lo = std::max<std::uint32_t>(k_min, 1);
  std::vector<CcdfPoint> points;
  std::uint64_t tail = 0;
  for (auto it = hist.counts.rbegin(); it != hist.counts.rend() && it->first >= lo; ++it) {
    if (it->second == 0) continue;
    tail += it->second;
    points.push_back({it->first, static_cast<double>(tail)});
  }
  std::reverse(points.begin(), points.end());
  for (auto& p : points) p.fraction /= static_cast<double>(tail);
  return points;
}

PowerLawFit fit_power_law(const DegreeHistogram& hist, std::uint32_t k_min, FitMethod method) {
  const std::uint32_t lo = std::max<std::uint32_t>(k_min, 1);
  std::vector<double> x, y;
  if (method == FitMethod::frequency) {
    for (const auto& [degree, count] : hist.counts) {
      if (degree < lo || count == 0) continue;
      x.push_back(std::log(static_cast<double>(degree)));
      y.push_back(std::log(static_cast<double>(count)));
    }
  } else {
    for (const auto& p : ccdf(hist, lo)) {
      x.push_back(std::log(static_cast<double>(p.degree)));
      y.push_back(std::log(p.fraction));
    }
  }

  if (x.size() == 1)
    throw FitError("power-law fit: all counts sit at a single degree >= " + std::to_string(lo));
  if (x.size() < 3)
    throw FitError("power-law fit needs at least 3 distinct degrees >= " + std::to_string(lo) + ", got " +
                   std::to_string(x.size()));

  const LinearFit line = least_squares(x, y);
  PowerLawFit fit;
  fit.slope = line.slope;
  fit.intercept = line.intercept;
  fit.r_squared = line.r_squared;
  fit.points_used = x.size();
  fit.k_min = lo;
  fit.method = method;
  fit.alpha = method == FitMethod::frequency ? std::abs(line.slope) : std::abs(line.slope) + 1.0;
  return fit;
}

std::vector<ScatterPoint> emit_scatter(const DegreeHistogram& hist) {
  std::vector<ScatterPoint> points;
  for (const auto& [degree, count] : hist.counts)
    if (degree >= 1 && count > 0) points.push_back({degree, count});
  return points;
}

std::string_view to_string(FitMethod method) {
  return method == FitMethod::frequency ? "frequency" : "ccdf";
}

std::optional<FitMethod> parse_fit_method(std::string_view text) {
  if (text == "frequency") return FitMethod::frequency;
  if (text == "ccdf") return FitMethod::ccdf;
  return std::nullopt;
}

}  // namespace depnet
