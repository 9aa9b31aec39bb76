#pragma once

#include <iosfwd>

#include "qgstrip/secular.hpp"

namespace qgstrip {

// Default k-grid step. Bands near k ~ 100 are narrow, the almost-flat ones
// much narrower than 0.1, so the scan grid has to be fine.
inline constexpr double kDefaultGridStep = 0.002;

// A refined minimum counts as a spectral point when
// sigma_min <= kRootAccept * sigma_max.
inline constexpr double kRootAccept = 1e-8;

// All k in [k_min, k_max] at which sigma_min(M(., theta)) vanishes.
// Interior grid local minima below 0.9 * median(sigma_min) are bracketed
// and refined by golden-section search far beyond the contractual |dk| <=
// 1e-6; a refined point is kept only if sigma_min <= 1e-8 * sigma_max
// there. Duplicates within 1e-6 are merged. Sorted ascending.
std::vector<double> find_roots(const StripModel& model, double theta,
                               double k_min, double k_max,
                               double grid_step = kDefaultGridStep,
                               SecularForm form = SecularForm::Direct);

struct BandPoint {
  double theta = 0.0;
  double k = 0.0;
  bool flat = false;           // inside an excluded window around n pi / l
  double sigma_min_rel = 0.0;  // sigma_min / sigma_max at the refined root
};

struct BandDataset {
  std::string model_name;
  int cells = 0;
  double l1 = 0.0, l2 = 0.0, l3 = 0.0;
  std::vector<double> lengths;  // distinct edge lengths
  double k_min = 0.0, k_max = 0.0, grid_step = 0.0;
  int theta_steps = 0;
  double exclusion_k = 0.0;  // K used by flag_flat_bands; 0 before flagging
  std::vector<double> theta_values;
  std::vector<BandPoint> points;  // sorted by (theta, k)
};

// Runs find_roots on a uniform theta grid over (-pi, pi] and aggregates.
// Scans over theta values are independent; with threads > 1 they run
// concurrently and are merged in deterministic (theta, k) order.
BandDataset dispersion(const StripModel& model, int theta_steps, double k_min,
                       double k_max, double grid_step = kDefaultGridStep,
                       int threads = 1);

// True when k lies in some window ((n pi - K)/l, (n pi + K)/l), n >= 0.
bool in_flat_window(double k, const std::vector<double>& lengths, double K);

// Marks every point inside an excluded window. K must lie in (0, pi/2).
// Flagged points stay in the dataset; decay diagnostics skip them.
BandDataset flag_flat_bands(BandDataset ds, double K);

// CSV columns: theta, k, flat_flag, sigma_min (relative).
void write_band_csv(const BandDataset& ds, std::ostream& out);

}  // namespace qgstrip
