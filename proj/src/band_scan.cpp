#include "qgstrip/band_scan.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <thread>

#include "qgstrip/csv.hpp"
#include "qgstrip/errors.hpp"

namespace qgstrip {

namespace {

double sigma_min_at(const StripModel& model, double k, double theta,
                    SecularForm form) {
  const Eigen::VectorXd sv = singular_values(assemble_form(model, k, theta, form));
  return sv(sv.size() - 1);
}

// Golden-section minimization of sigma_min over [lo, hi]. The dips are
// V-shaped, so the bracket shrinks to ~1e-12 relative in ~60 iterations,
// which leaves sigma_min at the bottom limited by roundoff rather than by
// the bracket width.
double refine_minimum(const StripModel& model, double theta, double lo,
                      double hi, SecularForm form) {
  constexpr double golden = 0.6180339887498949;
  double c = hi - golden * (hi - lo);
  double d = lo + golden * (hi - lo);
  double fc = sigma_min_at(model, c, theta, form);
  double fd = sigma_min_at(model, d, theta, form);
  for (int it = 0; it < 80 && (hi - lo) > 1e-12 * std::max(1.0, std::abs(lo)); ++it) {
    if (fc < fd) {
      hi = d; d = c; fd = fc;
      c = hi - golden * (hi - lo);
      fc = sigma_min_at(model, c, theta, form);
    } else {
      lo = c; c = d; fc = fd;
      d = lo + golden * (hi - lo);
      fd = sigma_min_at(model, d, theta, form);
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> find_roots(const StripModel& model, double theta,
                               double k_min, double k_max, double grid_step,
                               SecularForm form) {
  if (!(0.0 < k_min && k_min < k_max))
    throw DomainError("find_roots: need 0 < k_min < k_max");
  if (!(grid_step > 0.0))
    throw DomainError("find_roots: grid_step must be positive");

  const int n = static_cast<int>(std::floor((k_max - k_min) / grid_step)) + 1;
  std::vector<double> ks(n), vals(n);
  for (int i = 0; i < n; ++i) {
    ks[i] = std::min(k_min + i * grid_step, k_max);
    vals[i] = sigma_min_at(model, ks[i], theta, form);
  }

  std::vector<double> sorted = vals;
  std::nth_element(sorted.begin(), sorted.begin() + n / 2, sorted.end());
  const double median = sorted[n / 2];

  // Candidate dips: every interior local minimum clearly below the typical
  // level. Acceptance is decided after refinement, so this filter only has
  // to be generous; a 1e-3 * median cut would miss genuine roots whose
  // nearest grid sample still sits at ~1e-3 of the median.
  std::vector<double> roots;
  for (int i = 1; i + 1 < n; ++i) {
    if (vals[i] < vals[i - 1] && vals[i] <= vals[i + 1] &&
        vals[i] < 0.9 * median) {
      const double k_star = refine_minimum(model, theta, ks[i - 1], ks[i + 1], form);
      const Eigen::VectorXd sv =
          singular_values(assemble_form(model, k_star, theta, form));
      if (sv(sv.size() - 1) <= kRootAccept * sv(0)) roots.push_back(k_star);
    }
  }

  std::sort(roots.begin(), roots.end());
  std::vector<double> merged;
  for (double r : roots)
    if (merged.empty() || r - merged.back() > 1e-6) merged.push_back(r);
  return merged;
}

BandDataset dispersion(const StripModel& model, int theta_steps, double k_min,
                       double k_max, double grid_step, int threads) {
  if (theta_steps < 2)
    throw DomainError("dispersion: theta_steps must be at least 2");

  BandDataset ds;
  ds.model_name = model.name;
  ds.cells = model.cells;
  ds.l1 = model.l1;
  ds.l2 = model.l2;
  ds.l3 = model.l3;
  ds.lengths = model.distinct_lengths();
  ds.k_min = k_min;
  ds.k_max = k_max;
  ds.grid_step = grid_step;
  ds.theta_steps = theta_steps;

  // Uniform grid over (-pi, pi]: excludes -pi, includes +pi.
  ds.theta_values.resize(theta_steps);
  for (int i = 0; i < theta_steps; ++i)
    ds.theta_values[i] =
        -std::numbers::pi + 2.0 * std::numbers::pi * (i + 1) / theta_steps;

  std::vector<std::vector<double>> roots_by_theta(theta_steps);
  auto scan_range = [&](int begin, int end) {
    for (int i = begin; i < end; ++i)
      roots_by_theta[i] =
          find_roots(model, ds.theta_values[i], k_min, k_max, grid_step);
  };

  const int workers = std::max(1, std::min(threads, theta_steps));
  if (workers == 1) {
    scan_range(0, theta_steps);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      const int begin = theta_steps * w / workers;
      const int end = theta_steps * (w + 1) / workers;
      pool.emplace_back(scan_range, begin, end);
    }
    for (auto& t : pool) t.join();
  }

  for (int i = 0; i < theta_steps; ++i) {
    for (double k : roots_by_theta[i]) {
      const Eigen::VectorXd sv =
          singular_values(assemble(model, k, ds.theta_values[i]));
      ds.points.push_back({ds.theta_values[i], k, false, sv(sv.size() - 1) / sv(0)});
    }
  }
  return ds;
}

bool in_flat_window(double k, const std::vector<double>& lengths, double K) {
  for (double l : lengths) {
    const double t = k * l;
    const double n = std::round(t / std::numbers::pi);
    if (n >= 0.0 && std::abs(t - n * std::numbers::pi) < K) return true;
  }
  return false;
}

BandDataset flag_flat_bands(BandDataset ds, double K) {
  if (!(K > 0.0 && K < std::numbers::pi / 2.0))
    throw DomainError("flag_flat_bands: K must lie in (0, pi/2)");
  for (auto& p : ds.points) p.flat = in_flat_window(p.k, ds.lengths, K);
  ds.exclusion_k = K;
  return ds;
}

void write_band_csv(const BandDataset& ds, std::ostream& out) {
  out << "# schema: bands/1\n";
  out << "theta,k,flat_flag,sigma_min\n";
  for (const auto& p : ds.points)
    out << fmt_g12(p.theta) << ',' << fmt_g12(p.k) << ',' << (p.flat ? 1 : 0)
        << ',' << fmt_g12(p.sigma_min_rel) << '\n';
}

}  // namespace qgstrip
