#include "lie_euler/residual.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace lie_euler {

Grid Grid::default_grid() {
  Grid g;
  for (auto& b : g.box) b = {0.0, 1.0};
  for (auto& s : g.h) s = 1.0 / 16.0;
  return g;
}

Grid Grid::halved() const {
  Grid g = *this;
  for (auto& s : g.h) s /= 2;
  return g;
}

std::array<int, 4> Grid::points() const {
  std::array<int, 4> n{};
  for (int a = 0; a < 4; ++a) {
    auto i = static_cast<std::size_t>(a);
    n[i] = static_cast<int>(std::lround((box[i].second - box[i].first) / h[i])) + 1;
  }
  return n;
}

void Grid::validate() const {
  for (int a = 0; a < 4; ++a) {
    auto i = static_cast<std::size_t>(a);
    if (!(h[i] > 0)) throw std::invalid_argument("grid spacing must be positive");
    if (!(box[i].second > box[i].first)) throw std::invalid_argument("degenerate grid box");
  }
  for (int n : points())
    if (n < 3) throw std::invalid_argument("grid needs at least 3 points per axis");
}

namespace {

int thread_cap() {
  unsigned hw = std::thread::hardware_concurrency();
  int cap = hw == 0 ? 1 : static_cast<int>(hw);
  if (const char* env = std::getenv("LIE_EULER_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) cap = std::min(cap, v);
  }
  return cap;
}

struct SlicePartial {
  std::array<double, 5> max{};
  std::array<double, 5> sumsq{};
  long count = 0;
  double min_density = std::numeric_limits<double>::infinity();
};

struct Sampler {
  const SolutionField& f;
  const Grid& g;
  Scheme scheme;

  std::array<double, 5> at(const std::array<int, 4>& idx, int axis, int off) const {
    double c[4];
    for (int a = 0; a < 4; ++a) {
      auto i = static_cast<std::size_t>(a);
      c[a] = g.box[i].first + g.h[i] * idx[i];
    }
    if (axis >= 0) c[axis] += g.h[static_cast<std::size_t>(axis)] * off;
    return f.sample(c[0], c[1], c[2], c[3]);
  }

  // center value and the four first derivatives of every field component
  void stencil(const std::array<int, 4>& idx, std::array<double, 5>& val,
               std::array<std::array<double, 5>, 4>& deriv, double& min_q) const {
    val = at(idx, -1, 0);
    min_q = val[4];
    for (int a = 0; a < 4; ++a) {
      double h = g.h[static_cast<std::size_t>(a)];
      if (scheme == Scheme::kCentral2) {
        auto fp = at(idx, a, 1);
        auto fm = at(idx, a, -1);
        min_q = std::min({min_q, fp[4], fm[4]});
        for (int k = 0; k < 5; ++k) {
          auto j = static_cast<std::size_t>(k);
          deriv[static_cast<std::size_t>(a)][j] = (fp[j] - fm[j]) / (2 * h);
        }
      } else {
        auto fp = at(idx, a, 1);
        min_q = std::min(min_q, fp[4]);
        for (int k = 0; k < 5; ++k) {
          auto j = static_cast<std::size_t>(k);
          deriv[static_cast<std::size_t>(a)][j] = (fp[j] - val[j]) / h;
        }
      }
    }
  }
};

std::array<double, 5> assemble(const std::array<double, 5>& f,
                               const std::array<std::array<double, 5>, 4>& d, double gamma) {
  // d[a][k]: derivative of component k along axis a (0=t,1=x,2=y,3=z)
  double u = f[0], v = f[1], w = f[2], p = f[3], q = f[4];
  double div = d[1][0] + d[2][1] + d[3][2];
  return {
      d[0][0] + u * d[1][0] + v * d[2][0] + w * d[3][0] + d[1][3] / q,
      d[0][1] + u * d[1][1] + v * d[2][1] + w * d[3][1] + d[2][3] / q,
      d[0][2] + u * d[1][2] + v * d[2][2] + w * d[3][2] + d[3][3] / q,
      d[0][4] + q * div + u * d[1][4] + v * d[2][4] + w * d[3][4],
      d[0][3] + gamma * p * div + u * d[1][3] + v * d[2][3] + w * d[3][3],
  };
}

// Fixed-order sweep over interior points, parallel across t-slices; per_point
// receives (slice ordinal, residuals, grid index) and must only touch
// slice-local state.
template <typename PerPoint>
void sweep(const SolutionField& f, const EulerSystem& system, const Grid& grid, Scheme scheme,
           std::vector<SlicePartial>& partials, PerPoint&& per_point) {
  grid.validate();
  auto n = grid.points();
  Sampler sampler{f, grid, scheme};
  const int t_lo = 1, t_hi = n[0] - 1;
  partials.assign(static_cast<std::size_t>(std::max(0, t_hi - t_lo)), SlicePartial{});

  std::atomic<int> next{t_lo};
  std::exception_ptr error;
  std::mutex error_mu;
  auto work = [&] {
    try {
      for (;;) {
        int it = next.fetch_add(1);
        if (it >= t_hi) return;
        const int slice = it - t_lo;
        SlicePartial& part = partials[static_cast<std::size_t>(slice)];
        std::array<int, 4> idx{it, 0, 0, 0};
        for (idx[1] = 1; idx[1] < n[1] - 1; ++idx[1])
          for (idx[2] = 1; idx[2] < n[2] - 1; ++idx[2])
            for (idx[3] = 1; idx[3] < n[3] - 1; ++idx[3]) {
              std::array<double, 5> val;
              std::array<std::array<double, 5>, 4> deriv;
              double min_q;
              sampler.stencil(idx, val, deriv, min_q);
              part.min_density = std::min(part.min_density, min_q);
              auto res = assemble(val, deriv, system.gamma);
              per_point(slice, res, idx);
              for (int k = 0; k < 5; ++k) {
                auto j = static_cast<std::size_t>(k);
                part.max[j] = std::max(part.max[j], std::abs(res[j]));
                part.sumsq[j] += res[j] * res[j];
              }
              ++part.count;
            }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mu);
      if (!error) error = std::current_exception();
    }
  };

  int workers = std::min<int>(thread_cap(), std::max(1, t_hi - t_lo));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
}

ResidualReport combine(const std::vector<SlicePartial>& partials) {
  ResidualReport rep;
  rep.min_density_seen = std::numeric_limits<double>::infinity();
  std::array<double, 5> sumsq{};
  for (const auto& part : partials) {  // fixed slice order keeps l2 deterministic
    for (int k = 0; k < 5; ++k) {
      auto j = static_cast<std::size_t>(k);
      rep.max_norm[j] = std::max(rep.max_norm[j], part.max[j]);
      sumsq[j] += part.sumsq[j];
    }
    rep.sample_count += part.count;
    rep.min_density_seen = std::min(rep.min_density_seen, part.min_density);
  }
  for (int k = 0; k < 5; ++k) {
    auto j = static_cast<std::size_t>(k);
    rep.l2_norm[j] = std::sqrt(sumsq[j]);
  }
  if (rep.min_density_seen < kDensityFloor) throw DensityFloor("density floor");
  return rep;
}

}  // namespace

ResidualReport residual(const SolutionField& f, const EulerSystem& system, const Grid& grid,
                        Scheme scheme) {
  std::vector<SlicePartial> partials;
  sweep(f, system, grid, scheme, partials,
        [](int, const std::array<double, 5>&, const std::array<int, 4>&) {});
  return combine(partials);
}

PreservationResult symmetry_preservation(const TransformSpec& spec, const SolutionField& f,
                                         const EulerSystem& system, const Grid& grid,
                                         double floor) {
  PreservationResult out;
  out.before = residual(f, system, grid);
  out.after = residual(transform_solution(spec, f), system, grid);
  double before_max = 0, after_max = 0;
  for (int k = 0; k < 5; ++k) {
    auto j = static_cast<std::size_t>(k);
    before_max = std::max(before_max, out.before.max_norm[j]);
    after_max = std::max(after_max, out.after.max_norm[j]);
  }
  out.pass = after_max <= 10.0 * std::max(before_max, floor);
  return out;
}

ConvergenceResult convergence_order(const SolutionField& f, const EulerSystem& system,
                                    const std::vector<Grid>& grids, Scheme scheme) {
  if (grids.size() < 3) throw std::invalid_argument("need at least 3 grids");
  ConvergenceResult out;
  std::vector<std::array<double, 5>> devs;
  std::vector<double> hs;
  for (const Grid& g : grids) {
    auto n = g.points();
    std::vector<std::array<double, 5>> slice_dev(
        static_cast<std::size_t>(std::max(0, n[0] - 2)), std::array<double, 5>{});
    std::vector<SlicePartial> partials;
    sweep(f, system, g, scheme, partials,
          [&](int slice, const std::array<double, 5>& res, const std::array<int, 4>& idx) {
            std::array<double, 5> exact{};
            if (f.analytic_residual) {
              double c[4];
              for (int a = 0; a < 4; ++a) {
                auto i = static_cast<std::size_t>(a);
                c[a] = g.box[i].first + g.h[i] * idx[i];
              }
              exact = f.analytic_residual(c[0], c[1], c[2], c[3], system.gamma);
            }
            auto& dev = slice_dev[static_cast<std::size_t>(slice)];
            for (int k = 0; k < 5; ++k) {
              auto j = static_cast<std::size_t>(k);
              dev[j] = std::max(dev[j], std::abs(res[j] - exact[j]));
            }
          });
    (void)combine(partials);  // enforces the density floor
    std::array<double, 5> dev{};
    for (const auto& sd : slice_dev)
      for (int k = 0; k < 5; ++k) {
        auto j = static_cast<std::size_t>(k);
        dev[j] = std::max(dev[j], sd[j]);
      }
    devs.push_back(dev);
    double hprod = 1;
    for (double h : g.h) hprod *= h;
    hs.push_back(std::pow(hprod, 0.25));
  }
  for (int k = 0; k < 5; ++k) {
    auto j = static_cast<std::size_t>(k);
    bool floored = false;
    for (const auto& d : devs)
      if (d[j] < 1e-12) floored = true;
    out.floor_limited[j] = floored;
    if (floored) {
      out.order[j] = 0.0;
      continue;
    }
    // least-squares slope of log(dev) against log(h)
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    auto m = static_cast<double>(devs.size());
    for (std::size_t i = 0; i < devs.size(); ++i) {
      double lx = std::log(hs[i]);
      double ly = std::log(devs[i][j]);
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
    }
    out.order[j] = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  }
  return out;
}

}  // namespace lie_euler
