#include "qwalk/ksup.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace qwalk {

namespace {

KSup golden_section_max(const std::function<double(double)>& f, double lo, double hi) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > 1e-10) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  const double k = 0.5 * (a + b);
  return {f(k), k};
}

}  // namespace

KSup sup_over_k(const std::function<double(double)>& f, Execution exec, int coarse,
                int candidates) {
  const double two_pi = 2.0 * std::numbers::pi;
  const double h = two_pi / coarse;
  std::vector<double> ks(static_cast<std::size_t>(coarse));
  for (int i = 0; i < coarse; ++i) ks[static_cast<std::size_t>(i)] = h * i;
  std::vector<double> vals(ks.size());
  kernels::evaluate_grid(ks, vals, f, exec);

  std::vector<int> peaks;
  for (int i = 0; i < coarse; ++i) {
    const double left = vals[static_cast<std::size_t>((i + coarse - 1) % coarse)];
    const double right = vals[static_cast<std::size_t>((i + 1) % coarse)];
    const double v = vals[static_cast<std::size_t>(i)];
    if (v >= left && v >= right) peaks.push_back(i);
  }
  std::sort(peaks.begin(), peaks.end(), [&](int a, int b) {
    return vals[static_cast<std::size_t>(a)] > vals[static_cast<std::size_t>(b)];
  });
  if (peaks.size() > static_cast<std::size_t>(candidates)) peaks.resize(static_cast<std::size_t>(candidates));

  KSup best{};
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (vals[i] > best.value) best = {vals[i], ks[i]};
  }
  for (int p : peaks) {
    const KSup r = golden_section_max(f, h * (p - 1), h * (p + 1));
    if (r.value > best.value) best = {r.value, std::fmod(r.k + two_pi, two_pi)};
  }
  return best;
}

}  // namespace qwalk
