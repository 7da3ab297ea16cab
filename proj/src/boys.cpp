#include <projemb/boys.h>
#include <projemb/core.h>

#include <cmath>
#include <numbers>

namespace projemb {

namespace {
constexpr double series_cutoff = 35.0;
}

void boys_function(double T, std::span<double> out) {
  if (out.empty())
    return;
  if (T < 0.0)
    throw Error("Boys function evaluated at a negative argument");
  const int n_max = static_cast<int>(out.size()) - 1;
  const double exp_t = std::exp(-T);

  if (T < series_cutoff) {
    // F_m(T) = e^{-T} sum_k (2T)^k / ((2m+1)(2m+3)...(2m+2k+1)), then recur downward.
    double term = 1.0 / (2 * n_max + 1);
    double sum = term;
    for (int k = 1; k < 1000; ++k) {
      term *= 2.0 * T / (2 * n_max + 2 * k + 1);
      sum += term;
      if (term < 1e-17 * sum)
        break;
    }
    out[n_max] = exp_t * sum;
    for (int m = n_max - 1; m >= 0; --m)
      out[m] = (2.0 * T * out[m + 1] + exp_t) / (2 * m + 1);
  } else {
    out[0] = 0.5 * std::sqrt(std::numbers::pi / T);
    for (int m = 0; m < n_max; ++m)
      out[m + 1] = ((2 * m + 1) * out[m] - exp_t) / (2.0 * T);
  }
}

double boys_function(int n, double T) {
  double values[16];
  boys_function(T, std::span<double>(values, n + 1));
  return values[n];
}

} // namespace projemb
