#pragma once
#include <span>

namespace projemb {

/// Boys function F_n(T) = int_0^1 t^{2n} exp(-T t^2) dt for n = 0..out.size()-1.
/// Series below T = 35, asymptotic form above; absolute error ~1e-14.
void boys_function(double T, std::span<double> out);

double boys_function(int n, double T);

} // namespace projemb
