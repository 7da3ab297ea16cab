#pragma once
#include <projemb/integrals.h>
#include <vector>

namespace projemb {

/// Active-space integrals over M spatial orbitals.
struct MOIntegrals {
  Mat h;                 // M x M one-electron
  std::vector<double> g; // (pq|rs), chemists' notation, row-major M^4
  double core_constant{0.0};

  size_t n_orbitals() const { return static_cast<size_t>(h.rows()); }
  double eri(size_t p, size_t q, size_t r, size_t s) const {
    const size_t m = n_orbitals();
    return g[((p * m + q) * m + r) * m + s];
  }
};

/// h_pq = C^T h_ao C and a quarter-at-a-time (pq|rs) transform.
MOIntegrals mo_transform(const Mat &h_ao, const EriTensor &eri_ao, const Mat &C,
                         double core_constant = 0.0);

struct LadderOp {
  int mode{0};
  bool creation{false};
  bool operator==(const LadderOp &) const = default;
};

struct FermionTerm {
  double coeff{0.0};
  std::vector<LadderOp> ops; // applied right to left
};

/// Sum of products of ladder operators plus a scalar constant.
struct FermionOperator {
  int n_modes{0};
  double constant{0.0};
  std::vector<FermionTerm> terms;

  FermionOperator hermitian_conjugate() const;
  /// Creation operators left of annihilators, each group in descending mode
  /// order, like products merged, |coeff| <= tolerance removed.
  FermionOperator normal_ordered(double tolerance = 1e-12) const;
};

/// H = const + sum h_pq a+_p a_q + 1/2 sum <pq|rs> a+_p a+_q a_s a_r over spin
/// orbitals. Spin orbitals are interleaved: 2p is alpha, 2p+1 is beta.
/// Coefficients with magnitude <= tolerance are skipped.
FermionOperator second_quantize(const MOIntegrals &mo, double tolerance = 1e-12);

/// Spin-orbital index of spatial orbital p with spin 0 (alpha) or 1 (beta).
constexpr int spin_orbital(int p, int spin) { return 2 * p + spin; }

} // namespace projemb
