#pragma once
#include <projemb/basis.h>
#include <projemb/core.h>
#include <string>
#include <vector>

namespace projemb {

/// Two-electron repulsion integrals (ij|kl) in chemists' notation, stored
/// once per 8-fold permutation class under the canonical compound index.
class EriTensor {
public:
  EriTensor() = default;
  explicit EriTensor(size_t n);

  size_t dim() const { return m_n; }

  double operator()(size_t i, size_t j, size_t k, size_t l) const {
    return m_packed[index(i, j, k, l)];
  }
  void set(size_t i, size_t j, size_t k, size_t l, double value) {
    m_packed[index(i, j, k, l)] = value;
  }
  /// Set by compound pair indices (ij) and (kl).
  void set_pairs(size_t ij, size_t kl, double value) { m_packed[pair_index(ij, kl)] = value; }

  /// Full row-major n^4 copy, element [((i*n+j)*n+k)*n+l].
  std::vector<double> to_dense() const;
  const std::vector<double> &packed() const { return m_packed; }

  static size_t pair_index(size_t i, size_t j) {
    return i >= j ? i * (i + 1) / 2 + j : j * (j + 1) / 2 + i;
  }
  static size_t index(size_t i, size_t j, size_t k, size_t l) {
    return pair_index(pair_index(i, j), pair_index(k, l));
  }

private:
  size_t m_n{0};
  std::vector<double> m_packed;
};

struct IntegralSet {
  Mat S;
  Mat T;
  Mat V;
  Mat h_core;
  EriTensor eri;
};

Mat overlap_matrix(const BasisSet &basis);
Mat kinetic_matrix(const BasisSet &basis);
Mat nuclear_attraction_matrix(const BasisSet &basis, const Molecule &mol);
Mat core_hamiltonian(const BasisSet &basis, const Molecule &mol);
EriTensor eri_tensor(const BasisSet &basis);

IntegralSet compute_integrals(const BasisSet &basis, const Molecule &mol);

/// Debug dump of S, h_core and the unique ERIs as `kind i j [k l] value` rows.
void write_integral_dump(const IntegralSet &ints, const std::string &path);

} // namespace projemb
