#pragma once
#include <cstdint>
#include <projemb/fermion.h>
#include <string>
#include <vector>

namespace projemb {

/// Pauli word stored as X and Z bit masks; qubit j is bit j. A qubit with
/// both bits set carries Y.
struct PauliWord {
  std::uint64_t x{0};
  std::uint64_t z{0};

  /// Label with qubit 0 leftmost, e.g. "XZIY".
  std::string label(int n_qubits) const;
  static PauliWord from_label(const std::string &label);
  int y_count() const { return __builtin_popcountll(x & z); }
  bool operator==(const PauliWord &) const = default;
};

struct PauliTerm {
  PauliWord word;
  double coeff{0.0};
};

/// Real-coefficient Pauli sum, terms sorted by label with no duplicates.
class QubitHamiltonian {
public:
  QubitHamiltonian() = default;
  QubitHamiltonian(int n_qubits, std::vector<PauliTerm> terms, double classical_constant = 0.0,
                   double prune = 1e-12);

  int n_qubits() const { return m_n_qubits; }
  const std::vector<PauliTerm> &terms() const { return m_terms; }
  /// Coefficient of the identity word (includes the classical constant).
  double identity_coefficient() const;
  /// Classical energy folded into the identity coefficient.
  double classical_constant() const { return m_classical_constant; }

  /// y = H x in the computational basis (real arithmetic; needs an even
  /// number of Y factors in every word).
  Vec apply(const Vec &state) const;
  Mat dense_matrix() const;

  /// {"n_qubits", "constant", "terms": [{"pauli", "coeff"}]} sorted by pauli label.
  std::string to_json(int indent = 2) const;
  static QubitHamiltonian from_json(const std::string &text);

private:
  int m_n_qubits{0};
  double m_classical_constant{0.0};
  std::vector<PauliTerm> m_terms;
};

/// Ladder operators map as a_p = 1/2 (X_p + i Y_p) Z_{p-1} ... Z_0. Throws
/// when any combined coefficient has an imaginary part above 1e-10.
QubitHamiltonian jordan_wigner(const FermionOperator &op, double classical_constant = 0.0);

/// Number of Pauli terms, identity included.
size_t term_count(const QubitHamiltonian &H);

/// Dense matrices of the particle-number and S_z operators under the
/// interleaved spin-orbital ordering, for symmetry checks.
Mat number_operator_matrix(int n_qubits);
Mat sz_operator_matrix(int n_qubits);

} // namespace projemb
