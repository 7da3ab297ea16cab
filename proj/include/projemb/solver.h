#pragma once
#include <cstdint>
#include <optional>
#include <projemb/basis.h>
#include <projemb/integrals.h>
#include <projemb/qubit.h>
#include <vector>

namespace projemb {

/// Particle-number and S_z sector; s_z is in units of hbar (0, 0.5, 1, ...).
struct Sector {
  int n_electrons{0};
  double s_z{0.0};
};

struct GroundState {
  double energy{0.0};
  int n_qubits{0};
  std::optional<Sector> sector; // empty means the full Fock space
  size_t dimension{0};
  int iterations{0};
};

enum class EigenMethod { lanczos, dense };

/// Computational-basis states (interleaved alpha/beta qubits) in a sector, ascending.
std::vector<std::uint64_t> sector_states(int n_qubits, const Sector &sector);

/// Lowest eigenvalue of H, optionally restricted to a sector. Lanczos with
/// full reorthogonalization and restarts from a seeded random vector; the
/// dense path is for validation on small problems.
GroundState ground_state(const QubitHamiltonian &H, std::optional<Sector> sector = std::nullopt,
                         EigenMethod method = EigenMethod::lanczos);

/// Determinant-space FCI over all K spatial orbitals (symmetrically
/// orthogonalized AOs), Slater-Condon rules, dense diagonalization in the
/// (n_electrons, S_z = 0) sector. Returns the total energy including E_nuc.
double fci_oracle(const Molecule &mol, const BasisSet &basis, const IntegralSet &ints);

} // namespace projemb
