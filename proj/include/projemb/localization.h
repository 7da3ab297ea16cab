#pragma once
#include <projemb/basis.h>
#include <projemb/scf.h>
#include <vector>

namespace projemb {

/// Split of the occupied space into active (K) and environment (L) orbitals.
struct Partition {
  Mat C_lmo;                      // K x n_occ localized occupied orbitals
  Mat rotation;                   // SPADE only: n_occ x n_occ unitary, C_lmo = C_occ * rotation
  std::vector<size_t> active_idx; // columns of C_lmo in the active set
  std::vector<size_t> env_idx;
  Mat gamma_act;
  Mat gamma_env;
  std::vector<size_t> active_atoms;
  std::vector<size_t> active_aos;
  Vec active_population;          // fraction of each orbital on the active atoms
  Vec singular_values;            // SPADE only

  Mat C_active() const;
  Mat C_env() const;
};

/// Orthogonalized (S^{1/2}) coefficients of each orbital summed over the
/// AOs of each atom: returns an n_atoms x n_orb matrix of Loewdin populations.
Mat lowdin_populations(const Mat &C, const Mat &S, const BasisSet &basis, size_t n_atoms);

/// Subsystem projected AO decomposition: SVD of the active-atom rows of
/// S^{1/2} C_occ, with the active count at the largest singular-value gap.
Partition spade_partition(const SCFResult &scf, const Mat &S, const BasisSet &basis,
                          size_t n_atoms, const std::vector<size_t> &active_atoms);

/// Pipek-Mezey Jacobi sweeps maximizing sum over atoms of squared Loewdin
/// populations; occupied orbitals only.
Mat population_localize(const SCFResult &scf, const Mat &S, const BasisSet &basis,
                        size_t n_atoms);

/// Assign each localized orbital whose active-atom population fraction
/// exceeds `threshold` to the active set.
Partition assign_by_population(const Mat &C_lmo, const Mat &S, const BasisSet &basis,
                               size_t n_atoms, const std::vector<size_t> &active_atoms,
                               double threshold = 0.95);

/// Throws InputError unless `active_atoms` is a nonempty proper subset of 0..n_atoms-1.
void validate_active_atoms(const std::vector<size_t> &active_atoms, size_t n_atoms);

} // namespace projemb
