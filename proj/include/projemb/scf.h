#pragma once
#include <functional>
#include <optional>
#include <projemb/integrals.h>
#include <projemb/molecule.h>
#include <vector>

namespace projemb {

struct ScfIteration {
  int iteration{0};
  double energy{0.0};
  double error{0.0}; // ||FDS - SDF||_F
};

struct SCFResult {
  Mat C;        // MO coefficients, columns ascending in eps
  Vec eps;      // orbital energies
  Mat gamma;    // closed-shell density, 2 C_occ C_occ^T
  Mat fock;     // Fock matrix built from gamma, including any extra term
  Mat extra;    // density-dependent term added to the Fock matrix (zero if unused)
  Mat h;        // one-electron operator used (h_core or its override)
  double E_electronic{0.0};
  double E_nuc{0.0};
  double E_total{0.0};
  int n_occ{0};
  bool converged{false};
  std::vector<ScfIteration> trace;

  Mat C_occ() const { return C.leftCols(n_occ); }
};

/// gamma = 2 C_occ C_occ^T.
Mat density_matrix(const Mat &C_occ);

/// Closed-shell two-electron matrix G(gamma)_{mn} = sum_{ls} gamma_{ls} [(mn|sl) - 1/2 (ml|sn)].
Mat two_electron_matrix(const Mat &gamma, const EriTensor &eri);

/// F = h + G(gamma).
Mat fock_build(const Mat &gamma, const Mat &h, const EriTensor &eri);

/// 1/2 tr(gamma (h + F)).
double electronic_energy(const Mat &gamma, const Mat &h, const Mat &F);

/// Orthogonalizer for S: symmetric S^{-1/2} when S is well conditioned,
/// canonical (eigenvectors with eigenvalue < threshold dropped) otherwise.
Mat orthogonalizer(const Mat &S, double threshold = 1e-7);

struct Eigenpairs {
  Mat C;
  Vec eps;
};

/// Solve F C = S C eps, eigenvalues ascending, C^T S C = I.
Eigenpairs solve_roothaan(const Mat &F, const Mat &S);
Eigenpairs solve_roothaan_with(const Mat &F, const Mat &X);

/// Density-dependent Fock contribution: receives the Fock matrix without the
/// extra term and the density that produced it.
using FockExtra = std::function<Mat(const Mat &fock, const Mat &gamma)>;

struct ScfOptions {
  std::optional<Mat> h_override;
  std::optional<int> n_electrons;
  FockExtra f_extra;
  std::optional<Mat> guess_density;
  double level_shift{0.0};
  int max_iterations{200};
  double commutator_tolerance{1e-8};
  double energy_tolerance{1e-10};
  int diis_size{8};
  int verbosity{0};
};

/// Restricted closed-shell Hartree-Fock with DIIS. Converged when
/// ||FDS - SDF|| and the last two energy changes are below tolerance.
/// Throws ConvergenceError when the tolerances are not met in max_iterations.
SCFResult run_rhf(const Molecule &mol, const IntegralSet &ints, const ScfOptions &options = {});

} // namespace projemb
