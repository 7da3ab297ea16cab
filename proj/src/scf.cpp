#include <projemb/scf.h>

#include <cmath>
#include <deque>
#include <fmt/core.h>
#include <limits>

namespace projemb {

Mat density_matrix(const Mat &C_occ) { return 2.0 * C_occ * C_occ.transpose(); }

Mat two_electron_matrix(const Mat &gamma, const EriTensor &eri) {
  const size_t n = gamma.rows();
  Mat G = Mat::Zero(n, n);
  for (size_t m = 0; m < n; ++m) {
    for (size_t v = 0; v <= m; ++v) {
      double g = 0.0;
      for (size_t l = 0; l < n; ++l) {
        for (size_t s = 0; s < n; ++s) {
          g += gamma(l, s) * (eri(m, v, s, l) - 0.5 * eri(m, l, s, v));
        }
      }
      G(m, v) = G(v, m) = g;
    }
  }
  return G;
}

Mat fock_build(const Mat &gamma, const Mat &h, const EriTensor &eri) {
  return h + two_electron_matrix(gamma, eri);
}

double electronic_energy(const Mat &gamma, const Mat &h, const Mat &F) {
  return 0.5 * (gamma.cwiseProduct(h + F)).sum();
}

Mat orthogonalizer(const Mat &S, double threshold) {
  Eigen::SelfAdjointEigenSolver<Mat> es(S);
  const Vec &s = es.eigenvalues();
  const Mat &U = es.eigenvectors();
  if (s.minCoeff() >= threshold)
    return U * s.cwiseInverse().cwiseSqrt().asDiagonal() * U.transpose();

  std::vector<Eigen::Index> kept;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s[i] >= threshold)
      kept.push_back(i);
  if (kept.empty())
    throw InputError("overlap matrix is numerically singular");
  Mat X(S.rows(), static_cast<Eigen::Index>(kept.size()));
  for (size_t k = 0; k < kept.size(); ++k)
    X.col(k) = U.col(kept[k]) / std::sqrt(s[kept[k]]);
  return X;
}

Eigenpairs solve_roothaan_with(const Mat &F, const Mat &X) {
  Mat Fp = X.transpose() * F * X;
  Fp = 0.5 * (Fp + Fp.transpose());
  Eigen::SelfAdjointEigenSolver<Mat> es(Fp);
  return {X * es.eigenvectors(), es.eigenvalues()};
}

Eigenpairs solve_roothaan(const Mat &F, const Mat &S) {
  return solve_roothaan_with(F, orthogonalizer(S));
}

namespace {

/// Pulay extrapolation over the last `capacity` Fock/error pairs.
class Diis {
public:
  explicit Diis(size_t capacity) : m_capacity(capacity) {}

  Mat extrapolate(const Mat &F, const Mat &error) {
    m_focks.push_back(F);
    m_errors.push_back(error);
    if (m_focks.size() > m_capacity) {
      m_focks.pop_front();
      m_errors.pop_front();
    }
    while (m_focks.size() > 1) {
      const auto m = static_cast<Eigen::Index>(m_focks.size());
      Mat B = Mat::Zero(m + 1, m + 1);
      for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j <= i; ++j)
          B(i, j) = B(j, i) = m_errors[i].cwiseProduct(m_errors[j]).sum();
      double scale = B.topLeftCorner(m, m).diagonal().maxCoeff();
      if (scale > 0.0)
        B.topLeftCorner(m, m) /= scale;
      B.row(m).head(m).setConstant(-1.0);
      B.col(m).head(m).setConstant(-1.0);
      Vec rhs = Vec::Zero(m + 1);
      rhs[m] = -1.0;
      Eigen::FullPivLU<Mat> lu(B);
      if (lu.rcond() > 1e-14) {
        Vec c = lu.solve(rhs);
        if (c.allFinite()) {
          Mat out = Mat::Zero(F.rows(), F.cols());
          for (Eigen::Index i = 0; i < m; ++i)
            out += c[i] * m_focks[i];
          return out;
        }
      }
      // Linearly dependent subspace: drop the oldest vector and retry.
      m_focks.pop_front();
      m_errors.pop_front();
    }
    return F;
  }

private:
  size_t m_capacity;
  std::deque<Mat> m_focks;
  std::deque<Mat> m_errors;
};

} // namespace

SCFResult run_rhf(const Molecule &mol, const IntegralSet &ints, const ScfOptions &options) {
  const Mat &S = ints.S;
  const Eigen::Index n = S.rows();
  const Mat h = options.h_override ? *options.h_override : ints.h_core;
  if (h.rows() != n || h.cols() != n)
    throw InputError("one-electron operator has the wrong shape");

  const int n_electrons = options.n_electrons.value_or(mol.n_electrons());
  if (n_electrons < 0 || n_electrons % 2 != 0)
    throw InputError(fmt::format("RHF needs an even, non-negative electron count (got {})",
                                 n_electrons));
  const Mat X = orthogonalizer(S);
  const int n_occ = n_electrons / 2;
  if (n_occ > X.cols())
    throw InputError(fmt::format("{} occupied orbitals exceed the {} available", n_occ, X.cols()));

  SCFResult result;
  result.n_occ = n_occ;
  result.h = h;
  result.E_nuc = nuclear_repulsion(mol);

  Mat D;
  if (options.guess_density) {
    D = *options.guess_density;
  } else {
    auto guess = solve_roothaan_with(h, X);
    D = density_matrix(guess.C.leftCols(n_occ));
  }

  auto build = [&](const Mat &density, Mat &F, Mat &extra) {
    Mat F0 = fock_build(density, h, ints.eri);
    extra = options.f_extra ? options.f_extra(F0, density) : Mat::Zero(n, n);
    F = F0 + extra;
    return electronic_energy(density, h + extra, F);
  };

  Diis diis(static_cast<size_t>(options.diis_size));
  double E_prev = std::numeric_limits<double>::quiet_NaN();
  int flat_steps = 0; // consecutive energy changes below tolerance
  Mat F, extra;
  bool converged = false;
  for (int iter = 1; iter <= options.max_iterations; ++iter) {
    double E = build(D, F, extra);
    Mat commutator = F * D * S - S * D * F;
    double err = commutator.norm();
    result.trace.push_back({iter, E + result.E_nuc, err});
    if (options.verbosity >= 1)
      fmt::print(stderr, "  scf {:4d}  E = {:20.12f}  |FDS-SDF| = {:.3e}\n", iter,
                 E + result.E_nuc, err);
    flat_steps = (iter > 1 && std::abs(E - E_prev) < options.energy_tolerance) ? flat_steps + 1 : 0;
    // Converged once the last three energies agree and the commutator is small.
    if (err < options.commutator_tolerance && flat_steps >= 2) {
      converged = true;
      break;
    }
    E_prev = E;

    Mat Fx = diis.extrapolate(F, X.transpose() * commutator * X);
    if (options.level_shift > 0.0)
      Fx += options.level_shift * (S - 0.5 * S * D * S);
    auto eig = solve_roothaan_with(Fx, X);
    D = density_matrix(eig.C.leftCols(n_occ));
  }
  if (!converged)
    throw ConvergenceError(fmt::format("SCF did not converge in {} iterations (last error {:.3e})",
                                       options.max_iterations, result.trace.back().error));

  // One undamped step so that C, eps, gamma and F refer to the same fixed point.
  auto eig = solve_roothaan_with(F, X);
  result.C = eig.C;
  result.eps = eig.eps;
  result.gamma = density_matrix(eig.C.leftCols(n_occ));
  result.E_electronic = build(result.gamma, result.fock, result.extra);
  result.E_total = result.E_electronic + result.E_nuc;
  result.converged = true;
  return result;
}

} // namespace projemb
