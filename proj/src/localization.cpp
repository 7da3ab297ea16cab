#include <projemb/localization.h>

#include <algorithm>
#include <cmath>
#include <fmt/core.h>
#include <numeric>
#include <set>

namespace projemb {

namespace {

constexpr double gap_tie_tolerance = 1e-12;
constexpr double pm_angle_tolerance = 1e-8;
constexpr int pm_max_sweeps = 1000;

Mat symmetric_sqrt(const Mat &S) {
  Eigen::SelfAdjointEigenSolver<Mat> es(S);
  return es.eigenvectors() * es.eigenvalues().cwiseSqrt().asDiagonal() *
         es.eigenvectors().transpose();
}

std::vector<std::vector<size_t>> aos_per_atom(const BasisSet &basis, size_t n_atoms) {
  std::vector<std::vector<size_t>> out(n_atoms);
  for (size_t i = 0; i < basis.size(); ++i)
    out[basis.functions()[i].atom].push_back(i);
  return out;
}

// Largest-magnitude coefficient of every column made positive.
void fix_signs(Mat &C, Mat *rotation) {
  for (Eigen::Index j = 0; j < C.cols(); ++j) {
    Eigen::Index imax = 0;
    C.col(j).cwiseAbs().maxCoeff(&imax);
    if (C(imax, j) < 0.0) {
      C.col(j) *= -1.0;
      if (rotation)
        rotation->col(j) *= -1.0;
    }
  }
}

Partition make_partition(Mat C_lmo, std::vector<size_t> active_idx, std::vector<size_t> env_idx,
                         const Mat &S, const BasisSet &basis, size_t n_atoms,
                         const std::vector<size_t> &active_atoms) {
  Partition part;
  part.C_lmo = std::move(C_lmo);
  part.active_idx = std::move(active_idx);
  part.env_idx = std::move(env_idx);
  part.active_atoms = active_atoms;
  part.active_aos = basis.functions_on_atoms(active_atoms);
  part.gamma_act = density_matrix(part.C_active());
  part.gamma_env = density_matrix(part.C_env());

  Mat pops = lowdin_populations(part.C_lmo, S, basis, n_atoms);
  part.active_population = Vec::Zero(part.C_lmo.cols());
  for (Eigen::Index i = 0; i < pops.cols(); ++i) {
    double total = pops.col(i).sum();
    double active = 0.0;
    for (size_t a : active_atoms)
      active += pops(static_cast<Eigen::Index>(a), i);
    part.active_population[i] = total > 0.0 ? active / total : 0.0;
  }
  return part;
}

Mat select_columns(const Mat &C, const std::vector<size_t> &idx) {
  Mat out(C.rows(), static_cast<Eigen::Index>(idx.size()));
  for (size_t k = 0; k < idx.size(); ++k)
    out.col(static_cast<Eigen::Index>(k)) = C.col(static_cast<Eigen::Index>(idx[k]));
  return out;
}

} // namespace

Mat Partition::C_active() const { return select_columns(C_lmo, active_idx); }
Mat Partition::C_env() const { return select_columns(C_lmo, env_idx); }

void validate_active_atoms(const std::vector<size_t> &active_atoms, size_t n_atoms) {
  if (active_atoms.empty())
    throw InputError("active atom set is empty");
  std::set<size_t> unique(active_atoms.begin(), active_atoms.end());
  if (unique.size() != active_atoms.size())
    throw InputError("active atom list contains duplicates");
  for (size_t a : active_atoms)
    if (a >= n_atoms)
      throw InputError(fmt::format("active atom index {} out of range (molecule has {} atoms)",
                                   a, n_atoms));
  if (unique.size() == n_atoms)
    throw InputError("every atom is active: the environment would be empty");
}

Mat lowdin_populations(const Mat &C, const Mat &S, const BasisSet &basis, size_t n_atoms) {
  Mat Cbar = symmetric_sqrt(S) * C;
  Mat pops = Mat::Zero(static_cast<Eigen::Index>(n_atoms), C.cols());
  for (Eigen::Index mu = 0; mu < C.rows(); ++mu) {
    auto atom = static_cast<Eigen::Index>(basis.functions()[mu].atom);
    pops.row(atom) += Cbar.row(mu).cwiseAbs2();
  }
  return pops;
}

Partition spade_partition(const SCFResult &scf, const Mat &S, const BasisSet &basis,
                          size_t n_atoms, const std::vector<size_t> &active_atoms) {
  validate_active_atoms(active_atoms, n_atoms);
  const Mat C_occ = scf.C_occ();
  const Eigen::Index n_occ = C_occ.cols();
  if (n_occ == 0)
    throw InputError("no occupied orbitals to partition");

  const Mat Cbar = symmetric_sqrt(S) * C_occ;
  const auto rows = basis.functions_on_atoms(active_atoms);
  Mat block(static_cast<Eigen::Index>(rows.size()), n_occ);
  for (size_t r = 0; r < rows.size(); ++r)
    block.row(static_cast<Eigen::Index>(r)) = Cbar.row(static_cast<Eigen::Index>(rows[r]));

  Eigen::JacobiSVD<Mat> svd(block, Eigen::ComputeFullV);
  const Vec sigma = svd.singularValues();
  const Eigen::Index m = sigma.size();

  Eigen::Index n_act = 1;
  if (m > 1) {
    Vec gaps = sigma.head(m - 1) - sigma.tail(m - 1);
    Eigen::Index best = 0;
    double max_gap = gaps.maxCoeff(&best);
    for (Eigen::Index i = 0; i < gaps.size(); ++i) {
      if (i != best && max_gap - gaps[i] <= gap_tie_tolerance)
        throw ProjectionError(fmt::format(
            "ambiguous SPADE partition: singular-value gaps {} and {} tie at {:.3e}", best + 1,
            i + 1, max_gap));
    }
    n_act = best + 1;
  }

  Mat rotation = svd.matrixV();
  Mat C_lmo = C_occ * rotation;
  fix_signs(C_lmo, &rotation);

  std::vector<size_t> active(static_cast<size_t>(n_act)), env;
  std::iota(active.begin(), active.end(), size_t{0});
  for (Eigen::Index i = n_act; i < n_occ; ++i)
    env.push_back(static_cast<size_t>(i));

  auto part = make_partition(std::move(C_lmo), std::move(active), std::move(env), S, basis,
                             n_atoms, active_atoms);
  part.rotation = std::move(rotation);
  part.singular_values = sigma;
  return part;
}

Mat population_localize(const SCFResult &scf, const Mat &S, const BasisSet &basis,
                        size_t n_atoms) {
  const Mat C_occ = scf.C_occ();
  const Eigen::Index n = C_occ.cols();
  Mat Cbar = symmetric_sqrt(S) * C_occ;
  Mat U = Mat::Identity(n, n);
  const auto atom_aos = aos_per_atom(basis, n_atoms);

  bool converged = n < 2;
  for (int sweep = 0; sweep < pm_max_sweeps && !converged; ++sweep) {
    double max_angle = 0.0;
    for (Eigen::Index s = 0; s < n; ++s) {
      for (Eigen::Index t = s + 1; t < n; ++t) {
        double A = 0.0, B = 0.0;
        for (const auto &aos : atom_aos) {
          double qst = 0.0, qss = 0.0, qtt = 0.0;
          for (size_t mu : aos) {
            auto r = static_cast<Eigen::Index>(mu);
            qst += Cbar(r, s) * Cbar(r, t);
            qss += Cbar(r, s) * Cbar(r, s);
            qtt += Cbar(r, t) * Cbar(r, t);
          }
          A += qst * qst - 0.25 * (qss - qtt) * (qss - qtt);
          B += qst * (qss - qtt);
        }
        if (std::hypot(A, B) < 1e-14)
          continue;
        double angle = 0.25 * std::atan2(B, -A);
        max_angle = std::max(max_angle, std::abs(angle));
        double c = std::cos(angle), sn = std::sin(angle);
        Vec cs = Cbar.col(s), ct = Cbar.col(t);
        Cbar.col(s) = c * cs + sn * ct;
        Cbar.col(t) = -sn * cs + c * ct;
        Vec us = U.col(s), ut = U.col(t);
        U.col(s) = c * us + sn * ut;
        U.col(t) = -sn * us + c * ut;
      }
    }
    converged = max_angle < pm_angle_tolerance;
  }
  if (!converged)
    throw ConvergenceError(
        fmt::format("Pipek-Mezey localization did not converge in {} sweeps", pm_max_sweeps));

  Mat C_lmo = C_occ * U;
  fix_signs(C_lmo, nullptr);
  return C_lmo;
}

Partition assign_by_population(const Mat &C_lmo, const Mat &S, const BasisSet &basis,
                               size_t n_atoms, const std::vector<size_t> &active_atoms,
                               double threshold) {
  validate_active_atoms(active_atoms, n_atoms);
  auto part = make_partition(C_lmo, {}, {}, S, basis, n_atoms, active_atoms);
  for (Eigen::Index i = 0; i < C_lmo.cols(); ++i) {
    if (part.active_population[i] > threshold)
      part.active_idx.push_back(static_cast<size_t>(i));
    else
      part.env_idx.push_back(static_cast<size_t>(i));
  }
  if (part.active_idx.empty())
    throw ProjectionError(fmt::format(
        "no localized orbital exceeds the {:.3f} active-population threshold; lower it to "
        "include more orbitals",
        threshold));
  part.gamma_act = density_matrix(part.C_active());
  part.gamma_env = density_matrix(part.C_env());
  return part;
}

} // namespace projemb
