#include <projemb/solver.h>

#include <Eigen/Sparse>
#include <cmath>
#include <fmt/core.h>
#include <random>
#include <unordered_map>

namespace projemb {

namespace {

constexpr int max_qubits = 24;
constexpr int max_krylov = 200;
constexpr int max_restarts = 100;
constexpr double residual_tolerance = 1e-8;
constexpr size_t max_dense_dimension = 6000;

using SparseMat = Eigen::SparseMatrix<double, Eigen::RowMajor>;

double word_phase(const PauliWord &w, std::uint64_t b) {
  double phase = ((w.y_count() / 2) % 2 == 0) ? 1.0 : -1.0;
  return (__builtin_popcountll(b & w.z) % 2 == 0) ? phase : -phase;
}

SparseMat sector_matrix(const QubitHamiltonian &H, const std::vector<std::uint64_t> &states) {
  const size_t dim = states.size();
  std::unordered_map<std::uint64_t, size_t> lookup;
  lookup.reserve(dim * 2);
  for (size_t i = 0; i < dim; ++i)
    lookup.emplace(states[i], i);

  // Group words by X mask: words sharing a mask connect the same state pairs.
  std::unordered_map<std::uint64_t, std::vector<const PauliTerm *>> by_flip;
  for (const auto &t : H.terms()) {
    if (t.word.y_count() % 2 != 0)
      throw Error("odd number of Y factors: Hamiltonian is not real symmetric");
    by_flip[t.word.x].push_back(&t);
  }

  std::vector<Eigen::Triplet<double>> triplets;
  for (size_t col = 0; col < dim; ++col) {
    const std::uint64_t b = states[col];
    for (const auto &[flip, terms] : by_flip) {
      auto it = lookup.find(b ^ flip);
      if (it == lookup.end())
        continue;
      double amp = 0.0;
      for (const PauliTerm *t : terms)
        amp += t->coeff * word_phase(t->word, b);
      if (amp != 0.0)
        triplets.emplace_back(static_cast<int>(it->second), static_cast<int>(col), amp);
    }
  }
  SparseMat A(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  A.setFromTriplets(triplets.begin(), triplets.end());
  return A;
}

struct LanczosResult {
  double value;
  int iterations;
};

LanczosResult lanczos_lowest(const SparseMat &A) {
  const Eigen::Index dim = A.rows();
  std::mt19937_64 rng(0);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Vec start(dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    start[i] = dist(rng);
  start.normalize();

  const Eigen::Index m = std::min<Eigen::Index>(dim, max_krylov);
  int total_iterations = 0;
  double theta = 0.0;
  for (int restart = 0; restart < max_restarts; ++restart) {
    Mat V(dim, m);
    std::vector<double> alpha, beta;
    V.col(0) = start;
    Vec ritz_coeffs;
    for (Eigen::Index k = 0; k < m; ++k) {
      ++total_iterations;
      Vec w = A * V.col(k);
      alpha.push_back(V.col(k).dot(w));
      // Full reorthogonalization, twice.
      for (int pass = 0; pass < 2; ++pass)
        w -= V.leftCols(k + 1) * (V.leftCols(k + 1).transpose() * w);
      double b = w.norm();

      Mat T = Mat::Zero(k + 1, k + 1);
      for (Eigen::Index i = 0; i <= k; ++i) {
        T(i, i) = alpha[static_cast<size_t>(i)];
        if (i < k)
          T(i, i + 1) = T(i + 1, i) = beta[static_cast<size_t>(i)];
      }
      Eigen::SelfAdjointEigenSolver<Mat> es(T);
      theta = es.eigenvalues()[0];
      ritz_coeffs = es.eigenvectors().col(0);
      double residual = b * std::abs(ritz_coeffs[k]);
      if (residual < residual_tolerance || b < 1e-12 || k + 1 == dim)
        return {theta, total_iterations};
      beta.push_back(b);
      if (k + 1 < m)
        V.col(k + 1) = w / b;
    }
    start = V * ritz_coeffs;
    start.normalize();
  }
  throw ConvergenceError(
      fmt::format("Lanczos did not converge after {} iterations", total_iterations));
}

} // namespace

std::vector<std::uint64_t> sector_states(int n_qubits, const Sector &sector) {
  const std::uint64_t alpha_mask = 0x5555555555555555ULL;
  const double twice_sz = 2.0 * sector.s_z;
  std::vector<std::uint64_t> states;
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  for (std::uint64_t b = 0; b < dim; ++b) {
    int n = __builtin_popcountll(b);
    if (n != sector.n_electrons)
      continue;
    int na = __builtin_popcountll(b & alpha_mask);
    if (std::abs((na - (n - na)) - twice_sz) < 1e-9)
      states.push_back(b);
  }
  return states;
}

GroundState ground_state(const QubitHamiltonian &H, std::optional<Sector> sector,
                         EigenMethod method) {
  const int nq = H.n_qubits();
  if (nq > max_qubits)
    throw InputError(fmt::format("{} qubits exceeds the exact-solver limit of {}", nq, max_qubits));

  std::vector<std::uint64_t> states;
  if (sector) {
    states = sector_states(nq, *sector);
  } else {
    states.resize(std::uint64_t{1} << nq);
    for (std::uint64_t b = 0; b < states.size(); ++b)
      states[b] = b;
  }
  if (states.empty())
    throw InputError(fmt::format("sector (N = {}, S_z = {}) is empty on {} qubits",
                                 sector ? sector->n_electrons : 0, sector ? sector->s_z : 0.0, nq));

  GroundState gs;
  gs.n_qubits = nq;
  gs.sector = sector;
  gs.dimension = states.size();
  SparseMat A = sector_matrix(H, states);
  if (method == EigenMethod::dense) {
    if (states.size() > max_dense_dimension)
      throw InputError("dense diagonalization requested for too large a space");
    Eigen::SelfAdjointEigenSolver<Mat> es(Mat(A), Eigen::EigenvaluesOnly);
    gs.energy = es.eigenvalues()[0];
  } else {
    auto res = lanczos_lowest(A);
    gs.energy = res.value;
    gs.iterations = res.iterations;
  }
  return gs;
}

namespace {

std::vector<std::uint32_t> combinations(int n, int k) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t b = 0; b < (1U << n); ++b)
    if (__builtin_popcount(b) == k)
      out.push_back(b);
  return out;
}

// Apply a (creation=false) or a+ (creation=true) on mode k; returns 0 if annihilated.
int apply_ladder(std::uint32_t &det, int k, bool creation) {
  const std::uint32_t bit = 1U << k;
  if (creation == static_cast<bool>(det & bit))
    return 0;
  int sign = (__builtin_popcount(det & (bit - 1)) % 2 == 0) ? 1 : -1;
  det ^= bit;
  return sign;
}

} // namespace

double fci_oracle(const Molecule &mol, const BasisSet &basis, const IntegralSet &ints) {
  const int K = static_cast<int>(basis.size());
  if (K > 8)
    throw InputError(fmt::format("FCI oracle limited to 8 spatial orbitals (got {})", K));
  const int n_alpha = mol.n_electrons() / 2;
  if (n_alpha > K)
    throw InputError("more electron pairs than orbitals");

  // Loewdin-orthogonalized AO basis; FCI is invariant to the orbital choice.
  Eigen::SelfAdjointEigenSolver<Mat> es(ints.S);
  const Mat X = es.eigenvectors() * es.eigenvalues().cwiseInverse().cwiseSqrt().asDiagonal() *
                es.eigenvectors().transpose();
  const Mat h = X.transpose() * ints.h_core * X;
  Mat G(K * K, K * K);
  for (int i = 0; i < K; ++i)
    for (int j = 0; j < K; ++j)
      for (int k = 0; k < K; ++k)
        for (int l = 0; l < K; ++l)
          G(i * K + j, k * K + l) = ints.eri(i, j, k, l);
  Mat XX(K * K, K * K);
  for (int i = 0; i < K; ++i)
    for (int j = 0; j < K; ++j)
      for (int a = 0; a < K; ++a)
        for (int b = 0; b < K; ++b)
          XX(i * K + j, a * K + b) = X(i, a) * X(j, b);
  const Mat g = XX.transpose() * G * XX; // (ab|cd) at [a*K+b, c*K+d]

  auto spatial = [K](int so) { return so % K; };
  auto spin = [K](int so) { return so / K; };
  // <pq|rs> antisymmetrized over spin orbitals.
  auto anti = [&](int p, int q, int r, int s) {
    double direct = 0.0, exchange = 0.0;
    if (spin(p) == spin(r) && spin(q) == spin(s))
      direct = g(spatial(p) * K + spatial(r), spatial(q) * K + spatial(s));
    if (spin(p) == spin(s) && spin(q) == spin(r))
      exchange = g(spatial(p) * K + spatial(s), spatial(q) * K + spatial(r));
    return direct - exchange;
  };
  auto one = [&](int p, int q) { return spin(p) == spin(q) ? h(spatial(p), spatial(q)) : 0.0; };

  // Determinants as spin-orbital bit strings: bits 0..K-1 alpha, K..2K-1 beta.
  std::vector<std::uint32_t> dets;
  for (auto a : combinations(K, n_alpha))
    for (auto b : combinations(K, n_alpha))
      dets.push_back(a | (b << K));
  const auto dim = static_cast<Eigen::Index>(dets.size());

  auto occupied = [&](std::uint32_t d) {
    std::vector<int> occ;
    for (int k = 0; k < 2 * K; ++k)
      if (d & (1U << k))
        occ.push_back(k);
    return occ;
  };

  Mat H = Mat::Zero(dim, dim);
  for (Eigen::Index I = 0; I < dim; ++I) {
    for (Eigen::Index J = 0; J <= I; ++J) {
      const std::uint32_t dI = dets[I], dJ = dets[J];
      const int ndiff = __builtin_popcount(dI ^ dJ) / 2;
      double value = 0.0;
      if (ndiff == 0) {
        auto occ = occupied(dI);
        for (int i : occ)
          value += one(i, i);
        for (int i : occ)
          for (int j : occ)
            value += 0.5 * anti(i, j, i, j);
      } else if (ndiff == 1) {
        int m = __builtin_ctz(dI & ~dJ), p = __builtin_ctz(dJ & ~dI);
        std::uint32_t d = dJ;
        int sign = apply_ladder(d, p, false);
        sign *= apply_ladder(d, m, true);
        value = one(m, p);
        for (int k : occupied(dI & dJ))
          value += anti(m, k, p, k);
        value *= sign;
      } else if (ndiff == 2) {
        std::uint32_t onlyI = dI & ~dJ, onlyJ = dJ & ~dI;
        int m = __builtin_ctz(onlyI);
        int n = 31 - __builtin_clz(onlyI);
        int p = __builtin_ctz(onlyJ);
        int q = 31 - __builtin_clz(onlyJ);
        std::uint32_t d = dJ;
        int sign = apply_ladder(d, p, false);
        sign *= apply_ladder(d, q, false);
        sign *= apply_ladder(d, n, true);
        sign *= apply_ladder(d, m, true);
        value = sign * anti(m, n, p, q);
      }
      H(I, J) = H(J, I) = value;
    }
  }
  Eigen::SelfAdjointEigenSolver<Mat> fci(H, Eigen::EigenvaluesOnly);
  return fci.eigenvalues()[0] + nuclear_repulsion(mol);
}

} // namespace projemb
