#include <projemb/boys.h>
#include <projemb/integrals.h>

#include <array>
#include <cmath>
#include <fmt/core.h>
#include <fmt/os.h>
#include <numbers>

namespace projemb {

EriTensor::EriTensor(size_t n) : m_n(n) {
  size_t npair = n * (n + 1) / 2;
  m_packed.assign(npair * (npair + 1) / 2, 0.0);
}

std::vector<double> EriTensor::to_dense() const {
  std::vector<double> dense(m_n * m_n * m_n * m_n);
  for (size_t i = 0; i < m_n; ++i)
    for (size_t j = 0; j < m_n; ++j)
      for (size_t k = 0; k < m_n; ++k)
        for (size_t l = 0; l < m_n; ++l)
          dense[((i * m_n + j) * m_n + k) * m_n + l] = (*this)(i, j, k, l);
  return dense;
}

namespace {

constexpr int max_l = 3; // p functions plus the +2 raise used by the kinetic integral

/// Hermite expansion coefficients E^{ij}_t of a 1D Gaussian product.
struct Hermite1D {
  std::array<std::array<std::array<double, 2 * max_l + 2>, max_l + 1>, max_l + 1> e{};

  Hermite1D(int imax, int jmax, double a, double b, double A, double B) {
    const double p = a + b;
    const double xab = A - B;
    const double xpa = -b / p * xab;
    const double xpb = a / p * xab;
    const double inv2p = 0.5 / p;
    e[0][0][0] = std::exp(-a * b / p * xab * xab);
    for (int i = 0; i <= imax; ++i) {
      for (int j = 0; j <= jmax; ++j) {
        if (i == 0 && j == 0)
          continue;
        for (int t = 0; t <= i + j; ++t) {
          double v = 0.0;
          if (i > 0) {
            const auto &prev = e[i - 1][j];
            if (t > 0)
              v += inv2p * prev[t - 1];
            v += xpa * prev[t];
            v += (t + 1) * prev[t + 1];
          } else {
            const auto &prev = e[i][j - 1];
            if (t > 0)
              v += inv2p * prev[t - 1];
            v += xpb * prev[t];
            v += (t + 1) * prev[t + 1];
          }
          e[i][j][t] = v;
        }
      }
    }
  }
};

/// Hermite Coulomb integrals R_{tuv}(alpha, PC) for t+u+v <= L.
class HermiteR {
public:
  HermiteR(int L, double alpha, const Vec3 &pc) : m_dim(L + 1) {
    m_data.assign(m_dim * m_dim * m_dim * m_dim, 0.0);
    std::array<double, 16> boys{};
    boys_function(alpha * pc.squaredNorm(), std::span<double>(boys.data(), L + 1));
    double factor = 1.0;
    for (int n = 0; n <= L; ++n) {
      at(n, 0, 0, 0) = factor * boys[n];
      factor *= -2.0 * alpha;
    }
    for (int n = L - 1; n >= 0; --n) {
      for (int t = 0; t <= L - n; ++t) {
        for (int u = 0; u <= L - n - t; ++u) {
          for (int v = 0; v <= L - n - t - u; ++v) {
            if (t + u + v == 0)
              continue;
            double r;
            if (t > 0) {
              r = pc[0] * at(n + 1, t - 1, u, v);
              if (t > 1)
                r += (t - 1) * at(n + 1, t - 2, u, v);
            } else if (u > 0) {
              r = pc[1] * at(n + 1, t, u - 1, v);
              if (u > 1)
                r += (u - 1) * at(n + 1, t, u - 2, v);
            } else {
              r = pc[2] * at(n + 1, t, u, v - 1);
              if (v > 1)
                r += (v - 1) * at(n + 1, t, u, v - 2);
            }
            at(n, t, u, v) = r;
          }
        }
      }
    }
  }

  double operator()(int t, int u, int v) const {
    return m_data[((0 * m_dim + t) * m_dim + u) * m_dim + v];
  }

private:
  double &at(int n, int t, int u, int v) {
    return m_data[((static_cast<size_t>(n) * m_dim + t) * m_dim + u) * m_dim + v];
  }
  size_t m_dim;
  std::vector<double> m_data;
};

/// One primitive pair of an AO pair, reduced to its Hermite expansion.
struct PrimitivePair {
  double p{0.0};
  Vec3 P{Vec3::Zero()};
  struct Term {
    int t, u, v;
    double value;
  };
  std::vector<Term> hermite; // includes contraction coefficients
};

std::vector<PrimitivePair> primitive_pairs(const BasisSet &basis, size_t i, size_t j) {
  const auto &fi = basis.functions()[i];
  const auto &fj = basis.functions()[j];
  const auto &si = basis.shells()[fi.shell];
  const auto &sj = basis.shells()[fj.shell];
  std::vector<PrimitivePair> out;
  for (size_t a = 0; a < si.exponents.size(); ++a) {
    for (size_t b = 0; b < sj.exponents.size(); ++b) {
      double ea = si.exponents[a], eb = sj.exponents[b];
      PrimitivePair pp;
      pp.p = ea + eb;
      pp.P = (ea * si.center + eb * sj.center) / pp.p;
      std::array<Hermite1D, 3> e{
          Hermite1D(fi.powers[0], fj.powers[0], ea, eb, si.center[0], sj.center[0]),
          Hermite1D(fi.powers[1], fj.powers[1], ea, eb, si.center[1], sj.center[1]),
          Hermite1D(fi.powers[2], fj.powers[2], ea, eb, si.center[2], sj.center[2])};
      double c = si.coefficients[a] * sj.coefficients[b];
      const auto &ex = e[0].e[fi.powers[0]][fj.powers[0]];
      const auto &ey = e[1].e[fi.powers[1]][fj.powers[1]];
      const auto &ez = e[2].e[fi.powers[2]][fj.powers[2]];
      for (int t = 0; t <= fi.powers[0] + fj.powers[0]; ++t)
        for (int u = 0; u <= fi.powers[1] + fj.powers[1]; ++u)
          for (int v = 0; v <= fi.powers[2] + fj.powers[2]; ++v)
            pp.hermite.push_back({t, u, v, c * ex[t] * ey[u] * ez[v]});
      out.push_back(std::move(pp));
    }
  }
  return out;
}

int pair_order(const BasisSet &basis, size_t i, size_t j) {
  const auto &fi = basis.functions()[i];
  const auto &fj = basis.functions()[j];
  return fi.powers[0] + fi.powers[1] + fi.powers[2] + fj.powers[0] + fj.powers[1] +
         fj.powers[2];
}

// 1D overlap of primitives x^i e^{-a(x-A)^2} and x^j e^{-b(x-B)^2}, without normalization.
double overlap_1d(int i, int j, double a, double b, double A, double B) {
  if (i < 0 || j < 0)
    return 0.0;
  Hermite1D e(i, j, a, b, A, B);
  return e.e[i][j][0] * std::sqrt(std::numbers::pi / (a + b));
}

template <typename PrimitiveKernel>
Mat one_electron(const BasisSet &basis, PrimitiveKernel kernel) {
  const size_t n = basis.size();
  Mat M(n, n);
  for (size_t i = 0; i < n; ++i) {
    const auto &fi = basis.functions()[i];
    const auto &si = basis.shells()[fi.shell];
    for (size_t j = 0; j <= i; ++j) {
      const auto &fj = basis.functions()[j];
      const auto &sj = basis.shells()[fj.shell];
      double sum = 0.0;
      for (size_t a = 0; a < si.exponents.size(); ++a)
        for (size_t b = 0; b < sj.exponents.size(); ++b)
          sum += si.coefficients[a] * sj.coefficients[b] *
                 kernel(fi.powers, fj.powers, si.exponents[a], sj.exponents[b], si.center,
                        sj.center);
      M(i, j) = M(j, i) = sum;
    }
  }
  return M;
}

} // namespace

Mat overlap_matrix(const BasisSet &basis) {
  return one_electron(basis, [](const auto &li, const auto &lj, double a, double b,
                                const Vec3 &A, const Vec3 &B) {
    double s = 1.0;
    for (int d = 0; d < 3; ++d)
      s *= overlap_1d(li[d], lj[d], a, b, A[d], B[d]);
    return s;
  });
}

Mat kinetic_matrix(const BasisSet &basis) {
  return one_electron(basis, [](const auto &li, const auto &lj, double a, double b,
                                const Vec3 &A, const Vec3 &B) {
    std::array<double, 3> s{}, t{};
    for (int d = 0; d < 3; ++d) {
      int i = li[d], j = lj[d];
      s[d] = overlap_1d(i, j, a, b, A[d], B[d]);
      t[d] = -0.5 * (j * (j - 1) * overlap_1d(i, j - 2, a, b, A[d], B[d]) -
                     2.0 * b * (2 * j + 1) * s[d] +
                     4.0 * b * b * overlap_1d(i, j + 2, a, b, A[d], B[d]));
    }
    return t[0] * s[1] * s[2] + s[0] * t[1] * s[2] + s[0] * s[1] * t[2];
  });
}

Mat nuclear_attraction_matrix(const BasisSet &basis, const Molecule &mol) {
  const size_t n = basis.size();
  Mat V = Mat::Zero(n, n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j <= i; ++j) {
      const int L = pair_order(basis, i, j);
      double sum = 0.0;
      for (const auto &pp : primitive_pairs(basis, i, j)) {
        double pref = 2.0 * std::numbers::pi / pp.p;
        for (const auto &atom : mol.atoms()) {
          HermiteR R(L, pp.p, pp.P - atom.position);
          double acc = 0.0;
          for (const auto &h : pp.hermite)
            acc += h.value * R(h.t, h.u, h.v);
          sum -= atom.atomic_number * pref * acc;
        }
      }
      V(i, j) = V(j, i) = sum;
    }
  }
  return V;
}

Mat core_hamiltonian(const BasisSet &basis, const Molecule &mol) {
  return kinetic_matrix(basis) + nuclear_attraction_matrix(basis, mol);
}

EriTensor eri_tensor(const BasisSet &basis) {
  const size_t n = basis.size();
  EriTensor eri(n);

  std::vector<std::vector<PrimitivePair>> pairs(n * (n + 1) / 2);
  std::vector<int> orders(n * (n + 1) / 2);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j <= i; ++j) {
      pairs[EriTensor::pair_index(i, j)] = primitive_pairs(basis, i, j);
      orders[EriTensor::pair_index(i, j)] = pair_order(basis, i, j);
    }
  }

  const double pi_52 = 2.0 * std::pow(std::numbers::pi, 2.5);
  for (size_t ij = 0; ij < pairs.size(); ++ij) {
    for (size_t kl = 0; kl <= ij; ++kl) {
      const int L = orders[ij] + orders[kl];
      double sum = 0.0;
      for (const auto &bra : pairs[ij]) {
        for (const auto &ket : pairs[kl]) {
          double p = bra.p, q = ket.p;
          double alpha = p * q / (p + q);
          HermiteR R(L, alpha, bra.P - ket.P);
          double acc = 0.0;
          for (const auto &hb : bra.hermite) {
            for (const auto &hk : ket.hermite) {
              double sign = ((hk.t + hk.u + hk.v) % 2 == 0) ? 1.0 : -1.0;
              acc += sign * hb.value * hk.value * R(hb.t + hk.t, hb.u + hk.u, hb.v + hk.v);
            }
          }
          sum += pi_52 / (p * q * std::sqrt(p + q)) * acc;
        }
      }
      eri.set_pairs(ij, kl, sum);
    }
  }
  return eri;
}

IntegralSet compute_integrals(const BasisSet &basis, const Molecule &mol) {
  IntegralSet ints;
  ints.S = overlap_matrix(basis);
  ints.T = kinetic_matrix(basis);
  ints.V = nuclear_attraction_matrix(basis, mol);
  ints.h_core = ints.T + ints.V;
  ints.eri = eri_tensor(basis);
  return ints;
}

void write_integral_dump(const IntegralSet &ints, const std::string &path) {
  auto out = fmt::output_file(path);
  const size_t n = ints.S.rows();
  out.print("# kind i j [k l] value\n");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j <= i; ++j)
      out.print("S {} {} {:.16e}\n", i, j, ints.S(i, j));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j <= i; ++j)
      out.print("H {} {} {:.16e}\n", i, j, ints.h_core(i, j));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j <= i; ++j)
      for (size_t k = 0; k < n; ++k)
        for (size_t l = 0; l <= k; ++l)
          if (EriTensor::pair_index(i, j) >= EriTensor::pair_index(k, l))
            out.print("ERI {} {} {} {} {:.16e}\n", i, j, k, l, ints.eri(i, j, k, l));
}

} // namespace projemb
