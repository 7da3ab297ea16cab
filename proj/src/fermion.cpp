#include <projemb/fermion.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <utility>

namespace projemb {

MOIntegrals mo_transform(const Mat &h_ao, const EriTensor &eri_ao, const Mat &C,
                         double core_constant) {
  const size_t K = static_cast<size_t>(C.rows());
  const size_t M = static_cast<size_t>(C.cols());
  MOIntegrals mo;
  mo.h = C.transpose() * h_ao * C;
  mo.h = 0.5 * (mo.h + mo.h.transpose()).eval();
  mo.core_constant = core_constant;

  // One index at a time: (ij|kl) -> (aj|kl) -> (ab|kl) -> (ab|cl) -> (ab|cd).
  std::vector<double> in = eri_ao.to_dense();
  std::array<size_t, 4> dims{K, K, K, K};
  for (int slot = 0; slot < 4; ++slot) {
    std::array<size_t, 4> out_dims = dims;
    out_dims[slot] = M;
    std::vector<double> out(out_dims[0] * out_dims[1] * out_dims[2] * out_dims[3], 0.0);
    for (size_t i0 = 0; i0 < out_dims[0]; ++i0)
      for (size_t i1 = 0; i1 < out_dims[1]; ++i1)
        for (size_t i2 = 0; i2 < out_dims[2]; ++i2)
          for (size_t i3 = 0; i3 < out_dims[3]; ++i3) {
            std::array<size_t, 4> idx{i0, i1, i2, i3};
            const size_t a = idx[slot];
            double sum = 0.0;
            for (size_t mu = 0; mu < K; ++mu) {
              idx[slot] = mu;
              sum += C(static_cast<Eigen::Index>(mu), static_cast<Eigen::Index>(a)) *
                     in[((idx[0] * dims[1] + idx[1]) * dims[2] + idx[2]) * dims[3] + idx[3]];
            }
            out[((i0 * out_dims[1] + i1) * out_dims[2] + i2) * out_dims[3] + i3] = sum;
          }
    in = std::move(out);
    dims = out_dims;
  }
  mo.g = std::move(in);
  return mo;
}

FermionOperator second_quantize(const MOIntegrals &mo, double tolerance) {
  const int M = static_cast<int>(mo.n_orbitals());
  FermionOperator op;
  op.n_modes = 2 * M;
  op.constant = mo.core_constant;

  for (int p = 0; p < M; ++p) {
    for (int q = 0; q < M; ++q) {
      double h = mo.h(p, q);
      if (std::abs(h) <= tolerance)
        continue;
      for (int spin = 0; spin < 2; ++spin)
        op.terms.push_back({h, {{spin_orbital(p, spin), true}, {spin_orbital(q, spin), false}}});
    }
  }

  // <pq|rs> = (pr|qs) for spin orbitals sharing spin between p,r and q,s.
  for (int p = 0; p < M; ++p)
    for (int q = 0; q < M; ++q)
      for (int r = 0; r < M; ++r)
        for (int s = 0; s < M; ++s) {
          double v = 0.5 * mo.eri(p, r, q, s);
          if (std::abs(v) <= tolerance)
            continue;
          for (int sigma = 0; sigma < 2; ++sigma) {
            for (int tau = 0; tau < 2; ++tau) {
              int P = spin_orbital(p, sigma), Q = spin_orbital(q, tau);
              int R = spin_orbital(r, sigma), S = spin_orbital(s, tau);
              if (P == Q || R == S)
                continue;
              op.terms.push_back({v, {{P, true}, {Q, true}, {S, false}, {R, false}}});
            }
          }
        }
  return op;
}

FermionOperator FermionOperator::hermitian_conjugate() const {
  FermionOperator out;
  out.n_modes = n_modes;
  out.constant = constant;
  out.terms.reserve(terms.size());
  for (const auto &t : terms) {
    FermionTerm c{t.coeff, {}};
    for (auto it = t.ops.rbegin(); it != t.ops.rend(); ++it)
      c.ops.push_back({it->mode, !it->creation});
    out.terms.push_back(std::move(c));
  }
  return out;
}

FermionOperator FermionOperator::normal_ordered(double tolerance) const {
  using Key = std::vector<std::pair<int, bool>>;
  std::map<Key, double> merged;
  double scalar = constant;

  std::vector<FermionTerm> work(terms.begin(), terms.end());
  while (!work.empty()) {
    FermionTerm term = std::move(work.back());
    work.pop_back();
    auto &ops = term.ops;
    bool zero = false;
    for (size_t i = 1; i < ops.size() && !zero; ++i) {
      for (size_t j = i; j > 0; --j) {
        LadderOp &left = ops[j - 1];
        LadderOp &right = ops[j];
        if (right.creation && !left.creation) {
          if (left.mode == right.mode) {
            FermionTerm contracted{term.coeff, {}};
            for (size_t k = 0; k < ops.size(); ++k)
              if (k != j - 1 && k != j)
                contracted.ops.push_back(ops[k]);
            work.push_back(std::move(contracted));
          }
          std::swap(left, right);
          term.coeff = -term.coeff;
        } else if (right.creation == left.creation) {
          if (right.mode == left.mode) {
            zero = true;
            break;
          }
          if (right.mode > left.mode) {
            std::swap(left, right);
            term.coeff = -term.coeff;
          }
        }
      }
    }
    if (zero)
      continue;
    if (ops.empty()) {
      scalar += term.coeff;
      continue;
    }
    Key key;
    for (const auto &o : ops)
      key.emplace_back(o.mode, o.creation);
    merged[key] += term.coeff;
  }

  FermionOperator out;
  out.n_modes = n_modes;
  out.constant = scalar;
  for (const auto &[key, coeff] : merged) {
    if (std::abs(coeff) <= tolerance)
      continue;
    FermionTerm t{coeff, {}};
    for (const auto &[mode, creation] : key)
      t.ops.push_back({mode, creation});
    out.terms.push_back(std::move(t));
  }
  return out;
}

} // namespace projemb
