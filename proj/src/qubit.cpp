#include <projemb/qubit.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <fmt/core.h>
#include <json.hpp>
#include <map>
#include <unordered_map>

namespace projemb {

namespace {

constexpr double imaginary_tolerance = 1e-10;

struct WordHash {
  size_t operator()(const PauliWord &w) const noexcept {
    return std::hash<std::uint64_t>{}(w.x * 0x9e3779b97f4a7c15ULL ^ w.z);
  }
};

using cplx = std::complex<double>;
// Coefficients of X^x Z^z products (X part to the left).
using XZSum = std::unordered_map<PauliWord, cplx, WordHash>;

XZSum ladder_expansion(const LadderOp &op) {
  const std::uint64_t bit = std::uint64_t{1} << op.mode;
  const std::uint64_t lower = bit - 1;
  // a = 1/2 (X - XZ) Z_lower,  a+ = 1/2 (X + XZ) Z_lower, using iY = -XZ.
  const double sign = op.creation ? 0.5 : -0.5;
  XZSum out;
  out[{bit, lower}] = 0.5;
  out[{bit, lower | bit}] = sign;
  return out;
}

XZSum multiply(const XZSum &lhs, const XZSum &rhs) {
  XZSum out;
  for (const auto &[wl, cl] : lhs) {
    for (const auto &[wr, cr] : rhs) {
      double sign = (__builtin_popcountll(wl.z & wr.x) % 2 == 0) ? 1.0 : -1.0;
      out[{wl.x ^ wr.x, wl.z ^ wr.z}] += sign * cl * cr;
    }
  }
  return out;
}

// (-i)^n
cplx minus_i_power(int n) {
  switch (n % 4) {
  case 0: return {1.0, 0.0};
  case 1: return {0.0, -1.0};
  case 2: return {-1.0, 0.0};
  default: return {0.0, 1.0};
  }
}

// Real phase of a word acting on basis state b: i^{ny} (-1)^{|b & z|}.
inline double word_phase(const PauliWord &w, std::uint64_t b) {
  int ny = w.y_count();
  double phase = (ny / 2) % 2 == 0 ? 1.0 : -1.0;
  if (__builtin_popcountll(b & w.z) % 2 != 0)
    phase = -phase;
  return phase;
}

} // namespace

std::string PauliWord::label(int n_qubits) const {
  std::string s(static_cast<size_t>(n_qubits), 'I');
  for (int q = 0; q < n_qubits; ++q) {
    bool bx = (x >> q) & 1U, bz = (z >> q) & 1U;
    s[static_cast<size_t>(q)] = bx ? (bz ? 'Y' : 'X') : (bz ? 'Z' : 'I');
  }
  return s;
}

PauliWord PauliWord::from_label(const std::string &label) {
  if (label.size() > 64)
    throw InputError("Pauli words are limited to 64 qubits");
  PauliWord w;
  for (size_t q = 0; q < label.size(); ++q) {
    std::uint64_t bit = std::uint64_t{1} << q;
    switch (label[q]) {
    case 'I': break;
    case 'X': w.x |= bit; break;
    case 'Y': w.x |= bit; w.z |= bit; break;
    case 'Z': w.z |= bit; break;
    default: throw InputError(fmt::format("invalid Pauli character '{}'", label[q]));
    }
  }
  return w;
}

QubitHamiltonian::QubitHamiltonian(int n_qubits, std::vector<PauliTerm> terms,
                                   double classical_constant, double prune)
    : m_n_qubits(n_qubits), m_classical_constant(classical_constant) {
  if (n_qubits < 0 || n_qubits > 64)
    throw InputError(fmt::format("unsupported qubit count {}", n_qubits));
  std::map<std::string, PauliTerm> merged;
  for (const auto &t : terms) {
    auto [it, inserted] = merged.try_emplace(t.word.label(n_qubits), t);
    if (!inserted)
      it->second.coeff += t.coeff;
  }
  for (auto &[label, term] : merged)
    if (std::abs(term.coeff) >= prune)
      m_terms.push_back(term);
}

double QubitHamiltonian::identity_coefficient() const {
  for (const auto &t : m_terms)
    if (t.word.x == 0 && t.word.z == 0)
      return t.coeff;
  return 0.0;
}

Vec QubitHamiltonian::apply(const Vec &state) const {
  const std::uint64_t dim = std::uint64_t{1} << m_n_qubits;
  if (static_cast<std::uint64_t>(state.size()) != dim)
    throw InputError("state vector dimension does not match the qubit count");
  Vec out = Vec::Zero(state.size());
  for (const auto &t : m_terms) {
    if (t.word.y_count() % 2 != 0)
      throw Error("odd number of Y factors: Hamiltonian is not real symmetric");
    for (std::uint64_t b = 0; b < dim; ++b)
      out[static_cast<Eigen::Index>(b ^ t.word.x)] +=
          t.coeff * word_phase(t.word, b) * state[static_cast<Eigen::Index>(b)];
  }
  return out;
}

Mat QubitHamiltonian::dense_matrix() const {
  if (m_n_qubits > 14)
    throw InputError("dense matrices are limited to 14 qubits");
  const std::uint64_t dim = std::uint64_t{1} << m_n_qubits;
  Mat M = Mat::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (const auto &t : m_terms) {
    if (t.word.y_count() % 2 != 0)
      throw Error("odd number of Y factors: Hamiltonian is not real symmetric");
    for (std::uint64_t b = 0; b < dim; ++b)
      M(static_cast<Eigen::Index>(b ^ t.word.x), static_cast<Eigen::Index>(b)) +=
          t.coeff * word_phase(t.word, b);
  }
  return M;
}

std::string QubitHamiltonian::to_json(int indent) const {
  nlohmann::ordered_json j;
  j["n_qubits"] = m_n_qubits;
  j["constant"] = m_classical_constant;
  auto terms = nlohmann::ordered_json::array();
  for (const auto &t : m_terms)
    terms.push_back({{"pauli", t.word.label(m_n_qubits)}, {"coeff", t.coeff}});
  j["terms"] = std::move(terms);
  return j.dump(indent);
}

QubitHamiltonian QubitHamiltonian::from_json(const std::string &text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    int n = j.at("n_qubits").get<int>();
    std::vector<PauliTerm> terms;
    for (const auto &t : j.at("terms")) {
      auto label = t.at("pauli").get<std::string>();
      if (static_cast<int>(label.size()) != n)
        throw InputError(fmt::format("Pauli word '{}' has the wrong length", label));
      terms.push_back({PauliWord::from_label(label), t.at("coeff").get<double>()});
    }
    return QubitHamiltonian(n, std::move(terms), j.value("constant", 0.0), 0.0);
  } catch (const nlohmann::json::exception &e) {
    throw InputError(fmt::format("malformed Hamiltonian JSON: {}", e.what()));
  }
}

QubitHamiltonian jordan_wigner(const FermionOperator &op, double classical_constant) {
  if (op.n_modes > 64)
    throw InputError("Jordan-Wigner mapping limited to 64 modes");
  XZSum total;
  total[{0, 0}] += op.constant;
  for (const auto &term : op.terms) {
    XZSum product;
    product[{0, 0}] = term.coeff;
    for (const auto &ladder : term.ops) {
      if (ladder.mode < 0 || ladder.mode >= op.n_modes)
        throw InputError(fmt::format("ladder operator on mode {} outside 0..{}", ladder.mode,
                                     op.n_modes - 1));
      product = multiply(product, ladder_expansion(ladder));
    }
    for (const auto &[w, c] : product)
      total[w] += c;
  }

  std::vector<PauliTerm> terms;
  terms.reserve(total.size());
  for (const auto &[w, c] : total) {
    cplx value = c * minus_i_power(w.y_count());
    if (std::abs(value.imag()) > imaginary_tolerance)
      throw Error(fmt::format("non-Hermitian input: Pauli word {} has imaginary coefficient {:.3e}",
                              w.label(op.n_modes), value.imag()));
    terms.push_back({w, value.real()});
  }
  // The classical constant rides on the identity word.
  terms.push_back({{0, 0}, classical_constant});
  return QubitHamiltonian(op.n_modes, std::move(terms), classical_constant);
}

size_t term_count(const QubitHamiltonian &H) { return H.terms().size(); }

Mat number_operator_matrix(int n_qubits) {
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  Vec d(static_cast<Eigen::Index>(dim));
  for (std::uint64_t b = 0; b < dim; ++b)
    d[static_cast<Eigen::Index>(b)] = __builtin_popcountll(b);
  return d.asDiagonal();
}

Mat sz_operator_matrix(int n_qubits) {
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  const std::uint64_t alpha_mask = 0x5555555555555555ULL;
  Vec d(static_cast<Eigen::Index>(dim));
  for (std::uint64_t b = 0; b < dim; ++b)
    d[static_cast<Eigen::Index>(b)] =
        0.5 * (__builtin_popcountll(b & alpha_mask) - __builtin_popcountll(b & ~alpha_mask));
  return d.asDiagonal();
}

} // namespace projemb
