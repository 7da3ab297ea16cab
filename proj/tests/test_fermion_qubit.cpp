#include "common.h"
#include <catch_amalgamated.hpp>
#include <map>
#include <random>

using Catch::Matchers::WithinAbs;
using namespace projemb;

namespace {

// Occupation-number matrix of a fermion operator, built directly from the
// anticommutation sign rule: a_p picks up (-1)^(occupied modes below p).
Mat brute_force_matrix(const FermionOperator &op) {
  const size_t dim = size_t{1} << op.n_modes;
  Mat M = op.constant * Mat::Identity(dim, dim);
  for (const auto &term : op.terms) {
    for (size_t col = 0; col < dim; ++col) {
      size_t state = col;
      double sign = term.coeff;
      bool alive = true;
      for (auto it = term.ops.rbegin(); it != term.ops.rend() && alive; ++it) {
        const size_t bit = size_t{1} << it->mode;
        const bool occ = state & bit;
        if (occ == it->creation) {
          alive = false;
          break;
        }
        if (__builtin_popcountll(state & (bit - 1)) % 2)
          sign = -sign;
        state ^= bit;
      }
      if (alive)
        M(static_cast<Eigen::Index>(state), static_cast<Eigen::Index>(col)) += sign;
    }
  }
  return M;
}

FermionTerm term(double c, std::vector<LadderOp> ops) { return {c, std::move(ops)}; }
LadderOp cr(int p) { return {p, true}; }
LadderOp an(int p) { return {p, false}; }

MOIntegrals h2_integrals() {
  auto sys = testing::solve("h2.xyz");
  return mo_transform(sys.ints.h_core, sys.ints.eri, sys.rhf.C);
}

} // namespace

TEST_CASE("number operator maps to (I - Z)/2") {
  FermionOperator n0{1, 0.0, {term(1.0, {cr(0), an(0)})}};
  QubitHamiltonian H = jordan_wigner(n0);
  REQUIRE(term_count(H) == 2);
  std::map<std::string, double> c;
  for (const auto &t : H.terms())
    c[t.word.label(1)] = t.coeff;
  REQUIRE_THAT(c["I"], WithinAbs(0.5, 1e-15));
  REQUIRE_THAT(c["Z"], WithinAbs(-0.5, 1e-15));

  FermionOperator n01{2, 0.0, {term(0.7, {cr(0), an(0)}), term(0.7, {cr(1), an(1)})}};
  QubitHamiltonian H2 = jordan_wigner(n01);
  Mat expected = Mat::Zero(4, 4);
  expected.diagonal() << 0.0, 0.7, 0.7, 1.4;
  REQUIRE((H2.dense_matrix() - expected).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("hopping term maps to XX + YY") {
  FermionOperator hop{2, 0.0, {term(1.0, {cr(0), an(1)}), term(1.0, {cr(1), an(0)})}};
  QubitHamiltonian H = jordan_wigner(hop);
  REQUIRE(term_count(H) == 2);
  for (const auto &t : H.terms()) {
    const auto label = t.word.label(2);
    REQUIRE((label == "XX" || label == "YY"));
    REQUIRE_THAT(t.coeff, WithinAbs(0.5, 1e-15));
  }
}

TEST_CASE("Jordan-Wigner agrees with the occupation-number matrix") {
  MOIntegrals mo = h2_integrals();
  mo.core_constant = 0.3;
  FermionOperator op = second_quantize(mo);
  REQUIRE(op.n_modes == 4);
  Mat brute = brute_force_matrix(op);
  QubitHamiltonian H = jordan_wigner(op);
  REQUIRE((H.dense_matrix() - brute).cwiseAbs().maxCoeff() < 1e-12);

  // random Hermitian operator with up to four ladder factors
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> mode(0, 3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  FermionOperator r{4, 0.0, {}};
  for (int k = 0; k < 20; ++k) {
    int p = mode(rng), q = mode(rng), s = mode(rng), t = mode(rng);
    double c = u(rng);
    r.terms.push_back(term(c, {cr(p), cr(q), an(s), an(t)}));
    r.terms.push_back(term(c, {cr(t), cr(s), an(q), an(p)}));
    r.terms.push_back(term(c, {cr(p), an(q)}));
    r.terms.push_back(term(c, {cr(q), an(p)}));
  }
  Mat rb = brute_force_matrix(r);
  REQUIRE((rb - rb.transpose()).cwiseAbs().maxCoeff() < 1e-12);
  REQUIRE((jordan_wigner(r).dense_matrix() - rb).cwiseAbs().maxCoeff() < 1e-12);
  REQUIRE((brute_force_matrix(r.normal_ordered()) - rb).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("normal ordering and Hermitian conjugate") {
  // a_0 a+_0 = 1 - a+_0 a_0
  FermionOperator op{1, 0.0, {term(2.0, {an(0), cr(0)})}};
  FermionOperator n = op.normal_ordered();
  REQUIRE_THAT(n.constant, WithinAbs(2.0, 1e-15));
  REQUIRE(n.terms.size() == 1);
  REQUIRE_THAT(n.terms[0].coeff, WithinAbs(-2.0, 1e-15));

  // a+_0 a+_0 vanishes
  FermionOperator zero{1, 0.0, {term(1.0, {cr(0), cr(0)})}};
  REQUIRE(zero.normal_ordered().terms.empty());

  MOIntegrals mo = h2_integrals();
  FermionOperator H = second_quantize(mo);
  Mat a = brute_force_matrix(H);
  Mat b = brute_force_matrix(H.hermitian_conjugate());
  REQUIRE((a - b).cwiseAbs().maxCoeff() < 1e-12);
  REQUIRE((a - a.transpose()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("MO transform against a direct quadruple sum") {
  auto sys = testing::solve("h2o.xyz");
  const Mat &C = sys.rhf.C;
  MOIntegrals mo = mo_transform(sys.ints.h_core, sys.ints.eri, C);
  const size_t K = static_cast<size_t>(C.rows()), M = mo.n_orbitals();
  REQUIRE((mo.h - C.transpose() * sys.ints.h_core * C).cwiseAbs().maxCoeff() < 1e-12);
  REQUIRE((mo.h - mo.h.transpose()).cwiseAbs().maxCoeff() < 1e-12);

  auto Ci = [&](size_t mu, size_t p) {
    return C(static_cast<Eigen::Index>(mu), static_cast<Eigen::Index>(p));
  };
  for (auto [p, q, r, s] : {std::array<size_t, 4>{0, 0, 0, 0}, {1, 2, 3, 4}, {4, 4, 1, 1},
                            {6, 5, 2, 0}, {3, 3, 3, 6}, {2, 5, 2, 5}}) {
    double direct = 0.0;
    for (size_t a = 0; a < K; ++a)
      for (size_t b = 0; b < K; ++b)
        for (size_t c = 0; c < K; ++c)
          for (size_t d = 0; d < K; ++d)
            direct += Ci(a, p) * Ci(b, q) * Ci(c, r) * Ci(d, s) * sys.ints.eri(a, b, c, d);
    CAPTURE(p, q, r, s);
    REQUIRE_THAT(mo.eri(p, q, r, s), WithinAbs(direct, 1e-11));
    REQUIRE_THAT(mo.eri(r, s, p, q), WithinAbs(direct, 1e-11));
    REQUIRE_THAT(mo.eri(q, p, s, r), WithinAbs(direct, 1e-11));
  }
  REQUIRE(M == 7);
}

TEST_CASE("H2 qubit Hamiltonian") {
  MOIntegrals mo = h2_integrals();
  // textbook H2/STO-3G MO integrals at 0.7414 Angstrom
  REQUIRE_THAT(mo.h(0, 0), WithinAbs(-1.2528, 1e-3));
  REQUIRE_THAT(mo.h(1, 1), WithinAbs(-0.4756, 1e-3));
  REQUIRE_THAT(mo.eri(0, 0, 0, 0), WithinAbs(0.6746, 1e-3));
  REQUIRE_THAT(mo.eri(1, 1, 1, 1), WithinAbs(0.6975, 1e-3));
  REQUIRE_THAT(mo.eri(0, 0, 1, 1), WithinAbs(0.6636, 1e-3));
  REQUIRE_THAT(mo.eri(0, 1, 0, 1), WithinAbs(0.1813, 1e-3));

  auto sys = testing::solve("h2.xyz");
  QubitHamiltonian H = jordan_wigner(second_quantize(mo), sys.rhf.E_nuc);
  REQUIRE(H.n_qubits() == 4);
  REQUIRE(term_count(H) == 15);
  REQUIRE_THAT(H.classical_constant(), WithinAbs(sys.rhf.E_nuc, 1e-15));

  std::map<std::string, double> c;
  for (const auto &t : H.terms())
    c[t.word.label(4)] = t.coeff;
  for (const char *label : {"IIII", "ZIII", "IZII", "IIZI", "IIIZ", "ZZII", "ZIZI", "ZIIZ", "IZZI",
                            "IZIZ", "IIZZ", "XXYY", "XYYX", "YXXY", "YYXX"})
    REQUIRE(c.count(label) == 1);
  // alpha/beta symmetry and the exchange-type terms
  REQUIRE_THAT(c["ZIII"], WithinAbs(c["IZII"], 1e-12));
  REQUIRE_THAT(c["IIZI"], WithinAbs(c["IIIZ"], 1e-12));
  REQUIRE_THAT(c["ZIZI"], WithinAbs(c["IZIZ"], 1e-12));
  REQUIRE_THAT(c["ZIIZ"], WithinAbs(c["IZZI"], 1e-12));
  REQUIRE_THAT(c["XXYY"], WithinAbs(-c["XYYX"], 1e-12));
  REQUIRE_THAT(c["XYYX"], WithinAbs(c["YXXY"], 1e-12));
  REQUIRE_THAT(c["YYXX"], WithinAbs(c["XXYY"], 1e-12));
  // exchange integral enters as (01|01)/4 in both places
  REQUIRE_THAT(std::abs(c["XXYY"]), WithinAbs(mo.eri(0, 1, 0, 1) / 4.0, 1e-12));
  REQUIRE_THAT(c["ZIIZ"] - c["ZIZI"], WithinAbs(mo.eri(0, 1, 0, 1) / 4.0, 1e-12));
  // identity coefficient is the normalized trace
  REQUIRE_THAT(H.identity_coefficient(), WithinAbs(H.dense_matrix().trace() / 16.0, 1e-12));
}

TEST_CASE("qubit Hamiltonians conserve particle number and S_z") {
  for (const char *file : {"h2.xyz", "lih.xyz"}) {
    CAPTURE(file);
    auto sys = testing::solve(file);
    Mat C = sys.rhf.C.leftCols(std::min<Eigen::Index>(sys.rhf.C.cols(), 5));
    QubitHamiltonian H = jordan_wigner(second_quantize(mo_transform(sys.ints.h_core, sys.ints.eri, C)));
    Mat D = H.dense_matrix();
    REQUIRE((D - D.transpose()).cwiseAbs().maxCoeff() < 1e-12);
    Mat N = number_operator_matrix(H.n_qubits());
    Mat Sz = sz_operator_matrix(H.n_qubits());
    REQUIRE((D * N - N * D).cwiseAbs().maxCoeff() < 1e-10);
    REQUIRE((D * Sz - Sz * D).cwiseAbs().maxCoeff() < 1e-10);

    // apply() agrees with the dense matrix
    std::mt19937 rng(3);
    std::normal_distribution<double> g;
    Vec x(D.rows());
    for (Eigen::Index i = 0; i < x.size(); ++i)
      x[i] = g(rng);
    REQUIRE((H.apply(x) - D * x).cwiseAbs().maxCoeff() < 1e-11);
  }
}

TEST_CASE("zero operator and constant-only operators") {
  QubitHamiltonian zero = jordan_wigner(FermionOperator{4, 0.0, {}});
  REQUIRE(term_count(zero) == 0);
  QubitHamiltonian c = jordan_wigner(FermionOperator{2, 0.25, {}}, 1.0);
  REQUIRE(term_count(c) == 1);
  REQUIRE_THAT(c.identity_coefficient(), WithinAbs(1.25, 1e-15));
  // a term and its negative cancel
  FermionOperator cancel{2, 0.0, {term(1.0, {cr(0), an(1)}), term(-1.0, {cr(0), an(1)})}};
  REQUIRE(term_count(jordan_wigner(cancel)) == 0);
}

TEST_CASE("non-Hermitian input is rejected") {
  FermionOperator op{2, 0.0, {term(1.0, {cr(0), an(1)})}};
  REQUIRE_THROWS_AS(jordan_wigner(op), Error);
  FermionOperator out_of_range{2, 0.0, {term(1.0, {cr(2), an(2)})}};
  REQUIRE_THROWS_AS(jordan_wigner(out_of_range), InputError);
}

TEST_CASE("Hamiltonian JSON round trip") {
  auto sys = testing::solve("h2.xyz");
  MOIntegrals mo = mo_transform(sys.ints.h_core, sys.ints.eri, sys.rhf.C);
  QubitHamiltonian H = jordan_wigner(second_quantize(mo), sys.rhf.E_nuc);
  std::string text = H.to_json();
  QubitHamiltonian back = QubitHamiltonian::from_json(text);
  REQUIRE(back.n_qubits() == 4);
  REQUIRE(back.terms().size() == H.terms().size());
  for (size_t i = 0; i < H.terms().size(); ++i) {
    REQUIRE(back.terms()[i].word == H.terms()[i].word);
    REQUIRE(back.terms()[i].coeff == H.terms()[i].coeff);
  }
  REQUIRE(back.to_json() == text);
  for (size_t i = 1; i < H.terms().size(); ++i)
    REQUIRE(H.terms()[i - 1].word.label(4) < H.terms()[i].word.label(4));

  REQUIRE_THROWS_AS(QubitHamiltonian::from_json("{\"n_qubits\": 2}"), InputError);
  REQUIRE_THROWS_AS(QubitHamiltonian::from_json(
                        R"({"n_qubits": 2, "constant": 0, "terms": [{"pauli": "XQ", "coeff": 1}]})"),
                    InputError);
}

TEST_CASE("Pauli labels") {
  PauliWord w = PauliWord::from_label("XYZI");
  REQUIRE(w.x == 0b0011);
  REQUIRE(w.z == 0b0110);
  REQUIRE(w.y_count() == 1);
  REQUIRE(w.label(4) == "XYZI");
}
