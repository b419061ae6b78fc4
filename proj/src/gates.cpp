#include "allpairs/gates.hpp"

#include <cmath>

namespace allpairs {

namespace {

constexpr Complex kI{0.0, 1.0};

using Mat2 = std::array<std::array<Complex, 2>, 2>;
using Mat4 = std::array<std::array<Complex, 4>, 4>;

Mat2 letter_matrix(Letter l) {
  // Basis per site: index 0 empty, 1 occupied. Z = 1 - 2n.
  switch (l) {
    case Letter::Identity: return {{{1, 0}, {0, 1}}};
    case Letter::Z: return {{{1, 0}, {0, -1}}};
    case Letter::Raise: return {{{0, 0}, {1, 0}}};
    case Letter::Lower: return {{{0, 1}, {0, 0}}};
  }
  return {};
}

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 r{};
  for (int bi = 0; bi < 2; ++bi)
    for (int bj = 0; bj < 2; ++bj)
      for (int ci = 0; ci < 2; ++ci)
        for (int cj = 0; cj < 2; ++cj) r[2 * bi + bj][2 * ci + cj] = a[bi][ci] * b[bj][cj];
  return r;
}

Mat4 gate_matrix(const TwoBodyGate& g) {
  Mat4 u{};
  u[0][0] = g.phase0;
  u[3][3] = g.phase2;
  u[1][1] = g.block[0][0];
  u[1][2] = g.block[0][1];
  u[2][1] = g.block[1][0];
  u[2][2] = g.block[1][1];
  return u;
}

Mat4 mul(const Mat4& a, const Mat4& b) {
  Mat4 r{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 4; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

Mat4 dagger(const Mat4& a) {
  Mat4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = std::conj(a[j][i]);
  return r;
}

int sector(int idx) { return (idx >> 1) + (idx & 1); }

/// Hilbert-Schmidt coefficients of a 4x4 operator in the letter-pair basis.
std::array<Complex, 16> pair_coefficients(const Mat4& m) {
  std::array<Complex, 16> out{};
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const Mat4 q = kron(letter_matrix(static_cast<Letter>(a)), letter_matrix(static_cast<Letter>(b)));
      Complex tr = 0.0, nrm = 0.0;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
          tr += std::conj(q[j][i]) * m[j][i];
          nrm += std::conj(q[j][i]) * q[j][i];
        }
      out[4 * a + b] = tr / nrm;
    }
  }
  return out;
}

}  // namespace

bool TwoBodyGate::is_identity() const {
  const double eps = 1e-15;
  return std::abs(phase0 - 1.0) < eps && std::abs(phase2 - 1.0) < eps &&
         std::abs(block[0][0] - 1.0) < eps && std::abs(block[1][1] - 1.0) < eps &&
         std::abs(block[0][1]) < eps && std::abs(block[1][0]) < eps;
}

bool TwoBodyGate::is_unitary(double tol) const {
  if (std::abs(std::abs(phase0) - 1.0) > tol || std::abs(std::abs(phase2) - 1.0) > tol) return false;
  // block^dag block == I
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Complex s = 0.0;
      for (int k = 0; k < 2; ++k) s += std::conj(block[k][i]) * block[k][j];
      if (std::abs(s - (i == j ? 1.0 : 0.0)) > tol) return false;
    }
  return true;
}

const std::array<TwoBodyGate, 3>& discrete_gates() {
  static const std::array<TwoBodyGate, 3> gates = [] {
    const double s = 1.0 / std::sqrt(2.0);
    std::array<TwoBodyGate, 3> g;
    // g[0]: identity (default-constructed).
    g[1].block = {{{Complex(s, 0), kI * s}, {kI * s, Complex(s, 0)}}};
    // sqrt(iSWAP) * (S x I): right-multiply the beam splitter by diag(1, i)
    // on the one-particle block; S contributes phase i on |11> as well.
    g[2].block = {{{Complex(s, 0), Complex(-s, 0)}, {kI * s, kI * s}}};
    g[2].phase2 = kI;
    return g;
  }();
  return gates;
}

TwoBodyGate sample_gate(Ensemble ensemble, Rng& rng) {
  if (ensemble == Ensemble::Discrete3) {
    return discrete_gates()[rng.uniform_below(3)];
  }
  // Ginibre + Gram-Schmidt with positive-diagonal R gives Haar on U(2);
  // independent uniform phases on the scalar sectors.
  Complex a0(rng.gaussian(), rng.gaussian()), a1(rng.gaussian(), rng.gaussian());
  Complex b0(rng.gaussian(), rng.gaussian()), b1(rng.gaussian(), rng.gaussian());
  const double n0 = std::sqrt(std::norm(a0) + std::norm(a1));
  a0 /= n0;
  a1 /= n0;
  const Complex proj = std::conj(a0) * b0 + std::conj(a1) * b1;
  b0 -= proj * a0;
  b1 -= proj * a1;
  const double n1 = std::sqrt(std::norm(b0) + std::norm(b1));
  b0 /= n1;
  b1 /= n1;
  TwoBodyGate g;
  g.block = {{{a0, b0}, {a1, b1}}};
  g.phase0 = std::exp(kI * (2.0 * M_PI * rng.uniform()));
  g.phase2 = std::exp(kI * (2.0 * M_PI * rng.uniform()));
  return g;
}

Complex pair_expectation(const TwoBodyGate& gate, int b_i, int b_j, Letter op_i, Letter op_j) {
  const int raises = (op_i == Letter::Raise) + (op_j == Letter::Raise);
  const int lowers = (op_i == Letter::Lower) + (op_j == Letter::Lower);
  if (raises != lowers) return 0.0;

  if (raises == 0) {
    // {I,Z} pair: diagonal in every sector.
    if (b_i == b_j) {
      const int nz = (op_i == Letter::Z) + (op_j == Letter::Z);
      return (b_i == 1 && (nz & 1)) ? -1.0 : 1.0;
    }
    const double s01 = (op_j == Letter::Z ? -1.0 : 1.0);  // <01| op |01>
    const double s10 = (op_i == Letter::Z ? -1.0 : 1.0);  // <10| op |10>
    const int k = (b_i == 1) ? 1 : 0;
    return s01 * std::norm(gate.block[k][0]) + s10 * std::norm(gate.block[k][1]);
  }

  // One Raise, one Lower: support only on the one-particle sector.
  if (b_i == b_j) return 0.0;
  const int k = (b_i == 1) ? 1 : 0;
  if (op_i == Letter::Raise)  // maps |01> -> |10>
    return gate.block[k][1] * std::conj(gate.block[k][0]);
  return gate.block[k][0] * std::conj(gate.block[k][1]);  // |10> -> |01>
}

TwoSiteChannelTable two_site_channel(Ensemble ensemble) {
  TwoSiteChannelTable table;
  for (int in = 0; in < 16; ++in) {
    const Mat4 s = kron(letter_matrix(static_cast<Letter>(in / 4)),
                        letter_matrix(static_cast<Letter>(in % 4)));
    Mat4 out{};
    if (ensemble == Ensemble::Discrete3) {
      for (const TwoBodyGate& g : discrete_gates()) {
        const Mat4 u = gate_matrix(g);
        const Mat4 conj_s = mul(mul(u, s), dagger(u));
        for (int b = 0; b < 4; ++b) {
          const Complex amp = conj_s[b][b] / 3.0;
          // += amp * U^dag |b><b| U
          const Mat4 ud = dagger(u);
          for (int x = 0; x < 4; ++x)
            for (int y = 0; y < 4; ++y) out[x][y] += amp * ud[x][b] * u[b][y];
        }
      }
    } else {
      // 2-design average: kill blocks off-diagonal in particle number, then
      // rho1 -> (rho1 + I tr rho1) / 3 on the one-particle block.
      for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
          if (sector(x) == sector(y)) out[x][y] = s[x][y];
      const Complex tr1 = out[1][1] + out[2][2];
      Mat2 rho1 = {{{out[1][1], out[1][2]}, {out[2][1], out[2][2]}}};
      out[1][1] = (rho1[0][0] + tr1) / 3.0;
      out[1][2] = rho1[0][1] / 3.0;
      out[2][1] = rho1[1][0] / 3.0;
      out[2][2] = (rho1[1][1] + tr1) / 3.0;
    }
    table.coeff[in] = pair_coefficients(out);
  }
  return table;
}

}  // namespace allpairs
