#pragma once

#include <array>
#include <complex>

#include "allpairs/opstrings.hpp"
#include "allpairs/rng.hpp"

namespace allpairs {

using Complex = std::complex<double>;

/// Number-conserving two-site unitary stored block-by-block: scalar phases on
/// the 0- and 2-particle sectors and a 2x2 unitary on span{|01>, |10>}.
/// Column convention: U|01> = block[0][0]|01> + block[1][0]|10>.
struct TwoBodyGate {
  Complex phase0{1.0, 0.0};
  std::array<std::array<Complex, 2>, 2> block{{{Complex(1, 0), Complex(0, 0)},
                                               {Complex(0, 0), Complex(1, 0)}}};
  Complex phase2{1.0, 0.0};

  bool is_identity() const;
  bool is_unitary(double tol = 1e-12) const;
};

enum class Ensemble { Discrete3, HaarBlock };

/// The three-gate set {I, sqrt(iSWAP), sqrt(iSWAP)*(S x I)}. The sqrt(iSWAP)
/// one-particle block is the 50-50 beam splitter; S puts phase i on the
/// occupied state of the first site. Sector phases fixed to 1 except
/// phase2 = i for the S-decorated gate.
const std::array<TwoBodyGate, 3>& discrete_gates();

TwoBodyGate sample_gate(Ensemble ensemble, Rng& rng);

/// <b_i b_j| U (op_i x op_j) U^dag |b_i b_j>, from the block structure.
/// Zero whenever the letter pair does not conserve particle number.
Complex pair_expectation(const TwoBodyGate& gate, int b_i, int b_j, Letter op_i, Letter op_j);

/// Exact two-site channel in the letter-pair basis: coeff[in][out] is the
/// coefficient of the `out` pair in M[`in` pair], with pair index
/// 4*letter_i + letter_j. Discrete3 is summed exactly over gates and
/// outcomes; HaarBlock is evaluated from the block formula.
struct TwoSiteChannelTable {
  std::array<std::array<Complex, 16>, 16> coeff{};
};

TwoSiteChannelTable two_site_channel(Ensemble ensemble);

inline int pair_index(Letter a, Letter b) {
  return 4 * static_cast<int>(a) + static_cast<int>(b);
}

}  // namespace allpairs
