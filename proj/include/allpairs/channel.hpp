#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "allpairs/combinatorics.hpp"

namespace allpairs {

/// Probability that the channel leaves a reference {I,Z}-string with n_z Z
/// operators unchanged: sum over pairings linking m (I,Z) pairs, each
/// surviving with weight 2/3.
double alpha0(int v, int n_z);

/// Swap amplitudes alpha_d for d = 0..n_z: the weight with which the channel
/// spreads a reference string uniformly over all strings at swap distance d.
/// Entries with no reachable strings are zero.
std::vector<double> alpha_vec(int v, int n_z);

/// Integer change-of-basis between swap amplitudes and irrep eigenvalues:
/// G[lambda2][d] = sum_{x+y=d} (-1)^x C(lambda2,x) C(n_z-lambda2,y) C(V-n_z-lambda2,y).
/// Square (n_z+1)^2; requires n_z <= V/2 (mirror larger sectors first).
std::vector<std::vector<BigInt>> g_matrix(int v, int n_z);

/// Channel eigenvalue on the two-row irrep (V - lambda2, lambda2), evaluated
/// from the closed form (independent of n_z).
double eigenvalue_closed_form(int v, int lambda2);

/// Eigenvalues c indexed by lambda2 = 0..n_z, computed both via G * alpha in
/// the requested sector and via the closed form; throws std::logic_error if
/// the two routes disagree beyond 1e-10 relative.
std::vector<double> eigenvalues(int v, int n_z);

/// Inverse-channel swap amplitudes: solves G beta = 1/c. Throws
/// SingularChannelError if any |c| < 1e-14 and std::logic_error when the
/// solve residual exceeds 1e-10.
std::vector<double> beta_vec(int v, int n_z);

/// Fraction of pairings matching every Raise site with a Lower site:
/// f = n_plus! |P_{V-2 n_plus}| / |P_V|.
double pairing_fraction(int v, int n_plus);

/// Everything the estimator needs for one (V', n_z) sector.
struct ChannelSpectrum {
  int v_prime = 0;
  int n_z = 0;
  std::vector<double> alpha;
  std::vector<std::vector<BigInt>> g;
  std::vector<double> c;
  std::vector<double> beta;
};

/// Memoized spectrum, built once per (V', n_z) and shared read-only.
/// Requires n_z <= V'/2 and n_z <= 14 (SectorTooLargeError beyond).
const ChannelSpectrum& spectrum(int v_prime, int n_z);

/// All perfect pairings of v sites (v even), each as V/2 (i, j) pairs with
/// i < j, lowest unpaired site first.
std::vector<std::vector<std::pair<int, int>>> enumerate_pairings(int v);

/// Explicit All-Pairs superoperator on {I,Z}-string coefficient vectors,
/// indexed by Z-position bitmask. Small V oracle.
struct BruteChannel {
  int volume = 0;
  Eigen::MatrixXd matrix;  // matrix(out, in)

  /// Restriction to the strings with popcount == n_z, index order = masks ascending.
  Eigen::MatrixXd sector_matrix(int n_z) const;
  static std::vector<std::uint64_t> sector_masks(int v, int n_z);
};

BruteChannel brute_force_channel(int v);

}  // namespace allpairs
