#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "allpairs/combinatorics.hpp"
#include "allpairs/gates.hpp"
#include "allpairs/opstrings.hpp"
#include "allpairs/rng.hpp"

namespace allpairs {

/// Pure state in the fixed-N sector, amplitudes indexed by the ranked
/// occupation basis (colexicographic).
struct FockState {
  int volume = 0;
  int particles = 0;
  std::vector<Complex> amps;

  double norm() const;
};

/// Perfect matching of the V sites: V/2 disjoint (i, j) pairs, i < j.
struct Pairing {
  std::vector<std::pair<int, int>> pairs;
};

/// Two-leg ladder of hardcore bosons: hopping along both legs and across
/// rungs, attractive density-density interaction on rungs, periodic along
/// the legs. Site layout: leg a at 2i, leg b at 2i+1.
struct LadderModel {
  int rungs = 12;
  double hop = 1.0;
  double rung_attraction = 0.5;
  int filling_num = 1;
  int filling_den = 4;

  int sites() const { return 2 * rungs; }
  /// Throws when filling * sites is not an integer.
  int particles() const;
};

/// One recorded protocol shot: the sampled pairing, the gate applied to each
/// pair (aligned with pairs order), and the measured occupation bitstring.
struct ShadowSample {
  Pairing pairing;
  std::vector<TwoBodyGate> gates;
  std::vector<std::int8_t> gate_ids;  // discrete ensemble only, else empty
  std::uint64_t bits = 0;
};

struct ShadowHeader {
  int volume = 0;
  int particles = 0;
  Ensemble ensemble = Ensemble::Discrete3;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
};

struct ShadowTable {
  ShadowHeader header;
  std::vector<ShadowSample> rows;
};

/// Sparse symmetric matvec for the ladder Hamiltonian in the fixed-N basis.
class LadderHamiltonian {
 public:
  explicit LadderHamiltonian(const LadderModel& model, std::uint64_t dim_cap = 2'000'000);

  const FockBasis& basis() const { return basis_; }
  const LadderModel& model() const { return model_; }

  void apply(const double* in, double* out) const;
  std::vector<double> apply(const std::vector<double>& in) const;

 private:
  LadderModel model_;
  FockBasis basis_;
  std::vector<std::pair<int, int>> bonds_;  // hop terms, possibly with multiplicity
  std::vector<double> diagonal_;            // interaction part
};

struct GroundStateResult {
  FockState state;
  double energy = 0.0;
  int iterations = 0;
};

/// Lanczos with full reorthogonalization; converged when the true residual
/// ||H psi - E psi|| < tol. Deterministic for a given seed.
GroundStateResult ground_state(const LadderModel& model, double tol = 1e-10,
                               int max_iterations = 2000, std::uint64_t seed = 1,
                               std::uint64_t dim_cap = 2'000'000);

/// Uniform over all (V-1)!! pairings: repeatedly match the lowest unpaired
/// site with a uniformly random remaining one.
Pairing sample_pairing(int v, Rng& rng);

/// In-place two-site gate in the fixed-N sector. The basis must match the state.
void apply_gate_inplace(FockState& state, const FockBasis& basis, const TwoBodyGate& gate,
                        int i, int j);

/// Value-returning convenience wrapper (builds a basis internally).
FockState apply_gate(const FockState& state, const TwoBodyGate& gate, int i, int j);

/// Exact sample from |amplitude|^2; returns the occupation bitmask.
std::uint64_t measure(const FockState& state, const FockBasis& basis, Rng& rng);

/// n_samples independent protocol shots. Row k is generated from the derived
/// stream (seed, k), so the table is identical for any thread count.
ShadowTable collect_shadow(const FockState& state, Ensemble ensemble, std::uint64_t n_samples,
                           std::uint64_t seed);

/// <psi| S |psi> by direct sparse application; S must be number-conserving.
Complex exact_expectation(const FockState& state, const OperatorString& s);

}  // namespace allpairs
