#include "allpairs/channel.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "allpairs/errors.hpp"

namespace allpairs {

namespace {

void check_sector(int v, int n_z, const char* who) {
  if (v < 0 || v % 2 != 0) throw std::invalid_argument(std::string(who) + ": V must be even");
  if (n_z < 0 || n_z > v) throw std::invalid_argument(std::string(who) + ": need 0 <= n_z <= V");
}

}  // namespace

double alpha0(int v, int n_z) {
  check_sector(v, n_z, "alpha0");
  double total = 0.0;
  for (int m = n_z % 2; m <= n_z && m <= v - n_z; m += 2) {
    RatioProduct rp;
    for (int i = 0; i < m; ++i) rp.mul(2.0 / 3.0);
    rp.mul_binomial(n_z, m);
    rp.mul_binomial(v - n_z, m);
    rp.mul_factorial(m);
    rp.mul_double_factorial(n_z - m);
    rp.mul_double_factorial(v - n_z - m);
    rp.div_double_factorial(v);
    total += rp.value();
  }
  return total;
}

std::vector<double> alpha_vec(int v, int n_z) {
  check_sector(v, n_z, "alpha_vec");
  std::vector<double> alpha(static_cast<std::size_t>(n_z) + 1, 0.0);
  for (int d = 0; d <= n_z; ++d) {
    if (2 * d > v || n_z - d > v - 2 * d) continue;  // no strings at this distance
    RatioProduct rp;
    for (int i = 0; i < d; ++i) rp.div(3.0);
    rp.mul_factorial(d);
    rp.mul_double_factorial(v - 2 * d);
    rp.div_double_factorial(v);
    alpha[d] = rp.value() * alpha0(v - 2 * d, n_z - d);
  }
  return alpha;
}

std::vector<std::vector<BigInt>> g_matrix(int v, int n_z) {
  check_sector(v, n_z, "g_matrix");
  if (n_z > v - n_z)
    throw std::invalid_argument("g_matrix: n_z > V/2; evaluate the mirrored sector V - n_z");
  std::vector<std::vector<BigInt>> g(n_z + 1, std::vector<BigInt>(n_z + 1));
  for (int lambda2 = 0; lambda2 <= n_z; ++lambda2) {
    for (int d = 0; d <= n_z; ++d) {
      BigInt entry = 0;
      for (int x = 0; x <= std::min(d, lambda2); ++x) {
        const int y = d - x;
        const BigInt term =
            binomial(lambda2, x) * binomial(n_z - lambda2, y) * binomial(v - n_z - lambda2, y);
        entry += (x % 2 == 0) ? term : -term;
      }
      g[lambda2][d] = entry;
    }
  }
  return g;
}

double eigenvalue_closed_form(int v, int lambda2) {
  if (v < 0 || v % 2 != 0) throw std::invalid_argument("eigenvalue_closed_form: V must be even");
  if (lambda2 < 0 || 2 * lambda2 > v)
    throw std::invalid_argument("eigenvalue_closed_form: need 0 <= lambda2 <= V/2");
  double total = 0.0;
  for (int d = 0; d <= lambda2; ++d) {
    for (int m = (lambda2 - d) % 2; m <= lambda2 - d; m += 2) {
      if (v - d - lambda2 - m < 0) continue;
      RatioProduct rp;
      for (int i = 0; i < d; ++i) rp.div(3.0);
      for (int i = 0; i < m; ++i) rp.mul(2.0 / 3.0);
      for (int f = lambda2; f > lambda2 - d - m; --f) rp.mul(static_cast<double>(f));
      rp.mul_binomial(v - d - lambda2, m);
      rp.mul_double_factorial(lambda2 - d - m);
      rp.mul_double_factorial(v - d - lambda2 - m);
      rp.div_double_factorial(v);
      total += (d % 2 == 0) ? rp.value() : -rp.value();
    }
  }
  return total;
}

std::vector<double> eigenvalues(int v, int n_z) {
  check_sector(v, n_z, "eigenvalues");
  if (n_z > v - n_z)
    throw std::invalid_argument("eigenvalues: n_z > V/2; evaluate the mirrored sector V - n_z");
  const auto alpha = alpha_vec(v, n_z);
  const auto g = g_matrix(v, n_z);
  std::vector<double> c(static_cast<std::size_t>(n_z) + 1, 0.0);
  for (int lambda2 = 0; lambda2 <= n_z; ++lambda2) {
    double acc = 0.0;
    for (int d = 0; d <= n_z; ++d) acc += g[lambda2][d].get_d() * alpha[d];
    c[lambda2] = acc;
    const double reference = eigenvalue_closed_form(v, lambda2);
    if (std::abs(acc - reference) > 1e-10 * std::max(1.0, std::abs(reference)))
      throw std::logic_error("eigenvalues: G*alpha disagrees with the closed form");
  }
  return c;
}

std::vector<double> beta_vec(int v, int n_z) {
  check_sector(v, n_z, "beta_vec");
  if (n_z > v - n_z)
    throw std::invalid_argument("beta_vec: n_z > V/2; evaluate the mirrored sector V - n_z");
  const auto c = eigenvalues(v, n_z);
  for (double ck : c)
    if (std::abs(ck) < 1e-14) throw SingularChannelError("beta_vec: channel eigenvalue ~ 0");

  const int n = n_z + 1;
  const auto g = g_matrix(v, n_z);
  Eigen::MatrixXd gd(n, n);
  Eigen::VectorXd rhs(n);
  for (int i = 0; i < n; ++i) {
    rhs(i) = 1.0 / c[i];
    for (int j = 0; j < n; ++j) gd(i, j) = g[i][j].get_d();
  }
  const Eigen::VectorXd beta = gd.partialPivLu().solve(rhs);
  const double residual = (gd * beta - rhs).lpNorm<Eigen::Infinity>();
  if (!(residual < 1e-10)) throw std::logic_error("beta_vec: solve residual too large");
  return std::vector<double>(beta.data(), beta.data() + n);
}

double pairing_fraction(int v, int n_plus) {
  if (v < 0 || v % 2 != 0) throw std::invalid_argument("pairing_fraction: V must be even");
  if (n_plus < 0 || 2 * n_plus > v)
    throw std::invalid_argument("pairing_fraction: need 2 n_plus <= V");
  double f = 1.0;
  for (int k = 1; k <= n_plus; ++k) f *= static_cast<double>(k) / static_cast<double>(v - 2 * k + 1);
  return f;
}

const ChannelSpectrum& spectrum(int v_prime, int n_z) {
  if (n_z > 14) throw SectorTooLargeError("spectrum: n_z > 14 not supported (4^n_z estimator cost)");
  check_sector(v_prime, n_z, "spectrum");
  if (2 * n_z > v_prime)
    throw std::invalid_argument("spectrum: n_z > V'/2; mirror the sector first");

  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<const ChannelSpectrum>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{v_prime, n_z}];
  if (!slot) {
    auto s = std::make_unique<ChannelSpectrum>();
    s->v_prime = v_prime;
    s->n_z = n_z;
    if (v_prime == 0) {
      s->alpha = {1.0};
      s->c = {1.0};
      s->beta = {1.0};
      s->g = {{BigInt(1)}};
    } else {
      s->alpha = alpha_vec(v_prime, n_z);
      s->g = g_matrix(v_prime, n_z);
      s->c = eigenvalues(v_prime, n_z);
      s->beta = beta_vec(v_prime, n_z);
    }
    slot = std::move(s);
  }
  return *slot;
}

std::vector<std::vector<std::pair<int, int>>> enumerate_pairings(int v) {
  if (v < 0 || v % 2 != 0) throw std::invalid_argument("enumerate_pairings: V must be even");
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<std::pair<int, int>> current;
  std::vector<bool> used(v, false);
  auto recurse = [&](auto&& self) -> void {
    int i = 0;
    while (i < v && used[i]) ++i;
    if (i == v) {
      out.push_back(current);
      return;
    }
    used[i] = true;
    for (int j = i + 1; j < v; ++j) {
      if (used[j]) continue;
      used[j] = true;
      current.emplace_back(i, j);
      self(self);
      current.pop_back();
      used[j] = false;
    }
    used[i] = false;
  };
  if (v > 0) recurse(recurse);
  else out.push_back({});
  return out;
}

Eigen::MatrixXd BruteChannel::sector_matrix(int n_z) const {
  const auto masks = sector_masks(volume, n_z);
  const int n = static_cast<int>(masks.size());
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = matrix(static_cast<Eigen::Index>(masks[i]), static_cast<Eigen::Index>(masks[j]));
  return m;
}

std::vector<std::uint64_t> BruteChannel::sector_masks(int v, int n_z) {
  std::vector<std::uint64_t> masks;
  for (std::uint64_t m = 0; m < (1ULL << v); ++m)
    if (std::popcount(m) == n_z) masks.push_back(m);
  return masks;
}

BruteChannel brute_force_channel(int v) {
  if (v < 2 || v > 8 || v % 2 != 0)
    throw std::invalid_argument("brute_force_channel: V in {2,4,6,8}");
  BruteChannel bc;
  bc.volume = v;
  const std::uint64_t dim = 1ULL << v;
  bc.matrix = Eigen::MatrixXd::Zero(dim, dim);
  const auto pairings = enumerate_pairings(v);
  const double weight = 1.0 / static_cast<double>(pairings.size());

  std::vector<std::pair<std::uint64_t, double>> expansion, next;
  for (std::uint64_t in = 0; in < dim; ++in) {
    for (const auto& pairing : pairings) {
      expansion.assign(1, {in, weight});
      for (const auto& [i, j] : pairing) {
        const std::uint64_t swap_bits = (1ULL << i) | (1ULL << j);
        next.clear();
        for (const auto& [mask, w] : expansion) {
          const bool zi = (mask >> i) & 1, zj = (mask >> j) & 1;
          if (zi == zj) {
            next.emplace_back(mask, w);
          } else {
            next.emplace_back(mask, w * (2.0 / 3.0));
            next.emplace_back(mask ^ swap_bits, w * (1.0 / 3.0));
          }
        }
        expansion.swap(next);
      }
      for (const auto& [mask, w] : expansion)
        bc.matrix(static_cast<Eigen::Index>(mask), static_cast<Eigen::Index>(in)) += w;
    }
  }
  return bc;
}

}  // namespace allpairs
