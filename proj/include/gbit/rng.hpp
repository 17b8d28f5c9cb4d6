// Copyright 2026 gbit-toolbox authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <random>

namespace gbit {

// Deterministic randomness. Engine and all derived draws are fully specified
// here (std:: distributions are implementation-defined and never used), so
// seeded runs are bit-identical across platforms.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Stream-splitting rule: shot (or sub-task) k draws from the engine seeded
/// with seed ^ splitmix64(k + 1).
inline std::mt19937_64 stream_for(std::uint64_t seed, std::uint64_t k) {
  return std::mt19937_64(seed ^ splitmix64(k + 1));
}

/// Uniform double in [0, 1) from the top 53 bits.
inline double uniform01(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

/// Standard normal via Box-Muller on explicit uniforms.
inline double normal01(std::mt19937_64& eng) {
  double u1 = uniform01(eng);
  while (u1 <= 0.0) u1 = uniform01(eng);
  const double u2 = uniform01(eng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

/// Random density matrix rho = G G^H / tr(G G^H) with Gaussian G; real
/// entries when `real_valued` (the rebit case).
inline Eigen::MatrixXcd random_density(std::mt19937_64& eng, int dim, bool real_valued = false) {
  Eigen::MatrixXcd g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const double re = normal01(eng);
      const double im = real_valued ? 0.0 : normal01(eng);
      g(i, j) = std::complex<double>(re, im);
    }
  }
  Eigen::MatrixXcd rho = g * g.adjoint();
  rho /= rho.trace().real();
  return rho;
}

/// Random pure-state projector |psi><psi|.
inline Eigen::MatrixXcd random_pure_density(std::mt19937_64& eng, int dim,
                                            bool real_valued = false) {
  Eigen::VectorXcd psi(dim);
  for (int i = 0; i < dim; ++i) {
    const double re = normal01(eng);
    const double im = real_valued ? 0.0 : normal01(eng);
    psi[i] = std::complex<double>(re, im);
  }
  psi.normalize();
  return psi * psi.adjoint();
}

}  // namespace gbit
