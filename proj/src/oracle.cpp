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

#include "gbit/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <sstream>

#include "gbit/algebra.hpp"

namespace gbit {

namespace {

GaussMat single_site(GbitKind kind, int index) {
  GaussMat m(2, 2);
  // qubit: 1,2,3 -> x,y,z. rebit: 1,2 -> x,z; 3 -> y (paired 3s keep the
  // string real symmetric).
  int axis;  // 0=x, 1=y, 2=z
  if (kind == GbitKind::Qubit) {
    axis = index - 1;
  } else {
    axis = index == 1 ? 0 : index == 2 ? 2 : 1;
  }
  switch (axis) {
    case 0:
      m << GaussInt(0), GaussInt(1), GaussInt(1), GaussInt(0);
      break;
    case 1:
      m << GaussInt(0), GaussInt(0, -1), GaussInt(0, 1), GaussInt(0);
      break;
    default:
      m << GaussInt(1), GaussInt(0), GaussInt(0), GaussInt(-1);
      break;
  }
  return m;
}

GaussMat gauss_identity(Eigen::Index dim) {
  GaussMat m = GaussMat::Constant(dim, dim, GaussInt(0));
  for (Eigen::Index i = 0; i < dim; ++i) m(i, i) = GaussInt(1);
  return m;
}

}  // namespace

int oracle_max_n() {
  static const int cap = [] {
    if (const char* env = std::getenv("GBIT_ORACLE_MAX_N")) {
      const int v = std::atoi(env);
      if (v >= 1) return v;
    }
    return 8;
  }();
  return cap;
}

PauliOperatorRep matrix_of(const SystemKind& sys, const QuestionIndex& q) {
  q.require_valid_for(sys);
  if (sys.n > oracle_max_n()) {
    throw Error("oracle: n = " + std::to_string(sys.n) + " above the dense-matrix cap of " +
                std::to_string(oracle_max_n()));
  }
  GaussMat acc(1, 1);
  acc(0, 0) = GaussInt(1);
  for (int a = 0; a < q.n(); ++a) {
    const GaussMat site = q[a] == 0 ? gauss_identity(2) : single_site(sys.kind, q[a]);
    acc = kron<GaussInt>(acc, site);
  }
  return PauliOperatorRep{q, std::move(acc), 0};
}

const PauliOperatorRep& cached_matrix_of(const SystemKind& sys, const QuestionIndex& q) {
  using Key = std::pair<int, std::string>;
  static std::map<Key, std::unique_ptr<PauliOperatorRep>> cache;
  static std::shared_mutex mutex;

  q.require_valid_for(sys);  // a cache hit must not bypass validation
  const Key key{sys.kind == GbitKind::Qubit ? 0 : 1, q.str()};
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto rep = std::make_unique<PauliOperatorRep>(matrix_of(sys, q));
  std::unique_lock lock(mutex);
  auto [it, inserted] = cache.emplace(key, std::move(rep));
  return *it->second;
}

bool commutes(const SystemKind& sys, const QuestionIndex& q1, const QuestionIndex& q2) {
  const GaussMat& a = cached_matrix_of(sys, q1).matrix;
  const GaussMat& b = cached_matrix_of(sys, q2).matrix;
  const GaussMat ab = a.lazyProduct(b);
  const GaussMat ba = b.lazyProduct(a);
  return ab == ba;
}

int product_sign(const SystemKind& sys, const QuestionIndex& q1, const QuestionIndex& q2) {
  if (!commutes(sys, q1, q2)) {
    throw Error("product_sign: " + q1.str() + " and " + q2.str() +
                " do not commute; the product phase is imaginary");
  }
  auto composed = compose_index(q1, q2);
  const GaussMat product =
      cached_matrix_of(sys, q1).matrix.lazyProduct(cached_matrix_of(sys, q2).matrix);
  if (!composed) {
    // q1 == q2; the product is +-identity.
    const GaussInt lead = product(0, 0);
    if (lead == GaussInt(1)) return +1;
    if (lead == GaussInt(-1)) return -1;
    throw Error("product_sign: self-product is not +-identity");
  }
  const GaussMat& target = cached_matrix_of(sys, *composed).matrix;
  if (product == target) return +1;
  GaussMat negated = target.unaryExpr([](GaussInt v) { return -v; });
  if (product == negated) return -1;
  throw Error("product_sign: product of " + q1.str() + " and " + q2.str() +
              " is not +-" + composed->str());
}

bool simultaneous_eigenbasis_exists(const SystemKind& sys,
                                    const std::vector<QuestionIndex>& qs) {
  for (std::size_t i = 0; i < qs.size(); ++i) {
    for (std::size_t j = i + 1; j < qs.size(); ++j) {
      if (!commutes(sys, qs[i], qs[j])) return false;
    }
  }
  return true;
}

bool is_hermitian(const DensityMatrix& rho, double tol) {
  return (rho - rho.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_positive_semidefinite(const DensityMatrix& rho, double tol) {
  Eigen::SelfAdjointEigenSolver<DensityMatrix> solver(rho, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff() >= -tol;
}

double purity(const DensityMatrix& rho) { return (rho * rho).trace().real(); }

namespace {

void check_density_shape(const SystemKind& sys, const DensityMatrix& rho) {
  if (rho.rows() != sys.dim() || rho.cols() != sys.dim()) {
    throw Error("density matrix is " + std::to_string(rho.rows()) + "x" +
                std::to_string(rho.cols()) + ", system dimension is " +
                std::to_string(sys.dim()));
  }
  if (!is_hermitian(rho)) throw Error("density matrix is not Hermitian");
}

}  // namespace

double born_probability(const SystemKind& sys, const DensityMatrix& rho,
                        const QuestionIndex& q) {
  check_density_shape(sys, rho);
  const Eigen::MatrixXcd op = to_complex(cached_matrix_of(sys, q).matrix);
  const std::complex<double> value = (rho.trace() + (rho * op).trace()) / 2.0;
  if (std::abs(value.imag()) > 1e-12) {
    throw Error("born_probability: non-real expectation " + std::to_string(value.imag()));
  }
  return std::clamp(value.real(), 0.0, 1.0);
}

DensityMatrix lueders_update(const SystemKind& sys, const DensityMatrix& rho,
                             const QuestionIndex& q, bool yes) {
  const double y = born_probability(sys, rho, q);
  const double answer_probability = yes ? y : rho.trace().real() - y;
  if (answer_probability <= 1e-12) {
    throw Error("lueders_update: answer '" + std::string(yes ? "yes" : "no") + "' to " +
                q.str() + " has zero probability");
  }
  const Eigen::MatrixXcd op = to_complex(cached_matrix_of(sys, q).matrix);
  const Eigen::MatrixXcd identity = Eigen::MatrixXcd::Identity(rho.rows(), rho.cols());
  const Eigen::MatrixXcd projector = (yes ? (identity + op).eval() : (identity - op).eval()) / 2.0;
  DensityMatrix updated = projector * rho * projector;
  updated /= updated.trace().real();
  // Round-off can leave a tiny anti-Hermitian residue; strip it.
  updated = (updated + updated.adjoint().eval()) / 2.0;
  return updated;
}

DensityMatrix bloch_to_density(const BlochState& state) {
  const SystemKind& sys = state.sys;
  const auto set = enumerate_complete_set(sys);
  const double norm = 1.0 / static_cast<double>(sys.dim());
  DensityMatrix rho =
      norm * state.p * Eigen::MatrixXcd::Identity(sys.dim(), sys.dim());
  for (std::int64_t i = 0; i < set.size(); ++i) {
    const double r = 2.0 * state.y[i] - state.p;
    if (r == 0.0) continue;
    rho += norm * r * to_complex(cached_matrix_of(sys, set.members[i]).matrix);
  }
  return rho;
}

BlochState density_to_bloch(const SystemKind& sys, const DensityMatrix& rho) {
  check_density_shape(sys, rho);
  const double p = rho.trace().real();
  const auto set = enumerate_complete_set(sys);
  Eigen::VectorXd y(set.size());
  for (std::int64_t i = 0; i < set.size(); ++i) {
    const Eigen::MatrixXcd op = to_complex(cached_matrix_of(sys, set.members[i]).matrix);
    const std::complex<double> r = (rho * op).trace();
    if (std::abs(r.imag()) > 1e-10) {
      throw Error("density_to_bloch: non-real component on " + set.members[i].str());
    }
    y[i] = (r.real() + p) / 2.0;
  }
  return BlochState(sys, std::move(y), p);
}

std::string matrix_to_json(const DensityMatrix& m) {
  std::ostringstream os;
  os.precision(17);
  os << "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << (i ? "," : "") << "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      os << (j ? "," : "") << "[" << m(i, j).real() << "," << m(i, j).imag() << "]";
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace gbit
