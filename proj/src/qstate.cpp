#include "qgamble/qstate.hpp"

#include <cmath>
#include <string>

namespace qgamble {

namespace {

constexpr int kMaxQubits = 3;

int wire_shift(int n_qubits, int wire) { return n_qubits - 1 - wire; }

int wire_bit(int index, int n_qubits, int wire) {
  return (index >> wire_shift(n_qubits, wire)) & 1;
}

void check_wires(const QubitState& state, const std::vector<int>& wires) {
  for (std::size_t i = 0; i < wires.size(); ++i) {
    if (wires[i] < 0 || wires[i] >= state.n_qubits)
      throw std::invalid_argument("wire " + std::to_string(wires[i]) +
                                  " out of range for " +
                                  std::to_string(state.n_qubits) + " qubits");
    for (std::size_t j = 0; j < i; ++j)
      if (wires[i] == wires[j])
        throw std::invalid_argument("duplicate wire " + std::to_string(wires[i]));
  }
}

QubitState normalized(int n_qubits, Vector amps, double norm_sq) {
  amps /= std::sqrt(norm_sq);
  return {n_qubits, std::move(amps)};
}

}  // namespace

QubitState new_basis_state(int n_qubits, int basis_index) {
  if (n_qubits < 1 || n_qubits > kMaxQubits)
    throw std::invalid_argument("n_qubits must be in 1.." +
                                std::to_string(kMaxQubits));
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  if (basis_index < 0 || basis_index >= dim)
    throw std::invalid_argument("basis_index out of range");
  Vector amps = Vector::Zero(dim);
  amps[basis_index] = 1.0;
  return {n_qubits, std::move(amps)};
}

UnitaryMatrix make_unitary(Matrix entries) {
  const Eigen::Index d = entries.rows();
  if (d != entries.cols() || (d != 2 && d != 4 && d != 8))
    throw std::invalid_argument("unitary must be square with dim 2, 4 or 8");
  const Matrix gram = entries.adjoint() * entries;
  const double dev = (gram - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (dev > 100 * kNormTol)  // allow products of exact gates to accumulate
    throw std::invalid_argument("matrix is not unitary (deviation " +
                                std::to_string(dev) + ")");
  return {static_cast<int>(d), std::move(entries)};
}

double bit_probability(const QubitState& state, int wire, int bit) {
  check_wires(state, {wire});
  double p = 0.0;
  for (Eigen::Index i = 0; i < state.dim(); ++i)
    if (wire_bit(static_cast<int>(i), state.n_qubits, wire) == bit)
      p += std::norm(state.amps[i]);
  return p;
}

QubitState apply_unitary(const QubitState& state, const UnitaryMatrix& u,
                         const std::vector<int>& wires) {
  check_wires(state, wires);
  const int k = static_cast<int>(wires.size());
  const int sub_dim = 1 << k;
  if (u.dim != sub_dim)
    throw std::invalid_argument("unitary dim does not match wire count");

  // Mask of the target wires within the full index.
  int wires_mask = 0;
  for (int w : wires) wires_mask |= 1 << wire_shift(state.n_qubits, w);

  Vector out = Vector::Zero(state.dim());
  Vector in_sub(sub_dim);
  std::vector<Eigen::Index> idx(sub_dim);
  for (Eigen::Index rest = 0; rest < state.dim(); ++rest) {
    if (rest & wires_mask) continue;  // enumerate patterns of the other wires
    for (int sub = 0; sub < sub_dim; ++sub) {
      Eigen::Index full = rest;
      for (int j = 0; j < k; ++j)
        if ((sub >> (k - 1 - j)) & 1)
          full |= Eigen::Index{1} << wire_shift(state.n_qubits, wires[j]);
      idx[sub] = full;
      in_sub[sub] = state.amps[full];
    }
    const Vector out_sub = u.entries * in_sub;
    for (int sub = 0; sub < sub_dim; ++sub) out[idx[sub]] = out_sub[sub];
  }
  return {state.n_qubits, std::move(out)};
}

MeasureResult measure_qubit(const QubitState& state, int wire, double rand01) {
  if (rand01 < 0.0 || rand01 >= 1.0)
    throw std::invalid_argument("rand01 must lie in [0, 1)");
  const double norm_sq = state.amps.squaredNorm();
  if (std::abs(norm_sq - 1.0) > 2 * kStateNormSlack)
    throw InvalidStateError("state norm deviates from 1 by more than 1e-9");

  double p0 = bit_probability(state, wire, 0);
  p0 = std::min(1.0, std::max(0.0, p0));
  int bit;
  if (p0 < kCollapseFloor)
    bit = 1;  // the 0 branch is numerical noise
  else if (1.0 - p0 < kCollapseFloor)
    bit = 0;
  else
    bit = rand01 < p0 ? 0 : 1;
  const double prob = bit == 0 ? p0 : 1.0 - p0;

  Vector amps = state.amps;
  for (Eigen::Index i = 0; i < state.dim(); ++i)
    if (wire_bit(static_cast<int>(i), state.n_qubits, wire) != bit)
      amps[i] = 0.0;
  return {bit, prob, normalized(state.n_qubits, std::move(amps), prob)};
}

ProjectionResult project(const QubitState& state, const std::vector<int>& wires,
                         const QubitState& target) {
  check_wires(state, wires);
  const int k = static_cast<int>(wires.size());
  if (target.n_qubits != k)
    throw std::invalid_argument("target qubit count must equal wire count");

  int wires_mask = 0;
  for (int w : wires) wires_mask |= 1 << wire_shift(state.n_qubits, w);

  // Component along |target> x I_rest.
  Vector passed = Vector::Zero(state.dim());
  for (Eigen::Index rest = 0; rest < state.dim(); ++rest) {
    if (rest & wires_mask) continue;
    Complex overlap = 0.0;
    std::vector<Eigen::Index> idx(target.dim());
    for (Eigen::Index sub = 0; sub < target.dim(); ++sub) {
      Eigen::Index full = rest;
      for (int j = 0; j < k; ++j)
        if ((sub >> (k - 1 - j)) & 1)
          full |= Eigen::Index{1} << wire_shift(state.n_qubits, wires[j]);
      idx[sub] = full;
      overlap += std::conj(target.amps[sub]) * state.amps[full];
    }
    for (Eigen::Index sub = 0; sub < target.dim(); ++sub)
      passed[idx[sub]] = target.amps[sub] * overlap;
  }

  const Vector failed = state.amps - passed;
  const double pass_prob = passed.squaredNorm();
  const double fail_prob = failed.squaredNorm();

  ProjectionResult result;
  result.pass_prob = std::min(1.0, pass_prob);
  if (pass_prob >= kCollapseFloor)
    result.passed_state = normalized(state.n_qubits, std::move(passed), pass_prob);
  if (fail_prob >= kCollapseFloor)
    result.failed_state = normalized(state.n_qubits, failed, fail_prob);
  return result;
}

Complex inner_product(const QubitState& a, const QubitState& b) {
  if (a.n_qubits != b.n_qubits)
    throw std::invalid_argument("states have different qubit counts");
  return a.amps.dot(b.amps);
}

}  // namespace qgamble
