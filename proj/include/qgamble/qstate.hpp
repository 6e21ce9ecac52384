#pragma once

#include <optional>
#include <vector>

#include "qgamble/types.hpp"

namespace qgamble {

// Dense state vector over the computational basis of up to 3 qubits.
// Wires are indexed A=0, B=1, C=2 and the basis index is 4a + 2b + c,
// i.e. wire 0 is the most significant bit, so ket strings |ABC> read
// left to right.
struct QubitState {
  int n_qubits = 0;
  Vector amps;

  Eigen::Index dim() const { return amps.size(); }
};

struct UnitaryMatrix {
  int dim = 0;
  Matrix entries;
};

// Outcome of a projective (pass/fail) measurement. A branch is absent when
// its probability falls below kCollapseFloor.
struct ProjectionResult {
  double pass_prob = 0.0;
  std::optional<QubitState> passed_state;
  std::optional<QubitState> failed_state;
};

struct MeasureResult {
  int bit = 0;
  double prob = 0.0;
  QubitState collapsed;
};

/// |basis_index> on n_qubits wires.
QubitState new_basis_state(int n_qubits, int basis_index);

/// Validates U+U = I within kNormTol; throws std::invalid_argument otherwise.
UnitaryMatrix make_unitary(Matrix entries);

/// Born probability of reading `bit` on `wire`.
double bit_probability(const QubitState& state, int wire, int bit);

/// Applies u to the listed wires (identity elsewhere). The first wire in the
/// list is the most significant bit of u's basis.
QubitState apply_unitary(const QubitState& state, const UnitaryMatrix& u,
                         const std::vector<int>& wires);

// Measures one wire: outcome 0 iff rand01 < P(0); outcomes with probability
// below kCollapseFloor are never returned. The collapsed state is
// renormalized.
MeasureResult measure_qubit(const QubitState& state, int wire, double rand01);

// Projects the listed wires onto |target><target| (identity on the rest).
ProjectionResult project(const QubitState& state, const std::vector<int>& wires,
                         const QubitState& target);

/// <a|b> with conjugation on a.
Complex inner_product(const QubitState& a, const QubitState& b);

}  // namespace qgamble
