// Copyright 2026 The qenc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// The elementary gate set, its conjugation action U^dagger g U on
// error-group labels, dense unitaries for the simulation oracle, and the
// SL(2, F_q) normalization used by the synthesis algorithm.

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qenc/gf.hpp"
#include "qenc/pauli.hpp"

namespace qenc {

enum class GateKind { Fourier, Mult, PhaseP, PauliX, PauliZ, Add, AddInverse, Horner };

std::string_view to_string(GateKind kind);
int arity(GateKind kind);
bool has_param(GateKind kind);

/// One gate on 1-based qudit indices. For Add/AddInverse the order is
/// (control, target); for Horner (a, x, target).
struct Gate {
    GateKind kind;
    FieldElement param;  // gamma for Mult/PhaseP, alpha for PauliX, beta for PauliZ
    std::vector<std::size_t> qudits;

    static Gate fourier(std::size_t q);
    static Gate mult(std::size_t q, FieldElement gamma);
    static Gate phase(std::size_t q, FieldElement gamma);
    static Gate pauli_x(std::size_t q, FieldElement alpha);
    static Gate pauli_z(std::size_t q, FieldElement beta);
    static Gate add(std::size_t control, std::size_t target);
    static Gate add_inverse(std::size_t control, std::size_t target);
    static Gate horner(std::size_t a, std::size_t x, std::size_t target);

    bool single_qudit() const { return qudits.size() == 1; }
    /// Same gate moved to other qudits.
    Gate on(std::vector<std::size_t> new_qudits) const;

    friend bool operator==(const Gate &a, const Gate &b);
};

/// Throws InvalidGate on a zero Mult parameter, repeated qudits, or a wrong index count.
void check_gate(const Gate &gate);

enum class Direction { Decoder, Encoder };

struct Circuit {
    FieldSpec field;
    std::size_t n = 0;
    std::vector<Gate> gates;  // temporal order, first applied first
    Direction direction = Direction::Encoder;
    std::vector<std::size_t> pivots;

    /// Throws IndexOutOfRange for qudits outside [1, n] and InvalidGate for bad gates or pivots.
    void check() const;

    friend bool operator==(const Circuit &a, const Circuit &b);
};

/// Label map of one gate under g -> U^dagger g U.
/// Single-qudit gates act on the row vector (alpha, beta) by right
/// multiplication with `matrix` = [a b; c d], i.e. (alpha a + beta c, alpha b + beta d),
/// and contribute `phase(alpha, beta)` in PauliOperator phase units.
/// Add moves beta_target into beta_control and subtracts alpha_control from
/// alpha_target; AddInverse does the opposite. Neither adds a phase.
struct TableauAction {
    bool two_qudit = false;
    int add_sign = 0;  // +1 Add, -1 AddInverse
    std::array<FieldElement, 4> matrix;
    std::function<int(const FieldElement &, const FieldElement &)> phase;
};

/// Throws NoTableau for Horner.
TableauAction action(const Gate &gate, const FieldSpec &field);

/// U^dagger op U for the gate's unitary U.
PauliOperator conjugate_label(const Gate &gate, const PauliOperator &op);
/// U op U^dagger: how a stabilizer of the input transforms when the gate is applied.
PauliOperator propagate(const Gate &gate, const PauliOperator &op);
/// V op V^dagger for the circuit operator V (gates applied in temporal order).
PauliOperator propagate(const Circuit &circuit, const PauliOperator &op);

/// Gates whose temporal composition is the inverse of `gate`.
std::vector<Gate> inverse(const Gate &gate, const FieldSpec &field);
/// Reversed order, every gate inverted; direction flipped.
Circuit inverse(const Circuit &circuit);

/// Dense q^w x q^w unitary on the gate's own qudits (first listed is most significant).
Eigen::MatrixXcd unitary(const Gate &gate, const FieldSpec &field);
/// Dense matrix of phase * X_alpha Z_beta on n qudits (qudit 1 most significant).
Eigen::MatrixXcd unitary(const PauliOperator &op);

/// Single-qudit gates on `qudit` whose composed action maps (alpha, beta) to (1, 0).
/// At most three gates: [Mult(alpha), PhaseP(-alpha beta)] or [Fourier, Mult(beta)],
/// identity factors dropped. Throws ZeroLabel on (0, 0).
std::vector<Gate> solve_to_x(const FieldElement &alpha, const FieldElement &beta, std::size_t qudit = 1);
/// As solve_to_x with target (0, 1): [Mult(-alpha), PhaseP(-alpha beta), Fourier] or [Mult(1/beta)].
std::vector<Gate> solve_to_z(const FieldElement &alpha, const FieldElement &beta, std::size_t qudit = 1);

/// Image of (alpha, beta) under the composed actions of single-qudit gates.
std::pair<FieldElement, FieldElement> apply_action(const std::vector<Gate> &gates, FieldElement alpha,
                                                   FieldElement beta);

}  // namespace qenc
