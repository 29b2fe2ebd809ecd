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

#include "qenc/gates.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace qenc {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::complex<double> omega_pow(const FieldSpec &f, std::uint32_t e) {
    return std::polar(1.0, kTwoPi * static_cast<double>(e % f.p()) / f.p());
}

std::complex<double> phase_value(const FieldSpec &f, int phase) {
    return std::polar(1.0, kTwoPi * phase / phase_modulus(f));
}

// i^e for the even-q phase gates.
std::complex<double> i_pow(int e) {
    static const std::complex<double> table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[((e % 4) + 4) % 4];
}

}  // namespace

std::string_view to_string(GateKind kind) {
    switch (kind) {
        case GateKind::Fourier: return "F";
        case GateKind::Mult: return "M";
        case GateKind::PhaseP: return "P";
        case GateKind::PauliX: return "X";
        case GateKind::PauliZ: return "Z";
        case GateKind::Add: return "ADD";
        case GateKind::AddInverse: return "ADDINV";
        case GateKind::Horner: return "HORNER";
    }
    return "?";
}

int arity(GateKind kind) {
    switch (kind) {
        case GateKind::Add:
        case GateKind::AddInverse: return 2;
        case GateKind::Horner: return 3;
        default: return 1;
    }
}

bool has_param(GateKind kind) {
    return kind == GateKind::Mult || kind == GateKind::PhaseP || kind == GateKind::PauliX ||
           kind == GateKind::PauliZ;
}

Gate Gate::fourier(std::size_t q) { return Gate{GateKind::Fourier, {}, {q}}; }
Gate Gate::mult(std::size_t q, FieldElement gamma) { return Gate{GateKind::Mult, gamma, {q}}; }
Gate Gate::phase(std::size_t q, FieldElement gamma) { return Gate{GateKind::PhaseP, gamma, {q}}; }
Gate Gate::pauli_x(std::size_t q, FieldElement alpha) { return Gate{GateKind::PauliX, alpha, {q}}; }
Gate Gate::pauli_z(std::size_t q, FieldElement beta) { return Gate{GateKind::PauliZ, beta, {q}}; }
Gate Gate::add(std::size_t control, std::size_t target) { return Gate{GateKind::Add, {}, {control, target}}; }
Gate Gate::add_inverse(std::size_t control, std::size_t target) {
    return Gate{GateKind::AddInverse, {}, {control, target}};
}
Gate Gate::horner(std::size_t a, std::size_t x, std::size_t target) {
    return Gate{GateKind::Horner, {}, {a, x, target}};
}

Gate Gate::on(std::vector<std::size_t> new_qudits) const {
    Gate g = *this;
    g.qudits = std::move(new_qudits);
    return g;
}

bool operator==(const Gate &a, const Gate &b) {
    if (a.kind != b.kind || a.qudits != b.qudits) return false;
    return !has_param(a.kind) || a.param == b.param;
}

void check_gate(const Gate &gate) {
    if (static_cast<int>(gate.qudits.size()) != arity(gate.kind)) {
        throw Error(ErrorCode::InvalidGate, std::string(to_string(gate.kind)) + " needs " +
                                                std::to_string(arity(gate.kind)) + " qudit indices");
    }
    for (std::size_t i = 0; i < gate.qudits.size(); ++i) {
        if (gate.qudits[i] == 0) throw Error(ErrorCode::IndexOutOfRange, "qudit indices are 1-based");
        for (std::size_t j = i + 1; j < gate.qudits.size(); ++j) {
            if (gate.qudits[i] == gate.qudits[j]) {
                throw Error(ErrorCode::InvalidGate, std::string(to_string(gate.kind)) + " repeats a qudit");
            }
        }
    }
    if (has_param(gate.kind) && gate.param.tables() == nullptr) {
        throw Error(ErrorCode::InvalidGate, std::string(to_string(gate.kind)) + " is missing its parameter");
    }
    if (gate.kind == GateKind::Mult && gate.param.is_zero()) {
        throw Error(ErrorCode::InvalidGate, "M needs a nonzero gamma");
    }
}

void Circuit::check() const {
    for (const auto &g : gates) {
        check_gate(g);
        for (auto q : g.qudits) {
            if (q > n) {
                throw Error(ErrorCode::IndexOutOfRange,
                            "qudit " + std::to_string(q) + " outside register of width " + std::to_string(n));
            }
        }
        if (has_param(g.kind)) (void)(g.param == field.zero());
    }
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == 0 || pivots[i] > n) {
            throw Error(ErrorCode::IndexOutOfRange, "pivot " + std::to_string(pivots[i]) + " out of range");
        }
        for (std::size_t j = i + 1; j < pivots.size(); ++j) {
            if (pivots[i] == pivots[j]) throw Error(ErrorCode::InvalidGate, "pivots repeat");
        }
    }
}

bool operator==(const Circuit &a, const Circuit &b) {
    return a.field == b.field && a.n == b.n && a.gates == b.gates && a.direction == b.direction &&
           a.pivots == b.pivots;
}

TableauAction action(const Gate &gate, const FieldSpec &field) {
    check_gate(gate);
    const FieldSpec f = field;
    const FieldElement zero = f.zero(), one = f.one();
    TableauAction act;
    act.matrix = {one, zero, zero, one};
    act.phase = [](const FieldElement &, const FieldElement &) { return 0; };
    switch (gate.kind) {
        case GateKind::Fourier:
            act.matrix = {zero, -one, one, zero};
            // F^dagger X_a Z_b F = Z_{-a} X_b = omega^{-tr(ab)} X_b Z_{-a}
            act.phase = [f](const FieldElement &a, const FieldElement &b) {
                return omega_phase(f, -static_cast<long long>(trace(a * b).repr()));
            };
            break;
        case GateKind::Mult: {
            const FieldElement g = gate.param;
            act.matrix = {inv(g), zero, zero, g};
            break;
        }
        case GateKind::PhaseP: {
            const FieldElement g = gate.param;
            act.matrix = {one, g, zero, one};
            if (f.p() == 2) {
                // P_g^dagger X_a P_g = i^{wgt(a sqrt(g))} X_a Z_{a g}
                const FieldElement root = f(f.sqrt2(g.repr()));
                act.phase = [f, root](const FieldElement &a, const FieldElement &) {
                    return f.wgt((a * root).repr()) % 4;
                };
            } else {
                // P_g^dagger X_a P_g = omega^{tr(g a^2 / 2)} X_a Z_{a g}
                const FieldElement half = inv(f.from_int(2));
                act.phase = [f, g, half](const FieldElement &a, const FieldElement &) {
                    return omega_phase(f, trace(half * g * a * a).repr());
                };
            }
            break;
        }
        case GateKind::PauliX: {
            const FieldElement shift = gate.param;
            act.phase = [f, shift](const FieldElement &, const FieldElement &b) {
                return omega_phase(f, trace(shift * b).repr());
            };
            break;
        }
        case GateKind::PauliZ: {
            const FieldElement shift = gate.param;
            act.phase = [f, shift](const FieldElement &a, const FieldElement &) {
                return omega_phase(f, -static_cast<long long>(trace(a * shift).repr()));
            };
            break;
        }
        case GateKind::Add:
        case GateKind::AddInverse:
            act.two_qudit = true;
            act.add_sign = gate.kind == GateKind::Add ? 1 : -1;
            break;
        case GateKind::Horner:
            throw Error(ErrorCode::NoTableau, "HORNER has no tableau action");
    }
    return act;
}

PauliOperator conjugate_label(const Gate &gate, const PauliOperator &op) {
    const FieldSpec &f = op.label.field;
    const TableauAction act = action(gate, f);
    for (auto q : gate.qudits) {
        if (q > op.label.n()) {
            throw Error(ErrorCode::IndexOutOfRange,
                        "gate on qudit " + std::to_string(q) + " for a label of width " + std::to_string(op.label.n()));
        }
    }
    PauliOperator out = op;
    if (act.two_qudit) {
        const std::size_t c = gate.qudits[0] - 1, t = gate.qudits[1] - 1;
        if (act.add_sign > 0) {
            out.label.z[c] = op.label.z[c] + op.label.z[t];
            out.label.x[t] = op.label.x[t] - op.label.x[c];
        } else {
            out.label.z[c] = op.label.z[c] - op.label.z[t];
            out.label.x[t] = op.label.x[t] + op.label.x[c];
        }
        return out;
    }
    const std::size_t i = gate.qudits[0] - 1;
    const FieldElement a = op.label.x[i], b = op.label.z[i];
    const auto &m = act.matrix;
    out.label.x[i] = a * m[0] + b * m[2];
    out.label.z[i] = a * m[1] + b * m[3];
    return PauliOperator(std::move(out.label), op.phase + act.phase(a, b));
}

std::vector<Gate> inverse(const Gate &gate, const FieldSpec &field) {
    check_gate(gate);
    const std::size_t q = gate.qudits[0];
    switch (gate.kind) {
        case GateKind::Fourier:
            // F^2 = M_{-1}
            if (field.p() == 2) return {gate};
            return {gate, Gate::mult(q, -field.one())};
        case GateKind::Mult: return {Gate::mult(q, inv(gate.param))};
        case GateKind::PhaseP:
            if (field.p() == 2) {
                // P_g^2 = Z_{sqrt g}
                const FieldElement root = field(field.sqrt2(gate.param.repr()));
                if (root.is_zero()) return {gate};
                return {gate, Gate::pauli_z(q, root)};
            }
            return {Gate::phase(q, -gate.param)};
        case GateKind::PauliX: return {Gate::pauli_x(q, -gate.param)};
        case GateKind::PauliZ: return {Gate::pauli_z(q, -gate.param)};
        case GateKind::Add: return {Gate::add_inverse(gate.qudits[0], gate.qudits[1])};
        case GateKind::AddInverse: return {Gate::add(gate.qudits[0], gate.qudits[1])};
        case GateKind::Horner:
            // HORNER^k adds k*a*x; the inverse adds (p-1)*a*x.
            return std::vector<Gate>(field.p() - 1, gate);
    }
    return {};
}

Circuit inverse(const Circuit &circuit) {
    Circuit out{circuit.field, circuit.n, {}, circuit.direction == Direction::Decoder ? Direction::Encoder
                                                                                     : Direction::Decoder,
                circuit.pivots};
    for (auto it = circuit.gates.rbegin(); it != circuit.gates.rend(); ++it) {
        for (auto &g : inverse(*it, circuit.field)) out.gates.push_back(std::move(g));
    }
    return out;
}

PauliOperator propagate(const Gate &gate, const PauliOperator &op) {
    // U op U^dagger = (U^dagger)^dagger op U^dagger, and U^dagger is the
    // temporal list h_1..h_k, i.e. the operator h_k...h_1.
    const auto inv_gates = inverse(gate, op.label.field);
    PauliOperator out = op;
    for (auto it = inv_gates.rbegin(); it != inv_gates.rend(); ++it) out = conjugate_label(*it, out);
    return out;
}

PauliOperator propagate(const Circuit &circuit, const PauliOperator &op) {
    PauliOperator out = op;
    for (const auto &g : circuit.gates) out = propagate(g, out);
    return out;
}

Eigen::MatrixXcd unitary(const Gate &gate, const FieldSpec &f) {
    check_gate(gate);
    const int w = arity(gate.kind);
    const std::uint32_t q = f.q();
    std::size_t dim = 1;
    for (int i = 0; i < w; ++i) dim *= q;
    if (dim > 4096) throw Error(ErrorCode::TooLarge, "dense gate unitary too large");
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    const std::uint32_t g = has_param(gate.kind) ? gate.param.repr() : 0;
    switch (gate.kind) {
        case GateKind::Fourier: {
            const double s = 1.0 / std::sqrt(static_cast<double>(q));
            for (std::uint32_t x = 0; x < q; ++x)
                for (std::uint32_t z = 0; z < q; ++z) u(z, x) = s * omega_pow(f, f.trace(f.mul(x, z)));
            break;
        }
        case GateKind::Mult:
            for (std::uint32_t y = 0; y < q; ++y) u(f.mul(g, y), y) = 1.0;
            break;
        case GateKind::PhaseP:
            if (f.p() == 2) {
                const std::uint32_t root = f.sqrt2(g);
                for (std::uint32_t y = 0; y < q; ++y) u(y, y) = i_pow(-f.wgt(f.mul(root, y)));
            } else {
                const std::uint32_t half = f.inv(2 % f.p());
                for (std::uint32_t y = 0; y < q; ++y) {
                    const std::uint32_t e = f.trace(f.mul(half, f.mul(g, f.mul(y, y))));
                    u(y, y) = omega_pow(f, f.p() - e);
                }
            }
            break;
        case GateKind::PauliX:
            for (std::uint32_t x = 0; x < q; ++x) u(f.add(x, g), x) = 1.0;
            break;
        case GateKind::PauliZ:
            for (std::uint32_t z = 0; z < q; ++z) u(z, z) = omega_pow(f, f.trace(f.mul(g, z)));
            break;
        case GateKind::Add:
        case GateKind::AddInverse:
            for (std::uint32_t x = 0; x < q; ++x) {
                for (std::uint32_t y = 0; y < q; ++y) {
                    const std::uint32_t t = gate.kind == GateKind::Add ? f.add(x, y) : f.sub(y, x);
                    u(x * q + t, x * q + y) = 1.0;
                }
            }
            break;
        case GateKind::Horner:
            for (std::uint32_t a = 0; a < q; ++a)
                for (std::uint32_t x = 0; x < q; ++x)
                    for (std::uint32_t b = 0; b < q; ++b)
                        u((a * q + x) * q + f.add(f.mul(a, x), b), (a * q + x) * q + b) = 1.0;
            break;
    }
    return u;
}

Eigen::MatrixXcd unitary(const PauliOperator &op) {
    const FieldSpec &f = op.label.field;
    const std::uint32_t q = f.q();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1) * phase_value(f, op.phase);
    for (std::size_t i = 0; i < op.label.n(); ++i) {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(q, q);
        const std::uint32_t a = op.label.x[i].repr(), b = op.label.z[i].repr();
        for (std::uint32_t z = 0; z < q; ++z) m(f.add(z, a), z) = omega_pow(f, f.trace(f.mul(b, z)));
        Eigen::MatrixXcd next(out.rows() * q, out.cols() * q);
        for (Eigen::Index r = 0; r < out.rows(); ++r)
            for (Eigen::Index c = 0; c < out.cols(); ++c) next.block(r * q, c * q, q, q) = out(r, c) * m;
        out = std::move(next);
    }
    return out;
}

std::vector<Gate> solve_to_x(const FieldElement &alpha, const FieldElement &beta, std::size_t qudit) {
    if (alpha.is_zero() && beta.is_zero()) throw Error(ErrorCode::ZeroLabel, "(0,0) cannot be normalized");
    std::vector<Gate> out;
    if (!alpha.is_zero()) {
        // (a, b) -M_a-> (1, a b) -P_{-a b}-> (1, 0)
        if (!alpha.is_one()) out.push_back(Gate::mult(qudit, alpha));
        const FieldElement g = -(alpha * beta);
        if (!g.is_zero()) out.push_back(Gate::phase(qudit, g));
    } else {
        // (0, b) -F-> (b, 0) -M_b-> (1, 0)
        out.push_back(Gate::fourier(qudit));
        if (!beta.is_one()) out.push_back(Gate::mult(qudit, beta));
    }
    return out;
}

std::vector<Gate> solve_to_z(const FieldElement &alpha, const FieldElement &beta, std::size_t qudit) {
    if (alpha.is_zero() && beta.is_zero()) throw Error(ErrorCode::ZeroLabel, "(0,0) cannot be normalized");
    std::vector<Gate> out;
    if (!alpha.is_zero()) {
        // (a, b) -M_{-a}-> (-1, -a b) -P_{-a b}-> (-1, 0) -F-> (0, 1)
        const FieldElement m = -alpha;
        if (!m.is_one()) out.push_back(Gate::mult(qudit, m));
        const FieldElement g = -(alpha * beta);
        if (!g.is_zero()) out.push_back(Gate::phase(qudit, g));
        out.push_back(Gate::fourier(qudit));
    } else if (!beta.is_one()) {
        out.push_back(Gate::mult(qudit, inv(beta)));
    }
    return out;
}

std::pair<FieldElement, FieldElement> apply_action(const std::vector<Gate> &gates, FieldElement alpha,
                                                   FieldElement beta) {
    for (const auto &g : gates) {
        switch (g.kind) {
            case GateKind::Fourier: {
                const FieldElement a = alpha;
                alpha = beta;
                beta = -a;
                break;
            }
            case GateKind::Mult:
                alpha = inv(g.param) * alpha;
                beta = g.param * beta;
                break;
            case GateKind::PhaseP: beta = g.param * alpha + beta; break;
            case GateKind::PauliX:
            case GateKind::PauliZ: break;
            default: throw Error(ErrorCode::InvalidGate, "apply_action takes single-qudit gates only");
        }
    }
    return {alpha, beta};
}

}  // namespace qenc
