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

// Dense state-vector oracle: gate application, stabilizer eigenvalue checks,
// end-to-end encoder verification and the Knill-Laflamme condition.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qenc/gates.hpp"
#include "qenc/pauli.hpp"

namespace qenc {

using Amplitude = std::complex<double>;

/// Largest state the simulator allocates.
constexpr std::size_t kMaxAmplitudes = std::size_t{1} << 21;

/// Amplitudes indexed by base-q digits with qudit 1 most significant.
class StateVector {
  public:
    /// |0...0>. Throws TooLarge above kMaxAmplitudes.
    StateVector(FieldSpec field, std::size_t n);
    static StateVector basis(const FieldSpec &field, const std::vector<std::uint32_t> &digits);

    const FieldSpec &field() const { return field_; }
    std::size_t n() const { return n_; }
    std::size_t dim() const { return amp_.size(); }
    std::vector<Amplitude> &amplitudes() { return amp_; }
    const std::vector<Amplitude> &amplitudes() const { return amp_; }
    Amplitude &operator[](std::size_t i) { return amp_[i]; }
    const Amplitude &operator[](std::size_t i) const { return amp_[i]; }

    std::size_t index(const std::vector<std::uint32_t> &digits) const;
    std::vector<std::uint32_t> digits(std::size_t index) const;
    /// Stride of qudit i (1-based): q^(n-i).
    std::size_t stride(std::size_t qudit) const;

    double norm() const;
    /// <this|other>
    Amplitude inner(const StateVector &other) const;
    double distance(const StateVector &other) const;

  private:
    FieldSpec field_;
    std::size_t n_;
    std::vector<Amplitude> amp_;
};

/// Throws IndexOutOfRange for qudits outside the register.
void apply(StateVector &state, const Gate &gate);
void apply(StateVector &state, const Circuit &circuit);
/// phase * X_alpha Z_beta applied to the state.
void apply(StateVector &state, const PauliOperator &op);

/// Eigenvalue of `op` on `state`; throws NotEigenstate with the residual norm.
Amplitude eigencheck(const StateVector &state, const PauliOperator &op, double tol = 1e-8);

struct VerifyReport {
    bool pass = true;
    std::size_t messages = 0;
    std::vector<Amplitude> eigenvalues;  // per generator
    /// Eigenvalues that are not p-th roots of unity (possible for p = 2).
    bool non_root_eigenvalue = false;
    /// Pivot offsets a with X_a applied to the input when normalization succeeded.
    std::optional<std::vector<std::uint32_t>> offsets;
    bool unnormalizable = false;
    /// Counterexample in key=value form, empty on success.
    std::string failure;
};

struct VerifyOptions {
    std::size_t samples = 10;
    std::uint64_t seed = 1;
    bool normalize = false;
    double tol = 1e-8;
};

/// Checks the encoder on sampled messages placed on the non-pivot qudits:
/// outputs are common eigenstates with message-independent eigenvalues,
/// the decoder restores the input, and distinct messages are orthogonal.
VerifyReport verify_encoder(const StabilizerMatrix &matrix, const Circuit &encoder, const Circuit &decoder,
                            const VerifyOptions &options);
/// As above with the decoder taken as the inverse of the encoder.
VerifyReport verify_encoder(const StabilizerMatrix &matrix, const Circuit &encoder, const VerifyOptions &options);

struct KLViolation {
    std::size_t i, j, k, l;
    Amplitude value;
};

struct KLReport {
    std::size_t codewords = 0;
    std::vector<PauliLabel> errors;
    /// alpha_{k,l} read from the first codeword.
    std::vector<std::vector<Amplitude>> matrix;
    std::vector<KLViolation> violations;  // first few only
    std::size_t violation_count = 0;
    bool pass() const { return violation_count == 0; }
};

/// All labels of weight at most t on n qudits, identity first.
std::vector<PauliLabel> low_weight_errors(const FieldSpec &f, std::size_t n, std::size_t t);

/// <c_i| E_k^dagger E_l |c_j> = delta_ij alpha_kl over errors of weight <= t.
/// Enforces n <= 5, K <= 4, t <= 1 (TooLarge otherwise).
KLReport kl_check(const std::vector<StateVector> &codewords, std::size_t t, double tol = 1e-8);

/// Encoded basis states E|0_L, m> for every message m, in lexicographic order.
std::vector<StateVector> encode_all(const Circuit &encoder, std::size_t max_states = 4);

}  // namespace qenc
