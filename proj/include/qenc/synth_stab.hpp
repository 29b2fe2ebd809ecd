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

// Decoder and encoder synthesis for general stabilizer codes: each row is
// normalized qudit by qudit with SL(2, F_q) gates, cleared with ADD
// cascades, and the pivots end up as single-qudit Z generators.

#include <cstdint>
#include <random>
#include <vector>

#include "qenc/gates.hpp"
#include "qenc/pauli.hpp"

namespace qenc {

/// x_target normalizes entries to (1, 0) and ends with a Fourier layer on
/// the pivots; z_target normalizes to (0, 1) and needs no final layer.
enum class Variant { XTarget, ZTarget };

/// Record of one processed row.
struct RowStep {
    std::size_t row = 0;    // 1-based
    std::size_t pivot = 0;  // 1-based column l appended to L
    std::vector<std::vector<Gate>> t_gates;  // per qudit, empty when untouched
    std::vector<Gate> adds;
    StabilizerMatrix after_t;
    StabilizerMatrix after_a;
};

struct SynthesisResult {
    Circuit decoder;
    Circuit encoder;
    std::vector<std::size_t> pivots;  // L, 1-based, in selection order
    std::vector<RowStep> step_log;
    /// Conjugation-order gate list g_1..g_N: the rows of the input, pushed
    /// through U^dagger g U for each gate in turn, become final_matrix.
    std::vector<Gate> forward;
    StabilizerMatrix final_matrix;
    std::size_t add_count = 0;
    std::size_t single_count = 0;
    /// Row-entry updates performed; the runtime model is O(n (n-k)^2).
    std::uint64_t operations = 0;
};

/// Throws NotAbelian/RankDeficient/InvalidCode for invalid input.
SynthesisResult synthesize(const StabilizerMatrix &matrix, Variant variant = Variant::XTarget);

/// ADD bound n(n-k) - (n-k)(n-k+1)/2.
std::size_t gate_count_bound(std::size_t n, std::size_t k);

/// Row dst += scale * row src (a change of generators). Throws IndexOutOfRange or InvalidCode when src == dst.
StabilizerMatrix apply_row_addition(const StabilizerMatrix &matrix, std::size_t src, std::size_t dst);
StabilizerMatrix apply_row_addition(const StabilizerMatrix &matrix, std::size_t src, std::size_t dst,
                                    const FieldElement &scale);

/// Complement of the pivots in ascending order: where the message sits.
std::vector<std::size_t> message_qudits(std::size_t n, const std::vector<std::size_t> &pivots);

/// The code <Z^(1), ..., Z^(n-k)> conjugated by a random word of
/// single-qudit gates and ADDs, followed by random generator changes.
StabilizerMatrix random_stabilizer(const FieldSpec &f, std::size_t n, std::size_t k, std::mt19937_64 &rng);

}  // namespace qenc
