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

// Encoders for CSS codes built from nested classical codes C_2^perp in C_1:
// a Fourier layer on the pivots of G followed by scaled ADD cascades along
// the rows of H in reverse order.

#include <optional>

#include "qenc/gates.hpp"
#include "qenc/linalg.hpp"
#include "qenc/pauli.hpp"

namespace qenc {

/// G generates C_2^perp (r x n); H generates C_1 (k1 x n), is in row echelon
/// form with unit pivots, and its first r rows equal G.
struct CssInput {
    FieldSpec field;
    FqMatrix g;
    FqMatrix h;
};

struct CssBounds {
    std::size_t fourier = 0;
    std::size_t add_max = 0;
    std::size_t mult_max = 0;
};

/// Throws NotEchelon, NotNested, LengthMismatch or InvalidCode.
void check_css_input(const CssInput &input);

/// Pivot column (0-based) of every row of H.
std::vector<std::size_t> css_pivots(const CssInput &input);
/// Qudits (1-based) that carry the message: the pivots of the rows of H below G.
std::vector<std::size_t> css_message_qudits(const CssInput &input);

/// Encoder circuit; the pivots metadata lists every non-message qudit.
Circuit synthesize_css(const CssInput &input);

/// Bounds on F, ADD and multiplication gates for an [[n, k1 + k2 - n]] CSS code.
CssBounds css_gate_bounds(std::size_t n, std::size_t k1, std::size_t k2);

/// X generators from the rows of G and Z generators from a basis of C_1^perp.
StabilizerMatrix css_stabilizer_matrix(const CssInput &input);

/// Combines each multiplication gate with the next gate on the same qudit when that is also a multiplication.
Circuit merge_mult(const Circuit &circuit);

/// Builds a valid CssInput from arbitrary generators of C_2^perp and C_1:
/// G is reduced and H is G followed by a reduced completion. Throws
/// NotNested when span(G) is not inside span(H) and NotEchelon when no
/// completion keeps H in row echelon form.
CssInput echelonize(const FieldSpec &f, const FqMatrix &g, const FqMatrix &h);

/// The pair with the roles of C_1 and C_2 exchanged: G' spans C_1^perp and H' spans C_2.
/// Empty when the exchanged pair has no echelon form starting with G'.
std::optional<CssInput> swap_roles(const CssInput &input);

}  // namespace qenc
