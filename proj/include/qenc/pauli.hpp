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

// Error-group elements X_alpha Z_beta over n qudits, the trace-symplectic
// inner product, and stabilizer matrices (X|Z).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qenc/gf.hpp"
#include "qenc/linalg.hpp"

namespace qenc {

/// The (alpha, beta) label of X_alpha Z_beta; x holds alpha, z holds beta.
struct PauliLabel {
    FieldSpec field;
    std::vector<FieldElement> x;
    std::vector<FieldElement> z;

    static PauliLabel zeros(const FieldSpec &f, std::size_t n);
    static PauliLabel from_reprs(const FieldSpec &f, const std::vector<std::uint32_t> &x,
                                 const std::vector<std::uint32_t> &z);

    std::size_t n() const { return x.size(); }
    bool is_zero() const;
    /// (x_1..x_n, z_1..z_n) as raw reprs.
    FqRow to_row() const;
    static PauliLabel from_row(const FieldSpec &f, const FqRow &row);

    friend bool operator==(const PauliLabel &a, const PauliLabel &b);
};

/// Exponent modulus of the phase: p for odd p (powers of omega), 4 for p = 2 (powers of i).
int phase_modulus(const FieldSpec &f);
/// Converts an omega exponent to the phase exponent used by PauliOperator.
int omega_phase(const FieldSpec &f, long long omega_exponent);

/// phase * X_alpha Z_beta, phase in Z_p (odd p, exponent of omega) or Z_4 (p = 2, exponent of i).
struct PauliOperator {
    PauliLabel label;
    int phase = 0;

    PauliOperator(PauliLabel l, int ph = 0);

    friend bool operator==(const PauliOperator &a, const PauliOperator &b);
};

/// The (n-k) x 2n matrix (X|Z); one PauliLabel per generator.
struct StabilizerMatrix {
    FieldSpec field;
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<PauliLabel> rows;

    static StabilizerMatrix from_reprs(const FieldSpec &f, std::size_t n, std::size_t k,
                                       const std::vector<std::vector<std::uint32_t>> &rows_xz);
    /// Rows as 2n-entry raw vectors.
    FqMatrix to_rows() const;

    friend bool operator==(const StabilizerMatrix &a, const StabilizerMatrix &b);
};

struct CodeParameters {
    std::size_t n = 0;
    std::size_t k = 0;
    std::optional<int> d;
    std::uint32_t q = 0;
};

/// sum_i tr(alpha'_i beta_i - alpha_i beta'_i) for a = (alpha, beta), b = (alpha', beta').
FieldElement symplectic_product(const PauliLabel &a, const PauliLabel &b);
/// The F_q-valued form sum_i (alpha'_i beta_i - alpha_i beta'_i); its trace is symplectic_product.
FieldElement symplectic_form(const PauliLabel &a, const PauliLabel &b);
/// Exponent e with (X_a Z_b)(X_a' Z_b') = omega^e (X_a' Z_b')(X_a Z_b).
int commutation_phase(const PauliLabel &a, const PauliLabel &b);
/// Normal-form product a * b.
PauliOperator multiply(const PauliOperator &a, const PauliOperator &b);
/// Number of positions where (alpha_i, beta_i) != (0, 0).
std::size_t weight(const PauliLabel &a);

/// Checks commutation and full rank; throws NotAbelian, RankDeficient, InvalidCode.
CodeParameters validate(const StabilizerMatrix &matrix);

/// Minimum weight over C* \ C by exhaustive enumeration of the symplectic dual.
/// Throws TooLarge when q^(n+k) exceeds cap.
int min_distance_bruteforce(const StabilizerMatrix &matrix, std::uint64_t cap = 100000000ULL);

/// Basis of C* whose first n-k vectors are the rows of the matrix.
FqMatrix symplectic_dual_basis(const StabilizerMatrix &matrix);

std::string to_string(const PauliLabel &a);

}  // namespace qenc
