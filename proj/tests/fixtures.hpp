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

// Shared code fixtures for the test suites.

#include <vector>

#include "qenc/gf.hpp"
#include "qenc/linalg.hpp"
#include "qenc/pauli.hpp"

namespace qenc::fixtures {

inline FieldSpec gf3() { return FieldSpec::prime(3); }
inline FieldSpec gf4() { return FieldSpec(2, 2, {1, 1, 1}); }
inline FieldSpec gf8() { return FieldSpec(2, 3, {1, 1, 0, 1}); }
inline FieldSpec gf9() { return FieldSpec(3, 2, {1, 0, 1}); }

/// The [[9,5,3]]_3 stabilizer matrix of the worked example.
inline StabilizerMatrix nine_five(const FieldSpec &f) {
    return StabilizerMatrix::from_reprs(f, 9, 5,
                                        {
                                            {1, 0, 0, 2, 1, 2, 2, 0, 1, 0, 0, 2, 1, 2, 2, 0, 1, 1},
                                            {0, 1, 1, 2, 0, 2, 2, 1, 0, 0, 0, 1, 2, 1, 1, 0, 2, 2},
                                            {0, 0, 2, 1, 2, 2, 0, 1, 1, 1, 0, 2, 0, 0, 1, 2, 1, 2},
                                            {0, 0, 1, 2, 1, 1, 0, 2, 2, 0, 1, 2, 1, 1, 0, 2, 0, 2},
                                        });
}

/// Printed snapshots of the worked example: after T_1, after A_1, after rows 2, 3 and 4.
inline std::vector<std::vector<std::vector<std::uint32_t>>> nine_five_snapshots() {
    return {
        {{1, 0, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
         {0, 1, 2, 1, 0, 1, 1, 2, 0, 0, 0, 1, 2, 1, 1, 0, 2, 2},
         {0, 0, 1, 2, 2, 1, 0, 1, 1, 1, 0, 2, 2, 2, 1, 1, 2, 1},
         {0, 0, 1, 1, 1, 2, 0, 0, 2, 0, 1, 1, 0, 2, 1, 1, 1, 0}},
        {{1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
         {0, 1, 2, 1, 0, 1, 1, 2, 0, 0, 0, 1, 2, 1, 1, 0, 2, 2},
         {0, 0, 1, 2, 2, 1, 0, 1, 1, 0, 0, 2, 2, 2, 1, 1, 2, 1},
         {0, 0, 1, 1, 1, 2, 0, 0, 2, 0, 1, 1, 0, 2, 1, 1, 1, 0}},
        {{1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
         {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
         {0, 0, 2, 2, 2, 1, 0, 2, 2, 0, 0, 0, 1, 1, 0, 1, 2, 1},
         {0, 0, 2, 1, 2, 2, 0, 0, 0, 0, 0, 1, 1, 2, 2, 1, 2, 2}},
        {{1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
         {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
         {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
         {0, 0, 1, 1, 0, 1, 0, 2, 2, 0, 0, 0, 1, 2, 2, 0, 1, 1}},
        {{1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
         {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
         {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
         {0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    };
}

/// The five-qubit code XZZXI and its cyclic shifts.
inline StabilizerMatrix five_one(const FieldSpec &f2) {
    return StabilizerMatrix::from_reprs(f2, 5, 1,
                                        {
                                            {1, 0, 0, 1, 0, 0, 1, 1, 0, 0},
                                            {0, 1, 0, 0, 1, 0, 0, 1, 1, 0},
                                            {1, 0, 1, 0, 0, 0, 0, 0, 1, 1},
                                            {0, 1, 0, 1, 0, 1, 0, 0, 0, 1},
                                        });
}

/// The [[5,1,3]]_2 fixture with two entries of row 1 flipped (IZZYI): still valid, distance 2.
inline StabilizerMatrix five_one_mutated(const FieldSpec &f2) {
    auto m = five_one(f2);
    m.rows[0].x[0] = f2.zero();
    m.rows[0].z[3] = f2.one();
    return m;
}

/// [[7,3,3]]_8 CSS pair over GF(8) = F_2[x]/(x^3+x+1), entries as powers of alpha = x:
/// alpha^3 = 3, alpha^4 = 6, alpha^5 = 7.
inline FqMatrix seven_three_g() {
    return {{1, 0, 3, 1, 3, 2, 2}, {0, 1, 6, 1, 7, 7, 6}};
}

inline FqMatrix seven_three_h() {
    return {{1, 0, 3, 1, 3, 2, 2},
            {0, 1, 6, 1, 7, 7, 6},
            {0, 0, 1, 0, 0, 3, 7},
            {0, 0, 0, 1, 0, 2, 7},
            {0, 0, 0, 0, 1, 2, 6}};
}

}  // namespace qenc::fixtures
