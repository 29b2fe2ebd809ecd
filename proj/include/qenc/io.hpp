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

// Line-oriented text formats for fields, stabilizer matrices, circuits and
// classical generator matrices. Parse failures throw ParseError with a
// "<file>:<line>: <field>: <message>" diagnostic.

#include <iosfwd>
#include <string>

#include "qenc/gates.hpp"
#include "qenc/linalg.hpp"
#include "qenc/pauli.hpp"

namespace qenc {

/// A classical code given by the rows of a generator matrix.
struct ClassicalMatrix {
    FieldSpec field;
    std::size_t rows = 0;
    std::size_t cols = 0;
    FqMatrix data;

    friend bool operator==(const ClassicalMatrix &a, const ClassicalMatrix &b);
};

/// Parses `field p=<p> m=<m> poly=<c0,...,cm>`; m and poly may be omitted for prime fields.
FieldSpec parse_field_header(const std::string &line, const std::string &source = "<input>", std::size_t line_no = 1);

StabilizerMatrix read_stabilizer(std::istream &in, const std::string &source = "<input>");
void write_stabilizer(std::ostream &out, const StabilizerMatrix &matrix);

Circuit read_circuit(std::istream &in, const std::string &source = "<input>");
void write_circuit(std::ostream &out, const Circuit &circuit);
/// One gate in circuit-file syntax, e.g. `ADD c=1 t=2`.
std::string format_gate(const Gate &gate);

ClassicalMatrix read_matrix(std::istream &in, const std::string &source = "<input>");
void write_matrix(std::ostream &out, const ClassicalMatrix &matrix);

StabilizerMatrix load_stabilizer(const std::string &path);
Circuit load_circuit(const std::string &path);
ClassicalMatrix load_matrix(const std::string &path);
void save_stabilizer(const std::string &path, const StabilizerMatrix &matrix);
void save_circuit(const std::string &path, const Circuit &circuit);

}  // namespace qenc
