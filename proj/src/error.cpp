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

#include "qenc/error.hpp"

namespace qenc {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::UnsupportedField: return "UnsupportedField";
        case ErrorCode::InvalidField: return "InvalidField";
        case ErrorCode::NotIrreducible: return "NotIrreducible";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::NotAbelian: return "NotAbelian";
        case ErrorCode::RankDeficient: return "RankDeficient";
        case ErrorCode::InvalidCode: return "InvalidCode";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::NoTableau: return "NoTableau";
        case ErrorCode::ZeroLabel: return "ZeroLabel";
        case ErrorCode::InvalidGate: return "InvalidGate";
        case ErrorCode::NotEchelon: return "NotEchelon";
        case ErrorCode::NotNested: return "NotNested";
        case ErrorCode::InternalPivotMissing: return "InternalPivotMissing";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::NotEigenstate: return "NotEigenstate";
        case ErrorCode::Unnormalizable: return "Unnormalizable";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace qenc
