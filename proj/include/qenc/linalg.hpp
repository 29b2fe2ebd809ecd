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

// Dense linear algebra over F_q on raw element reprs.

#include <cstdint>
#include <vector>

#include "qenc/gf.hpp"

namespace qenc {

using FqRow = std::vector<std::uint32_t>;
using FqMatrix = std::vector<FqRow>;

struct EchelonForm {
    FqMatrix rows;                   // nonzero rows, reduced, unit pivots
    std::vector<std::size_t> pivots; // pivot column of each row
};

/// Reduced row echelon form; zero rows are dropped.
EchelonForm rref(const FieldSpec &f, FqMatrix a);
std::size_t rank(const FieldSpec &f, const FqMatrix &a);
/// Basis of { v : a v^T = 0 }, one row per basis vector.
FqMatrix nullspace(const FieldSpec &f, const FqMatrix &a, std::size_t cols);

/// Incremental span membership over F_q.
class SpanBuilder {
  public:
    SpanBuilder(const FieldSpec &f, std::size_t cols) : f_(f), cols_(cols) {}

    /// Adds v if it is independent of the rows seen so far; returns whether it was added.
    bool add(const FqRow &v);
    bool contains(const FqRow &v) const;
    std::size_t size() const { return reduced_.size(); }

  private:
    FqRow reduce(FqRow v) const;

    FieldSpec f_;
    std::size_t cols_;
    FqMatrix reduced_;
    std::vector<std::size_t> pivots_;
};

}  // namespace qenc
