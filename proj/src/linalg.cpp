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

#include "qenc/linalg.hpp"

namespace qenc {

EchelonForm rref(const FieldSpec &f, FqMatrix a) {
    EchelonForm out;
    if (a.empty()) return out;
    const std::size_t cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t sel = r;
        while (sel < a.size() && a[sel][c] == 0) ++sel;
        if (sel == a.size()) continue;
        std::swap(a[r], a[sel]);
        const std::uint32_t s = f.inv(a[r][c]);
        for (auto &v : a[r]) v = f.mul(v, s);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            const std::uint32_t factor = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] = f.sub(a[i][j], f.mul(factor, a[r][j]));
        }
        out.pivots.push_back(c);
        ++r;
    }
    a.resize(r);
    out.rows = std::move(a);
    return out;
}

std::size_t rank(const FieldSpec &f, const FqMatrix &a) { return rref(f, a).rows.size(); }

FqMatrix nullspace(const FieldSpec &f, const FqMatrix &a, std::size_t cols) {
    const EchelonForm e = rref(f, a);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivots) is_pivot[c] = true;
    FqMatrix basis;
    for (std::size_t freec = 0; freec < cols; ++freec) {
        if (is_pivot[freec]) continue;
        FqRow v(cols, 0);
        v[freec] = 1;
        for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = f.neg(e.rows[r][freec]);
        basis.push_back(std::move(v));
    }
    return basis;
}

FqRow SpanBuilder::reduce(FqRow v) const {
    for (std::size_t r = 0; r < reduced_.size(); ++r) {
        const std::uint32_t c = v[pivots_[r]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < cols_; ++j) v[j] = f_.sub(v[j], f_.mul(c, reduced_[r][j]));
    }
    return v;
}

bool SpanBuilder::contains(const FqRow &v) const {
    const FqRow rest = reduce(v);
    for (auto x : rest) {
        if (x) return false;
    }
    return true;
}

bool SpanBuilder::add(const FqRow &v) {
    FqRow rest = reduce(v);
    std::size_t piv = 0;
    while (piv < cols_ && rest[piv] == 0) ++piv;
    if (piv == cols_) return false;
    const std::uint32_t s = f_.inv(rest[piv]);
    for (auto &x : rest) x = f_.mul(x, s);
    // Keep previously stored rows reduced against the new pivot.
    for (auto &row : reduced_) {
        const std::uint32_t c = row[piv];
        if (c == 0) continue;
        for (std::size_t j = 0; j < cols_; ++j) row[j] = f_.sub(row[j], f_.mul(c, rest[j]));
    }
    reduced_.push_back(std::move(rest));
    pivots_.push_back(piv);
    return true;
}

}  // namespace qenc
