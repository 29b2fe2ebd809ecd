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

#include "qenc/synth_css.hpp"

#include <algorithm>

namespace qenc {

namespace {

std::size_t leading(const FqRow &row) {
    for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j] != 0) return j;
    return row.size();
}

}  // namespace

void check_css_input(const CssInput &in) {
    const FieldSpec &f = in.field;
    if (in.h.empty()) throw Error(ErrorCode::InvalidCode, "H has no rows");
    const std::size_t n = in.h[0].size();
    if (n == 0) throw Error(ErrorCode::InvalidCode, "H has no columns");
    for (const auto *m : {&in.g, &in.h}) {
        for (const auto &row : *m) {
            if (row.size() != n) throw Error(ErrorCode::LengthMismatch, "G and H rows must all have length " + std::to_string(n));
            for (auto v : row)
                if (v >= f.q()) throw Error(ErrorCode::FieldMismatch, "matrix entry outside the field");
        }
    }
    if (in.g.size() > in.h.size()) throw Error(ErrorCode::NotNested, "G has more rows than H");
    std::size_t prev = 0;
    for (std::size_t i = 0; i < in.h.size(); ++i) {
        const std::size_t p = leading(in.h[i]);
        if (p == n) throw Error(ErrorCode::NotEchelon, "row " + std::to_string(i + 1) + " of H is zero");
        if (i > 0 && p <= prev) {
            throw Error(ErrorCode::NotEchelon, "pivot of H row " + std::to_string(i + 1) + " is not right of the row above");
        }
        if (in.h[i][p] != 1) throw Error(ErrorCode::NotEchelon, "pivot of H row " + std::to_string(i + 1) + " is not 1");
        prev = p;
    }
    SpanBuilder span(f, n);
    for (const auto &row : in.h) span.add(row);
    for (std::size_t i = 0; i < in.g.size(); ++i) {
        if (!span.contains(in.g[i])) {
            throw Error(ErrorCode::NotNested, "row " + std::to_string(i + 1) + " of G is not in the span of H");
        }
        if (in.g[i] != in.h[i]) {
            throw Error(ErrorCode::InvalidCode, "row " + std::to_string(i + 1) + " of H differs from G");
        }
    }
}

std::vector<std::size_t> css_pivots(const CssInput &in) {
    std::vector<std::size_t> out;
    for (const auto &row : in.h) out.push_back(leading(row));
    return out;
}

std::vector<std::size_t> css_message_qudits(const CssInput &in) {
    const auto piv = css_pivots(in);
    std::vector<std::size_t> out;
    for (std::size_t i = in.g.size(); i < piv.size(); ++i) out.push_back(piv[i] + 1);
    return out;
}

Circuit synthesize_css(const CssInput &in) {
    check_css_input(in);
    const FieldSpec &f = in.field;
    const std::size_t n = in.h[0].size();
    const auto piv = css_pivots(in);
    Circuit c{f, n, {}, Direction::Encoder, {}};
    for (std::size_t i = 0; i < in.g.size(); ++i) c.gates.push_back(Gate::fourier(piv[i] + 1));
    for (std::size_t k = in.h.size(); k-- > 0;) {
        for (std::size_t l = piv[k] + 1; l < n; ++l) {
            const std::uint32_t h = in.h[k][l];
            if (h == 0) continue;
            const bool scaled = h != 1;
            if (scaled) c.gates.push_back(Gate::mult(l + 1, f(f.inv(h))));
            c.gates.push_back(Gate::add(piv[k] + 1, l + 1));
            if (scaled) c.gates.push_back(Gate::mult(l + 1, f(h)));
        }
    }
    const auto msg = css_message_qudits(in);
    for (std::size_t j = 1; j <= n; ++j)
        if (std::find(msg.begin(), msg.end(), j) == msg.end()) c.pivots.push_back(j);
    return c;
}

CssBounds css_gate_bounds(std::size_t n, std::size_t k1, std::size_t k2) {
    if (k1 == 0 || k2 == 0 || k1 > n || k2 > n) throw Error(ErrorCode::InvalidCode, "need 0 < k1, k2 <= n");
    CssBounds b;
    b.fourier = n - k2;
    b.add_max = k1 * n - k1 * (k1 + 1) / 2;
    b.mult_max = b.add_max + n - 1;
    return b;
}

StabilizerMatrix css_stabilizer_matrix(const CssInput &in) {
    check_css_input(in);
    const FieldSpec &f = in.field;
    const std::size_t n = in.h[0].size();
    const FqMatrix dual = nullspace(f, in.h, n);
    const std::size_t k = in.h.size() - in.g.size();
    StabilizerMatrix s{f, n, k, {}};
    for (const auto &row : in.g) {
        FqRow xz(2 * n, 0);
        std::copy(row.begin(), row.end(), xz.begin());
        s.rows.push_back(PauliLabel::from_row(f, xz));
    }
    for (const auto &row : dual) {
        FqRow xz(2 * n, 0);
        std::copy(row.begin(), row.end(), xz.begin() + static_cast<std::ptrdiff_t>(n));
        s.rows.push_back(PauliLabel::from_row(f, xz));
    }
    return s;
}

Circuit merge_mult(const Circuit &circuit) {
    std::vector<std::optional<Gate>> gates(circuit.gates.begin(), circuit.gates.end());
    for (std::size_t i = 0; i < gates.size(); ++i) {
        if (!gates[i] || gates[i]->kind != GateKind::Mult) continue;
        const std::size_t q = gates[i]->qudits[0];
        for (std::size_t j = i + 1; j < gates.size(); ++j) {
            if (!gates[j]) continue;
            const auto &qs = gates[j]->qudits;
            if (std::find(qs.begin(), qs.end(), q) == qs.end()) continue;
            if (gates[j]->kind == GateKind::Mult) {
                // M_a then M_b is M_{ab}.
                gates[j]->param = gates[i]->param * gates[j]->param;
                gates[i].reset();
                if (gates[j]->param.is_one()) gates[j].reset();
            }
            break;
        }
    }
    Circuit out = circuit;
    out.gates.clear();
    for (auto &g : gates)
        if (g) out.gates.push_back(std::move(*g));
    return out;
}

CssInput echelonize(const FieldSpec &f, const FqMatrix &g, const FqMatrix &h) {
    if (h.empty()) throw Error(ErrorCode::InvalidCode, "H has no rows");
    const std::size_t n = h[0].size();
    SpanBuilder span(f, n);
    for (const auto &row : h) span.add(row);
    for (const auto &row : g)
        if (!span.contains(row)) throw Error(ErrorCode::NotNested, "a row of G is not in the span of H");

    const EchelonForm ge = rref(f, g);
    // Clear the G pivot columns from H, then reduce what is left.
    FqMatrix rest;
    for (auto row : h) {
        for (std::size_t i = 0; i < ge.rows.size(); ++i) {
            const std::uint32_t c = row[ge.pivots[i]];
            if (c == 0) continue;
            for (std::size_t j = 0; j < n; ++j) row[j] = f.sub(row[j], f.mul(c, ge.rows[i][j]));
        }
        rest.push_back(std::move(row));
    }
    const EchelonForm he = rref(f, rest);
    if (!ge.pivots.empty() && !he.pivots.empty() && he.pivots.front() < ge.pivots.back()) {
        throw Error(ErrorCode::NotEchelon, "no echelon form of H starts with G");
    }
    CssInput out{f, ge.rows, ge.rows};
    out.h.insert(out.h.end(), he.rows.begin(), he.rows.end());
    return out;
}

std::optional<CssInput> swap_roles(const CssInput &in) {
    check_css_input(in);
    const std::size_t n = in.h[0].size();
    const FqMatrix c1_perp = nullspace(in.field, in.h, n);
    const FqMatrix c2 = in.g.empty() ? FqMatrix{} : nullspace(in.field, in.g, n);
    FqMatrix c2_basis = c2;
    if (in.g.empty()) {
        for (std::size_t j = 0; j < n; ++j) {
            FqRow e(n, 0);
            e[j] = 1;
            c2_basis.push_back(e);
        }
    }
    if (c2_basis.empty()) return std::nullopt;
    try {
        return echelonize(in.field, c1_perp, c2_basis);
    } catch (const Error &e) {
        if (e.code() == ErrorCode::NotEchelon) return std::nullopt;
        throw;
    }
}

}  // namespace qenc
