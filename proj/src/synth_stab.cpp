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

#include "qenc/synth_stab.hpp"

#include <algorithm>

namespace qenc {

namespace {

/// Working copy of the (X|Z) matrix with in-place gate updates on rows [from, end).
struct Tableau {
    FieldSpec field;
    std::vector<PauliLabel> rows;
    std::uint64_t operations = 0;

    void single(const std::vector<Gate> &gates, std::size_t col, std::size_t from) {
        for (std::size_t r = from; r < rows.size(); ++r) {
            auto &row = rows[r];
            auto [a, b] = apply_action(gates, row.x[col], row.z[col]);
            row.x[col] = a;
            row.z[col] = b;
            operations += gates.size();
        }
    }

    void add(const Gate &g, std::size_t from) {
        const std::size_t c = g.qudits[0] - 1, t = g.qudits[1] - 1;
        for (std::size_t r = from; r < rows.size(); ++r) {
            auto &row = rows[r];
            if (g.kind == GateKind::Add) {
                row.z[c] += row.z[t];
                row.x[t] -= row.x[c];
            } else {
                row.z[c] -= row.z[t];
                row.x[t] += row.x[c];
            }
            ++operations;
        }
    }

    StabilizerMatrix snapshot(std::size_t n, std::size_t k) const { return StabilizerMatrix{field, n, k, rows}; }
};

}  // namespace

SynthesisResult synthesize(const StabilizerMatrix &matrix, Variant variant) {
    validate(matrix);
    const std::size_t n = matrix.n, k = matrix.k, r = n - k;
    const FieldSpec &f = matrix.field;
    const bool to_x = variant == Variant::XTarget;

    Tableau tab{f, matrix.rows};
    std::vector<bool> in_l(n, false);
    SynthesisResult out{Circuit{f, n, {}, Direction::Decoder, {}}, Circuit{f, n, {}, Direction::Encoder, {}},
                        {}, {}, {}, matrix, 0, 0, 0};

    for (std::size_t i = 0; i < r; ++i) {
        RowStep step{i + 1, 0, std::vector<std::vector<Gate>>(n), {}, matrix, matrix};
        for (std::size_t j = 0; j < n; ++j) {
            if (in_l[j]) continue;
            const auto &row = tab.rows[i];
            if (row.x[j].is_zero() && row.z[j].is_zero()) continue;
            auto gates = to_x ? solve_to_x(row.x[j], row.z[j], j + 1) : solve_to_z(row.x[j], row.z[j], j + 1);
            if (gates.empty()) continue;
            tab.single(gates, j, i);
            out.single_count += gates.size();
            out.forward.insert(out.forward.end(), gates.begin(), gates.end());
            step.t_gates[j] = std::move(gates);
        }
        step.after_t = tab.snapshot(n, k);

        auto entry = [&](std::size_t j) -> const FieldElement & {
            return to_x ? tab.rows[i].x[j] : tab.rows[i].z[j];
        };
        std::size_t l = n;
        for (std::size_t j = 0; j < n; ++j) {
            if (!in_l[j] && !entry(j).is_zero()) {
                l = j;
                break;
            }
        }
        if (l == n) {
            throw Error(ErrorCode::InternalPivotMissing, "row " + std::to_string(i + 1) + " has no pivot outside L");
        }
        in_l[l] = true;
        out.pivots.push_back(l + 1);
        step.pivot = l + 1;

        for (std::size_t j = 0; j < n; ++j) {
            if (in_l[j] || entry(j).is_zero()) continue;
            if (!entry(j).is_one()) {
                throw Error(ErrorCode::InternalPivotMissing,
                            "normalized entry in row " + std::to_string(i + 1) + ", column " + std::to_string(j + 1) +
                                " is not 1");
            }
            const Gate g = to_x ? Gate::add(l + 1, j + 1) : Gate::add_inverse(j + 1, l + 1);
            tab.add(g, i);
            ++out.add_count;
            out.forward.push_back(g);
            step.adds.push_back(g);
        }
        step.after_a = tab.snapshot(n, k);
        out.step_log.push_back(std::move(step));
    }

    if (to_x) {
        for (auto l : out.pivots) {
            const std::vector<Gate> layer{Gate::fourier(l)};
            tab.single(layer, l - 1, 0);
            out.forward.push_back(layer[0]);
            ++out.single_count;
        }
    }
    out.final_matrix = tab.snapshot(n, k);
    out.operations = tab.operations;

    // W = U_1 ... U_N maps the reduced code back to the input code, so the
    // encoder applies g_N first; the decoder undoes it from g_1 onwards.
    out.encoder.gates.assign(out.forward.rbegin(), out.forward.rend());
    for (const auto &g : out.forward) {
        for (auto &h : inverse(g, f)) out.decoder.gates.push_back(std::move(h));
    }
    out.encoder.pivots = out.pivots;
    out.decoder.pivots = out.pivots;
    return out;
}

std::size_t gate_count_bound(std::size_t n, std::size_t k) {
    const std::size_t r = n - k;
    return n * r - r * (r + 1) / 2;
}

StabilizerMatrix apply_row_addition(const StabilizerMatrix &matrix, std::size_t src, std::size_t dst) {
    return apply_row_addition(matrix, src, dst, matrix.field.one());
}

StabilizerMatrix apply_row_addition(const StabilizerMatrix &matrix, std::size_t src, std::size_t dst,
                                    const FieldElement &scale) {
    if (src == 0 || dst == 0 || src > matrix.rows.size() || dst > matrix.rows.size()) {
        throw Error(ErrorCode::IndexOutOfRange, "row index outside 1.." + std::to_string(matrix.rows.size()));
    }
    if (src == dst) throw Error(ErrorCode::InvalidCode, "a row cannot be added to itself");
    StabilizerMatrix out = matrix;
    const auto &s = matrix.rows[src - 1];
    auto &d = out.rows[dst - 1];
    for (std::size_t j = 0; j < matrix.n; ++j) {
        d.x[j] += scale * s.x[j];
        d.z[j] += scale * s.z[j];
    }
    return out;
}

std::vector<std::size_t> message_qudits(std::size_t n, const std::vector<std::size_t> &pivots) {
    std::vector<bool> used(n + 1, false);
    for (auto p : pivots) used.at(p) = true;
    std::vector<std::size_t> out;
    for (std::size_t j = 1; j <= n; ++j)
        if (!used[j]) out.push_back(j);
    return out;
}

StabilizerMatrix random_stabilizer(const FieldSpec &f, std::size_t n, std::size_t k, std::mt19937_64 &rng) {
    if (k >= n) throw Error(ErrorCode::InvalidCode, "need k < n");
    const std::size_t r = n - k;
    std::vector<PauliOperator> rows;
    for (std::size_t i = 0; i < r; ++i) {
        PauliLabel l = PauliLabel::zeros(f, n);
        l.z[i] = f.one();
        rows.emplace_back(std::move(l));
    }
    std::uniform_int_distribution<std::size_t> qudit(1, n);
    std::uniform_int_distribution<std::uint32_t> elem(1, f.q() - 1);
    std::uniform_int_distribution<int> kind(0, 4);
    const std::size_t length = 6 * n * n;
    for (std::size_t step = 0; step < length; ++step) {
        Gate g = Gate::fourier(qudit(rng));
        switch (kind(rng)) {
            case 0: break;
            case 1: g = Gate::mult(g.qudits[0], f(elem(rng))); break;
            case 2: g = Gate::phase(g.qudits[0], f(elem(rng))); break;
            default: {
                if (n < 2) break;
                std::size_t c = qudit(rng), t = qudit(rng);
                while (t == c) t = qudit(rng);
                g = (step % 2) ? Gate::add(c, t) : Gate::add_inverse(c, t);
            }
        }
        for (auto &op : rows) op = conjugate_label(g, op);
    }
    StabilizerMatrix m{f, n, k, {}};
    for (auto &op : rows) m.rows.push_back(op.label);
    std::uniform_int_distribution<std::size_t> row(1, r);
    std::uniform_int_distribution<std::uint32_t> any(0, f.q() - 1);
    for (std::size_t step = 0; r > 1 && step < 2 * r; ++step) {
        const std::size_t s = row(rng);
        std::size_t d = row(rng);
        while (d == s) d = row(rng);
        m = apply_row_addition(m, s, d, f(any(rng)));
    }
    return m;
}

}  // namespace qenc
