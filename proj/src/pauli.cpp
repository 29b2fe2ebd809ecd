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

#include "qenc/pauli.hpp"

#include <sstream>

namespace qenc {

namespace {

void check_compatible(const PauliLabel &a, const PauliLabel &b) {
    if (!(a.field == b.field)) throw Error(ErrorCode::FieldMismatch, "labels over different fields");
    if (a.n() != b.n()) {
        throw Error(ErrorCode::LengthMismatch,
                    "labels of length " + std::to_string(a.n()) + " and " + std::to_string(b.n()));
    }
}

}  // namespace

PauliLabel PauliLabel::zeros(const FieldSpec &f, std::size_t n) {
    return PauliLabel{f, std::vector<FieldElement>(n, f.zero()), std::vector<FieldElement>(n, f.zero())};
}

PauliLabel PauliLabel::from_reprs(const FieldSpec &f, const std::vector<std::uint32_t> &x,
                                  const std::vector<std::uint32_t> &z) {
    if (x.size() != z.size()) throw Error(ErrorCode::LengthMismatch, "x and z parts differ in length");
    PauliLabel out{f, {}, {}};
    for (auto v : x) out.x.push_back(f(v));
    for (auto v : z) out.z.push_back(f(v));
    return out;
}

bool PauliLabel::is_zero() const {
    for (std::size_t i = 0; i < n(); ++i) {
        if (!x[i].is_zero() || !z[i].is_zero()) return false;
    }
    return true;
}

FqRow PauliLabel::to_row() const {
    FqRow row(2 * n());
    for (std::size_t i = 0; i < n(); ++i) {
        row[i] = x[i].repr();
        row[n() + i] = z[i].repr();
    }
    return row;
}

PauliLabel PauliLabel::from_row(const FieldSpec &f, const FqRow &row) {
    const std::size_t n = row.size() / 2;
    return from_reprs(f, FqRow(row.begin(), row.begin() + n), FqRow(row.begin() + n, row.end()));
}

bool operator==(const PauliLabel &a, const PauliLabel &b) {
    return a.field == b.field && a.x == b.x && a.z == b.z;
}

int phase_modulus(const FieldSpec &f) { return f.p() == 2 ? 4 : static_cast<int>(f.p()); }

int omega_phase(const FieldSpec &f, long long omega_exponent) {
    const long long p = f.p();
    long long e = ((omega_exponent % p) + p) % p;
    return static_cast<int>(f.p() == 2 ? 2 * e : e);
}

PauliOperator::PauliOperator(PauliLabel l, int ph) : label(std::move(l)), phase(ph) {
    const int mod = phase_modulus(label.field);
    phase = ((phase % mod) + mod) % mod;
}

bool operator==(const PauliOperator &a, const PauliOperator &b) {
    return a.label == b.label && a.phase == b.phase;
}

StabilizerMatrix StabilizerMatrix::from_reprs(const FieldSpec &f, std::size_t n, std::size_t k,
                                              const std::vector<std::vector<std::uint32_t>> &rows_xz) {
    StabilizerMatrix m{f, n, k, {}};
    for (const auto &r : rows_xz) {
        if (r.size() != 2 * n) throw Error(ErrorCode::LengthMismatch, "row length differs from 2n");
        m.rows.push_back(PauliLabel::from_row(f, r));
    }
    return m;
}

FqMatrix StabilizerMatrix::to_rows() const {
    FqMatrix out;
    for (const auto &r : rows) out.push_back(r.to_row());
    return out;
}

bool operator==(const StabilizerMatrix &a, const StabilizerMatrix &b) {
    return a.field == b.field && a.n == b.n && a.k == b.k && a.rows == b.rows;
}

FieldElement symplectic_form(const PauliLabel &a, const PauliLabel &b) {
    check_compatible(a, b);
    FieldElement acc = a.field.zero();
    for (std::size_t i = 0; i < a.n(); ++i) acc += b.x[i] * a.z[i] - a.x[i] * b.z[i];
    return acc;
}

FieldElement symplectic_product(const PauliLabel &a, const PauliLabel &b) {
    check_compatible(a, b);
    FieldElement acc = a.field.zero();
    for (std::size_t i = 0; i < a.n(); ++i) acc += trace(b.x[i] * a.z[i] - a.x[i] * b.z[i]);
    return acc;
}

int commutation_phase(const PauliLabel &a, const PauliLabel &b) {
    return static_cast<int>(symplectic_product(a, b).repr());
}

PauliOperator multiply(const PauliOperator &a, const PauliOperator &b) {
    check_compatible(a.label, b.label);
    const FieldSpec &f = a.label.field;
    // X_a Z_b X_a' Z_b' = omega^{tr(b a')} X_{a+a'} Z_{b+b'}, qudit by qudit.
    long long omega_exp = 0;
    PauliLabel out = PauliLabel::zeros(f, a.label.n());
    for (std::size_t i = 0; i < out.n(); ++i) {
        omega_exp += character(a.label.z[i], b.label.x[i]);
        out.x[i] = a.label.x[i] + b.label.x[i];
        out.z[i] = a.label.z[i] + b.label.z[i];
    }
    return PauliOperator(std::move(out), a.phase + b.phase + omega_phase(f, omega_exp));
}

std::size_t weight(const PauliLabel &a) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < a.n(); ++i) w += !(a.x[i].is_zero() && a.z[i].is_zero());
    return w;
}

CodeParameters validate(const StabilizerMatrix &matrix) {
    const std::size_t n = matrix.n;
    for (std::size_t i = 0; i < matrix.rows.size(); ++i) {
        const auto &r = matrix.rows[i];
        if (!(r.field == matrix.field)) throw Error(ErrorCode::FieldMismatch, "row " + std::to_string(i + 1));
        if (r.x.size() != n || r.z.size() != n) {
            throw Error(ErrorCode::LengthMismatch, "row " + std::to_string(i + 1) + " has wrong length");
        }
    }
    for (std::size_t i = 0; i < matrix.rows.size(); ++i) {
        for (std::size_t j = i + 1; j < matrix.rows.size(); ++j) {
            if (!symplectic_form(matrix.rows[i], matrix.rows[j]).is_zero()) {
                throw Error(ErrorCode::NotAbelian, "rows " + std::to_string(i + 1) + " and " +
                                                       std::to_string(j + 1) + " do not commute");
            }
        }
    }
    SpanBuilder span(matrix.field, 2 * n);
    for (std::size_t i = 0; i < matrix.rows.size(); ++i) {
        if (!span.add(matrix.rows[i].to_row())) {
            throw Error(ErrorCode::RankDeficient,
                        "row " + std::to_string(i + 1) + " depends on the rows before it");
        }
    }
    if (n < 1 || matrix.k < 1 || matrix.k >= n) {
        throw Error(ErrorCode::InvalidCode, "need 1 <= k < n, got n=" + std::to_string(n) +
                                                " k=" + std::to_string(matrix.k));
    }
    if (matrix.rows.size() != n - matrix.k) {
        throw Error(ErrorCode::InvalidCode, "expected n-k=" + std::to_string(n - matrix.k) + " rows, got " +
                                                std::to_string(matrix.rows.size()));
    }
    return CodeParameters{n, matrix.k, std::nullopt, matrix.field.q()};
}

FqMatrix symplectic_dual_basis(const StabilizerMatrix &matrix) {
    const FieldSpec &f = matrix.field;
    const std::size_t n = matrix.n;
    // v in C* iff sum_i (g_x,i v_z,i - v_x,i g_z,i) = 0 for every row g.
    FqMatrix constraints;
    for (const auto &g : matrix.rows) {
        FqRow c(2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            c[i] = f.neg(g.z[i].repr());
            c[n + i] = g.x[i].repr();
        }
        constraints.push_back(std::move(c));
    }
    const FqMatrix kernel = nullspace(f, constraints, 2 * n);
    FqMatrix basis;
    SpanBuilder span(f, 2 * n);
    for (const auto &g : matrix.rows) {
        span.add(g.to_row());
        basis.push_back(g.to_row());
    }
    for (const auto &v : kernel) {
        if (span.add(v)) basis.push_back(v);
    }
    return basis;
}

int min_distance_bruteforce(const StabilizerMatrix &matrix, std::uint64_t cap) {
    validate(matrix);
    const FieldSpec &f = matrix.field;
    const std::size_t n = matrix.n;
    const std::size_t dim = n + matrix.k;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        total *= f.q();
        if (total > cap) {
            throw Error(ErrorCode::TooLarge, "q^(n+k) exceeds the enumeration cap " + std::to_string(cap));
        }
    }
    const FqMatrix dual = symplectic_dual_basis(matrix);
    if (dual.size() != dim) throw Error(ErrorCode::InvalidCode, "dual has unexpected dimension");

    // Expand over F_p: generators x^t * b for each basis vector b.
    const std::uint32_t p = f.p();
    std::vector<FqRow> gens;
    for (const auto &b : dual) {
        std::uint32_t scale = 1;
        for (std::uint32_t t = 0; t < f.m(); ++t) {
            FqRow g(2 * n);
            for (std::size_t j = 0; j < 2 * n; ++j) g[j] = f.mul(scale, b[j]);
            gens.push_back(std::move(g));
            scale *= p;  // repr of x^(t+1)
        }
    }
    const std::size_t code_digits = matrix.rows.size() * f.m();
    std::vector<std::vector<std::size_t>> support(gens.size());
    for (std::size_t g = 0; g < gens.size(); ++g) {
        for (std::size_t i = 0; i < n; ++i) {
            if (gens[g][i] || gens[g][n + i]) support[g].push_back(i);
        }
    }

    // p-ary modular Gray code: each step adds one generator, so the running
    // vector changes on that generator's support only.
    std::vector<std::uint32_t> counter(gens.size(), 0), gray(gens.size(), 0);
    FqRow v(2 * n, 0);
    std::size_t w = 0;
    std::size_t ext_nonzero = 0;
    int best = static_cast<int>(n) + 1;
    for (std::uint64_t step = 1; step < total; ++step) {
        std::size_t j = 0;
        while (counter[j] == p - 1) counter[j++] = 0;
        ++counter[j];
        if (j >= code_digits) {
            if (gray[j] == 0) ++ext_nonzero;
            gray[j] = (gray[j] + 1) % p;
            if (gray[j] == 0) --ext_nonzero;
        } else {
            gray[j] = (gray[j] + 1) % p;
        }
        for (std::size_t i : support[j]) {
            const bool before = v[i] || v[n + i];
            v[i] = f.add(v[i], gens[j][i]);
            v[n + i] = f.add(v[n + i], gens[j][n + i]);
            const bool after = v[i] || v[n + i];
            w = w + after - before;
        }
        if (ext_nonzero > 0 && static_cast<int>(w) < best) {
            best = static_cast<int>(w);
            if (best == 1) break;
        }
    }
    return best;
}

std::string to_string(const PauliLabel &a) {
    std::ostringstream os;
    for (std::size_t i = 0; i < a.n(); ++i) os << (i ? " " : "") << a.x[i].repr();
    os << " |";
    for (std::size_t i = 0; i < a.n(); ++i) os << ' ' << a.z[i].repr();
    return os.str();
}

}  // namespace qenc
