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

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <functional>
#include <random>

#include "doctest.h"
#include "dense.hpp"
#include "fixtures.hpp"
#include "qenc/pauli.hpp"

using namespace qenc;
using namespace qenc::fixtures;
using namespace qenc::dense;


TEST_CASE("symplectic product examples") {
    auto f3 = gf3();
    auto a = PauliLabel::from_reprs(f3, {1}, {0});
    auto b = PauliLabel::from_reprs(f3, {0}, {1});
    CHECK(symplectic_product(a, a).is_zero());
    CHECK(symplectic_product(a, b).repr() == 2);
    CHECK(symplectic_product(b, a).repr() == 1);
    auto s = nine_five(f3);
    for (const auto &r1 : s.rows)
        for (const auto &r2 : s.rows) CHECK(symplectic_product(r1, r2).is_zero());

    auto f9 = gf9();
    try {
        symplectic_product(a, PauliLabel::from_reprs(f9, {1}, {0}));
        FAIL("mixed fields");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::FieldMismatch);
    }
    try {
        symplectic_product(a, PauliLabel::from_reprs(f3, {1, 0}, {0, 0}));
        FAIL("length mismatch");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::LengthMismatch);
    }
}

TEST_CASE("commutation phase examples") {
    auto f3 = gf3();
    auto x = PauliLabel::from_reprs(f3, {1}, {0});
    auto z = PauliLabel::from_reprs(f3, {0}, {1});
    CHECK(commutation_phase(x, x) == 0);
    CHECK(commutation_phase(x, z) == 2);
    auto f2 = FieldSpec::prime(2);
    CHECK(commutation_phase(PauliLabel::from_reprs(f2, {1}, {0}), PauliLabel::from_reprs(f2, {0}, {1})) == 1);
}

TEST_CASE("commutation phase agrees with dense commutators") {
    for (auto f : {FieldSpec::prime(2), gf3(), gf4()}) {
        const double two_pi = 2.0 * std::acos(-1.0);
        auto labels = all_labels(f, 1);
        for (const auto &a : labels) {
            for (const auto &b : labels) {
                Eigen::MatrixXcd A = dense_label(a), B = dense_label(b);
                const cd w = std::polar(1.0, two_pi * commutation_phase(a, b) / f.p());
                CHECK((A * B - w * B * A).cwiseAbs().maxCoeff() < 1e-10);
            }
        }
    }
}

TEST_CASE("multiply examples") {
    auto f2 = FieldSpec::prime(2);
    auto x1 = PauliOperator(PauliLabel::from_reprs(f2, {1}, {0}));
    auto z1 = PauliOperator(PauliLabel::from_reprs(f2, {0}, {1}));
    auto xx = multiply(x1, x1);
    CHECK(xx.label.is_zero());
    CHECK(xx.phase == 0);
    auto zx = multiply(z1, x1);
    CHECK(zx.label == PauliLabel::from_reprs(f2, {1}, {1}));
    CHECK(zx.phase == 2);

    auto f3 = gf3();
    auto zx3 = multiply(PauliOperator(PauliLabel::from_reprs(f3, {0}, {1})),
                        PauliOperator(PauliLabel::from_reprs(f3, {1}, {0})));
    CHECK(zx3.label == PauliLabel::from_reprs(f3, {1}, {1}));
    CHECK(zx3.phase == 1);
}

TEST_CASE("multiply agrees with explicit matrix products") {
    std::mt19937_64 rng(5);
    for (auto f : {FieldSpec::prime(2), gf3(), gf4()}) {
        const int mod = phase_modulus(f);
        for (std::size_t n : {1u, 2u}) {
            auto labels = all_labels(f, n);
            std::vector<PauliLabel> pool;
            if (n == 1) {
                pool = labels;
            } else {
                std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
                for (int i = 0; i < 24; ++i) pool.push_back(labels[pick(rng)]);
            }
            for (const auto &a : pool) {
                for (const auto &b : pool) {
                    const int pa = static_cast<int>(rng() % mod), pb = static_cast<int>(rng() % mod);
                    auto prod = multiply(PauliOperator(a, pa), PauliOperator(b, pb));
                    Eigen::MatrixXcd lhs = phase_value(f, pa) * dense_label(a) * phase_value(f, pb) * dense_label(b);
                    Eigen::MatrixXcd rhs = phase_value(f, prod.phase) * dense_label(prod.label);
                    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-10);
                }
            }
        }
    }
}

TEST_CASE("error basis is Hilbert-Schmidt orthogonal for q <= 5") {
    for (auto f : {FieldSpec::prime(2), gf3(), gf4(), FieldSpec::prime(5)}) {
        auto labels = all_labels(f, 1);
        for (const auto &a : labels) {
            for (const auto &b : labels) {
                const cd ip = (dense_label(a).adjoint() * dense_label(b)).trace();
                CHECK(std::abs(ip - cd(a == b ? f.q() : 0.0, 0.0)) < 1e-10);
            }
        }
    }
}

TEST_CASE("symplectic product is antisymmetric and bilinear") {
    std::mt19937_64 rng(17);
    for (auto f : {gf3(), gf4(), gf9()}) {
        std::uniform_int_distribution<std::uint32_t> pick(0, f.q() - 1);
        auto rand_label = [&](std::size_t n) {
            FqRow row(2 * n);
            for (auto &v : row) v = pick(rng);
            return PauliLabel::from_row(f, row);
        };
        for (int it = 0; it < 100; ++it) {
            auto a = rand_label(4), b = rand_label(4), c = rand_label(4);
            CHECK(symplectic_product(a, b) == -symplectic_product(b, a));
            PauliLabel bc = b;
            for (std::size_t i = 0; i < 4; ++i) {
                bc.x[i] += c.x[i];
                bc.z[i] += c.z[i];
            }
            CHECK(symplectic_product(a, bc) == symplectic_product(a, b) + symplectic_product(a, c));
        }
    }
}

TEST_CASE("weight examples") {
    auto f3 = gf3();
    CHECK(weight(PauliLabel::zeros(f3, 4)) == 0);
    CHECK(weight(nine_five(f3).rows[0]) == 8);
    CHECK(weight(PauliLabel::from_reprs(f3, {1, 0, 0}, {0, 0, 2})) == 2);
}

TEST_CASE("validate") {
    auto f3 = gf3();
    auto params = validate(nine_five(f3));
    CHECK(params.n == 9);
    CHECK(params.k == 5);
    CHECK(params.q == 3);
    CHECK_FALSE(params.d.has_value());

    auto dup = nine_five(f3);
    dup.rows.push_back(dup.rows[1]);
    dup.k = 4;
    try {
        validate(dup);
        FAIL("duplicate row");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::RankDeficient);
        CHECK(std::string(e.what()).find("row 5") != std::string::npos);
    }

    auto f2 = FieldSpec::prime(2);
    try {
        validate(StabilizerMatrix::from_reprs(f2, 1, 0, {{1, 0}, {0, 1}}));
        FAIL("X and Z anticommute");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::NotAbelian);
    }
    auto anti = StabilizerMatrix::from_reprs(f2, 3, 1, {{1, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}});
    try {
        validate(anti);
        FAIL("X and Z on the same qubit anticommute");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::NotAbelian);
        CHECK(std::string(e.what()).find("rows 1 and 2") != std::string::npos);
    }

    auto bad_k = nine_five(f3);
    bad_k.k = 9;
    CHECK_THROWS_AS(validate(bad_k), Error);
}

TEST_CASE("validate rejects single-entry corruptions that break commutation") {
    auto f3 = gf3();
    const auto base = nine_five(f3);
    int rejected = 0;
    for (std::size_t r = 0; r < base.rows.size(); ++r) {
        for (std::size_t c = 0; c < 18; ++c) {
            auto m = base;
            auto &e = c < 9 ? m.rows[r].x[c] : m.rows[r].z[c - 9];
            e += f3.one();
            bool breaks = false;
            for (std::size_t o = 0; o < m.rows.size(); ++o) {
                if (o != r && !symplectic_product(m.rows[r], m.rows[o]).is_zero()) breaks = true;
            }
            if (!breaks) continue;
            ++rejected;
            try {
                validate(m);
                FAIL("corruption accepted");
            } catch (const Error &err) {
                CHECK(err.code() == ErrorCode::NotAbelian);
            }
        }
    }
    CHECK(rejected > 40);
}

TEST_CASE("symplectic dual contains the code and has dimension n+k") {
    for (const auto &m : {nine_five(gf3()), five_one(FieldSpec::prime(2))}) {
        auto dual = symplectic_dual_basis(m);
        CHECK(dual.size() == m.n + m.k);
        for (std::size_t i = 0; i < m.rows.size(); ++i) CHECK(dual[i] == m.rows[i].to_row());
        for (const auto &v : dual) {
            auto label = PauliLabel::from_row(m.field, v);
            for (const auto &g : m.rows) CHECK(symplectic_product(label, g).is_zero());
        }
    }
}

TEST_CASE("minimum distance, small cases") {
    auto f2 = FieldSpec::prime(2);
    auto xx = StabilizerMatrix::from_reprs(f2, 2, 1, {{1, 1, 0, 0}});
    CHECK(min_distance_bruteforce(xx) == 1);

    // k = n-1, one weight-n row
    auto f3 = gf3();
    auto single = StabilizerMatrix::from_reprs(f3, 3, 2, {{1, 1, 1, 0, 0, 0}});
    CHECK(min_distance_bruteforce(single) >= 1);

    CHECK(min_distance_bruteforce(five_one(f2)) == 3);

    try {
        min_distance_bruteforce(nine_five(f3), 1000);
        FAIL("cap not enforced");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::TooLarge);
    }
}

TEST_CASE("minimum distance of the [[9,5,3]]_3 code against a low-weight oracle") {
    auto f3 = gf3();
    auto m = nine_five(f3);
    CHECK(min_distance_bruteforce(m) == 3);

    // Oracle: scan every label of weight <= 3 directly.
    SpanBuilder code(f3, 18);
    for (const auto &r : m.rows) code.add(r.to_row());
    auto in_dual = [&](const PauliLabel &l) {
        for (const auto &g : m.rows) {
            if (!symplectic_product(l, g).is_zero()) return false;
        }
        return true;
    };
    int found_weight = 0;
    for (int w = 1; w <= 3 && !found_weight; ++w) {
        std::vector<int> pos(w);
        std::function<void(int, int)> choose = [&](int idx, int start) {
            if (found_weight) return;
            if (idx == w) {
                // every nonzero (x,z) pair at each chosen position
                std::vector<int> pair(w, 1);
                while (true) {
                    PauliLabel l = PauliLabel::zeros(f3, 9);
                    for (int t = 0; t < w; ++t) {
                        l.x[pos[t]] = f3(pair[t] % 3);
                        l.z[pos[t]] = f3(pair[t] / 3);
                    }
                    if (in_dual(l) && !code.contains(l.to_row())) {
                        found_weight = w;
                        return;
                    }
                    int t = 0;
                    while (t < w && pair[t] == 8) pair[t++] = 1;
                    if (t == w) break;
                    ++pair[t];
                }
                return;
            }
            for (int c = start; c < 9; ++c) {
                pos[idx] = c;
                choose(idx + 1, c + 1);
            }
        };
        choose(0, 0);
    }
    CHECK(found_weight == 3);
}
