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

// Exact arithmetic in GF(p^m) given an explicit monic irreducible modulus.
//
// An element is stored as the integer sum a_i p^i, where a_i is the
// coefficient of x^i in the polynomial basis. All operations go through
// precomputed q x q tables, so q is limited to 256.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qenc/error.hpp"

namespace qenc {

namespace detail {
struct FieldTables;
}

class FieldSpec;

class FieldElement {
  public:
    FieldElement() = default;

    std::uint32_t repr() const noexcept { return repr_; }
    bool is_zero() const noexcept { return repr_ == 0; }
    bool is_one() const noexcept { return repr_ == 1; }
    const detail::FieldTables *tables() const noexcept { return f_; }

    FieldElement operator-() const;
    friend FieldElement operator+(const FieldElement &a, const FieldElement &b);
    friend FieldElement operator-(const FieldElement &a, const FieldElement &b);
    friend FieldElement operator*(const FieldElement &a, const FieldElement &b);
    FieldElement &operator+=(const FieldElement &b) { return *this = *this + b; }
    FieldElement &operator-=(const FieldElement &b) { return *this = *this - b; }
    FieldElement &operator*=(const FieldElement &b) { return *this = *this * b; }

    /// Equal reprs over equal fields. Comparing elements of different fields throws.
    friend bool operator==(const FieldElement &a, const FieldElement &b);

    /// Wraps a raw repr; prefer FieldSpec::operator() which range-checks.
    FieldElement(const detail::FieldTables *f, std::uint32_t repr) : f_(f), repr_(repr) {}

  private:
    const detail::FieldTables *f_ = nullptr;
    std::uint32_t repr_ = 0;
};

/// Basis b_1..b_m of GF(2^m) over GF(2) with tr(b_i b_j) = delta_ij.
struct SelfDualBasis {
    std::vector<FieldElement> basis;
};

/// Shared, immutable description of GF(p^m). Copies are cheap handles to
/// the same tables; elements keep a raw pointer, so a FieldSpec must outlive
/// every element created from it.
class FieldSpec {
  public:
    /// `modulus` lists c_0..c_m, low to high, with c_m = 1. Throws
    /// InvalidField or NotIrreducible.
    FieldSpec(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus);

    /// GF(p) with modulus x.
    static FieldSpec prime(std::uint32_t p);

    std::uint32_t p() const noexcept;
    std::uint32_t m() const noexcept;
    std::uint32_t q() const noexcept;
    const std::vector<std::uint32_t> &modulus() const noexcept;

    FieldElement operator()(std::uint32_t repr) const;
    FieldElement zero() const { return (*this)(0); }
    FieldElement one() const { return (*this)(1); }
    /// The image of an integer in the prime subfield.
    FieldElement from_int(long long v) const;
    std::vector<FieldElement> elements() const;

    // Raw table access for inner loops; arguments must be < q.
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept;
    std::uint32_t neg(std::uint32_t a) const noexcept;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t trace(std::uint32_t a) const noexcept;

    /// Deterministic self-dual basis (lexicographically smallest increasing
    /// repr tuple). Throws UnsupportedField for odd p.
    const SelfDualBasis &self_dual_basis() const;
    /// Number of nonzero coordinates in the self-dual basis. p = 2 only.
    int wgt(std::uint32_t a) const;
    /// Square root; defined for p = 2 only.
    std::uint32_t sqrt2(std::uint32_t a) const;

    /// "field p=<p> m=<m> poly=<c0,...,cm>"
    std::string header() const;

    const detail::FieldTables *tables() const noexcept { return t_.get(); }

    friend bool operator==(const FieldSpec &a, const FieldSpec &b);

  private:
    std::shared_ptr<const detail::FieldTables> t_;
};

FieldElement add(const FieldElement &a, const FieldElement &b);
FieldElement mul(const FieldElement &a, const FieldElement &b);
FieldElement inv(const FieldElement &a);
/// tr(a) = sum_{i<m} a^(p^i), an element of the prime subfield.
FieldElement trace(const FieldElement &a);
/// Exponent of omega in chi_beta(z) = omega^tr(beta z), as an integer in [0, p).
int character(const FieldElement &beta, const FieldElement &z);
SelfDualBasis find_self_dual_basis(const FieldSpec &spec);
int wgt(const FieldElement &a, const SelfDualBasis &basis);

bool is_prime(std::uint32_t v);

}  // namespace qenc
