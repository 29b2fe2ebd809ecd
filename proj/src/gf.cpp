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

#include "qenc/gf.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

namespace qenc {

namespace detail {

struct FieldTables {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus;
    std::vector<std::uint8_t> add;  // q*q
    std::vector<std::uint8_t> mul;  // q*q
    std::vector<std::uint8_t> neg;
    std::vector<std::uint8_t> inv;  // inv[0] unused
    std::vector<std::uint8_t> trace;
    std::vector<std::uint8_t> sqrt2;  // p = 2 only
    std::vector<std::uint8_t> wgt;    // p = 2 only
    std::optional<SelfDualBasis> self_dual;

    bool same_field(const FieldTables &o) const {
        return p == o.p && m == o.m && modulus == o.modulus;
    }
};

}  // namespace detail

namespace {

using Poly = std::vector<std::uint32_t>;  // low to high, trimmed

constexpr std::uint32_t kMaxQ = 256;

void trim(Poly &a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic divisor d.
Poly poly_rem(Poly a, const Poly &d, std::uint32_t p) {
    trim(a);
    const std::size_t dd = d.size() - 1;
    while (a.size() > dd) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - 1 - dd;
        for (std::size_t i = 0; i <= dd; ++i) {
            a[shift + i] = (a[shift + i] + (p - lead) * d[i]) % p;
        }
        trim(a);
    }
    return a;
}

bool irreducible(const Poly &f, std::uint32_t p, std::uint32_t m) {
    // Trial division by every monic polynomial of degree 1..m/2.
    for (std::uint32_t deg = 1; deg <= m / 2; ++deg) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < deg; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly d(deg + 1, 0);
            std::uint64_t c = code;
            for (std::uint32_t i = 0; i < deg; ++i) {
                d[i] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            d[deg] = 1;
            if (poly_rem(f, d, p).empty()) return false;
        }
    }
    return true;
}

Poly to_poly(std::uint32_t repr, std::uint32_t p, std::uint32_t m) {
    Poly a(m, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
        a[i] = repr % p;
        repr /= p;
    }
    return a;
}

std::uint32_t from_poly(const Poly &a, std::uint32_t p) {
    std::uint32_t r = 0;
    for (std::size_t i = a.size(); i-- > 0;) r = r * p + a[i];
    return r;
}

std::uint32_t poly_mul_mod(std::uint32_t x, std::uint32_t y, const detail::FieldTables &t) {
    const Poly a = to_poly(x, t.p, t.m), b = to_poly(y, t.p, t.m);
    Poly prod(2 * t.m, 0);
    for (std::uint32_t i = 0; i < t.m; ++i) {
        for (std::uint32_t j = 0; j < t.m; ++j) {
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % t.p;
        }
    }
    Poly r = poly_rem(prod, t.modulus, t.p);
    r.resize(t.m, 0);
    return from_poly(r, t.p);
}

std::vector<std::uint32_t> search_self_dual(const detail::FieldTables &t) {
    const std::uint32_t q = t.q;
    auto tr_mul = [&](std::uint32_t a, std::uint32_t b) { return t.trace[t.mul[a * q + b]]; };
    std::vector<std::uint32_t> candidates;
    for (std::uint32_t c = 1; c < q; ++c) {
        if (tr_mul(c, c) == 1) candidates.push_back(c);
    }
    // Increasing tuples in lexicographic order; the first complete one wins.
    std::vector<std::uint32_t> chosen;
    std::function<bool(std::size_t)> dfs = [&](std::size_t from) -> bool {
        if (chosen.size() == t.m) return true;
        for (std::size_t i = from; i < candidates.size(); ++i) {
            const std::uint32_t c = candidates[i];
            if (!std::all_of(chosen.begin(), chosen.end(), [&](std::uint32_t b) { return tr_mul(b, c) == 0; })) {
                continue;
            }
            chosen.push_back(c);
            if (dfs(i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!dfs(0)) throw Error(ErrorCode::InvalidField, "no self-dual basis found");
    return chosen;
}

const detail::FieldTables &tables_of(const FieldElement &a) {
    if (a.tables() == nullptr) throw Error(ErrorCode::FieldMismatch, "element has no field");
    return *a.tables();
}

const detail::FieldTables &common(const FieldElement &a, const FieldElement &b) {
    const auto &ta = tables_of(a);
    const auto &tb = tables_of(b);
    if (&ta != &tb && !ta.same_field(tb)) {
        throw Error(ErrorCode::FieldMismatch, "elements belong to different fields");
    }
    return ta;
}

}  // namespace

bool is_prime(std::uint32_t v) {
    if (v < 2) return false;
    for (std::uint32_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) return false;
    }
    return true;
}

FieldSpec::FieldSpec(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus) {
    if (!is_prime(p)) throw Error(ErrorCode::InvalidField, "p=" + std::to_string(p) + " is not prime");
    if (m < 1) throw Error(ErrorCode::InvalidField, "m must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxQ) throw Error(ErrorCode::InvalidField, "q = p^m exceeds 256");
    }
    if (modulus.size() != m + 1 || modulus.back() != 1) {
        throw Error(ErrorCode::InvalidField, "modulus must be monic of degree m");
    }
    for (auto c : modulus) {
        if (c >= p) throw Error(ErrorCode::InvalidField, "modulus coefficient out of range");
    }
    if (!irreducible(modulus, p, m)) throw Error(ErrorCode::NotIrreducible, "modulus is reducible over F_p");

    auto t = std::make_shared<detail::FieldTables>();
    t->p = p;
    t->m = m;
    t->q = static_cast<std::uint32_t>(q);
    t->modulus = std::move(modulus);
    const std::uint32_t Q = t->q;
    t->add.resize(Q * Q);
    t->mul.resize(Q * Q);
    t->neg.resize(Q);
    t->inv.assign(Q, 0);
    t->trace.resize(Q);
    for (std::uint32_t a = 0; a < Q; ++a) {
        const Poly pa = to_poly(a, p, m);
        Poly pn(m);
        for (std::uint32_t i = 0; i < m; ++i) pn[i] = (p - pa[i]) % p;
        t->neg[a] = static_cast<std::uint8_t>(from_poly(pn, p));
        for (std::uint32_t b = 0; b < Q; ++b) {
            const Poly pb = to_poly(b, p, m);
            Poly s(m);
            for (std::uint32_t i = 0; i < m; ++i) s[i] = (pa[i] + pb[i]) % p;
            t->add[a * Q + b] = static_cast<std::uint8_t>(from_poly(s, p));
            t->mul[a * Q + b] = static_cast<std::uint8_t>(poly_mul_mod(a, b, *t));
        }
    }
    for (std::uint32_t a = 1; a < Q; ++a) {
        for (std::uint32_t b = 1; b < Q; ++b) {
            if (t->mul[a * Q + b] == 1) {
                t->inv[a] = static_cast<std::uint8_t>(b);
                break;
            }
        }
    }
    for (std::uint32_t a = 0; a < Q; ++a) {
        // a + a^p + ... + a^(p^(m-1))
        std::uint32_t power = a, sum = 0;
        for (std::uint32_t i = 0; i < m; ++i) {
            sum = t->add[sum * Q + power];
            std::uint32_t next = 1;
            for (std::uint32_t j = 0; j < p; ++j) next = t->mul[next * Q + power];
            power = next;
        }
        if (sum >= p) throw Error(ErrorCode::InvalidField, "trace left the prime subfield");
        t->trace[a] = static_cast<std::uint8_t>(sum);
    }
    if (p == 2) {
        t->sqrt2.resize(Q);
        for (std::uint32_t a = 0; a < Q; ++a) t->sqrt2[t->mul[a * Q + a]] = static_cast<std::uint8_t>(a);
        const auto chosen = search_self_dual(*t);
        SelfDualBasis basis;
        for (auto c : chosen) basis.basis.push_back(FieldElement(t.get(), c));
        t->self_dual = std::move(basis);
        t->wgt.resize(Q);
        for (std::uint32_t a = 0; a < Q; ++a) {
            int w = 0;
            for (auto c : chosen) w += t->trace[t->mul[a * Q + c]] != 0;
            t->wgt[a] = static_cast<std::uint8_t>(w);
        }
    }
    t_ = std::move(t);
}

FieldSpec FieldSpec::prime(std::uint32_t p) { return FieldSpec(p, 1, {0, 1}); }

std::uint32_t FieldSpec::p() const noexcept { return t_->p; }
std::uint32_t FieldSpec::m() const noexcept { return t_->m; }
std::uint32_t FieldSpec::q() const noexcept { return t_->q; }
const std::vector<std::uint32_t> &FieldSpec::modulus() const noexcept { return t_->modulus; }

FieldElement FieldSpec::operator()(std::uint32_t repr) const {
    if (repr >= t_->q) {
        throw Error(ErrorCode::InvalidField,
                    "element " + std::to_string(repr) + " out of range for q=" + std::to_string(t_->q));
    }
    return FieldElement(t_.get(), repr);
}

FieldElement FieldSpec::from_int(long long v) const {
    const long long p = t_->p;
    return (*this)(static_cast<std::uint32_t>(((v % p) + p) % p));
}

std::vector<FieldElement> FieldSpec::elements() const {
    std::vector<FieldElement> out;
    out.reserve(t_->q);
    for (std::uint32_t a = 0; a < t_->q; ++a) out.push_back((*this)(a));
    return out;
}

std::uint32_t FieldSpec::add(std::uint32_t a, std::uint32_t b) const noexcept { return t_->add[a * t_->q + b]; }
std::uint32_t FieldSpec::sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return t_->add[a * t_->q + t_->neg[b]];
}
std::uint32_t FieldSpec::mul(std::uint32_t a, std::uint32_t b) const noexcept { return t_->mul[a * t_->q + b]; }
std::uint32_t FieldSpec::neg(std::uint32_t a) const noexcept { return t_->neg[a]; }
std::uint32_t FieldSpec::inv(std::uint32_t a) const {
    if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    return t_->inv[a];
}
std::uint32_t FieldSpec::trace(std::uint32_t a) const noexcept { return t_->trace[a]; }

const SelfDualBasis &FieldSpec::self_dual_basis() const {
    if (!t_->self_dual) throw Error(ErrorCode::UnsupportedField, "self-dual basis requires p = 2");
    return *t_->self_dual;
}

int FieldSpec::wgt(std::uint32_t a) const {
    if (t_->p != 2) throw Error(ErrorCode::UnsupportedField, "wgt requires p = 2");
    return t_->wgt[a];
}

std::uint32_t FieldSpec::sqrt2(std::uint32_t a) const {
    if (t_->p != 2) throw Error(ErrorCode::UnsupportedField, "square root table requires p = 2");
    return t_->sqrt2[a];
}

std::string FieldSpec::header() const {
    std::ostringstream os;
    os << "field p=" << t_->p << " m=" << t_->m << " poly=";
    for (std::size_t i = 0; i < t_->modulus.size(); ++i) {
        if (i) os << ',';
        os << t_->modulus[i];
    }
    return os.str();
}

bool operator==(const FieldSpec &a, const FieldSpec &b) {
    return a.t_ == b.t_ || a.t_->same_field(*b.t_);
}

FieldElement FieldElement::operator-() const {
    const auto &t = tables_of(*this);
    return FieldElement(f_, t.neg[repr_]);
}

FieldElement operator+(const FieldElement &a, const FieldElement &b) {
    const auto &t = common(a, b);
    return FieldElement(a.f_, t.add[a.repr_ * t.q + b.repr_]);
}

FieldElement operator-(const FieldElement &a, const FieldElement &b) {
    const auto &t = common(a, b);
    return FieldElement(a.f_, t.add[a.repr_ * t.q + t.neg[b.repr_]]);
}

FieldElement operator*(const FieldElement &a, const FieldElement &b) {
    const auto &t = common(a, b);
    return FieldElement(a.f_, t.mul[a.repr_ * t.q + b.repr_]);
}

bool operator==(const FieldElement &a, const FieldElement &b) {
    if (a.f_ == nullptr || b.f_ == nullptr) return a.f_ == b.f_ && a.repr_ == b.repr_;
    common(a, b);
    return a.repr_ == b.repr_;
}

FieldElement add(const FieldElement &a, const FieldElement &b) { return a + b; }
FieldElement mul(const FieldElement &a, const FieldElement &b) { return a * b; }

FieldElement inv(const FieldElement &a) {
    const auto &t = tables_of(a);
    if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    return FieldElement(a.tables(), t.inv[a.repr()]);
}

FieldElement trace(const FieldElement &a) {
    const auto &t = tables_of(a);
    return FieldElement(a.tables(), t.trace[a.repr()]);
}

int character(const FieldElement &beta, const FieldElement &z) {
    const auto &t = common(beta, z);
    return t.trace[t.mul[beta.repr() * t.q + z.repr()]];
}

SelfDualBasis find_self_dual_basis(const FieldSpec &spec) { return spec.self_dual_basis(); }

int wgt(const FieldElement &a, const SelfDualBasis &basis) {
    const auto &t = tables_of(a);
    if (t.p != 2) throw Error(ErrorCode::UnsupportedField, "wgt requires p = 2");
    int w = 0;
    for (const auto &b : basis.basis) w += character(a, b) != 0;
    return w;
}

}  // namespace qenc
