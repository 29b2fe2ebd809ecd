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

#include "qenc/sim.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace qenc {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

Amplitude omega_pow(const FieldSpec &f, std::uint32_t e) {
    return std::polar(1.0, kTwoPi * static_cast<double>(e % f.p()) / f.p());
}

Amplitude phase_value(const FieldSpec &f, int phase) {
    return std::polar(1.0, kTwoPi * phase / phase_modulus(f));
}

std::size_t checked_dim(const FieldSpec &f, std::size_t n) {
    std::size_t dim = 1;
    for (std::size_t i = 0; i < n; ++i) {
        dim *= f.q();
        if (dim > kMaxAmplitudes) {
            throw Error(ErrorCode::TooLarge, "q^n exceeds the simulator cap of " + std::to_string(kMaxAmplitudes) +
                                                 " amplitudes");
        }
    }
    return dim;
}

void check_qudits(const StateVector &s, const Gate &g) {
    check_gate(g);
    for (auto q : g.qudits) {
        if (q > s.n()) {
            throw Error(ErrorCode::IndexOutOfRange,
                        "gate on qudit " + std::to_string(q) + " for a register of width " + std::to_string(s.n()));
        }
    }
}

/// Runs fn(base) for every index whose digit at `qudit` is zero.
template <typename Fn>
void for_each_fiber(const StateVector &s, std::size_t qudit, Fn fn) {
    const std::size_t stride = s.stride(qudit), block = stride * s.field().q();
    for (std::size_t hi = 0; hi < s.dim(); hi += block)
        for (std::size_t lo = 0; lo < stride; ++lo) fn(hi + lo, stride);
}

/// New amplitude vector with |idx> sent to |target(idx)>.
template <typename Fn>
void permute(StateVector &s, Fn target) {
    std::vector<Amplitude> out(s.dim());
    const auto &in = s.amplitudes();
    for (std::size_t idx = 0; idx < in.size(); ++idx) out[target(idx)] = in[idx];
    s.amplitudes() = std::move(out);
}

std::string digits_string(const std::vector<std::uint32_t> &d) {
    std::string out;
    for (std::size_t i = 0; i < d.size(); ++i) out += (i ? "," : "") + std::to_string(d[i]);
    return out;
}

std::string format_amp(Amplitude a) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(6);
    os << a.real() << (a.imag() < 0 ? "-" : "+") << std::abs(a.imag()) << "i";
    return os.str();
}

std::string format_double(double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

std::vector<std::size_t> complement(std::size_t n, const std::vector<std::size_t> &pivots) {
    std::vector<bool> used(n + 1, false);
    for (auto p : pivots) used.at(p) = true;
    std::vector<std::size_t> out;
    for (std::size_t j = 1; j <= n; ++j)
        if (!used[j]) out.push_back(j);
    return out;
}

}  // namespace

StateVector::StateVector(FieldSpec field, std::size_t n)
    : field_(std::move(field)), n_(n), amp_(checked_dim(field_, n), Amplitude(0.0)) {
    amp_[0] = 1.0;
}

StateVector StateVector::basis(const FieldSpec &field, const std::vector<std::uint32_t> &digits) {
    StateVector s(field, digits.size());
    s.amp_[0] = 0.0;
    s.amp_[s.index(digits)] = 1.0;
    return s;
}

std::size_t StateVector::index(const std::vector<std::uint32_t> &digits) const {
    if (digits.size() != n_) throw Error(ErrorCode::LengthMismatch, "digit string length differs from the width");
    std::size_t idx = 0;
    for (auto d : digits) {
        if (d >= field_.q()) throw Error(ErrorCode::FieldMismatch, "digit " + std::to_string(d) + " outside the field");
        idx = idx * field_.q() + d;
    }
    return idx;
}

std::vector<std::uint32_t> StateVector::digits(std::size_t index) const {
    std::vector<std::uint32_t> out(n_);
    for (std::size_t i = n_; i-- > 0;) {
        out[i] = static_cast<std::uint32_t>(index % field_.q());
        index /= field_.q();
    }
    return out;
}

std::size_t StateVector::stride(std::size_t qudit) const {
    std::size_t s = 1;
    for (std::size_t i = qudit; i < n_; ++i) s *= field_.q();
    return s;
}

double StateVector::norm() const {
    double acc = 0;
    for (const auto &a : amp_) acc += std::norm(a);
    return std::sqrt(acc);
}

Amplitude StateVector::inner(const StateVector &other) const {
    if (other.dim() != dim()) throw Error(ErrorCode::LengthMismatch, "states of different dimension");
    Amplitude acc = 0;
    for (std::size_t i = 0; i < amp_.size(); ++i) acc += std::conj(amp_[i]) * other.amp_[i];
    return acc;
}

double StateVector::distance(const StateVector &other) const {
    if (other.dim() != dim()) throw Error(ErrorCode::LengthMismatch, "states of different dimension");
    double acc = 0;
    for (std::size_t i = 0; i < amp_.size(); ++i) acc += std::norm(amp_[i] - other.amp_[i]);
    return std::sqrt(acc);
}

void apply(StateVector &s, const Gate &g) {
    check_qudits(s, g);
    const FieldSpec &f = s.field();
    const std::uint32_t q = f.q();
    auto &amp = s.amplitudes();
    auto digit = [&](std::size_t idx, std::size_t stride) { return static_cast<std::uint32_t>((idx / stride) % q); };

    switch (g.kind) {
        case GateKind::Fourier: {
            std::vector<Amplitude> kernel(static_cast<std::size_t>(q) * q);
            const double scale = 1.0 / std::sqrt(static_cast<double>(q));
            for (std::uint32_t z = 0; z < q; ++z)
                for (std::uint32_t x = 0; x < q; ++x) kernel[z * q + x] = scale * omega_pow(f, f.trace(f.mul(x, z)));
            std::vector<Amplitude> in(q);
            for_each_fiber(s, g.qudits[0], [&](std::size_t base, std::size_t stride) {
                for (std::uint32_t x = 0; x < q; ++x) in[x] = amp[base + x * stride];
                for (std::uint32_t z = 0; z < q; ++z) {
                    Amplitude acc = 0;
                    for (std::uint32_t x = 0; x < q; ++x) acc += kernel[z * q + x] * in[x];
                    amp[base + z * stride] = acc;
                }
            });
            break;
        }
        case GateKind::Mult:
        case GateKind::PauliX: {
            const std::size_t stride = s.stride(g.qudits[0]);
            const std::uint32_t c = g.param.repr();
            const bool mult = g.kind == GateKind::Mult;
            permute(s, [&](std::size_t idx) {
                const std::uint32_t y = digit(idx, stride);
                const std::uint32_t to = mult ? f.mul(c, y) : f.add(y, c);
                return idx + (static_cast<std::size_t>(to) - y) * stride;
            });
            break;
        }
        case GateKind::PhaseP:
        case GateKind::PauliZ: {
            std::vector<Amplitude> diag(q);
            const std::uint32_t c = g.param.repr();
            for (std::uint32_t y = 0; y < q; ++y) {
                if (g.kind == GateKind::PauliZ) {
                    diag[y] = omega_pow(f, f.trace(f.mul(c, y)));
                } else if (f.p() == 2) {
                    // (-i)^wgt(sqrt(gamma) y)
                    static const Amplitude minus_i_pow[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
                    diag[y] = minus_i_pow[f.wgt(f.mul(f.sqrt2(c), y)) % 4];
                } else {
                    // omega^{-tr(gamma y^2 / 2)}
                    const std::uint32_t e = f.trace(f.mul(f.inv(2 % f.p()), f.mul(c, f.mul(y, y))));
                    diag[y] = omega_pow(f, f.p() - e);
                }
            }
            const std::size_t stride = s.stride(g.qudits[0]);
            for (std::size_t idx = 0; idx < amp.size(); ++idx) amp[idx] *= diag[digit(idx, stride)];
            break;
        }
        case GateKind::Add:
        case GateKind::AddInverse: {
            const std::size_t sc = s.stride(g.qudits[0]), st = s.stride(g.qudits[1]);
            const bool add = g.kind == GateKind::Add;
            permute(s, [&](std::size_t idx) {
                const std::uint32_t x = digit(idx, sc), y = digit(idx, st);
                const std::uint32_t to = add ? f.add(y, x) : f.sub(y, x);
                return idx + (static_cast<std::size_t>(to) - y) * st;
            });
            break;
        }
        case GateKind::Horner: {
            const std::size_t sa = s.stride(g.qudits[0]), sx = s.stride(g.qudits[1]), st = s.stride(g.qudits[2]);
            permute(s, [&](std::size_t idx) {
                const std::uint32_t a = digit(idx, sa), x = digit(idx, sx), b = digit(idx, st);
                const std::uint32_t to = f.add(f.mul(a, x), b);
                return idx + (static_cast<std::size_t>(to) - b) * st;
            });
            break;
        }
    }
}

void apply(StateVector &s, const Circuit &c) {
    if (c.n != s.n()) throw Error(ErrorCode::LengthMismatch, "circuit width differs from the state width");
    if (!(c.field == s.field())) throw Error(ErrorCode::FieldMismatch, "circuit and state use different fields");
    for (const auto &g : c.gates) apply(s, g);
}

void apply(StateVector &s, const PauliOperator &op) {
    const PauliLabel &l = op.label;
    if (l.n() != s.n()) throw Error(ErrorCode::LengthMismatch, "operator width differs from the state width");
    const FieldSpec &f = s.field();
    const Amplitude global = phase_value(f, op.phase);
    // X_alpha Z_beta |z> = omega^{tr(beta . z)} |z + alpha>
    std::vector<std::size_t> strides(s.n());
    for (std::size_t i = 0; i < s.n(); ++i) strides[i] = s.stride(i + 1);
    std::vector<Amplitude> out(s.dim());
    const auto &in = s.amplitudes();
    const std::uint32_t q = f.q();
    for (std::size_t idx = 0; idx < in.size(); ++idx) {
        std::uint32_t e = 0;
        std::size_t to = 0;
        for (std::size_t i = 0; i < s.n(); ++i) {
            const std::uint32_t z = static_cast<std::uint32_t>((idx / strides[i]) % q);
            e += f.trace(f.mul(l.z[i].repr(), z));
            to += f.add(z, l.x[i].repr()) * strides[i];
        }
        out[to] = global * omega_pow(f, e) * in[idx];
    }
    s.amplitudes() = std::move(out);
}

Amplitude eigencheck(const StateVector &state, const PauliOperator &op, double tol) {
    StateVector image = state;
    apply(image, op);
    const double nn = std::norm(state.norm());
    if (nn == 0) throw Error(ErrorCode::NotEigenstate, "zero state");
    const Amplitude lambda = state.inner(image) / nn;
    double residual = 0;
    for (std::size_t i = 0; i < state.dim(); ++i) residual += std::norm(image[i] - lambda * state[i]);
    residual = std::sqrt(residual);
    if (residual > tol || std::abs(std::abs(lambda) - 1.0) > tol) {
        throw Error(ErrorCode::NotEigenstate, "residual=" + format_double(residual));
    }
    return lambda;
}

VerifyReport verify_encoder(const StabilizerMatrix &matrix, const Circuit &encoder, const VerifyOptions &options) {
    return verify_encoder(matrix, encoder, inverse(encoder), options);
}

VerifyReport verify_encoder(const StabilizerMatrix &matrix, const Circuit &encoder, const Circuit &decoder,
                            const VerifyOptions &opt) {
    const FieldSpec &f = matrix.field;
    const std::size_t n = matrix.n;
    if (encoder.n != n || decoder.n != n) throw Error(ErrorCode::LengthMismatch, "circuit width differs from the code length");
    if (!(encoder.field == f) || !(decoder.field == f)) throw Error(ErrorCode::FieldMismatch, "circuit and code use different fields");
    encoder.check();
    decoder.check();
    checked_dim(f, n);
    if (encoder.pivots.size() != matrix.rows.size()) {
        throw Error(ErrorCode::InvalidCode, "encoder lists " + std::to_string(encoder.pivots.size()) +
                                                " pivots for " + std::to_string(matrix.rows.size()) + " generators");
    }
    const auto pivots = encoder.pivots;
    const auto msg_pos = complement(n, pivots);

    VerifyReport rep;
    std::vector<std::uint32_t> offsets(pivots.size(), 0);

    if (opt.normalize) {
        // D g D^dagger must be a Z-type operator on the pivots; its eigenvalue
        // on |a_L, m> is phase * omega^{tr(beta_L . a)}.
        std::vector<PauliOperator> reduced;
        bool z_on_pivots = true;
        for (const auto &row : matrix.rows) {
            auto h = propagate(decoder, PauliOperator(row));
            for (std::size_t j = 0; j < n; ++j) {
                const bool pivot = std::find(pivots.begin(), pivots.end(), j + 1) != pivots.end();
                if (!h.label.x[j].is_zero() || (!pivot && !h.label.z[j].is_zero())) z_on_pivots = false;
            }
            reduced.push_back(h);
        }
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < pivots.size() && total <= kMaxAmplitudes; ++i) total *= f.q();
        bool found = false;
        if (z_on_pivots && total <= kMaxAmplitudes) {
            std::vector<std::uint32_t> a(pivots.size(), 0);
            for (std::uint64_t code = 0; code < total && !found; ++code) {
                std::uint64_t c = code;
                for (auto &d : a) {
                    d = static_cast<std::uint32_t>(c % f.q());
                    c /= f.q();
                }
                bool ok = true;
                for (const auto &h : reduced) {
                    std::uint32_t e = 0;
                    for (std::size_t i = 0; i < pivots.size(); ++i) e += f.trace(f.mul(h.label.z[pivots[i] - 1].repr(), a[i]));
                    if ((h.phase + omega_phase(f, e)) % phase_modulus(f) != 0) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    offsets = a;
                    found = true;
                }
            }
        }
        if (found) {
            rep.offsets = offsets;
        } else {
            rep.unnormalizable = true;
        }
    }

    // Messages: all of them when few, else distinct seeded samples.
    std::vector<std::vector<std::uint32_t>> messages;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < msg_pos.size() && total <= opt.samples; ++i) total *= f.q();
    if (total <= opt.samples) {
        for (std::uint64_t code = 0; code < total; ++code) {
            std::vector<std::uint32_t> m(msg_pos.size());
            std::uint64_t c = code;
            for (std::size_t i = m.size(); i-- > 0;) {
                m[i] = static_cast<std::uint32_t>(c % f.q());
                c /= f.q();
            }
            messages.push_back(m);
        }
    } else {
        std::mt19937_64 rng(opt.seed);
        std::uniform_int_distribution<std::uint32_t> d(0, f.q() - 1);
        std::set<std::vector<std::uint32_t>> seen;
        while (messages.size() < opt.samples) {
            std::vector<std::uint32_t> m(msg_pos.size());
            for (auto &v : m) v = d(rng);
            if (seen.insert(m).second) messages.push_back(m);
        }
    }

    std::vector<PauliOperator> gens;
    for (const auto &row : matrix.rows) gens.emplace_back(row);
    std::vector<StateVector> encoded;
    auto fail = [&](const std::string &what) {
        rep.pass = false;
        rep.failure = what;
        return rep;
    };

    for (const auto &m : messages) {
        std::vector<std::uint32_t> input(n, 0);
        for (std::size_t i = 0; i < pivots.size(); ++i) input[pivots[i] - 1] = offsets[i];
        for (std::size_t i = 0; i < msg_pos.size(); ++i) input[msg_pos[i] - 1] = m[i];
        StateVector psi = StateVector::basis(f, input);
        apply(psi, encoder);
        ++rep.messages;
        const std::string tag = "message=" + digits_string(m);
        if (std::abs(psi.norm() - 1.0) > 1e-9) return fail("check=norm " + tag + " norm=" + format_double(psi.norm()));
        for (std::size_t g = 0; g < gens.size(); ++g) {
            Amplitude lambda;
            try {
                lambda = eigencheck(psi, gens[g], opt.tol);
            } catch (const Error &e) {
                std::string detail = e.what();
                const auto pos = detail.find("residual=");
                return fail("check=eigenstate " + tag + " generator=" + std::to_string(g + 1) + " " +
                            (pos == std::string::npos ? "residual=?" : detail.substr(pos)));
            }
            if (rep.eigenvalues.size() <= g) {
                rep.eigenvalues.push_back(lambda);
                if (std::abs(std::pow(lambda, static_cast<double>(f.p())) - 1.0) > opt.tol) rep.non_root_eigenvalue = true;
            } else if (std::abs(lambda - rep.eigenvalues[g]) > opt.tol) {
                return fail("check=eigenvalue " + tag + " generator=" + std::to_string(g + 1) + " expected=" +
                            format_amp(rep.eigenvalues[g]) + " got=" + format_amp(lambda));
            }
        }
        StateVector back = psi;
        apply(back, decoder);
        const double residual = back.distance(StateVector::basis(f, input));
        if (residual > opt.tol) return fail("check=roundtrip " + tag + " residual=" + format_double(residual));
        for (std::size_t j = 0; j < encoded.size(); ++j) {
            const double overlap = std::abs(encoded[j].inner(psi));
            if (overlap > opt.tol) {
                return fail("check=orthogonal " + tag + " other=" + digits_string(messages[j]) +
                            " overlap=" + format_double(overlap));
            }
        }
        encoded.push_back(std::move(psi));
    }
    if (opt.normalize && rep.offsets) {
        for (std::size_t g = 0; g < rep.eigenvalues.size(); ++g) {
            if (std::abs(rep.eigenvalues[g] - 1.0) > opt.tol) {
                return fail("check=normalize generator=" + std::to_string(g + 1) + " got=" + format_amp(rep.eigenvalues[g]));
            }
        }
    }
    return rep;
}

std::vector<PauliLabel> low_weight_errors(const FieldSpec &f, std::size_t n, std::size_t t) {
    std::vector<PauliLabel> out{PauliLabel::zeros(f, n)};
    const std::uint32_t q = f.q();
    std::function<void(std::size_t, std::size_t, PauliLabel &)> rec = [&](std::size_t start, std::size_t left,
                                                                          PauliLabel &cur) {
        if (left == 0) return;
        for (std::size_t j = start; j < n; ++j) {
            for (std::uint32_t code = 1; code < q * q; ++code) {
                cur.x[j] = f(code % q);
                cur.z[j] = f(code / q);
                out.push_back(cur);
                rec(j + 1, left - 1, cur);
            }
            cur.x[j] = f.zero();
            cur.z[j] = f.zero();
        }
    };
    PauliLabel cur = PauliLabel::zeros(f, n);
    rec(0, t, cur);
    return out;
}

KLReport kl_check(const std::vector<StateVector> &codewords, std::size_t t, double tol) {
    if (codewords.empty()) throw Error(ErrorCode::InvalidCode, "no codewords");
    const FieldSpec &f = codewords[0].field();
    const std::size_t n = codewords[0].n();
    if (n > 5) throw Error(ErrorCode::TooLarge, "Knill-Laflamme check limited to n <= 5");
    if (codewords.size() > 4) throw Error(ErrorCode::TooLarge, "Knill-Laflamme check limited to K <= 4 codewords");
    if (t > 1) throw Error(ErrorCode::TooLarge, "Knill-Laflamme check limited to t <= 1");
    for (const auto &c : codewords) {
        if (c.n() != n || !(c.field() == f)) throw Error(ErrorCode::LengthMismatch, "codewords differ in width or field");
    }
    KLReport rep;
    rep.codewords = codewords.size();
    rep.errors = low_weight_errors(f, n, t);
    const std::size_t ne = rep.errors.size(), nc = codewords.size();
    std::vector<std::vector<StateVector>> images(ne);
    for (std::size_t e = 0; e < ne; ++e) {
        for (const auto &c : codewords) {
            StateVector v = c;
            apply(v, PauliOperator(rep.errors[e]));
            images[e].push_back(std::move(v));
        }
    }
    rep.matrix.assign(ne, std::vector<Amplitude>(ne));
    for (std::size_t k = 0; k < ne; ++k)
        for (std::size_t l = 0; l < ne; ++l) rep.matrix[k][l] = images[k][0].inner(images[l][0]);
    for (std::size_t i = 0; i < nc; ++i) {
        for (std::size_t j = 0; j < nc; ++j) {
            for (std::size_t k = 0; k < ne; ++k) {
                for (std::size_t l = 0; l < ne; ++l) {
                    const Amplitude v = images[k][i].inner(images[l][j]);
                    const Amplitude expect = i == j ? rep.matrix[k][l] : Amplitude(0);
                    if (std::abs(v - expect) > tol) {
                        if (rep.violations.size() < 16) rep.violations.push_back({i, j, k, l, v});
                        ++rep.violation_count;
                    }
                }
            }
        }
    }
    return rep;
}

std::vector<StateVector> encode_all(const Circuit &encoder, std::size_t max_states) {
    const FieldSpec &f = encoder.field;
    const auto msg_pos = complement(encoder.n, encoder.pivots);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < msg_pos.size(); ++i) {
        total *= f.q();
        if (total > max_states) throw Error(ErrorCode::TooLarge, "too many messages to encode");
    }
    std::vector<StateVector> out;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<std::uint32_t> input(encoder.n, 0);
        std::uint64_t c = code;
        for (std::size_t i = msg_pos.size(); i-- > 0;) {
            input[msg_pos[i] - 1] = static_cast<std::uint32_t>(c % f.q());
            c /= f.q();
        }
        StateVector s = StateVector::basis(f, input);
        apply(s, encoder);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace qenc
