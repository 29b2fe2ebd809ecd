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

#include "qenc/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

namespace qenc {

namespace {

[[noreturn]] void fail(const std::string &source, std::size_t line, const std::string &field, const std::string &msg) {
    throw Error(ErrorCode::ParseError, source + ":" + std::to_string(line) + ": " + field + ": " + msg);
}

std::vector<std::string> split_ws(const std::string &s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    for (std::string t; is >> t;) out.push_back(t);
    return out;
}

std::optional<std::uint64_t> parse_uint(std::string_view s) {
    std::uint64_t v = 0;
    if (s.empty()) return std::nullopt;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

std::vector<std::uint64_t> parse_list(const std::string &s, const std::string &source, std::size_t line,
                                      const std::string &field) {
    std::vector<std::uint64_t> out;
    if (s.empty()) return out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = s.find(',', start);
        const std::string part = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        auto v = parse_uint(part);
        if (!v) fail(source, line, field, "expected a comma-separated list of integers, got '" + s + "'");
        out.push_back(*v);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

/// `key=value` token split; fails when the key does not match.
std::string keyed(const std::string &token, const std::string &key, const std::string &source, std::size_t line) {
    const std::string prefix = key + "=";
    if (token.rfind(prefix, 0) != 0) fail(source, line, key, "expected '" + prefix + "<value>', got '" + token + "'");
    return token.substr(prefix.size());
}

std::uint64_t keyed_uint(const std::string &token, const std::string &key, const std::string &source,
                         std::size_t line) {
    auto v = parse_uint(keyed(token, key, source, line));
    if (!v) fail(source, line, key, "expected a non-negative integer in '" + token + "'");
    return *v;
}

std::uint32_t element(const FieldSpec &f, const std::string &token, const std::string &source, std::size_t line,
                      const std::string &field) {
    auto v = parse_uint(token);
    if (!v) fail(source, line, field, "expected an integer field element, got '" + token + "'");
    if (*v >= f.q()) fail(source, line, field, "element " + token + " outside GF(" + std::to_string(f.q()) + ")");
    return static_cast<std::uint32_t>(*v);
}

std::string trim(const std::string &s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

/// Reads non-empty lines, keeping `#` lines so callers can interpret headers.
struct LineReader {
    std::istream &in;
    std::string source;
    std::size_t line_no = 0;

    bool next(std::string &out, bool keep_comments) {
        std::string raw;
        while (std::getline(in, raw)) {
            ++line_no;
            std::string t = trim(raw);
            if (t.empty()) continue;
            if (t[0] == '#') {
                if (!keep_comments) continue;
                out = t;
                return true;
            }
            const auto hash = t.find('#');
            if (hash != std::string::npos) t = trim(t.substr(0, hash));
            if (t.empty()) continue;
            out = t;
            return true;
        }
        return false;
    }
};

FieldSpec read_field(LineReader &r) {
    std::string line;
    if (!r.next(line, false)) fail(r.source, r.line_no, "field", "missing field header");
    return parse_field_header(line, r.source, r.line_no);
}

std::size_t qudit_index(const std::string &token, const std::string &source, std::size_t line) {
    if (token.size() < 2 || token[0] != 'q') fail(source, line, "qudit", "expected 'q<i>', got '" + token + "'");
    auto v = parse_uint(std::string_view(token).substr(1));
    if (!v || *v == 0) fail(source, line, "qudit", "expected a 1-based index in '" + token + "'");
    return static_cast<std::size_t>(*v);
}

std::string join(const std::vector<std::size_t> &v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

std::ifstream open_in(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, path + ":0: file: cannot open");
    return in;
}

std::ofstream open_out(const std::string &path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::ParseError, path + ":0: file: cannot write");
    return out;
}

}  // namespace

bool operator==(const ClassicalMatrix &a, const ClassicalMatrix &b) {
    return a.field == b.field && a.rows == b.rows && a.cols == b.cols && a.data == b.data;
}

FieldSpec parse_field_header(const std::string &line, const std::string &source, std::size_t line_no) {
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0] != "field") fail(source, line_no, "field", "expected 'field p=<p> m=<m> poly=<c0,...,cm>'");
    std::optional<std::uint64_t> p, m;
    std::optional<std::vector<std::uint64_t>> poly;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
        const auto &t = tokens[i];
        if (t.rfind("p=", 0) == 0) {
            p = keyed_uint(t, "p", source, line_no);
        } else if (t.rfind("m=", 0) == 0) {
            m = keyed_uint(t, "m", source, line_no);
        } else if (t.rfind("poly=", 0) == 0) {
            poly = parse_list(keyed(t, "poly", source, line_no), source, line_no, "poly");
        } else {
            fail(source, line_no, "field", "unknown key in '" + t + "'");
        }
    }
    if (!p) fail(source, line_no, "p", "missing");
    if (!m) m = 1;
    if (!poly) {
        if (*m != 1) fail(source, line_no, "poly", "required when m > 1");
        poly = std::vector<std::uint64_t>{0, 1};
    }
    if (*p > 256 || *m > 8) fail(source, line_no, "field", "q = p^m exceeds 256");
    std::vector<std::uint32_t> coeffs(poly->begin(), poly->end());
    try {
        return FieldSpec(static_cast<std::uint32_t>(*p), static_cast<std::uint32_t>(*m), coeffs);
    } catch (const Error &e) {
        fail(source, line_no, "field", e.what());
    }
}

StabilizerMatrix read_stabilizer(std::istream &in, const std::string &source) {
    LineReader r{in, source};
    const FieldSpec f = read_field(r);
    std::string line;
    if (!r.next(line, false)) fail(source, r.line_no, "code", "missing 'code n=<n> k=<k>'");
    auto tokens = split_ws(line);
    if (tokens.size() != 3 || tokens[0] != "code") fail(source, r.line_no, "code", "expected 'code n=<n> k=<k>'");
    const std::size_t n = keyed_uint(tokens[1], "n", source, r.line_no);
    const std::size_t k = keyed_uint(tokens[2], "k", source, r.line_no);
    if (n == 0) fail(source, r.line_no, "n", "must be positive");
    if (k >= n) fail(source, r.line_no, "k", "must be smaller than n");
    StabilizerMatrix s{f, n, k, {}};
    while (r.next(line, false)) {
        tokens = split_ws(line);
        if (tokens[0] != "row") fail(source, r.line_no, "row", "expected 'row <x_1> ... <x_n> | <z_1> ... <z_n>'");
        if (tokens.size() != 2 * n + 2 || tokens[n + 1] != "|") {
            fail(source, r.line_no, "row", "expected " + std::to_string(n) + " X entries, '|', and " + std::to_string(n) + " Z entries");
        }
        FqRow row;
        for (std::size_t i = 1; i <= n; ++i) row.push_back(element(f, tokens[i], source, r.line_no, "row"));
        for (std::size_t i = n + 2; i < tokens.size(); ++i) row.push_back(element(f, tokens[i], source, r.line_no, "row"));
        s.rows.push_back(PauliLabel::from_row(f, row));
    }
    if (s.rows.size() != n - k) {
        fail(source, r.line_no, "row", "expected n-k=" + std::to_string(n - k) + " rows, found " + std::to_string(s.rows.size()));
    }
    return s;
}

void write_stabilizer(std::ostream &out, const StabilizerMatrix &matrix) {
    out << matrix.field.header() << "\n";
    out << "code n=" << matrix.n << " k=" << matrix.k << "\n";
    for (const auto &row : matrix.rows) {
        out << "row";
        for (const auto &e : row.x) out << ' ' << e.repr();
        out << " |";
        for (const auto &e : row.z) out << ' ' << e.repr();
        out << "\n";
    }
}

std::string format_gate(const Gate &g) {
    const std::string kind(to_string(g.kind));
    switch (g.kind) {
        case GateKind::Fourier: return "F q" + std::to_string(g.qudits[0]);
        case GateKind::Mult:
        case GateKind::PhaseP: return kind + " q" + std::to_string(g.qudits[0]) + " gamma=" + std::to_string(g.param.repr());
        case GateKind::PauliX: return "X q" + std::to_string(g.qudits[0]) + " alpha=" + std::to_string(g.param.repr());
        case GateKind::PauliZ: return "Z q" + std::to_string(g.qudits[0]) + " beta=" + std::to_string(g.param.repr());
        case GateKind::Add:
        case GateKind::AddInverse:
            return kind + " c=" + std::to_string(g.qudits[0]) + " t=" + std::to_string(g.qudits[1]);
        case GateKind::Horner:
            return "HORNER a=" + std::to_string(g.qudits[0]) + " x=" + std::to_string(g.qudits[1]) +
                   " t=" + std::to_string(g.qudits[2]);
    }
    return kind;
}

Circuit read_circuit(std::istream &in, const std::string &source) {
    LineReader r{in, source};
    std::string line;
    std::optional<FieldSpec> f;
    Direction direction = Direction::Encoder;
    std::optional<std::size_t> width;
    std::vector<std::size_t> pivots;
    std::vector<Gate> gates;
    std::size_t max_index = 0;
    while (r.next(line, true)) {
        const std::size_t ln = r.line_no;
        if (line[0] == '#') {
            const std::string body = trim(line.substr(1));
            if (body.rfind("direction=", 0) == 0) {
                const std::string v = body.substr(10);
                if (v == "encoder") direction = Direction::Encoder;
                else if (v == "decoder") direction = Direction::Decoder;
                else fail(source, ln, "direction", "expected 'encoder' or 'decoder', got '" + v + "'");
            } else if (body.rfind("pivots=", 0) == 0) {
                pivots.clear();
                for (auto v : parse_list(body.substr(7), source, ln, "pivots")) pivots.push_back(v);
            } else if (body.rfind("qudits=", 0) == 0) {
                auto v = parse_uint(body.substr(7));
                if (!v) fail(source, ln, "qudits", "expected an integer");
                width = *v;
            }
            continue;
        }
        if (!f) {
            f = parse_field_header(line, source, ln);
            continue;
        }
        const auto t = split_ws(line);
        const std::string &op = t[0];
        auto need = [&](std::size_t count) {
            if (t.size() != count) fail(source, ln, "gate", "wrong number of operands in '" + line + "'");
        };
        Gate g{GateKind::Fourier, {}, {}};
        if (op == "F") {
            need(2);
            g = Gate::fourier(qudit_index(t[1], source, ln));
        } else if (op == "M" || op == "P" || op == "X" || op == "Z") {
            need(3);
            const std::string key = (op == "X") ? "alpha" : (op == "Z") ? "beta" : "gamma";
            const std::size_t q = qudit_index(t[1], source, ln);
            const FieldElement e = (*f)(element(*f, keyed(t[2], key, source, ln), source, ln, key));
            if (op == "M") {
                if (e.is_zero()) fail(source, ln, "gamma", "M needs a nonzero gamma");
                g = Gate::mult(q, e);
            } else if (op == "P") {
                g = Gate::phase(q, e);
            } else if (op == "X") {
                g = Gate::pauli_x(q, e);
            } else {
                g = Gate::pauli_z(q, e);
            }
        } else if (op == "ADD" || op == "ADDINV") {
            need(3);
            const std::size_t c = keyed_uint(t[1], "c", source, ln), tt = keyed_uint(t[2], "t", source, ln);
            g = op == "ADD" ? Gate::add(c, tt) : Gate::add_inverse(c, tt);
        } else if (op == "HORNER") {
            need(4);
            g = Gate::horner(keyed_uint(t[1], "a", source, ln), keyed_uint(t[2], "x", source, ln),
                             keyed_uint(t[3], "t", source, ln));
        } else {
            fail(source, ln, "gate", "unknown gate '" + op + "'");
        }
        try {
            check_gate(g);
        } catch (const Error &e) {
            fail(source, ln, "gate", e.what());
        }
        for (auto q : g.qudits) max_index = std::max(max_index, q);
        gates.push_back(std::move(g));
    }
    if (!f) fail(source, r.line_no, "field", "missing field header");
    for (auto p : pivots) max_index = std::max(max_index, p);
    Circuit c{*f, width.value_or(max_index), std::move(gates), direction, std::move(pivots)};
    try {
        c.check();
    } catch (const Error &e) {
        fail(source, r.line_no, "circuit", e.what());
    }
    return c;
}

void write_circuit(std::ostream &out, const Circuit &c) {
    out << c.field.header() << "\n";
    out << "# direction=" << (c.direction == Direction::Encoder ? "encoder" : "decoder") << "\n";
    out << "# qudits=" << c.n << "\n";
    out << "# pivots=" << join(c.pivots) << "\n";
    for (const auto &g : c.gates) out << format_gate(g) << "\n";
}

ClassicalMatrix read_matrix(std::istream &in, const std::string &source) {
    LineReader r{in, source};
    const FieldSpec f = read_field(r);
    std::string line;
    if (!r.next(line, false)) fail(source, r.line_no, "matrix", "missing 'matrix rows=<r> cols=<n>'");
    auto t = split_ws(line);
    if (t.size() != 3 || t[0] != "matrix") fail(source, r.line_no, "matrix", "expected 'matrix rows=<r> cols=<n>'");
    ClassicalMatrix m{f, keyed_uint(t[1], "rows", source, r.line_no), keyed_uint(t[2], "cols", source, r.line_no), {}};
    if (m.cols == 0) fail(source, r.line_no, "cols", "must be positive");
    while (r.next(line, false)) {
        t = split_ws(line);
        if (t.size() != m.cols) {
            fail(source, r.line_no, "row", "expected " + std::to_string(m.cols) + " entries, found " + std::to_string(t.size()));
        }
        FqRow row;
        for (const auto &tok : t) row.push_back(element(f, tok, source, r.line_no, "row"));
        m.data.push_back(std::move(row));
    }
    if (m.data.size() != m.rows) {
        fail(source, r.line_no, "rows", "declared " + std::to_string(m.rows) + " rows, found " + std::to_string(m.data.size()));
    }
    return m;
}

void write_matrix(std::ostream &out, const ClassicalMatrix &m) {
    out << m.field.header() << "\n";
    out << "matrix rows=" << m.rows << " cols=" << m.cols << "\n";
    for (const auto &row : m.data) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
        out << "\n";
    }
}

StabilizerMatrix load_stabilizer(const std::string &path) {
    auto in = open_in(path);
    return read_stabilizer(in, path);
}

Circuit load_circuit(const std::string &path) {
    auto in = open_in(path);
    return read_circuit(in, path);
}

ClassicalMatrix load_matrix(const std::string &path) {
    auto in = open_in(path);
    return read_matrix(in, path);
}

void save_stabilizer(const std::string &path, const StabilizerMatrix &matrix) {
    auto out = open_out(path);
    write_stabilizer(out, matrix);
}

void save_circuit(const std::string &path, const Circuit &circuit) {
    auto out = open_out(path);
    write_circuit(out, circuit);
}

}  // namespace qenc
