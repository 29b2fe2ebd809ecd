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

#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "qenc/io.hpp"

using namespace qenc;
using namespace qenc::fixtures;

namespace {

std::string data(const std::string &name) { return std::string(QENC_TEST_DATA) + "/" + name; }

template <typename Fn>
std::string parse_error(Fn fn) {
    try {
        fn();
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::ParseError);
        return e.what();
    }
    FAIL("expected a parse error");
    return "";
}

}  // namespace

TEST_CASE("field headers") {
    CHECK(parse_field_header("field p=3 m=1 poly=0,1") == gf3());
    CHECK(parse_field_header("field p=3") == gf3());
    CHECK(parse_field_header("field p=2 m=3 poly=1,1,0,1") == gf8());
    CHECK(parse_field_header(gf9().header()) == gf9());
    auto msg = parse_error([] { parse_field_header("field p=2 m=2 poly=1,0,1", "f.txt", 4); });
    CHECK(msg.find("f.txt:4: field:") != std::string::npos);
    msg = parse_error([] { parse_field_header("field p=4", "f.txt", 1); });
    CHECK(msg.find("f.txt:1:") != std::string::npos);
    parse_error([] { parse_field_header("field p=2 m=2"); });
    parse_error([] { parse_field_header("feld p=2"); });
}

TEST_CASE("stabilizer files") {
    auto m = load_stabilizer(data("nine_five.stab"));
    CHECK(m == nine_five(gf3()));
    CHECK(load_stabilizer(data("five_one.stab")) == five_one(FieldSpec::prime(2)));
    CHECK(load_stabilizer(data("five_one_mutated.stab")) == five_one_mutated(FieldSpec::prime(2)));

    std::stringstream ss;
    write_stabilizer(ss, m);
    CHECK(read_stabilizer(ss) == m);

    std::istringstream bad("field p=3\ncode n=2 k=1\nrow 1 0 | 0 3\n");
    auto msg = parse_error([&] { read_stabilizer(bad, "bad.stab"); });
    CHECK(msg.find("bad.stab:3: row:") != std::string::npos);

    std::istringstream short_row("field p=3\n# comment\ncode n=2 k=1\nrow 1 0 | 0\n");
    msg = parse_error([&] { read_stabilizer(short_row, "s.stab"); });
    CHECK(msg.find("s.stab:4: row:") != std::string::npos);

    std::istringstream missing("field p=3\ncode n=3 k=1\nrow 1 0 0 | 0 0 0\n");
    msg = parse_error([&] { read_stabilizer(missing, "m.stab"); });
    CHECK(msg.find("m.stab:") != std::string::npos);
    CHECK(msg.find("rows") != std::string::npos);

    std::istringstream bad_code("field p=3\ncode n=3 j=1\n");
    msg = parse_error([&] { read_stabilizer(bad_code, "c.stab"); });
    CHECK(msg.find("c.stab:2: k:") != std::string::npos);
}

TEST_CASE("circuit files round-trip") {
    auto f4 = gf4();
    Circuit c{f4,
              3,
              {Gate::fourier(1), Gate::mult(2, f4(3)), Gate::phase(3, f4(2)), Gate::pauli_x(1, f4(1)),
               Gate::pauli_z(2, f4(3)), Gate::add(1, 3), Gate::add_inverse(3, 2), Gate::horner(1, 2, 3)},
              Direction::Decoder,
              {2, 1}};
    std::stringstream ss;
    write_circuit(ss, c);
    const std::string text = ss.str();
    CHECK(text.find("ADDINV c=3 t=2") != std::string::npos);
    CHECK(text.find("HORNER a=1 x=2 t=3") != std::string::npos);
    CHECK(text.find("# direction=decoder") != std::string::npos);
    CHECK(read_circuit(ss) == c);

    std::istringstream no_width("field p=3\n# pivots=1\nF q1\nADD c=1 t=2\n");
    auto parsed = read_circuit(no_width);
    CHECK(parsed.n == 2);
    CHECK(parsed.direction == Direction::Encoder);
    CHECK(parsed.pivots == std::vector<std::size_t>{1});
}

TEST_CASE("circuit parse errors") {
    auto msg = parse_error([] {
        std::istringstream in("field p=3\nF q1\nM q2 gamma=0\n");
        read_circuit(in, "c.circ");
    });
    CHECK(msg.find("c.circ:3: gamma:") != std::string::npos);
    msg = parse_error([] {
        std::istringstream in("field p=3\nSWAP q1 q2\n");
        read_circuit(in, "c.circ");
    });
    CHECK(msg.find("c.circ:2: gate:") != std::string::npos);
    msg = parse_error([] {
        std::istringstream in("field p=3\nADD c=1 t=1\n");
        read_circuit(in, "c.circ");
    });
    CHECK(msg.find("c.circ:2: gate:") != std::string::npos);
    msg = parse_error([] {
        std::istringstream in("field p=3\n# qudits=2\nADD c=1 t=3\n");
        read_circuit(in, "c.circ");
    });
    CHECK(msg.find("c.circ:") != std::string::npos);
    msg = parse_error([] {
        std::istringstream in("field p=3\nP q1 gamma=5\n");
        read_circuit(in, "c.circ");
    });
    CHECK(msg.find("c.circ:2: gamma:") != std::string::npos);
    msg = parse_error([] {
        std::istringstream in("field p=3\nF qx\n");
        read_circuit(in, "c.circ");
    });
    CHECK(msg.find("c.circ:2: qudit:") != std::string::npos);
}

TEST_CASE("matrix files") {
    auto g = load_matrix(data("seven_three_g.mat"));
    auto h = load_matrix(data("seven_three_h.mat"));
    CHECK(g.field == gf8());
    CHECK(g.data == seven_three_g());
    CHECK(h.data == seven_three_h());
    std::stringstream ss;
    write_matrix(ss, h);
    CHECK(read_matrix(ss) == h);

    auto msg = parse_error([] {
        std::istringstream in("field p=2\nmatrix rows=2 cols=2\n1 0\n");
        read_matrix(in, "g.mat");
    });
    CHECK(msg.find("g.mat:") != std::string::npos);
    CHECK(msg.find("rows") != std::string::npos);
    msg = parse_error([] {
        std::istringstream in("field p=2\nmatrix rows=1 cols=2\n1 0 1\n");
        read_matrix(in, "g.mat");
    });
    CHECK(msg.find("g.mat:3: row:") != std::string::npos);
    CHECK_THROWS_AS(load_matrix(data("does_not_exist.mat")), Error);
}
