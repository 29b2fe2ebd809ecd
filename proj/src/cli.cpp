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

#include "qenc/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "qenc/io.hpp"
#include "qenc/sim.hpp"
#include "qenc/synth_css.hpp"
#include "qenc/synth_stab.hpp"

namespace qenc {

namespace {

constexpr const char *kFormats = R"(File formats (one item per line, '#' starts a comment):
  field header   field p=<p> m=<m> poly=<c0,...,cm>     (coefficients low to high)
  stabilizer     <field header>
                 code n=<n> k=<k>
                 row <x_1> ... <x_n> | <z_1> ... <z_n>   (n-k rows)
  circuit        <field header>
                 # direction=<encoder|decoder>
                 # qudits=<n>
                 # pivots=<i,j,...>
                 F q<i> | M q<i> gamma=<e> | P q<i> gamma=<e> | X q<i> alpha=<e>
                 Z q<i> beta=<e> | ADD c=<i> t=<j> | ADDINV c=<i> t=<j>
                 HORNER a=<i> x=<j> t=<k>
  matrix         <field header>
                 matrix rows=<r> cols=<n>
                 <e_1> ... <e_n>                          (r rows)
Field elements are integers sum a_i p^i in the polynomial basis; qudits are 1-based.
Exit codes: 0 success, 1 verification failure, 2 input error.)";

/// Input errors carry the file they came from unless the message already does.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <typename Fn>
auto with_source(const std::string &path, Fn fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const Error &e) {
        if (e.code() == ErrorCode::ParseError) throw;
        throw InputError(path + ": " + e.what());
    }
}

std::string join(const std::vector<std::size_t> &v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

std::size_t count_kind(const Circuit &c, GateKind kind) {
    return static_cast<std::size_t>(
        std::count_if(c.gates.begin(), c.gates.end(), [&](const Gate &g) { return g.kind == kind; }));
}

std::size_t count_single(const Circuit &c) {
    return static_cast<std::size_t>(
        std::count_if(c.gates.begin(), c.gates.end(), [](const Gate &g) { return g.single_qudit(); }));
}

std::string fmt(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(12) << (std::abs(v) < 5e-13 ? 0.0 : v);
    return os.str();
}

std::string fmt_amp(Amplitude a) { return fmt(a.real()) + " " + fmt(a.imag()); }

std::vector<std::uint32_t> parse_digits(const std::string &s, const FieldSpec &f, std::size_t n) {
    std::vector<std::uint32_t> out;
    if (s.find(',') != std::string::npos) {
        std::stringstream ss(s);
        for (std::string part; std::getline(ss, part, ',');) {
            try {
                std::size_t used = 0;
                const unsigned long v = std::stoul(part, &used);
                if (used != part.size()) throw std::invalid_argument(part);
                out.push_back(static_cast<std::uint32_t>(v));
            } catch (const std::exception &) {
                throw InputError("--input: '" + part + "' is not an integer");
            }
        }
    } else {
        for (char c : s) {
            if (c < '0' || c > '9') throw InputError("--input: '" + s + "' is not a digit string");
            out.push_back(static_cast<std::uint32_t>(c - '0'));
        }
        if (f.q() > 10 && !out.empty()) throw InputError("--input: use comma-separated values when q > 10");
    }
    if (out.size() != n) {
        throw InputError("--input: expected " + std::to_string(n) + " values, got " + std::to_string(out.size()));
    }
    for (auto v : out)
        if (v >= f.q()) throw InputError("--input: value " + std::to_string(v) + " outside GF(" + std::to_string(f.q()) + ")");
    return out;
}

int cmd_synth_stab(const std::string &path, const std::string &variant_name, const std::string &log_dir,
                   const std::string &output, std::ostream &out) {
    const auto m = load_stabilizer(path);
    const Variant variant = variant_name == "z" ? Variant::ZTarget : Variant::XTarget;
    const auto res = with_source(path, [&] { return synthesize(m, variant); });
    save_circuit(output + ".dec", res.decoder);
    save_circuit(output + ".enc", res.encoder);
    if (!log_dir.empty()) {
        std::filesystem::create_directories(log_dir);
        for (const auto &step : res.step_log) {
            const std::string base = log_dir + "/row" + std::to_string(step.row);
            save_stabilizer(base + "_T.stab", step.after_t);
            save_stabilizer(base + "_A.stab", step.after_a);
        }
    }
    out << "adds=" << res.add_count << " singles=" << res.single_count << " pivots=" << join(res.pivots) << "\n";
    out << "bound=" << gate_count_bound(m.n, m.k) << " decoder=" << output << ".dec encoder=" << output << ".enc\n";
    return 0;
}

int cmd_synth_css(const std::string &g_path, const std::string &h_path, bool swap, bool merge, bool echelon,
                  const std::string &output, const std::string &stab_out, std::ostream &out) {
    const auto g = load_matrix(g_path);
    const auto h = load_matrix(h_path);
    if (!(g.field == h.field)) throw InputError(h_path + ": field differs from " + g_path);
    CssInput in{g.field, g.data, h.data};
    if (echelon) in = with_source(h_path, [&] { return echelonize(g.field, g.data, h.data); });
    Circuit c = with_source(h_path, [&] { return synthesize_css(in); });
    if (merge) c = merge_mult(c);
    std::string roles = "original";
    if (swap) {
        if (auto sw = swap_roles(in)) {
            Circuit alt = synthesize_css(*sw);
            if (merge) alt = merge_mult(alt);
            if (alt.gates.size() < c.gates.size()) {
                c = std::move(alt);
                in = *sw;
                roles = "swapped";
            }
        } else {
            roles = "original(swap-not-applicable)";
        }
    }
    save_circuit(output, c);
    if (!stab_out.empty()) save_stabilizer(stab_out, css_stabilizer_matrix(in));
    const std::size_t n = in.h[0].size();
    const auto bounds = css_gate_bounds(n, in.h.size(), n - in.g.size());
    out << "fourier=" << count_kind(c, GateKind::Fourier) << " adds=" << count_kind(c, GateKind::Add)
        << " mults=" << count_kind(c, GateKind::Mult) << " message=" << join(css_message_qudits(in))
        << " roles=" << roles << "\n";
    out << "bound_fourier=" << bounds.fourier << " bound_adds=" << bounds.add_max << " bound_mults_merged=" << bounds.mult_max
        << "\n";
    return 0;
}

int cmd_verify(const std::string &path, const std::string &enc_path, const std::string &dec_path,
               std::size_t samples, std::uint64_t seed, bool normalize, std::ostream &out) {
    const auto m = load_stabilizer(path);
    const auto enc = load_circuit(enc_path);
    const auto dec = dec_path.empty() ? inverse(enc) : load_circuit(dec_path);
    VerifyOptions opt;
    opt.samples = samples;
    opt.seed = seed;
    opt.normalize = normalize;
    const auto rep = with_source(enc_path, [&] { return verify_encoder(m, enc, dec, opt); });
    out << "messages=" << rep.messages << "\n";
    for (std::size_t g = 0; g < rep.eigenvalues.size(); ++g) {
        out << "generator=" << g + 1 << " eigenvalue=" << fmt_amp(rep.eigenvalues[g]) << "\n";
    }
    if (rep.non_root_eigenvalue) out << "note=eigenvalue-not-pth-root\n";
    if (normalize) {
        if (rep.offsets) {
            out << "offsets=";
            for (std::size_t i = 0; i < rep.offsets->size(); ++i) out << (i ? "," : "") << (*rep.offsets)[i];
            out << "\n";
        } else {
            out << "normalize=Unnormalizable\n";
        }
    }
    if (!rep.pass) {
        out << rep.failure << "\n" << "verdict=fail\n";
        return 1;
    }
    if (normalize && rep.unnormalizable) {
        out << "verdict=fail\n";
        return 1;
    }
    out << "verdict=pass\n";
    return 0;
}

int cmd_simulate(const std::string &path, const std::string &input, std::ostream &out) {
    const auto c = load_circuit(path);
    const auto digits = parse_digits(input, c.field, c.n);
    auto s = with_source(path, [&] {
        auto st = StateVector::basis(c.field, digits);
        apply(st, c);
        return st;
    });
    for (std::size_t i = 0; i < s.dim(); ++i) {
        if (std::abs(s[i]) < 1e-12) continue;
        const auto d = s.digits(i);
        out << "|";
        for (std::size_t j = 0; j < d.size(); ++j) out << (j ? "," : "") << d[j];
        out << "> " << fmt_amp(s[i]) << "\n";
    }
    return 0;
}

int cmd_distance(const std::string &path, double cap, std::ostream &out) {
    const auto m = load_stabilizer(path);
    const auto d = with_source(path, [&] {
        validate(m);
        return min_distance_bruteforce(m, cap);
    });
    out << "d=" << d << "\n";
    return 0;
}

int cmd_gatecount(const std::string &path, std::ostream &out) {
    const auto c = load_circuit(path);
    out << "gates=" << c.gates.size() << " adds=" << count_kind(c, GateKind::Add) + count_kind(c, GateKind::AddInverse)
        << " singles=" << count_single(c) << " fourier=" << count_kind(c, GateKind::Fourier)
        << " mults=" << count_kind(c, GateKind::Mult) << " phases=" << count_kind(c, GateKind::PhaseP) << "\n";
    if (!c.pivots.empty() && c.pivots.size() < c.n) {
        out << "n=" << c.n << " k=" << c.n - c.pivots.size()
            << " add_bound=" << gate_count_bound(c.n, c.n - c.pivots.size()) << "\n";
    }
    return 0;
}

int cmd_kl_check(const std::string &path, std::size_t t, std::ostream &out) {
    const auto m = load_stabilizer(path);
    const auto rep = with_source(path, [&] {
        const auto res = synthesize(m);
        return kl_check(encode_all(res.encoder), t);
    });
    out << "codewords=" << rep.codewords << " errors=" << rep.errors.size() << "\n";
    if (!rep.pass()) {
        const auto &v = rep.violations.front();
        out << "violations=" << rep.violation_count << " i=" << v.i + 1 << " j=" << v.j + 1
            << " k=" << to_string(rep.errors[v.k]) << " l=" << to_string(rep.errors[v.l])
            << " value=" << fmt_amp(v.value) << "\n";
        out << "verdict=fail\n";
        return 1;
    }
    out << "verdict=pass\n";
    return 0;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"qenc: encoding and decoding circuits for qudit stabilizer codes", "qenc"};
    app.footer(kFormats);
    app.require_subcommand(1);

    std::string stab, output, variant = "x", log_dir;
    auto *synth_stab = app.add_subcommand("synth-stab", "Synthesize decoder and encoder circuits for a stabilizer code");
    synth_stab->add_option("stabilizer", stab, "Stabilizer file")->required();
    synth_stab->add_option("--variant", variant, "Normalization target: x (default) or z")->check(CLI::IsMember({"x", "z"}));
    synth_stab->add_option("--log", log_dir, "Directory for row<i>_T.stab / row<i>_A.stab snapshots");
    synth_stab->add_option("-o,--output", output, "Output stem; writes <stem>.dec and <stem>.enc")->required();

    std::string g_path, h_path, css_out, stab_out;
    bool swap = false, merge = false, echelon = false;
    auto *synth_css = app.add_subcommand("synth-css", "Synthesize a CSS encoder from classical generator matrices");
    // --h names the matrix here, so help keeps only its long form.
    synth_css->set_help_flag("--help", "Print this help message and exit");
    synth_css->add_option("--g", g_path, "Generator matrix of C_2^perp")->required();
    synth_css->add_option("--h", h_path, "Generator matrix of C_1 in row echelon form, first rows equal to G")->required();
    synth_css->add_flag("--swap-roles", swap, "Also synthesize with C_1 and C_2 exchanged and keep the shorter circuit");
    synth_css->add_flag("--merge-mult", merge, "Combine adjacent multiplication gates");
    synth_css->add_flag("--echelonize", echelon, "Bring G and H into the required echelon form first");
    synth_css->add_option("-o,--output", css_out, "Encoder circuit file")->required();
    synth_css->add_option("--stabilizer-out", stab_out, "Also write the stabilizer matrix of the code");

    std::string enc_path, dec_path;
    std::size_t samples = 10;
    std::uint64_t seed = 1;
    bool normalize = false;
    auto *verify = app.add_subcommand("verify", "Check an encoder against a stabilizer code by dense simulation");
    verify->add_option("stabilizer", stab, "Stabilizer file")->required();
    verify->add_option("--encoder", enc_path, "Encoder circuit")->required();
    verify->add_option("--decoder", dec_path, "Decoder circuit (default: inverse of the encoder)");
    verify->add_option("--samples", samples, "Number of random messages")->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "Random seed");
    verify->add_flag("--normalize", normalize, "Search pivot offsets that make every eigenvalue 1");

    std::string circuit, input;
    auto *simulate = app.add_subcommand("simulate", "Apply a circuit to a basis state and print the amplitudes");
    simulate->add_option("circuit", circuit, "Circuit file")->required();
    simulate->add_option("--input", input, "Basis state: digit string or comma-separated values")->required();

    double cap = 1e8;
    auto *distance = app.add_subcommand("distance", "Brute-force minimum distance of a stabilizer code");
    distance->add_option("stabilizer", stab, "Stabilizer file")->required();
    distance->add_option("--cap", cap, "Largest enumeration size q^(n+k)");

    auto *gatecount = app.add_subcommand("gatecount", "Count the gates of a circuit");
    gatecount->add_option("circuit", circuit, "Circuit file")->required();

    std::size_t t = 1;
    auto *kl = app.add_subcommand("kl-check", "Knill-Laflamme check on all encoded basis states (n <= 5, q^k <= 4)");
    kl->add_option("stabilizer", stab, "Stabilizer file")->required();
    kl->add_option("--t", t, "Correctable error weight (0 or 1)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*synth_stab) return cmd_synth_stab(stab, variant, log_dir, output, out);
        if (*synth_css) return cmd_synth_css(g_path, h_path, swap, merge, echelon, css_out, stab_out, out);
        if (*verify) return cmd_verify(stab, enc_path, dec_path, samples, seed, normalize, out);
        if (*simulate) return cmd_simulate(circuit, input, out);
        if (*distance) return cmd_distance(stab, cap, out);
        if (*gatecount) return cmd_gatecount(circuit, out);
        if (*kl) return cmd_kl_check(stab, t, out);
    } catch (const InputError &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::filesystem::filesystem_error &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace qenc
