// Copyright 2026 The gchowf Authors
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

#include "cli.h"

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "gchowf/circuit.h"
#include "gchowf/enumerate.h"
#include "gchowf/evaluate.h"
#include "gchowf/lab.h"
#include "gchowf/sampler.h"
#include "gchowf/state_codec.h"
#include "gchowf/version.h"

namespace gchowf::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Flags {
    std::optional<std::size_t> n;
    std::string hex;
    std::string input;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::string method;
    int theorem = 0;
    bool json = false;
    bool random = false;
    std::string manifest;
    std::string state;
    std::optional<std::uint64_t> cap;
    std::string sizes = "4,8,12,16";
    std::size_t max_n = 6;
};

struct Invocation {
    std::string command;
    Flags flags;
    Json params = Json::object();
};

struct Outcome {
    std::string text;
    Json manifest;
};

class Timer {
   public:
    explicit Timer(std::ostream &err, std::string label) : err_(err), label_(std::move(label)) {
    }
    ~Timer() {
        const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.3f", ms);
        err_ << label_ << ": " << buf << " ms\n";
    }

   private:
    std::ostream &err_;
    std::string label_;
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

std::uint64_t require_seed(const Flags &f, const std::string &why) {
    if (!f.seed) {
        throw InvalidArgument(why + " needs --seed");
    }
    return *f.seed;
}

/// n and bytes from --input FILE ("n=<int>" line, hex line) or --n/--hex.
std::pair<std::size_t, std::vector<std::uint8_t>> read_payload(const Flags &f) {
    std::optional<std::size_t> n = f.n;
    std::string hex = f.hex;
    if (!f.input.empty()) {
        std::ifstream in(f.input);
        if (!in) {
            throw InvalidArgument("cannot read " + f.input);
        }
        std::string line;
        std::optional<std::size_t> file_n;
        while (std::getline(in, line)) {
            if (line.empty()) {
                continue;
            }
            if (line.rfind("n=", 0) == 0) {
                try {
                    file_n = std::stoul(line.substr(2));
                } catch (const std::exception &) {
                    throw InvalidArgument("bad header line '" + line + "' in " + f.input);
                }
            } else {
                hex = line;
                break;
            }
        }
        if (!file_n) {
            throw InvalidArgument(f.input + " has no n=<int> header");
        }
        if (n && *n != *file_n) {
            throw InvalidArgument("--n disagrees with the header of " + f.input);
        }
        n = file_n;
    }
    if (!n) {
        throw InvalidArgument("missing --n");
    }
    if (hex.empty()) {
        throw InvalidArgument("missing --hex or --input");
    }
    return {*n, parse_hex(hex)};
}

std::string cmd_decode(const Flags &f) {
    const auto [n, bytes] = read_payload(f);
    const Bitstring bits = state_encoding_from_bytes(bytes, n);
    const GchState state = decode_state(bits, n);
    if (f.json) {
        return Json{{"n", n}, {"bits", bits.to_string()}, {"state", state.to_string()}}.dump() + "\n";
    }
    return state.to_string() + "\n";
}

std::string cmd_encode(const Flags &f) {
    if (f.state.empty()) {
        throw InvalidArgument("missing --state");
    }
    const GchState state = GchState::parse(f.state);
    const Bitstring bits = encode_state(state);
    const std::string hex = to_hex_text(bits.to_bytes());
    if (f.json) {
        return Json{{"n", state.num_qubits()}, {"bits", bits.to_string()}, {"hex", hex}}.dump() + "\n";
    }
    return "n=" + std::to_string(state.num_qubits()) + "\n" + hex + "\n";
}

std::string cmd_eval(const Flags &f, std::ostream &err) {
    std::size_t n = 0;
    Bitstring x;
    if (f.random) {
        if (!f.n) {
            throw InvalidArgument("missing --n");
        }
        n = *f.n;
        require_owf_size(n);
        PrngStream stream = PrngStream::from_u64(require_seed(f, "--random"));
        x = sample_uniform_state(n, stream).encoding;
    } else {
        auto [pn, bytes] = read_payload(f);
        n = pn;
        x = state_encoding_from_bytes(bytes, n);
    }
    OwfOutput y;
    {
        Timer t(err, "eval");
        y = cc_owf(x, n);
    }
    const std::string state = decode_state(x, n).to_string();
    const std::string yprime = to_hex_text(y.to_bytes());
    if (f.json) {
        return Json{{"n", n},
                    {"input", to_hex_text(x.to_bytes())},
                    {"state", state},
                    {"y_bits", y.y.size()},
                    {"y", y.y.to_string()},
                    {"circuit_bytes", y.circuit_bytes.size()},
                    {"y_prime", yprime}}
                   .dump() +
               "\n";
    }
    std::ostringstream out;
    out << "n=" << n << "\n"
        << "input=" << to_hex_text(x.to_bytes()) << "\n"
        << "state=" << state << "\n"
        << "y_bits=" << y.y.size() << "\n"
        << "y=" << y.y.to_string() << "\n"
        << "circuit_bytes=" << y.circuit_bytes.size() << "\n"
        << "y_prime=" << yprime << "\n";
    return out.str();
}

std::string cmd_invert(const Flags &f, std::ostream &err) {
    const auto [n, bytes] = read_payload(f);
    const OwfOutput target = OwfOutput::parse(bytes, n);
    std::vector<Bitstring> pre;
    {
        Timer t(err, "invert");
        pre = lab::brute_force_invert(target, n, f.cap);
    }
    if (f.json) {
        Json list = Json::array();
        for (const auto &x : pre) {
            list.push_back({{"hex", to_hex_text(x.to_bytes())}, {"state", decode_state(x, n).to_string()}});
        }
        return Json{{"n", n}, {"preimages", list}}.dump() + "\n";
    }
    std::ostringstream out;
    out << "preimages=" << pre.size() << "\n";
    for (const auto &x : pre) {
        out << to_hex_text(x.to_bytes()) << " " << decode_state(x, n).to_string() << "\n";
    }
    return out.str();
}

std::vector<std::size_t> parse_sizes(const std::string &text) {
    std::vector<std::size_t> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoul(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception &) {
            throw InvalidArgument("bad --sizes entry '" + item + "'");
        }
    }
    return out;
}

std::string cmd_stats(const Flags &f, std::ostream &err) {
    const std::size_t n = f.n.value_or(4);
    lab::InversionCensus census;
    {
        Timer t(err, "census");
        census = lab::collision_census(n);
    }
    const auto rows = lab::size_profile(parse_sizes(f.sizes), f.seed.value_or(lab::kSizeProfileSeed));
    for (const auto &r : rows) {
        err << "sample n=" << r.n << ": " << fixed(r.seconds * 1e3, 3) << " ms\n";
    }
    if (f.json) {
        Json sizes = Json::array();
        for (const auto &r : rows) {
            sizes.push_back(
                {{"n", r.n}, {"gates", r.gates}, {"layers", r.layers}, {"bound", r.bound}, {"basis", r.basis}});
        }
        return Json{{"census", Json::parse(census.to_json())}, {"sizes", sizes}}.dump() + "\n";
    }
    std::ostringstream out;
    out << census.to_text();
    for (const auto &r : rows) {
        out << "size n=" << r.n << " gates=" << r.gates << " layers=" << r.layers << " bound=" << r.bound
            << " basis=" << r.basis << "\n";
    }
    return out.str();
}

std::string cmd_attack(const Flags &f) {
    lab::AttackMethod method;
    if (f.method == "reverse") {
        method = lab::AttackMethod::Reverse;
    } else if (f.method == "substitute") {
        method = lab::AttackMethod::Substitute;
    } else {
        throw InvalidArgument("--method must be reverse or substitute");
    }
    PrngStream stream = PrngStream::from_u64(require_seed(f, "attack"));
    const auto report = lab::run_attack_trials(method, f.trials.value_or(1000), f.max_n, stream);
    if (f.json) {
        return Json{{"method", f.method},
                    {"trials", report.trials},
                    {"successes", report.successes},
                    {"success_rate", report.rate()}}
                   .dump() +
               "\n";
    }
    std::ostringstream out;
    out << "method=" << f.method << "\n"
        << "trials=" << report.trials << "\n"
        << "successes=" << report.successes << "\n"
        << "success_rate=" << fixed(report.rate(), 4) << "\n";
    return out.str();
}

std::string cmd_reduce(const Flags &f, std::ostream &err) {
    const std::size_t n = f.n.value_or(4);
    require_owf_size(n);
    if (n > lab::kMaxExhaustiveQubits) {
        throw TooLarge("reduce with the exhaustive inverter", n, lab::kMaxExhaustiveQubits);
    }
    if (f.theorem != 1 && f.theorem != 3) {
        throw InvalidArgument("--theorem must be 1 or 3");
    }
    // Every state by default; a seeded sample of --trials states otherwise.
    const StateCount total = count_states(n);
    std::vector<StateCount> ranks;
    if (f.trials) {
        PrngStream stream = PrngStream::from_u64(require_seed(f, "--trials"));
        for (std::size_t i = 0; i < *f.trials; ++i) {
            ranks.push_back(stream.uniform_below(static_cast<std::uint64_t>(total)));
        }
    } else {
        for (StateCount i = 0; i < total; ++i) {
            ranks.push_back(i);
        }
    }
    const lab::Inverter inverter = lab::exhaustive_inverter();
    const lab::CompositionInstance instance = lab::cc_owf_instance(n);
    std::size_t successes = 0;
    {
        Timer t(err, "reduce");
        for (StateCount r : ranks) {
            const GchState x = unrank_state(n, r);
            if (f.theorem == 1) {
                const OwfOutput y = eval_family(x);
                const auto psi = lab::reduction_thm1(inverter, instance, y);
                successes += psi && eval_family(*psi) == y;
            } else {
                const auto family = default_family_cache().get(basis_of(x));
                const Bitstring y = family_outcome(x, *family);
                const auto psi = lab::reduction_thm3(*family, y, inverter);
                successes += psi && family_outcome(*psi, *family) == y;
            }
        }
    }
    if (f.json) {
        return Json{{"theorem", f.theorem}, {"n", n}, {"instances", ranks.size()}, {"successes", successes}}.dump() +
               "\n";
    }
    std::ostringstream out;
    out << "theorem=" << f.theorem << "\n"
        << "n=" << n << "\n"
        << "instances=" << ranks.size() << "\n"
        << "successes=" << successes << "\n";
    return out.str();
}

Outcome execute(const Invocation &inv, std::ostream &err);

std::optional<Invocation> parse_args(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
                                     int &code) {
    CLI::App app{"gchowf: GCH-state one-way function toolkit", "gchowf"};
    app.require_subcommand(1);
    Invocation inv;
    Flags &f = inv.flags;

    auto add_n = [&](CLI::App *s) { s->add_option("--n", f.n, "Qubit count"); };
    auto add_payload = [&](CLI::App *s) {
        s->add_option("--hex", f.hex, "Payload bytes as hex");
        s->add_option("--input", f.input, "File with an n=<int> line and a hex line");
    };
    auto add_json = [&](CLI::App *s) { s->add_flag("--json", f.json, "JSON output"); };
    auto add_manifest = [&](CLI::App *s) { s->add_option("--manifest", f.manifest, "Write a run manifest to FILE"); };

    auto *decode = app.add_subcommand("decode", "Decode a state encoding");
    add_n(decode);
    add_payload(decode);
    add_json(decode);
    add_manifest(decode);

    auto *encode = app.add_subcommand("encode", "Encode a state given as text");
    encode->add_option("--state", f.state, "e.g. \"0 1 + - G{5,6}:00\"");
    add_json(encode);
    add_manifest(encode);

    auto *eval = app.add_subcommand("eval", "Evaluate the one-way function");
    add_n(eval);
    add_payload(eval);
    eval->add_flag("--random", f.random, "Draw a uniform input from --seed");
    eval->add_option("--seed", f.seed, "Seed");
    add_json(eval);
    add_manifest(eval);

    auto *invert = app.add_subcommand("invert", "Brute-force preimages of y'");
    add_n(invert);
    add_payload(invert);
    invert->add_option("--cap", f.cap, "Candidate cap (required past n = 4)");
    add_json(invert);
    add_manifest(invert);

    auto *stats = app.add_subcommand("stats", "Collision census and size profile");
    add_n(stats);
    stats->add_option("--sizes", f.sizes, "Comma-separated n values for the size profile");
    stats->add_option("--seed", f.seed, "Seed for the size-profile bases");
    add_json(stats);
    add_manifest(stats);

    auto *attack = app.add_subcommand("attack", "Inversion attacks on non-one-way constructions");
    attack->add_option("--method", f.method, "reverse | substitute")->required();
    attack->add_option("--trials", f.trials, "Instances (default 1000)");
    attack->add_option("--seed", f.seed, "Seed");
    attack->add_option("--max-n", f.max_n, "Largest register (2..8, default 6)");
    add_json(attack);
    add_manifest(attack);

    auto *reduce = app.add_subcommand("reduce", "Reduction harnesses with the exhaustive inverter");
    reduce->add_option("--theorem", f.theorem, "1 | 3")->required();
    add_n(reduce);
    reduce->add_option("--trials", f.trials, "Sample this many inputs instead of all");
    reduce->add_option("--seed", f.seed, "Seed for --trials");
    add_json(reduce);
    add_manifest(reduce);

    auto *replay = app.add_subcommand("replay", "Re-run a manifest and compare its output digest");
    replay->add_option("--manifest", f.manifest, "Manifest file")->required();

    std::vector<const char *> argv{"gchowf"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        code = app.exit(e, out, err) == 0 ? kOk : kUsage;
        return std::nullopt;
    }
    CLI::App *sub = app.get_subcommands().front();
    inv.command = sub->get_name();
    for (const CLI::Option *opt : sub->get_options()) {
        const std::string name = opt->get_name(false, true);
        if (opt->count() == 0 || name == "--help" || name == "--manifest") {
            continue;
        }
        const auto &results = opt->results();
        inv.params[name.substr(2)] = opt->get_expected_min() == 0 ? Json(true) : Json(results.back());
    }
    return inv;
}

Invocation invocation_from_manifest(const Json &m) {
    std::vector<std::string> args{m.at("command").get<std::string>()};
    for (const auto &[key, value] : m.at("params").items()) {
        args.push_back("--" + key);
        if (!value.is_boolean()) {
            args.push_back(value.get<std::string>());
        }
    }
    std::ostringstream sink;
    int code = kOk;
    auto inv = parse_args(args, sink, sink, code);
    if (!inv) {
        throw InvalidArgument("manifest does not describe a valid command: " + sink.str());
    }
    return *inv;
}

Outcome execute(const Invocation &inv, std::ostream &err) {
    const Flags &f = inv.flags;
    Outcome result;
    if (inv.command == "replay") {
        std::ifstream in(f.manifest);
        if (!in) {
            throw InvalidArgument("cannot read " + f.manifest);
        }
        Json recorded;
        try {
            recorded = Json::parse(in);
        } catch (const nlohmann::json::exception &e) {
            throw InvalidArgument(std::string("manifest is not JSON: ") + e.what());
        }
        const Outcome again = execute(invocation_from_manifest(recorded), err);
        const auto want = recorded.at("output_sha256").get<std::string>();
        const auto got = again.manifest.at("output_sha256").get<std::string>();
        result.text = (want == got ? "replay ok " : "replay mismatch ") + got + "\n";
        result.manifest = again.manifest;
        return result;
    }
    if (inv.command == "decode") {
        result.text = cmd_decode(f);
    } else if (inv.command == "encode") {
        result.text = cmd_encode(f);
    } else if (inv.command == "eval") {
        result.text = cmd_eval(f, err);
    } else if (inv.command == "invert") {
        result.text = cmd_invert(f, err);
    } else if (inv.command == "stats") {
        result.text = cmd_stats(f, err);
    } else if (inv.command == "attack") {
        result.text = cmd_attack(f);
    } else if (inv.command == "reduce") {
        result.text = cmd_reduce(f, err);
    }
    const auto digest = sha256(std::span(reinterpret_cast<const std::uint8_t *>(result.text.data()), result.text.size()));
    result.manifest = Json{{"command", inv.command},
                           {"params", inv.params},
                           {"seed", f.seed ? Json(*f.seed) : Json(nullptr)},
                           {"version", kVersion},
                           {"output_sha256", to_hex(digest)}};
    return result;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    int code = kOk;
    const auto inv = parse_args(args, out, err, code);
    if (!inv) {
        return code;
    }
    try {
        const Outcome result = execute(*inv, err);
        out << result.text;
        if (inv->command == "replay") {
            return result.text.rfind("replay ok", 0) == 0 ? kOk : kReplayMismatch;
        }
        if (!inv->flags.manifest.empty()) {
            std::ofstream file(inv->flags.manifest);
            file << result.manifest.dump(2) << "\n";
            if (!file) {
                throw InvalidArgument("cannot write " + inv->flags.manifest);
            }
        } else if (inv->command == "eval") {
            out << "manifest=" << result.manifest.dump() << "\n";
        }
        return kOk;
    } catch (const InvalidEncoding &e) {
        err << "error: invalid encoding: " << e.what() << "\n";
        return kInvalidEncoding;
    } catch (const SamplingExhausted &e) {
        err << "error: " << e.what() << "\n";
        return kSamplingExhausted;
    } catch (const TooLarge &e) {
        err << "error: too large: " << e.what() << "\n";
        return kTooLarge;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace gchowf::cli
