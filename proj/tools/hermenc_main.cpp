// hermenc: systematic Hermitian-code encoder, syndrome checker and
// architecture simulator. Exit codes: 0 success, 1 usage/validation error,
// 2 a check or equivalence campaign FAILed.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hermenc/arch_sim.hpp"
#include "hermenc/encoder.hpp"
#include "hermenc/io.hpp"
#include "hermenc/oracle.hpp"
#include "hermenc/row_code.hpp"
#include "hermenc/transforms.hpp"

using namespace hermenc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFail = 2;

std::uint64_t seed_or_env(std::uint64_t cli_seed, bool seed_given) {
    if (seed_given) return cli_seed;
    if (const char* env = std::getenv("HERMIT_SEED")) return std::strtoull(env, nullptr, 0);
    return 1;
}

void print_syndromes(const Field& f, const SyndromeTable& t) {
    for (std::size_t i = 0; i < t.keys.size(); ++i) {
        std::cout << "S(" << t.keys[i].first << "," << t.keys[i].second
                  << ") = " << to_hex(f, t.values[i]) << "\n";
    }
}

int cmd_field_info(int s) {
    Field f = build_field(s);
    std::cout << "s        " << f.s() << "\n"
              << "q        " << f.q() << "\n"
              << "q^2      " << f.q2() << "\n"
              << "modulus  0x" << std::hex << f.modulus() << std::dec << "\n"
              << "epsilon  " << to_hex(f, f.epsilon()) << "\n"
              << "gamma    " << to_hex(f, f.gamma()) << "\n"
              << "y0       " << to_hex(f, f.y0()) << "\n";
    return kExitOk;
}

int cmd_code_info(int s, int m) {
    Field f = build_field(s);
    CodeParams p = make_code(f, m);
    std::cout << "n  " << p.n << "\nk  " << p.k << "\ng  " << p.g << "\n";
    std::cout << "a_hat   ";
    for (int b = 0; b < f.q(); ++b) std::cout << p.a_hat[b] << " ";
    std::cout << "\nb_hat   ";
    for (int j = 0; j < f.q2(); ++j) std::cout << p.b_hat[j] << " ";
    std::cout << "\ninformation staircase ('#' information, '.' parity):\n";
    for (int i = 0; i < f.q(); ++i) {
        for (int j = 0; j < f.q2(); ++j) std::cout << (j < p.info_len[i] ? '#' : '.');
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_encode(int s, int m, const std::string& info_path, const std::string& out,
               bool dump_rtilde) {
    Field f = build_field(s);
    CodeParams p = make_code(f, m);
    std::vector<elem> info = read_info_file(f, info_path);
    if (static_cast<int>(info.size()) != p.k) {
        std::cerr << "error: code needs exactly " << p.k << " information symbols, got "
                  << info.size() << "\n";
        return kExitUsage;
    }
    EncodeResult res = encode(p, info);
    if (out.empty()) {
        std::cout << array_to_json(f, m, res.code) << "\n";
    } else {
        write_array_file(out, f, m, res.code);
        std::cout << "wrote " << out << "\n";
    }
    if (dump_rtilde) {
        if (out.empty()) {
            std::cout << array_to_json(f, m, res.rtilde) << "\n";
        } else {
            std::string rt = out + ".rtilde.json";
            write_array_file(rt, f, m, res.rtilde);
            std::cout << "wrote " << rt << "\n";
        }
    }
    return kExitOk;
}

struct LoadedArray {
    Field field;
    CodeParams params;
    CodeArray array;
};

LoadedArray load_array(int s, int m, const std::string& path) {
    ArrayFile af = read_array_file(path);
    if (s != 0 && s != af.s) throw std::invalid_argument("--s disagrees with the array file");
    if (m != 0 && m != af.m) throw std::invalid_argument("--m disagrees with the array file");
    Field f = build_field(af.s);
    return {f, make_code(f, af.m), af.array};
}

int cmd_check(int s, int m, const std::string& path) {
    LoadedArray la = load_array(s, m, path);
    SyndromeTable t = syndromes_fast(la.params, la.array);
    if (t.all_zero()) {
        std::cout << "PASS: all " << t.values.size() << " syndromes zero\n";
        return kExitOk;
    }
    std::cout << "FAIL: nonzero syndromes\n";
    for (std::size_t i : t.nonzero()) {
        std::cout << "  S(" << t.keys[i].first << "," << t.keys[i].second
                  << ") = " << to_hex(la.field, t.values[i]) << "\n";
    }
    return kExitFail;
}

int cmd_syndrome(int s, int m, const std::string& path, const std::string& method) {
    LoadedArray la = load_array(s, m, path);
    if (method == "direct" || method == "both") {
        std::cout << "# direct\n";
        print_syndromes(la.field, syndromes_direct(la.params, la.array));
    }
    if (method == "fast" || method == "both") {
        std::cout << "# fast\n";
        print_syndromes(la.field, syndromes_fast(la.params, la.array));
    }
    if (method == "both") {
        bool same = syndromes_direct(la.params, la.array).values ==
                    syndromes_fast(la.params, la.array).values;
        std::cout << (same ? "# paths agree\n" : "# PATHS DISAGREE\n");
        if (!same) return kExitFail;
    }
    return kExitOk;
}

int cmd_simulate(int s, int m, const std::string& info_path, const std::string& preset,
                 const std::string& trace_path) {
    Field f = build_field(s);
    CodeParams p = make_code(f, m);
    std::vector<elem> info = read_info_file(f, info_path);
    if (static_cast<int>(info.size()) != p.k) {
        std::cerr << "error: code needs exactly " << p.k << " information symbols, got "
                  << info.size() << "\n";
        return kExitUsage;
    }
    ScheduleConfig cfg = (preset == "serial") ? serial_schedule(f) : paper_schedule(f);
    SimResult sim = simulate_encode(p, info, cfg);
    bool faithful = sim.code == encode(p, info).code;

    std::cout << "preset        " << cfg.name << "\n"
              << "total cycles  " << sim.total_cycles << "\n"
              << "closed form   " << cycle_formula(p, cfg) << "\n"
              << "matches encoder: " << (faithful ? "yes" : "NO") << "\n";
    for (const auto& n : sim.notes) std::cout << "note: " << n << "\n";

    ResourceReport r = resource_report(p);
    std::cout << "multipliers   " << r.multipliers() << " (A " << r.mult_A << ", B " << r.mult_B
              << ", C " << r.mult_C << ", D " << r.mult_D << ")\n"
              << "memory        " << r.memory() << "\n"
              << "total <= " << r.bound_constant << " q^2: " << (r.within_bound() ? "yes" : "no")
              << "\n";

    if (!trace_path.empty()) {
        std::ofstream os(trace_path);
        if (!os) {
            std::cerr << "error: cannot open " << trace_path << "\n";
            return kExitUsage;
        }
        os << "cycle,unit,action,column\n";
        for (const auto& ev : sim.trace) {
            os << ev.cycle << "," << ev.unit << "," << ev.action << "," << ev.column << "\n";
        }
        std::cout << "wrote " << trace_path << "\n";
    }
    return faithful ? kExitOk : kExitFail;
}

int cmd_selftest(int s, int m, std::uint64_t seed, int trials) {
    std::mt19937_64 rng(seed);
    bool all = true;
    auto line = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
        all &= ok;
    };

    // structural checks across the supported desk-scale fields
    for (int fs : {1, 2, 3}) {
        Field f = build_field(fs);
        ColumnMatrix A = build_A(f), Ai = build_A_inverse(f);
        ColumnMatrix Ap = build_Aprime(f), Api = build_Aprime_inverse(f);
        auto ident = [&](const ColumnMatrix& a, const ColumnMatrix& b) {
            ColumnMatrix pr = matmul(f, a, b);
            for (int r = 0; r < pr.n; ++r)
                for (int c = 0; c < pr.n; ++c)
                    if (pr.at(r, c) != (r == c ? 1 : 0)) return false;
            return true;
        };
        bool ok = ident(A, Ai) && ident(Ai, A) && ident(Ap, Api) && ident(Api, Ap);
        for (int l = 1; l <= f.q(); ++l) ok = ok && check_corner_submatrices(f, l);
        line("inverses and corner submatrices, q = " + std::to_string(f.q()), ok);
    }

    std::vector<std::pair<int, int>> sets;
    if (s != 0) {
        sets.emplace_back(s, m);
    } else {
        sets = {{1, 4}, {2, 15}, {2, 19}, {2, 23}};
    }

    for (auto [ss, mm] : sets) {
        Field f = build_field(ss);
        CodeParams p = make_code(f, mm);
        std::string tag = " (s=" + std::to_string(ss) + ", m=" + std::to_string(mm) + ")";

        bool ok = true;
        for (int t = 0; t < trials; ++t) {
            CodeArray r(f);
            for (auto& v : r.flat()) v = static_cast<elem>(rng() % f.q2());
            ok &= syndromes_direct(p, r).values == syndromes_fast(p, r).values;
        }
        line("syndrome paths agree on " + std::to_string(trials) + " arrays" + tag, ok);

        ok = verify_information_set(p);
        line("information set verified" + tag, ok);

        bool enc_ok = true, orc_ok = true, det_ok = true;
        auto pos = info_positions(p);
        for (int t = 0; t < trials; ++t) {
            std::vector<elem> info(p.k);
            for (auto& v : info) v = static_cast<elem>(rng() % f.q2());
            EncodeResult res = encode(p, info);
            enc_ok &= is_codeword(p, res.code);
            for (int i = 0; i < p.k; ++i)
                enc_ok &= res.code.at(pos[i].first, pos[i].second) == info[i];
            orc_ok &= res.code == complete_systematic(p, info);

            CodeArray bad = res.code;
            int rr = static_cast<int>(rng() % f.q());
            int jj = static_cast<int>(rng() % f.q2());
            bad.at(rr, jj) = f.add(bad.at(rr, jj), static_cast<elem>(1 + rng() % (f.q2() - 1)));
            det_ok &= !is_codeword(p, bad);
        }
        line("encodes are codewords and systematic" + tag, enc_ok);
        line("encoder equals dense completion" + tag, orc_ok);
        line("corrupted arrays detected" + tag, det_ok);

        std::vector<elem> info(p.k);
        for (auto& v : info) v = static_cast<elem>(rng() % f.q2());
        auto ref = encode(p, info);
        bool sim_ok = true;
        for (auto cfg : {paper_schedule(f), serial_schedule(f)}) {
            auto simres = simulate_encode(p, info, cfg);
            sim_ok &= simres.code == ref.code && simres.total_cycles == cycle_formula(p, cfg);
        }
        line("simulator fidelity and cycle formula" + tag, sim_ok);
    }

    std::cout << (all ? "selftest PASSED" : "selftest FAILED") << "\n";
    return all ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"systematic Hermitian-code encoder over GF(q^2)"};
    app.require_subcommand(1);

    int s = 0, m = 0, trials = 200;
    std::uint64_t seed = 1;
    std::string info_path, array_path, out_path, trace_path;
    std::string method = "fast", preset = "paper";
    bool dump_rtilde = false;

    auto* fi = app.add_subcommand("field-info", "print the field constants");
    fi->add_option("--s", s, "field exponent, q = 2^s")->required();

    auto* ci = app.add_subcommand("code-info", "print derived code parameters");
    ci->add_option("--s", s)->required();
    ci->add_option("--m", m, "pole-order bound")->required();

    auto* en = app.add_subcommand("encode", "systematically encode information symbols");
    en->add_option("--s", s)->required();
    en->add_option("--m", m)->required();
    en->add_option("--info", info_path, "hex file, JSON array, or - for stdin")->required();
    en->add_option("--out", out_path, "output array file (stdout when omitted)");
    en->add_flag("--dump-rtilde", dump_rtilde, "also emit the transformed array");

    auto* ch = app.add_subcommand("check", "verify an array file is a codeword");
    ch->add_option("--s", s);
    ch->add_option("--m", m);
    ch->add_option("--array", array_path)->required();

    auto* sy = app.add_subcommand("syndrome", "print the syndrome table of an array file");
    sy->add_option("--s", s);
    sy->add_option("--m", m);
    sy->add_option("--array", array_path)->required();
    sy->add_option("--method", method)->check(CLI::IsMember({"direct", "fast", "both"}));

    auto* si = app.add_subcommand("simulate", "run the cycle-counting architecture model");
    si->add_option("--s", s)->required();
    si->add_option("--m", m)->required();
    si->add_option("--info", info_path)->required();
    si->add_option("--preset", preset)->check(CLI::IsMember({"paper", "serial"}));
    si->add_option("--trace", trace_path, "write the event trace as CSV");

    auto* st = app.add_subcommand("selftest", "exhaustive checks plus randomized campaigns");
    st->add_option("--s", s, "restrict to one parameter set");
    st->add_option("--m", m);
    auto* seed_opt = st->add_option("--seed", seed, "campaign seed (HERMIT_SEED fallback)");
    st->add_option("--trials", trials, "random trials per campaign");

    CLI11_PARSE(app, argc, argv);

    try {
        if (fi->parsed()) return cmd_field_info(s);
        if (ci->parsed()) return cmd_code_info(s, m);
        if (en->parsed()) return cmd_encode(s, m, info_path, out_path, dump_rtilde);
        if (ch->parsed()) return cmd_check(s, m, array_path);
        if (sy->parsed()) return cmd_syndrome(s, m, array_path, method);
        if (si->parsed()) return cmd_simulate(s, m, info_path, preset, trace_path);
        if (st->parsed()) {
            if ((s != 0) != (m != 0)) {
                std::cerr << "error: selftest needs both --s and --m, or neither\n";
                return kExitUsage;
            }
            return cmd_selftest(s, m, seed_or_env(seed, !seed_opt->empty()), trials);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
