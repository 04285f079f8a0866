#include "hermenc/arch_sim.hpp"

#include <algorithm>
#include <stdexcept>

#include "hermenc/row_code.hpp"
#include "hermenc/transforms.hpp"

namespace hermenc {

ScheduleConfig paper_schedule(const Field& f) {
    const int q = f.q();
    return ScheduleConfig{"paper", q, q, q, q, 1, true};
}

ScheduleConfig serial_schedule(const Field& f) {
    const int q = f.q();
    return ScheduleConfig{"serial", q, q, q, q, q, false};
}

void validate_schedule(const ScheduleConfig& cfg) {
    if (cfg.moduleA_latency < 1 || cfg.moduleB_latency < 1 || cfg.moduleC_rate_divisor < 1 ||
        cfg.moduleD_latency < 1 || cfg.column_initiation_interval < 1) {
        throw std::invalid_argument("schedule: all latencies and the column interval must be positive");
    }
    if (!cfg.parallel_row_lanes && cfg.moduleC_rate_divisor > cfg.column_initiation_interval) {
        throw std::invalid_argument(
            "schedule: row encoders at 1/" + std::to_string(cfg.moduleC_rate_divisor) +
            " rate cannot feed a column every " + std::to_string(cfg.column_initiation_interval) +
            " cycles without parallel lanes");
    }
}

long long cycle_formula(const CodeParams& p, const ScheduleConfig& cfg) {
    validate_schedule(cfg);
    const long long q2 = p.field.q2();
    const long long depth =
        cfg.moduleA_latency + cfg.moduleD_latency + cfg.moduleB_latency + 1;
    return (q2 - 1) * cfg.column_initiation_interval + depth;
}

SimResult simulate_encode(const CodeParams& p, const std::vector<elem>& info,
                          const ScheduleConfig& cfg) {
    validate_schedule(cfg);
    const Field& f = p.field;
    const int q = f.q(), q2 = f.q2();
    if (static_cast<int>(info.size()) != p.k) {
        throw std::invalid_argument("simulate_encode: wrong information length");
    }

    CodeArray d(f);
    {
        std::size_t t = 0;
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < p.info_len[i]; ++j) d.at(i, j) = info[t++];
    }

    TransformSet ts(f);
    std::vector<RowEncoderStream> bank;  // Module C: one varying-rate encoder per row
    bank.reserve(q);
    for (int i = 0; i < q; ++i) bank.emplace_back(make_Ei(p, i));

    SimResult res;
    res.code = CodeArray(f);
    res.rtilde = CodeArray(f);

    if (cfg.parallel_row_lanes && cfg.moduleC_rate_divisor > cfg.column_initiation_interval) {
        res.notes.push_back(
            "module C runs at 1/" + std::to_string(cfg.moduleC_rate_divisor) +
            " of the clock; sustaining one column per " +
            std::to_string(cfg.column_initiation_interval) +
            " cycle(s) assumes all " + std::to_string(q) +
            " row-encoder lanes feed the column simultaneously");
    }
    res.notes.push_back("pipeline fill = " +
                        std::to_string(cfg.moduleA_latency + cfg.moduleD_latency +
                                       cfg.moduleB_latency + 1 - cfg.column_initiation_interval));

    auto& tr = res.trace;
    for (int j = 0; j < q2; ++j) {
        const long long s = static_cast<long long>(j) * cfg.column_initiation_interval;
        const MatrixRole role = (j == q2 - 1) ? MatrixRole::Aprime : MatrixRole::A;
        const int l = q - p.b_hat[j];

        // Module C: parity outputs of the rows whose prefix is complete.
        std::vector<elem> v(l);
        for (int i = 0; i < l; ++i) {
            v[i] = bank[i].step();
            tr.push_back({s, "C" + std::to_string(i), "emit", j});
        }

        std::vector<elem> xz(q, 0);
        for (int i = 0; i < p.b_hat[j]; ++i) xz[i] = d.at(i, j);

        // Module A: parallel load, serial output of M (x, 0)^T.
        tr.push_back({s, "A", "load", j});
        std::vector<elem> b = apply(f, ts.forward(role), xz);
        for (int t = 0; t < std::min(q, cfg.moduleA_latency); ++t) {
            tr.push_back({s + 1 + t, "switch_a", "rotate", j});
        }
        tr.push_back({s + cfg.moduleA_latency, "A", "done", j});

        // Adder: top-l slots of the A stream cancel against Module C.
        std::vector<elem> bhat(q, 0);
        for (int i = 0; i < l; ++i) bhat[i] = f.add(v[i], b[i]);
        tr.push_back({s + cfg.moduleA_latency, "adder", "combine", j});

        // Module D: projection onto the mixed-column code (identity when l = q).
        std::vector<elem> btilde = (l == q) ? bhat : apply(f, ts.D(role, l), bhat);
        tr.push_back({s + cfg.moduleA_latency, "D", "start", j});
        for (int t = 0; t < std::min(q, cfg.moduleD_latency); ++t) {
            tr.push_back({s + cfg.moduleA_latency + 1 + t, "switch_b", "rotate", j});
        }
        tr.push_back({s + cfg.moduleA_latency + cfg.moduleD_latency, "D", "done", j});

        // Module B: serial-in inverse transform, parallel out after B cycles.
        std::vector<elem> corr = apply(f, ts.inverse(role), btilde);
        tr.push_back({s + cfg.moduleA_latency + cfg.moduleD_latency, "B", "start", j});
        const long long done = s + cfg.moduleA_latency + cfg.moduleD_latency + cfg.moduleB_latency;
        tr.push_back({done, "B", "done", j});

        // Final adders and write-back of both column vectors.
        for (int i = 0; i < q; ++i) {
            res.code.at(i, j) = f.add(xz[i], corr[i]);
            res.rtilde.at(i, j) = f.add(btilde[i], b[i]);
        }
        tr.push_back({done + 1, "adder", "writeback", j});
        res.total_cycles = done + 1;

        for (int i = l; i < q; ++i) {
            bank[i].push_info(res.rtilde.at(i, j));
            bank[i].step();
        }
    }

    std::stable_sort(tr.begin(), tr.end(),
                     [](const TraceEvent& a, const TraceEvent& b) { return a.cycle < b.cycle; });
    return res;
}

ResourceReport resource_report(const CodeParams& p) {
    const int q = p.field.q();
    const long long redundancy = p.n - p.k;  // one register and tap per parity symbol

    ResourceReport r;
    r.q = q;
    r.m = p.m;
    r.mult_A = static_cast<long long>(q) * q;  // q rows of q constant multipliers
    r.mult_B = static_cast<long long>(q) * q;
    r.mult_C = redundancy;
    r.mult_D = q;  // bounded by the widest projection encoder
    r.mem_A = q;   // parallel input latch
    r.mem_B = q;   // serial-in accumulators
    r.mem_C = redundancy;
    r.mem_D = q;
    r.mem_buffers = 2 * q;  // current column of the code array and of r~
    r.bound_constant = 8;
    return r;
}

}  // namespace hermenc
