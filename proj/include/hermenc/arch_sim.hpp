#ifndef HERMENC_ARCH_SIM_HPP
#define HERMENC_ARCH_SIM_HPP

#include <string>
#include <vector>

#include "hermenc/code.hpp"
#include "hermenc/gf.hpp"

namespace hermenc {

/// Timing knobs of the dataflow model. Latencies are in clock cycles of the
/// overall clock; the column initiation interval is the spacing between
/// successive column starts.
struct ScheduleConfig {
    std::string name = "custom";
    int moduleA_latency = 0;       // serial multiply by A / A'
    int moduleB_latency = 0;       // serial-in multiply by the inverse
    int moduleC_rate_divisor = 0;  // row encoders clocked at 1/divisor
    int moduleD_latency = 0;       // mixed-column projection encoder
    int column_initiation_interval = 0;
    bool parallel_row_lanes = false;  // q row-encoder lanes feeding each column at once
};

/// Fully pipelined schedule: one new column per cycle. Sustaining it needs
/// the q row encoders to feed every column in parallel, which the model
/// flags in the run notes.
ScheduleConfig paper_schedule(const Field& f);
/// No column overlap: a new column every q cycles, matching the serial
/// module descriptions.
ScheduleConfig serial_schedule(const Field& f);

/// Throws std::invalid_argument for nonpositive entries or a Module C rate
/// that cannot feed the requested column interval without parallel lanes.
void validate_schedule(const ScheduleConfig& cfg);

struct TraceEvent {
    long long cycle;
    std::string unit;  // A, B, C<i>, D, switch_a, switch_b, adder
    std::string action;
    int column;
};

struct SimResult {
    CodeArray code;
    CodeArray rtilde;
    long long total_cycles = 0;
    std::vector<TraceEvent> trace;
    std::vector<std::string> notes;
};

/// Runs the per-column dataflow (serial transform, row-encoder bank, mixed
/// projection, inverse transform) with cycle annotations from cfg. The
/// produced array is bit-identical to encode(); total_cycles always equals
/// cycle_formula().
SimResult simulate_encode(const CodeParams& p, const std::vector<elem>& info,
                          const ScheduleConfig& cfg);

/// Closed form: (q^2 - 1) * interval + A + D + B + 1. The trailing term is
/// the pipeline fill: fill = A + D + B + 1 - interval.
long long cycle_formula(const CodeParams& p, const ScheduleConfig& cfg);

/// Multiplier and memory counts of the modeled circuit. The documented bound
/// constant covers codes with O(q^2) redundancy; within_bound reports
/// total <= bound_constant * q^2 for these parameters.
struct ResourceReport {
    int q = 0;
    int m = 0;
    long long mult_A = 0, mult_B = 0, mult_C = 0, mult_D = 0;
    long long mem_A = 0, mem_B = 0, mem_C = 0, mem_D = 0, mem_buffers = 0;
    int bound_constant = 0;

    long long multipliers() const { return mult_A + mult_B + mult_C + mult_D; }
    long long memory() const { return mem_A + mem_B + mem_C + mem_D + mem_buffers; }
    long long total() const { return multipliers() + memory(); }
    bool within_bound() const {
        return total() <= static_cast<long long>(bound_constant) * q * q;
    }
};

ResourceReport resource_report(const CodeParams& p);

}  // namespace hermenc

#endif
