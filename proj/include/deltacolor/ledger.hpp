#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace deltacolor {

// Per-phase record of LOCAL rounds charged. Three charging modes:
//   superstep    - faithfully simulated synchronous rounds,
//   ball_collect - a radius-r neighborhood collection costs r rounds,
//   virtual      - rounds on a virtual graph, charged native * dilation.
enum class ChargeMode { superstep, ball_collect, virtual_graph };

inline const char* to_string(ChargeMode m) {
    switch (m) {
        case ChargeMode::superstep: return "superstep";
        case ChargeMode::ball_collect: return "ball_collect";
        case ChargeMode::virtual_graph: return "virtual";
    }
    return "?";
}

struct LedgerEntry {
    std::string phase;
    ChargeMode mode = ChargeMode::superstep;
    long native_rounds = 0;
    long dilation = 1;
    long charged_rounds = 0;
};

class RoundLedger {
public:
    void add_superstep(const std::string& phase, long native) {
        push(phase, ChargeMode::superstep, native, 1);
    }
    void add_ball(const std::string& phase, long radius) {
        push(phase, ChargeMode::ball_collect, radius, 1);
    }
    void add_virtual(const std::string& phase, long native, long dilation) {
        push(phase, ChargeMode::virtual_graph, native, dilation);
    }

    const std::vector<LedgerEntry>& entries() const { return entries_; }

    long total() const {
        long s = 0;
        for (const auto& e : entries_) s += e.charged_rounds;
        return s;
    }

    // Sum of charged rounds over entries whose phase name starts with prefix.
    long total_for(const std::string& prefix) const {
        long s = 0;
        for (const auto& e : entries_)
            if (e.phase.rfind(prefix, 0) == 0) s += e.charged_rounds;
        return s;
    }

    std::string to_csv() const {
        std::string out = "phase,mode,native_rounds,dilation,charged_rounds\n";
        for (const auto& e : entries_) {
            out += e.phase;
            out += ',';
            out += to_string(e.mode);
            out += ',';
            out += std::to_string(e.native_rounds);
            out += ',';
            out += std::to_string(e.dilation);
            out += ',';
            out += std::to_string(e.charged_rounds);
            out += '\n';
        }
        return out;
    }

private:
    void push(const std::string& phase, ChargeMode mode, long native, long dilation) {
        if (native < 0) throw std::invalid_argument("ledger: negative rounds in " + phase);
        if (dilation < 1) throw std::invalid_argument("ledger: dilation < 1 in " + phase);
        if (mode != ChargeMode::virtual_graph) dilation = 1;
        entries_.push_back({phase, mode, native, dilation, native * dilation});
    }

    std::vector<LedgerEntry> entries_;
};

// Hard per-phase cap; turns nontermination bugs into diagnosable failures.
inline long round_cap_default() { return 10'000'000L; }

struct RoundCapExceeded : std::runtime_error {
    explicit RoundCapExceeded(const std::string& phase)
        : std::runtime_error("round cap exceeded in phase: " + phase) {}
};

}  // namespace deltacolor
