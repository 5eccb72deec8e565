#include "deltacolor/symmetry.hpp"

#include <algorithm>
#include <stdexcept>

#include "deltacolor/mathutil.hpp"
#include "deltacolor/rng.hpp"

namespace deltacolor {

bool VertexColoring::proper_on(const Topology& topo) const {
    for (Vertex v = 0; v < topo.size(); ++v)
        for (Vertex u : topo.neighbors(v))
            if (color[v] == color[u]) return false;
    return true;
}

// ---- Linial -------------------------------------------------------------------

namespace {

struct ReductionStep {
    std::uint64_t q;
    unsigned deg;
};

// Cheapest (q, deg) with q prime, q > deg*Delta and q^(deg+1) >= universe.
// Returns nullopt when no choice shrinks the palette.
std::optional<ReductionStep> plan_step(std::uint64_t universe, int delta) {
    std::optional<ReductionStep> best;
    for (unsigned deg = 1; deg <= 64; ++deg) {
        std::uint64_t q = next_prime_above(static_cast<std::uint64_t>(deg) * std::max(delta, 1));
        while (ipow_sat(q, deg + 1) < universe) q = next_prime_above(q);
        std::uint64_t palette = q * q;
        if (palette >= universe) continue;
        if (!best || palette < best->q * best->q) best = ReductionStep{q, deg};
    }
    return best;
}

// Evaluate the color's polynomial encoding at point i over GF(q).
std::uint64_t poly_eval(std::uint64_t color, std::uint64_t q, unsigned deg, std::uint64_t i) {
    // coefficients = base-q digits of color
    std::uint64_t acc = 0, x = 1;
    for (unsigned j = 0; j <= deg; ++j) {
        acc = (acc + (color % q) * x) % q;
        color /= q;
        x = (x * i) % q;
    }
    return acc;
}

struct LinialState {
    std::uint64_t color;
};

}  // namespace

VertexColoring linial_coloring(const Topology& topo, const PhaseCharger& charge) {
    const std::size_t n = topo.size();
    int delta = 0;
    std::uint64_t universe = 1;
    for (Vertex v = 0; v < n; ++v) {
        delta = std::max(delta, static_cast<int>(topo.neighbors(v).size()));
        universe = std::max(universe, topo.vertex_id(v) + 1);
    }

    // Fixed reduction schedule; every node can derive it from (universe, delta).
    std::vector<ReductionStep> schedule;
    for (std::uint64_t u = universe;;) {
        auto step = plan_step(u, delta);
        if (!step) break;
        schedule.push_back(*step);
        u = step->q * step->q;
    }

    std::vector<LinialState> states(n);
    for (Vertex v = 0; v < n; ++v) states[v].color = topo.vertex_id(v);

    SuperstepProgram<LinialState, std::uint64_t> prog;
    prog.halted = [&schedule](Vertex, const LinialState&, int round) {
        return round > static_cast<int>(schedule.size());
    };
    prog.send = [&topo](Vertex v, const LinialState& st, int, Outbox<std::uint64_t>& out) {
        for (Vertex u : topo.neighbors(v)) out.send(u, st.color);
    };
    prog.receive = [&schedule](Vertex, LinialState& st, std::span<const Envelope<std::uint64_t>> inbox,
                               int round) {
        const auto& step = schedule[round - 1];
        const std::uint64_t q = step.q;
        // smallest point i whose evaluation is covered by no neighbor
        for (std::uint64_t i = 0; i < q; ++i) {
            std::uint64_t mine = poly_eval(st.color, q, step.deg, i);
            bool covered = false;
            for (const auto& env : inbox)
                if (poly_eval(env.payload, q, step.deg, i) == mine) { covered = true; break; }
            if (!covered) {
                st.color = i * q + mine;
                return;
            }
        }
        throw std::logic_error("linial: cover-free family exhausted (improper input coloring?)");
    };

    auto stats = run_program(topo, states, prog, charge.phase);
    charge.charge(stats.rounds);

    VertexColoring out;
    out.palette_size = schedule.empty() ? static_cast<long>(universe)
                                        : static_cast<long>(schedule.back().q * schedule.back().q);
    out.color.resize(n);
    for (Vertex v = 0; v < n; ++v) out.color[v] = static_cast<long>(states[v].color) + 1;
    if (!out.proper_on(topo)) throw std::logic_error("linial: output not proper");
    return out;
}

VertexColoring linial_coloring(const Graph& g, RoundLedger& ledger, const std::string& phase) {
    GraphTopology topo(g);
    return linial_coloring(topo, graph_charger(ledger, phase));
}

// ---- Ruling set by digit elimination ---------------------------------------------

namespace {

struct DigitState {
    std::vector<int> digits;  // most significant first
    bool in_t = true;
    Vertex dominator = kNoVertex;
};

}  // namespace

RulingSetResult ruling_set_from_coloring(const Topology& topo, const VertexColoring& coloring,
                                         int c, const PhaseCharger& charge) {
    if (c < 1) throw std::invalid_argument("ruling_set_from_coloring: c must be >= 1");
    const std::size_t n = topo.size();
    const long d = std::max<long>(coloring.palette_size, 1);
    const long b = std::max<long>(static_cast<long>(std::ceil(std::pow(double(d), 1.0 / c) - 1e-9)), 1);

    std::vector<DigitState> states(n);
    for (Vertex v = 0; v < n; ++v) {
        long x = coloring.color[v] - 1;
        states[v].digits.assign(c, 0);
        for (int i = c - 1; i >= 0; --i) {
            states[v].digits[i] = static_cast<int>(x % b);
            x /= b;
        }
    }

    struct Msg {
        bool in_t;
        int digit;
    };
    SuperstepProgram<DigitState, Msg> prog;
    prog.halted = [c](Vertex, const DigitState&, int round) { return round > c; };
    prog.send = [&topo](Vertex v, const DigitState& st, int round, Outbox<Msg>& out) {
        for (Vertex u : topo.neighbors(v)) out.send(u, {st.in_t, st.digits[round - 1]});
    };
    prog.receive = [](Vertex, DigitState& st, std::span<const Envelope<Msg>> inbox, int round) {
        if (!st.in_t) return;
        int mine = st.digits[round - 1];
        for (const auto& env : inbox)
            if (env.payload.in_t && env.payload.digit < mine) {
                st.in_t = false;
                st.dominator = env.from;  // smallest sender ID wins (inbox sorted)
                return;
            }
    };

    auto stats = run_program(topo, states, prog, charge.phase);
    charge.charge(stats.rounds);

    RulingSetResult out;
    out.alpha = 2;
    out.beta_claimed = static_cast<long>(c) * b;
    out.dominator.assign(n, kNoVertex);
    for (Vertex v = 0; v < n; ++v) {
        if (states[v].in_t)
            out.members.push_back(v);
        else
            out.dominator[v] = states[v].dominator;
    }
    return out;
}

// ---- Greedy MIS over color classes -------------------------------------------------

namespace {

struct MisState {
    long color;
    bool decided = false;
    bool in_mis = false;
    bool blocked = false;
};

}  // namespace

std::vector<Vertex> mis_from_coloring(const Topology& topo, const VertexColoring& coloring,
                                      const PhaseCharger& charge) {
    const std::size_t n = topo.size();
    std::vector<MisState> states(n);
    for (Vertex v = 0; v < n; ++v) states[v].color = coloring.color[v];

    SuperstepProgram<MisState, bool> prog;
    prog.halted = [](Vertex, const MisState& st, int) { return st.decided; };
    prog.send = [&topo](Vertex v, const MisState& st, int, Outbox<bool>& out) {
        if (st.in_mis)
            for (Vertex u : topo.neighbors(v)) out.send(u, true);
    };
    prog.receive = [](Vertex, MisState& st, std::span<const Envelope<bool>> inbox, int round) {
        if (!inbox.empty()) st.blocked = true;
        if (st.decided) return;
        if (st.blocked) {
            st.decided = true;
            return;
        }
        if (st.color == round) {
            st.in_mis = true;
            st.decided = true;
        }
    };

    auto stats = run_program(topo, states, prog, charge.phase);
    charge.charge(stats.rounds);

    std::vector<Vertex> members;
    for (Vertex v = 0; v < n; ++v)
        if (states[v].in_mis) members.push_back(v);
    return members;
}

// ---- Randomized ruling set ------------------------------------------------------

namespace {

// Restriction of a topology to a vertex subset (used for the deterministic
// fallback on the residual graph).
class SubTopology final : public Topology {
public:
    SubTopology(const Topology& base, std::vector<Vertex> verts) : base_(base), verts_(std::move(verts)) {
        std::vector<Vertex> inv(base.size(), kNoVertex);
        for (Vertex i = 0; i < verts_.size(); ++i) inv[verts_[i]] = i;
        adj_.resize(verts_.size());
        for (Vertex i = 0; i < verts_.size(); ++i)
            for (Vertex u : base.neighbors(verts_[i]))
                if (inv[u] != kNoVertex) adj_[i].push_back(inv[u]);
    }
    std::size_t size() const override { return verts_.size(); }
    std::span<const Vertex> neighbors(Vertex v) const override { return adj_[v]; }
    NodeId vertex_id(Vertex v) const override { return base_.vertex_id(verts_[v]); }
    Vertex to_base(Vertex v) const { return verts_[v]; }

private:
    const Topology& base_;
    std::vector<Vertex> verts_;
    std::vector<std::vector<Vertex>> adj_;
};

struct LubyState {
    bool active = true;
    bool in_s = false;
    bool sampled = false;
    int active_deg = 0;
    Vertex dominator = kNoVertex;
};

struct LubyMsg {
    bool active;
    bool sampled;
    bool in_s;
    int active_deg;
};

}  // namespace

RulingSetResult randomized_ruling_set(const Topology& topo, std::uint64_t seed,
                                      const PhaseCharger& charge) {
    const std::size_t n = topo.size();
    const int iterations =
        2 + static_cast<int>(std::ceil(std::log2(std::max(2.0, std::log2(std::max<double>(n, 4))))));
    const int total_rounds = 2 * iterations;
    const std::uint64_t tag = rng::hash_tag("ruling_sample");

    std::vector<LubyState> states(n);
    for (Vertex v = 0; v < n; ++v) states[v].active_deg = static_cast<int>(topo.neighbors(v).size());

    SuperstepProgram<LubyState, LubyMsg> prog;
    prog.halted = [total_rounds](Vertex, const LubyState&, int round) { return round > total_rounds; };
    prog.send = [&topo, seed, tag](Vertex v, const LubyState& st, int round, Outbox<LubyMsg>& out) {
        bool propose_round = (round % 2) == 1;
        bool sampled = false;
        if (propose_round && st.active) {
            double p = 1.0 / (2.0 * (st.active_deg + 1));
            sampled = rng::bernoulli(seed, tag, static_cast<std::uint64_t>(round),
                                     topo.vertex_id(v), p);
        }
        for (Vertex u : topo.neighbors(v))
            out.send(u, {st.active, propose_round ? sampled : false, st.in_s, st.active_deg});
    };
    prog.receive = [&topo, seed, tag](Vertex v, LubyState& st, std::span<const Envelope<LubyMsg>> inbox,
                                      int round) {
        bool propose_round = (round % 2) == 1;
        if (propose_round) {
            if (!st.active) return;
            double p = 1.0 / (2.0 * (st.active_deg + 1));
            st.sampled = rng::bernoulli(seed, tag, static_cast<std::uint64_t>(round),
                                        topo.vertex_id(v), p);
            if (!st.sampled) return;
            // winner unless a sampled active neighbor beats us on (degree, id)
            for (const auto& env : inbox) {
                if (!env.payload.active || !env.payload.sampled) continue;
                auto mine = std::make_pair(st.active_deg, topo.vertex_id(v));
                auto theirs = std::make_pair(env.payload.active_deg, env.from_id);
                if (theirs > mine) { st.sampled = false; break; }
            }
            if (st.sampled) {
                st.in_s = true;
                st.active = false;
            }
        } else {
            int cnt = 0;
            for (const auto& env : inbox) {
                if (env.payload.in_s && st.active && st.dominator == kNoVertex) {
                    st.active = false;
                    st.dominator = env.from;
                }
                if (env.payload.active) ++cnt;
            }
            st.active_deg = cnt;
            st.sampled = false;
        }
    };

    auto stats = run_program(topo, states, prog, charge.phase + ".sample");
    charge.charge(stats.rounds);

    RulingSetResult out;
    out.alpha = 2;
    out.dominator.assign(n, kNoVertex);
    std::vector<Vertex> residual;
    for (Vertex v = 0; v < n; ++v) {
        if (states[v].in_s)
            out.members.push_back(v);
        else if (states[v].dominator != kNoVertex)
            out.dominator[v] = states[v].dominator;
        else
            residual.push_back(v);
    }

    long beta_fb = 1;
    if (!residual.empty()) {
        SubTopology sub(topo, residual);
        auto col = linial_coloring(sub, charge.sub(".fallback_linial"));
        int c = std::max(1, static_cast<int>(std::ceil(log2_clamped(double(col.palette_size)))));
        auto rs = ruling_set_from_coloring(sub, col, c, charge.sub(".fallback_rs"));
        beta_fb = rs.beta_claimed;
        for (Vertex lv : rs.members) out.members.push_back(sub.to_base(lv));
        for (Vertex lv = 0; lv < residual.size(); ++lv)
            if (rs.dominator[lv] != kNoVertex)
                out.dominator[sub.to_base(lv)] = sub.to_base(rs.dominator[lv]);
    }
    std::sort(out.members.begin(), out.members.end());
    out.beta_claimed = std::max<long>(1, beta_fb);
    return out;
}

}  // namespace deltacolor
