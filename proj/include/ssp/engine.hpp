#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "ssp/error.hpp"
#include "ssp/interaction.hpp"
#include "ssp/region.hpp"
#include "ssp/transition_system.hpp"

namespace ssp {

struct Atom {
    StateId first;
    StateId second;
    bool operator==(const Atom&) const = default;
};

struct SearchBudget {
    static constexpr std::uint64_t unlimited_nodes = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t max_nodes = 10'000'000;

    static constexpr SearchBudget unlimited() { return {unlimited_nodes}; }
    static constexpr SearchBudget nodes(std::uint64_t n) { return {n}; }
    bool is_unlimited() const { return max_nodes == unlimited_nodes; }
};

enum class AtomStatus { Solved, Unsolvable, Exhausted };

inline const char* to_string(AtomStatus s) {
    switch (s) {
    case AtomStatus::Solved: return "solved";
    case AtomStatus::Unsolvable: return "unsolvable";
    case AtomStatus::Exhausted: return "exhausted";
    }
    return "?";
}

struct AtomVerdict {
    AtomStatus status = AtomStatus::Unsolvable;
    std::optional<Region> region;
    std::uint64_t nodes = 0;
};

namespace detail {

// Domains: a state holds a 2-bit mask (bit x set iff support x is possible),
// an event an 8-bit mask over interactions.
using Dom = std::uint8_t;

inline constexpr bool singleton(Dom d) { return d != 0 && (d & (d - 1)) == 0; }
inline constexpr int lowest(Dom d) { return std::countr_zero(static_cast<unsigned>(d)); }

// For an edge (s, e, d) with domains (ds, de, dd): the supported sub-domains,
// packed as ds | de << 2 | dd << 10.
struct EdgeTable {
    std::vector<std::uint16_t> cell;
    EdgeTable() : cell(4 * 256 * 4) {
        for (unsigned ds = 0; ds < 4; ++ds)
            for (unsigned de = 0; de < 256; ++de)
                for (unsigned dd = 0; dd < 4; ++dd) {
                    unsigned ns = 0, ne = 0, nd = 0;
                    for (unsigned x = 0; x < 2; ++x) {
                        if (!(ds >> x & 1)) continue;
                        for (unsigned i = 0; i < 8; ++i) {
                            if (!(de >> i & 1)) continue;
                            auto y = apply(static_cast<Interaction>(i), static_cast<Bit>(x));
                            if (!y || !(dd >> *y & 1)) continue;
                            ns |= 1u << x;
                            ne |= 1u << i;
                            nd |= 1u << *y;
                        }
                    }
                    cell[(ds * 256 + de) * 4 + dd] = static_cast<std::uint16_t>(ns | ne << 2 | nd << 10);
                }
    }
    std::uint16_t operator()(Dom ds, Dom de, Dom dd) const { return cell[(ds * 256u + de) * 4u + dd]; }
};

inline const EdgeTable& edge_table() {
    static const EdgeTable table;
    return table;
}

} // namespace detail

// Backtracking search for a region solving a given atom. Variables are the
// state supports and event signatures; every edge is a ternary constraint kept
// generalized-arc-consistent, and the atom adds sup(a) != sup(b). The instance
// keeps its buffers between calls.
class AtomSolver {
public:
    AtomSolver(const TransitionSystem& ts, BooleanType tau) : ts_(ts), tau_(tau) {
        const auto n = ts.num_states();
        const auto k = ts.num_events();
        event_order_.resize(k);
        for (EventId e = 0; e < k; ++e) event_order_[e] = e;
        std::sort(event_order_.begin(), event_order_.end(), [&](EventId a, EventId b) {
            auto ca = ts.edges_of(a).size(), cb = ts.edges_of(b).size();
            return ca != cb ? ca > cb : a < b;
        });
        queued_.assign(ts.num_edges(), 0);
        queue_.reserve(ts.num_edges());
        trail_.reserve(8 * (n + k) + 8);

        dom_.assign(n + k, 0);
        std::fill(dom_.begin(), dom_.begin() + static_cast<std::ptrdiff_t>(n), detail::Dom{3});
        std::fill(dom_.begin() + static_cast<std::ptrdiff_t>(n), dom_.end(), tau.mask());
        for (std::uint32_t i = 0; i < ts.num_edges(); ++i) enqueue(i);
        atom_active_ = false;
        root_ok_ = propagate();
        root_dom_ = dom_;
        trail_.clear();
    }

    // False when the TS admits no tau-region at all.
    bool has_any_region() const { return root_ok_; }

    AtomVerdict solve(Atom atom, SearchBudget budget) {
        if (atom.first == atom.second || atom.first >= ts_.num_states() || atom.second >= ts_.num_states())
            throw InvalidAtom("atom needs two distinct states of the TS");
        AtomVerdict verdict;
        if (budget.max_nodes == 0) {
            verdict.status = AtomStatus::Exhausted;
            return verdict;
        }
        if (!root_ok_) return verdict;
        dom_ = root_dom_;
        trail_.clear();
        nodes_ = 0;
        limit_ = budget.max_nodes;
        exhausted_ = false;
        atom_ = atom;
        atom_active_ = true;
        atom_dirty_ = true;
        bool found = propagate() && search();
        verdict.nodes = nodes_;
        if (found) {
            verdict.status = AtomStatus::Solved;
            verdict.region = extract();
            if (!is_region(ts_, tau_, *verdict.region) || !verdict.region->separates(atom.first, atom.second))
                throw std::logic_error("search produced an invalid region");
        } else {
            verdict.status = exhausted_ ? AtomStatus::Exhausted : AtomStatus::Unsolvable;
        }
        atom_active_ = false;
        return verdict;
    }

private:
    std::size_t n() const { return ts_.num_states(); }

    void enqueue(std::uint32_t edge) {
        if (!queued_[edge]) {
            queued_[edge] = 1;
            queue_.push_back(edge);
        }
    }

    void clear_queue() {
        for (auto e : queue_) queued_[e] = 0;
        queue_.clear();
    }

    bool narrow(std::uint32_t var, detail::Dom to, std::uint32_t from_edge) {
        if (to == dom_[var]) return true;
        if (to == 0) return false;
        trail_.emplace_back(var, dom_[var]);
        dom_[var] = to;
        auto touch = [&](std::span<const std::uint32_t> edges) {
            for (auto idx : edges)
                if (idx != from_edge) enqueue(idx);
        };
        if (var < n()) {
            touch(ts_.out_edges(var));
            touch(ts_.in_edges(var));
        } else {
            touch(ts_.edges_of(var - static_cast<std::uint32_t>(n())));
        }
        if (atom_active_ && (var == atom_.first || var == atom_.second)) atom_dirty_ = true;
        return true;
    }

    bool revise(std::uint32_t idx) {
        const auto& e = ts_.edges()[idx];
        const std::uint32_t ev = static_cast<std::uint32_t>(n() + e.event);
        if (e.src == e.dst) {
            detail::Dom ns = 0, ne = 0;
            for (unsigned x = 0; x < 2; ++x) {
                if (!(dom_[e.src] >> x & 1)) continue;
                for (unsigned i = 0; i < 8; ++i) {
                    if (!(dom_[ev] >> i & 1)) continue;
                    auto y = apply(static_cast<Interaction>(i), static_cast<Bit>(x));
                    if (y && *y == x) {
                        ns |= static_cast<detail::Dom>(1u << x);
                        ne |= static_cast<detail::Dom>(1u << i);
                    }
                }
            }
            return narrow(e.src, ns, idx) && narrow(ev, ne, idx);
        }
        auto packed = table_(dom_[e.src], dom_[ev], dom_[e.dst]);
        return narrow(e.src, static_cast<detail::Dom>(packed & 3), idx) &&
               narrow(ev, static_cast<detail::Dom>(packed >> 2 & 0xFF), idx) &&
               narrow(e.dst, static_cast<detail::Dom>(packed >> 10 & 3), idx);
    }

    bool revise_atom() {
        atom_dirty_ = false;
        auto a = atom_.first, b = atom_.second;
        if (detail::singleton(dom_[a]) && !narrow(b, dom_[b] & static_cast<detail::Dom>(~dom_[a] & 3), UINT32_MAX))
            return false;
        if (detail::singleton(dom_[b]) && !narrow(a, dom_[a] & static_cast<detail::Dom>(~dom_[b] & 3), UINT32_MAX))
            return false;
        return true;
    }

    bool propagate() {
        for (;;) {
            while (!queue_.empty()) {
                auto idx = queue_.back();
                queue_.pop_back();
                queued_[idx] = 0;
                if (!revise(idx)) {
                    clear_queue();
                    return false;
                }
            }
            if (!(atom_active_ && atom_dirty_)) return true;
            if (!revise_atom()) {
                clear_queue();
                return false;
            }
        }
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            dom_[trail_.back().first] = trail_.back().second;
            trail_.pop_back();
        }
    }

    // Next variable to branch on: the initial support, the first atom state
    // (so the atom constraint bites early), then events by descending edge
    // count, then any state left open.
    std::optional<std::uint32_t> pick() const {
        if (!detail::singleton(dom_[ts_.initial()])) return ts_.initial();
        if (atom_active_ && !detail::singleton(dom_[atom_.first])) return atom_.first;
        for (auto e : event_order_)
            if (!detail::singleton(dom_[n() + e])) return static_cast<std::uint32_t>(n() + e);
        for (std::uint32_t s = 0; s < n(); ++s)
            if (!detail::singleton(dom_[s])) return s;
        return std::nullopt;
    }

    bool search() {
        auto var = pick();
        if (!var) return true;
        const detail::Dom domain = dom_[*var];
        for (unsigned v = 0; v < 8; ++v) {
            if (!(domain >> v & 1)) continue;
            if (nodes_ >= limit_) {
                exhausted_ = true;
                return false;
            }
            ++nodes_;
            auto mark = trail_.size();
            if (narrow(*var, static_cast<detail::Dom>(1u << v), UINT32_MAX) && propagate() && search()) return true;
            clear_queue();
            undo(mark);
            if (exhausted_) return false;
        }
        return false;
    }

    Region extract() const {
        Region r;
        r.sup.resize(n());
        r.sig.resize(ts_.num_events());
        for (StateId s = 0; s < n(); ++s) r.sup[s] = static_cast<Bit>(detail::lowest(dom_[s]));
        for (EventId e = 0; e < ts_.num_events(); ++e)
            r.sig[e] = static_cast<Interaction>(detail::lowest(dom_[n() + e]));
        return r;
    }

    const TransitionSystem& ts_;
    BooleanType tau_;
    const detail::EdgeTable& table_ = detail::edge_table();
    std::vector<EventId> event_order_;
    std::vector<detail::Dom> dom_;
    std::vector<detail::Dom> root_dom_;
    std::vector<std::pair<std::uint32_t, detail::Dom>> trail_;
    std::vector<std::uint32_t> queue_;
    std::vector<char> queued_;
    bool root_ok_ = false;
    Atom atom_{0, 0};
    bool atom_active_ = false;
    bool atom_dirty_ = false;
    std::uint64_t nodes_ = 0;
    std::uint64_t limit_ = 0;
    bool exhausted_ = false;
};

inline AtomVerdict solve_atom(const TransitionSystem& ts, BooleanType tau, Atom atom,
                              SearchBudget budget = SearchBudget{}) {
    AtomSolver solver(ts, tau);
    return solver.solve(atom, budget);
}

enum class Decision { HasSSP, LacksSSP, Unknown };

inline const char* to_string(Decision d) {
    switch (d) {
    case Decision::HasSSP: return "has_ssp";
    case Decision::LacksSSP: return "lacks_ssp";
    case Decision::Unknown: return "unknown";
    }
    return "?";
}

struct AtomRecord {
    Atom atom;
    AtomStatus status;
    int region = -1;       // index into SeparationReport::regions when solved
    bool reused = false;   // solved by a region found for an earlier atom
    std::uint64_t nodes = 0;
};

struct SearchStats {
    std::uint64_t atoms_checked = 0;
    std::uint64_t nodes_expanded = 0;
    double wall_ms = 0;
};

struct SeparationReport {
    Decision decision = Decision::Unknown;
    std::optional<Atom> witness_atom;
    std::vector<AtomRecord> verdicts;
    std::vector<Region> regions;  // separative when decision == HasSSP
    SearchStats stats;
};

// All atoms (a, b) with a < b, in lexicographic order of state names.
inline std::vector<Atom> all_atoms(const TransitionSystem& ts) {
    std::vector<Atom> out;
    const auto n = static_cast<StateId>(ts.num_states());
    out.reserve(static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2);
    for (StateId a = 0; a < n; ++a)
        for (StateId b = a + 1; b < n; ++b) out.push_back({a, b});
    return out;
}

// Worker count from SSP_KIT_THREADS, else the hardware concurrency.
inline unsigned default_threads() {
    if (const char* env = std::getenv("SSP_KIT_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

struct DecideOptions {
    unsigned threads = 0;        // 0: default_threads()
    std::size_t batch_size = 64; // atoms solved speculatively per parallel round
};

namespace detail {

inline int covering_region(const std::vector<Region>& regions, Atom a) {
    for (std::size_t i = 0; i < regions.size(); ++i)
        if (regions[i].separates(a.first, a.second)) return static_cast<int>(i);
    return -1;
}

} // namespace detail

// Sequential semantics: walk the atoms in order; an atom already separated by a
// collected region is recorded as reused, otherwise it is searched and a found
// region joins the pool. The parallel mode solves batches of uncovered atoms
// speculatively and merges them in order, discarding results the sequential
// walk would not have computed, so the report does not depend on scheduling.
inline SeparationReport decide_ssp(const TransitionSystem& ts, BooleanType tau, SearchBudget budget = SearchBudget{},
                                   DecideOptions options = {}) {
    auto t0 = std::chrono::steady_clock::now();
    SeparationReport report;
    const auto atoms = all_atoms(ts);
    report.verdicts.reserve(atoms.size());
    unsigned threads = options.threads ? options.threads : default_threads();
    threads = std::max(1u, threads);
    const std::size_t batch = std::max<std::size_t>(1, options.batch_size);

    std::vector<AtomSolver> solvers;
    solvers.reserve(threads);
    solvers.emplace_back(ts, tau);

    bool exhausted_any = false;
    bool lacks = false;
    auto record = [&](Atom a, AtomVerdict&& v) {
        AtomRecord rec{a, v.status, -1, false, v.nodes};
        report.stats.nodes_expanded += v.nodes;
        ++report.stats.atoms_checked;
        if (v.status == AtomStatus::Solved) {
            rec.region = static_cast<int>(report.regions.size());
            report.regions.push_back(std::move(*v.region));
        } else if (v.status == AtomStatus::Unsolvable) {
            lacks = true;
            report.witness_atom = a;
        } else {
            exhausted_any = true;
        }
        report.verdicts.push_back(rec);
    };
    auto record_reuse = [&](Atom a, int idx) {
        report.verdicts.push_back({a, AtomStatus::Solved, idx, true, 0});
        ++report.stats.atoms_checked;
    };

    std::size_t next = 0;
    while (next < atoms.size() && !lacks) {
        if (threads == 1) {
            Atom a = atoms[next++];
            int idx = detail::covering_region(report.regions, a);
            if (idx >= 0) record_reuse(a, idx);
            else record(a, solvers[0].solve(a, budget));
            continue;
        }
        // Collect the next batch of atoms not covered by the current pool.
        std::vector<std::size_t> pending;
        std::size_t scan = next;
        while (scan < atoms.size() && pending.size() < batch) {
            if (detail::covering_region(report.regions, atoms[scan]) < 0) pending.push_back(scan);
            ++scan;
        }
        std::vector<AtomVerdict> results(pending.size());
        unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, pending.size()));
        while (solvers.size() < workers) solvers.emplace_back(ts, tau);
        if (workers <= 1) {
            for (std::size_t i = 0; i < pending.size(); ++i) results[i] = solvers[0].solve(atoms[pending[i]], budget);
        } else {
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < workers; ++w)
                pool.emplace_back([&, w] {
                    for (std::size_t i = w; i < pending.size(); i += workers)
                        results[i] = solvers[w].solve(atoms[pending[i]], budget);
                });
            for (auto& t : pool) t.join();
        }
        std::size_t p = 0;
        for (; next < scan && !lacks; ++next) {
            Atom a = atoms[next];
            int idx = detail::covering_region(report.regions, a);
            bool speculated = p < pending.size() && pending[p] == next;
            if (idx >= 0) record_reuse(a, idx);
            else record(a, std::move(results[p]));
            if (speculated) ++p;
        }
    }

    if (lacks) report.decision = Decision::LacksSSP;
    else if (exhausted_any) report.decision = Decision::Unknown;
    else report.decision = Decision::HasSSP;
    report.stats.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

struct EmbeddingCertificate {
    std::vector<std::vector<Bit>> vectors;  // per state; coordinate k is the support of region k
    bool injective = false;
};

inline EmbeddingCertificate embedding_certificate(const TransitionSystem& ts, const std::vector<Region>& regions) {
    EmbeddingCertificate cert;
    cert.vectors.assign(ts.num_states(), std::vector<Bit>(regions.size()));
    for (std::size_t k = 0; k < regions.size(); ++k) {
        check_total(ts, regions[k]);
        for (StateId s = 0; s < ts.num_states(); ++s) cert.vectors[s][k] = regions[k].sup[s];
    }
    auto sorted = cert.vectors;
    std::sort(sorted.begin(), sorted.end());
    cert.injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    return cert;
}

// True iff every atom of ts is separated by some region of the set.
inline bool is_separative(const TransitionSystem& ts, const std::vector<Region>& regions) {
    return embedding_certificate(ts, regions).injective;
}

struct FastDecision {
    Decision decision;
    std::optional<Atom> witness_atom;
};

// Types {swap} ∪ ω with ω ⊆ {inp,out}: every interaction changes the support,
// so more than two states (or a loop next to a second state) rule the SSP out.
inline std::optional<FastDecision> fast_path_swap_core(const TransitionSystem& ts, BooleanType tau) {
    const BooleanType core{Interaction::swap};
    if (!core.subset_of(tau) || !(tau - core).subset_of(BooleanType{Interaction::inp, Interaction::out}))
        throw WrongTypeFamily("expected {swap} plus a subset of {inp,out}, got {" + tau.to_string() + "}");
    const auto n = ts.num_states();
    const bool has_loop = !ts.loop_free();
    if (n <= 2 && !(has_loop && n > 1)) return std::nullopt;

    // Regions 2-colour the underlying graph, so the witness is the first atom
    // whose states share a colour (or the first atom when no colouring exists).
    std::vector<int> colour(n, -1);
    bool bipartite = !has_loop;
    std::vector<StateId> stack{ts.initial()};
    colour[ts.initial()] = 0;
    while (!stack.empty() && bipartite) {
        auto s = stack.back();
        stack.pop_back();
        auto visit = [&](StateId t) {
            if (colour[t] < 0) {
                colour[t] = 1 - colour[s];
                stack.push_back(t);
            } else if (colour[t] == colour[s]) {
                bipartite = false;
            }
        };
        for (auto idx : ts.out_edges(s)) visit(ts.edges()[idx].dst);
        for (auto idx : ts.in_edges(s)) visit(ts.edges()[idx].src);
    }
    for (const auto& a : all_atoms(ts))
        if (!bipartite || colour[a.first] == colour[a.second]) return FastDecision{Decision::LacksSSP, a};
    return std::nullopt;
}

} // namespace ssp
