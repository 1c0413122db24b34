#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <type_traits>
#include <tuple>
#include <vector>

#include "ssp/classify.hpp"
#include "ssp/cm_formula.hpp"
#include "ssp/engine.hpp"
#include "ssp/extensions.hpp"
#include "ssp/nop_free_reduction.hpp"
#include "ssp/nop_inp_reduction.hpp"
#include "ssp/oracle.hpp"
#include "ssp/random_ts.hpp"
#include "ssp/ts_format.hpp"

namespace ssp {

enum class Scale { Small, Full };

struct VerifyOptions {
    std::uint64_t seed = 1;
    Scale scale = Scale::Full;
    bool slow = true;  // include the long unsolvability search of the nop-free check
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double ms = 0;
};

namespace detail {

// Collects failures; the first few are kept verbatim.
class Tally {
public:
    void expect(bool ok, const std::string& what) {
        ++checked_;
        if (ok) return;
        ++failed_;
        if (failures_.size() < 5) failures_.push_back(what);
    }
    // Message built only on failure.
    template <class F>
        requires std::is_invocable_r_v<std::string, F>
    void expect(bool ok, F&& what) {
        if (ok) {
            ++checked_;
            return;
        }
        expect(false, std::string(what()));
    }
    bool ok() const { return failed_ == 0; }
    std::uint64_t checked() const { return checked_; }
    std::string summary(const std::string& pass_note) const {
        if (ok()) return pass_note;
        std::string out = std::to_string(failed_) + "/" + std::to_string(checked_) + " failed";
        for (const auto& f : failures_) out += "; " + f;
        return out;
    }

private:
    std::uint64_t checked_ = 0, failed_ = 0;
    std::vector<std::string> failures_;
};

inline CheckResult timed(const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    CheckResult r{name, false, "", 0};
    try {
        auto [ok, detail] = body();
        r.passed = ok;
        r.detail = detail;
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

inline std::string describe(const TransitionSystem& ts, BooleanType tau) {
    std::string edges;
    for (const auto& e : ts.edges())
        edges += " " + ts.state_name(e.src) + "-" + ts.event_name(e.event) + "->" + ts.state_name(e.dst);
    return "{" + tau.to_string() + "} on" + (edges.empty() ? std::string(" (no edges)") : edges);
}

inline std::string atom_string(const TransitionSystem& ts, const std::optional<Atom>& a) {
    if (!a) return "none";
    return "(" + ts.state_name(a->first) + "," + ts.state_name(a->second) + ")";
}

// Tables of the exhaustive family that are least among all relabelings
// fixing the initial state, so each isomorphism class is visited once.
inline bool least_relabeling(std::size_t n, std::size_t k, const std::vector<int>& t) {
    std::vector<int> ps(n), es(k), u(n * k);
    for (std::size_t i = 0; i < n; ++i) ps[i] = static_cast<int>(i);
    do {
        for (std::size_t i = 0; i < k; ++i) es[i] = static_cast<int>(i);
        do {
            for (std::size_t s = 0; s < n; ++s)
                for (std::size_t e = 0; e < k; ++e) {
                    int d = t[s * k + e];
                    u[static_cast<std::size_t>(ps[s]) * k + static_cast<std::size_t>(es[e])] =
                        d < 0 ? -1 : ps[static_cast<std::size_t>(d)];
                }
            if (u < t) return false;
        } while (std::next_permutation(es.begin(), es.end()));
    } while (n > 1 && std::next_permutation(ps.begin() + 1, ps.end()));
    return true;
}

inline void enumerate_classes(std::size_t max_n, std::size_t max_k,
                              const std::function<void(const TransitionSystem&)>& visit) {
    for (std::size_t n = 1; n <= max_n; ++n)
        for (std::size_t k = 0; k <= max_k; ++k)
            enumerate_tables(n, k, [&](const std::vector<int>& t) {
                if (least_relabeling(n, k, t)) visit(ts_from_table(n, k, t));
            });
}

inline std::vector<BooleanType> sample_types(Rng& rng, std::size_t count) {
    std::set<std::uint8_t> seen;
    std::vector<BooleanType> out;
    while (out.size() < count) {
        auto t = random_type(rng);
        if (seen.insert(t.mask()).second) out.push_back(t);
    }
    return out;
}

inline SeparationReport decide_1(const TransitionSystem& ts, BooleanType tau,
                                 SearchBudget budget = SearchBudget::unlimited()) {
    return decide_ssp(ts, tau, budget, DecideOptions{1, 64});
}

} // namespace detail

namespace checks {

inline const BooleanType nop_inp{Interaction::nop, Interaction::inp};
inline const BooleanType tilde_tau{Interaction::nop, Interaction::set, Interaction::swap, Interaction::used};

inline TransitionSystem fixture_a1() { return make_ts("s0", {{"s0", "a", "s1"}, {"s1", "a", "s0"}}); }
inline TransitionSystem fixture_a2() { return make_ts("r0", {{"r0", "b", "r1"}, {"r0", "c", "r1"}}); }
inline TransitionSystem fixture_a3() {
    return make_ts("s0", {{"s0", "a", "s1"}, {"s1", "b", "s2"}, {"s2", "c", "s3"}});
}

// All 16 cells of the interaction table, undefined ones included.
inline CheckResult interaction_table() {
    return detail::timed("interaction table", [] {
        using I = Interaction;
        const std::optional<Bit> u;
        const std::vector<std::tuple<I, std::optional<Bit>, std::optional<Bit>>> expected{
            {I::nop, 0, 1},  {I::inp, u, 0},  {I::out, 1, u},  {I::res, 0, 0},
            {I::set, 1, 1},  {I::swap, 1, 0}, {I::used, u, 1}, {I::free, 0, u},
        };
        detail::Tally t;
        for (const auto& [i, at0, at1] : expected) {
            t.expect(apply(i, 0) == at0, std::string(name(i)) + "(0)");
            t.expect(apply(i, 1) == at1, std::string(name(i)) + "(1)");
        }
        return std::make_pair(t.ok() && t.checked() == 16, t.summary("16/16 cells match"));
    });
}

// With strict_flip the row itself must survive the flip; otherwise only the
// complexity must, and rows that move are listed.
inline CheckResult classification(bool strict_flip = false) {
    return detail::timed("classification", [strict_flip] {
        detail::Tally t;
        const std::array<int, 11> expected{0, 16, 32, 32, 16, 2, 10, 20, 64, 60, 4};
        std::string moved;
        auto counts = row_counts();
        for (std::size_t r = 0; r < counts.size(); ++r)
            t.expect(counts[r] == expected[r], "row " + std::to_string(r) + " has " + std::to_string(counts[r]));
        for (const auto& e : enumerate_types()) {
            auto table = classify_by_table(e.type);
            t.expect(table.figure_row != 0, "{" + e.type.to_string() + "} matches no single row");
            t.expect(table == e.classification, "{" + e.type.to_string() + "}: table " + table.to_string() +
                                                    " vs rules " + e.classification.to_string());
            auto flipped = classify_type(flip_type(e.type));
            t.expect(flipped.complexity == e.classification.complexity, "flip of {" + e.type.to_string() + "}");
            if (flipped.figure_row != e.classification.figure_row) {
                moved += " {" + e.type.to_string() + "}:" + e.classification.to_string();
                if (strict_flip) t.expect(false, "flip moves {" + e.type.to_string() + "} out of " +
                                                     e.classification.to_string());
            }
            t.expect(flip_is_isomorphism(e.type), "flip not an isomorphism on {" + e.type.to_string() + "}");
        }
        std::string note = "256/256 types consistent, row counts 16,32,32,16,2,10,20,64,60,4, complexity flip-invariant";
        if (!moved.empty()) note += "; flip changes the row of" + moved;
        return std::make_pair(t.ok(), t.summary(note));
    });
}

inline CheckResult figure_fixtures() {
    return detail::timed("small fixtures", [] {
        detail::Tally t;
        auto a1 = fixture_a1(), a2 = fixture_a2(), a3 = fixture_a3();
        auto r = detail::decide_1(a1, nop_inp);
        t.expect(r.decision == Decision::LacksSSP, "A1 under {nop,inp}: " + std::string(to_string(r.decision)));
        t.expect(r.witness_atom && *r.witness_atom == Atom{a1.state("s0"), a1.state("s1")},
                 "A1 witness " + detail::atom_string(a1, r.witness_atom));
        t.expect(detail::decide_1(a1, tilde_tau).decision == Decision::HasSSP, "A1 under {nop,set,swap,used}");
        t.expect(detail::decide_1(a2, nop_inp).decision == Decision::HasSSP, "A2 under {nop,inp}");
        t.expect(detail::decide_1(a2, tilde_tau).decision == Decision::HasSSP, "A2 under {nop,set,swap,used}");

        std::vector<Interaction> sig(a3.num_events());
        sig[a3.event("a")] = Interaction::used;
        sig[a3.event("b")] = Interaction::swap;
        sig[a3.event("c")] = Interaction::set;
        auto reg = propagate_region(a3, tilde_tau, 1, sig);
        t.expect(reg.has_value(), "A3 propagation failed");
        if (reg) {
            std::vector<Bit> sup{reg->sup[a3.state("s0")], reg->sup[a3.state("s1")], reg->sup[a3.state("s2")],
                                 reg->sup[a3.state("s3")]};
            t.expect(sup == std::vector<Bit>{1, 1, 0, 1}, "A3 supports");
            t.expect(!is_normalized(a3, *reg), "A3 region reported normalized");
            auto norm = normalize_region(a3, tilde_tau, *reg);
            t.expect(norm.sig[a3.event("a")] == Interaction::nop && norm.sig[a3.event("b")] == Interaction::swap &&
                         norm.sig[a3.event("c")] == Interaction::set,
                     "A3 normalization");
            t.expect(norm.sup == reg->sup && is_region(a3, tilde_tau, norm), "A3 normalized region invalid");
        }
        return std::make_pair(t.ok(), t.summary("A1/A2 decisions, A3 supports 1,1,0,1, used->nop"));
    });
}

// decide_ssp against the brute-force oracle: every TS up to isomorphism in
// the exhaustive family under sampled types, then random TS under random types.
inline CheckResult oracle_equivalence(const VerifyOptions& opt) {
    return detail::timed("oracle equivalence", [opt] {
        Rng rng(opt.seed);
        detail::Tally t;
        const bool full = opt.scale == Scale::Full;
        auto types = detail::sample_types(rng, 10);
        std::uint64_t family = 0;
        auto compare = [&](const TransitionSystem& ts, BooleanType tau) {
            auto a = detail::decide_1(ts, tau);
            auto b = brute_force_decide(ts, tau);
            t.expect(a.decision == b.decision && a.witness_atom == b.witness_atom, [&] {
                return detail::describe(ts, tau) + ": engine " + to_string(a.decision) + " " +
                       detail::atom_string(ts, a.witness_atom) + ", oracle " + to_string(b.decision) + " " +
                       detail::atom_string(ts, b.witness_atom);
            });
            if (a.decision == Decision::HasSSP) t.expect(is_separative(ts, a.regions), "regions not separative");
        };
        detail::enumerate_classes(full ? 4 : 3, 3, [&](const TransitionSystem& ts) {
            ++family;
            for (auto tau : types) compare(ts, tau);
        });
        const int random_ts_count = full ? 200 : 40, random_types = full ? 20 : 5;
        RandomTsOptions ro;
        ro.max_states = 6;
        ro.max_events = 4;
        for (int i = 0; i < random_ts_count; ++i) {
            auto ts = random_ts(rng, ro);
            for (int j = 0; j < random_types; ++j) compare(ts, random_type(rng));
        }
        return std::make_pair(t.ok(), t.summary(std::to_string(family) + " family TS x 10 types + " +
                                                std::to_string(random_ts_count) + " random TS x " +
                                                std::to_string(random_types) + " types agree"));
    });
}

inline CheckResult nop_inp_reduction(const VerifyOptions&) {
    return detail::timed("nop-inp reduction", [] {
        detail::Tally t;
        auto f = example1_formula();
        auto gen = gen_nop_inp(f);
        const auto& ts = gen.ts;
        t.expect(ts.num_states() == 45 && ts.num_events() == 26 && ts.num_edges() == 50,
                 "Example 1 sizes " + std::to_string(ts.num_states()) + "/" + std::to_string(ts.num_events()) + "/" +
                     std::to_string(ts.num_edges()));
        auto rep = decide_ssp(ts, nop_inp);
        t.expect(rep.decision == Decision::HasSSP, std::string("Example 1 decision ") + to_string(rep.decision));
        auto model = cm_oracle(f);
        t.expect(model && model_to_string(f, *model) == "X0 X4", "Example 1 model");
        auto wit = gen_nop_inp_witness(f, parse_model(f, "X0,X4"));
        std::vector<Region> regs;
        for (const auto& w : wit) {
            t.expect(is_region(ts, nop_inp, w.region), w.name + " invalid");
            regs.push_back(w.region);
        }
        t.expect(is_separative(ts, regs), "witness family not separative");

        auto g = all_subsets_formula();
        t.expect(!cm_oracle(g).has_value(), "all-subsets formula has a model");
        auto gg = gen_nop_inp(g);
        t.expect(gg.ts.num_states() == 31 && gg.ts.num_events() == 18, "m=4 sizes");
        t.expect(gg.key_atom == std::make_pair(std::string("t_4_0"), std::string("t_5_0")), "m=4 key atom");
        auto v = solve_atom(gg.ts, nop_inp, gg.alpha());
        t.expect(v.status == AtomStatus::Unsolvable, std::string("m=4 alpha: ") + to_string(v.status));
        auto rep4 = decide_ssp(gg.ts, nop_inp);
        t.expect(rep4.decision == Decision::LacksSSP, std::string("m=4 decision ") + to_string(rep4.decision));
        return std::make_pair(t.ok(), t.summary("45/26/50, has SSP, witness separative; m=4 alpha unsolvable, lacks SSP"));
    });
}

// decide_ssp on gen_nop_inp agrees with the CM oracle over a seeded corpus.
inline CheckResult reduction_soundness(const VerifyOptions& opt) {
    return detail::timed("nop-inp soundness corpus", [opt] {
        detail::Tally t;
        Rng rng(opt.seed);
        std::vector<CmFormula> corpus{example1_formula(), all_subsets_formula()};
        const int extra = opt.scale == Scale::Full ? 6 : 2;
        for (int i = 0; i < extra; ++i) corpus.push_back(random_cm_formula(rng, 5 + i % 2));
        for (const auto& f : corpus) {
            auto model = cm_oracle(f);
            auto gen = gen_nop_inp(f);
            t.expect(gen.ts.num_states() == static_cast<std::size_t>(7 * f.m() + 3) &&
                         gen.ts.num_events() == static_cast<std::size_t>(4 * f.m() + 2) &&
                         gen.ts.num_edges() == static_cast<std::size_t>(8 * f.m() + 2),
                     "sizes for m=" + std::to_string(f.m()));
            auto rep = decide_ssp(gen.ts, nop_inp);
            t.expect((rep.decision == Decision::HasSSP) == model.has_value(),
                     "formula " + serialize_formula(f) + " decision " + to_string(rep.decision));
            if (model) {
                std::vector<Region> regs;
                for (const auto& w : gen_nop_inp_witness(f, *model)) {
                    t.expect(is_region(gen.ts, nop_inp, w.region), w.name + " invalid");
                    regs.push_back(w.region);
                }
                t.expect(is_separative(gen.ts, regs), "witness family not separative");
            }
        }
        return std::make_pair(t.ok(), t.summary(std::to_string(corpus.size()) + " formulas agree with the oracle"));
    });
}

inline CheckResult extension_equivalence(const VerifyOptions& opt) {
    return detail::timed("extension equivalence", [opt] {
        detail::Tally t;
        Rng rng(opt.seed);
        const BooleanType ioo{Interaction::nop, Interaction::inp, Interaction::out};
        const BooleanType nor{Interaction::nop, Interaction::out, Interaction::res};
        const BooleanType nrs{Interaction::nop, Interaction::res, Interaction::set};
        const BooleanType nrw{Interaction::nop, Interaction::res, Interaction::swap};
        RandomTsOptions ro;
        ro.max_states = 6;
        ro.max_events = 4;
        ro.loop_free = true;
        ro.extension_safe = true;
        const int count = opt.scale == Scale::Full ? 100 : 30;
        const int support_level = opt.scale == Scale::Full ? 20 : 10;
        for (int i = 0; i < count; ++i) {
            auto a = random_ts(rng, ro);
            auto b = extend(a, ExtensionKind::Backward);
            auto c = extend(a, ExtensionKind::OnewayLoop);
            auto d = extend(a, ExtensionKind::Loop);
            auto da = detail::decide_1(a, ioo).decision;
            auto db = detail::decide_1(b, nor).decision;
            auto dd = detail::decide_1(d, nrs).decision;
            t.expect(da == db && db == dd, [&] { return detail::describe(a, ioo) + ": A/B/D decisions differ"; });
            t.expect(detail::decide_1(a, nop_inp).decision == detail::decide_1(c, nrw).decision,
                     [&] { return detail::describe(a, nop_inp) + ": A/C decisions differ"; });
            if (i < support_level) {
                auto sa = brute_force_regions(a, ioo).supports();
                t.expect(sa == brute_force_regions(b, nor).supports(), "support sets of A and B differ");
                t.expect(sa == brute_force_regions(d, nrs).supports(), "support sets of A and D differ");
                t.expect(brute_force_regions(a, nop_inp).supports() == brute_force_regions(c, nrw).supports(),
                         "support sets of A and C differ");
            }
        }
        return std::make_pair(t.ok(), t.summary(std::to_string(count) + " TS: decisions transfer; " +
                                                std::to_string(support_level) + " TS: supports coincide"));
    });
}

// expected_states defaults to the gadget sum 188m+1.
inline CheckResult nop_free_reduction(const VerifyOptions& opt, std::size_t expected_states = 188 * 6 + 1) {
    return detail::timed("nop-free reduction", [opt, expected_states] {
        detail::Tally t;
        auto f = example1_formula();
        auto gen = gen_nop_free(f);
        const auto& ts = gen.ts;
        t.expect(ts.bi_directed(), "not bi-directed");
        t.expect(ts.num_states() == expected_states, "state count " + std::to_string(ts.num_states()) + ", expected " +
                                                         std::to_string(expected_states));
        auto model = parse_model(f, "X0,X4");
        auto r = gen_nop_free_alpha_region(f, model, ts);
        t.expect(is_region(ts, swap_free_type, r), "alpha region invalid");
        auto alpha = gen.alpha();
        t.expect(r.separates(alpha.first, alpha.second), "alpha region does not solve alpha");
        t.expect(check_gadget_facts(f, ts, r).all(), "gadget facts fail on the alpha region");
        const BooleanType swap_used{Interaction::swap, Interaction::used};
        auto flipped = transport_swap_free(r, swap_used);
        t.expect(is_region(ts, swap_used, flipped) && flipped.separates(alpha.first, alpha.second),
                 "flip transport invalid");
        if (opt.slow) {
            auto g = all_subsets_formula();
            auto gg = gen_nop_free(g);
            t.expect(gg.ts.num_states() == 188 * 4 + 1, "m=4 state count");
            auto v = solve_atom(gg.ts, swap_free_type, gg.alpha());
            t.expect(v.status == AtomStatus::Unsolvable,
                     std::string("m=4 alpha: ") + to_string(v.status) + " after " + std::to_string(v.nodes) + " nodes");
        }
        return std::make_pair(t.ok(), t.summary(std::to_string(ts.num_states()) + std::string(" states, bi-directed, alpha region valid, gadget facts, "
                                                            "flip transport") +
                                                (opt.slow ? ", m=4 alpha unsolvable" : " (unsolvability skipped)")));
    });
}

// Witness families of both reductions on Example 1: each region valid, each
// family separative; the nop-free one in all four nop-free kernels.
inline CheckResult witness_families(const VerifyOptions&) {
    return detail::timed("witness families", [] {
        detail::Tally t;
        auto f = example1_formula();
        auto model = parse_model(f, "X0,X4");
        auto gen = gen_nop_free(f);
        auto wit = gen_nop_free_witness(f, model, gen.ts);
        const std::vector<BooleanType> kernels{swap_free_type,
                                               {Interaction::swap, Interaction::used},
                                               {Interaction::res, Interaction::swap},
                                               {Interaction::set, Interaction::swap}};
        for (auto tau : kernels) {
            std::vector<Region> regs;
            for (const auto& w : wit) {
                auto r = transport_swap_free(w.region, tau);
                t.expect(is_region(gen.ts, tau, r), w.name + " invalid under {" + tau.to_string() + "}");
                regs.push_back(std::move(r));
            }
            t.expect(is_separative(gen.ts, regs), "nop-free family not separative under {" + tau.to_string() + "}");
        }
        bool threw = false;
        try {
            gen_nop_free_witness(f, parse_model(f, "X0,X1"), gen.ts);
        } catch (const ModelNotOneInThree&) {
            threw = true;
        }
        t.expect(threw, "wrong model accepted");
        return std::make_pair(t.ok(), t.summary(std::to_string(wit.size()) +
                                                " nop-free regions valid and separative in four kernels"));
    });
}

// fast_path_swap_core against the oracle on every TS up to 4 states and
// 2 events (up to isomorphism) for the four swap-core types.
inline CheckResult swap_core_family() {
    return detail::timed("swap-core family", [] {
        detail::Tally t;
        using I = Interaction;
        const std::vector<BooleanType> types{{I::swap}, {I::swap, I::inp}, {I::swap, I::out}, {I::swap, I::inp, I::out}};
        std::uint64_t family = 0;
        detail::enumerate_classes(4, 2, [&](const TransitionSystem& ts) {
            ++family;
            for (auto tau : types) {
                auto oracle = brute_force_decide(ts, tau);
                auto fast = fast_path_swap_core(ts, tau);
                Decision d;
                std::optional<Atom> w;
                if (fast) {
                    d = fast->decision;
                    w = fast->witness_atom;
                } else {
                    auto rep = detail::decide_1(ts, tau);
                    d = rep.decision;
                    w = rep.witness_atom;
                }
                t.expect(d == oracle.decision && w == oracle.witness_atom, [&] { return detail::describe(ts, tau); });
                if (oracle.decision == Decision::HasSSP)
                    t.expect(ts.num_states() <= 2,
                             [&] { return detail::describe(ts, tau) + " has SSP with >2 states"; });
            }
        });
        return std::make_pair(t.ok(), t.summary(std::to_string(family) + " TS x 4 types agree; SSP only with <=2 states"));
    });
}

inline CheckResult engine_properties(const VerifyOptions& opt) {
    return detail::timed("engine properties", [opt] {
        detail::Tally t;
        Rng rng(opt.seed);
        const int count = opt.scale == Scale::Full ? 200 : 50;
        RandomTsOptions ro;
        ro.max_states = 5;
        ro.max_events = 3;
        for (int i = 0; i < count; ++i) {
            auto ts = random_ts(rng, ro);
            auto tau = random_type(rng);
            auto wider = tau | random_type(rng);
            auto d = detail::decide_1(ts, tau).decision;
            if (d == Decision::HasSSP)
                t.expect(detail::decide_1(ts, wider).decision == Decision::HasSSP,
                         [&] { return "monotonicity: " + detail::describe(ts, tau) + " within {" + wider.to_string() + "}"; });
        }
        for (int i = 0; i < count; ++i) {
            auto ts = random_ts(rng, ro);
            auto tau = random_type(rng);
            t.expect(detail::decide_1(ts, tau).decision == detail::decide_1(ts, flip_type(tau)).decision,
                     [&] { return "flip: " + detail::describe(ts, tau); });
        }
        for (int i = 0; i < count; ++i) {
            auto ts = random_ts(rng, ro);
            auto tau = random_type(rng).insert(Interaction::nop);
            auto rep = detail::decide_1(ts, tau);
            std::vector<Region> pool = rep.regions;
            for (const auto& e : brute_force_regions(ts, tau).entries)
                pool.push_back(RegionFamily::first_region(e, ts.num_states()));
            std::vector<Region> normalized;
            for (const auto& r : pool) {
                auto n = normalize_region(ts, tau, r);
                t.expect(is_region(ts, tau, n) && n.sup == r.sup && is_normalized(ts, n),
                         [&] { return "normalization: " + detail::describe(ts, tau); });
                normalized.push_back(std::move(n));
            }
            if (rep.decision == Decision::HasSSP)
                t.expect(is_separative(ts, {normalized.begin(), normalized.begin() + static_cast<std::ptrdiff_t>(rep.regions.size())}),
                         [&] { return "normalized set not separative: " + detail::describe(ts, tau); });
        }
        return std::make_pair(t.ok(), t.summary(std::to_string(count) + " instances each: monotone, flip-invariant, "
                                                "normalization keeps supports"));
    });
}

inline CheckResult format_round_trip(const VerifyOptions& opt) {
    return detail::timed("format round trip", [opt] {
        detail::Tally t;
        Rng rng(opt.seed);
        std::vector<TransitionSystem> corpus{fixture_a1(), fixture_a2(), fixture_a3(), gen_nop_inp(example1_formula()).ts,
                                             gen_nop_free(example1_formula()).ts};
        for (int i = 0; i < 50; ++i) corpus.push_back(random_ts(rng));
        for (const auto& ts : corpus) {
            auto text = serialize_ts(ts);
            t.expect(parse_ts(text) == ts, "text round trip");
            t.expect(serialize_ts(parse_ts(text)) == text, "serialization not stable");
            t.expect(ts_from_json(ts_to_json(ts)) == ts, "JSON round trip");
        }
        return std::make_pair(t.ok(), t.summary(std::to_string(corpus.size()) + " TS round-trip through text and JSON"));
    });
}

inline CheckResult cm_fixtures() {
    return detail::timed("CM oracle", [] {
        detail::Tally t;
        auto f = example1_formula();
        auto m = cm_oracle(f);
        t.expect(m && model_to_string(f, *m) == "X0 X4", "Example 1");
        auto fp = f.renamed();
        auto mp = cm_oracle(fp);
        t.expect(mp && model_to_string(fp, *mp) == "X0' X4'", "renamed copy");
        t.expect(!cm_oracle(all_subsets_formula()), "all-subsets formula");
        bool threw = false;
        try {
            cm_validate(std::vector<std::array<int, 3>>{{0, 1, 2}});
        } catch (const OccurrenceNotThree&) {
            threw = true;
        }
        t.expect(threw, "single clause accepted");
        return std::make_pair(t.ok(), t.summary("models and validation as expected"));
    });
}

} // namespace checks

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"core", "classify", "engine", "reductions", "all"};
    return names;
}

inline std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    const bool all = suite == "all";
    bool known = all;
    if (all || suite == "core") {
        known = true;
        out.push_back(checks::interaction_table());
        out.push_back(checks::figure_fixtures());
        out.push_back(checks::format_round_trip(opt));
    }
    if (all || suite == "classify") {
        known = true;
        out.push_back(checks::classification());
    }
    if (all || suite == "engine") {
        known = true;
        out.push_back(checks::oracle_equivalence(opt));
        out.push_back(checks::swap_core_family());
        out.push_back(checks::engine_properties(opt));
    }
    if (all || suite == "reductions") {
        known = true;
        out.push_back(checks::cm_fixtures());
        out.push_back(checks::nop_inp_reduction(opt));
        out.push_back(checks::reduction_soundness(opt));
        out.push_back(checks::extension_equivalence(opt));
        out.push_back(checks::nop_free_reduction(opt));
        out.push_back(checks::witness_families(opt));
    }
    if (!known) throw std::invalid_argument("unknown suite '" + suite + "'");
    return out;
}

} // namespace ssp
