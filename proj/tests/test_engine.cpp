#include <catch_amalgamated.hpp>

#include "ssp/ssp.hpp"

using namespace ssp;
using I = Interaction;

namespace {

TransitionSystem a1() { return make_ts("s0", {{"s0", "a", "s1"}, {"s1", "a", "s0"}}); }
TransitionSystem a2() { return make_ts("r0", {{"r0", "b", "r1"}, {"r0", "c", "r1"}}); }

const BooleanType nop_inp{I::nop, I::inp};
const BooleanType tilde{I::nop, I::set, I::swap, I::used};

} // namespace

TEST_CASE("solve_atom on the two-state cycle") {
    auto ts = a1();
    Atom atom{ts.state("s0"), ts.state("s1")};
    auto solved = solve_atom(ts, tilde, atom);
    REQUIRE(solved.status == AtomStatus::Solved);
    CHECK(solved.region->sig[ts.event("a")] == I::swap);
    CHECK(is_region(ts, tilde, *solved.region));

    CHECK(solve_atom(ts, nop_inp, atom).status == AtomStatus::Unsolvable);

    auto none = solve_atom(ts, tilde, atom, SearchBudget::nodes(0));
    CHECK(none.status == AtomStatus::Exhausted);
    CHECK(none.nodes == 0);
    CHECK_THROWS_AS(solve_atom(ts, tilde, Atom{0, 0}), InvalidAtom);
}

TEST_CASE("decide_ssp on the small fixtures") {
    auto r2 = decide_ssp(a2(), nop_inp);
    CHECK(r2.decision == Decision::HasSSP);
    CHECK(is_separative(a2(), r2.regions));

    auto r1 = decide_ssp(a1(), nop_inp);
    CHECK(r1.decision == Decision::LacksSSP);
    REQUIRE(r1.witness_atom);
    CHECK(*r1.witness_atom == Atom{0, 1});

    auto single = decide_ssp(make_ts("q", {}), nop_inp);
    CHECK(single.decision == Decision::HasSSP);
    CHECK(single.regions.empty());
}

TEST_CASE("budget exhaustion surfaces as unknown") {
    auto gen = gen_nop_inp(example1_formula());
    auto rep = decide_ssp(gen.ts, nop_inp, SearchBudget::nodes(1));
    CHECK(rep.decision == Decision::Unknown);
}

TEST_CASE("reports do not depend on the worker count") {
    Rng rng(21);
    for (int k = 0; k < 40; ++k) {
        auto ts = random_ts(rng, {.min_states = 3, .max_states = 7, .max_events = 4});
        auto tau = random_type(rng);
        auto one = decide_ssp(ts, tau, {}, DecideOptions{1, 64});
        auto many = decide_ssp(ts, tau, {}, DecideOptions{3, 2});
        CHECK(one.decision == many.decision);
        CHECK(one.witness_atom == many.witness_atom);
        CHECK(one.regions == many.regions);
    }
}

TEST_CASE("embedding certificates") {
    auto ts = a2();
    auto rep = decide_ssp(ts, nop_inp);
    auto cert = embedding_certificate(ts, rep.regions);
    CHECK(cert.injective);
    CHECK(cert.vectors.size() == 2);
    CHECK(cert.vectors[0].size() == rep.regions.size());

    CHECK_FALSE(embedding_certificate(ts, {}).injective);
    CHECK(embedding_certificate(make_ts("q", {}), {}).injective);
}

TEST_CASE("brute_force_regions") {
    auto fam = brute_force_regions(a1(), nop_inp);
    CHECK(fam.count() == 2);
    for (const auto& r : fam.expand()) {
        CHECK(r.sig[0] == I::nop);
        CHECK(r.sup[0] == r.sup[1]);
    }
    CHECK(brute_force_regions(a2(), BooleanType{}).count() == 0);
    CHECK(brute_force_regions(make_ts("q", {}), BooleanType::all()).count() == 2);

    RawTs big;
    big.initial = "s0";
    for (int i = 0; i < 16; ++i) big.edges.push_back({"s" + std::to_string(i), "a", "s" + std::to_string(i + 1)});
    CHECK_THROWS_AS(brute_force_regions(validate_ts(big), nop_inp), OracleCapExceeded);
}

TEST_CASE("brute_force_decide") {
    CHECK(brute_force_decide(a1(), nop_inp).decision == Decision::LacksSSP);
    CHECK(brute_force_decide(a2(), nop_inp).decision == Decision::HasSSP);
    CHECK(brute_force_decide(a1(), tilde).decision == Decision::HasSSP);
    CHECK(brute_force_decide(a2(), tilde).decision == Decision::HasSSP);

    Rng rng(4);
    for (int k = 0; k < 30; ++k) {
        auto ts = random_ts(rng, {.min_states = 3, .max_states = 3, .max_events = 3});
        CHECK(brute_force_decide(ts, BooleanType{I::nop}).decision == Decision::LacksSSP);
        CHECK(brute_force_decide(ts, BooleanType{I::swap, I::inp, I::out}).decision == Decision::LacksSSP);
    }
}

TEST_CASE("engine agrees with the oracle on every small TS under every type") {
    std::size_t family = 0;
    detail::enumerate_classes(3, 2, [&](const TransitionSystem& ts) {
        ++family;
        for (const auto& [tau, c] : enumerate_types()) {
            auto a = decide_ssp(ts, tau, SearchBudget::unlimited(), DecideOptions{1, 64});
            auto b = brute_force_decide(ts, tau);
            if (a.decision != b.decision || a.witness_atom != b.witness_atom)
                FAIL(serialize_ts(ts) << "type {" << tau.to_string() << "}");
        }
    });
    CHECK(family > 0);
}

TEST_CASE("fast path for the swap core") {
    const BooleanType sw{I::swap};
    auto path = make_ts("p0", {{"p0", "a", "p1"}, {"p1", "b", "p2"}});
    auto fast = fast_path_swap_core(path, sw);
    REQUIRE(fast);
    CHECK(fast->decision == Decision::LacksSSP);

    CHECK_FALSE(fast_path_swap_core(a1(), sw));
    CHECK(decide_ssp(a1(), sw).decision == Decision::HasSSP);

    auto loop = make_ts("q", {{"q", "a", "q"}});
    CHECK_FALSE(fast_path_swap_core(loop, BooleanType{I::swap, I::inp}));
    CHECK(decide_ssp(loop, BooleanType{I::swap, I::inp}).decision == Decision::HasSSP);

    CHECK_THROWS_AS(fast_path_swap_core(a1(), BooleanType{I::nop, I::swap}), WrongTypeFamily);
}

TEST_CASE("property suites at small scale") {
    VerifyOptions opt;
    opt.scale = Scale::Small;
    for (auto r : {checks::oracle_equivalence(opt), checks::swap_core_family(), checks::engine_properties(opt)}) {
        INFO(r.name << ": " << r.detail);
        CHECK(r.passed);
    }
}
