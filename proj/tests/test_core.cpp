#include <catch_amalgamated.hpp>

#include "ssp/ssp.hpp"

using namespace ssp;
using I = Interaction;

namespace {

TransitionSystem a1() { return make_ts("s0", {{"s0", "a", "s1"}, {"s1", "a", "s0"}}); }
TransitionSystem a2() { return make_ts("r0", {{"r0", "b", "r1"}, {"r0", "c", "r1"}}); }
TransitionSystem a3() { return make_ts("s0", {{"s0", "a", "s1"}, {"s1", "b", "s2"}, {"s2", "c", "s3"}}); }

const BooleanType tilde{I::nop, I::set, I::swap, I::used};

} // namespace

TEST_CASE("interaction table cells") {
    // rows: nop inp out res set swap used free; columns x=0, x=1; -1 undefined
    const int expected[8][2] = {{0, 1}, {-1, 0}, {1, -1}, {0, 0}, {1, 1}, {1, 0}, {-1, 1}, {0, -1}};
    for (auto i : all_interactions)
        for (Bit x : {Bit{0}, Bit{1}}) {
            auto y = apply(i, x);
            int want = expected[static_cast<int>(i)][x];
            INFO(name(i) << " at " << int(x));
            if (want < 0) CHECK_FALSE(y.has_value());
            else CHECK(y == std::optional<Bit>(static_cast<Bit>(want)));
        }
    CHECK(apply(I::inp, 1) == std::optional<Bit>(0));
    CHECK_FALSE(apply(I::inp, 0));
    CHECK(apply(I::swap, 0) == std::optional<Bit>(1));
}

TEST_CASE("type spec parsing") {
    CHECK(BooleanType::parse("nop,inp") == BooleanType{I::nop, I::inp});
    CHECK(BooleanType::parse("NOP,Swap") == BooleanType{I::nop, I::swap});
    CHECK(BooleanType::parse("").empty());
    CHECK_THROWS_AS(BooleanType::parse("nop,nop"), InvalidTypeSpec);
    CHECK_THROWS_AS(BooleanType::parse("nop,bogus"), UnknownInteractionName);
    CHECK(BooleanType::parse("free,nop").to_string() == "nop,free");
}

TEST_CASE("validate_ts") {
    auto ts = make_ts("t0", {{"t0", "a", "t1"}});
    CHECK(ts.num_states() == 2);
    CHECK(ts.loop_free());
    CHECK_FALSE(ts.bi_directed());

    CHECK_THROWS_AS(make_ts("t0", {{"t0", "a", "t1"}, {"t0", "a", "t2"}}), NondeterministicEdge);
    try {
        make_ts("t0", {{"t0", "a", "t1"}, {"t2", "b", "t1"}});
        FAIL("expected UnreachableState");
    } catch (const UnreachableState& e) {
        CHECK(e.states() == std::vector<std::string>{"t2"});
    }
    CHECK(make_ts("q", {}).num_states() == 1);
    CHECK(a1().bi_directed());
}

TEST_CASE("is_region on the small fixtures") {
    auto ts = a2();
    const BooleanType tau{I::nop, I::inp};
    CHECK(is_region(ts, tau, {{"r0", 1}, {"r1", 0}}, {{"b", I::inp}, {"c", I::inp}}));
    CHECK_FALSE(is_region(ts, tau, {{"r0", 1}, {"r1", 0}}, {{"b", I::nop}, {"c", I::inp}}));
    CHECK_THROWS_AS(is_region(ts, tau, {{"r0", 1}}, {{"b", I::inp}, {"c", I::inp}}), PartialAssignment);

    auto t3 = a3();
    CHECK(is_region(t3, tilde, {{"s0", 1}, {"s1", 1}, {"s2", 0}, {"s3", 1}},
                    {{"a", I::used}, {"b", I::swap}, {"c", I::set}}));
}

TEST_CASE("propagate_region") {
    auto t3 = a3();
    auto r = propagate_region(t3, tilde, 1, {I::used, I::swap, I::set});
    REQUIRE(r);
    CHECK(r->sup == std::vector<Bit>{1, 1, 0, 1});
    CHECK(is_region(t3, tilde, *r));

    auto z = propagate_region(t3, tilde, 0, {I::nop, I::nop, I::nop});
    REQUIRE(z);
    CHECK(z->sup == std::vector<Bit>{0, 0, 0, 0});

    CHECK_FALSE(propagate_region(a1(), BooleanType{I::nop, I::inp}, 1, {I::inp}));
}

TEST_CASE("propagation reconstructs every region") {
    Rng rng(3);
    for (int k = 0; k < 100; ++k) {
        auto ts = random_ts(rng, {.max_states = 5, .max_events = 3});
        auto tau = random_type(rng);
        for (const auto& r : brute_force_regions(ts, tau).expand()) {
            auto p = propagate_region(ts, tau, r.sup[ts.initial()], r.sig);
            REQUIRE(p);
            CHECK(*p == r);
        }
    }
}

TEST_CASE("image_of_path") {
    auto t3 = a3();
    auto r = *propagate_region(t3, tilde, 1, {I::used, I::swap, I::set});
    auto img = image_of_path(t3, r, t3.edges());
    CHECK(img.to_string() == "1-used->1-swap->0-set->1");
    CHECK(img.state_changing == std::vector<bool>{false, true, true});

    auto empty = image_of_path(t3, r, {});
    CHECK(empty.bits == std::vector<Bit>{1});

    std::vector<Edge> broken{t3.edges()[0], t3.edges()[2]};
    CHECK_THROWS_AS(image_of_path(t3, r, broken), DisconnectedPath);
}

TEST_CASE("normalize_region") {
    auto t3 = a3();
    auto r = *propagate_region(t3, tilde, 1, {I::used, I::swap, I::set});
    auto n = normalize_region(t3, tilde, r);
    CHECK(n.sup == r.sup);
    CHECK(n.sig == std::vector<Interaction>{I::nop, I::swap, I::set});
    CHECK(is_normalized(t3, n));
    CHECK(normalize_region(t3, tilde, n) == n);
    CHECK_THROWS_AS(normalize_region(t3, BooleanType{I::set, I::swap, I::used}, r), NopNotInType);
}

TEST_CASE("normalization properties on random regions") {
    Rng rng(11);
    for (int k = 0; k < 60; ++k) {
        auto ts = random_ts(rng, {.max_states = 5, .max_events = 3});
        auto tau = random_type(rng) | BooleanType{I::nop};
        for (const auto& r : brute_force_regions(ts, tau).expand()) {
            auto n = normalize_region(ts, tau, r);
            REQUIRE(is_region(ts, tau, n));
            CHECK(n.sup == r.sup);
            for (auto i : n.sig) CHECK((i != I::used && i != I::free));
            auto constant = support_constant_events(ts, n);
            for (EventId e = 0; e < ts.num_events(); ++e)
                if (n.sig[e] != I::nop) CHECK_FALSE(constant[e]);
            CHECK(normalize_region(ts, tau, n) == n);
        }
    }
}

TEST_CASE("regions of bi-directed systems") {
    auto f = all_subsets_formula();
    auto ts = gen_nop_free(f).ts;
    REQUIRE(ts.bi_directed());
    Rng rng(5);
    // random spikes and the alpha-style regions from a satisfiable instance
    auto g = gen_nop_free(example1_formula());
    auto wit = gen_nop_free_witness(example1_formula(), parse_model(example1_formula(), "X0,X4"), g.ts);
    for (const auto& nr : wit) {
        for (EventId e = 0; e < g.ts.num_events(); ++e) {
            auto sig = nr.region.sig[e];
            CHECK((sig != I::inp && sig != I::out));
            if (groups::save.contains(sig))
                for (auto idx : g.ts.edges_of(e)) {
                    const auto& edge = g.ts.edges()[idx];
                    CHECK(nr.region.sup[edge.src] == nr.region.sup[edge.dst]);
                }
        }
    }
}

TEST_CASE("text and JSON formats round-trip") {
    auto text = "# comment\ninitial s0\ns0 a s1   # trailing\n\ns1 a s0\n";
    auto ts = parse_ts(std::string(text));
    CHECK(ts == a1());
    CHECK(parse_ts(serialize_ts(ts)) == ts);
    CHECK(parse_ts_json(ts_to_json(ts).dump()) == ts);

    auto big = gen_nop_free(example1_formula()).ts;
    CHECK(parse_ts(serialize_ts(big)) == big);

    auto primed = parse_ts(std::string("initial x'\nx' e.1 y-2\n"));
    CHECK(primed.num_states() == 2);
}

TEST_CASE("parse errors carry line numbers") {
    auto line_of = [](const std::string& text) {
        try {
            parse_ts(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("s0 a s1\n") == 1);
    CHECK(line_of("initial s0\ns0 a\n") == 2);
    CHECK(line_of("initial s0\n# c\ns0 a s#1\ns0 b s1 x\n") == 4);
    CHECK(line_of("initial s0\ns0 a s1\ninitial s1\n") == 3);
    CHECK(line_of("initial s0\ns0 \xE2\x8A\xA4 s1\n") == 2);
    CHECK_THROWS_AS(parse_ts(std::string("initial s0\ns0 a s1\ns0 a s2\n")), NondeterministicEdge);
    CHECK_THROWS_AS(parse_ts_json("{\"edges\": []}"), ParseError);
}
