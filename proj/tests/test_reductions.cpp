#include <catch_amalgamated.hpp>

#include <set>

#include "ssp/ssp.hpp"

using namespace ssp;
using I = Interaction;

namespace {

const BooleanType nop_inp{I::nop, I::inp};

std::vector<Region> plain(const std::vector<NamedRegion>& rs) {
    std::vector<Region> out;
    for (const auto& r : rs) out.push_back(r.region);
    return out;
}

} // namespace

TEST_CASE("cm_validate") {
    CHECK(example1_formula().clauses.size() == 6);
    CHECK(all_subsets_formula().clauses.size() == 4);
    CHECK_THROWS_AS(cm_validate(std::vector<std::array<int, 3>>{{0, 1, 2}}), OccurrenceNotThree);
    CHECK_THROWS_AS(parse_formula(std::string("X0 X1\n")), ParseError);
}

TEST_CASE("cm_oracle") {
    auto f = example1_formula();
    auto m = cm_oracle(f);
    REQUIRE(m);
    CHECK(model_to_string(f, *m) == "X0 X4");
    CHECK_FALSE(cm_oracle(all_subsets_formula()));

    // a renamed copy keeps its model
    auto renamed = parse_formula(std::string("X0' X1' X2'\nX0' X2' X3'\nX0' X1' X3'\n"
                                             "X2' X4' X5'\nX1' X4' X5'\nX3' X4' X5'\n"));
    auto mr = cm_oracle(renamed);
    REQUIRE(mr);
    CHECK(model_to_string(renamed, *mr) == "X0' X4'");

    // against subset enumeration on a seeded corpus
    Rng rng(17);
    for (int k = 0; k < 40; ++k) {
        auto g = random_cm_formula(rng, 4 + k % 5);
        bool any = false;
        const auto n = g.variables.size();
        for (std::uint32_t mask = 0; mask < (1u << n) && !any; ++mask) {
            Model mm;
            for (std::size_t v = 0; v < n; ++v)
                if (mask >> v & 1) mm.push_back(static_cast<int>(v));
            any = is_one_in_three(g, mm);
        }
        auto o = cm_oracle(g);
        CHECK(o.has_value() == any);
        if (o) CHECK(is_one_in_three(g, *o));
    }
}

TEST_CASE("nop-inp generator sizes") {
    auto g = gen_nop_inp(example1_formula());
    CHECK(g.ts.num_states() == 45);
    CHECK(g.ts.num_events() == 26);
    CHECK(g.ts.num_edges() == 50);
    CHECK(g.key_atom == std::make_pair(std::string("t_6_0"), std::string("t_7_0")));
    CHECK(g.ts.loop_free());

    auto h = gen_nop_inp(all_subsets_formula());
    CHECK(h.ts.num_states() == 31);
    CHECK(h.ts.num_events() == 18);
    CHECK(h.ts.num_edges() == 34);
}

TEST_CASE("nop-inp decisions follow the formula") {
    auto g = gen_nop_inp(example1_formula());
    CHECK(decide_ssp(g.ts, nop_inp).decision == Decision::HasSSP);

    auto h = gen_nop_inp(all_subsets_formula());
    CHECK(solve_atom(h.ts, nop_inp, h.alpha()).status == AtomStatus::Unsolvable);
    CHECK(decide_ssp(h.ts, nop_inp).decision == Decision::LacksSSP);
}

TEST_CASE("nop-inp witness family") {
    auto f = example1_formula();
    auto g = gen_nop_inp(f);
    auto wit = gen_nop_inp_witness(f, parse_model(f, "X0,X4"));
    CHECK(wit.size() == 20);
    for (const auto& nr : wit) {
        INFO(nr.name);
        CHECK(is_region(g.ts, nop_inp, nr.region));
    }
    CHECK(is_separative(g.ts, plain(wit)));

    auto rm = std::find_if(wit.begin(), wit.end(), [](const NamedRegion& r) { return r.name == "R_M"; });
    REQUIRE(rm != wit.end());
    for (EventId e = 0; e < g.ts.num_events(); ++e) {
        const auto& name = g.ts.event_name(e);
        bool inp = name == "k" || name == "X0" || name == "X4";
        CHECK(rm->region.sig[e] == (inp ? I::inp : I::nop));
    }
    CHECK(rm->region.sup[g.ts.state("t_0_0")] == 1);

    CHECK_THROWS_AS(gen_nop_inp_witness(f, parse_model(f, "X0,X1")), ModelNotOneInThree);
}

TEST_CASE("nop-free generator sizes") {
    auto g = gen_nop_free(example1_formula());
    CHECK(g.ts.num_states() == 1129);
    CHECK(g.ts.num_events() == 470);
    CHECK(g.ts.num_edges() == 2256);
    CHECK(g.ts.bi_directed());
    CHECK(g.key_atom == std::make_pair(std::string("g_0_2"), std::string("g_0_4")));

    auto h = gen_nop_free(all_subsets_formula());
    CHECK(h.ts.num_states() == 753);
}

TEST_CASE("nop-free alpha region and transport") {
    auto f = example1_formula();
    auto g = gen_nop_free(f);
    auto model = parse_model(f, "X0,X4");
    auto r = gen_nop_free_alpha_region(f, model, g.ts);
    CHECK(is_region(g.ts, swap_free_type, r));
    CHECK(r.separates(g.alpha().first, g.alpha().second));
    CHECK(check_gadget_facts(f, g.ts, r).all());

    const BooleanType swap_used{I::swap, I::used}, res_swap{I::res, I::swap}, set_swap{I::set, I::swap};
    for (auto target : {swap_used, res_swap, set_swap}) {
        auto t = transport_swap_free(r, target);
        CHECK(is_region(g.ts, target, t));
        CHECK(t.separates(g.alpha().first, g.alpha().second));
    }
    CHECK_THROWS_AS(transport_swap_free(r, nop_inp), WrongTypeFamily);
}

TEST_CASE("nop-free alpha is unsolvable without a model") {
    auto h = gen_nop_free(all_subsets_formula());
    auto v = solve_atom(h.ts, swap_free_type, h.alpha());
    CHECK(v.status == AtomStatus::Unsolvable);
}

TEST_CASE("nop-free witness family") {
    auto f = example1_formula();
    auto g = gen_nop_free(f);
    auto wit = gen_nop_free_witness(f, parse_model(f, "X0,X4"), g.ts);
    CHECK(wit.size() == 356);
    for (const auto& nr : wit) {
        INFO(nr.name);
        CHECK(is_region(g.ts, swap_free_type, nr.region));
    }
    CHECK(is_separative(g.ts, plain(wit)));
}

TEST_CASE("extensions of a single edge") {
    auto ts = make_ts("q0", {{"q0", "a", "q1"}});
    auto b = extend(ts, ExtensionKind::Backward);
    CHECK(serialize_ts(b) == "initial q0\nq0 a q1\nq1 bar_a q0\n");
    auto c = extend(ts, ExtensionKind::OnewayLoop);
    CHECK(serialize_ts(c) == "initial q0\nq0 a q1\nq1 a q1\nq1 bar_a q0\n");
    auto d = extend(ts, ExtensionKind::Loop);
    CHECK(d.num_edges() == 4);
    CHECK(d.has_edge(d.state("q0"), d.event("bar_a"), d.state("q0")));

    auto single = extend(make_ts("q", {}), ExtensionKind::Loop);
    CHECK(single.num_states() == 1);
    CHECK(single.num_edges() == 0);

    CHECK_THROWS_AS(extend(make_ts("q", {{"q", "a", "q"}}), ExtensionKind::Backward), NotLoopFree);
    auto clash = make_ts("q0", {{"q0", "a", "q1"}, {"q0", "bar_a", "q2"}});
    CHECK(barred_names(clash).at("a") == "bar_a'");
}

TEST_CASE("extension equivalences at support level") {
    Rng rng(8);
    RandomTsOptions ro;
    ro.loop_free = true;
    ro.extension_safe = true;
    const BooleanType ioo{I::nop, I::inp, I::out}, nor{I::nop, I::out, I::res}, nrs{I::nop, I::res, I::set},
        nrw{I::nop, I::res, I::swap};
    for (int k = 0; k < 30; ++k) {
        auto a = random_ts(rng, ro);
        auto b = extend(a, ExtensionKind::Backward);
        auto c = extend(a, ExtensionKind::OnewayLoop);
        auto d = extend(a, ExtensionKind::Loop);
        auto sa = brute_force_regions(a, ioo).supports();
        CHECK(sa == brute_force_regions(b, nor).supports());
        CHECK(sa == brute_force_regions(d, nrs).supports());
        CHECK(brute_force_regions(a, nop_inp).supports() == brute_force_regions(c, nrw).supports());
    }
}

TEST_CASE("reduction suites at small scale") {
    VerifyOptions opt;
    opt.scale = Scale::Small;
    opt.seed = 7;
    for (const auto& r : run_suite("reductions", opt)) {
        INFO(r.name << ": " << r.detail);
        CHECK(r.passed);
    }
}
