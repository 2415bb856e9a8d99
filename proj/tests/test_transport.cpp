#include "doctest.h"
#include "fixtures.hpp"
#include "uniserial/iso.hpp"

using namespace uniserial;
using fixtures::parse_fixture;

TEST_CASE("twin-tracks transport maps the punctured line onto the diagonal") {
    Presentation pres = parse_fixture(fixtures::kTwinTracks);
    Path p = parse_path(pres.quiver, fixtures::kTwinTracksMastP);
    Path q = parse_path(pres.quiver, fixtures::kTwinTracksMastQ);
    for (const char* a : {"1", "2", "-3", "1/5"}) {
        FieldElement av = pres.field.parse(a);
        Vector k{av, av.inverse()};
        auto out = transport_mast(pres, p, q, k);
        REQUIRE(out.has_value());
        CHECK(*out == Vector{av, av});

        // round trip back to the first mast
        auto back = transport_mast(pres, q, p, *out);
        REQUIRE(back.has_value());
        CHECK(*back == k);
    }
}

TEST_CASE("transport respects the variety ideals on both sides") {
    Presentation pres = parse_fixture(fixtures::kTwinTracks);
    Path p = parse_path(pres.quiver, fixtures::kTwinTracksMastP);
    Path q = parse_path(pres.quiver, fixtures::kTwinTracksMastQ);
    VarietyResult vq = variety_generators(pres, q);
    Vector k = fixtures::point(pres.field, {"2", "1/2"});
    auto out = transport_mast(pres, p, q, k);
    REQUIRE(out.has_value());
    CHECK(point_on_variety(vq.ideal, *out));
}

TEST_CASE("doubled-path transport detects the component outside the overlap") {
    Presentation pres = parse_fixture(fixtures::kDoubledPath);
    Path p = parse_path(pres.quiver, fixtures::kDoubledPathMastP);
    Path q = parse_path(pres.quiver, fixtures::kDoubledPathMastQ);
    VarietyResult vq = variety_generators(pres, q);

    // points with X2 = X5 = 0 carry modules without the first mast
    for (auto coords : {std::initializer_list<const char*>{"0", "0", "0", "0", "0"},
                        std::initializer_list<const char*>{"3", "0", "-1", "2", "0"},
                        std::initializer_list<const char*>{"1", "0", "5", "0", "0"}}) {
        Vector k = fixtures::point(pres.field, coords);
        REQUIRE(point_on_variety(vq.ideal, k));
        CHECK(!transport_mast(pres, q, p, k).has_value());
    }

    // a point on the other component transports both ways
    Vector shared = fixtures::point(pres.field, {"1", "1", "1", "1", "1"});
    auto to_p = transport_mast(pres, q, p, shared);
    REQUIRE(to_p.has_value());
    VarietyResult vp = variety_generators(pres, p);
    CHECK(point_on_variety(vp.ideal, *to_p));
    auto back = transport_mast(pres, p, q, *to_p);
    REQUIRE(back.has_value());
    CHECK(*back == shared);
}

TEST_CASE("masts with different vertex sequences are rejected") {
    Presentation pres = parse_fixture(fixtures::kLoopShuttle);
    Path p = parse_path(pres.quiver, fixtures::kLoopShuttleMast);
    Path other = parse_path(pres.quiver, "gamma*beta*alpha");
    Vector k = fixtures::point(pres.field, {"0", "0", "0", "0", "0"});
    CHECK_THROWS_AS(transport_mast(pres, p, other, k), ParseError);
}

TEST_CASE("detour bijection between parallel masts") {
    Presentation pres = parse_fixture(fixtures::kDoubledPath);
    Path p = parse_path(pres.quiver, fixtures::kDoubledPathMastP);
    Path q = parse_path(pres.quiver, fixtures::kDoubledPathMastQ);
    DetourBijection bij = detour_bijection(pres, p, q);

    DetourTable tp = enumerate_detours(pres, p);
    DetourTable tq = enumerate_detours(pres, q);
    REQUIRE(bij.detour_map.size() == tp.detours.size());
    REQUIRE(bij.variable_map.size() == tp.nvars);
    CHECK(tp.nvars == tq.nvars);

    for (size_t i = 0; i < tp.detours.size(); ++i) {
        const Detour& dp = tp.detours[i];
        const Detour& dq = tq.detours[bij.detour_map[i]];
        CHECK(dp.ulen == dq.ulen);
        CHECK(dp.target_lens == dq.target_lens);
        // at positions where the masts differ, the arrows swap roles
        int p_arrow = p.arrows[dp.ulen];
        int q_arrow = q.arrows[dq.ulen];
        if (p_arrow == q_arrow) {
            CHECK(dp.arrow == dq.arrow);
        } else {
            if (dp.arrow == q_arrow) CHECK(dq.arrow == p_arrow);
            else CHECK(dq.arrow == dp.arrow);
        }
    }

    // the variable map is a permutation
    std::vector<bool> seen(tp.nvars, false);
    for (unsigned v : bij.variable_map) {
        REQUIRE(v < tp.nvars);
        CHECK(!seen[v]);
        seen[v] = true;
    }
}

TEST_CASE("detour bijection is the identity for a mast against itself") {
    Presentation pres = parse_fixture(fixtures::kLoopShuttle);
    Path p = parse_path(pres.quiver, fixtures::kLoopShuttleMast);
    DetourBijection bij = detour_bijection(pres, p, p);
    for (size_t i = 0; i < bij.detour_map.size(); ++i) CHECK(bij.detour_map[i] == i);
    for (unsigned v = 0; v < bij.variable_map.size(); ++v) CHECK(bij.variable_map[v] == v);
}
