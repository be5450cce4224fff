#include <cmath>

#include "doctest.h"
#include "horo/detour.hpp"
#include "horo/json_io.hpp"
#include "horo/sampling.hpp"

using namespace horo;

TEST_CASE("variation norm") {
    std::vector<double> a{1.0, 0.0, -2.0};
    CHECK(variation_norm(a) == 3.0);
    std::vector<double> c{0.7, 0.7, 0.7, 0.7};
    CHECK(variation_norm(c) == 0.0);
    std::vector<double> u{0.0, 1.0}, v{5.0, 6.0};
    CHECK(variation_norm(u) == variation_norm(v));  // translation invariance
    std::vector<double> empty;
    CHECK_THROWS_AS(variation_norm(empty), error);
}

TEST_CASE("detour cost along radial witnesses") {
    const Space disc = Space::disc();
    Horofunction hplus = disc_boundary(disc, complexd(1, 0));
    Horofunction hminus = disc_boundary(disc, complexd(-1, 0));

    SUBCASE("self cost vanishes") {
        WitnessedBusemann w = witnessed(disc, hplus, 12);
        DetourValue v = detour_cost(disc, w, hplus, 20.0, 1e-6);
        REQUIRE(v.finite());
        CHECK(std::fabs(v.value) <= 1e-10);
    }

    SUBCASE("opposite boundary points diverge with u_n = 2n") {
        WitnessedBusemann w = witnessed(disc, hminus, 23);
        DetourValue v = detour_cost(disc, w, hplus, 20.0, 1e-6);
        REQUIRE(v.exceeded());
        CHECK(v.cutoff == 20.0);
        CHECK(v.at_index >= 10);
        CHECK(v.at_index <= 11);
    }

    SUBCASE("witness and target must share a basepoint") {
        WitnessedBusemann w = witnessed(disc, hplus, 12);
        Horofunction moved = rebase(hplus, Point(complexd(0.3, 0)));
        CHECK_THROWS_AS(detour_cost(disc, w, moved, 20.0, 1e-6), error);
    }
}

TEST_CASE("detour distance separates and vanishes on the diagonal") {
    const Space ball2 = Space::ball(2);
    SplitMix64 g(91);
    cvec xi = sample_unit_cvec(2, g);
    cvec eta = sample_unit_cvec(2, g);
    WitnessedBusemann wx = witnessed(ball2, ball_boundary(ball2, xi), 12);
    WitnessedBusemann wx2 = witnessed(ball2, ball_boundary(ball2, xi), 12);
    DetourValue self = detour_distance(ball2, wx, wx2, 20.0, 1e-6);
    REQUIRE(self.finite());
    CHECK(std::fabs(self.value) <= 1e-9);

    WitnessedBusemann we = witnessed(ball2, ball_boundary(ball2, eta), 24);
    WitnessedBusemann wl = witnessed(ball2, ball_boundary(ball2, xi), 24);
    DetourValue split = detour_distance(ball2, wl, we, 20.0, 1e-6);
    CHECK(split.exceeded());
}

TEST_CASE("product busemann construction") {
    const Space prod = Space::product({Space::disc(), Space::disc()});
    std::vector<std::optional<Path>> rays(2);
    rays[0] = boundary_ray(Space::disc(), BoundaryPoint{DiscDir{complexd(1, 0)}});
    rays[1] = boundary_ray(Space::disc(), BoundaryPoint{DiscDir{complexd(1, 0)}});

    SUBCASE("witness anchors sit at radii (n, n-1) for offsets (0, 1)") {
        WitnessedBusemann wb = product_busemann(prod, rays, {0.0, 1.0}, 15);
        REQUIRE(wb.witness.size() == 16);  // base point + n = 1..15
        for (int n = 1; n <= 15; ++n) {
            const PointTuple& z = wb.witness[static_cast<size_t>(n)].tuple();
            CHECK(std::fabs(z[0].cplx().real() - std::tanh(0.5 * n)) <= 1e-12);
            CHECK(std::fabs(z[1].cplx().real() - std::tanh(0.5 * (n - 1))) <= 1e-12);
        }
        CHECK(wb.witness_check.verdict);

        Decomposition d = decompose_product_horofunction(prod, wb.witness, 13.0, 1e-6);
        CHECK(d.J == std::vector<int>{0, 1});
        CHECK(std::fabs(d.alpha[0] - 0.0) <= 1e-6);
        CHECK(std::fabs(d.alpha[1] - 1.0) <= 1e-6);
    }

    SUBCASE("factors off J stay pinned and are ignored by the composite") {
        std::vector<std::optional<Path>> one(2);
        one[0] = boundary_ray(Space::disc(), BoundaryPoint{DiscDir{complexd(1, 0)}});
        WitnessedBusemann wb = product_busemann(prod, one, {0.0}, 12);
        for (const Point& z : wb.witness) CHECK(std::abs(z.tuple()[1].cplx()) == 0.0);
        SplitMix64 g(92);
        for (int i = 0; i < 50; ++i) {
            Point x = sample_point(prod, g);
            PointTuple moved = x.tuple();
            moved[1] = sample_point(prod.factors()[1], g);
            CHECK(evaluate(wb.h, x) == evaluate(wb.h, Point(moved)));
        }
    }

    SUBCASE("equal offsets give equal coordinate radii on mixed factors") {
        const Space mixed = Space::product({Space::ball(2), Space::disc()});
        std::vector<std::optional<Path>> mrays(2);
        SplitMix64 g(93);
        mrays[0] = boundary_ray(mixed.factors()[0], BoundaryPoint{BallDir{sample_unit_cvec(2, g)}});
        mrays[1] = boundary_ray(mixed.factors()[1], BoundaryPoint{DiscDir{sample_unit_complex(g)}});
        WitnessedBusemann wb = product_busemann(mixed, mrays, {0.0, 0.0}, 12);
        const Point& y0 = wb.witness.front();
        for (size_t n = 1; n < wb.witness.size(); ++n) {
            double d0 = distance(mixed.factors()[0], wb.witness[n].tuple()[0], y0.tuple()[0]);
            double d1 = distance(mixed.factors()[1], wb.witness[n].tuple()[1], y0.tuple()[1]);
            CHECK(std::fabs(d0 - d1) <= 1e-10);
        }
    }

    SUBCASE("gauge violations are rejected") {
        CHECK_THROWS_AS(product_busemann(prod, rays, {0.5, 1.0}, 12), error);
        try {
            product_busemann(prod, rays, {0.5, 1.0}, 12);
        } catch (const error& e) {
            CHECK(e.code() == errc::gauge_violation);
        }
    }
}

TEST_CASE("detour distance realises the variation norm on a part") {
    const Space prod = Space::product({Space::disc(), Space::disc()});
    std::vector<std::optional<Path>> rays(2);
    rays[0] = boundary_ray(Space::disc(), BoundaryPoint{DiscDir{complexd(1, 0)}});
    rays[1] = boundary_ray(Space::disc(), BoundaryPoint{DiscDir{complexd(0, 1)}});

    WitnessedBusemann wa = product_busemann(prod, rays, {0.0, 2.0}, 15);
    WitnessedBusemann wb = product_busemann(prod, rays, {1.0, 0.0}, 15);
    DetourValue d = detour_distance(prod, wa, wb, 20.0, 1e-6);
    REQUIRE(d.finite());
    CHECK(std::fabs(d.value - 3.0) <= 1e-5);  // ||(0,2) - (1,0)||_var = 1 + 2

    // symmetry of the two evaluation orders
    DetourValue r = detour_distance(prod, wb, wa, 20.0, 1e-6);
    REQUIRE(r.finite());
    CHECK(std::fabs(d.value - r.value) <= 2e-6);

    // triangle inequality within the part
    WitnessedBusemann wc = product_busemann(prod, rays, {0.0, 0.5}, 15);
    DetourValue ac = detour_distance(prod, wa, wc, 20.0, 1e-6);
    DetourValue cb = detour_distance(prod, wc, wb, 20.0, 1e-6);
    REQUIRE(ac.finite());
    REQUIRE(cb.finite());
    CHECK(d.value <= ac.value + cb.value + 1e-5);
}

TEST_CASE("detour distance is basepoint independent") {
    const Space prod = Space::product({Space::disc(), Space::disc()});
    std::vector<std::optional<Path>> rays(2);
    rays[0] = boundary_ray(Space::disc(), BoundaryPoint{DiscDir{complexd(1, 0)}});
    rays[1] = boundary_ray(Space::disc(), BoundaryPoint{DiscDir{complexd(0, 1)}});
    WitnessedBusemann wa = product_busemann(prod, rays, {0.0, 1.5}, 15);
    WitnessedBusemann wb = product_busemann(prod, rays, {0.75, 0.0}, 15);
    DetourValue d0 = detour_distance(prod, wa, wb, 20.0, 1e-6);
    REQUIRE(d0.finite());

    Point y0{PointTuple{Point(complexd(0.25, -0.1)), Point(complexd(-0.15, 0.3))}};
    WitnessedBusemann ra{rebase(wa.h, y0), wa.witness, wa.witness_check};
    WitnessedBusemann rb{rebase(wb.h, y0), wb.witness, wb.witness_check};
    DetourValue d1 = detour_distance(prod, ra, rb, 40.0, 1e-4);
    REQUIRE(d1.finite());
    CHECK(std::fabs(d0.value - d1.value) <= 2e-6);
}

TEST_CASE("part keys and dimensions") {
    const Space ball3 = Space::ball(3);
    Horofunction hb = ball_boundary(ball3, cvec{{1, 0}, {0, 0}, {0, 0}});
    CHECK(part_dimension(hb) == 0);

    const Space prod3 = Space::product({Space::disc(), Space::disc(), Space::disc()});
    Horofunction f = disc_boundary(Space::disc(), complexd(1, 0));
    Horofunction comp = product_composite(prod3, {0, 1, 2}, {f, f, f}, {0.0, 1.0, 2.0});
    CHECK(part_dimension(comp) == 2);

    const Space sup = Space::sup_rn(2);
    CHECK(part_dimension(sup_sign(sup, {0}, {+1}, {0.0})) == 0);

    CHECK_THROWS_AS(part_key(internal_peak(ball3, ball3.basepoint())), error);

    // keys compare J exactly and directions within 1e-9, offsets included
    Horofunction comp2 = product_composite(prod3, {0, 1, 2}, {f, f, f}, {0.0, 1.0, 2.0});
    CHECK(part_equal(part_key(comp), part_key(comp2)));
    Horofunction g = disc_boundary(Space::disc(), complexd(0, 1));
    Horofunction comp3 = product_composite(prod3, {0, 1, 2}, {f, f, g}, {0.0, 1.0, 2.0});
    CHECK_FALSE(part_equal(part_key(comp), part_key(comp3)));
    Horofunction comp4 = product_composite(prod3, {0, 1}, {f, f}, {0.0, 1.0});
    CHECK_FALSE(part_equal(part_key(comp), part_key(comp4)));
}

TEST_CASE("part keys match finite detour distances on samples") {
    const Space prod = Space::product({Space::disc(), Space::disc()});
    std::vector<std::optional<Path>> rays(2);
    rays[0] = boundary_ray(Space::disc(), BoundaryPoint{DiscDir{complexd(1, 0)}});
    rays[1] = boundary_ray(Space::disc(), BoundaryPoint{DiscDir{complexd(0, 1)}});
    WitnessedBusemann a = product_busemann(prod, rays, {0.0, 1.0}, 15);
    WitnessedBusemann b = product_busemann(prod, rays, {0.5, 0.0}, 15);
    CHECK(part_equal(part_key(a.h), part_key(b.h)));
    CHECK(detour_distance(prod, a, b, 20.0, 1e-6).finite());

    std::vector<std::optional<Path>> other(2);
    other[0] = boundary_ray(Space::disc(), BoundaryPoint{DiscDir{complexd(-1, 0)}});
    other[1] = boundary_ray(Space::disc(), BoundaryPoint{DiscDir{complexd(0, 1)}});
    WitnessedBusemann c = product_busemann(prod, other, {0.0, 0.0}, 23);
    CHECK_FALSE(part_equal(part_key(a.h), part_key(c.h)));
    CHECK(detour_distance(prod, a, c, 20.0, 1e-6).exceeded());
}

TEST_CASE("embedding transports") {
    const Space disc = Space::disc();
    Horofunction h = disc_boundary(disc, complexd(1, 0));
    WitnessedBusemann w = witnessed(disc, h, 15);

    SUBCASE("identity is a fixed point") {
        WitnessedBusemann t = transport_under_embedding(IdentityMap{}, disc, w);
        CHECK(part_equal(part_key(t.h), part_key(h)));
    }

    SUBCASE("diagonal embedding produces the offset-free composite") {
        WitnessedBusemann t = transport_under_embedding(DiagonalEmbedding{2}, disc, w);
        const auto& pc = std::get<ProductComposite>(t.h.form);
        CHECK(pc.J == std::vector<int>{0, 1});
        CHECK(pc.alpha == std::vector<double>{0.0, 0.0});
        // decompose the pushed witness as an oracle
        Space target = embedding_target(DiagonalEmbedding{2}, disc);
        Decomposition d = decompose_product_horofunction(target, t.witness, 13.0, 1e-6);
        CHECK(d.J == std::vector<int>{0, 1});
        CHECK(std::fabs(d.alpha[0]) <= 1e-6);
        CHECK(std::fabs(d.alpha[1]) <= 1e-6);
    }

    SUBCASE("unitary maps move the boundary direction") {
        const Space ball2 = Space::ball(2);
        SplitMix64 g(94);
        cvec xi = sample_unit_cvec(2, g);
        WitnessedBusemann wb = witnessed(ball2, ball_boundary(ball2, xi), 15);
        UnitaryMap u{{cvec{{0, 0}, {1, 0}}, cvec{{1, 0}, {0, 0}}}};  // swap coordinates
        WitnessedBusemann t = transport_under_embedding(u, ball2, wb);
        const auto& bbf = std::get<BallBoundary>(t.h.form);
        CHECK(std::abs(bbf.xi[0] - xi[1]) <= 1e-12);
        CHECK(std::abs(bbf.xi[1] - xi[0]) <= 1e-12);
        for (int i = 0; i < 100; ++i) {
            Point x = sample_point(ball2, g);
            Point ux = apply_embedding(u, ball2, x);
            CHECK(std::fabs(evaluate(t.h, ux) - evaluate(wb.h, x)) <= 1e-10);
        }
    }

    SUBCASE("mobius automorphisms relocate the basepoint") {
        MobiusDisc m{complexd(0.3, -0.2), 0.7};
        WitnessedBusemann t = transport_under_embedding(m, disc, w);
        Point new_base = apply_embedding(m, disc, disc.basepoint());
        CHECK(std::fabs(evaluate(t.h, new_base)) <= 1e-12);
        // transported limit agrees with the estimate along the pushed witness
        // (the sequence estimate is normalised at the space basepoint, the
        // transported horofunction at phi(b); renormalise before comparing)
        SplitMix64 g(95);
        for (int i = 0; i < 20; ++i) {
            Point z = sample_point(disc, g, 0.7);
            LimitEstimate e = horofunction_limit_estimate(disc, t.witness, z);
            double renorm = evaluate(t.h, z) - evaluate(t.h, disc.basepoint());
            CHECK(std::fabs(e.value - renorm) <= 1e-5);
        }
    }

    SUBCASE("factor inclusion pins the remaining slots") {
        Space target = Space::product({Space::disc(), Space::disc()});
        FactorInclusion f{target, 0, {Point(complexd(0.2, 0.1))}};
        WitnessedBusemann t = transport_under_embedding(f, disc, w);
        const auto& pc = std::get<ProductComposite>(t.h.form);
        CHECK(pc.J == std::vector<int>{0});
        CHECK(std::abs(t.witness.back().tuple()[1].cplx() - complexd(0.2, 0.1)) == 0.0);
    }

    SUBCASE("non-unitary matrices fail the probe") {
        const Space ball2 = Space::ball(2);
        SplitMix64 g(96);
        WitnessedBusemann wb =
            witnessed(ball2, ball_boundary(ball2, sample_unit_cvec(2, g)), 12);
        UnitaryMap bad{{cvec{{0.9, 0}, {0, 0}}, cvec{{0, 0}, {1, 0}}}};
        try {
            transport_under_embedding(bad, ball2, wb);
            CHECK(false);
        } catch (const error& e) {
            CHECK(e.code() == errc::not_isometric);
        }
    }
}

TEST_CASE("diagonal transport preserves detour distances") {
    const Space disc = Space::disc();
    SplitMix64 g(97);
    for (int i = 0; i < 10; ++i) {
        complexd xi = sample_unit_complex(g);
        complexd eta = (i % 3 == 0) ? xi : sample_unit_complex(g);
        WitnessedBusemann wx = witnessed(disc, disc_boundary(disc, xi), 18);
        WitnessedBusemann wy = witnessed(disc, disc_boundary(disc, eta), 18);
        DetourValue d0 = detour_distance(disc, wx, wy, 20.0, 1e-6);
        WitnessedBusemann tx = transport_under_embedding(DiagonalEmbedding{2}, disc, wx);
        WitnessedBusemann ty = transport_under_embedding(DiagonalEmbedding{2}, disc, wy);
        Space target = embedding_target(DiagonalEmbedding{2}, disc);
        DetourValue d1 = detour_distance(target, tx, ty, 20.0, 1e-6);
        if (d0.exceeded()) {
            CHECK(d1.exceeded());
        } else {
            REQUIRE(d0.finite());
            REQUIRE(d1.finite());
            CHECK(std::fabs(d0.value - d1.value) <= 2e-6);
        }
    }
}

TEST_CASE("the part metric depends on the offset difference only") {
    const Space prod = Space::product({Space::disc(), Space::disc()});
    std::vector<std::optional<Path>> rays(2);
    rays[0] = boundary_ray(Space::disc(), BoundaryPoint{DiscDir{complexd(1, 0)}});
    rays[1] = boundary_ray(Space::disc(), BoundaryPoint{DiscDir{complexd(0, 1)}});
    // (0,2) vs (1,0) and (0,1) vs (2,0): both differences lie on the same
    // Sp(1)-coset, so the detour distances coincide
    WitnessedBusemann a1 = product_busemann(prod, rays, {0.0, 2.0}, 15);
    WitnessedBusemann b1 = product_busemann(prod, rays, {1.0, 0.0}, 15);
    WitnessedBusemann a2 = product_busemann(prod, rays, {0.0, 1.0}, 15);
    WitnessedBusemann b2 = product_busemann(prod, rays, {2.0, 0.0}, 15);
    DetourValue d1 = detour_distance(prod, a1, b1, 20.0, 1e-6);
    DetourValue d2 = detour_distance(prod, a2, b2, 20.0, 1e-6);
    REQUIRE(d1.finite());
    REQUIRE(d2.finite());
    CHECK(std::fabs(d1.value - d2.value) <= 1e-9);
}

TEST_CASE("witness factory rebuilds rays for mixed composites") {
    const Space mixed = Space::product({Space::ball(2), Space::disc()});
    SplitMix64 g(98);
    Horofunction comp = product_composite(
        mixed, {0, 1},
        {ball_boundary(mixed.factors()[0], sample_unit_cvec(2, g)),
         disc_boundary(mixed.factors()[1], sample_unit_complex(g))},
        {0.0, 0.5});
    WitnessedBusemann wb = witnessed(mixed, comp, 12);
    CHECK(wb.witness_check.verdict);
    CHECK(detour_cost(mixed, wb, comp, 20.0, 1e-6).finite());
}

TEST_CASE("a window that neither stabilises nor escapes is undecided") {
    const Space disc = Space::disc();
    Horofunction h = disc_boundary(disc, complexd(1, 0));
    WitnessedBusemann w = witnessed(disc, h, 8);
    // against an internal peak the partials grow ~2 per step: no stabilisation,
    // and a huge cutoff is never crossed on the short window
    Horofunction peak = internal_peak(disc, Point(complexd(-0.5, 0)));
    DetourValue v = detour_cost(disc, w, peak, 1000.0, 1e-6);
    CHECK(v.undecided());
    json j = detour_value_to_json(v);
    CHECK(j.contains("undecided"));
}
