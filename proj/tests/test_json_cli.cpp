#include <cmath>

#include "doctest.h"
#include "horo/json_io.hpp"
#include "horo/sampling.hpp"

using namespace horo;

namespace {

Space random_space(SplitMix64& g) {
    switch (g.uniform_int(0, 6)) {
        case 0: return Space::real_line();
        case 1: return Space::sup_rn(g.uniform_int(1, 4));
        case 2: return Space::disc();
        case 3: return Space::ball(g.uniform_int(1, 3));
        case 4: return Space::polydisc(g.uniform_int(1, 3));
        case 5: return Space::star_graph();
        default:
            return Space::product({Space::disc(), Space::ball(2)});
    }
}

bool points_identical(const Point& a, const Point& b);

bool points_identical(const Point& a, const Point& b) {
    if (a.payload.index() != b.payload.index()) return false;
    return std::visit(
        [&](const auto& pa) -> bool {
            using T = std::decay_t<decltype(pa)>;
            const T& pb = std::get<T>(b.payload);
            if constexpr (std::is_same_v<T, double>) {
                return pa == pb;
            } else if constexpr (std::is_same_v<T, rvec>) {
                return pa == pb;
            } else if constexpr (std::is_same_v<T, complexd>) {
                return pa == pb;
            } else if constexpr (std::is_same_v<T, cvec>) {
                return pa == pb;
            } else if constexpr (std::is_same_v<T, StarPoint>) {
                return pa.edge == pb.edge && pa.offset == pb.offset;
            } else {
                if (pa.size() != pb.size()) return false;
                for (size_t i = 0; i < pa.size(); ++i)
                    if (!points_identical(pa[i], pb[i])) return false;
                return true;
            }
        },
        a.payload);
}

}  // namespace

TEST_CASE("space and point JSON round trips are lossless") {
    SplitMix64 g(321);
    for (int i = 0; i < 300; ++i) {
        Space sp = random_space(g);
        Space back = space_from_json(space_to_json(sp));
        CHECK(back.same_shape(sp));
        Point x = sample_point(sp, g);
        Point px = point_from_json(sp, point_to_json(x));
        CHECK(points_identical(x, px));
        // doubles survive a dump/parse cycle bit-for-bit
        Point qx = point_from_json(sp, json::parse(dump_json(point_to_json(x))));
        CHECK(points_identical(x, qx));
    }
}

TEST_CASE("the documented product descriptor parses") {
    Space sp = space_from_json(
        json::parse(R"({"kind":"product","factors":[{"kind":"disc"},{"kind":"ball","n":2}]})"));
    CHECK(sp.kind() == SpaceKind::product);
    CHECK(sp.dim() == 2);
    CHECK(sp.factors()[1].kind() == SpaceKind::ball);
    CHECK(sp.factors()[1].dim() == 2);
}

TEST_CASE("horofunction JSON round trips") {
    const Space ball2 = Space::ball(2);
    Horofunction h = ball_boundary(ball2, cvec{{0.6, 0.0}, {0.0, 0.8}});
    Horofunction back = horofunction_from_json(horofunction_to_json(h));
    SplitMix64 g(322);
    for (int i = 0; i < 100; ++i) {
        Point x = sample_point(ball2, g);
        CHECK(evaluate(h, x) == evaluate(back, x));
    }

    const Space prod = Space::product({Space::disc(), Space::disc()});
    Horofunction comp = product_composite(
        prod, {0, 1},
        {disc_boundary(Space::disc(), complexd(1, 0)), disc_boundary(Space::disc(), complexd(0, 1))},
        {0.0, 1.25});
    Horofunction comp_back = horofunction_from_json(horofunction_to_json(comp));
    for (int i = 0; i < 100; ++i) {
        Point x = sample_point(prod, g);
        CHECK(evaluate(comp, x) == evaluate(comp_back, x));
    }

    const Space sup = Space::sup_rn(3);
    Horofunction hs = sup_sign(sup, {0, 2}, {+1, -1}, {0.5, 0.0});
    Horofunction hs_back = horofunction_from_json(horofunction_to_json(hs));
    for (int i = 0; i < 100; ++i) {
        Point x = sample_point(sup, g);
        CHECK(evaluate(hs, x) == evaluate(hs_back, x));
    }

    // rebased horofunctions keep their basepoint across the wire
    Horofunction hr = rebase(h, Point(cvec{{0.1, 0.2}, {-0.3, 0.0}}));
    Horofunction hr_back = horofunction_from_json(horofunction_to_json(hr));
    CHECK(std::fabs(evaluate(hr_back, hr.basepoint)) <= 1e-15);
}

TEST_CASE("malformed input is rejected as a parse error") {
    CHECK_THROWS_AS(space_from_json(json::parse(R"({"kind":"torus"})")), error);
    CHECK_THROWS_AS(space_from_json(json::parse(R"({"n": 2})")), error);
    CHECK_THROWS_AS(point_from_json(Space::ball(2), json::parse("3.5")), error);
    try {
        space_from_json(json::parse(R"({"kind":"torus"})"));
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == errc::parse_error);
    }
}

TEST_CASE("detour values and reports serialise") {
    DetourValue fin;
    fin.kind = DetourValue::Kind::finite;
    fin.value = 3.0;
    json jf = detour_value_to_json(fin);
    CHECK(jf.contains("finite"));
    CHECK(jf["finite"].get<double>() == 3.0);

    DetourValue exc;
    exc.kind = DetourValue::Kind::exceeds_cutoff;
    exc.cutoff = 20.0;
    exc.at_index = 10;
    json je = detour_value_to_json(exc);
    CHECK(je["exceeds_cutoff"]["M"].get<double>() == 20.0);
    CHECK(je["exceeds_cutoff"]["at_n"].get<int>() == 10);
}

TEST_CASE("horoball level sets are circles tangent at the boundary point") {
    // centre xi / (1 + e^r), radius e^r / (1 + e^r); every sampled point of the
    // level set evaluates back to r
    const Space disc = Space::disc();
    SplitMix64 g(323);
    for (int rep = 0; rep < 10; ++rep) {
        complexd xi = sample_unit_complex(g);
        double r = g.range(-1.5, 1.5);
        Horofunction h = disc_boundary(disc, xi);
        double er = std::exp(r);
        double cc = 1.0 / (1.0 + er), rr = er / (1.0 + er);
        for (int i = 1; i < 16; ++i) {
            double t = 6.283185307179586 * i / 16;
            complexd z = xi * (cc + rr * std::polar(1.0, t));
            if (std::abs(z) >= 1.0 - 1e-6) continue;
            CHECK(std::fabs(evaluate(h, Point(z)) - r) <= 1e-11);
        }
    }
}
