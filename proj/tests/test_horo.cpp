#include <cmath>

#include "doctest.h"
#include "horo/path.hpp"
#include "horo/sampling.hpp"

using namespace horo;

namespace {
constexpr double kLog3 = 1.0986122886681098;
constexpr double kLog43 = 0.2876820724517809;  // log(4/3)
}  // namespace

TEST_CASE("boundary horofunction closed forms") {
    const Space ball2 = Space::ball(2);
    Horofunction h = ball_boundary(ball2, cvec{{1, 0}, {0, 0}});
    CHECK(evaluate(h, Point(cvec{{0, 0}, {0.5, 0}})) == doctest::Approx(kLog43).epsilon(1e-14));
    CHECK(evaluate(h, Point(cvec{{0.5, 0}, {0, 0}})) == doctest::Approx(-kLog3).epsilon(1e-14));
    CHECK(evaluate(h, ball2.basepoint()) == 0.0);

    const Space disc = Space::disc();
    Horofunction hd = disc_boundary(disc, complexd(1, 0));
    CHECK(evaluate(hd, Point(complexd(0.5, 0))) == doctest::Approx(-kLog3).epsilon(1e-14));
    CHECK(evaluate(hd, disc.basepoint()) == 0.0);
}

TEST_CASE("internal peaks and sup sign forms") {
    const Space disc = Space::disc();
    Horofunction peak = internal_peak(disc, Point(complexd(0.5, 0)));
    CHECK(evaluate(peak, Point(complexd(0.5, 0))) == doctest::Approx(-kLog3).epsilon(1e-14));
    CHECK(evaluate(peak, disc.basepoint()) == 0.0);

    const Space sup = Space::sup_rn(2);
    Horofunction hs = sup_sign(sup, {0}, {+1}, {0.0});
    CHECK(evaluate(hs, Point(rvec{0.5, 7.0})) == 0.5);  // inactive coordinates are ignored
    CHECK_THROWS_AS(sup_sign(sup, {0, 1}, {+1, -1}, {0.5, 1.0}), error);  // gauge violated
}

TEST_CASE("horoball membership") {
    const Space ball2 = Space::ball(2);
    Horofunction h = ball_boundary(ball2, cvec{{1, 0}, {0, 0}});
    CHECK(horoball_contains(h, 0.0, Point(cvec{{0.5, 0}, {0, 0}})));
    CHECK_FALSE(horoball_contains(h, 0.0, ball2.basepoint()));

    const Space sup = Space::sup_rn(2);
    Horofunction hs = sup_sign(sup, {0}, {+1}, {0.0});
    CHECK(horoball_contains(hs, 1.0, Point(rvec{0.5, 7.0})));
}

TEST_CASE("horofunctions are 1-Lipschitz and vanish at the basepoint") {
    SplitMix64 g(44);
    const Space ball2 = Space::ball(2);
    const Space sup = Space::sup_rn(3);
    const Space prod = Space::product({Space::disc(), Space::disc()});
    std::vector<Horofunction> hs;
    hs.push_back(ball_boundary(ball2, sample_unit_cvec(2, g)));
    hs.push_back(internal_peak(ball2, sample_point(ball2, g)));
    hs.push_back(sup_sign(sup, {0, 2}, {+1, -1}, {0.0, 1.5}));
    hs.push_back(product_composite(
        prod, {0, 1},
        {disc_boundary(Space::disc(), complexd(1, 0)), disc_boundary(Space::disc(), complexd(0, 1))},
        {0.0, 0.75}));
    for (const Horofunction& h : hs) {
        CHECK(std::fabs(evaluate(h, h.space.basepoint())) <= 1e-12);
        for (int i = 0; i < 1000; ++i) {
            Point x = sample_point(h.space, g), y = sample_point(h.space, g);
            double lhs = std::fabs(evaluate(h, x) - evaluate(h, y));
            CHECK(lhs <= distance(h.space, x, y) + 1e-9);
        }
    }
}

TEST_CASE("rebasing renormalises and preserves differences") {
    SplitMix64 g(45);
    const Space disc = Space::disc();
    Horofunction h = disc_boundary(disc, complexd(0, 1));
    Point y0(complexd(0.2, -0.3));
    Horofunction hr = rebase(h, y0);
    CHECK(std::fabs(evaluate(hr, y0)) <= 1e-12);
    for (int i = 0; i < 200; ++i) {
        Point x = sample_point(disc, g), y = sample_point(disc, g);
        CHECK(std::fabs((evaluate(hr, x) - evaluate(hr, y)) - (evaluate(h, x) - evaluate(h, y))) <=
              1e-12);
    }
}

TEST_CASE("rebased composite equals the explicitly regauged composite") {
    // h*(x) = h(x) - h(y0) agrees with max_j (h*_j(x_j) - gamma_j), where
    // gamma_j = max_i (h_i(y0_i) - alpha_i) - (h_j(y0_j) - alpha_j).
    const Space prod = Space::product({Space::disc(), Space::disc()});
    Horofunction f1 = disc_boundary(Space::disc(), complexd(1, 0));
    Horofunction f2 = disc_boundary(Space::disc(), complexd(0, 1));
    std::vector<double> alpha{0.0, 1.25};
    Horofunction h = product_composite(prod, {0, 1}, {f1, f2}, alpha);

    Point y0{PointTuple{Point(complexd(0.3, 0.1)), Point(complexd(-0.2, 0.4))}};
    Horofunction hr = rebase(h, y0);

    double v1 = evaluate(f1, y0.tuple()[0]) - alpha[0];
    double v2 = evaluate(f2, y0.tuple()[1]) - alpha[1];
    double top = std::max(v1, v2);
    std::vector<double> gamma{top - v1, top - v2};
    Horofunction hg = product_composite(prod, {0, 1},
                                        {rebase(f1, y0.tuple()[0]), rebase(f2, y0.tuple()[1])},
                                        gamma);
    hg.basepoint = y0;

    SplitMix64 g(46);
    for (int i = 0; i < 300; ++i) {
        Point x = sample_point(prod, g);
        CHECK(std::fabs(evaluate(hr, x) - evaluate(hg, x)) <= 1e-12);
    }
}

TEST_CASE("limit estimates along radial sequences") {
    const Space disc = Space::disc();
    std::vector<Point> seq;
    for (int k = 1; k <= 7; ++k) seq.emplace_back(complexd(1.0 - std::pow(10.0, -k), 0.0));
    LimitEstimate e = horofunction_limit_estimate(disc, seq, Point(complexd(0.5, 0)));
    CHECK(e.value == doctest::Approx(-kLog3).epsilon(1e-9));
    CHECK(e.converged);

    // constant sequence at the basepoint
    std::vector<Point> cseq(3, disc.basepoint());
    LimitEstimate c = horofunction_limit_estimate(disc, cseq, Point(complexd(0.3, 0.2)));
    CHECK(c.value == distance(disc, Point(complexd(0.3, 0.2)), disc.basepoint()));
    CHECK(c.tail_spread == 0.0);
}

TEST_CASE("the boundary limit law holds on random ball data") {
    SplitMix64 g(47);
    const Space ball2 = Space::ball(2);
    for (int i = 0; i < 100; ++i) {
        cvec xi = sample_unit_cvec(2, g);
        Point z = sample_point(ball2, g, 0.5);
        std::vector<Point> seq;
        for (int k = 1; k <= 7; ++k) {
            double r = 1.0 - std::pow(10.0, -k);
            seq.emplace_back(cvec{r * xi[0], r * xi[1]});
        }
        LimitEstimate e = horofunction_limit_estimate(ball2, seq, z);
        CHECK(std::fabs(e.value - evaluate(ball_boundary(ball2, xi), z)) <= 1e-6);
    }
}

TEST_CASE("busemann ray identity in the well-conditioned range") {
    // Representation of near-boundary points limits the identity: a double
    // coordinate quantum of ~1.1e-16 is magnified by e^t / 2 metrically, so
    // 1e-9 accuracy is attainable up to t ~ 15 and degrades to ~1e-7 at t = 20.
    SplitMix64 g(48);
    const Space ball2 = Space::ball(2);
    for (int rep = 0; rep < 5; ++rep) {
        cvec xi = sample_unit_cvec(2, g);
        Horofunction h = ball_boundary(ball2, xi);
        Path ray = boundary_ray(ball2, BoundaryPoint{BallDir{xi}});
        for (double t = 0.0; t <= 15.0; t += 0.5)
            CHECK(std::fabs(evaluate(h, ray.at(t)) + t) <= 1e-9);
        for (double t = 15.5; t <= 20.0; t += 0.5)
            CHECK(std::fabs(evaluate(h, ray.at(t)) + t) <= 3e-7);
    }
}

TEST_CASE("star graph tip sequences collapse to the basepoint peak") {
    const Space star = Space::star_graph();
    std::vector<Point> tips;
    for (int k = 1; k <= 40; ++k) tips.emplace_back(StarPoint{k, static_cast<double>(k)});
    Point z(StarPoint{3, 1.0});
    LimitEstimate e = horofunction_limit_estimate(star, tips, z);
    CHECK(e.value == 1.0);  // = d(z, b), exactly
    CHECK(e.tail_spread == 0.0);
    CHECK(e.converged);
    // the same-edge entry differs (v_3 = -1); every later entry is exact
    double v3 = distance(star, z, tips[2]) - distance(star, star.basepoint(), tips[2]);
    CHECK(v3 == -1.0);
}

TEST_CASE("decomposition of product sequences") {
    const Space prod = Space::product({Space::disc(), Space::disc()});

    auto tanh_pair_seq = [&](int n_max) {
        std::vector<Point> seq;
        for (int n = 1; n <= n_max; ++n)
            seq.emplace_back(PointTuple{Point(complexd(std::tanh(0.5 * n), 0)),
                                        Point(complexd(std::tanh(0.5 * (n - 1)), 0))});
        return seq;
    };

    SUBCASE("two escaping factors with offsets (0, 1)") {
        Decomposition d = decompose_product_horofunction(prod, tanh_pair_seq(15), 13.0, 1e-6);
        REQUIRE(d.J == std::vector<int>{0, 1});
        CHECK(d.alpha[0] == doctest::Approx(0.0).epsilon(1e-9));
        CHECK(d.alpha[1] == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(d.excluded.empty());
        // factor estimates agree with the closed boundary form on the probes
        Horofunction f = disc_boundary(Space::disc(), complexd(1, 0));
        for (size_t q = 0; q < d.probes[0].size(); ++q)
            CHECK(std::fabs(d.factor_estimates[0][q].value - evaluate(f, d.probes[0][q])) <= 1e-5);
    }

    SUBCASE("a pinned factor is excluded") {
        std::vector<Point> seq;
        for (int n = 1; n <= 15; ++n)
            seq.emplace_back(
                PointTuple{Point(complexd(std::tanh(0.5 * n), 0)), Point(complexd(0, 0))});
        Decomposition d = decompose_product_horofunction(prod, seq, 13.0, 1e-6);
        CHECK(d.J == std::vector<int>{0});
        CHECK(d.excluded == std::vector<int>{1});
    }

    SUBCASE("single factor forces alpha = 0") {
        const Space single = Space::product({Space::disc()});
        std::vector<Point> seq;
        for (int n = 1; n <= 15; ++n)
            seq.emplace_back(PointTuple{Point(complexd(std::tanh(0.5 * n), 0))});
        Decomposition d = decompose_product_horofunction(single, seq, 13.0, 1e-6);
        CHECK(d.J == std::vector<int>{0});
        CHECK(d.alpha[0] == 0.0);
    }

    SUBCASE("non-escaping data is rejected") {
        try {
            decompose_product_horofunction(prod, tanh_pair_seq(9), 13.0, 1e-6);
            CHECK(false);
        } catch (const error& e) {
            CHECK(e.code() == errc::not_escaping);
        }
    }

    SUBCASE("oscillating offsets are reported undecided") {
        std::vector<Point> seq;
        for (int n = 1; n <= 15; ++n) {
            double off = (n % 2 == 0) ? 0.25 : 1.75;
            seq.emplace_back(PointTuple{Point(complexd(std::tanh(0.5 * n), 0)),
                                        Point(complexd(std::tanh(0.5 * (n - off)), 0))});
        }
        try {
            decompose_product_horofunction(prod, seq, 13.0, 1e-6);
            CHECK(false);
        } catch (const error& e) {
            CHECK(e.code() == errc::undecided);
        }
    }
}
