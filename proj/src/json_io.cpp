#include "horo/json_io.hpp"

namespace horo {

namespace {

json complex_to_json(complexd z) { return json::array({z.real(), z.imag()}); }

complexd complex_from_json(const json& j) {
    if (j.is_number()) return complexd(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return complexd(j[0].get<double>(), j[1].get<double>());
    fail(errc::parse_error, "expected a number or [re, im] pair");
}

double number_from_json(const json& j, const char* what) {
    if (!j.is_number()) fail(errc::parse_error, std::string("expected a number for ") + what);
    return j.get<double>();
}

std::vector<int> indices_from_json(const json& j) {
    // 1-based on the wire, 0-based internally
    if (!j.is_array() || j.empty()) fail(errc::parse_error, "J must be a non-empty array");
    std::vector<int> out;
    for (const auto& e : j) {
        if (!e.is_number_integer()) fail(errc::parse_error, "J entries must be integers");
        out.push_back(e.get<int>() - 1);
    }
    return out;
}

json indices_to_json(const std::vector<int>& J) {
    json out = json::array();
    for (int j : J) out.push_back(j + 1);
    return out;
}

}  // namespace

json space_to_json(const Space& space) {
    json j;
    j["kind"] = kind_name(space.kind());
    switch (space.kind()) {
        case SpaceKind::sup_rn:
        case SpaceKind::ball:
        case SpaceKind::polydisc:
            j["n"] = space.dim();
            break;
        case SpaceKind::product: {
            json f = json::array();
            for (const Space& s : space.factors()) f.push_back(space_to_json(s));
            j["factors"] = f;
            break;
        }
        default:
            break;
    }
    return j;
}

Space space_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        fail(errc::parse_error, "space descriptor needs a \"kind\" string");
    std::string kind = j["kind"].get<std::string>();
    auto dim = [&](int fallback) {
        if (!j.contains("n")) return fallback;
        if (!j["n"].is_number_integer()) fail(errc::parse_error, "\"n\" must be an integer");
        return j["n"].get<int>();
    };
    Space s = [&]() {
        if (kind == "line" || kind == "real_line") return Space::real_line();
        if (kind == "sup_rn") return Space::sup_rn(dim(1));
        if (kind == "disc" || kind == "disk") return Space::disc();
        if (kind == "ball") return Space::ball(dim(1));
        if (kind == "polydisc") return Space::polydisc(dim(1));
        if (kind == "star") return Space::star_graph();
        if (kind == "product") {
            if (!j.contains("factors") || !j["factors"].is_array())
                fail(errc::parse_error, "product needs a \"factors\" array");
            std::vector<Space> f;
            for (const auto& e : j["factors"]) f.push_back(space_from_json(e));
            return Space::product(std::move(f));
        }
        fail(errc::parse_error, "unknown space kind \"" + kind + "\"");
    }();
    if (j.contains("basepoint")) s = s.with_basepoint(point_from_json(s, j["basepoint"]));
    return s;
}

json point_to_json(const Point& x) {
    return std::visit(
        [](const auto& p) -> json {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, double>) {
                return p;
            } else if constexpr (std::is_same_v<T, rvec>) {
                return json(p);
            } else if constexpr (std::is_same_v<T, complexd>) {
                return complex_to_json(p);
            } else if constexpr (std::is_same_v<T, cvec>) {
                json out = json::array();
                for (auto& c : p) out.push_back(complex_to_json(c));
                return out;
            } else if constexpr (std::is_same_v<T, StarPoint>) {
                return json{{"edge", p.edge}, {"offset", p.offset}};
            } else {
                json out = json::array();
                for (auto& q : p) out.push_back(point_to_json(q));
                return out;
            }
        },
        x.payload);
}

Point point_from_json(const Space& space, const json& j) {
    switch (space.kind()) {
        case SpaceKind::real_line:
            return Point(number_from_json(j, "a real-line point"));
        case SpaceKind::sup_rn: {
            if (!j.is_array()) fail(errc::parse_error, "sup_rn point must be an array");
            rvec v;
            for (const auto& e : j) v.push_back(number_from_json(e, "a coordinate"));
            return Point(v);
        }
        case SpaceKind::disc:
            return Point(complex_from_json(j));
        case SpaceKind::ball:
        case SpaceKind::polydisc: {
            if (!j.is_array()) fail(errc::parse_error, "point must be an array of coordinates");
            cvec v;
            for (const auto& e : j) v.push_back(complex_from_json(e));
            return Point(v);
        }
        case SpaceKind::star_graph: {
            if (j.is_object() && j.contains("edge") && j.contains("offset"))
                return Point(StarPoint{j["edge"].get<int>(), j["offset"].get<double>()});
            if (j.is_array() && j.size() == 2)
                return Point(StarPoint{j[0].get<int>(), j[1].get<double>()});
            fail(errc::parse_error, "star point must be {\"edge\", \"offset\"} or [k, s]");
        }
        case SpaceKind::product: {
            if (!j.is_array() || static_cast<int>(j.size()) != space.dim())
                fail(errc::parse_error, "product point must list one entry per factor");
            PointTuple t;
            for (int i = 0; i < space.dim(); ++i)
                t.push_back(point_from_json(space.factors()[static_cast<size_t>(i)], j[static_cast<size_t>(i)]));
            return Point(t);
        }
    }
    fail(errc::parse_error, "unreachable space kind");
}

json boundary_to_json(const BoundaryPoint& xi) {
    return std::visit(
        [](const auto& d) -> json {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, LineDir>) {
                return json{{"type", "line"}, {"sign", d.sign}};
            } else if constexpr (std::is_same_v<T, SupDir>) {
                return json{{"type", "sup"}, {"J", indices_to_json(d.J)}, {"signs", d.signs}};
            } else if constexpr (std::is_same_v<T, DiscDir>) {
                return json{{"type", "disc"}, {"xi", complex_to_json(d.xi)}};
            } else if constexpr (std::is_same_v<T, BallDir>) {
                json v = json::array();
                for (auto& c : d.xi) v.push_back(complex_to_json(c));
                return json{{"type", "ball"}, {"xi", v}};
            } else {
                json f = json::array();
                for (auto& b : d.factors) f.push_back(boundary_to_json(b));
                return json{{"type", "product"}, {"J", indices_to_json(d.J)}, {"factors", f}};
            }
        },
        xi.payload);
}

BoundaryPoint boundary_from_json(const Space& space, const json& j) {
    switch (space.kind()) {
        case SpaceKind::real_line: {
            if (j.is_number_integer()) return BoundaryPoint{LineDir{j.get<int>()}};
            return BoundaryPoint{LineDir{j.at("sign").get<int>()}};
        }
        case SpaceKind::sup_rn: {
            SupDir d;
            d.J = indices_from_json(j.at("J"));
            for (const auto& e : j.at("signs")) d.signs.push_back(e.get<int>());
            return BoundaryPoint{d};
        }
        case SpaceKind::disc: {
            const json& x = j.is_object() ? j.at("xi") : j;
            return BoundaryPoint{DiscDir{complex_from_json(x)}};
        }
        case SpaceKind::ball: {
            const json& x = j.is_object() ? j.at("xi") : j;
            if (!x.is_array()) fail(errc::parse_error, "ball direction must be an array");
            cvec v;
            for (const auto& e : x) v.push_back(complex_from_json(e));
            return BoundaryPoint{BallDir{v}};
        }
        case SpaceKind::product: {
            ProductDir d;
            d.J = indices_from_json(j.at("J"));
            const json& fac = j.at("factors");
            for (size_t k = 0; k < d.J.size(); ++k)
                d.factors.push_back(
                    boundary_from_json(space.factors()[static_cast<size_t>(d.J[k])], fac[k]));
            return BoundaryPoint{d};
        }
        default:
            fail(errc::unsupported_space, "no boundary points for this space kind");
    }
}

namespace {

json form_to_json(const Horofunction& h) {
    return std::visit(
        [&](const auto& f) -> json {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, InternalPeak>) {
                return json{{"type", "internal_peak"}, {"y", point_to_json(f.y)}};
            } else if constexpr (std::is_same_v<T, DiscBoundary>) {
                return json{{"type", "disc_boundary"}, {"xi", complex_to_json(f.xi)}};
            } else if constexpr (std::is_same_v<T, BallBoundary>) {
                json v = json::array();
                for (auto& c : f.xi) v.push_back(complex_to_json(c));
                return json{{"type", "ball_boundary"}, {"xi", v}};
            } else if constexpr (std::is_same_v<T, SupSign>) {
                return json{{"type", "sup_sign"},
                            {"J", indices_to_json(f.J)},
                            {"signs", f.signs},
                            {"alpha", f.alpha}};
            } else {
                json fac = json::array();
                for (auto& q : f.factors) fac.push_back(form_to_json(q));
                return json{{"type", "product_composite"},
                            {"J", indices_to_json(f.J)},
                            {"factors", fac},
                            {"alpha", f.alpha}};
            }
        },
        h.form);
}

Horofunction form_from_json(const Space& space, const json& j) {
    if (!j.is_object() || !j.contains("type"))
        fail(errc::parse_error, "horofunction form needs a \"type\"");
    std::string type = j["type"].get<std::string>();
    if (type == "internal_peak") return internal_peak(space, point_from_json(space, j.at("y")));
    if (type == "disc_boundary") return disc_boundary(space, complex_from_json(j.at("xi")));
    if (type == "ball_boundary") {
        cvec v;
        for (const auto& e : j.at("xi")) v.push_back(complex_from_json(e));
        return ball_boundary(space, v);
    }
    if (type == "sup_sign") {
        std::vector<int> signs;
        for (const auto& e : j.at("signs")) signs.push_back(e.get<int>());
        std::vector<double> alpha = j.at("alpha").get<std::vector<double>>();
        return sup_sign(space, indices_from_json(j.at("J")), signs, alpha);
    }
    if (type == "product_composite") {
        std::vector<int> J = indices_from_json(j.at("J"));
        std::vector<Horofunction> factors;
        const json& fac = j.at("factors");
        for (size_t k = 0; k < J.size(); ++k)
            factors.push_back(
                form_from_json(space.factors()[static_cast<size_t>(J[k])], fac[k]));
        std::vector<double> alpha = j.at("alpha").get<std::vector<double>>();
        return product_composite(space, J, factors, alpha);
    }
    fail(errc::parse_error, "unknown horofunction type \"" + type + "\"");
}

}  // namespace

json horofunction_to_json(const Horofunction& h) {
    json j;
    j["space"] = space_to_json(h.space);
    j["form"] = form_to_json(h);
    j["basepoint"] = point_to_json(h.basepoint);
    return j;
}

Horofunction horofunction_from_json(const json& j) {
    Space space = space_from_json(j.at("space"));
    Horofunction h = form_from_json(space, j.at("form"));
    if (j.contains("basepoint")) h = rebase(h, point_from_json(space, j["basepoint"]));
    return h;
}

json limit_estimate_to_json(const LimitEstimate& e) {
    return json{{"value", e.value},
                {"tail_spread", e.tail_spread},
                {"converged", e.converged},
                {"n_used", e.n_used},
                {"window", e.window}};
}

json defect_report_to_json(const DefectReport& r, bool include_pairs) {
    json j{{"sup_defect", r.sup_defect}, {"worst_m", r.worst_m},
           {"worst_k", r.worst_k},       {"start_index", r.start_index},
           {"epsilon", r.epsilon},       {"n_points", r.n_points},
           {"monotone_radii", r.monotone_radii}, {"verdict", r.verdict}};
    if (include_pairs) {
        json pairs = json::array();
        for (const auto& p : r.pairs) pairs.push_back(json::array({p.m, p.k, p.defect}));
        j["pairs"] = pairs;
    }
    return j;
}

json detour_value_to_json(const DetourValue& v) {
    switch (v.kind) {
        case DetourValue::Kind::finite:
            return json{{"finite", v.value}, {"diagnostics", limit_estimate_to_json(v.diagnostics)}};
        case DetourValue::Kind::exceeds_cutoff:
            return json{{"exceeds_cutoff", json{{"M", v.cutoff}, {"at_n", v.at_index}}}};
        case DetourValue::Kind::undecided:
            return json{{"undecided", limit_estimate_to_json(v.diagnostics)}};
    }
    fail(errc::bad_argument, "unreachable detour value kind");
}

json decomposition_to_json(const Decomposition& d) {
    json est = json::array();
    for (size_t k = 0; k < d.factor_estimates.size(); ++k) {
        json per = json::array();
        for (size_t q = 0; q < d.factor_estimates[k].size(); ++q)
            per.push_back(json{{"probe", point_to_json(d.probes[k][q])},
                               {"estimate", limit_estimate_to_json(d.factor_estimates[k][q])}});
        est.push_back(per);
    }
    return json{{"J", indices_to_json(d.J)},
                {"alpha", d.alpha},
                {"excluded", indices_to_json(d.excluded)},
                {"tail_indices", d.tail_indices},
                {"factor_estimates", est}};
}

json part_key_to_json(const PartKey& k) {
    json ids = json::array();
    for (const Horofunction& h : k.ids) ids.push_back(form_to_json(h));
    return json{{"J", indices_to_json(k.J)}, {"ids", ids}};
}

Embedding embedding_from_json(const Space& src, const json& j) {
    if (!j.is_object() || !j.contains("type")) fail(errc::parse_error, "map needs a \"type\"");
    std::string type = j["type"].get<std::string>();
    if (type == "identity") return IdentityMap{};
    if (type == "diagonal") return DiagonalEmbedding{j.value("copies", 2)};
    if (type == "factor_inclusion") {
        FactorInclusion f{space_from_json(j.at("target")), j.at("slot").get<int>() - 1, {}};
        const json& fixed = j.at("fixed");
        size_t at = 0;
        for (int q = 0; q < f.target.dim(); ++q) {
            if (q == f.slot) continue;
            f.fixed.push_back(point_from_json(f.target.factors()[static_cast<size_t>(q)],
                                              fixed[at++]));
        }
        return f;
    }
    if (type == "unitary") {
        UnitaryMap u;
        for (const auto& row : j.at("matrix")) {
            cvec r;
            for (const auto& e : row) r.push_back(complexd(e[0].get<double>(), e[1].get<double>()));
            u.rows.push_back(r);
        }
        return u;
    }
    if (type == "mobius") {
        MobiusDisc m;
        m.a = j.contains("a") ? complexd(j["a"][0].get<double>(), j["a"][1].get<double>())
                              : complexd(0.0, 0.0);
        m.theta = j.value("theta", 0.0);
        return m;
    }
    (void)src;
    fail(errc::parse_error, "unknown map type \"" + type + "\"");
}

std::string dump_json(const json& j) { return j.dump() + "\n"; }

}  // namespace horo
