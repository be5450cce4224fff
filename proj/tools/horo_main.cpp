// Command-line front end: JSON in, JSON/CSV out. Exit codes: 0 success,
// 1 computational/input error, 2 verification failure.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "horo/almost_geodesic.hpp"
#include "horo/detour.hpp"
#include "horo/json_io.hpp"
#include "horo/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace horo;

// "@file" arguments load the file contents; anything else is inline JSON.
std::string slurp(const std::string& arg) {
    if (arg.empty() || arg[0] != '@') return arg;
    std::ifstream in(arg.substr(1));
    if (!in) fail(errc::bad_argument, "cannot open " + arg.substr(1));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_json(const std::string& arg) {
    try {
        return json::parse(slurp(arg));
    } catch (const nlohmann::json::exception& e) {
        fail(errc::parse_error, e.what());
    }
}

double env_default_tol() {
    if (const char* s = std::getenv("HOROLIB_TOL")) {
        char* end = nullptr;
        double v = std::strtod(s, &end);
        if (end != s && v > 0.0) return v;
    }
    return 1e-6;
}

void emit(const json& j) { std::fputs(dump_json(j).c_str(), stdout); }

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::vector<double>>& rows) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) fail(errc::bad_argument, "cannot open output file " + path);
    std::fputs(header.c_str(), f);
    std::fputc('\n', f);
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i)
            std::fprintf(f, "%s%.17g", i ? "," : "", row[i]);
        std::fputc('\n', f);
    }
    std::fclose(f);
}

// Column names for the flattened coordinates of a point of `space`.
void coord_header(const Space& space, std::string& out, int& idx) {
    auto push = [&](const std::string& name) {
        out += ",";
        out += name + std::to_string(idx);
    };
    switch (space.kind()) {
        case SpaceKind::real_line:
            push("x");
            ++idx;
            break;
        case SpaceKind::sup_rn:
            for (int i = 0; i < space.dim(); ++i) push("x"), ++idx;
            break;
        case SpaceKind::disc:
            push("re");
            out += ",im" + std::to_string(idx);
            ++idx;
            break;
        case SpaceKind::ball:
        case SpaceKind::polydisc:
            for (int i = 0; i < space.dim(); ++i) {
                push("re");
                out += ",im" + std::to_string(idx);
                ++idx;
            }
            break;
        case SpaceKind::star_graph:
            push("edge");
            out += ",offset" + std::to_string(idx);
            ++idx;
            break;
        case SpaceKind::product:
            for (const Space& f : space.factors()) coord_header(f, out, idx);
            break;
    }
}

std::string ray_csv_header(const Space& space) {
    std::string h = "t,radius";
    int idx = 0;
    coord_header(space, h, idx);
    return h;
}

// Flattens a point into CSV columns (re, im pairs for complex coordinates).
void point_columns(const Point& x, std::vector<double>& out) {
    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, double>) {
                out.push_back(p);
            } else if constexpr (std::is_same_v<T, rvec>) {
                for (double v : p) out.push_back(v);
            } else if constexpr (std::is_same_v<T, complexd>) {
                out.push_back(p.real());
                out.push_back(p.imag());
            } else if constexpr (std::is_same_v<T, cvec>) {
                for (auto& c : p) {
                    out.push_back(c.real());
                    out.push_back(c.imag());
                }
            } else if constexpr (std::is_same_v<T, StarPoint>) {
                out.push_back(static_cast<double>(p.edge));
                out.push_back(p.offset);
            } else {
                for (auto& q : p) point_columns(q, out);
            }
        },
        x.payload);
}

std::vector<Point> seq_from_json(const Space& space, const json& j) {
    if (!j.is_array() || j.empty()) fail(errc::parse_error, "sequence must be a non-empty array");
    std::vector<Point> out;
    for (const auto& e : j) out.push_back(point_from_json(space, e));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"distances, horofunctions and detour geometry of model metric spaces"};
    app.require_subcommand(1);

    double tol = env_default_tol();
    app.add_option("--tol", tol, "stabilisation tolerance (default 1e-6 or HOROLIB_TOL)");

    std::string space_arg, x_arg, y_arg, z_arg, h_arg, seq_arg, out_path, map_arg;
    std::string from_arg, to_arg, xi_arg, alpha_arg, beta_arg;

    auto* c_dist = app.add_subcommand("dist", "distance between two points");
    c_dist->add_option("--space", space_arg)->required();
    c_dist->add_option("--x", x_arg)->required();
    c_dist->add_option("--y", y_arg)->required();

    auto* c_heval = app.add_subcommand("horo-eval", "evaluate a horofunction at a point");
    c_heval->add_option("--hf", h_arg)->required();
    c_heval->add_option("--x", x_arg)->required();

    int window = 5;
    auto* c_hlimit = app.add_subcommand("horo-limit", "limit estimate along a point sequence");
    c_hlimit->add_option("--space", space_arg)->required();
    c_hlimit->add_option("--seq", seq_arg)->required();
    c_hlimit->add_option("--z", z_arg)->required();
    c_hlimit->add_option("--window", window);

    int m_idx = -1, k_idx = -1, start_index = 0;
    double epsilon = 1e-6;
    auto* c_defect = app.add_subcommand("defect", "almost-geodesic defect of a sequence");
    c_defect->add_option("--space", space_arg)->required();
    c_defect->add_option("--seq", seq_arg)->required();
    c_defect->add_option("--m", m_idx);
    c_defect->add_option("--k", k_idx);
    c_defect->add_option("--eps", epsilon);
    c_defect->add_option("--from-index", start_index);

    int samples = 200;
    auto* c_ray = app.add_subcommand("induced-ray", "ray induced by a sequence (CSV profile)");
    c_ray->add_option("--space", space_arg)->required();
    c_ray->add_option("--seq", seq_arg)->required();
    c_ray->add_option("--out", out_path)->required();
    c_ray->add_option("--samples", samples);

    double beta = 0.0;
    auto* c_rar = app.add_subcommand("ray-at-radius", "point at a given radius along a ray");
    c_rar->add_option("--space", space_arg)->required();
    c_rar->add_option("--xi", xi_arg, "boundary direction (closed-form ray)");
    c_rar->add_option("--seq", seq_arg, "anchors of an induced ray");
    c_rar->add_option("--beta", beta)->required();

    double cutoff = 20.0;
    int n_max = 23;
    auto* c_detour = app.add_subcommand("detour", "detour distance between two Busemann points");
    c_detour->add_option("--space", space_arg)->required();
    c_detour->add_option("--from", from_arg)->required();
    c_detour->add_option("--to", to_arg)->required();
    c_detour->add_option("--cutoff", cutoff);
    c_detour->add_option("--n-max", n_max);

    auto* c_part = app.add_subcommand("part", "part key and dimension of a horofunction");
    c_part->add_option("--hf", h_arg)->required();

    auto* c_cb = app.add_subcommand("construct-busemann", "product Busemann point with witness");
    c_cb->add_option("--space", space_arg)->required();
    c_cb->add_option("--xi", xi_arg, "array of per-factor boundary directions (null to skip)")
        ->required();
    c_cb->add_option("--alpha", alpha_arg)->required();
    c_cb->add_option("--n-max", n_max);
    bool emit_witness = false;
    c_cb->add_flag("--emit-witness", emit_witness);

    auto* c_tr = app.add_subcommand("transport", "push a Busemann point through an embedding");
    c_tr->add_option("--map", map_arg)->required();
    c_tr->add_option("--src", h_arg)->required();
    c_tr->add_option("--n-max", n_max);

    double level = 0.0;
    auto* c_hb = app.add_subcommand("horoball-csv", "sample the level set {h = r} (disc/ball)");
    c_hb->add_option("--hf", h_arg)->required();
    c_hb->add_option("--r", level)->required();
    c_hb->add_option("--samples", samples);
    c_hb->add_option("--out", out_path)->required();

    std::uint64_t seed = 7;
    std::string suite = "all";
    int threads = 0;
    auto* c_verify = app.add_subcommand("verify", "run the verification suites");
    c_verify->add_option("--suite", suite, "suite id or 'all'");
    c_verify->add_option("--seed", seed);
    c_verify->add_option("--threads", threads, "0 = library default; 1 = serial");
    bool list_suites = false;
    c_verify->add_flag("--list", list_suites);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_dist->parsed()) {
            Space space = space_from_json(parse_json(space_arg));
            double d = distance(space, point_from_json(space, parse_json(x_arg)),
                                point_from_json(space, parse_json(y_arg)));
            emit(json{{"distance", d}});
        } else if (c_heval->parsed()) {
            Horofunction h = horofunction_from_json(parse_json(h_arg));
            emit(json{{"value", evaluate(h, point_from_json(h.space, parse_json(x_arg)))}});
        } else if (c_hlimit->parsed()) {
            Space space = space_from_json(parse_json(space_arg));
            auto seq = seq_from_json(space, parse_json(seq_arg));
            LimitEstimate e = horofunction_limit_estimate(
                space, seq, point_from_json(space, parse_json(z_arg)), tol, window);
            emit(limit_estimate_to_json(e));
        } else if (c_defect->parsed()) {
            Space space = space_from_json(parse_json(space_arg));
            auto seq = seq_from_json(space, parse_json(seq_arg));
            if (m_idx >= 0 && k_idx >= 0) {
                emit(json{{"defect", almost_geodesic_defect(space, seq, m_idx, k_idx)}});
            } else {
                emit(defect_report_to_json(is_almost_geodesic(space, seq, epsilon, start_index),
                                           true));
            }
        } else if (c_ray->parsed()) {
            Space space = space_from_json(parse_json(space_arg));
            auto seq = seq_from_json(space, parse_json(seq_arg));
            Path ray = induced_ray(space, seq);
            std::vector<std::vector<double>> rows;
            const Point origin = ray.at(0.0);
            for (int i = 0; i <= samples; ++i) {
                double t = ray.length * static_cast<double>(i) / samples;
                std::vector<double> row{t, distance(space, ray.at(t), origin)};
                point_columns(ray.at(t), row);
                rows.push_back(std::move(row));
            }
            write_csv(out_path, ray_csv_header(space), rows);
            emit(json{{"breakpoints", ray.breakpoints}, {"length", ray.length},
                      {"csv", out_path}});
        } else if (c_rar->parsed()) {
            Space space = space_from_json(parse_json(space_arg));
            Path ray = [&]() {
                if (!xi_arg.empty())
                    return boundary_ray(space, boundary_from_json(space, parse_json(xi_arg)));
                if (!seq_arg.empty())
                    return induced_ray(space, seq_from_json(space, parse_json(seq_arg)));
                fail(errc::bad_argument, "provide --xi or --seq");
            }();
            RadiusPoint rp = ray_point_at_radius(ray, beta);
            emit(json{{"t", rp.t}, {"point", point_to_json(rp.point)}});
        } else if (c_detour->parsed()) {
            Space space = space_from_json(parse_json(space_arg));
            json jf = parse_json(from_arg), jt = parse_json(to_arg);
            jf["space"] = space_to_json(space);
            jt["space"] = space_to_json(space);
            Horofunction hf = horofunction_from_json(jf);
            Horofunction ht = horofunction_from_json(jt);
            WitnessedBusemann wf = witnessed(space, hf, n_max);
            WitnessedBusemann wt = witnessed(space, ht, n_max);
            emit(json{{"detour", detour_value_to_json(detour_distance(space, wf, wt, cutoff, tol))},
                      {"H_from_to", detour_value_to_json(detour_cost(space, wf, ht, cutoff, tol))},
                      {"H_to_from", detour_value_to_json(detour_cost(space, wt, hf, cutoff, tol))}});
        } else if (c_part->parsed()) {
            Horofunction h = horofunction_from_json(parse_json(h_arg));
            emit(json{{"part", part_key_to_json(part_key(h))},
                      {"dimension", part_dimension(h)}});
        } else if (c_cb->parsed()) {
            Space space = space_from_json(parse_json(space_arg));
            if (space.kind() != SpaceKind::product)
                fail(errc::unsupported_space, "construct-busemann needs a product space");
            json jxi = parse_json(xi_arg);
            if (!jxi.is_array() || static_cast<int>(jxi.size()) != space.dim())
                fail(errc::parse_error, "--xi must list one entry per factor (null to skip)");
            std::vector<std::optional<Path>> rays(static_cast<size_t>(space.dim()));
            for (int j = 0; j < space.dim(); ++j)
                if (!jxi[static_cast<size_t>(j)].is_null())
                    rays[static_cast<size_t>(j)] = boundary_ray(
                        space.factors()[static_cast<size_t>(j)],
                        boundary_from_json(space.factors()[static_cast<size_t>(j)],
                                           jxi[static_cast<size_t>(j)]));
            std::vector<double> alpha = parse_json(alpha_arg).get<std::vector<double>>();
            WitnessedBusemann wb = product_busemann(space, rays, alpha, n_max);
            json out{{"horofunction", horofunction_to_json(wb.h)},
                     {"witness_points", static_cast<int>(wb.witness.size())},
                     {"witness_check", defect_report_to_json(wb.witness_check)}};
            if (emit_witness) {
                json w = json::array();
                for (const Point& z : wb.witness) w.push_back(point_to_json(z));
                out["witness"] = w;
            }
            emit(out);
        } else if (c_tr->parsed()) {
            Horofunction h = horofunction_from_json(parse_json(h_arg));
            Embedding phi = embedding_from_json(h.space, parse_json(map_arg));
            WitnessedBusemann src = witnessed(h.space, h, n_max);
            WitnessedBusemann dst = transport_under_embedding(phi, h.space, src);
            emit(json{{"horofunction", horofunction_to_json(dst.h)},
                      {"witness_check", defect_report_to_json(dst.witness_check)}});
        } else if (c_hb->parsed()) {
            Horofunction h = horofunction_from_json(parse_json(h_arg));
            // Level sets of the boundary horofunctions are circles tangent at
            // xi: centre xi/(1+e^r), radius e^r/(1+e^r). For the ball the slice
            // through the complex line of xi is emitted.
            double er = std::exp(level);
            double cc = 1.0 / (1.0 + er), rr = er / (1.0 + er);
            std::vector<std::vector<double>> rows;
            if (auto* d = std::get_if<DiscBoundary>(&h.form)) {
                for (int i = 0; i < samples; ++i) {
                    double t = 6.283185307179586 * i / samples;
                    complexd z = d->xi * (cc + rr * std::polar(1.0, t));
                    if (std::abs(z) >= 1.0 - kInteriorMargin) continue;
                    rows.push_back({t, z.real(), z.imag()});
                }
            } else if (auto* bb = std::get_if<BallBoundary>(&h.form)) {
                for (int i = 0; i < samples; ++i) {
                    double t = 6.283185307179586 * i / samples;
                    complexd w = cc + rr * std::polar(1.0, t);
                    if (std::abs(w) >= 1.0 - kInteriorMargin) continue;
                    std::vector<double> row{t};
                    for (auto& c : bb->xi) {
                        complexd z = w * c;
                        row.push_back(z.real());
                        row.push_back(z.imag());
                    }
                    rows.push_back(std::move(row));
                }
            } else {
                fail(errc::unsupported_space, "horoball-csv supports disc/ball boundary forms");
            }
            std::string header = "t";
            int idx = 0;
            coord_header(h.space, header, idx);
            write_csv(out_path, header, rows);
            emit(json{{"rows", static_cast<int>(rows.size())}, {"csv", out_path}});
        } else if (c_verify->parsed()) {
            if (list_suites) {
                emit(json{{"suites", suite_ids()}});
                return 0;
            }
#ifdef _OPENMP
            if (threads > 0) omp_set_num_threads(threads);
#endif
            VerifyOptions opt;
            opt.seed = seed;
            opt.parallel = threads != 1;
            json jsuites = json::array();
            bool all_pass = true;
            double total = 0.0;
            auto render = [&](const SuiteResult& r) {
                std::fprintf(stderr, "%s\n", format_suite_line(r).c_str());
                all_pass = all_pass && r.pass;
                total += r.seconds;
                // timings go to stderr only, keeping stdout byte-deterministic
                jsuites.push_back(json{{"id", r.id},
                                       {"pass", r.pass},
                                       {"worst", r.worst},
                                       {"tolerance", r.tolerance},
                                       {"samples", r.samples},
                                       {"note", r.note}});
            };
            if (suite == "all") {
                for (const std::string& id : suite_ids()) render(run_suite(id, opt));
            } else {
                render(run_suite(suite, opt));
            }
            std::fprintf(stderr, "total wall clock: %.2fs\n", total);
            emit(json{{"seed", seed}, {"suites", jsuites}, {"all_pass", all_pass}});
            return all_pass ? 0 : 2;
        }
    } catch (const error& e) {
        std::fputs(dump_json(json{{"error", {{"code", errc_name(e.code())}, {"message", e.what()}}}})
                       .c_str(),
                   stderr);
        return 1;
    } catch (const std::exception& e) {
        std::fputs(dump_json(json{{"error", {{"code", "Internal"}, {"message", e.what()}}}}).c_str(),
                   stderr);
        return 1;
    }
    return 0;
}
