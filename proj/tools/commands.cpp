#include "commands.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <locale>
#include <numbers>
#include <optional>
#include <sstream>

#include "htarea/closed_forms.hpp"
#include "htarea/errors.hpp"
#include "htarea/flags.hpp"
#include "htarea/hilbert.hpp"
#include "htarea/quadrature.hpp"
#include "htarea/surfaces.hpp"
#include "json_io.hpp"

namespace htarea::cli {

namespace {

using nlohmann::json;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

QuadratureSpec spec_with(double tol) {
    QuadratureSpec s;
    s.rel_tol = tol;
    return s;
}

void report(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

void warn_unconverged(std::ostream& err, const AreaResult& r) {
    if (!r.converged)
        err << "warning: quadrature tolerance not reached (error estimate " << r.error_estimate
            << ")\n";
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw DomainError(std::string("malformed JSON in ") + path + ": " + e.what());
    }
}

InscribedPair triangle_pair(double t) {
    return polygons_from_flags(triangle_flags(triangle_s_of_t(t)));
}

InscribedPair hyperbolic_pair(double d) {
    const double a = hyperbolic_alpha_of_d(d);
    return polygons_from_flags(normalized_quad_flags({-a, a, a, -a}));
}

std::string csv_number(double x) {
    std::ostringstream s;
    s.imbue(std::locale::classic());
    s << std::setprecision(17) << x;
    return s.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hilbert metric areas of inscribed polygons"};
    app.require_subcommand(1);
    double tol = 1e-7;
    app.add_option("--tol", tol, "relative quadrature tolerance")->capture_default_str();

    double t = 1.0;
    auto* tri = app.add_subcommand("triangle", "triangle closed form vs quadrature");
    tri->add_option("--t", t, "triple ratio")->required();

    double tp = 1.0, d = 1.0, dp = 1.0, qt = 1.0;
    auto* quad = app.add_subcommand("quad", "quadrilateral area from Fock-Goncharov coordinates");
    quad->add_option("--t", qt, "triple ratio T(E,F,G)")->required();
    quad->add_option("--tp", tp, "triple ratio T(E,G,H)")->required();
    quad->add_option("--d", d, "double ratio D1")->required();
    quad->add_option("--dp", dp, "double ratio D2")->required();

    double dmin = 0.1, dmax = 10.0;
    int steps = 50;
    bool with_quadrature = false;
    std::string out_path;
    auto* sweep = app.add_subcommand("hyperbolic-sweep", "CSV of the hyperbolic family area");
    sweep->add_option("--d-min", dmin)->required();
    sweep->add_option("--d-max", dmax)->required();
    sweep->add_option("--steps", steps, "number of log-spaced intervals")->required();
    sweep->add_option("--out", out_path, "CSV path")->required();
    sweep->add_flag("--quadrature", with_quadrature, "add a quadrature column");

    double ld = 0.0, lt = 0.0;
    auto* s03 = app.add_subcommand("s03", "thrice-punctured sphere lower bound");
    s03->add_option("--ld", ld, "ln d")->required();
    s03->add_option("--lt", lt, "ln t")->required();

    int chi = -1;
    std::vector<double> ratios;
    auto* surf = app.add_subcommand("surface-bound", "lower bound from triangle triple ratios");
    surf->add_option("--chi", chi, "Euler characteristic")->required();
    surf->add_option("--ratios", ratios, "comma separated triple ratios")
        ->required()
        ->delimiter(',');

    std::string outer = "q0", polygon_path;
    double x = 0.0, y = 0.0;
    auto* ball = app.add_subcommand("ball", "unit ball and dual ball at a point");
    ball->add_option("--outer", outer, "q0, t0 or json")
        ->check(CLI::IsMember({"q0", "t0", "json"}));
    ball->add_option("--x", x)->required();
    ball->add_option("--y", y)->required();
    ball->add_option("--polygon", polygon_path, "JSON file with {\"vertices\": [[x,y],...]}");

    std::string in_path;
    auto* flags = app.add_subcommand("flags", "invariants and area of a flag tuple (JSON file)");
    flags->add_option("--in", in_path, "flag tuple JSON")->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        const QuadratureSpec spec = spec_with(tol);
        spec.validate();

        if (*tri) {
            const double closed = triangle_volume(t);
            const AreaResult r = ht_area(triangle_pair(t), spec);
            warn_unconverged(err, r);
            report(out, {{"t", t},
                         {"closed_form", closed},
                         {"quadrature", r.value},
                         {"abs_diff", std::abs(r.value - closed)}});
        } else if (*quad) {
            const FGQuadCoords c{qt, tp, d, dp};
            const NormalizedQuadParams p = fg_to_normalized(c);
            const AreaResult r = ht_area(polygons_from_flags(normalized_quad_flags(p)), spec);
            warn_unconverged(err, r);
            report(out, {{"t", qt},
                         {"tp", tp},
                         {"d", d},
                         {"dp", dp},
                         {"alpha1", p.alpha1},
                         {"alpha2", p.alpha2},
                         {"beta1", p.beta1},
                         {"beta2", p.beta2},
                         {"area", r.value},
                         {"error_estimate", r.error_estimate}});
        } else if (*sweep) {
            if (!(dmin > 0.0 && dmax > dmin)) throw DomainError("need 0 < d-min < d-max");
            if (steps < 1) throw DomainError("steps must be positive");
            std::ostringstream csv;
            csv << "d,alpha,closed_form" << (with_quadrature ? ",quadrature" : "")
                << ",hyperbolic_bound\n";
            double best = -1.0, best_d = dmin;
            const double l0 = std::log(dmin), l1 = std::log(dmax);
            for (int i = 0; i <= steps; ++i) {
                const double di = std::exp(l0 + (l1 - l0) * i / steps);
                const double v = hyperbolic_quad_volume(di);
                if (v > best) {
                    best = v;
                    best_d = di;
                }
                csv << csv_number(di) << ',' << csv_number(hyperbolic_alpha_of_d(di)) << ','
                    << csv_number(v);
                if (with_quadrature) {
                    const AreaResult r = ht_area(hyperbolic_pair(di), spec);
                    warn_unconverged(err, r);
                    csv << ',' << csv_number(r.value);
                }
                csv << ',' << csv_number(2.0 * std::numbers::pi) << '\n';
            }
            std::ofstream f(out_path, std::ios::binary);
            if (!f) throw IoError("cannot write " + out_path);
            f << csv.str();
            if (!f) throw IoError("write failed for " + out_path);
            report(out, {{"out", out_path}, {"rows", steps + 1}, {"argmax_d", best_d},
                         {"max_closed_form", best}});
        } else if (*s03) {
            const double dd = std::exp(ld), tt = std::exp(lt);
            const S03Params p = s03_parameters(dd, tt);
            const AreaResult r = s03_area_lower_bound(dd, tt, spec);
            warn_unconverged(err, r);
            const double den = ld * ld + lt * lt;
            report(out, {{"ld", ld},
                         {"lt", lt},
                         {"d", dd},
                         {"t", tt},
                         {"params",
                          {{"r1", p.r1}, {"r2", p.r2}, {"b1", p.b1}, {"b2", p.b2},
                           {"g1", p.g1}, {"g2", p.g2}, {"t1", p.t1}, {"t2", p.t2}}},
                         {"lower_bound", r.value},
                         {"error_estimate", r.error_estimate},
                         {"ratio", den > 0.0 ? json(r.value / den) : json(nullptr)}});
        } else if (*surf) {
            report(out, {{"chi", chi},
                         {"ratios", ratios},
                         {"lower_bound", surface_lower_bound(chi, ratios)}});
        } else if (*ball) {
            std::optional<double> closed;
            ConvexPolygon omega = standard_square();
            if (outer == "q0") {
                closed = integrand_Q0(x, y);
            } else if (outer == "t0") {
                omega = standard_triangle();
                closed = integrand_T0(x, y);
            } else {
                if (polygon_path.empty()) throw DomainError("--outer json needs --polygon");
                const json j = read_json_file(polygon_path);
                if (!j.is_object() || !j.contains("vertices"))
                    throw DomainError("polygon JSON needs \"vertices\"");
                omega = ConvexPolygon(io::points_from_json(j.at("vertices")));
            }
            const auto b = unit_ball(omega, {x, y});
            const auto dual = dual_polygon(b);
            json j = {{"x", x},
                      {"y", y},
                      {"unit_ball", io::to_json(b.full())},
                      {"dual", io::to_json(dual.full())},
                      {"dual_area", shoelace_area(dual.polygon())}};
            j["closed_form"] = closed ? json(*closed) : json(nullptr);
            report(out, j);
        } else if (*flags) {
            const FlagTuple ft = io::flag_tuple_from_json(read_json_file(in_path));
            const bool positive = is_positive(ft);
            json j = {{"k", ft.size()}, {"positive", positive}};
            if (ft.size() == 3) j["triple_ratio"] = triple_ratio(ft[0], ft[1], ft[2]);
            if (ft.size() == 4) {
                const FGQuadCoords c = quad_coords(ft);
                j["coords"] = {{"t", c.t}, {"tp", c.tp}, {"d", c.d}, {"dp", c.dp}};
            }
            if (positive) {
                const InscribedPair pair = polygons_from_flags(ft);
                const AreaResult r = ht_area(pair, spec);
                warn_unconverged(err, r);
                j["pair"] = io::to_json(pair);
                j["area"] = r.value;
                j["error_estimate"] = r.error_estimate;
            }
            report(out, j);
        }
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return exit_io;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_domain;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_domain;
    }
    return exit_ok;
}

}  // namespace htarea::cli
