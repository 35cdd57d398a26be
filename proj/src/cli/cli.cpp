#include "mmpkit/cli.hpp"

#include "mmpkit/schema.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

namespace mmpkit::cli {

namespace {

using schema::Json;
using schema::ValidationError;

struct Options {
    std::string input;
    std::string inline_json;
    std::string format = "text";
    std::optional<long> r;
    std::optional<long> bound;
    std::optional<long> vertex;
    std::optional<long> boundary;
    std::string edge;
    std::string point;
    std::string divisor;
    std::optional<long> chi0;
    std::optional<long> degree;
    std::optional<long> genus;
    bool quadric = false;
};

struct Report {
    Json result = Json::object();
    std::string rule;
    std::vector<std::string> qualifiers;
    std::vector<std::string> text;
};

Json load(const Options& o) {
    if (!o.input.empty() && !o.inline_json.empty())
        throw ValidationError(schema::kUsage, "--inline", "give either --input or --inline, not both");
    if (!o.inline_json.empty()) return schema::parse_document(o.inline_json);
    if (o.input.empty()) throw ValidationError(schema::kUsage, "--input", "an --input file or --inline JSON is required");
    std::ifstream in(o.input);
    if (!in) throw ValidationError("E_INPUT_READ", "--input", "cannot read '" + o.input + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return schema::parse_document(ss.str());
}

surface::SurfaceLattice load_surface(const Options& o) {
    const int sources = (o.r ? 1 : 0) + (o.quadric ? 1 : 0) + (!o.input.empty() || !o.inline_json.empty() ? 1 : 0);
    if (sources != 1)
        throw ValidationError(schema::kUsage, "--input",
                              "choose exactly one surface source: --input/--inline, --r N or --quadric");
    if (o.r) {
        if (*o.r < 0) throw ValidationError(schema::kUsage, "--r", "--r must be nonnegative");
        return surface::make_blowup_p2(static_cast<std::size_t>(*o.r));
    }
    if (o.quadric) return surface::make_quadric();
    return schema::parse_surface(load(o));
}

std::string vec_text(const IntVector& v) { return to_string(v); }

std::string rat_list_text(const RatVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
    return s + ")";
}

Json report_json(const graph::DiscrepancyReport& r, const graph::DualGraph& g) {
    Json j;
    j["d"] = schema::to_json(r.d);
    j["class"] = std::string(to_string(r.klass));
    j["du_val"] = r.du_val ? Json(r.du_val->name()) : Json(nullptr);
    j["minimal_resolution"] = r.minimal_resolution;
    j["intersection_matrix"] = schema::to_json(g.intersection_matrix());
    Json kd = Json::array();
    for (std::size_t i = 0; i < g.size(); ++i) kd.push_back(schema::to_json(g.canonical_degree(i)));
    j["canonical_degrees"] = kd;
    return j;
}

void report_text(const graph::DiscrepancyReport& r, std::vector<std::string>& text) {
    text.push_back("discrepancies: " + rat_list_text(r.d));
    text.push_back("class: " + std::string(to_string(r.klass)));
    text.push_back("du Val type: " + (r.du_val ? r.du_val->name() : std::string("none")));
    text.push_back(std::string("minimal resolution: ") + (r.minimal_resolution ? "yes" : "no"));
}

void graph_qualifiers(const graph::DiscrepancyReport& r, Report& rep) {
    if (!r.minimal_resolution)
        rep.qualifiers.push_back("classification is relative to the supplied resolution (K_Y not nef over X)");
    rep.qualifiers.push_back("dlt is not reported: it depends on the chosen resolution");
}

Report toric_classify(const Options& o) {
    const auto cone = schema::parse_cone(load(o));
    const auto cls = toric::classify_cone(cone);
    Report rep;
    auto& j = rep.result;
    j["rank"] = cone.rank();
    Json rays = Json::array();
    for (const auto& r : cone.rays()) rays.push_back(schema::to_json(r));
    j["rays"] = rays;
    j["class"] = std::string(toric::to_string(cls.kind));
    j["q_factorial"] = cls.q_factorial;
    Json hs = Json::array();
    for (const auto& h : toric::facets(cone)) hs.push_back(schema::to_json(h));
    j["facets"] = hs;
    j["klt"] = cls.functional.has_value();
    rep.text.push_back("class: " + std::string(toric::to_string(cls.kind)));
    rep.text.push_back(std::string("Q-factorial: ") + (cls.q_factorial ? "yes" : "no"));
    if (!cls.functional) {
        j["gorenstein_index"] = nullptr;
        j["support_functional"] = nullptr;
        j["points_at_or_below_one"] = nullptr;
        j["discrepancies"] = Json::array();
        rep.rule = "no m in M_Q takes the value 1 on every generator, so K is not Q-Cartier";
        return rep;
    }
    j["gorenstein_index"] = schema::to_json(*cls.gorenstein_index);
    j["support_functional"] = schema::to_json(cls.functional->m);
    Json pts = Json::array();
    for (const auto& p : toric::lattice_points_at_or_below_one(cone, *cls.functional)) pts.push_back(schema::to_json(p));
    j["points_at_or_below_one"] = pts;
    Json ds = Json::array();
    rep.text.push_back("Gorenstein index: " + cls.gorenstein_index->get_str());
    rep.text.push_back("support functional m = " + rat_list_text(cls.functional->m));
    rep.text.push_back("discrepancies of non-generator points with m <= 1:");
    for (const auto& p : cls.interior_points) {
        if (!is_primitive(p)) continue;
        const Rational d = toric::toric_discrepancy(cone, p);
        ds.push_back({{"point", schema::to_json(p)}, {"discrepancy", schema::to_json(d)}});
        rep.text.push_back("  " + vec_text(p) + " ↦ " + to_string(d));
    }
    j["discrepancies"] = ds;
    rep.rule = "terminal iff m(P) > 1 for every lattice point P of the cone other than 0 and the generators; "
               "canonical iff m(P) >= 1; Q-Gorenstein toric singularities are klt";
    return rep;
}

Report toric_discrepancy(const Options& o) {
    const auto cone = schema::parse_cone(load(o));
    if (o.point.empty()) throw ValidationError(schema::kUsage, "--point", "--point is required");
    const IntVector v = schema::parse_int_list(o.point, "--point");
    if (v.size() != cone.rank()) throw ValidationError(schema::kDimension, "--point", "--point has the wrong length");
    const Rational d = toric::toric_discrepancy(cone, v);
    Report rep;
    rep.result["point"] = schema::to_json(v);
    rep.result["discrepancy"] = schema::to_json(d);
    rep.text.push_back(vec_text(v) + " ↦ " + to_string(d));
    rep.rule = "discrepancy of the star subdivision at v is m(v) - 1";
    return rep;
}

Report graph_discrepancies(const Options& o) {
    const auto [g, b] = schema::parse_graph(load(o));
    const auto r = graph::discrepancies(g, b);
    Report rep;
    rep.result = report_json(r, g);
    report_text(r, rep.text);
    graph_qualifiers(r, rep);
    rep.rule = "sum_i d_i (E_i.E_j) = 2 p_a(E_j) - 2 - E_j^2 + B~.E_j, solved exactly";
    return rep;
}

Report graph_blowup(const Options& o) {
    const auto [g, b] = schema::parse_graph(load(o));
    graph::BlowupSite site;
    if (o.vertex && !o.edge.empty())
        throw ValidationError(schema::kUsage, "--edge", "give either --vertex or --edge, not both");
    if (o.vertex) {
        if (*o.vertex < 0) throw ValidationError(schema::kUsage, "--vertex", "--vertex must be nonnegative");
        const auto v = static_cast<std::size_t>(*o.vertex);
        if (o.boundary) {
            if (*o.boundary < 0) throw ValidationError(schema::kUsage, "--boundary", "--boundary must be nonnegative");
            site = graph::BoundaryPoint{v, static_cast<std::size_t>(*o.boundary)};
        } else {
            site = graph::FreePoint{v};
        }
    } else if (!o.edge.empty()) {
        const IntVector ij = schema::parse_int_list(o.edge, "--edge");
        if (ij.size() != 2 || ij[0] < 0 || ij[1] < 0)
            throw ValidationError(schema::kUsage, "--edge", "--edge expects two vertex indices i,j");
        site = graph::EdgePoint{ij[0].get_ui(), ij[1].get_ui()};
    } else {
        throw ValidationError(schema::kUsage, "--vertex", "one of --vertex or --edge is required");
    }
    const auto [g2, b2] = graph::blowup_vertex(g, b, site);
    Report rep;
    rep.result["graph"] = schema::to_json(g2, b2);
    rep.result["new_vertex"] = g2.size() - 1;
    rep.text.push_back("new vertex: " + std::to_string(g2.size() - 1) + " (genus 0, self-intersection -1)");
    if (graph::check_contractible(g2)) {
        const auto r = graph::discrepancies(g2, b2);
        rep.result["report"] = report_json(r, g2);
        report_text(r, rep.text);
        graph_qualifiers(r, rep);
    } else {
        rep.result["report"] = nullptr;
    }
    rep.rule = "blowing up a point: new curve has discrepancy 1 + sum of d_i through the point - sum of b_k through it";
    return rep;
}

Json trace_json(const surface::MmpTrace& t) {
    Json j;
    Json steps = Json::array();
    for (const auto& s : t.steps)
        steps.push_back({{"contracted", schema::to_json(s.contracted)},
                         {"rank_before", s.rank_before},
                         {"rank_after", s.rank_after}});
    j["steps"] = steps;
    j["outcome"] = std::string(surface::to_string(t.outcome));
    j["fibre"] = t.fibre ? schema::to_json(*t.fibre) : Json(nullptr);
    j["final"] = schema::to_json(t.final_lattice);
    j["notes"] = t.notes;
    return j;
}

Report mmp_run(const Options& o) {
    const auto s = load_surface(o);
    const auto t = surface::run_classical_mmp(s, o.bound);
    Report rep;
    rep.result = trace_json(t);
    for (const auto& st : t.steps)
        rep.text.push_back("contract " + vec_text(st.contracted) + ": rho " + std::to_string(st.rank_before) +
                           " -> " + std::to_string(st.rank_after));
    rep.text.push_back("outcome: " + std::string(surface::to_string(t.outcome)) +
                       (t.fibre ? " with fibre " + vec_text(*t.fibre) : std::string()));
    rep.text.push_back("final K = " + vec_text(t.final_lattice.canonical));
    for (const auto& n : t.notes) rep.text.push_back("note: " + n);
    rep.qualifiers.push_back("verdicts are relative to the supplied curve classes");
    rep.rule = "contract the lexicographically smallest class with C^2 = K.C = -1 until none is left";
    return rep;
}

Report delpezzo_lines(const Options& o) {
    const auto s = load_surface(o);
    const auto classes = surface::enumerate_minus_one_classes(s, o.bound);
    Report rep;
    rep.result["count"] = classes.size();
    Json cs = Json::array();
    for (const auto& c : classes) cs.push_back(schema::to_json(c));
    rep.result["classes"] = cs;
    rep.text.push_back("(-1)-classes: " + std::to_string(classes.size()));
    for (const auto& c : classes) rep.text.push_back("  " + vec_text(c));
    rep.rule = "all C with C^2 = -1 and K.C = -1";
    return rep;
}

Report cone_rays(const Options& o) {
    const auto s = load_surface(o);
    const auto rays = surface::cone_rays_rank2(s);
    Report rep;
    rep.result["rays"] = Json::array({schema::to_json(rays.first), schema::to_json(rays.second)});
    rep.text.push_back("extremal rays: " + vec_text(rays.first) + ", " + vec_text(rays.second));
    rep.qualifiers.push_back("cone spanned by the supplied curve classes only");
    rep.rule = "boundary rays of the planar cone, ordered counterclockwise";
    return rep;
}

IntVector divisor_arg(const Options& o, const surface::SurfaceLattice& s) {
    if (o.divisor.empty()) throw ValidationError(schema::kUsage, "--divisor", "--divisor is required");
    IntVector d = schema::parse_int_list(o.divisor, "--divisor");
    if (d.size() != s.rank()) throw ValidationError(schema::kDimension, "--divisor", "--divisor has the wrong length");
    return d;
}

Report nef_check(const Options& o) {
    const auto s = load_surface(o);
    const IntVector d = divisor_arg(o, s);
    Report rep;
    const bool nef = surface::is_nef(s, d);
    const bool ample = surface::is_ample_kleiman(s, d);
    rep.result["divisor"] = schema::to_json(d);
    rep.result["nef"] = nef;
    rep.result["ample"] = ample;
    rep.result["self_intersection"] = schema::to_json(s.square(d));
    Json degs = Json::array();
    for (const auto& c : s.curves) degs.push_back(schema::to_json(s.dot(d, c)));
    rep.result["degrees_on_curves"] = degs;
    rep.text.push_back(std::string("nef: ") + (nef ? "yes" : "no"));
    rep.text.push_back(std::string("ample (Kleiman): ") + (ample ? "yes" : "no"));
    rep.qualifiers.push_back("relative to the supplied curve classes");
    rep.rule = "nef iff D.C >= 0 on every listed curve; ample iff D.C > 0 on every listed curve and D^2 > 0";
    return rep;
}

Report rr(const Options& o) {
    Report rep;
    if (o.degree || o.genus) {
        if (!o.degree || !o.genus)
            throw ValidationError(schema::kUsage, "--degree", "curve mode needs both --degree and --genus");
        if (*o.genus < 0) throw ValidationError(schema::kUsage, "--genus", "--genus must be nonnegative");
        const Integer chi = kodaira::riemann_roch_curve(Integer(*o.degree), *o.genus);
        rep.result["chi"] = schema::to_json(Rational(chi));
        rep.result["integral"] = true;
        rep.text.push_back("chi = " + chi.get_str());
        rep.rule = "chi(O(D)) = 1 + deg D - g on a curve";
        return rep;
    }
    const auto s = load_surface(o);
    const IntVector d = divisor_arg(o, s);
    const Rational chi = surface::riemann_roch_surface(s, d, Integer(o.chi0.value_or(1)));
    const bool integral = chi.get_den() == 1;
    rep.result["chi"] = schema::to_json(chi);
    rep.result["integral"] = integral;
    rep.text.push_back("chi = " + to_string(chi));
    if (!integral) rep.qualifiers.push_back("non-integral Euler characteristic: the lattice data are inconsistent");
    rep.rule = "chi(O(D)) = D.(D-K)/2 + chi(O_X) on a surface";
    return rep;
}

Report kappa_estimate(const Options& o) {
    std::optional<long> max_dim;
    const auto samples = schema::parse_plurigenera(load(o), max_dim);
    const auto k = kodaira::estimate_kappa(samples, max_dim);
    Report rep;
    rep.result["kappa"] = k.to_string();
    rep.result["note"] = k.note;
    rep.text.push_back("kappa = " + k.to_string() + " (" + k.note + ")");
    rep.qualifiers.push_back("finite-sample estimate of a limsup");
    rep.rule = "growth exponent of P_m";
    return rep;
}

Report pair_classify(const Options& o) {
    const auto coeffs = schema::parse_coefficients(load(o));
    const auto cls = kodaira::classify_pair_on_curve(coeffs);
    Report rep;
    rep.result["class"] = std::string(kodaira::to_string(cls));
    const bool in_range = std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& b) { return b <= 1; });
    rep.result["fano_on_p1"] = in_range ? Json(kodaira::fano_pair_on_p1_check(coeffs)) : Json(nullptr);
    rep.text.push_back("class: " + std::string(kodaira::to_string(cls)));
    if (in_range)
        rep.text.push_back(std::string("-(K+B) ample on P^1: ") + (kodaira::fano_pair_on_p1_check(coeffs) ? "yes" : "no"));
    rep.rule = "on a curve: klt iff every coefficient < 1, lc iff every coefficient <= 1, canonical iff B = 0";
    return rep;
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact discrepancies, surface MMP and Kodaira dimension tools", "mmpkit"};
    app.require_subcommand(1, 1);
    Options o;

    const std::map<std::string, std::pair<std::string, std::function<Report(const Options&)>>> commands = {
        {"toric-classify", {"classify the toric singularity of a cone", toric_classify}},
        {"toric-discrepancy", {"discrepancy of the toric valuation at --point", toric_discrepancy}},
        {"graph-discrepancies", {"discrepancies and class of a resolution dual graph", graph_discrepancies}},
        {"graph-blowup", {"blow up a point on a dual graph", graph_blowup}},
        {"mmp-run", {"run the classical surface MMP", mmp_run}},
        {"delpezzo-lines", {"enumerate (-1)-classes", delpezzo_lines}},
        {"cone-rays", {"extremal rays of a rank-2 curve cone", cone_rays}},
        {"nef-check", {"nef and Kleiman ampleness of --divisor", nef_check}},
        {"rr", {"Riemann-Roch on a surface (--divisor) or a curve (--degree, --genus)", rr}},
        {"kappa-estimate", {"estimate Kodaira dimension from plurigenera", kappa_estimate}},
        {"pair-classify", {"classify a pair on a curve from boundary coefficients", pair_classify}},
    };
    std::map<std::string, CLI::App*> subs;
    for (const auto& [name, entry] : commands) {
        auto* sub = app.add_subcommand(name, entry.first);
        sub->add_option("--input", o.input, "input JSON file");
        sub->add_option("--inline", o.inline_json, "input JSON document");
        sub->add_option("--format", o.format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
        if (name == "mmp-run" || name == "delpezzo-lines" || name == "cone-rays" || name == "nef-check" ||
            name == "rr") {
            sub->add_option("--r", o.r, "use P^2 blown up at r points");
            sub->add_flag("--quadric", o.quadric, "use P^1 x P^1");
        }
        if (name == "mmp-run" || name == "delpezzo-lines")
            sub->add_option("--bound", o.bound, "cap on |h.C| for lattices without K^2 > 0");
        if (name == "graph-blowup") {
            sub->add_option("--vertex", o.vertex, "blow up a point of this vertex");
            sub->add_option("--boundary", o.boundary, "with --vertex: the point where this boundary component meets it");
            sub->add_option("--edge", o.edge, "blow up an intersection point i,j");
        }
        if (name == "toric-discrepancy") sub->add_option("--point", o.point, "primitive lattice point, e.g. 1,0");
        if (name == "nef-check" || name == "rr") sub->add_option("--divisor", o.divisor, "divisor class, e.g. 1,1");
        if (name == "rr") {
            sub->add_option("--chi0", o.chi0, "chi(O_X) = 1 + p_a(X); default 1");
            sub->add_option("--degree", o.degree, "curve mode: deg D");
            sub->add_option("--genus", o.genus, "curve mode: genus");
        }
        subs[name] = sub;
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    std::string command;
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        const bool machine = std::find(args.begin(), args.end(), "machine") != args.end();
        if (machine) {
            emit(out, {{"status", "error"},
                       {"exit_code", static_cast<int>(kValidation)},
                       {"error", {{"code", schema::kUsage}, {"pointer", ""}, {"message", e.what()}}}});
        } else {
            err << "error [" << schema::kUsage << "]: " << e.what() << '\n';
        }
        return kValidation;
    }
    for (const auto& [name, sub] : subs)
        if (sub->parsed()) command = name;
    const bool machine = o.format == "machine";

    auto fail = [&](int code, const std::string& ecode, const std::string& pointer, const std::string& message) {
        if (machine)
            emit(out, {{"command", command},
                       {"status", "error"},
                       {"exit_code", code},
                       {"error", {{"code", ecode}, {"pointer", pointer}, {"message", message}}}});
        else
            err << "error [" << ecode << (pointer.empty() ? "" : " at " + pointer) << "]: " << message << '\n';
        return code;
    };

    try {
        Report rep = commands.at(command).second(o);
        if (machine) {
            emit(out, {{"command", command},
                       {"status", "ok"},
                       {"result", rep.result},
                       {"rule", rep.rule},
                       {"qualifiers", rep.qualifiers}});
        } else {
            for (const auto& line : rep.text) out << line << '\n';
            for (const auto& q : rep.qualifiers) out << "(" << q << ")\n";
            out << "rule: " << rep.rule << '\n';
        }
        return kOk;
    } catch (const ValidationError& e) {
        return fail(kValidation, e.code(), e.pointer(), e.what());
    } catch (const MathError& e) {
        return fail(kPrecondition, std::string(to_string(e.code())), "", e.detail());
    } catch (const std::exception& e) {
        return fail(kInternal, "E_INTERNAL", "", e.what());
    }
}

} // namespace mmpkit::cli
