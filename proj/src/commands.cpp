#include "commands.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <sstream>

#include "io.hpp"
#include "svg.hpp"

namespace weylscope {

namespace {

using io::json;
using io::to_json;

struct Options {
    std::string datum, datum_file, type = "none", json_path;
    // per-command
    bool check = false, all = false, group = false;
    int parabolic_id = -1;
    std::string levi, u0, v, ray_file, point_file, interior, poly_file, u, to_type, values, seminorm_file, out_path;
    int chart = -1;
};

std::string show(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
    return s + ")";
}

std::string show(const IVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + ")";
}

std::string show(const RootDatum& d, const RootSet& s) {
    std::string out = "{";
    bool first = true;
    for (int k : s.indices()) {
        out += (first ? "" : " ") + show(d.root(k));
        first = false;
    }
    return out + "}";
}

std::string complement_name(TypeLabel y, int rank) {
    TypeLabel rest{TypeLabel::full(rank).mask & ~y.mask};
    return rest.mask == 0 ? "Δ" : "Δ−" + rest.str();
}

std::string describe(const ParabolicSet& q) {
    std::ostringstream s;
    s << "#" << parabolic_id(q) << " type " << type_of(q) << (is_standard(q) ? " standard" : "");
    return s.str();
}

void write_json(const Options& o, const json& j, std::ostream& out) {
    if (o.json_path.empty()) return;
    if (o.json_path == "-") {
        out << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(o.json_path, std::ios::binary);
    if (!f) throw ValidationError("cannot write " + o.json_path);
    f << j.dump(2) << "\n";
}

struct Session {
    DatumPtr datum;
    TypeLabel type;
};

Session open(const Options& o) {
    Session s;
    s.datum = io::load_datum(o.datum, o.datum_file);
    s.type = io::parse_type(o.type, *s.datum);
    return s;
}

CompactApartmentPoint read_point(const Options& o, const ApartmentContext& ctx) {
    if (!o.point_file.empty() && !o.interior.empty()) throw ValidationError("give either --point-file or --interior");
    if (!o.interior.empty()) return interior_point(ctx, io::parse_vec(o.interior, ctx.datum()->rank()));
    if (o.point_file.empty()) throw ValidationError("a point is required (--point-file or --interior)");
    return io::point_from_json(io::load_document(o.point_file), ctx);
}

void print_point(std::ostream& out, const CompactApartmentPoint& x) {
    out << "stratum " << describe(x.stratum) << " (S" << x.point.stratum << ")\n"
        << "residual " << show(x.point.residual) << "\n";
}

void print_fan(std::ostream& out, const LabeledPrefan& f) {
    for (int s = 0; s < f.fan.size(); ++s)
        out << "S" << s << "  dim " << f.fan.cone(s).dim() << "  parabolic " << describe(f.parabolic(s)) << "\n";
}

int cmd_datum_info(const Options& o, std::ostream& out) {
    auto d = io::load_datum(o.datum, o.datum_file);
    out << "datum " << d->label() << "\n"
        << "rank " << d->rank() << "\n"
        << "roots " << d->num_roots() << " (" << d->num_positive() << " positive)\n"
        << "|W| = " << d->weyl_order() << "\n";
    json j{{"name", d->label()}, {"rank", d->rank()}, {"cartan", d->cartan()}, {"weyl_order", d->weyl_order()}};
    j["roots"] = json::array();
    for (int k = 0; k < d->num_roots(); ++k)
        j["roots"].push_back({{"index", k}, {"root", d->root(k)}, {"positive", d->is_positive(k)}, {"height", d->height(k)}});
    j["components"] = json::array();
    for (TypeLabel c : d->components()) j["components"].push_back(c.str());
    if (d->weyl_order() <= enumeration_cap()) {
        auto n = all_parabolics(d).size();
        out << "parabolics containing T " << n << "\n";
        j["num_parabolics"] = n;
    }
    write_json(o, j, out);
    return 0;
}

int cmd_fan(const Options& o, std::ostream& out) {
    auto d = io::load_datum(o.datum, o.datum_file);
    auto f = weyl_fan(d);
    out << "Weyl fan of " << d->label() << ": " << f.fan.size() << " cones\n";
    print_fan(out, f);
    write_json(o, to_json(f), out);
    return 0;
}

int cmd_prefan(const Options& o, std::ostream& out) {
    auto s = open(o);
    auto f = prefan_of_type(s.datum, s.type);
    out << "prefan of type " << s.type << " on " << s.datum->label() << ": " << f.fan.size() << " cones\n";
    print_fan(out, f);
    json j = to_json(f);
    if (o.check) {
        auto missing = missing_face(f.fan);
        check_common_faces(f.fan);
        bool cov = covers(f.fan);
        auto support = type_support(*s.datum, s.type);
        bool lineality_ok = true;
        for (const auto& c : f.fan.cones()) {
            bool maximal = std::none_of(f.fan.cones().begin(), f.fan.cones().end(),
                                        [&](const Cone& e) { return e.dim() > c.dim() && e.contains_cone(c); });
            if (maximal && c.lineality().size() != support.lineality.size()) lineality_ok = false;
        }
        out << "faces closed " << (missing ? "no" : "yes") << "\n"
            << "common faces yes\n"
            << "covers V " << (cov ? "yes" : "no") << "\n"
            << "lineality of maximal cones = Λ(S″) " << (lineality_ok ? "yes" : "no") << "\n";
        j["check"] = {{"faces_closed", !missing}, {"common_faces", true}, {"covers", cov}, {"lineality", lineality_ok}};
        write_json(o, j, out);
        if (missing || !cov || !lineality_ok) throw Error("prefan check failed");
        return 0;
    }
    write_json(o, j, out);
    return 0;
}

int cmd_relevant(const Options& o, std::ostream& out) {
    auto s = open(o);
    const int n = s.datum->rank();
    json j{{"type", s.type.str()}, {"standard", json::array()}};
    out << "relevant standard parabolics for type " << s.type << ":\n";
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        auto q = standard_parabolic(s.datum, TypeLabel{m});
        auto r = relevance(q, s.type);
        j["standard"].push_back(to_json(r));
        if (r.is_relevant) out << "  " << TypeLabel{m} << "  (" << complement_name(TypeLabel{m}, n) << ")\n";
    }
    if (o.all) {
        j["all"] = json::array();
        out << "all relevant parabolics containing T:\n";
        for (const auto& p : all_parabolics(s.datum)) {
            auto r = relevance(p.set, s.type);
            j["all"].push_back(to_json(r));
            if (r.is_relevant) out << "  " << describe(p.set) << "\n";
        }
    }
    write_json(o, j, out);
    return 0;
}

ParabolicSet chosen_parabolic(const Options& o, const Session& s) {
    if (o.parabolic_id >= 0 && !o.levi.empty()) throw ValidationError("give either --parabolic-id or --levi");
    if (o.parabolic_id >= 0) return parabolic_by_id(s.datum, o.parabolic_id);
    return standard_parabolic(s.datum, io::parse_type(o.levi, *s.datum));
}

int cmd_cone(const Options& o, std::ostream& out) {
    auto s = open(o);
    auto q = chosen_parabolic(o, s);
    auto tc = type_cone(q, s.type);
    auto r = relevance(q, s.type);
    out << "parabolic " << describe(q) << "\n"
        << "cone C_t(Q) for t = " << s.type << ": dim " << tc.cone.dim() << "\n";
    for (const auto& phi : tc.cone.inequalities()) out << "  " << show(phi) << " <= 0\n";
    for (const auto& phi : tc.cone.equalities()) out << "  " << show(phi) << " = 0\n";
    out << "relevant " << (r.is_relevant ? "yes" : "no") << "\n"
        << "minimal relevant " << describe(r.minimal_relevant) << "\n";
    json j{{"parabolic", io::parabolic_json(q)}, {"cone", to_json(tc.cone)}, {"relevance", to_json(r)}};
    if (r.is_relevant) {
        auto rt = rt_decomposition(q, s.type);
        j["rt"] = {{"nonvanishing", io::roots_json(*s.datum, rt.nonvanishing)},
                   {"vanishing", io::roots_json(*s.datum, rt.vanishing)}};
    }
    write_json(o, j, out);
    return 0;
}

int cmd_limit(const Options& o, std::ostream& out) {
    auto s = open(o);
    ApartmentContext ctx(s.datum, s.type);
    const int n = s.datum->rank();
    Vec u0, v;
    if (!o.ray_file.empty()) {
        if (!o.u0.empty() || !o.v.empty()) throw ValidationError("give either --ray-file or --u0/--v");
        auto doc = io::load_document(o.ray_file);
        u0 = io::get_vec(doc, json::json_pointer("/u0"), n);
        v = io::get_vec(doc, json::json_pointer("/v"), n);
    } else {
        if (o.u0.empty() || o.v.empty()) throw ValidationError("a ray needs --u0 and --v (or --ray-file)");
        u0 = io::parse_vec(o.u0, n);
        v = io::parse_vec(o.v, n);
    }
    auto x = limit_point(ctx, u0, v);
    out << "limit of u0 + n*v, u0 = " << show(u0) << ", v = " << show(v) << "\n";
    print_point(out, x);
    write_json(o, to_json(x), out);
    return 0;
}

int cmd_seminorm(const Options& o, std::ostream& out) {
    auto s = open(o);
    if (o.poly_file.empty()) throw ValidationError("--poly-file is required");
    auto f = io::poly_from_json(io::load_document(o.poly_file), *s.datum);
    json j{{"polynomial", to_json(f)}};
    ExtendedValue val;
    if (o.group) {
        if (o.u.empty()) throw ValidationError("--group needs --u");
        Vec u = io::parse_vec(o.u, s.datum->rank());
        val = group_seminorm_eval(*s.datum, u, f);
        out << "group seminorm at u = " << show(u) << "\n";
        j["u"] = to_json(u);
    } else {
        ApartmentContext ctx(s.datum, s.type);
        auto x = read_point(o, ctx);
        int ch = o.chart >= 0 ? ctx.chart_of(parabolic_by_id(s.datum, o.chart)) : accepting_chart(ctx, x);
        val = seminorm_eval(ctx, x, f, ctx.chart(ch));
        print_point(out, x);
        out << "chart " << describe(ctx.chart(ch).parabolic) << "\n";
        j["point"] = to_json(x);
        j["chart"] = ctx.chart(ch).parabolic_id;
    }
    out << "log |f| = " << val << "\n";
    j["value"] = val.str();
    write_json(o, j, out);
    return 0;
}

int cmd_stabilizer(const Options& o, std::ostream& out) {
    auto s = open(o);
    ApartmentContext ctx(s.datum, s.type);
    auto x = read_point(o, ctx);
    auto p = stabilizer_profile(ctx, x);
    const RootDatum& d = *s.datum;
    print_point(out, x);
    out << "full root groups (unipotent radical) " << show(d, p.full_unipotent) << "\n"
        << "full root groups (Levi) " << show(d, p.full_levi) << "\n"
        << "filtered root groups:\n";
    for (const auto& [k, level] : p.filtered) out << "  " << show(d.root(k)) << " at level " << to_string(level) << "\n";
    out << "torus part " << p.normalizer_note << "\n";
    write_json(o, to_json(p), out);
    return 0;
}

int cmd_project(const Options& o, std::ostream& out) {
    auto s = open(o);
    TypeLabel t2 = io::parse_type(o.to_type, *s.datum);
    check_type_order(s.type, t2);
    ApartmentContext from(s.datum, s.type), to(s.datum, t2);
    auto x = read_point(o, from);
    auto y = project(from, to, x);
    out << "from type " << s.type << ":\n";
    print_point(out, x);
    out << "to type " << t2 << ":\n";
    print_point(out, y);
    write_json(o, {{"from", to_json(x)}, {"to", to_json(y)}, {"to_type", t2.str()}}, out);
    return 0;
}

int cmd_pgl(const Options& o, std::ostream& out) {
    if (!o.values.empty() && !o.seminorm_file.empty()) throw ValidationError("give either --values or --seminorm-file");
    if (o.values.empty() && o.seminorm_file.empty()) throw ValidationError("a seminorm is required (--values or --seminorm-file)");
    DiagSeminorm sn = o.values.empty() ? io::seminorm_from_json(io::load_document(o.seminorm_file))
                                       : DiagSeminorm(io::parse_extended_list(o.values));
    if (sn.d() < 1 || sn.d() > 5) throw ValidationError("PGL model supports 2 <= dim V <= 6");
    auto m = pgl_model(sn.d());
    auto x = to_apartment_point(m, sn);
    auto b = stabilizer_blocks(m, sn);
    const RootDatum& a = *m.context->datum();
    out << "seminorm " << sn << " on k^" << sn.dimension() << "\n"
        << "kernel {";
    auto ker = kernel(sn);
    for (std::size_t i = 0; i < ker.size(); ++i) out << (i ? "," : "") << "e" << ker[i] + 1;
    out << "}\n";
    print_point(out, x);
    out << "full root groups " << show(a, b.full) << "\n"
        << "filtered root groups:\n";
    json filtered = json::array();
    for (const auto& [k, level] : b.filtered) {
        out << "  " << show(a.root(k)) << " at level " << to_string(level) << "\n";
        filtered.push_back({{"root", a.root(k)}, {"level", to_string(level)}});
    }
    write_json(o,
               {{"seminorm", to_json(sn)},
                {"kernel", ker},
                {"point", to_json(x)},
                {"blocks", {{"full", io::roots_json(a, b.full)}, {"filtered", filtered}}}},
               out);
    return 0;
}

int cmd_render(const Options& o, std::ostream& out) {
    auto s = open(o);
    if (o.out_path.empty()) throw ValidationError("--out is required");
    auto f = prefan_of_type(s.datum, s.type);
    SvgSummary sum;
    std::string svg = render_svg(f, &sum);
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) throw ValidationError("cannot write " + o.out_path);
    file << svg;
    out << "wrote " << o.out_path << ": " << sum.polygons << " two-dimensional cones, " << sum.rays << " rays, "
        << sum.points << " origin\n";
    write_json(o, to_json(f), out);
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Combinatorics of compactified apartments of split reductive groups", "weylscope"};
    app.require_subcommand(1);
    Options o;
    std::function<int(const Options&, std::ostream&)> action;

    auto sub = [&](const std::string& name, const std::string& help, auto fn, bool typed) {
        CLI::App* c = app.add_subcommand(name, help);
        c->add_option("--datum", o.datum, "named datum, e.g. A2, B3, A1xA1");
        c->add_option("--datum-file", o.datum_file, "datum JSON file");
        if (typed) c->add_option("--type", o.type, "type t: a1,a3 | none | delta | all")->capture_default_str();
        c->add_option("--json", o.json_path, "write the JSON report to this path (- for stdout)");
        c->callback([&action, fn] { action = fn; });
        return c;
    };

    sub("datum-info", "root datum summary", cmd_datum_info, false);
    sub("fan", "Weyl fan", cmd_fan, false);
    sub("prefan", "prefan of a type", cmd_prefan, true)->add_flag("--check", o.check, "verify the prefan axioms");
    sub("relevant", "t-relevant parabolics", cmd_relevant, true)->add_flag("--all", o.all, "also list non-standard ones");
    auto* cone = sub("cone", "cone C_t(Q) of a parabolic", cmd_cone, true);
    cone->add_option("--parabolic-id", o.parabolic_id, "parabolic index (see fan --json)");
    cone->add_option("--levi", o.levi, "standard parabolic with these simple roots in its Levi");
    auto* limit = sub("limit", "limit of the ray u0 + n*v", cmd_limit, true);
    limit->add_option("--u0", o.u0, "base point, comma separated");
    limit->add_option("--v", o.v, "direction, comma separated");
    limit->add_option("--ray-file", o.ray_file, "JSON file {\"u0\": [...], \"v\": [...]}");
    auto* sn = sub("seminorm", "evaluate a boundary seminorm", cmd_seminorm, true);
    sn->add_option("--point-file", o.point_file, "point JSON file");
    sn->add_option("--interior", o.interior, "interior point u, comma separated");
    sn->add_option("--poly-file", o.poly_file, "tropical polynomial JSON file");
    sn->add_option("--chart", o.chart, "parabolic index of the chart");
    sn->add_flag("--group", o.group, "evaluate the group seminorm at --u");
    sn->add_option("--u", o.u, "point u for --group");
    auto* stab = sub("stabilizer", "stabilizer profile of a point", cmd_stabilizer, true);
    stab->add_option("--point-file", o.point_file, "point JSON file");
    stab->add_option("--interior", o.interior, "interior point u, comma separated");
    auto* proj = sub("project", "projection to a larger type", cmd_project, true);
    proj->add_option("--point-file", o.point_file, "point JSON file");
    proj->add_option("--interior", o.interior, "interior point u, comma separated");
    proj->add_option("--to-type", o.to_type, "target type")->required();
    auto* pgl = sub("pgl", "diagonal seminorm on k^(d+1)", cmd_pgl, false);
    pgl->add_option("--values", o.values, "log values c_i, comma separated, -inf allowed");
    pgl->add_option("--seminorm-file", o.seminorm_file, "JSON file {\"values\": [...]}");
    sub("render", "SVG of a rank-2 compactified apartment", cmd_render, true)->add_option("--out", o.out_path, "SVG path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        auto subs = app.get_subcommands();
        out << (subs.empty() ? app.help() : subs.front()->help());
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "weylscope: " << e.what() << "\n";
        return 2;
    }

    try {
        return action(o, out);
    } catch (const CapExceeded& e) {
        err << "weylscope: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "weylscope: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace weylscope
