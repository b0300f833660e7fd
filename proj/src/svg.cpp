#include "svg.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace weylscope {

namespace {

using P2 = std::array<double, 2>;

constexpr double kScale = 260.0;
constexpr double kCenter = 300.0;
constexpr int kWidth = 960;
constexpr int kHeight = 600;

const char* const kPalette[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
                                "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f"};

std::string num(double x) {
    if (std::abs(x) < 5e-4) x = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else if (c == '&') out += "&amp;";
        else out += c;
    }
    return out;
}

// u = L·e with G = L·Lᵀ, so e are orthonormal coordinates for the form G.
struct Realization {
    double a, b, c;

    explicit Realization(const RootDatum& d) {
        const auto& g = d.gram();
        a = std::sqrt(g[0][0].convert_to<double>());
        b = g[1][0].convert_to<double>() / a;
        c = std::sqrt(g[1][1].convert_to<double>() - b * b);
    }
    P2 point(const Vec& u) const {
        double e0 = u[0].convert_to<double>() / a;
        return {e0, (u[1].convert_to<double>() - b * e0) / c};
    }
    P2 normal(const Functional& phi) const {
        return {a * static_cast<double>(phi[0]) + b * static_cast<double>(phi[1]), c * static_cast<double>(phi[1])};
    }
};

double dot2(const P2& n, const P2& p) { return n[0] * p[0] + n[1] * p[1]; }

std::vector<P2> clip(std::vector<P2> poly, const P2& n) {
    std::vector<P2> out;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const P2& p = poly[i];
        const P2& q = poly[(i + 1) % poly.size()];
        double fp = dot2(n, p), fq = dot2(n, q);
        if (fp <= 0) out.push_back(p);
        if ((fp < 0 && fq > 0) || (fp > 0 && fq < 0)) {
            double t = fp / (fp - fq);
            out.push_back({p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])});
        }
    }
    return out;
}

P2 to_screen(const P2& e) { return {kCenter + kScale * e[0], kCenter - kScale * e[1]}; }

P2 to_boundary(P2 dir) {
    double m = std::max(std::abs(dir[0]), std::abs(dir[1]));
    return {dir[0] / m, dir[1] / m};
}

}  // namespace

std::string render_svg(const LabeledPrefan& f, SvgSummary* summary) {
    const RootDatum& d = *f.datum;
    if (d.rank() != 2) throw ValidationError("render needs a rank-2 datum, got rank " + std::to_string(d.rank()));
    Realization real(d);
    SvgSummary sum;

    std::ostringstream shapes, labels, legend;
    for (int s = 0; s < f.fan.size(); ++s) {
        const Cone& c = f.fan.cone(s);
        const std::string tag = "S" + std::to_string(s);
        P2 anchor{0.0, 0.0};
        if (c.dim() == 2) {
            std::vector<P2> poly{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}};
            for (const auto& phi : c.inequalities()) poly = clip(poly, real.normal(phi));
            for (const auto& phi : c.equalities()) {
                poly = clip(poly, real.normal(phi));
                poly = clip(poly, {-real.normal(phi)[0], -real.normal(phi)[1]});
            }
            shapes << "  <polygon class=\"cone2\" points=\"";
            for (std::size_t i = 0; i < poly.size(); ++i) {
                P2 p = to_screen(poly[i]);
                shapes << (i ? " " : "") << num(p[0]) << "," << num(p[1]);
                anchor[0] += poly[i][0] / static_cast<double>(poly.size());
                anchor[1] += poly[i][1] / static_cast<double>(poly.size());
            }
            shapes << "\" fill=\"" << kPalette[s % 12] << "\" stroke=\"none\"/>\n";
            ++sum.polygons;
        } else if (c.dim() == 1) {
            P2 end = to_boundary(real.point(c.interior_point()));
            P2 start = c.lineality().empty() ? P2{0.0, 0.0} : P2{-end[0], -end[1]};
            P2 p = to_screen(start), q = to_screen(end);
            shapes << "  <line class=\"cone1\" x1=\"" << num(p[0]) << "\" y1=\"" << num(p[1]) << "\" x2=\"" << num(q[0])
                   << "\" y2=\"" << num(q[1]) << "\" stroke=\"#333333\" stroke-width=\"2\"/>\n";
            anchor = {0.82 * end[0], 0.82 * end[1]};
            ++sum.rays;
        } else {
            shapes << "  <circle class=\"cone0\" cx=\"" << num(kCenter) << "\" cy=\"" << num(kCenter)
                   << "\" r=\"4\" fill=\"#000000\"/>\n";
            anchor = {0.04, -0.06};
            ++sum.points;
        }
        P2 at = to_screen(anchor);
        labels << "  <text x=\"" << num(at[0]) << "\" y=\"" << num(at[1]) << "\">" << tag << "</text>\n";
        ParabolicSet q = f.parabolic(s);
        legend << "  <text x=\"620\" y=\"" << 60 + 18 * s << "\">" << tag << "  dim " << c.dim() << "  parabolic #"
               << f.parabolic_ids[s] << "  type " << escape(type_of(q).str()) << (is_standard(q) ? "  standard" : "")
               << "</text>\n";
    }

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth << "\" height=\""
        << std::max(kHeight, 80 + 18 * f.fan.size()) << "\" font-family=\"monospace\" font-size=\"12\">\n"
        << "  <rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << std::max(kHeight, 80 + 18 * f.fan.size())
        << "\" fill=\"#ffffff\"/>\n"
        << shapes.str() << labels.str() << "  <text x=\"620\" y=\"36\" font-weight=\"bold\">"
        << escape(d.label()) << "  type " << escape(f.type.str()) << "  strata " << f.fan.size() << "</text>\n"
        << legend.str() << "</svg>\n";
    if (summary) *summary = sum;
    return out.str();
}

}  // namespace weylscope
