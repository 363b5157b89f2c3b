#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "epscan/sweep.hpp"

namespace epscan {

namespace {

std::string num(double x) {
    if (x == 0.0) x = 0.0;  // no "-0"
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string short_num(double x) {
    if (std::abs(x) < 1e-12) x = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

std::string coord(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << text;
    out.flush();
    if (!out) throw IoError("write failed for " + path.string());
}

double part_of(const CplxF& v, PlotPart part) { return part == PlotPart::Real ? v.re() : v.im(); }

double nice_step(double range) {
    const double raw = range / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double f = raw / mag;
    return (f < 1.5 ? 1.0 : f < 3.5 ? 2.0 : f < 7.5 ? 5.0 : 10.0) * mag;
}

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                    "#9467bd", "#8c564b", "#e377c2", "#17becf"};

}  // namespace

std::string render_csv(const std::vector<Branch>& branches, const std::vector<CriticalPoint>& criticals) {
    std::ostringstream out;
    out << "# ep-scan v1\n[branches]\nbeta,branch_id,re,im\n";
    const std::size_t samples = branches.empty() ? 0 : branches.front().samples.size();
    for (std::size_t k = 0; k < samples; ++k) {
        for (const auto& b : branches) {
            const auto& s = b.samples[k];
            out << num(s.beta) << ',' << b.id << ',' << num(s.value.re()) << ',' << num(s.value.im()) << '\n';
        }
    }
    if (!criticals.empty()) {
        out << "[criticals]\nbeta,kind,lambda_re,lambda_im,alg_mult,geo_mult,disc_mult\n";
        for (const auto& c : criticals) {
            const CplxF lambda = approx(c.colliding_eigenvalue);
            out << num(c.beta.approx()) << ',' << to_string(c.kind) << ',' << num(lambda.re()) << ','
                << num(lambda.im()) << ',' << c.alg_mult << ',' << c.geo_mult << ',' << c.disc_multiplicity << '\n';
        }
    }
    return out.str();
}

void emit_csv(const std::vector<Branch>& branches, const std::vector<CriticalPoint>& criticals,
              const std::filesystem::path& path) {
    write_file(path, render_csv(branches, criticals));
}

std::string render_svg(const std::vector<Branch>& branches, const std::vector<CriticalPoint>& criticals,
                       PlotPart part, const SvgStyle& style) {
    if (style.width < 100 || style.height < 100) throw PreconditionError("SVG size must be at least 100x100");
    constexpr double left = 64, right = 16, top = 28, bottom = 44;
    const double w = style.width, h = style.height;

    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& b : branches) {
        for (const auto& s : b.samples) {
            xmin = std::min(xmin, s.beta);
            xmax = std::max(xmax, s.beta);
            ymin = std::min(ymin, part_of(s.value, part));
            ymax = std::max(ymax, part_of(s.value, part));
        }
    }
    if (!std::isfinite(xmin)) xmin = -1, xmax = 1, ymin = -1, ymax = 1;
    if (xmax - xmin <= 0) xmin -= 1, xmax += 1;
    if (ymax - ymin < 1e-9) ymin -= 1, ymax += 1;
    const double pad = 0.05 * (ymax - ymin);
    ymin -= pad;
    ymax += pad;

    auto sx = [&](double x) { return left + (x - xmin) / (xmax - xmin) * (w - left - right); };
    auto sy = [&](double y) { return h - bottom - (y - ymin) / (ymax - ymin) * (h - top - bottom); };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << style.width << "\" height=\""
        << style.height << "\" viewBox=\"0 0 " << style.width << ' ' << style.height << "\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << style.width << "\" height=\"" << style.height
        << "\" fill=\"white\"/>\n"
        << "<text x=\"" << coord(w / 2) << "\" y=\"18\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"13\">" << (part == PlotPart::Real ? "Re" : "Im") << " E(beta)</text>\n";

    // axes and ticks
    out << "<g stroke=\"black\" stroke-width=\"1\">\n"
        << "<line x1=\"" << coord(left) << "\" y1=\"" << coord(h - bottom) << "\" x2=\"" << coord(w - right)
        << "\" y2=\"" << coord(h - bottom) << "\"/>\n"
        << "<line x1=\"" << coord(left) << "\" y1=\"" << coord(top) << "\" x2=\"" << coord(left) << "\" y2=\""
        << coord(h - bottom) << "\"/>\n</g>\n";
    out << "<g font-family=\"sans-serif\" font-size=\"10\">\n";
    const double xs = nice_step(xmax - xmin);
    for (double t = std::ceil(xmin / xs) * xs; t <= xmax + 1e-9 * xs; t += xs) {
        out << "<line x1=\"" << coord(sx(t)) << "\" y1=\"" << coord(h - bottom) << "\" x2=\"" << coord(sx(t))
            << "\" y2=\"" << coord(h - bottom + 4) << "\" stroke=\"black\"/>"
            << "<text x=\"" << coord(sx(t)) << "\" y=\"" << coord(h - bottom + 16) << "\" text-anchor=\"middle\">"
            << short_num(t) << "</text>\n";
    }
    const double ys = nice_step(ymax - ymin);
    for (double t = std::ceil(ymin / ys) * ys; t <= ymax + 1e-9 * ys; t += ys) {
        out << "<line x1=\"" << coord(left - 4) << "\" y1=\"" << coord(sy(t)) << "\" x2=\"" << coord(left)
            << "\" y2=\"" << coord(sy(t)) << "\" stroke=\"black\"/>"
            << "<text x=\"" << coord(left - 6) << "\" y=\"" << coord(sy(t) + 3) << "\" text-anchor=\"end\">"
            << short_num(t) << "</text>\n";
    }
    out << "<text x=\"" << coord((left + w - right) / 2) << "\" y=\"" << coord(h - 8)
        << "\" text-anchor=\"middle\">beta</text>\n</g>\n";

    for (const auto& b : branches) {
        out << "<polyline id=\"branch-" << b.id << "\" class=\"branch\" fill=\"none\" stroke=\""
            << kPalette[b.id % std::size(kPalette)] << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t k = 0; k < b.samples.size(); ++k) {
            if (k > 0) out << ' ';
            out << coord(sx(b.samples[k].beta)) << ',' << coord(sy(part_of(b.samples[k].value, part)));
        }
        out << "\"/>\n";
    }

    for (const auto& c : criticals) {
        const double beta = c.beta.approx();
        const double y = part_of(approx(c.colliding_eigenvalue), part);
        if (beta < xmin || beta > xmax || y < ymin || y > ymax) continue;
        const double x = sx(beta), yy = sy(y);
        if (c.kind == CriticalKind::Exceptional) {
            out << "<g class=\"ep\" stroke=\"black\" stroke-width=\"2\">"
                << "<line x1=\"" << coord(x - 5) << "\" y1=\"" << coord(yy - 5) << "\" x2=\"" << coord(x + 5)
                << "\" y2=\"" << coord(yy + 5) << "\"/>"
                << "<line x1=\"" << coord(x - 5) << "\" y1=\"" << coord(yy + 5) << "\" x2=\"" << coord(x + 5)
                << "\" y2=\"" << coord(yy - 5) << "\"/></g>\n";
        } else if (part == PlotPart::Real) {
            out << "<circle class=\"degeneracy\" cx=\"" << coord(x) << "\" cy=\"" << coord(yy)
                << "\" r=\"5\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

void emit_svg(const std::vector<Branch>& branches, const std::vector<CriticalPoint>& criticals,
              const std::filesystem::path& path, PlotPart part, const SvgStyle& style) {
    write_file(path, render_svg(branches, criticals, part, style));
}

}  // namespace epscan
