#include "epscan/cli/commands.hpp"

#include <cstdio>
#include <sstream>

#include "epscan/charpoly.hpp"

namespace epscan::cli {

namespace {

std::string fmt_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
    return buf;
}

std::string fmt(const Rational& r) { return r.str(); }
std::string fmt(const CplxF& z) { return to_string(SpectralValue(z)); }

template <class S>
std::string fmt_vector(const Vector<S>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + fmt(v[i]);
    return out + ")";
}

template <class S>
void print_matrix(std::ostream& os, const char* name, const Matrix<S>& m) {
    std::vector<std::string> cells;
    std::size_t width = 0;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) {
            cells.push_back(fmt(m(i, j)));
            width = std::max(width, cells.back().size());
        }
    os << name << " =\n";
    for (std::size_t i = 0; i < m.dim(); ++i) {
        os << "  [";
        for (std::size_t j = 0; j < m.dim(); ++j) {
            const std::string& c = cells[i * m.dim() + j];
            os << (j ? "  " : "") << std::string(width - c.size(), ' ') << c;
        }
        os << "]\n";
    }
}

std::string fmt_beta(const IsolatedRoot& r) {
    if (r.is_exact()) return r.exact->str();
    return "~" + fmt_double(r.approx());
}

std::string family_label(const AffineFamily& fam) {
    return fam.name().empty() ? "<unnamed>" : fam.name();
}

ReportDoc header(const char* command, const AffineFamily& fam) {
    return ReportDoc{{"command", command}, {"family", fam.name()}, {"n", fam.dim()}};
}

void print_criticals(std::ostream& os, const std::vector<CriticalPoint>& cps) {
    if (cps.empty()) {
        os << "no critical points\n";
        return;
    }
    char line[160];
    std::snprintf(line, sizeof line, "%-18s %-12s %-26s %4s %4s %5s\n", "beta", "kind", "eigenvalue", "alg", "geo", "disc");
    os << line;
    for (const auto& c : cps) {
        std::snprintf(line, sizeof line, "%-18s %-12s %-26s %4d %4d %5d\n", fmt_beta(c.beta).c_str(),
                      to_string(c.kind).c_str(), to_string(c.colliding_eigenvalue).c_str(), c.alg_mult, c.geo_mult,
                      c.disc_multiplicity);
        os << line;
    }
}

}  // namespace

CommandOutput cmd_analyze(const AffineFamily& fam, const Rational& beta, const SpectralOptions& options,
                          bool with_jordan) {
    const Matrix<Rational> h = fam.at(beta);
    const SpectralReport report = analyze(h, options);
    CommandOutput out{header(with_jordan ? "jordan" : "analyze", fam), {}};
    out.doc["beta"] = beta.str();
    out.doc["report"] = to_json(report);

    std::ostringstream os;
    os << "family " << family_label(fam) << ", beta = " << beta.str() << "\n";
    print_matrix(os, "H", h);
    os << "eigenvalues (" << (report.backend == Backend::Exact ? "exact" : "numeric") << "):\n";
    for (const auto& e : report.eigenvalues) {
        os << "  " << to_string(e.value) << "  alg " << e.alg_mult << "  geo " << e.geo_mult << "\n";
        if (e.exact()) {
            for (const auto& v : e.exact_basis) os << "    " << fmt_vector(v) << "\n";
        } else {
            for (const auto& v : e.numeric_basis) os << "    " << fmt_vector(v) << "\n";
        }
    }
    os << "diagonalizable: " << (report.diagonalizable ? "yes" : "no (defective)") << "\n";

    if (with_jordan || !report.diagonalizable) {
        const JordanDecomposition d = jordan_decomposition(h, options);
        out.doc["jordan"] = to_json(d);
        os << "Jordan blocks:";
        for (const auto& b : blocks_of(d)) os << " (" << to_string(b.eigenvalue) << ", " << b.size << ")";
        os << "\n";
        std::visit(
            [&](const auto& form) {
                print_matrix(os, "S", form.transform);
                print_matrix(os, "J", form.jordan);
            },
            d);
    }
    out.text = os.str();
    return out;
}

CommandOutput cmd_critical(const AffineFamily& fam, const SpectralOptions& options) {
    const RatPoly disc = discriminant_in_beta(char_poly_family(fam));
    const auto cps = critical_points(fam, options);
    CommandOutput out{header("critical", fam), {}};
    ReportDoc coeffs = ReportDoc::array();
    for (int k = 0; k <= disc.degree(); ++k) coeffs.push_back(disc.coeff(k).str());
    out.doc["discriminant"] = {{"text", disc.str("beta")}, {"coeffs", std::move(coeffs)}};
    ReportDoc list = ReportDoc::array();
    for (const auto& c : cps) list.push_back(to_json(c));
    out.doc["critical_points"] = std::move(list);

    std::ostringstream os;
    os << "family " << family_label(fam) << "\n";
    os << "discriminant: " << disc.str("beta") << "\n";
    print_criticals(os, cps);
    out.text = os.str();
    return out;
}

CommandOutput cmd_symmetry(const AffineFamily& fam, const Rational& beta, const SpectralOptions& options) {
    const Matrix<Rational> h = fam.at(beta);
    const SymmetryGroup g = invariance_group(h);
    const auto checks = check_eigenvector_symmetry(h, g, analyze(h, options), options);
    CommandOutput out{header("symmetry", fam), {}};
    out.doc["beta"] = beta.str();
    out.doc["group"] = to_json(g);
    ReportDoc inv = ReportDoc::array();
    for (const auto& c : checks) inv.push_back({{"eigenvalue", to_json(c.eigenvalue)}, {"invariant", c.invariant}});
    out.doc["eigenspace_invariance"] = std::move(inv);

    std::ostringstream os;
    os << "family " << family_label(fam) << ", beta = " << beta.str() << "\n";
    os << "invariance group: order " << g.order() << ", " << g.label << "\n";
    os << "elements:";
    for (const auto& p : g.elements) os << " " << p.str();
    os << "\ngenerators:";
    if (g.generators.empty()) os << " (none)";
    for (const auto& p : g.generators) os << " " << p.str();
    os << "\n";
    for (const auto& c : checks) {
        os << "eigenspace of " << to_string(c.eigenvalue) << ": " << (c.invariant ? "invariant" : "NOT invariant") << "\n";
    }
    out.text = os.str();
    return out;
}

CommandOutput cmd_sweep(const AffineFamily& fam, const SweepRequest& req, const SpectralOptions& options) {
    const auto branches = sweep(fam, req.beta_min, req.beta_max, req.steps, options);
    std::vector<CriticalPoint> cps;
    bool degenerate = false;
    try {
        cps = critical_points(fam, options);
    } catch (const DegenerateFamilyError&) {
        degenerate = true;
    }
    if (req.csv) emit_csv(branches, cps, *req.csv);
    if (req.svg_re) emit_svg(branches, cps, *req.svg_re, PlotPart::Real, req.style);
    if (req.svg_im) emit_svg(branches, cps, *req.svg_im, PlotPart::Imag, req.style);

    CommandOutput out{header("sweep", fam), {}};
    out.doc["range"] = {req.beta_min, req.beta_max};
    out.doc["steps"] = req.steps;
    out.doc["branches"] = branches.size();
    out.doc["degenerate_everywhere"] = degenerate;
    ReportDoc list = ReportDoc::array();
    for (const auto& c : cps) list.push_back(to_json(c));
    out.doc["critical_points"] = std::move(list);
    ReportDoc files = ReportDoc::object();
    if (req.csv) files["csv"] = *req.csv;
    if (req.svg_re) files["svg_re"] = *req.svg_re;
    if (req.svg_im) files["svg_im"] = *req.svg_im;
    out.doc["outputs"] = std::move(files);

    std::ostringstream os;
    os << "family " << family_label(fam) << ": " << branches.size() << " branches, " << req.steps << " samples on ["
       << fmt_double(req.beta_min) << ", " << fmt_double(req.beta_max) << "]\n";
    if (degenerate) {
        os << "discriminant vanishes identically: eigenvalues collide for every beta\n";
    } else {
        print_criticals(os, cps);
    }
    out.text = os.str();
    return out;
}

std::pair<double, double> parse_range(const std::string& text) {
    const auto colon = text.find(':', 1);
    if (colon == std::string::npos) throw ParseError("range must look like a:b, got '" + text + "'");
    const double a = Rational::parse(text.substr(0, colon)).to_double();
    const double b = Rational::parse(text.substr(colon + 1)).to_double();
    if (!(a < b)) throw ParseError("range must satisfy a < b, got '" + text + "'");
    return {a, b};
}

}  // namespace epscan::cli
