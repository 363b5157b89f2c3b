#include "epscan/cli/report.hpp"

namespace epscan::cli {

namespace {

template <class S>
ReportDoc vector_json(const Vector<S>& v) {
    ReportDoc out = ReportDoc::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

template <class S>
ReportDoc matrix_json(const Matrix<S>& m) {
    ReportDoc out = ReportDoc::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        ReportDoc row = ReportDoc::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(to_json(m(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace

ReportDoc to_json(const Rational& r) { return r.str(); }

ReportDoc to_json(const CplxF& z) {
    // -0.0 would not survive as a distinct value in every reader
    return ReportDoc{{"re", z.re() == 0.0 ? 0.0 : z.re()}, {"im", z.im() == 0.0 ? 0.0 : z.im()}};
}

ReportDoc to_json(const SpectralValue& v) {
    return std::visit([](const auto& x) { return to_json(x); }, v);
}

ReportDoc to_json(const IsolatedRoot& r) {
    if (r.is_exact()) return to_json(*r.exact);
    return ReportDoc{{"lo", r.lo.str()}, {"hi", r.hi.str()}, {"approx", r.approx()}};
}

ReportDoc to_json(const SpectralReport& report) {
    ReportDoc values = ReportDoc::array();
    for (const auto& e : report.eigenvalues) {
        ReportDoc space = ReportDoc::array();
        if (e.exact()) {
            for (const auto& v : e.exact_basis) space.push_back(vector_json(v));
        } else {
            for (const auto& v : e.numeric_basis) space.push_back(vector_json(v));
        }
        values.push_back({{"value", to_json(e.value)},
                          {"alg_mult", e.alg_mult},
                          {"geo_mult", e.geo_mult},
                          {"eigenspace", std::move(space)}});
    }
    return ReportDoc{{"dim", report.dim},
                     {"backend", report.backend == Backend::Exact ? "exact" : "numeric"},
                     {"eigenvalues", std::move(values)},
                     {"diagonalizable", report.diagonalizable}};
}

ReportDoc to_json(const JordanDecomposition& d) {
    ReportDoc blocks = ReportDoc::array();
    for (const auto& b : blocks_of(d)) blocks.push_back({{"eigenvalue", to_json(b.eigenvalue)}, {"size", b.size}});
    return std::visit(
        [&](const auto& form) {
            return ReportDoc{{"exact", is_exact(d)},
                             {"blocks", blocks},
                             {"S", matrix_json(form.transform)},
                             {"J", matrix_json(form.jordan)}};
        },
        d);
}

ReportDoc to_json(const CriticalPoint& c) {
    return ReportDoc{{"beta", to_json(c.beta)},
                     {"kind", to_string(c.kind)},
                     {"eigenvalue", to_json(c.colliding_eigenvalue)},
                     {"alg_mult", c.alg_mult},
                     {"geo_mult", c.geo_mult},
                     {"disc_mult", c.disc_multiplicity}};
}

ReportDoc to_json(const SymmetryGroup& g) {
    ReportDoc elements = ReportDoc::array();
    for (const auto& p : g.elements) elements.push_back(p.str());
    ReportDoc gens = ReportDoc::array();
    for (const auto& p : g.generators) gens.push_back(p.str());
    return ReportDoc{{"order", g.order()}, {"label", g.label}, {"elements", std::move(elements)}, {"generators", std::move(gens)}};
}

}  // namespace epscan::cli
