#pragma once

#include <json.hpp>

#include "epscan/jordan.hpp"
#include "epscan/spectral.hpp"
#include "epscan/sweep.hpp"
#include "epscan/symmetry.hpp"

namespace epscan::cli {

/// JSON tree for reports. Rationals are always "p/q" strings; floating values
/// are numbers, complex ones {"re": x, "im": y}.
using ReportDoc = nlohmann::ordered_json;

ReportDoc to_json(const Rational& r);
ReportDoc to_json(const CplxF& z);
ReportDoc to_json(const SpectralValue& v);
ReportDoc to_json(const IsolatedRoot& r);
ReportDoc to_json(const SpectralReport& report);
ReportDoc to_json(const JordanDecomposition& d);
ReportDoc to_json(const CriticalPoint& c);
ReportDoc to_json(const SymmetryGroup& g);

}  // namespace epscan::cli
