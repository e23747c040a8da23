#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "pseudoham/bounds.hpp"
#include "pseudoham/hamilton.hpp"
#include "pseudoham/permanent.hpp"
#include "pseudoham/rotation.hpp"
#include "pseudoham/spectral.hpp"

namespace pseudoham::cli {

using nlohmann::json;

/// Rounds every float to 12 significant digits and turns non-finite values
/// into the strings "inf", "-inf" and "nan". Object keys are already sorted.
json finalize(const json& j);
std::string dump(const json& j);

json to_json(const BigCount& c);
json to_json(const DegreeProfile& d);
json to_json(const SpectralCertificate& c);
json to_json(const MixingReport& r);
json to_json(const CorollaryReport& r);
json to_json(const SuperstochasticResult& r);
json to_json(const ChainReport& r);
json to_json(const PermanentBounds& b);
json to_json(const TwoFactor& f);
json to_json(const FactorHistogram& h);
json to_json(const RotationTrace& t);
json to_json(const HamiltonCount& h);
json to_json(const FormulaGap& g);
json to_json(const BoundReport& r);
json to_json(const ExponentRow& r);
json to_json(const FamilyVerdict& v);

}  // namespace pseudoham::cli
