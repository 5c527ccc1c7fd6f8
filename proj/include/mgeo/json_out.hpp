#pragma once

#include <string>

#include <json.hpp>

#include "mgeo/basis.hpp"
#include "mgeo/bounds.hpp"
#include "mgeo/convexity.hpp"
#include "mgeo/orthogonality.hpp"
#include "mgeo/planar.hpp"
#include "mgeo/space.hpp"

namespace mgeo {

/// Serializes with every float at 17 significant digits; non-finite floats
/// become null. indent < 0 gives a single line.
std::string dump_json(const nlohmann::json& j, int indent = 2);

nlohmann::json as_json(const Vector& v);
nlohmann::json as_json(const Interval& i);
nlohmann::json as_json(const MinimizationResult& m);
nlohmann::json as_json(const OrthogonalityVerdict& v);
nlohmann::json as_json(const CompanionArc& a);
nlohmann::json as_json(const NormValidationReport& r);
nlohmann::json as_json(const GaugeConvexityReport& r);
nlohmann::json as_json(const ConvexityReport& r);
nlohmann::json as_json(const SegmentMin& s);
nlohmann::json as_json(const LineMin& l);
nlohmann::json as_json(const BoundsRecord& r);
nlohmann::json as_json(const BoundsSummary& s);
nlohmann::json as_json(const MaxCoefficient& m);
nlohmann::json as_json(const DirectResult& d);
nlohmann::json as_json(const BasisReport& r);
nlohmann::json as_json(const DiameterPair& p);
nlohmann::json as_json(const ConjugateSearch& s);
nlohmann::json as_json(const RadonResult& r);
nlohmann::json as_json(const PairScanReport& r);
nlohmann::json as_json(const GeneralizedConjugateResult& r);
nlohmann::json as_json(const CrosscheckReport& r);

/// Description of the space: name, dim and the norm family.
nlohmann::json describe_space(const NormedSpace& space);

}  // namespace mgeo
