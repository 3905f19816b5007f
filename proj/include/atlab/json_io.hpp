#pragma once

#include <string>

#include "atlab/bounds.hpp"
#include "atlab/constructions.hpp"
#include "atlab/orientation.hpp"
#include "atlab/reduction.hpp"
#include "json.hpp"

namespace atlab {

using Json = nlohmann::ordered_json;

// Exact rationals travel as "p/q" with q > 0 and gcd(p, q) = 1.
std::string rational_string(const Rational& x);

Json json_of(const Graph& g);
Json json_of(const Multigraph& g);
Json json_of(const Orientation& d);
// graph6 of the support, explicit order, arcs in edge order, f, ee, eo.
// certificate_of_json(json_of(c)) reproduces c bit for bit.
Json json_of(const ATCertificate& cert);
ATCertificate certificate_of_json(const Json& j);
// graph6 plus the full edge list (parallel edges survive), f, the F edges as
// endpoint pairs, and y as a bitmask.
Json json_of(const ExtensionFrame& frame);
ExtensionFrame frame_of_json(const Json& j);
Json json_of(const ComponentProfile& p);
Json json_of(const AtReduction& r);
// The host graph and call parameters are not stored in the reduction, so the
// report takes them alongside.
Json json_of(const MhReduction& r, const Graph& host, VSet y, int k,
             MhVariant variant);
Json json_of(const FunctionalReport& fr);
Json json_of(const SigmaTauAudit& a);
Json json_of(const SigmaBoundAudit& a);
Json json_of(const ScanRecord& r);
// Summary object; the per-graph records stream separately as JSON lines.
Json scan_summary(const ScanReport& rep);

Json json_vset(VSet s);

}  // namespace atlab
