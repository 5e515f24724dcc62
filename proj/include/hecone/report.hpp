#ifndef HECONE_REPORT_HPP
#define HECONE_REPORT_HPP

#include <string>

#include <json.hpp>

#include "hecone/cone.hpp"
#include "hecone/components.hpp"
#include "hecone/tangent.hpp"
#include "hecone/topology.hpp"
#include "hecone/versal.hpp"

namespace hecone {

using Json = nlohmann::ordered_json;

Json presentation_to_json(const RollingFactorsPresentation& pres);
Json dim_table_to_json(const DimTable& t, const std::string& provenance);
Json components_to_json(const std::vector<ComponentDescriptor>& comps);
Json base_space_to_json(const BaseSpaceSystem& sys);
Json fin_ab_group_to_json(const FinAbGroup& grp);
Json topology_report(int g);

// t1 oracle vs formula for one presentation over nu in [-2, 0].
Json t1_report(const RollingFactorsPresentation& pres);
Json t2_report(int g, int d);

// Full pipeline: equations, t1/t2, versal base + point count, components,
// topology.  Deterministic for identical inputs.
Json full_report(const HyperellipticCurve& curve, int k, std::uint64_t prime_bound);

} // namespace hecone

#endif
