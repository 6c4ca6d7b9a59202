#ifndef TRICOMM_IO_HPP
#define TRICOMM_IO_HPP

#include "tricomm/diagrams.hpp"
#include "tricomm/moduli.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace tricomm {

using Json = nlohmann::ordered_json;

// Version tag written into every top-level CLI document.
inline constexpr int kSchemaVersion = 1;

// Rationals are written as strings ("3", "-1/2") so that no precision is lost.
Json rat_to_json(const Rat& x);
Rat rat_from_json(const Json& j);

// {"family": "E", "rank": 8, "name": "E8"}; the trivial type has family "trivial".
Json type_to_json(const SimpleType& t);
SimpleType type_from_json(const Json& j);

// {"nodes": [...], "cartan": [[...]], "marks": [...], "sq_lengths": ["2", ...]}
Json diagram_to_json(const AffineDiagram& d);
AffineDiagram diagram_from_json(const Json& j);

Json component_to_json(const ComponentRecord& c);
ComponentRecord component_from_json(const Json& j);
Json components_to_json(const std::vector<ComponentRecord>& cs);
std::vector<ComponentRecord> components_from_json(const Json& j);

Shape shape_from_name(const std::string& name);

/*
 * ASCII rendering.  A node is drawn as "•(mark)".  A chain is drawn on one
 * line; any other shape is drawn as a node list followed by one bond per
 * line.  Bond tokens:
 *   "-"    simple bond
 *   "=m>"  m-fold bond, arrow pointing at the shorter node
 *   "<m>"  m-fold bond between nodes of equal length (the two-node cycle)
 */
std::string render_diagram(const AffineDiagram& d);

}  // namespace tricomm

#endif
