#pragma once

#include <json.hpp>
#include <string>

#include "osx/completion.hpp"

namespace osx {

// Path syntax: comma-separated signed edge ids, "-" meaning reversed
// traversal ("1,-3,2").
EdgePath parse_edge_path(const MetricGraph& g, const std::string& s);
std::string edge_path_str(const MetricGraph& g, const EdgePath& p);

MarkedGraph marked_graph_from_json(const nlohmann::json& j);
nlohmann::json marked_graph_to_json(const MarkedGraph& x);

MarkedGraph load_marked_graph(const std::string& path);
void save_marked_graph(const MarkedGraph& x, const std::string& path);

}  // namespace osx
