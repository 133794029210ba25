#include "osx/io.hpp"

#include <fstream>
#include <sstream>

namespace osx {

EdgePath parse_edge_path(const MetricGraph& g, const std::string& s) {
  EdgePath p;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw MalformedInput("empty step in edge path: " + s);
    bool rev = tok[0] == '-';
    std::string id_str = rev ? tok.substr(1) : tok;
    int id;
    try {
      id = std::stoi(id_str);
    } catch (const std::exception&) {
      throw MalformedInput("bad edge id in path: " + tok);
    }
    p.push_back(dart(g.eindex(id), rev));
  }
  return p;
}

std::string edge_path_str(const MetricGraph& g, const EdgePath& p) {
  std::string out;
  for (int d : p) {
    if (!out.empty()) out += ",";
    if (dart_rev(d)) out += "-";
    out += std::to_string(g.edges[dart_edge(d)].id);
  }
  return out;
}

MarkedGraph marked_graph_from_json(const nlohmann::json& j) {
  try {
    MarkedGraph x;
    x.rank = j.at("rank").get<int>();
    if (x.rank < 1) throw MalformedInput("rank must be at least 1");
    for (const auto& v : j.at("vertices")) x.g.vertex_ids.push_back(v.get<int>());
    for (const auto& e : j.at("edges")) {
      Rat len;
      try {
        len = parse_rat(e.at("length").get<std::string>());
      } catch (const std::invalid_argument& ex) {
        throw MalformedInput(ex.what());
      }
      if (len < 0) throw MalformedInput("negative edge length");
      x.g.edges.push_back(
          {e.at("id").get<int>(), e.at("from").get<int>(), e.at("to").get<int>(), len});
    }
    x.marking.base_vertex = j.at("base_vertex").get<int>();
    x.marking.images.resize(x.rank);
    const auto& mk = j.at("marking");
    for (int i = 1; i <= x.rank; ++i) {
      std::string key(1, (char)('a' + i - 1));
      if (!mk.contains(key))
        throw MalformedInput("marking is missing generator " + key);
      x.marking.images[i - 1] =
          parse_edge_path(x.g, mk.at(key).get<std::string>());
    }
    if (j.contains("inverse_marking") && !j.at("inverse_marking").is_null()) {
      std::map<int, Word> labels;
      for (const auto& [k, v] : j.at("inverse_marking").items()) {
        int id;
        try {
          id = std::stoi(k);
        } catch (const std::exception&) {
          throw MalformedInput("bad edge id in inverse_marking: " + k);
        }
        x.g.eindex(id);  // rejects unknown edge ids
        labels[id] = parse_word(v.get<std::string>(), x.rank);
      }
      x.given_labels = std::move(labels);
    }
    return x;
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(std::string("bad marked graph json: ") + e.what());
  }
}

nlohmann::json marked_graph_to_json(const MarkedGraph& x) {
  nlohmann::json j;
  j["rank"] = x.rank;
  j["vertices"] = x.g.vertex_ids;
  j["edges"] = nlohmann::json::array();
  for (const Edge& e : x.g.edges)
    j["edges"].push_back({{"id", e.id},
                          {"from", e.from},
                          {"to", e.to},
                          {"length", rat_str(e.len)}});
  j["base_vertex"] = x.marking.base_vertex;
  nlohmann::json mk;
  for (int i = 1; i <= x.rank; ++i)
    mk[std::string(1, (char)('a' + i - 1))] =
        edge_path_str(x.g, x.marking.images[i - 1]);
  j["marking"] = mk;
  if (x.given_labels) {
    nlohmann::json inv;
    for (const auto& [id, w] : *x.given_labels)
      inv[std::to_string(id)] = word_str(w);
    j["inverse_marking"] = inv;
  }
  return j;
}

MarkedGraph load_marked_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(path + ": " + e.what());
  }
  return marked_graph_from_json(j);
}

void save_marked_graph(const MarkedGraph& x, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw MalformedInput("cannot write " + path);
  out << marked_graph_to_json(x).dump(2) << "\n";
}

}  // namespace osx
