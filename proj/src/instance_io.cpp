#include "roadmatch/instance_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace roadmatch {

namespace {

using Json = nlohmann::ordered_json;

const Json& require(const Json& obj, const char* key, const char* where) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw Error(Errc::parse_error,
                std::string(where) + " is missing required key \"" + key + "\"");
  }
  return *it;
}

double require_number(const Json& obj, const char* key, const char* where) {
  const Json& v = require(obj, key, where);
  if (!v.is_number()) {
    throw Error(Errc::parse_error,
                std::string(where) + "." + key + " must be a number");
  }
  return v.get<double>();
}

std::string require_string(const Json& obj, const char* key, const char* where) {
  const Json& v = require(obj, key, where);
  if (!v.is_string()) {
    throw Error(Errc::parse_error,
                std::string(where) + "." + key + " must be a string");
  }
  return v.get<std::string>();
}

std::vector<RawAddress> parse_points(const Json& arr, const char* where) {
  if (!arr.is_array()) {
    throw Error(Errc::parse_error, std::string(where) + " must be an array");
  }
  std::vector<RawAddress> out;
  out.reserve(arr.size());
  for (const Json& p : arr) {
    if (!p.is_object()) {
      throw Error(Errc::parse_error, std::string(where) + " entries must be objects");
    }
    out.push_back(RawAddress{require_string(p, "road", where), require_number(p, "y", where)});
  }
  return out;
}

}  // namespace

RawInstance parse_instance_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, e.what());
  }
  if (!doc.is_object()) {
    throw Error(Errc::parse_error, "instance must be a JSON object");
  }

  RawInstance raw;
  const Json& vertices = require(doc, "vertices", "instance");
  if (!vertices.is_array()) {
    throw Error(Errc::parse_error, "\"vertices\" must be an array of strings");
  }
  for (const Json& v : vertices) {
    if (!v.is_string()) {
      throw Error(Errc::parse_error, "\"vertices\" must be an array of strings");
    }
    raw.vertices.push_back(v.get<std::string>());
  }

  const Json& roads = require(doc, "roads", "instance");
  if (!roads.is_array()) {
    throw Error(Errc::parse_error, "\"roads\" must be an array");
  }
  for (const Json& r : roads) {
    if (!r.is_object()) {
      throw Error(Errc::parse_error, "\"roads\" entries must be objects");
    }
    raw.roads.push_back(RawRoad{require_string(r, "id", "road"),
                                require_string(r, "tail", "road"),
                                require_string(r, "head", "road"),
                                require_number(r, "length", "road")});
  }

  raw.sources = parse_points(require(doc, "S", "instance"), "S");
  raw.targets = parse_points(require(doc, "T", "instance"), "T");
  return raw;
}

RawInstance load_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Errc::parse_error, "cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance_json(buffer.str());
}

std::string instance_to_json(const RawInstance& raw) {
  Json doc;
  doc["vertices"] = raw.vertices;
  Json roads = Json::array();
  for (const RawRoad& r : raw.roads) {
    roads.push_back(Json{{"id", r.id}, {"tail", r.tail}, {"head", r.head}, {"length", r.length}});
  }
  doc["roads"] = std::move(roads);
  auto points = [](const std::vector<RawAddress>& list) {
    Json arr = Json::array();
    for (const RawAddress& a : list) {
      arr.push_back(Json{{"road", a.road}, {"y", a.y}});
    }
    return arr;
  };
  doc["S"] = points(raw.sources);
  doc["T"] = points(raw.targets);
  return doc.dump(2) + "\n";
}

void write_instance_file(const RawInstance& raw, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(Errc::parse_error, "cannot write '" + path + "'");
  }
  out << instance_to_json(raw);
}

std::string report_to_json(const SolveReport& report) {
  Json doc;
  doc["cost"] = report.cost;
  Json matches = Json::array();
  for (const MatchRecord& m : report.matches) {
    matches.push_back(Json{{"s", m.s}, {"t", m.t}, {"distance", m.distance}});
  }
  doc["matches"] = std::move(matches);
  Json flow = Json::object();
  for (const auto& [road, z] : report.flow) flow[road] = z;
  doc["flow"] = std::move(flow);
  doc["stats"] = Json{{"phases", report.stats.phases},
                      {"sp_calls", report.stats.sp_calls},
                      {"ms_transcribe", report.ms_transcribe},
                      {"ms_solve", report.ms_solve},
                      {"ms_construct", report.ms_construct}};
  return doc.dump(2) + "\n";
}

}  // namespace roadmatch
