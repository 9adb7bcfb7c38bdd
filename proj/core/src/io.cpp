#include "idealpoly/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace idealpoly {

using nlohmann::json;

PolygonDocument to_document(const IdealPolygon& P) {
  return PolygonDocument{"ideal-polygon/v1", P.n(), P.angles};
}

IdealPolygon from_document(const PolygonDocument& doc) {
  if (doc.format != "ideal-polygon/v1")
    throw DomainError("unsupported polygon format tag '" + doc.format + "'");
  if (doc.n != static_cast<int>(doc.angles.size()))
    throw DomainError("polygon document: n does not match the number of angles");
  return make_polygon(doc.angles);
}

std::string write_polygon_json(const PolygonDocument& doc) {
  json j;
  j["format"] = doc.format;
  j["n"] = doc.n;
  j["angles"] = doc.angles;
  return j.dump(2) + "\n";
}

PolygonDocument read_polygon_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw DomainError(std::string("invalid polygon JSON: ") + e.what());
  }
  PolygonDocument doc;
  try {
    doc.format = j.at("format").get<std::string>();
    doc.n = j.at("n").get<int>();
    doc.angles = j.at("angles").get<std::vector<double>>();
  } catch (const json::exception& e) {
    throw DomainError(std::string("polygon JSON missing fields: ") + e.what());
  }
  return doc;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write file '" + path + "'");
  out << text;
  if (!out) throw DomainError("write failed for '" + path + "'");
}

void save_polygon(const std::string& path, const PolygonDocument& doc) {
  write_text_file(path, write_polygon_json(doc));
}

PolygonDocument load_polygon(const std::string& path) {
  return read_polygon_json(read_text_file(path));
}

ReportMember to_report_member(const OrthoGeodesic& o) {
  return ReportMember{o.i,
                      o.j,
                      o.length(),
                      o.segment.foot1.x,
                      o.segment.foot1.y,
                      o.segment.foot2.x,
                      o.segment.foot2.y,
                      o.split1,
                      o.split2};
}

std::string write_report_json(const ReportDocument& doc) {
  json j;
  j["command"] = doc.command;
  j["input"] = doc.input;
  j["n"] = doc.n;
  if (!doc.method.empty()) j["method"] = doc.method;
  if (!doc.members.empty()) {
    json arr = json::array();
    for (const auto& m : doc.members) {
      if (!(m.length > 0.0) || !std::isfinite(m.length))
        throw InternalConsistencyError("report member length must be finite and positive");
      json e;
      e["sides"] = {m.side_i, m.side_j};
      e["length"] = m.length;
      e["feet"] = {{m.foot1_x, m.foot1_y}, {m.foot2_x, m.foot2_y}};
      e["split"] = {m.split1, m.split2};
      arr.push_back(e);
    }
    j["members"] = arr;
  }
  if (doc.max_length) j["max_length"] = *doc.max_length;
  if (doc.bound_lower) j["bound_lower"] = *doc.bound_lower;
  if (doc.bound_upper) j["bound_upper"] = *doc.bound_upper;
  if (doc.bound_satisfied) j["bound_satisfied"] = *doc.bound_satisfied;
  if (doc.oracle_minmax) j["oracle_minmax"] = *doc.oracle_minmax;
  if (doc.triangulations_searched) j["triangulations_searched"] = *doc.triangulations_searched;
  if (doc.max_residual) j["max_residual"] = *doc.max_residual;
  if (doc.pass) j["pass"] = *doc.pass;
  return j.dump(2) + "\n";
}

void save_report(const std::string& path, const ReportDocument& doc) {
  write_text_file(path, write_report_json(doc));
}

}  // namespace idealpoly
