#pragma once

#include <optional>
#include <string>
#include <vector>

#include "idealpoly/polygon.hpp"

namespace idealpoly {

/// On-disk polygon format "ideal-polygon/v1": vertex angles in radians.
/// Serialization uses shortest round-trip decimals, so parse(serialize(x))
/// reproduces x bit for bit.
struct PolygonDocument {
  std::string format = "ideal-polygon/v1";
  int n = 0;
  std::vector<double> angles;
};

PolygonDocument to_document(const IdealPolygon& P);
IdealPolygon from_document(const PolygonDocument& doc);

std::string write_polygon_json(const PolygonDocument& doc);
PolygonDocument read_polygon_json(const std::string& text);

void save_polygon(const std::string& path, const PolygonDocument& doc);
PolygonDocument load_polygon(const std::string& path);

/// Machine-readable record of one CLI run. Optional sections are emitted only
/// when the corresponding data was produced.
struct ReportMember {
  int side_i = 0, side_j = 0;
  double length = 0.0;
  double foot1_x = 0.0, foot1_y = 0.0, foot2_x = 0.0, foot2_y = 0.0;
  int split1 = 0, split2 = 0;
};

struct ReportDocument {
  std::string command;
  std::string input;  // file path or a synthetic identity like "regular(6)"
  int n = 0;
  std::string method;  // decomposition method or verification check name
  std::vector<ReportMember> members;
  std::optional<double> max_length;
  std::optional<double> bound_lower;
  std::optional<double> bound_upper;
  std::optional<bool> bound_satisfied;
  std::optional<double> oracle_minmax;
  std::optional<long long> triangulations_searched;
  std::optional<double> max_residual;
  std::optional<bool> pass;
};

std::string write_report_json(const ReportDocument& doc);
void save_report(const std::string& path, const ReportDocument& doc);

ReportMember to_report_member(const OrthoGeodesic& o);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace idealpoly
