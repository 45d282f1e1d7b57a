#include "ballinterp/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace ballinterp {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& token) {
  const std::string t = trim(token);
  if (t.empty()) throw ParseError("empty numeric field");
  std::size_t consumed = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &consumed);
  } catch (const std::exception&) {
    throw ParseError("not a number: '" + t + "'");
  }
  if (consumed != t.size()) throw ParseError("trailing garbage after number: '" + t + "'");
  return v;
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) out.push_back(parse_number(token));
  if (out.empty()) throw ParseError("expected a comma-separated list of numbers");
  return out;
}

Point to_point(const std::vector<double>& values) {
  Point p(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) p[static_cast<Eigen::Index>(i)] = values[i];
  return p;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Point point_from_json(const json& arr, const char* what) {
  if (!arr.is_array() || arr.empty()) {
    throw ParseError(std::string(what) + " must be a non-empty array of numbers");
  }
  Point p(static_cast<Eigen::Index>(arr.size()));
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_number()) throw ParseError(std::string(what) + " must contain only numbers");
    p[static_cast<Eigen::Index>(i)] = arr[i].get<double>();
  }
  return p;
}

json point_to_json(const Point& p) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < p.size(); ++i) arr.push_back(p[i]);
  return arr;
}

}  // namespace

Simplex simplex_from_csv(std::istream& in) {
  std::vector<Point> vertices;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    vertices.push_back(to_point(parse_number_list(line)));
  }
  if (vertices.empty()) throw ParseError("no vertex rows found");
  try {
    return Simplex(std::move(vertices));
  } catch (const MalformedSimplexError& e) {
    throw ParseError(std::string("not a valid simplex: ") + e.what());
  }
}

Simplex simplex_from_json(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array()) {
    throw ParseError("expected an object with a \"vertices\" array");
  }
  std::vector<Point> vertices;
  for (const auto& row : j["vertices"]) vertices.push_back(point_from_json(row, "vertex"));
  if (vertices.empty()) throw ParseError("\"vertices\" is empty");
  try {
    return Simplex(std::move(vertices));
  } catch (const MalformedSimplexError& e) {
    throw ParseError(std::string("not a valid simplex: ") + e.what());
  }
}

Simplex load_simplex(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const std::string lead = trim(text);
  if (!lead.empty() && lead.front() == '{') return simplex_from_json(text);
  std::istringstream csv(text);
  return simplex_from_csv(csv);
}

Ball ball_from_string(const std::string& text) {
  const auto sep = text.find(';');
  if (sep == std::string::npos) {
    throw ParseError("expected ball format \"c1,c2,...,cn;R\"");
  }
  const std::vector<double> center = parse_number_list(text.substr(0, sep));
  const double radius = parse_number(text.substr(sep + 1));
  try {
    return Ball(to_point(center), radius);
  } catch (const DomainError& e) {
    throw ParseError(std::string("not a valid ball: ") + e.what());
  }
}

Ball ball_from_json(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("center") || !j.contains("radius") ||
      !j["radius"].is_number()) {
    throw ParseError("expected an object with \"center\" (array) and \"radius\" (number)");
  }
  try {
    return Ball(point_from_json(j["center"], "center"), j["radius"].get<double>());
  } catch (const DomainError& e) {
    throw ParseError(std::string("not a valid ball: ") + e.what());
  }
}

std::string to_json(const NormCertificate& cert) {
  json j;
  j["value"] = cert.value;
  j["signs"] = cert.signs.signs();
  j["k"] = cert.k;
  j["extremal_point"] = point_to_json(cert.extremal_point);
  j["direction"] = point_to_json(cert.direction);
  j["ball"] = {{"center", point_to_json(cert.ball_center)}, {"radius", cert.ball_radius}};
  j["maximizer_masks"] = cert.maximizer_masks;
  j["maximizers_truncated"] = cert.maximizers_truncated;
  return j.dump();
}

NormCertificate certificate_from_json(const std::string& text) {
  const json j = parse_json(text);
  try {
    NormCertificate cert{
        j.at("value").get<double>(),
        SignVector(j.at("signs").get<std::vector<int>>()),
        point_from_json(j.at("extremal_point"), "extremal_point"),
        j.at("k").get<int>(),
        point_from_json(j.at("direction"), "direction"),
    };
    cert.ball_center = point_from_json(j.at("ball").at("center"), "center");
    cert.ball_radius = j.at("ball").at("radius").get<double>();
    cert.maximizer_masks = j.at("maximizer_masks").get<std::vector<std::uint32_t>>();
    cert.maximizers_truncated = j.at("maximizers_truncated").get<bool>();
    return cert;
  } catch (const json::exception& e) {
    throw ParseError(std::string("not a certificate: ") + e.what());
  }
}

std::string to_json(const AbsorptionResult& result) {
  json j;
  j["xi"] = result.xi;
  j["binding_face"] = result.binding_face;
  j["face_margins"] = point_to_json(result.face_margins);
  return j.dump();
}

std::string to_json(const SearchResult& result) {
  json vertices = json::array();
  for (const Point& v : result.best_simplex.vertices()) vertices.push_back(point_to_json(v));
  json j;
  j["best_norm"] = result.best_norm;
  j["vertices"] = std::move(vertices);
  j["history"] = result.history;
  j["regularity_defect"] = result.regularity_defect;
  return j.dump();
}

std::string format_significant(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

std::string regular_report_csv_header() { return "n,t_minus,a,psi_a,psi_a1,norm,k_star,d_n"; }

std::string to_csv_row(const RegularReport& report, int precision) {
  std::ostringstream row;
  row << report.n << ',' << format_significant(report.t_minus, precision) << ',' << report.a << ','
      << format_significant(report.psi_a, precision) << ','
      << format_significant(report.psi_a_plus_1, precision) << ','
      << format_significant(report.norm, precision) << ',' << report.k_star << ','
      << format_significant(report.d_n, precision);
  return row.str();
}

}  // namespace ballinterp
