#include "progdisc/output.hpp"

#include <cstdio>

namespace progdisc {

Json rational_node(const Rational& q) {
  Json node;
  node["exact"] = to_fraction_string(q);
  node["value"] = to_double(q);
  return node;
}

Json number_node(double value, const std::optional<Rational>& exact) {
  if (exact) return rational_node(*exact);
  return Json(value);
}

std::string csv_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

Json make_record(const std::string& command) {
  Json record;
  record["schema_version"] = kSchemaVersion;
  record["command"] = command;
  record["parameters"] = Json::object();
  record["results"] = Json::object();
  return record;
}

std::string render_json(const Json& record) { return record.dump(2) + "\n"; }

}  // namespace progdisc
