#include "mvspace/serialization.hpp"

#include <charconv>
#include <cmath>
#include <system_error>
#include <vector>

#include "mvspace/errors.hpp"

namespace mvspace {

namespace {

using nlohmann::json;

double number_from_json(const json& j, std::string_view field) {
  if (!j.is_number()) throw ArgumentError("field '" + std::string(field) + "' must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ArgumentError("field '" + std::string(field) + "' must be finite");
  return v;
}

const json& member(const json& j, std::string_view key) {
  if (!j.is_object()) throw ArgumentError("expected a JSON object");
  const auto it = j.find(std::string(key));
  if (it == j.end()) throw ArgumentError("missing field '" + std::string(key) + "'");
  return *it;
}

void reject_unknown(const json& j, std::initializer_list<std::string_view> known) {
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (auto k : known) ok = ok || key == k;
    if (!ok) throw ArgumentError("unknown field '" + key + "'");
  }
}

double optional_c(const json& j, double default_c) {
  const auto it = j.find("c");
  return it == j.end() ? default_c : number_from_json(*it, "c");
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

json to_json(const Vector3& v) { return json::array({v.x, v.y, v.z}); }

json to_json(const Multivector& m) {
  return {{"s", m.scalar_part()}, {"v", to_json(m.vector_part())}, {"b", to_json(m.bivector_part())},
          {"p", m.trivector_part()}};
}

json to_json(const Event& e) { return {{"x", to_json(e.x())}, {"t", to_json(e.t())}, {"c", e.c()}}; }

json to_json(const FieldMultivector& f) { return {{"E", to_json(f.e())}, {"B", to_json(f.b())}, {"c", f.c()}}; }

Vector3 vector_from_json(const json& j, std::string_view field) {
  if (!j.is_array() || j.size() != 3)
    throw ArgumentError("field '" + std::string(field) + "' must be an array of three numbers");
  return {number_from_json(j[0], field), number_from_json(j[1], field), number_from_json(j[2], field)};
}

Multivector multivector_from_json(const json& j) {
  reject_unknown(j, {"s", "v", "b", "p"});
  return Multivector::from_parts(number_from_json(member(j, "s"), "s"), vector_from_json(member(j, "v"), "v"),
                                 vector_from_json(member(j, "b"), "b"), number_from_json(member(j, "p"), "p"));
}

Event event_from_json(const json& j, double default_c) {
  reject_unknown(j, {"x", "t", "c"});
  return Event(vector_from_json(member(j, "x"), "x"), vector_from_json(member(j, "t"), "t"), optional_c(j, default_c));
}

FieldMultivector field_from_json(const json& j, double default_c) {
  reject_unknown(j, {"E", "B", "c"});
  return FieldMultivector(vector_from_json(member(j, "E"), "E"), vector_from_json(member(j, "B"), "B"),
                          optional_c(j, default_c));
}

std::string to_csv_row(const Multivector& m) {
  std::string out;
  for (std::size_t k = 0; k < Multivector::kSize; ++k) {
    if (k) out += ',';
    out += format_double(m[k]);
  }
  return out;
}

Multivector multivector_from_csv_row(std::string_view row) {
  Multivector::Coefficients c{};
  std::size_t k = 0;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = row.find(',', pos);
    std::string_view cell = row.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!cell.empty() && (cell.front() == ' ' || cell.front() == '\t')) cell.remove_prefix(1);
    while (!cell.empty() && (cell.back() == ' ' || cell.back() == '\t' || cell.back() == '\r')) cell.remove_suffix(1);
    if (k >= Multivector::kSize) throw ArgumentError("CSV row has more than 8 columns");
    double v = 0.0;
    const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (res.ec != std::errc() || res.ptr != cell.data() + cell.size())
      throw ArgumentError("CSV column " + std::to_string(k + 1) + " is not a number");
    c[k++] = v;
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (k != Multivector::kSize) throw ArgumentError("CSV row must have 8 columns, got " + std::to_string(k));
  return Multivector(c);
}

}  // namespace mvspace
