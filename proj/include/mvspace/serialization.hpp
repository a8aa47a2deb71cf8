#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "mvspace/lorentz.hpp"
#include "mvspace/multivector.hpp"
#include "mvspace/spacetime.hpp"

namespace mvspace {

// JSON schemas:
//   Multivector  {"s": _, "v": [_, _, _], "b": [_, _, _], "p": _}
//   Event        {"x": [_, _, _], "t": [_, _, _], "c": _}     (c optional, default 1)
//   Field        {"E": [_, _, _], "B": [_, _, _], "c": _}     (c optional, default 1)
// Parse failures throw ArgumentError naming the offending field.

nlohmann::json to_json(const Vector3& v);
nlohmann::json to_json(const Multivector& m);
nlohmann::json to_json(const Event& e);
nlohmann::json to_json(const FieldMultivector& f);

Vector3 vector_from_json(const nlohmann::json& j, std::string_view field);
Multivector multivector_from_json(const nlohmann::json& j);
// `default_c` applies when the document has no "c" member.
Event event_from_json(const nlohmann::json& j, double default_c = 1.0);
FieldMultivector field_from_json(const nlohmann::json& j, double default_c = 1.0);

// Eight comma-separated coefficients in basis order, printed with
// round-trip precision.
std::string to_csv_row(const Multivector& m);
Multivector multivector_from_csv_row(std::string_view row);

// Shortest representation that parses back to the same double.
std::string format_double(double x);

}  // namespace mvspace
