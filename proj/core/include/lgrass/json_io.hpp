#ifndef LGRASS_JSON_IO_HPP
#define LGRASS_JSON_IO_HPP

#include "json.hpp"

#include "lgrass/grassmann.hpp"

namespace lgrass {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "linked-grass/v1";

Json to_json(const FieldDesc& fd);
FieldDesc field_from_json(const Json& j);

Json to_json(const Scalar& a);
Scalar scalar_from_json(const FieldDesc& fd, const Json& j);

Json to_json(const Matrix& m);
Matrix matrix_from_json(const FieldDesc& fd, const Json& j);

Json to_json(const LinkedChain& c);
LinkedChain chain_from_json(const Json& j);

Json to_json(const LinkedForm& f);
LinkedForm form_from_json(const FieldDesc& fd, const Json& j);

Json to_json(const LinkedSubspace& f);
LinkedSubspace subspace_from_json(const FieldDesc& fd, const Json& j);

/// Report numerics are decimal strings; verdict is "pass"/"fail".
Json to_json(const TangentReport& r);
TangentReport report_from_json(const Json& j);

/// Top-level file envelope {"schema":"linked-grass/v1","field":...}.
Json envelope(const FieldDesc& fd);
/// Throws ParseError unless the schema tag matches; returns the field.
FieldDesc check_envelope(const Json& j);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace lgrass

#endif
