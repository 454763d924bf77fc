#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "orbiclass/classifier.hpp"
#include "orbiclass/complex.hpp"

namespace orbiclass {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "orbiclass/1";

/// Parses JSON text; syntax errors become ParseError with line and column.
Json parse_json(const std::string& text);
/// Two-space indented, trailing newline.
std::string dump_json(const Json& j);

/// Rationals are written "p" or "p/q"; plain JSON integers are accepted too.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// {"conductor": m, "coords": [...]} with coordinates in the power basis.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

/// {"rows", "cols", "conductor", "entries": [[...], ...]}. A rational entry
/// is a rational literal, any other entry the list of its coordinates at
/// the matrix conductor.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// Generators of a group to be closed, as read from a group file.
struct GroupInput {
    std::size_t dimension = 0;
    int conductor = 1;
    std::vector<Matrix> generators;
    /// Optional closure cap stored in the file; the command line wins.
    std::optional<std::size_t> cap;
    /// Family spec the generators came from, if any.
    std::optional<std::string> family;
};

Json group_to_json(const GroupInput& g);
GroupInput group_from_json(const Json& j);
GroupInput group_from_family(const std::string& spec);

Json refusal_to_json(const Refusal& r);
Refusal refusal_from_json(const Json& j);
Json report_to_json(const VerdictReport& r);
VerdictReport report_from_json(const Json& j);
std::string report_to_text(const VerdictReport& r);

/// Line format: a header "dim n vertices v", then one facet per line as
/// vertex indices. Blank lines and lines starting with '#' are skipped. The
/// header dimension must match the facets.
SimplicialComplex complex_from_text(const std::string& text);
std::string complex_to_text(const SimplicialComplex& k);
Json complex_to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const Json& j);
/// JSON if the first non-blank character is '{', the line format otherwise.
SimplicialComplex read_complex(const std::string& text);

/// One generator per line as the image list, optionally prefixed "label:".
SimplicialAction action_from_text(const std::string& text, std::size_t vertex_count);
std::string action_to_text(const SimplicialAction& a);
Json action_to_json(const SimplicialAction& a);
SimplicialAction action_from_json(const Json& j);
SimplicialAction read_action(const std::string& text, std::size_t vertex_count);

std::string read_file(const std::string& path);
/// Writes through a temporary file renamed into place.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace orbiclass
