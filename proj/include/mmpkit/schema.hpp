#pragma once
// JSON file formats shared by every front end. Parsing validates shape and the
// domain constraints that belong to input (primitive rays, boundary
// coefficients in [0,1], symmetric Gram matrices) and reports the offending
// field as a JSON pointer.

#include "mmpkit/dual_graph.hpp"
#include "mmpkit/kodaira.hpp"
#include "mmpkit/surface_lattice.hpp"
#include "mmpkit/toric_cone.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace mmpkit::schema {

using Json = nlohmann::json;

/// Input rejected before any mathematics ran.
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string code, std::string pointer, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)), pointer_(std::move(pointer)) {}

    const std::string& code() const noexcept { return code_; }
    const std::string& pointer() const noexcept { return pointer_; }

private:
    std::string code_;
    std::string pointer_;
};

// Error codes carried by ValidationError.
inline constexpr const char* kJsonSyntax = "E_JSON_SYNTAX";
inline constexpr const char* kSchema = "E_SCHEMA";
inline constexpr const char* kDimension = "E_DIMENSION";
inline constexpr const char* kRayNotPrimitive = "E_RAY_NOT_PRIMITIVE";
inline constexpr const char* kDuplicateRay = "E_DUPLICATE_RAY";
inline constexpr const char* kBoundaryCoeffRange = "E_BOUNDARY_COEFF_RANGE";
inline constexpr const char* kGramAsymmetric = "E_GRAM_ASYMMETRIC";
inline constexpr const char* kGraph = "E_GRAPH";
inline constexpr const char* kCurveParity = "E_CURVE_PARITY";
inline constexpr const char* kRational = "E_RATIONAL";
inline constexpr const char* kSamples = "E_SAMPLES";
inline constexpr const char* kUsage = "E_USAGE";

Json parse_document(const std::string& text);

toric::Cone parse_cone(const Json& doc);
std::pair<graph::DualGraph, graph::BoundaryData> parse_graph(const Json& doc);
surface::SurfaceLattice parse_surface(const Json& doc);
kodaira::PlurigenusSample parse_plurigenera(const Json& doc, std::optional<long>& max_dim);
std::vector<Rational> parse_coefficients(const Json& doc);

/// Integer vector from a JSON array or a "1,-2,3" string.
IntVector parse_int_list(const Json& value, const std::string& pointer);
IntVector parse_int_list(const std::string& text, const std::string& flag);

Json to_json(const Integer& v);
Json to_json(const IntVector& v);
Json to_json(const Rational& q);   // always a "p/q" string
Json to_json(const RatVector& v);
Json to_json(const IntMatrix& m);
Json to_json(const graph::DualGraph& g, const graph::BoundaryData& b);
Json to_json(const surface::SurfaceLattice& s);

} // namespace mmpkit::schema
