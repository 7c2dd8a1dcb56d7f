#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "templikit/deform/deform.hpp"

namespace templikit::io {

using json = nlohmann::ordered_json;

inline constexpr const char* kFormatVersion = "1";

/// A templicial module, optionally with a deformation block naming the
/// extension R -> k and carrying the special fiber over k.
struct Instance {
  templicial::TemplicialModule module;
  struct Deformation {
    std::string extension;
    templicial::TemplicialModule fiber;
  };
  std::optional<Deformation> deformation;

  deform::DeformationPair pair() const;
};

/// Every integer is a decimal string; matrices are row-major lists of rows
/// with explicit dimensions.
json to_json(const templicial::TemplicialModule& X);
json to_json(const Instance& inst);
/// Throws ValidationError on malformed input and StructuralError on
/// ill-defined matrices.
templicial::TemplicialModule templicial_from_json(const json& j);
Instance instance_from_json(const json& j);

/// Canonical text: two-space indentation and a trailing newline.
std::string serialize(const Instance& inst);
Instance parse(const std::string& text);
Instance read_file(const std::string& path);
void write_file(const std::string& path, const Instance& inst);

json to_json(const kan::CheckReport& report);
json to_json(const templicial::ValidationReport& report);

}  // namespace templikit::io
