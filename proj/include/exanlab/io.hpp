#pragma once

#include <optional>

#include <json.hpp>

#include "exanlab/extensions.hpp"

namespace exanlab {

/// One parsed input file. A document declares its field once; every section
/// is expressed in that field, all scalars as strings.
struct InputDocument {
    Field field = Field::rationals();
    std::optional<Algebra> algebra;
    std::optional<Bimodule> bimodule;
    std::optional<LeftModule> module;
    std::optional<ExtensionAlgebra> extension;
    std::vector<Cochain> cochains; // in file order
};

InputDocument parse_document(const nlohmann::json& j);

/// Merges documents (in order) into one context. Duplicate non-cochain
/// sections are an input error; cochains accumulate in order. Fields must
/// agree across files. Cross-section dimension consistency is checked.
InputDocument merge_documents(const std::vector<InputDocument>& docs);

nlohmann::json field_to_json(const Field& f);
Field parse_field(const nlohmann::json& j);

nlohmann::json vector_to_json(const Vector& v);
nlohmann::json matrix_to_json(const Matrix& m);
Vector parse_vector(const Field& f, const nlohmann::json& j, std::size_t expected);
Matrix parse_matrix(const Field& f, const nlohmann::json& j);

nlohmann::json algebra_to_json(const Algebra& a);
nlohmann::json bimodule_to_json(const Bimodule& b);
nlohmann::json module_to_json(const LeftModule& m);
nlohmann::json cochain_to_json(const Cochain& c);
nlohmann::json extension_to_json(const ExtensionAlgebra& e);

Algebra parse_algebra(const Field& f, const nlohmann::json& j);
Bimodule parse_bimodule(const Field& f, const nlohmann::json& j);
LeftModule parse_module(const Field& f, const nlohmann::json& j);
Cochain parse_cochain(const Field& f, const nlohmann::json& j);
ExtensionAlgebra parse_extension(const Field& f, const nlohmann::json& j);

} // namespace exanlab
