#pragma once

#include "rbx/inducibility.hpp"

#include <json.hpp>

#include <string>

namespace rbx {

using Json = nlohmann::json;

/// A parsed JSON document together with the name used in diagnostics. String
/// references inside it resolve relative to the directory of that name.
struct Input {
    Json doc;
    std::string source;

    /// Throws ParseError with file:line:col on malformed JSON.
    static Input from_file(const std::string& path);
    static Input from_text(const std::string& text, const std::string& source = "<input>");
};

/// Sorted keys, two-space indent, trailing newline.
std::string dump_json(const Json& j);

/// Which kind of definition a document holds: "algebra", "representation",
/// "cocycle", "extension", or "unknown".
std::string document_kind(const Json& j);

// Loaders check shapes, fields, index ranges and antisymmetry of bracket
// tables, and throw ParseError naming the source and the JSON path.
Field field_from_json(const Input& in);
RBLieAlgebra algebra_from_json(const Input& in);
Representation representation_from_json(const Input& in);
NonAbelianCocycle cocycle_from_json(const Input& in);
Extension extension_from_json(const Input& in);
Matrix matrix_from_json(const Input& in, const Field& f, std::size_t rows, std::size_t cols);
Cochain cochain_from_json(const Input& in, const Field& f, std::size_t gdim, std::size_t hdim);

/// {"beta": ..., "alpha": ...}; either key may be absent when the defaults
/// allow it, in which case it is the identity.
AutomorphismPair pair_from_json(const Input& in, const Extension& x, bool need_beta = true, bool need_alpha = true);
/// {"s": matrix}.
Matrix section_from_json(const Input& in, const Extension& x);
/// {"lambda": matrix}.
Matrix witness_from_json(const Input& in, const Extension& x);

Json to_json(const Field& f);
Json to_json(const Scalar& s);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Json to_json(const RBLieAlgebra& a);
Json to_json(const Representation& r);
Json to_json(const Cochain& c);
Json to_json(const NonAbelianCocycle& c);
Json to_json(const Extension& x);
Json to_json(const AutomorphismPair& p);

} // namespace rbx
