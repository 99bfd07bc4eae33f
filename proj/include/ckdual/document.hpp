#pragma once

// JSON input documents: a finite Cuntz-Krieger matrix, or a seed describing
// an infinite matrix. Matrices are arrays of 0/1 rows.

#include <optional>
#include <string>

#include <json.hpp>

#include "ckdual/zomat.hpp"

namespace ckdual {

struct InputDocument {
  enum class Kind { Ck, Seed };
  Kind kind = Kind::Ck;
  std::optional<ZeroOneMatrix> matrix;  // kind == Ck
  std::optional<StableSeed> seed;       // kind == Seed
};

/// Throws MalformedDocument, DimensionMismatch or InvalidSeed.
InputDocument parse_document(const nlohmann::json& j);
InputDocument load_document(const std::string& path);

nlohmann::json matrix_to_json(const ZeroOneMatrix& m);
nlohmann::json matrix_to_json(const IntMatrix& m);
nlohmann::json vector_to_json(const IntVector& v);
/// Echo of a seed in document form.
nlohmann::json seed_to_json(const StableSeed& s);
nlohmann::json document_to_json(const InputDocument& doc);

}  // namespace ckdual
