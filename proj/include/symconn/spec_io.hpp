#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "symconn/catalog.hpp"
#include "symconn/scalar.hpp"
#include "symconn/tensor.hpp"

namespace symconn {

// Model files are JSON documents:
//
//   { "dim": 4,
//     "parameter": "b",                                   (optional)
//     "brackets":   [{"i": 2, "j": 4, "k": 1, "v": "-1"}],   i < j
//     "omega":      [{"i": 1, "j": 2, "v": "1"}],            i < j
//     "connection": [{"i": 4, "j": 2, "k": 1, "v": "-b+2/3"}],  (optional)
//     "vectors":    {"E2": ["0", "1", "0", "0"]} }          (optional)
//
// Indices are 1-based. Values are scalar literals (strings), never JSON
// numbers. Brackets and Ω are completed antisymmetrically.

/// Structural problem in a model file: JSON syntax, missing or mistyped
/// fields, index ranges, ordering rules, scalar literal syntax. `where` is a
/// JSON pointer to the offending field, or "byte N" for syntax errors.
class SpecFormatError : public std::runtime_error {
 public:
  SpecFormatError(const std::string& where, const std::string& message)
      : std::runtime_error(where + ": " + message), where_(where) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

struct BracketEntry {
  std::size_t i, j, k;
  Scalar value;
};

struct OmegaEntry {
  std::size_t i, j;
  Scalar value;
};

struct ConnectionEntry {
  std::size_t i, j, k;
  Scalar value;
};

struct ModelSpecDocument {
  std::size_t dim = 0;
  std::optional<std::string> parameter;
  std::vector<BracketEntry> brackets;
  std::vector<OmegaEntry> omega;
  std::optional<std::vector<ConnectionEntry>> connection;
  std::map<std::string, std::vector<Scalar>> vectors;
};

/// Parses and structurally checks a model file. Throws SpecFormatError.
ModelSpecDocument parse_spec(std::string_view text);

/// Canonical serialization: fixed key order, entries sorted by index, zero
/// entries dropped, scalars in canonical literal form, two-space indent and
/// a trailing newline.
std::string serialize_spec(const ModelSpecDocument& doc);

/// A model read from a file. The algebra and Ω are validated; the
/// connection is not, so that commands can report its defects themselves.
struct LoadedModel {
  std::string name;
  FrameAlgebra algebra;
  SymplecticForm omega;
  std::optional<Connection> connection;
  std::optional<std::string> parameter;
  std::map<std::string, Tensor> vectors;
};

/// Builds the model. Throws AlgebraValidationError, PreconditionError
/// (degenerate or non-closed Ω) or ParameterError (parameter in brackets
/// or Ω).
LoadedModel load_model(const ModelSpecDocument& doc, const std::string& name);

/// Export of a model; the frame vectors E1..En are added as named vectors.
ModelSpecDocument document_from_model(const NamedModel& model);

}  // namespace symconn
