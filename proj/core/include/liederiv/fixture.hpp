#pragma once

#include <optional>
#include <string>

#include "liederiv/algstruct.hpp"

namespace liederiv {

/// Algebra plus optional module loaded from a JSON fixture:
/// {
///   "schema_version": 1,
///   "algebra": {
///     "basis_labels": ["e", "h", "f"],
///     "cartan_index": 1,                       // optional
///     "structure_constants": [[["0","0","0"], ...], ...]   // dim x dim x dim
///   },
///   "module": {                                 // optional
///     "action": [[["0","2","0"], ...], ...],    // dim(L) row-major matrices
///     "weight_labels": [2, 0, -2]               // optional
///   }
/// }
/// All scalars are rational strings "p/q" (or "p").
struct Fixture {
  LieAlgebra algebra;
  std::optional<Module> module;
};

/// Parses a fixture file. Throws IoError when the file cannot be read or is
/// not JSON, InputError when shapes or scalars are malformed.
Fixture load_fixture(const std::string& path);

}  // namespace liederiv
