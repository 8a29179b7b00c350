#ifndef SYLAB_IO_HPP
#define SYLAB_IO_HPP

#include <string>

#include "json.hpp"

#include "sylab/module.hpp"

namespace sylab {

using Json = nlohmann::ordered_json;

/// Thrown for malformed input; the message names the offending field.
class ParseError : public Error {
public:
  using Error::Error;
};

/// Strict: unknown keys are rejected, coefficients are reduced mod p.
AlgebraSpec algebra_spec_from_json(const Json &j);
Json algebra_spec_to_json(const AlgebraSpec &spec);

/// Missing vertices have dimension 0 and missing arrows act by zero.
/// The module is validated against the relations.
Representation module_from_json(const AlgebraPtr &a, const Json &j);
Json module_to_json(const Representation &m);

Json matrix_to_json(const FMatrix &m);

/// Reads and parses a whole file; parse errors carry line and column.
Json read_json_file(const std::string &path);
Json parse_json_text(const std::string &text, const std::string &origin);

} // namespace sylab

#endif
