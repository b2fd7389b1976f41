#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "shlin/linalg.hpp"

namespace shlin {

// Set files:    `q=<q> r=<r> [poly=c0,...,cm]` then one vector per line,
//               coordinates as space-separated element codes.
// Matrix files: `q=<q> rows=<R> cols=<C> [poly=...]` then R rows of C codes.
// Errors are ParseError with "line L, column C" in the message.

struct VectorList {
  FieldPtr field;
  std::size_t r = 0;
  std::vector<FqVector> vectors;
};

VectorList read_set(std::istream& in);
VectorList load_set(const std::string& path);
// Throws FieldMismatch when the file's field differs from `expected`.
VectorList load_set(const std::string& path, const FieldPtr& expected);
void write_set(std::ostream& out, const Field& field, std::size_t r, const std::vector<FqVector>& vectors);
void save_set(const std::string& path, const Field& field, std::size_t r, const std::vector<FqVector>& vectors);

FqMatrix read_matrix(std::istream& in);
FqMatrix load_matrix(const std::string& path);
FqMatrix load_matrix(const std::string& path, const FieldPtr& expected);
void write_matrix(std::ostream& out, const FqMatrix& m);
void save_matrix(const std::string& path, const FqMatrix& m);

}  // namespace shlin
