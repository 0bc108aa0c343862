#pragma once

// Text matrix format shared by the CLI and the test goldens:
//
//   field p=<p> m=<m> modulus=[c0,...,cm]
//   dims <rows> <cols>
//   <row 0 encodings, space separated>
//   ...
//   # provenance: kind=<name> [start=<1-based> count=<r> step=<k>]
//
// Other lines starting with '#' are ignored on input.

#include <iosfwd>
#include <optional>
#include <string>

#include "fmds/bounds.hpp"
#include "fmds/codes.hpp"

namespace fmds {

struct MatrixFile {
  FieldMatrix matrix;
  std::optional<Provenance> provenance;
};

std::string serialize(const FieldMatrix& matrix, const std::optional<Provenance>& provenance = std::nullopt);
std::string serialize(const LinearCode& code);

/// Throws ParseError on malformed input (and NotIrreducible etc. for a bad field line).
MatrixFile parse_matrix_file(std::istream& in);
MatrixFile parse_matrix_file(const std::string& text);
MatrixFile read_matrix_file(const std::string& path);

/// Rebuilds a LinearCode, keeping the recorded provenance.
LinearCode to_code(const MatrixFile& file);

/// "rows=[0,1,2] cols=[0,3,5]"
std::string to_string(const Minor& minor);
std::string to_text(const MdsCertificate& cert);
/// Report text; the witness matrix is embedded after a "witness:" line.
std::string to_text(const SearchReport& report);

}  // namespace fmds
