#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "foolset/matrix.hpp"

namespace foolset {

// FSM text format:
//
//   FSM 1 <p> <rows> <cols>
//   <cols residues separated by single spaces>     (rows lines)
//
// Every line ends in '\n' and carries no trailing whitespace. CSV carries the
// same rows comma-separated, with no header and therefore no modulus.

void write_fsm(std::ostream& os, const Matrix& m);
void write_csv(std::ostream& os, const Matrix& m);
std::string to_fsm(const Matrix& m);
std::string to_csv(const Matrix& m);

/// Throws Error{Parse} on malformed input or residues outside [0, p).
Matrix parse_fsm(std::string_view text);

/// CSV rows over `field`; without a field, the smallest prime exceeding every
/// entry is used. Entries must be non-negative and, with a field, below p.
Matrix parse_csv(std::string_view text, std::optional<PrimeField> field = std::nullopt);

/// Dispatches on the "FSM " magic; anything else is read as CSV.
Matrix parse_matrix(std::string_view text, std::optional<PrimeField> csv_field = std::nullopt);
Matrix read_matrix_file(const std::string& path, std::optional<PrimeField> csv_field = std::nullopt);

}  // namespace foolset
