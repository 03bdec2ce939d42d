#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qcorr/dense.hpp"
#include "qcorr/stabilizer.hpp"

namespace qcorr {

/// State file: JSON object
///   { "dims": [d1,...,dN], "kind": "density"|"pure",
///     "data": nested arrays of [re, im] pairs }
/// with row-major matrix data. Pure states are converted to density
/// matrices on load.
DenseOperator load_state_json(std::istream& in);
DenseOperator load_state_file(const std::string& path);

std::string state_to_json(const DenseOperator& op);
std::string pure_to_json(const PureState& psi);

/// Stabilizer file: one generator per line in parse_pauli syntax; blank
/// lines and lines starting with '#' are skipped; the qubit count must be
/// uniform across lines.
std::vector<PauliOperator> load_stabilizer_generators(std::istream& in);
std::vector<PauliOperator> load_stabilizer_file(const std::string& path);

}  // namespace qcorr
