#pragma once

#include <string_view>

#include "heomesd/qops.hpp"

namespace heomesd {

/// Singlet |psi-> = (|e1 g2> - |g1 e2>)/sqrt(2), the default initial state.
ComplexMatrix4 bell_psi_minus();

/// |e1 e2><e1 e2|.
ComplexMatrix4 product_ee();

/// Reads 16 row-major "re im" pairs separated by whitespace. Throws
/// Error(Io) if the file cannot be read, Error(InvalidState) if it is
/// malformed or fails density-matrix validation.
DensityMatrix read_state_file(const std::string& path);

/// "bell-psi-minus", "product-ee" or "file:<path>".
/// Unknown names throw Error(Domain).
DensityMatrix preset_initial_state(std::string_view name);

}  // namespace heomesd
