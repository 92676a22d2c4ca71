#include "heomesd/presets.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "heomesd/error.hpp"

namespace heomesd {

ComplexMatrix4 bell_psi_minus() {
  ComplexMatrix4 m;
  m(1, 1) = 0.5;
  m(2, 2) = 0.5;
  m(1, 2) = -0.5;
  m(2, 1) = -0.5;
  return m;
}

ComplexMatrix4 product_ee() {
  ComplexMatrix4 m;
  m(0, 0) = 1.0;
  return m;
}

DensityMatrix read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open state file '" + path + "'");

  ComplexMatrix4 m;
  for (int i = 0; i < 16; ++i) {
    double re = 0.0;
    double im = 0.0;
    if (!(in >> re >> im)) {
      std::ostringstream ss;
      ss << "state file '" << path << "': expected 16 \"re im\" pairs, read " << i;
      throw Error(ErrorKind::InvalidState, ss.str());
    }
    m.data()[i] = Complex(re, im);
  }
  std::string extra;
  if (in >> extra) {
    throw Error(ErrorKind::InvalidState,
                "state file '" + path + "': trailing data after 16 entries");
  }
  try {
    return DensityMatrix(m);
  } catch (const Error& e) {
    throw Error(ErrorKind::InvalidState, "state file '" + path + "': " + e.what());
  }
}

DensityMatrix preset_initial_state(std::string_view name) {
  if (name == "bell-psi-minus") return DensityMatrix(bell_psi_minus());
  if (name == "product-ee") return DensityMatrix(product_ee());
  constexpr std::string_view file_prefix = "file:";
  if (name.starts_with(file_prefix)) {
    return read_state_file(std::string(name.substr(file_prefix.size())));
  }
  throw Error(ErrorKind::Domain, "unknown initial state '" + std::string(name) +
                                     "' (expected bell-psi-minus, product-ee or "
                                     "file:<path>)");
}

}  // namespace heomesd
