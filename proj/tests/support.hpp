#pragma once

#include "heomesd/qops.hpp"
#include "oracles.hpp"

inline heomesd::ComplexMatrix4 to_lib(const oracle::Mat& m) {
  heomesd::ComplexMatrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = m[i][j];
  return r;
}

inline oracle::Mat to_oracle(const heomesd::ComplexMatrix4& m) {
  oracle::Mat r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = m(i, j);
  return r;
}
