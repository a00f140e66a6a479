#pragma once

#include "dkg/types.hpp"

#include <vector>

namespace dkg::fft {

// Unnormalized in-place DFTs backed by FFTW. sign = -1 forward, +1 backward.
// Row-major layout, last index fastest.
void dft2(std::vector<cplx>& data, int n0, int n1, int sign);
void dft3(std::vector<cplx>& data, int n0, int n1, int n2, int sign);

}  // namespace dkg::fft
