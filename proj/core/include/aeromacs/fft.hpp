// SPDX-License-Identifier: Apache-2.0
//
// aeromacs-toolkit: OFDMA physical layer analysis for airport surface datalinks
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#pragma once

#include <complex>
#include <vector>

namespace aeromacs {

using cplx = std::complex<double>;

/// In-place radix-2 transform with unitary 1/sqrt(N) normalization in both
/// directions, so Parseval holds without bookkeeping. Size must be a power
/// of two.
void fft_unitary(std::vector<cplx>& data, bool inverse);

inline std::vector<cplx> dft_unitary(std::vector<cplx> data) {
  fft_unitary(data, false);
  return data;
}

inline std::vector<cplx> idft_unitary(std::vector<cplx> data) {
  fft_unitary(data, true);
  return data;
}

}  // namespace aeromacs
