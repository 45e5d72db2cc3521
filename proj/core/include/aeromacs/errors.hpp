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

#include <stdexcept>
#include <string>

namespace aeromacs {

/// Base class for domain errors (infeasible inputs, exceeded budgets).
/// Field-level validation failures throw std::invalid_argument instead,
/// with the offending field named in the message.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// No cyclic-prefix ratio in the allowed family covers the delay spread.
class NoFeasibleRatio : public Error {
 public:
  explicit NoFeasibleRatio(const std::string& msg) : Error(msg) {}
};

/// Requested more OFDM symbols than the frame carries.
class SymbolBudgetExceeded : public Error {
 public:
  explicit SymbolBudgetExceeded(const std::string& msg) : Error(msg) {}
};

/// Corridor geometry degenerate (station spacing collapses below 1 m).
class InfeasibleCorridor : public Error {
 public:
  explicit InfeasibleCorridor(const std::string& msg) : Error(msg) {}
};

}  // namespace aeromacs
