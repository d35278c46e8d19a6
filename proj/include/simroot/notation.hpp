// Copyright 2026 The simroot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SIMROOT_NOTATION_HPP
#define SIMROOT_NOTATION_HPP

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "simroot/decomposition.hpp"
#include "simroot/partial_injection.hpp"

namespace simroot {

// Path/cycle notation:
//
//   element   := ws (component ws)*
//   component := '[' digits ']' | '(' digits ')'
//   digits    := int ((',' | ws) int)*
//   int       := [1-9][0-9]*
//
// Square brackets are paths, parentheses are cycles. "(2)(3 4)[1]" maps
// 1 to nothing, fixes 2 and swaps 3 and 4.

/// Syntax only. Throws ParseError, DuplicateDigit (within one component) and
/// EmptyComponent. Digits shared between components are left for recompose.
Decomposition parse_components(std::string_view text);

/// Parses onto the mentioned digits, or onto {1..ground_max} when given (a
/// digit above ground_max is a GroundError). Throws OverlapError when
/// components share a digit.
PartialInjection parse(std::string_view text,
                       std::optional<Digit> ground_max = std::nullopt);

/// Canonical notation: cycles first, then paths, each by minimum digit.
std::string format(const Decomposition& d);
std::string format(const PartialInjection& f);

std::ostream& operator<<(std::ostream& os, const PartialInjection& f);
std::ostream& operator<<(std::ostream& os, const Decomposition& d);
std::ostream& operator<<(std::ostream& os, const PathComponent& p);
std::ostream& operator<<(std::ostream& os, const CycleComponent& c);

}  // namespace simroot

#endif  // SIMROOT_NOTATION_HPP
