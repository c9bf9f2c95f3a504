/*
Copyright 2026 The expsig Authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace expsig {

// Exact rational scalar. gmpxx keeps results canonical (gcd 1, den > 0)
// after every arithmetic operation.
using Rat = mpq_class;
using BigInt = mpz_class;

// "num/den", always with an explicit denominator ("0/1", "3/1").
std::string to_string(const Rat& q);

// Accepts "n", "n/d", and finite decimals such as "2.82" or "-1.5e-3",
// converted exactly. Throws Error(kInvalidArgument) otherwise.
Rat parse_rat(std::string_view text);

Rat abs(const Rat& q);

}  // namespace expsig
