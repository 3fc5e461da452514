// Copyright 2026 The depthcut Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace depthcut {

/// Exact scalar used for every coordinate and constructed quantity.
using Rational = mpq_class;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "12", "-0.125", "3.5e-2" or "7/3" without rounding.
Rational ParseRational(std::string_view text);

/// Finite decimal when the denominator is of the form 2^a 5^b, "p/q" otherwise.
/// ParseRational(FormatRational(q)) == q for every q.
std::string FormatRational(const Rational& q);

inline int Sign(const Rational& q) { return sgn(q); }

inline double ToDouble(const Rational& q) { return q.get_d(); }

/// Exact rational value of a finite double.
inline Rational FromDouble(double d) { return Rational(d); }

}  // namespace depthcut
