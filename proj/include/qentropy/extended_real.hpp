// Copyright 2026 The qentropy Authors
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

#ifndef QENTROPY_EXTENDED_REAL_HPP
#define QENTROPY_EXTENDED_REAL_HPP

#include <cmath>
#include <compare>
#include <limits>
#include <ostream>

#include "qentropy/errors.hpp"

namespace qentropy {

/// A real number or +/- infinity. Never NaN: infinity minus infinity (or
/// infinity plus its negative) throws IndeterminateError instead.
class ExtendedReal {
 public:
  ExtendedReal() = default;
  ExtendedReal(double v) : v_(v) {  // NOLINT(google-explicit-constructor)
    if (std::isnan(v)) throw IndeterminateError("NaN is not an extended real");
  }

  static ExtendedReal infinity() { return ExtendedReal(std::numeric_limits<double>::infinity()); }

  bool is_finite() const noexcept { return std::isfinite(v_); }
  bool is_infinite() const noexcept { return std::isinf(v_); }
  double value() const noexcept { return v_; }

  friend ExtendedReal operator+(ExtendedReal a, ExtendedReal b) {
    if (a.is_infinite() && b.is_infinite() && (a.v_ > 0) != (b.v_ > 0)) {
      throw IndeterminateError("indeterminate form: infinity - infinity");
    }
    return ExtendedReal(a.v_ + b.v_);
  }
  friend ExtendedReal operator-(ExtendedReal a) { return ExtendedReal(-a.v_); }
  friend ExtendedReal operator-(ExtendedReal a, ExtendedReal b) { return a + (-b); }

  friend bool operator==(ExtendedReal a, ExtendedReal b) { return a.v_ == b.v_; }
  friend auto operator<=>(ExtendedReal a, ExtendedReal b) { return a.v_ <=> b.v_; }

  friend std::ostream& operator<<(std::ostream& os, ExtendedReal x) { return os << x.v_; }

 private:
  double v_ = 0.0;
};

}  // namespace qentropy

#endif  // QENTROPY_EXTENDED_REAL_HPP
