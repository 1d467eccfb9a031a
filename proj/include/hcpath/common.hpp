// Copyright 2026 The hcpath Authors
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

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace hcpath {

using VertexId = std::uint64_t;

// A path or cycle as a sequence of local vertex indices of some view.
using LocalPath = std::vector<int>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad host spec, duplicate vertex, unknown option.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A construction step could not complete even though its preconditions held.
class ConstructionGap : public Error {
 public:
  using Error::Error;
};

// Exact non-negative rational, used for average degrees and peel thresholds.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Rational() = default;
  constexpr Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
    if (den == 0) throw InvalidArgument("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend constexpr bool operator==(const Rational& x, const Rational& y) {
    return x.num == y.num && x.den == y.den;
  }
  friend constexpr auto operator<=>(const Rational& x, const Rational& y) {
    return static_cast<__int128>(x.num) * y.den <=>
           static_cast<__int128>(y.num) * x.den;
  }

  std::int64_t floor() const {
    return num >= 0 ? num / den : -((-num + den - 1) / den);
  }
  std::int64_t ceil() const {
    return num >= 0 ? (num + den - 1) / den : -((-num) / den);
  }

  std::string to_string() const {
    return den == 1 ? std::to_string(num)
                    : std::to_string(num) + "/" + std::to_string(den);
  }

  // Accepts "p", "p/q" or a decimal such as "1.5".
  static Rational parse(const std::string& text) {
    try {
      const auto slash = text.find('/');
      if (slash != std::string::npos) {
        return Rational(std::stoll(text.substr(0, slash)),
                        std::stoll(text.substr(slash + 1)));
      }
      const auto dot = text.find('.');
      if (dot == std::string::npos) return Rational(std::stoll(text));
      const std::string frac = text.substr(dot + 1);
      if (frac.size() > 12) throw InvalidArgument("too many decimals");
      std::int64_t scale = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
      const std::int64_t whole = dot == 0 ? 0 : std::stoll(text.substr(0, dot));
      const std::int64_t part = frac.empty() ? 0 : std::stoll(frac);
      const bool negative = !text.empty() && text[0] == '-';
      return Rational(whole * scale + (negative ? -part : part), scale);
    } catch (const std::logic_error&) {
      throw InvalidArgument("cannot parse rational '" + text + "'");
    }
  }
};

// 2^e for 0 <= e <= 62.
constexpr std::int64_t pow2(int e) {
  if (e < 0 || e > 62) throw InvalidArgument("exponent out of range");
  return std::int64_t{1} << e;
}

}  // namespace hcpath
