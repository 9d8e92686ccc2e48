// Copyright 2026 The toricpack Authors.
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

#include "toricpack/rational.h"

#include <cctype>
#include <stdexcept>
#include <string>

#include "toricpack/errors.h"

namespace toricpack {
namespace {

bool IsDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt Pow10(long exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, static_cast<unsigned long>(exponent));
  return out;
}

// 10^exponent as a rational, exponent may be negative.
Rational Pow10Rational(long exponent) {
  if (exponent >= 0) return Rational(Pow10(exponent));
  return Rational(BigInt(1), Pow10(-exponent));
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::Parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num_text = body.substr(0, slash);
  std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1")
                                      : body.substr(slash + 1);
  if (!IsDigits(num_text) || !IsDigits(den_text)) {
    throw ParseError("not a rational: \"" + std::string(text) + "\"");
  }
  BigInt num(std::string(num_text), 10);
  BigInt den(std::string(den_text), 10);
  if (den == 0) {
    throw ParseError("zero denominator: \"" + std::string(text) + "\"");
  }
  if (negative) num = -num;
  return Rational(num, den);
}

std::string Rational::ToString() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::ToDecimal(int significant) const {
  if (sign() == 0) return "0";
  const Rational magnitude = Abs(*this);

  // Decimal exponent e with 10^e <= |x| < 10^(e+1).
  long e = static_cast<long>(mpz_sizeinbase(numerator().get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(denominator().get_mpz_t(), 10));
  while (Pow10Rational(e) > magnitude) --e;
  while (Pow10Rational(e + 1) <= magnitude) ++e;

  // Round half up to `significant` digits.
  const Rational scaled = magnitude * Pow10Rational(significant - 1 - e);
  BigInt digits_value;
  {
    const Rational shifted = scaled + Rational(BigInt(1), BigInt(2));
    mpz_fdiv_q(digits_value.get_mpz_t(), shifted.numerator().get_mpz_t(),
               shifted.denominator().get_mpz_t());
  }
  if (digits_value == Pow10(significant)) {
    digits_value /= 10;
    ++e;
  }
  std::string digits = digits_value.get_str();

  std::string out;
  if (e >= significant - 1) {
    out = digits + std::string(static_cast<size_t>(e - (significant - 1)), '0');
  } else if (e >= 0) {
    out = digits.substr(0, static_cast<size_t>(e + 1)) + "." +
          digits.substr(static_cast<size_t>(e + 1));
  } else {
    out = "0." + std::string(static_cast<size_t>(-e - 1), '0') + digits;
  }
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return sign() < 0 ? "-" + out : out;
}

Rational Rational::operator-() const {
  Rational out;
  out.value_ = -value_;
  return out;
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.sign() == 0) throw std::domain_error("rational division by zero");
  value_ /= other.value_;
  return *this;
}

Rational Abs(const Rational& x) { return x.sign() < 0 ? -x : x; }
Rational Min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational Max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rational& x) {
  return os << x.ToString();
}

}  // namespace toricpack
