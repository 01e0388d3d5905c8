// Copyright 2026 The sumprod Authors.
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

// Recursive-descent parser for polynomial expressions:
//
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := 'x1' | 'x2' | uint | '(' expr ')'

#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "sumprod/bipoly.hpp"
#include "sumprod/error.hpp"

namespace sumprod {

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, const RingCtx& ctx) : text_(text), ctx_(ctx) {}

  BiPoly parse() {
    BiPoly out = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return out;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  BiPoly expr() {
    BiPoly acc = term();
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  BiPoly term() {
    BiPoly acc = factor();
    while (accept('*')) {
      acc = acc * factor();
      check_degree(acc.degree());
    }
    return acc;
  }

  BiPoly factor() {
    BiPoly b = base();
    if (accept('^')) {
      skip_ws();
      const std::size_t at = pos_;
      const std::uint64_t e = uint_literal(/*reduce=*/false);
      if (static_cast<std::uint64_t>(b.degree()) * e >= ctx_.order()) {
        throw Error(ErrorCode::DegreeTooLarge,
                    "power at position " + std::to_string(at) + " reaches the ring order");
      }
      b = b.pow(static_cast<unsigned>(e));
    }
    return b;
  }

  BiPoly base() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      BiPoly inner = expr();
      if (!accept(')')) throw ParseError(pos_, "expected ')'");
      return inner;
    }
    if (c == 'x') {
      if (pos_ + 1 < text_.size() && (text_[pos_ + 1] == '1' || text_[pos_ + 1] == '2')) {
        const bool first = text_[pos_ + 1] == '1';
        pos_ += 2;
        return first ? BiPoly::x1(ctx_) : BiPoly::x2(ctx_);
      }
      throw ParseError(pos_, "expected x1 or x2");
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return BiPoly::constant(ctx_, Elem{static_cast<std::uint32_t>(uint_literal(/*reduce=*/true))});
    }
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }

  // Decimal literal. Coefficients are reduced on the fly through Z -> ring;
  // exponents are kept exact (capped well above any admissible degree).
  std::uint64_t uint_literal(bool reduce) {
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (reduce) {
        value = (value * 10 + digit) % ctx_.characteristic();
      } else {
        value = std::min<std::uint64_t>(value * 10 + digit, std::uint64_t{1} << 40);
      }
      ++pos_;
    }
    if (pos_ == start) throw ParseError(pos_, "expected an unsigned integer");
    return value;
  }

  void check_degree(std::uint64_t degree) const {
    if (degree >= ctx_.order()) {
      throw Error(ErrorCode::DegreeTooLarge, "degree reaches the ring order near position " + std::to_string(pos_));
    }
  }

  std::string_view text_;
  const RingCtx& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a polynomial expression; integer literals map through Z -> ring.
inline BiPoly parse_poly(std::string_view text, const RingCtx& ctx) {
  BiPoly p = detail::PolyParser(text, ctx).parse();
  if (p.degree() >= ctx.order()) {
    fail(ErrorCode::DegreeTooLarge, "degree " + std::to_string(p.degree()) + " is not below the ring order");
  }
  return p;
}

}  // namespace sumprod
