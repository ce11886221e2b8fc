/*
 * Copyright 2026 The plausikit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PLAUSIKIT_SYNTAX_HPP
#define PLAUSIKIT_SYNTAX_HPP

#include <string>
#include <string_view>

#include "plausikit/formula.hpp"

namespace plausikit {

// Concrete syntax, loosest to tightest binding:
//
//   formula := impl
//   impl    := or ("->" impl)?                      right-associative
//   or      := and ("|" and)*
//   and     := unary ("&" unary)*
//   unary   := "~" unary | "K[" id "]" unary | "Khat[" id "]" unary
//            | "B[" id "|" formula "]" unary | "Bplus[" id "]" unary
//            | "Gt[" id "]" unary | "GtDia[" id "]" unary
//            | "[!" formula "]" unary | "[up" formula "]" unary | atomic
//   atomic  := "true" | "false" | id | "(" formula ")"
//
// Khat[i] and GtDia[i] read as ~K[i]~ and ~Gt[i]~.

/// Throws ParseError (1-based position, expected tokens) on malformed input.
Formula parse(std::string_view text);

/// Canonical text: parenthesized only where precedence or associativity
/// requires it, ~K[i]~ and ~Gt[i]~ shown as Khat[i] and GtDia[i].
/// parse(print(f)) == f for every f.
std::string print(const Formula& f);

}  // namespace plausikit

#endif  // PLAUSIKIT_SYNTAX_HPP
