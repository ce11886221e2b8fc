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

#ifndef PLAUSIKIT_FORMULA_HPP
#define PLAUSIKIT_FORMULA_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace plausikit {

/// Node kinds of the formula AST. Or/Implies/Top/Bot are kept as nodes so that
/// printing round-trips; the duals Khat and GtDia are only concrete syntax.
enum class Op : std::uint8_t {
  Atom,
  Top,
  Bot,
  Not,
  And,
  Or,
  Implies,
  Know,        // K_i phi
  CondBelief,  // B_i^alpha phi
  SafeBelief,  // B_i^+ phi
  GtBox,       // [>_i] phi
  Announce,    // [!phi] psi
  Upgrade,     // [up phi] psi
};

/// Operator kinds that identify a sublanguage.
enum class Modality : std::uint8_t { K, Bc, Bplus, Gt, Ann, Up };

inline constexpr Modality kAllModalities[] = {Modality::K,  Modality::Bc,  Modality::Bplus,
                                              Modality::Gt, Modality::Ann, Modality::Up};

std::string_view modalityName(Modality m);

/// A set of operator kinds. Boolean structure is always part of a fragment.
class Fragment {
 public:
  constexpr Fragment() = default;
  constexpr Fragment(std::initializer_list<Modality> ms) {
    for (Modality m : ms) bits_ |= bit(m);
  }

  /// Comma-separated modality names, e.g. "K,Bplus,Bc". Empty string is the
  /// Boolean-only fragment. Unknown names raise InputError.
  static Fragment parse(std::string_view csv);
  static constexpr Fragment all() { return fromBits(0x3f); }

  constexpr bool contains(Modality m) const { return (bits_ & bit(m)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool isStatic() const { return !contains(Modality::Ann) && !contains(Modality::Up); }
  constexpr bool subsetOf(Fragment other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr Fragment with(Modality m) const { return fromBits(bits_ | bit(m)); }
  constexpr Fragment without(Modality m) const { return fromBits(bits_ & ~bit(m)); }
  constexpr Fragment staticPart() const { return without(Modality::Ann).without(Modality::Up); }
  constexpr Fragment operator|(Fragment o) const { return fromBits(bits_ | o.bits_); }
  constexpr Fragment operator&(Fragment o) const { return fromBits(bits_ & o.bits_); }

  /// "{K, Bc}" style, modalities in canonical order.
  std::string toString() const;
  /// "K,Bc" style, accepted by parse().
  std::string toCsv() const;

  constexpr std::uint8_t bits() const { return bits_; }
  static constexpr Fragment fromBits(unsigned b) {
    Fragment f;
    f.bits_ = static_cast<std::uint8_t>(b & 0x3f);
    return f;
  }
  constexpr auto operator<=>(const Fragment&) const = default;

 private:
  static constexpr std::uint8_t bit(Modality m) { return static_cast<std::uint8_t>(1u << static_cast<unsigned>(m)); }
  std::uint8_t bits_ = 0;
};

/// Immutable formula tree with shared subterms. Copies are cheap; equality and
/// ordering are structural.
class Formula {
 public:
  /// The default value is the formula `true`.
  Formula();

  Op op() const;
  /// Atom name for Atom, agent for Know/CondBelief/SafeBelief/GtBox, empty otherwise.
  const std::string& label() const;
  std::size_t arity() const;
  /// Children in order: Not/Know/SafeBelief/GtBox have one; And/Or/Implies
  /// have two; CondBelief is (condition, body); Announce/Upgrade are
  /// (precondition, body).
  const Formula& child(std::size_t k) const;

  /// Structural hash, cached at construction.
  std::size_t hash() const;
  /// Node count of the tree (saturating).
  std::uint64_t size() const;
  /// Nesting depth counting every node layer; atoms, true, false have depth 0.
  unsigned depth() const;
  /// True iff no Announce/Upgrade node occurs.
  bool isStatic() const;
  /// Operator kinds occurring anywhere in the tree (cached).
  Fragment fragment() const;

  /// Identity of the shared node; usable as a cache key together with ==.
  const void* id() const { return node_.get(); }

  bool operator==(const Formula& other) const;
  std::strong_ordering operator<=>(const Formula& other) const;

  struct Node;

 private:
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  friend Formula makeFormula(Op, std::string, const Formula*, const Formula*);

  std::shared_ptr<const Node> node_;
};

Formula Atom(std::string name);
Formula Top();
Formula Bot();
Formula Not(Formula f);
Formula And(Formula a, Formula b);
Formula Or(Formula a, Formula b);
Formula Implies(Formula a, Formula b);
Formula Iff(Formula a, Formula b);
Formula Know(std::string agent, Formula f);
Formula CondBelief(std::string agent, Formula condition, Formula body);
Formula SafeBelief(std::string agent, Formula f);
Formula GtBox(std::string agent, Formula f);
Formula Announce(Formula pre, Formula body);
Formula Upgrade(Formula pre, Formula body);

/// ~K_i~phi
Formula Khat(std::string agent, Formula f);
/// ~[>_i]~phi
Formula GtDia(std::string agent, Formula f);

/// The modality kind of an operator node, if it is one.
std::optional<Modality> modalityOf(Op op);

/// Smallest fragment containing every operator kind occurring in f.
Fragment fragmentOf(const Formula& f);

}  // namespace plausikit

template <>
struct std::hash<plausikit::Formula> {
  std::size_t operator()(const plausikit::Formula& f) const noexcept { return f.hash(); }
};

#endif  // PLAUSIKIT_FORMULA_HPP
