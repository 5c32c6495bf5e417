#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lagc/signature.hpp"

namespace lagc {

/// Unordered derivative multi-index: a multiset of even time indices and a
/// set of odd time indices, both stored sorted.
///
/// The jet variable x_{,F1...Fk} with F1 <= ... <= Fk denotes
/// D_{F1} D_{F2} ... D_{Fk} x, so the sign of any other ordering is recovered
/// by the graded commutation D_F D_G = (-1)^{F~G~} D_G D_F.
class MultiIndex {
 public:
  MultiIndex() = default;

  /// Builds D_{F1} ... D_{Fk} applied to a coordinate, in the order given.
  /// Returns the canonical multi-index and the sign picked up while sorting,
  /// or nullopt when an odd index repeats (the derivative vanishes).
  static std::optional<std::pair<int, MultiIndex>> from_sequence(const Signature& sig,
                                                                 std::span<const int> indices);

  /// Result of applying D_f on the left: sign and new index, nullopt when f is
  /// odd and already present.
  std::optional<std::pair<int, MultiIndex>> with_derivative(const Signature& sig, int f) const;

  const std::vector<std::uint8_t>& even_part() const { return even_; }
  const std::vector<std::uint8_t>& odd_part() const { return odd_; }

  /// All indices in canonical (ascending) order.
  std::vector<int> indices() const;

  int order() const { return static_cast<int>(even_.size() + odd_.size()); }
  Parity parity() const { return Parity(odd_.size() % 2 == 1); }
  bool empty() const { return even_.empty() && odd_.empty(); }

  /// Renumber every index >= first by delta (used when the even block of the
  /// time cube grows or shrinks).
  MultiIndex shifted(int first, int delta) const;
  bool contains(int f) const;

  /// Order: total order, then even part, then odd part (lexicographic).
  std::strong_ordering operator<=>(const MultiIndex& other) const;
  bool operator==(const MultiIndex& other) const = default;

 private:
  std::vector<std::uint8_t> even_;
  std::vector<std::uint8_t> odd_;
};

/// A generator of the jet algebra: either an explicit time variable t^F / tau^F
/// or a jet variable x^A_{,mu}. Carries its parity so that sign bookkeeping
/// needs no signature.
class Symbol {
 public:
  enum class Kind : std::uint8_t { time, jet };

  static Symbol time(const Signature& sig, int f);
  static Symbol jet(const Signature& sig, int coord, MultiIndex mindex = {});

  Kind kind() const { return kind_; }
  bool is_time() const { return kind_ == Kind::time; }
  bool is_jet() const { return kind_ == Kind::jet; }

  /// Time index F for time symbols, coordinate index A for jets.
  int index() const { return index_; }
  int coord() const { return index_; }
  const MultiIndex& mindex() const { return mindex_; }

  Parity parity() const { return Parity(odd_); }
  bool is_odd() const { return odd_; }

  /// Time symbols sort before jets; jets by (coordinate, multi-index).
  std::strong_ordering operator<=>(const Symbol& other) const;
  bool operator==(const Symbol& other) const;

 private:
  Symbol(Kind kind, int index, MultiIndex mindex, bool odd)
      : kind_(kind), index_(static_cast<std::uint8_t>(index)), odd_(odd), mindex_(std::move(mindex)) {}

  Kind kind_;
  std::uint8_t index_;
  bool odd_;
  MultiIndex mindex_;
};

/// Text form, e.g. "x1", "th2[1 3]", "t1", "tau1".
std::string to_string(const Signature& sig, const Symbol& symbol);

}  // namespace lagc
