#pragma once

// Sequences over a finite alphabet {0, ..., m} and the containment oracles
// that every protocol, reduction and search in this library is checked
// against.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ssd {

using Symbol = std::uint32_t;

/// The alphabet {0, 1, ..., m}. Always has at least two symbols.
class Alphabet {
 public:
  explicit Alphabet(Symbol max_symbol);

  Symbol max_symbol() const noexcept { return m_; }
  std::uint64_t size() const noexcept { return std::uint64_t{m_} + 1; }
  bool contains(Symbol s) const noexcept { return s <= m_; }

  /// Bits needed to write one symbol in a fixed-width field.
  unsigned symbol_bits() const noexcept;

  static Alphabet binary() { return Alphabet(1); }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  Symbol m_;
};

class Sequence {
 public:
  using value_type = Symbol;
  using const_iterator = std::vector<Symbol>::const_iterator;

  Sequence() = default;
  explicit Sequence(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}
  Sequence(std::initializer_list<Symbol> symbols) : symbols_(symbols) {}

  /// n copies of one symbol.
  static Sequence repeat(Symbol s, std::size_t n) {
    return Sequence(std::vector<Symbol>(n, s));
  }

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  Symbol& operator[](std::size_t i) { return symbols_[i]; }
  const_iterator begin() const noexcept { return symbols_.begin(); }
  const_iterator end() const noexcept { return symbols_.end(); }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }

  void push_back(Symbol s) { symbols_.push_back(s); }
  Sequence& append(const Sequence& other);

  /// Largest symbol present, or 0 for the empty sequence.
  Symbol max_symbol() const noexcept;
  bool fits(const Alphabet& alphabet) const noexcept;

  /// Number of nonzero symbols.
  std::size_t weight() const noexcept;

  friend Sequence operator+(Sequence lhs, const Sequence& rhs) { return lhs.append(rhs); }
  friend bool operator==(const Sequence&, const Sequence&) = default;
  friend auto operator<=>(const Sequence&, const Sequence&) = default;

 private:
  std::vector<Symbol> symbols_;
};

/// 1 iff the symbols of y occur in x in order, not necessarily contiguously.
/// Single greedy left-to-right scan. The empty pattern is contained in
/// every x.
bool is_subsequence(std::span<const Symbol> x, std::span<const Symbol> y) noexcept;
bool is_subsequence(const Sequence& x, const Sequence& y) noexcept;

/// 1 iff y occurs contiguously in x.
bool is_substring(const Sequence& x, const Sequence& y);

/// Replaces each symbol by the rank of its first appearance, so 23232 and
/// 01010 map to the same sequence. Idempotent.
Sequence canonical_relabel(const Sequence& x);

// ---------------------------------------------------------------------------
// Lexicographic enumeration of {0..m}^n.

struct EnumerationBudget {
  /// Upper limit on n * log2(m + 1), i.e. on log2 of the number of sequences.
  double max_bits = 32.0;
};

/// (m+1)^n, throwing BudgetExceeded if that does not fit the budget.
std::uint64_t sequence_count(std::size_t n, const Alphabet& alphabet,
                             const EnumerationBudget& budget = {});

/// The index-th sequence of length n in lexicographic order (0^n is index 0).
Sequence sequence_at(std::uint64_t index, std::size_t n, const Alphabet& alphabet);

/// Inverse of sequence_at.
std::uint64_t lex_index(const Sequence& s, const Alphabet& alphabet);

/// All (m+1)^n sequences of length n in lexicographic order, 0^n first and
/// m^n last. Iterating produces one Sequence per step.
class LexSequences {
 public:
  LexSequences(std::size_t n, Alphabet alphabet, const EnumerationBudget& budget = {});

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Sequence;
    using difference_type = std::ptrdiff_t;
    using pointer = const Sequence*;
    using reference = const Sequence&;

    iterator() = default;
    const Sequence& operator*() const { return current_; }
    const Sequence* operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.remaining_ == b.remaining_;
    }

   private:
    friend class LexSequences;
    iterator(Sequence start, Symbol m, std::uint64_t remaining)
        : current_(std::move(start)), m_(m), remaining_(remaining) {}
    Sequence current_;
    Symbol m_ = 1;
    std::uint64_t remaining_ = 0;
  };

  iterator begin() const;
  iterator end() const { return iterator(Sequence{}, alphabet_.max_symbol(), 0); }
  std::uint64_t size() const noexcept { return count_; }

 private:
  std::size_t n_;
  Alphabet alphabet_;
  std::uint64_t count_;
};

// ---------------------------------------------------------------------------
// Text format. Alphabets with m <= 9 use a plain digit string ("120021");
// larger alphabets use comma-separated integers ("10,3,11").

/// Parses either form. A string containing a comma is read as a list.
Sequence parse_sequence(std::string_view text);

/// Parses and checks every symbol lies in the alphabet. For m > 9 the text
/// is always read as a comma-separated list.
Sequence parse_sequence(std::string_view text, const Alphabet& alphabet);

std::string format_sequence(const Sequence& s, const Alphabet& alphabet);

/// Uses digits when every symbol is <= 9.
std::string format_sequence(const Sequence& s);

/// Sequence from the low `n` bits of `bits`, most significant bit first.
Sequence sequence_from_bits(std::uint64_t bits, std::size_t n);

}  // namespace ssd
