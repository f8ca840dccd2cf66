#include "ssd/seqcore.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <unordered_map>

#include "ssd/errors.hpp"

namespace ssd {

Alphabet::Alphabet(Symbol max_symbol) : m_(max_symbol) {
  if (m_ < 1) throw FormatError("alphabet needs at least two symbols (m >= 1)");
}

unsigned Alphabet::symbol_bits() const noexcept {
  // ceil(log2(m + 1)) == bit_width(m) for m >= 1.
  return static_cast<unsigned>(std::bit_width(m_));
}

Sequence& Sequence::append(const Sequence& other) {
  symbols_.insert(symbols_.end(), other.symbols_.begin(), other.symbols_.end());
  return *this;
}

Symbol Sequence::max_symbol() const noexcept {
  if (symbols_.empty()) return 0;
  return *std::max_element(symbols_.begin(), symbols_.end());
}

bool Sequence::fits(const Alphabet& alphabet) const noexcept {
  return std::all_of(symbols_.begin(), symbols_.end(),
                     [&](Symbol s) { return alphabet.contains(s); });
}

std::size_t Sequence::weight() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(symbols_.begin(), symbols_.end(), [](Symbol s) { return s != 0; }));
}

bool is_subsequence(std::span<const Symbol> x, std::span<const Symbol> y) noexcept {
  if (y.size() > x.size()) return false;
  std::size_t j = 0;
  for (std::size_t i = 0; i < x.size() && j < y.size(); ++i) {
    if (x[i] == y[j]) ++j;
  }
  return j == y.size();
}

bool is_subsequence(const Sequence& x, const Sequence& y) noexcept {
  return is_subsequence(x.symbols(), y.symbols());
}

bool is_substring(const Sequence& x, const Sequence& y) {
  if (y.size() > x.size()) return false;
  return std::search(x.begin(), x.end(), y.begin(), y.end()) != x.end();
}

Sequence canonical_relabel(const Sequence& x) {
  std::unordered_map<Symbol, Symbol> first_seen;
  std::vector<Symbol> out;
  out.reserve(x.size());
  for (Symbol s : x) {
    auto [it, inserted] = first_seen.try_emplace(s, static_cast<Symbol>(first_seen.size()));
    out.push_back(it->second);
  }
  return Sequence(std::move(out));
}

std::uint64_t sequence_count(std::size_t n, const Alphabet& alphabet,
                             const EnumerationBudget& budget) {
  const double bits = static_cast<double>(n) * std::log2(static_cast<double>(alphabet.size()));
  if (bits > budget.max_bits || bits >= 63.0) {
    throw BudgetExceeded("enumerating " + std::to_string(alphabet.size()) + "^" +
                         std::to_string(n) + " sequences exceeds the enumeration budget of 2^" +
                         std::to_string(static_cast<int>(budget.max_bits)));
  }
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= alphabet.size();
  return count;
}

Sequence sequence_at(std::uint64_t index, std::size_t n, const Alphabet& alphabet) {
  std::vector<Symbol> out(n, 0);
  const std::uint64_t base = alphabet.size();
  for (std::size_t i = n; i-- > 0;) {
    out[i] = static_cast<Symbol>(index % base);
    index /= base;
  }
  return Sequence(std::move(out));
}

std::uint64_t lex_index(const Sequence& s, const Alphabet& alphabet) {
  std::uint64_t index = 0;
  for (Symbol c : s) index = index * alphabet.size() + c;
  return index;
}

LexSequences::LexSequences(std::size_t n, Alphabet alphabet, const EnumerationBudget& budget)
    : n_(n), alphabet_(alphabet), count_(sequence_count(n, alphabet, budget)) {}

LexSequences::iterator LexSequences::begin() const {
  return iterator(Sequence::repeat(0, n_), alphabet_.max_symbol(), count_);
}

LexSequences::iterator& LexSequences::iterator::operator++() {
  --remaining_;
  if (remaining_ == 0) return *this;
  // Odometer increment, last position fastest.
  for (std::size_t i = current_.size(); i-- > 0;) {
    if (current_[i] < m_) {
      ++current_[i];
      break;
    }
    current_[i] = 0;
  }
  return *this;
}

namespace {

Symbol parse_symbol(std::string_view token, std::string_view whole) {
  Symbol value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last) {
    throw FormatError("malformed sequence '" + std::string(whole) + "'");
  }
  return value;
}

Sequence parse_list(std::string_view text) {
  std::vector<Symbol> out;
  if (text.empty()) return Sequence{};
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto token = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    out.push_back(parse_symbol(token, text));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Sequence(std::move(out));
}

Sequence parse_digits(std::string_view text) {
  std::vector<Symbol> out;
  out.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c > '9') throw FormatError("malformed sequence '" + std::string(text) + "'");
    out.push_back(static_cast<Symbol>(c - '0'));
  }
  return Sequence(std::move(out));
}

}  // namespace

Sequence parse_sequence(std::string_view text) {
  return text.find(',') != std::string_view::npos ? parse_list(text) : parse_digits(text);
}

Sequence parse_sequence(std::string_view text, const Alphabet& alphabet) {
  Sequence s = alphabet.max_symbol() > 9 ? parse_list(text) : parse_sequence(text);
  if (!s.fits(alphabet)) {
    throw FormatError("sequence '" + std::string(text) + "' has a symbol above m=" +
                      std::to_string(alphabet.max_symbol()));
  }
  return s;
}

std::string format_sequence(const Sequence& s, const Alphabet& alphabet) {
  std::string out;
  if (alphabet.max_symbol() <= 9) {
    out.reserve(s.size());
    for (Symbol c : s) out.push_back(static_cast<char>('0' + c));
    return out;
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(s[i]);
  }
  return out;
}

std::string format_sequence(const Sequence& s) {
  return format_sequence(s, Alphabet(std::max<Symbol>(1, s.max_symbol())));
}

Sequence sequence_from_bits(std::uint64_t bits, std::size_t n) {
  std::vector<Symbol> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<Symbol>((bits >> (n - 1 - i)) & 1U);
  return Sequence(std::move(out));
}

}  // namespace ssd
