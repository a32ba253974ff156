#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace advmark {

// Closed part-of-speech tag set. Tagging is a pure function of the
// normalized word so that sender and receiver always agree.
enum class Pos : std::uint8_t { Noun, Verb, Adj, Adv, Other };

std::string_view to_string(Pos pos);
Pos pos_from_string(std::string_view name);  // throws Error on unknown name

struct Token {
  std::string surface;     // verbatim slice of the input
  std::string normalized;  // lowercased surface
  Pos pos = Pos::Other;
  bool is_word = false;    // false for punctuation/numeral runs
};

// A text split into tokens and the separator strings between them.
// Immutable after construction; detokenize() reproduces the input exactly.
class TokenizedText {
 public:
  TokenizedText(std::vector<Token> tokens, std::vector<std::string> separators);

  const std::vector<Token>& tokens() const { return tokens_; }
  const std::vector<std::string>& separators() const { return separators_; }

  // Number of word tokens, the n of the embedding math.
  std::size_t word_count() const { return word_index_.size(); }

  // Word ordinals are 0-based and skip non-word tokens.
  const Token& word(std::size_t ordinal) const;
  std::size_t token_index_of_word(std::size_t ordinal) const;

  // Copy with word `ordinal` replaced by `replacement` (a normalized word).
  // The new surface mirrors the original casing.
  TokenizedText with_word(std::size_t ordinal, std::string_view replacement) const;

  // Normalized forms of all word tokens, in order.
  std::vector<std::string_view> word_views() const;

  std::string detokenize() const;  // throws MalformedTextError

 private:
  std::vector<Token> tokens_;
  std::vector<std::string> separators_;  // size = tokens_.size() + 1
  std::vector<std::size_t> word_index_;  // word ordinal -> token index
};

// Splits raw text into word tokens (maximal letter runs, apostrophes allowed
// word-internally), non-word tokens (other printable runs) and separators
// (whitespace and hyphens). Throws EmptyTextError when no word token exists.
TokenizedText tokenize(std::string_view raw);

std::string normalize_word(std::string_view surface);

// Casing rule applied when substituting a word: all-caps originals yield
// all-caps replacements, capitalized originals yield capitalized
// replacements, anything else passes the replacement through unchanged.
std::string transfer_casing(std::string_view original_surface,
                            std::string_view replacement);

}  // namespace advmark
