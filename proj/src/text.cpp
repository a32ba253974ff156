#include "advmark/text.hpp"

#include <algorithm>
#include <cctype>

#include "advmark/errors.hpp"

namespace advmark {
namespace {

bool is_letter(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

// Separator characters never become tokens: whitespace, plus the hyphen so
// hyphenated compounds tokenize as separate words.
bool is_separator_char(char c) { return is_space(c) || c == '-'; }

char to_lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

char to_upper(char c) {
  return (c >= 'a' && c <= 'z') ? static_cast<char>(c - 'a' + 'A') : c;
}

}  // namespace

std::string_view to_string(Pos pos) {
  switch (pos) {
    case Pos::Noun: return "NOUN";
    case Pos::Verb: return "VERB";
    case Pos::Adj: return "ADJ";
    case Pos::Adv: return "ADV";
    case Pos::Other: return "OTHER";
  }
  return "OTHER";
}

Pos pos_from_string(std::string_view name) {
  if (name == "NOUN") return Pos::Noun;
  if (name == "VERB") return Pos::Verb;
  if (name == "ADJ") return Pos::Adj;
  if (name == "ADV") return Pos::Adv;
  if (name == "OTHER") return Pos::Other;
  throw Error("unknown POS tag: " + std::string(name));
}

std::string normalize_word(std::string_view surface) {
  std::string out;
  out.reserve(surface.size());
  for (char c : surface) out.push_back(to_lower(c));
  return out;
}

std::string transfer_casing(std::string_view original_surface,
                            std::string_view replacement) {
  std::string out(replacement);
  if (original_surface.empty() || out.empty()) return out;

  std::size_t letters = 0;
  std::size_t uppers = 0;
  for (char c : original_surface) {
    if (is_letter(c)) {
      ++letters;
      if (c >= 'A' && c <= 'Z') ++uppers;
    }
  }
  if (letters >= 2 && uppers == letters) {
    for (char& c : out) c = to_upper(c);
  } else if (uppers > 0 && original_surface.front() >= 'A' &&
             original_surface.front() <= 'Z') {
    out.front() = to_upper(out.front());
  }
  return out;
}

TokenizedText::TokenizedText(std::vector<Token> tokens,
                             std::vector<std::string> separators)
    : tokens_(std::move(tokens)), separators_(std::move(separators)) {
  if (separators_.size() != tokens_.size() + 1) {
    throw MalformedTextError("separator count must be token count + 1");
  }
  word_index_.reserve(tokens_.size());
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (tokens_[i].is_word) word_index_.push_back(i);
  }
}

const Token& TokenizedText::word(std::size_t ordinal) const {
  return tokens_.at(word_index_.at(ordinal));
}

std::size_t TokenizedText::token_index_of_word(std::size_t ordinal) const {
  return word_index_.at(ordinal);
}

TokenizedText TokenizedText::with_word(std::size_t ordinal,
                                       std::string_view replacement) const {
  std::vector<Token> tokens = tokens_;
  Token& tok = tokens[word_index_.at(ordinal)];
  tok.surface = transfer_casing(tok.surface, replacement);
  tok.normalized = normalize_word(replacement);
  return TokenizedText(std::move(tokens), separators_);
}

std::vector<std::string_view> TokenizedText::word_views() const {
  std::vector<std::string_view> out;
  out.reserve(word_index_.size());
  for (std::size_t idx : word_index_) out.push_back(tokens_[idx].normalized);
  return out;
}

std::string TokenizedText::detokenize() const {
  if (separators_.size() != tokens_.size() + 1) {
    throw MalformedTextError("separator count must be token count + 1");
  }
  std::string out;
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    out += separators_[i];
    out += tokens_[i].surface;
  }
  out += separators_.back();
  return out;
}

TokenizedText tokenize(std::string_view raw) {
  if (raw.empty()) throw EmptyTextError("input text is empty");

  std::vector<Token> tokens;
  std::vector<std::string> separators;
  std::string pending_sep;

  std::size_t i = 0;
  const std::size_t n = raw.size();
  while (i < n) {
    char c = raw[i];
    if (is_letter(c)) {
      // Maximal letter run; apostrophes only between letters.
      std::size_t start = i;
      while (i < n) {
        if (is_letter(raw[i])) {
          ++i;
        } else if (raw[i] == '\'' && i + 1 < n && is_letter(raw[i + 1])) {
          i += 2;
        } else {
          break;
        }
      }
      Token tok;
      tok.surface = std::string(raw.substr(start, i - start));
      tok.normalized = normalize_word(tok.surface);
      tok.is_word = true;
      tok.pos = Pos::Other;
      separators.push_back(std::move(pending_sep));
      pending_sep.clear();
      tokens.push_back(std::move(tok));
    } else if (is_separator_char(c)) {
      pending_sep.push_back(c);
      ++i;
    } else {
      // Run of punctuation/digits becomes a single non-word token.
      std::size_t start = i;
      while (i < n && !is_letter(raw[i]) && !is_separator_char(raw[i])) ++i;
      Token tok;
      tok.surface = std::string(raw.substr(start, i - start));
      tok.normalized = normalize_word(tok.surface);
      tok.is_word = false;
      tok.pos = Pos::Other;
      separators.push_back(std::move(pending_sep));
      pending_sep.clear();
      tokens.push_back(std::move(tok));
    }
  }
  separators.push_back(std::move(pending_sep));

  TokenizedText text(std::move(tokens), std::move(separators));
  if (text.word_count() == 0) {
    throw EmptyTextError("input text contains no words");
  }
  return text;
}

}  // namespace advmark
