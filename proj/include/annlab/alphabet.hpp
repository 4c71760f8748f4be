#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace annlab {

using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> tokens);
  static Alphabet digits(std::size_t q);

  std::size_t size() const { return tokens_.size(); }
  const std::string& token(Symbol a) const { return tokens_.at(a); }
  const std::vector<std::string>& tokens() const { return tokens_; }
  std::optional<Symbol> index_of(const std::string& tok) const;

  // "", "-" and "ε" denote the empty word; tokens split on ',' or blanks,
  // otherwise one character per symbol.
  Word parse(const std::string& text) const;
  std::string format(const Word& w) const;

 private:
  std::vector<std::string> tokens_;
  bool single_char_ = true;
};

struct LengthLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

Word concat(const Word& a, const Word& b);
Word power(const Word& w, std::size_t n);
// All words of length <= max_len in length-lex order.
std::vector<Word> all_words(std::size_t q, std::size_t max_len);

}  // namespace annlab
