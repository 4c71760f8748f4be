#include "annlab/alphabet.hpp"

#include <set>
#include <sstream>

#include "annlab/error.hpp"

namespace annlab {

Alphabet::Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  if (tokens_.empty()) throw ValidationError("alphabet must be nonempty");
  std::set<std::string> seen;
  for (const auto& t : tokens_) {
    if (t.empty() || !seen.insert(t).second) throw ValidationError("bad or duplicate alphabet token '" + t + "'");
    if (t.size() != 1) single_char_ = false;
  }
}

Alphabet Alphabet::digits(std::size_t q) {
  std::vector<std::string> t;
  for (std::size_t k = 0; k < q; ++k) t.push_back(std::to_string(k));
  return Alphabet(t);
}

std::optional<Symbol> Alphabet::index_of(const std::string& tok) const {
  for (std::size_t k = 0; k < tokens_.size(); ++k)
    if (tokens_[k] == tok) return static_cast<Symbol>(k);
  return std::nullopt;
}

Word Alphabet::parse(const std::string& text) const {
  if (text.empty() || text == "-" || text == "ε") return {};
  Word w;
  auto push = [&](const std::string& t) {
    auto a = index_of(t);
    if (!a) throw ParseError("symbol '" + t + "' not in alphabet");
    w.push_back(*a);
  };
  if (text.find_first_of(", \t") != std::string::npos) {
    std::string norm = text;
    for (auto& c : norm)
      if (c == ',') c = ' ';
    std::istringstream in(norm);
    for (std::string t; in >> t;) push(t);
  } else if (single_char_) {
    for (char c : text) push(std::string(1, c));
  } else {
    push(text);
  }
  return w;
}

std::string Alphabet::format(const Word& w) const {
  if (w.empty()) return "ε";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k && !single_char_) s += ",";
    s += token(w[k]);
  }
  return s;
}

Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

Word power(const Word& w, std::size_t n) {
  Word r;
  for (std::size_t k = 0; k < n; ++k) r.insert(r.end(), w.begin(), w.end());
  return r;
}

std::vector<Word> all_words(std::size_t q, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t k = begin; k < end; ++k)
      for (Symbol a = 0; a < q; ++a) {
        Word w = out[k];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

}  // namespace annlab
