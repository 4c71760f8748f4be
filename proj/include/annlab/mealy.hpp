#pragma once

#include <string>
#include <vector>

#include "annlab/alphabet.hpp"
#include "annlab/network.hpp"

namespace annlab {

struct MealyMachine {
  std::vector<std::string> states;
  std::size_t initial = 0;
  Alphabet inputs;
  std::vector<std::vector<std::size_t>> next;  // [state][symbol]
  std::vector<std::vector<std::vector<std::string>>> emit;
  std::vector<bool> accepting;  // empty = no acceptance predicate

  std::size_t add_state(const std::string& name);
  void set(std::size_t p, Symbol a, std::size_t to, std::vector<std::string> out = {});
  bool accepts(const Word& w) const;
  void check() const;
};

struct MealyRun {
  std::vector<std::string> output;
  std::size_t final_state = 0;
};
MealyRun run_mealy(const MealyMachine& m, const Word& w);

// Rows: state symbol next_state emission accepting; first row's state is initial.
MealyMachine parse_mealy_tsv(const std::string& text);
MealyMachine load_mealy(const std::string& path);
std::string write_mealy_tsv(const MealyMachine& m);

// One-hot 0ANN with delta = 2; the analog unit is disconnected.
Network compile_mealy(const MealyMachine& m);

}  // namespace annlab
