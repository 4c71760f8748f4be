#pragma once

#include <optional>
#include <string>
#include <vector>

#include "annlab/alphabet.hpp"
#include "annlab/network.hpp"
#include "annlab/simulator.hpp"

namespace annlab {

struct TraceRow {
  std::size_t t = 0;
  Configuration cfg;
  std::string note;
};

struct RunTrace {
  std::vector<TraceRow> rows;
  std::vector<std::size_t> query_times;    // tau_1 .. tau_{n+1}
  std::vector<std::size_t> verdict_times;  // tau_{k+1} + output_delay
  std::vector<bool> verdicts;              // prefix of length k
  bool accepted() const { return verdicts.back(); }
};

struct RunOptions {
  Engine engine = Engine::Kernel;
  bool record = true;
  std::optional<Configuration> initial;
};

Alphabet alphabet_of(const Network& net);

RunTrace run_online(const Simulator& sim, const Alphabet& alphabet, const Word& word, const RunOptions& opt = {});
RunTrace run_online(const Network& net, const Alphabet& alphabet, const Word& word, const RunOptions& opt = {});
bool accepts(const Network& net, const Alphabet& alphabet, const Word& word, Engine engine = Engine::Kernel);
bool accepts(const Simulator& sim, const Word& word);

// Pre-clamp state at a query instant tau_k.
struct QueryPoint {
  Configuration cfg;
  std::size_t time = 0;
};
QueryPoint first_query(const Simulator& sim, const Configuration& init);
QueryPoint advance(const Simulator& sim, const QueryPoint& qp, Symbol a);
// Verdict for the word consumed so far, formal filler symbols afterwards.
bool probe_verdict(const Simulator& sim, const QueryPoint& qp);
void clamp(const Network& net, Configuration& cfg, Symbol a);

std::vector<Word> enumerate_language(const Simulator& sim, std::size_t max_len);
std::vector<Word> enumerate_language(const Network& net, const Alphabet& alphabet, std::size_t max_len,
                                     Engine engine = Engine::Kernel);

struct Witness {
  Word word;
  bool in_first = false;
};
// Symmetric difference in length-lex order.
std::vector<Witness> compare_languages(const std::vector<Word>& a, const std::vector<Word>& b);

std::string trace_tsv(const Network& net, const RunTrace& trace);

}  // namespace annlab
