#include "annlab/protocol.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

#include "annlab/error.hpp"

namespace annlab {

Alphabet alphabet_of(const Network& net) { return Alphabet(net.alphabet_tokens()); }

void clamp(const Network& net, Configuration& cfg, Symbol a) {
  for (std::size_t k = 0; k < net.inputs.size(); ++k) cfg.set_bit(net.inputs[k], k == a);
}

static DeltaViolation late_query(const Network& net, std::size_t last) {
  return DeltaViolation("nxt did not fire within delta=" + std::to_string(net.delta) + " steps after t=" +
                        std::to_string(last));
}

RunTrace run_online(const Simulator& sim, const Alphabet& alphabet, const Word& word, const RunOptions& opt) {
  const Network& net = sim.network();
  if (alphabet.size() != net.inputs.size()) throw ValidationError("alphabet size does not match input neurons");
  for (auto a : word)
    if (a >= alphabet.size()) throw ValidationError("symbol outside alphabet");
  RunTrace tr;
  Configuration cfg = opt.initial ? *opt.initial : net.initial_configuration();
  const std::size_t n = word.size();
  std::size_t t = 0, last = 0, consumed = 0;
  std::deque<std::pair<std::size_t, std::size_t>> pending;  // (read time, prefix length)
  if (opt.record) tr.rows.push_back({0, cfg, ""});
  while (tr.verdicts.size() < n + 1) {
    bool need = tr.query_times.size() < n + 1;
    bool fire = cfg.bit(net.nxt);
    if (need && !fire && t + 1 - last >= net.delta) {
      throw DeltaViolation("word " + alphabet.format(word) + ": " + late_query(net, last).what());
    }
    cfg = sim.step(cfg);
    ++t;
    std::string note;
    if (fire) {
      Symbol a = consumed < n ? word[consumed] : 0;
      clamp(net, cfg, a);
      if (need) {
        std::size_t k = tr.query_times.size();
        tr.query_times.push_back(t);
        pending.emplace_back(t + net.output_delay, k);
        last = t;
        if (opt.record)
          note = "query x" + std::to_string(k + 1) + "=" + alphabet.token(a) + (consumed < n ? "" : " (formal)");
      }
      ++consumed;
    }
    while (!pending.empty() && pending.front().first == t) {
      std::size_t k = pending.front().second;
      pending.pop_front();
      bool v = cfg.bit(net.out);
      tr.verdicts.push_back(v);
      tr.verdict_times.push_back(t);
      if (opt.record) {
        Word prefix(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(k));
        if (!note.empty()) note += "; ";
        note += "verdict " + alphabet.format(prefix) + (v ? " accept" : " reject");
      }
    }
    if (opt.record) tr.rows.push_back({t, cfg, note});
  }
  return tr;
}

RunTrace run_online(const Network& net, const Alphabet& alphabet, const Word& word, const RunOptions& opt) {
  Simulator sim(net, opt.engine);
  return run_online(sim, alphabet, word, opt);
}

bool accepts(const Network& net, const Alphabet& alphabet, const Word& word, Engine engine) {
  RunOptions o;
  o.engine = engine;
  o.record = false;
  return run_online(net, alphabet, word, o).accepted();
}

bool accepts(const Simulator& sim, const Word& word) {
  RunOptions o;
  o.record = false;
  return run_online(sim, alphabet_of(sim.network()), word, o).accepted();
}

QueryPoint first_query(const Simulator& sim, const Configuration& init) {
  const Network& net = sim.network();
  Configuration cfg = init;
  std::size_t t = 0;
  while (!cfg.bit(net.nxt)) {
    if (t + 1 >= net.delta) throw late_query(net, 0);
    cfg = sim.step(cfg);
    ++t;
  }
  return {sim.step(cfg), t + 1};
}

QueryPoint advance(const Simulator& sim, const QueryPoint& qp, Symbol a) {
  const Network& net = sim.network();
  Configuration cfg = qp.cfg;
  clamp(net, cfg, a);
  std::size_t t = qp.time;
  while (!cfg.bit(net.nxt)) {
    if (t + 1 - qp.time >= net.delta) throw late_query(net, qp.time);
    cfg = sim.step(cfg);
    ++t;
  }
  return {sim.step(cfg), t + 1};
}

bool probe_verdict(const Simulator& sim, const QueryPoint& qp) {
  const Network& net = sim.network();
  if (net.output_delay == 0) return qp.cfg.bit(net.out);
  Configuration cfg = qp.cfg;
  clamp(net, cfg, 0);
  for (unsigned k = 0; k < net.output_delay; ++k) {
    bool fire = cfg.bit(net.nxt);
    cfg = sim.step(cfg);
    if (fire) clamp(net, cfg, 0);
  }
  return cfg.bit(net.out);
}

std::vector<Word> enumerate_language(const Simulator& sim, std::size_t max_len) {
  const Network& net = sim.network();
  const std::size_t q = net.inputs.size();
  std::vector<Word> out;
  Word prefix;
  std::function<void(const QueryPoint&)> dfs = [&](const QueryPoint& qp) {
    if (probe_verdict(sim, qp)) out.push_back(prefix);
    if (prefix.size() == max_len) return;
    for (Symbol a = 0; a < q; ++a) {
      QueryPoint nx;
      try {
        nx = advance(sim, qp, a);
      } catch (const DeltaViolation& e) {
        prefix.push_back(a);
        throw DeltaViolation("word " + alphabet_of(net).format(prefix) + ": " + e.what());
      }
      prefix.push_back(a);
      dfs(nx);
      prefix.pop_back();
    }
  };
  dfs(first_query(sim, net.initial_configuration()));
  std::sort(out.begin(), out.end(), LengthLex{});
  return out;
}

std::vector<Word> enumerate_language(const Network& net, const Alphabet& alphabet, std::size_t max_len,
                                     Engine engine) {
  if (alphabet.size() != net.inputs.size()) throw ValidationError("alphabet size does not match input neurons");
  Simulator sim(net, engine);
  return enumerate_language(sim, max_len);
}

std::vector<Witness> compare_languages(const std::vector<Word>& a, const std::vector<Word>& b) {
  std::vector<Word> sa(a), sb(b);
  std::sort(sa.begin(), sa.end(), LengthLex{});
  std::sort(sb.begin(), sb.end(), LengthLex{});
  std::vector<Witness> w;
  std::size_t i = 0, j = 0;
  LengthLex lt;
  while (i < sa.size() || j < sb.size()) {
    if (j == sb.size() || (i < sa.size() && lt(sa[i], sb[j]))) w.push_back({sa[i++], true});
    else if (i == sa.size() || lt(sb[j], sa[i])) w.push_back({sb[j++], false});
    else { ++i; ++j; }
  }
  return w;
}

std::string trace_tsv(const Network& net, const RunTrace& trace) {
  std::ostringstream o;
  o << "t";
  for (std::size_t i = 1; i <= net.size(); ++i) o << "\ty_" << i;
  o << "\tnote\n";
  for (const auto& r : trace.rows) {
    o << r.t;
    for (auto b : r.cfg.binary) o << "\t" << int(b);
    o << "\t" << r.cfg.analog.str() << "\t" << r.note << "\n";
  }
  return o.str();
}

}  // namespace annlab
