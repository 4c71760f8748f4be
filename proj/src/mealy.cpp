#include "annlab/mealy.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "annlab/error.hpp"

namespace annlab {

std::size_t MealyMachine::add_state(const std::string& name) {
  states.push_back(name);
  next.emplace_back(inputs.size(), static_cast<std::size_t>(-1));
  emit.emplace_back(inputs.size());
  if (!accepting.empty()) accepting.push_back(false);
  return states.size() - 1;
}

void MealyMachine::set(std::size_t p, Symbol a, std::size_t to, std::vector<std::string> out) {
  next.at(p).at(a) = to;
  emit.at(p).at(a) = std::move(out);
}

void MealyMachine::check() const {
  if (states.empty()) throw ValidationError("machine has no states");
  if (initial >= states.size()) throw ValidationError("bad initial state");
  if (!accepting.empty() && accepting.size() != states.size()) throw ValidationError("accepting table size mismatch");
  for (std::size_t p = 0; p < states.size(); ++p)
    for (Symbol a = 0; a < inputs.size(); ++a)
      if (next[p][a] >= states.size())
        throw ValidationError("transition from " + states[p] + " on " + inputs.token(a) + " missing");
}

MealyRun run_mealy(const MealyMachine& m, const Word& w) {
  MealyRun r;
  r.final_state = m.initial;
  for (auto a : w) {
    if (a >= m.inputs.size()) throw ValidationError("symbol outside machine alphabet");
    const auto& e = m.emit[r.final_state][a];
    r.output.insert(r.output.end(), e.begin(), e.end());
    r.final_state = m.next[r.final_state][a];
  }
  return r;
}

bool MealyMachine::accepts(const Word& w) const {
  if (accepting.empty()) return false;
  return accepting[run_mealy(*this, w).final_state];
}

static std::vector<std::string> split_emission(const std::string& e) {
  std::vector<std::string> out;
  if (e == "-" || e.empty()) return out;
  if (e.find(',') != std::string::npos) {
    std::istringstream in(e);
    for (std::string t; std::getline(in, t, ',');)
      if (!t.empty()) out.push_back(t);
  } else {
    for (char c : e) out.emplace_back(1, c);
  }
  return out;
}

MealyMachine parse_mealy_tsv(const std::string& text) {
  struct Row { std::string p, a, q, e, acc; std::size_t line; };
  std::vector<Row> rows;
  std::istringstream in(text);
  std::string line;
  std::size_t n = 0;
  for (; std::getline(in, line); ) {
    ++n;
    auto f = line.find_first_not_of(" \t\r");
    if (f == std::string::npos || line[f] == '#') continue;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.size() < 3 || tok.size() > 5)
      throw ParseError("line " + std::to_string(n) + ": expected 'state symbol next emission accepting'");
    tok.resize(5);
    rows.push_back({tok[0], tok[1], tok[2], tok[3], tok[4], n});
  }
  if (rows.empty()) throw ParseError("empty machine table");
  std::vector<std::string> syms, names;
  std::map<std::string, std::size_t> sid;
  auto state = [&](const std::string& s) {
    auto [it, fresh] = sid.emplace(s, names.size());
    if (fresh) names.push_back(s);
    return it->second;
  };
  std::map<std::string, bool> seen_sym;
  for (const auto& r : rows) {
    state(r.p);
    state(r.q);
    if (!seen_sym.count(r.a)) {
      seen_sym[r.a] = true;
      syms.push_back(r.a);
    }
  }
  MealyMachine m;
  m.inputs = Alphabet(syms);
  bool any_acc = false;
  for (const auto& r : rows) any_acc |= !r.acc.empty() && r.acc != "-";
  if (any_acc) m.accepting.clear();
  for (const auto& s : names) m.add_state(s);
  if (any_acc) m.accepting.assign(names.size(), false);
  m.initial = 0;
  std::map<std::pair<std::size_t, Symbol>, bool> defined;
  std::map<std::size_t, int> acc_seen;
  for (const auto& r : rows) {
    std::size_t p = sid[r.p];
    Symbol a = *m.inputs.index_of(r.a);
    if (defined[{p, a}]) throw ParseError("line " + std::to_string(r.line) + ": duplicate transition");
    defined[{p, a}] = true;
    m.set(p, a, sid[r.q], split_emission(r.e));
    if (any_acc && !r.acc.empty() && r.acc != "-") {
      int v;
      if (r.acc == "1" || r.acc == "yes" || r.acc == "accept") v = 1;
      else if (r.acc == "0" || r.acc == "no" || r.acc == "reject") v = 0;
      else throw ParseError("line " + std::to_string(r.line) + ": bad accepting flag '" + r.acc + "'");
      auto it = acc_seen.find(p);
      if (it != acc_seen.end() && it->second != v)
        throw ParseError("line " + std::to_string(r.line) + ": conflicting accepting flag");
      acc_seen[p] = v;
      m.accepting[p] = v;
    }
  }
  m.check();
  return m;
}

MealyMachine load_mealy(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_mealy_tsv(ss.str());
}

std::string write_mealy_tsv(const MealyMachine& m) {
  std::ostringstream o;
  std::vector<std::size_t> order{m.initial};
  for (std::size_t p = 0; p < m.states.size(); ++p)
    if (p != m.initial) order.push_back(p);
  for (auto p : order)
    for (Symbol a = 0; a < m.inputs.size(); ++a) {
      std::string e;
      for (std::size_t k = 0; k < m.emit[p][a].size(); ++k) e += (k ? "," : "") + m.emit[p][a][k];
      if (e.empty()) e = "-";
      else if (m.emit[p][a].size() == 1 && m.emit[p][a][0].size() > 1) e += ",";
      o << m.states[p] << "\t" << m.inputs.token(a) << "\t" << m.states[m.next[p][a]] << "\t" << e << "\t"
        << (m.accepting.empty() ? "-" : (m.accepting[p] ? "1" : "0")) << "\n";
    }
  return o.str();
}

Network compile_mealy(const MealyMachine& m) {
  m.check();
  const std::size_t q = m.inputs.size(), n = m.states.size();
  const NeuronId nxt = q + 1, out = q + 2, boot = q + 3, s0 = q + 4, c0 = s0 + n;
  auto S = [&](std::size_t p) { return s0 + p; };
  auto C = [&](std::size_t p, Symbol a) { return c0 + p * q + a; };
  const std::size_t size = c0 + n * q + 1;
  Network net(size);
  for (Symbol a = 0; a < q; ++a) net.inputs.push_back(a + 1);
  net.nxt = nxt;
  net.out = out;
  net.delta = 2;
  net.output_delay = 0;
  net.alphabet = m.inputs.tokens();
  net.init_active = std::vector<NeuronId>{nxt, boot};
  const Rational one(1);
  net.set_weight(boot, 0, Rational(-1));
  net.set_weight(nxt, 0, Rational(-1));
  for (Symbol a = 0; a < q; ++a) net.set_weight(nxt, a + 1, one);
  net.set_weight(out, 0, Rational(-1));
  if (!m.accepting.empty() && m.accepting[m.initial]) net.set_weight(out, boot, one);
  for (std::size_t p = 0; p < n; ++p) {
    net.set_weight(S(p), 0, Rational(-1));
    for (Symbol a = 0; a < q; ++a) {
      net.set_weight(C(p, a), 0, Rational(-2));
      net.set_weight(C(p, a), S(p), one);
      net.set_weight(C(p, a), a + 1, one);
    }
  }
  net.set_weight(S(m.initial), boot, one);
  for (std::size_t p = 0; p < n; ++p)
    for (Symbol a = 0; a < q; ++a) {
      std::size_t to = m.next[p][a];
      net.set_weight(S(to), C(p, a), one);
      if (!m.accepting.empty() && m.accepting[to]) net.set_weight(out, C(p, a), one);
    }
  net.notes = {"compiled machine: " + std::to_string(n) + " states",
               "1.." + std::to_string(q) + " inputs; " + std::to_string(nxt) + " nxt; " + std::to_string(out) +
                   " out; " + std::to_string(boot) + " boot",
               "states " + std::to_string(s0) + ".." + std::to_string(c0 - 1) + "; conjunctions " +
                   std::to_string(c0) + ".." + std::to_string(size - 1)};
  return net;
}

}  // namespace annlab
