#include <fstream>
#include <sstream>

#include "annlab/error.hpp"
#include "annlab/network.hpp"

namespace annlab {

std::string write_anet(const Network& net) {
  std::ostringstream o;
  o << "anet v1\n";
  for (const auto& n : net.notes) o << "# " << n << "\n";
  o << "size " << net.size() << "\n";
  o << "analog " << net.analog() << "\n";
  o << "inputs";
  for (auto i : net.inputs) o << " " << i;
  o << "\n";
  o << "nxt " << net.nxt << "\n";
  o << "out " << net.out << "\n";
  o << "delta " << net.delta << "\n";
  o << "outdelay " << net.output_delay << "\n";
  if (!net.alphabet.empty()) {
    o << "alphabet";
    for (const auto& a : net.alphabet) o << " " << a;
    o << "\n";
  }
  if (net.init_active) {
    o << "init";
    for (auto i : *net.init_active) o << " " << i;
    o << "\n";
  }
  if (!net.init_analog.is_zero()) o << "init_analog " << net.init_analog.str() << "\n";
  for (NeuronId j = 1; j <= net.size(); ++j)
    for (const auto& [i, w] : net.row(j)) o << "w " << j << " " << i << " " << w.str() << "\n";
  return o.str();
}

static size_t to_index(const std::string& tok, size_t line) {
  size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(tok, &pos);
  } catch (...) {
    pos = 0;
  }
  if (pos != tok.size() || tok.empty() || tok[0] == '-')
    throw ParseError("line " + std::to_string(line) + ": bad integer '" + tok + "'");
  return v;
}

Network parse_anet(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  size_t lineno = 0;
  bool header = false;
  Network net;
  bool sized = false;
  size_t analog = 0;
  std::vector<std::string> notes;
  auto fail = [&](const std::string& m) { throw ParseError("line " + std::to_string(lineno) + ": " + m); };
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    auto first = raw.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (raw[first] == '#') {
      std::string n = raw.substr(first + 1);
      if (!n.empty() && n[0] == ' ') n.erase(0, 1);
      notes.push_back(n);
      continue;
    }
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    const std::string& key = tok[0];
    if (!header) {
      if (tok.size() != 2 || key != "anet" || tok[1] != "v1") fail("expected 'anet v1' header");
      header = true;
      continue;
    }
    if (key == "size") {
      if (tok.size() != 2 || sized) fail("bad size line");
      net = Network(to_index(tok[1], lineno));
      sized = true;
      continue;
    }
    if (!sized) fail("'size' must precede '" + key + "'");
    if (key == "analog") {
      if (tok.size() != 2) fail("bad analog line");
      analog = to_index(tok[1], lineno);
    } else if (key == "inputs") {
      net.inputs.clear();
      for (size_t k = 1; k < tok.size(); ++k) net.inputs.push_back(to_index(tok[k], lineno));
    } else if (key == "nxt" || key == "out" || key == "delta" || key == "outdelay") {
      if (tok.size() != 2) fail("bad " + key + " line");
      size_t v = to_index(tok[1], lineno);
      if (key == "nxt") net.nxt = v;
      else if (key == "out") net.out = v;
      else if (key == "delta") net.delta = static_cast<unsigned>(v);
      else net.output_delay = static_cast<unsigned>(v);
    } else if (key == "alphabet") {
      net.alphabet.assign(tok.begin() + 1, tok.end());
    } else if (key == "init") {
      std::vector<NeuronId> a;
      for (size_t k = 1; k < tok.size(); ++k) a.push_back(to_index(tok[k], lineno));
      net.init_active = a;
    } else if (key == "init_analog") {
      if (tok.size() != 2) fail("bad init_analog line");
      net.init_analog = Rational::parse(tok[1]);
    } else if (key == "w") {
      if (tok.size() != 4) fail("weight line needs 'w j i p/q'");
      size_t j = to_index(tok[1], lineno), i = to_index(tok[2], lineno);
      if (j < 1 || j > net.size() || i > net.size()) fail("weight index out of range");
      if (!net.weight(j, i).is_zero()) fail("duplicate weight");
      try {
        net.set_weight(j, i, Rational::parse(tok[3]));
      } catch (const ParseError& e) {
        fail(e.what());
      }
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  if (!header) throw ParseError("missing 'anet v1' header");
  if (!sized) throw ParseError("missing size line");
  if (analog != net.size()) throw ParseError("analog unit must be neuron " + std::to_string(net.size()));
  net.notes = notes;
  return net;
}

Network load_network(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_anet(ss.str());
}

void save_network(const Network& net, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw ValidationError("cannot write " + path);
  f << write_anet(net);
}

}  // namespace annlab
