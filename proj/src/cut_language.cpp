#include "annlab/cut_language.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "annlab/error.hpp"

namespace annlab {

Rational nu(const CutParams& p) { return (p.beta - Rational(1)).inverse(); }

static void check_params(const CutParams& p) {
  if (p.beta <= Rational(1)) throw ValidationError("beta must exceed 1");
  if (p.digits.empty()) throw ValidationError("digit set must be nonempty");
  std::set<Rational> d(p.digits.begin(), p.digits.end());
  if (d.size() != p.digits.size()) throw ValidationError("digits must be distinct");
}

Rational beta_value(const Word& word, const CutParams& p, bool reversed) {
  Rational sum, inv = p.beta.inverse(), scale = inv;
  const std::size_t n = word.size();
  for (std::size_t k = 0; k < n; ++k) {
    Symbol x = reversed ? word[n - 1 - k] : word[k];
    sum += p.digits.at(x) * scale;
    scale *= inv;
  }
  return sum;
}

bool cut_member(const Word& word, const CutParams& p, bool reversed) {
  return beta_value(word, p, reversed) < p.threshold;
}

static std::optional<BigInt> int_cube_root(const BigInt& n) {
  BigInt r;
  if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), 3) == 0) return std::nullopt;
  return r;
}

std::optional<Rational> rational_cube_root(const Rational& x) {
  auto a = int_cube_root(x.num());
  auto b = int_cube_root(x.den());
  if (!a || !b) return std::nullopt;
  return Rational(*a, *b);
}

Network build_cut_acceptor(const CutParams& p) {
  check_params(p);
  if (p.digits != std::vector<Rational>{Rational(0), Rational(1)})
    throw ValidationError("cut acceptor supports digits {0,1} only");
  auto rho = rational_cube_root(p.beta);
  if (!rho) throw ValidationError("unsupported parameter: beta=" + p.beta.str() + " is not a rational cube");
  Network net(8);
  net.inputs = {1, 2};
  net.nxt = 3;
  net.out = 7;
  net.delta = 3;
  net.output_delay = 0;
  const Rational one(1), minus1(-1);
  net.set_weight(8, 2, (p.beta - one) / p.beta);
  net.set_weight(8, 8, rho->inverse());
  net.set_weight(4, 3, one);
  net.set_weight(5, 4, one);
  net.set_weight(3, 5, one);
  net.set_weight(6, 5, one);
  net.set_weight(6, 8, one);
  net.set_weight(7, 3, one);
  net.set_weight(7, 6, minus1);
  net.set_weight(6, 0, minus1 - (p.beta - one) * p.threshold);
  for (NeuronId j : {3, 4, 5, 7}) net.set_weight(j, 0, minus1);
  if (p.threshold.sign() <= 0) net.init_active = std::vector<NeuronId>{3, 6};
  net.notes = {"cut acceptor beta=" + p.beta.str() + " c=" + p.threshold.str(),
               "1,2 inputs; 3 nxt; 3-4-5 clock; 6 comparator; 7 out; 8 analog"};
  return net;
}

const char* qp_kind_name(QpKind k) {
  switch (k) {
    case QpKind::QuasiPeriodicCertificate: return "QUASI-PERIODIC";
    case QpKind::NotQuasiPeriodicWitness: return "NOT-QUASI-PERIODIC";
    case QpKind::NoExpansion: return "NO-EXPANSION";
    case QpKind::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

namespace {

struct Window {
  Rational lo, hi;
  bool contains(const Rational& r) const { return lo <= r && r <= hi; }
};

Window window_of(const CutParams& p) {
  auto [mn, mx] = std::minmax_element(p.digits.begin(), p.digits.end());
  Rational v = nu(p);
  return {v * *mn, v * *mx};
}

// Every point of the window has a digit keeping the next remainder inside.
bool digits_cover(const CutParams& p) {
  std::vector<Rational> d(p.digits);
  std::sort(d.begin(), d.end());
  Rational span = nu(p) * (d.back() - d.front());
  for (std::size_t i = 0; i + 1 < d.size(); ++i)
    if (d[i + 1] - d[i] > span) return false;
  return true;
}

std::vector<BigInt> prime_factors(BigInt n) {
  std::vector<BigInt> f;
  for (BigInt q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      f.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) f.push_back(n);
  return f;
}

}  // namespace

std::optional<GrowthInvariant> find_growth_invariant(const CutParams& p) {
  if (p.threshold.is_zero()) return std::nullopt;
  for (const auto& q : prime_factors(p.beta.den())) {
    long v0 = valuation(p.threshold, q);
    if (v0 >= 0) continue;
    bool ok = true;
    for (const auto& x : p.digits)
      if (!x.is_zero() && valuation(x, q) < 0) ok = false;
    if (!ok) continue;
    GrowthInvariant g;
    g.prime = q;
    g.initial_valuation = v0;
    g.drop = -valuation(p.beta, q);
    std::ostringstream d;
    const std::string dn = g.drop == 1 ? "n" : std::to_string(g.drop) + "n";
    d << "v_" << q.get_str() << "(r_n) = " << v0 << " - " << dn << ": r_n = c_n/" << q.get_str() << "^(" << dn
      << "+" << -v0 << ") with " << q.get_str() << " not dividing c_n";
    g.description = d.str();
    return g;
  }
  return std::nullopt;
}

bool check_growth_step(const CutParams& p, const GrowthInvariant& g) {
  if (g.prime < 2 || g.drop <= 0 || g.initial_valuation >= 0) return false;
  if (valuation(p.beta, g.prime) != -g.drop) return false;
  if (p.threshold.is_zero() || valuation(p.threshold, g.prime) != g.initial_valuation) return false;
  // With v(r) = -e < 0: v(beta r) = -e - drop < 0 <= v(x), so v(beta r - x) = -e - drop.
  for (const auto& x : p.digits)
    if (!x.is_zero() && valuation(x, g.prime) < 0) return false;
  return true;
}

QpVerdict qp_explore(const CutParams& p, std::size_t depth) {
  check_params(p);
  if (depth < 1) throw ValidationError("depth must be at least 1");
  const Window w = window_of(p);
  QpVerdict v;
  v.invariant = find_growth_invariant(p);
  v.remainders.push_back(p.threshold);
  std::ostringstream head;
  head << "window [" << w.lo.str() << "," << w.hi.str() << "], r_0 = " << p.threshold.str();
  v.evidence.push_back(head.str());
  if (!w.contains(p.threshold)) {
    v.kind = QpKind::NoExpansion;
    v.evidence.push_back("r_0 lies outside the window");
    return v;
  }
  const std::size_t cap = 200000;
  std::map<Rational, std::size_t> id{{p.threshold, 0}};
  std::vector<std::vector<QpEdge>> out(1);
  std::vector<std::size_t> frontier{0};
  std::size_t level = 0;
  while (!frontier.empty() && level < depth && id.size() < cap) {
    std::vector<std::size_t> next;
    for (auto u : frontier) {
      for (const auto& x : p.digits) {
        Rational r = p.beta * v.remainders[u] - x;
        if (!w.contains(r)) continue;
        auto [it, fresh] = id.emplace(r, v.remainders.size());
        if (fresh) {
          v.remainders.push_back(r);
          out.emplace_back();
          next.push_back(it->second);
        }
        out[u].push_back({u, it->second, x});
      }
    }
    frontier = std::move(next);
    ++level;
  }
  v.depth = level;
  const bool closed = frontier.empty();
  if (closed) {
    const std::size_t n = v.remainders.size();
    std::vector<char> live(n, 1);
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t u = 0; u < n; ++u) {
        if (!live[u]) continue;
        bool any = std::any_of(out[u].begin(), out[u].end(), [&](const QpEdge& e) { return live[e.to]; });
        if (!any) { live[u] = 0; changed = true; }
      }
    }
    for (std::size_t u = 0; u < n; ++u)
      for (const auto& e : out[u]) v.edges.push_back(e);
    if (!live[0]) {
      v.kind = QpKind::NoExpansion;
      for (const auto& x : p.digits) {
        Rational r = p.beta * p.threshold - x;
        v.evidence.push_back("digit " + x.str() + ": r_1 = " + r.str() + (w.contains(r) ? " (dies later)" : " outside window"));
      }
      v.evidence.push_back("all " + std::to_string(n) + " reachable remainders die: no infinite expansion");
      if (v.invariant) v.evidence.push_back("growth invariant (auxiliary): " + v.invariant->description);
      return v;
    }
    v.kind = QpKind::QuasiPeriodicCertificate;
    v.evidence.push_back("closed remainder set of " + std::to_string(n) + " values; every infinite expansion revisits it");
    for (std::size_t u = 0; u < n; ++u)
      if (live[u]) v.evidence.push_back("live remainder " + v.remainders[u].str());
    return v;
  }
  if (v.invariant && digits_cover(p)) {
    v.kind = QpKind::NotQuasiPeriodicWitness;
    v.evidence.push_back("growth invariant: " + v.invariant->description);
    v.evidence.push_back("digits cover the window, so an infinite expansion exists");
    v.evidence.push_back("one-step check: v(beta) = -" + std::to_string(v.invariant->drop) +
                         " < 0 <= v(x) for every digit x, so the valuation strictly drops");
    return v;
  }
  v.kind = QpKind::Unknown;
  v.evidence.push_back("explored " + std::to_string(v.remainders.size()) + " remainders to depth " +
                       std::to_string(level) + " without closure");
  if (v.invariant) v.evidence.push_back("growth invariant holds but existence of an expansion is not established");
  return v;
}

bool replay(const CutParams& p, const QpVerdict& v) {
  const Window w = window_of(p);
  if (v.remainders.empty() || v.remainders[0] != p.threshold) return false;
  switch (v.kind) {
    case QpKind::Unknown: return true;
    case QpKind::NotQuasiPeriodicWitness:
      return v.invariant && check_growth_step(p, *v.invariant) && digits_cover(p) && w.contains(p.threshold);
    case QpKind::NoExpansion:
    case QpKind::QuasiPeriodicCertificate: {
      if (!w.contains(p.threshold)) return v.kind == QpKind::NoExpansion;
      std::map<Rational, std::size_t> id;
      for (std::size_t k = 0; k < v.remainders.size(); ++k) id[v.remainders[k]] = k;
      // Closure: every in-window successor of a listed remainder is listed.
      std::vector<std::vector<std::size_t>> succ(v.remainders.size());
      for (std::size_t u = 0; u < v.remainders.size(); ++u)
        for (const auto& x : p.digits) {
          Rational r = p.beta * v.remainders[u] - x;
          if (!w.contains(r)) continue;
          auto it = id.find(r);
          if (it == id.end()) return false;
          succ[u].push_back(it->second);
        }
      // A cycle reachable from r_0 exists iff some infinite expansion exists.
      std::vector<int> color(v.remainders.size(), 0);
      bool cycle = false;
      std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};
      color[0] = 1;
      while (!stack.empty() && !cycle) {
        auto& [u, k] = stack.back();
        if (k == succ[u].size()) {
          color[u] = 2;
          stack.pop_back();
          continue;
        }
        std::size_t nx = succ[u][k++];
        if (color[nx] == 1) cycle = true;
        else if (color[nx] == 0) {
          color[nx] = 1;
          stack.push_back({nx, 0});
        }
      }
      return v.kind == QpKind::QuasiPeriodicCertificate ? cycle : !cycle;
    }
  }
  return false;
}

std::string render(const QpVerdict& v) {
  std::string s = qp_kind_name(v.kind);
  s += "\n";
  for (const auto& e : v.evidence) s += "  " + e + "\n";
  return s;
}

}  // namespace annlab
