#pragma once

#include <optional>
#include <string>
#include <vector>

#include "annlab/alphabet.hpp"
#include "annlab/network.hpp"

namespace annlab {

struct CutParams {
  Rational beta;
  Rational threshold;
  std::vector<Rational> digits{Rational(0), Rational(1)};
};

Rational nu(const CutParams& p);
// Sum x_k beta^-k; reversed reads the word back to front.
Rational beta_value(const Word& word, const CutParams& p, bool reversed);
bool cut_member(const Word& word, const CutParams& p, bool reversed);

std::optional<Rational> rational_cube_root(const Rational& x);
Network build_cut_acceptor(const CutParams& p);

enum class QpKind { QuasiPeriodicCertificate, NotQuasiPeriodicWitness, NoExpansion, Unknown };
const char* qp_kind_name(QpKind k);

// v_p(r_n) = v_p(r_0) - n * drop for every digit path.
struct GrowthInvariant {
  BigInt prime;
  long initial_valuation = 0;
  long drop = 0;
  std::string description;
};

struct QpEdge {
  std::size_t from, to;
  Rational digit;
};

struct QpVerdict {
  QpKind kind = QpKind::Unknown;
  std::vector<Rational> remainders;  // explored states; [0] = r_0
  std::vector<QpEdge> edges;         // live edges of a closed graph
  std::optional<GrowthInvariant> invariant;
  std::size_t depth = 0;
  std::vector<std::string> evidence;
};

QpVerdict qp_explore(const CutParams& p, std::size_t depth);
// Independent re-check of the verdict's evidence.
bool replay(const CutParams& p, const QpVerdict& v);
std::optional<GrowthInvariant> find_growth_invariant(const CutParams& p);
// Symbolic one-step preservation: v_p(beta) < 0 and v_p(x) >= 0 for all digits.
bool check_growth_step(const CutParams& p, const GrowthInvariant& g);
std::string render(const QpVerdict& v);

}  // namespace annlab
