#include <doctest.h>

#include <random>

#include "annlab/cut_language.hpp"
#include "annlab/error.hpp"
#include "annlab/network.hpp"
#include "support.hpp"

using namespace annlab;

TEST_CASE("saturated linear") {
  CHECK(saturate(Rational(-1, 2)) == Rational(0));
  CHECK(saturate(Rational(1, 3)) == Rational(1, 3));
  CHECK(saturate(Rational(7, 3)) == Rational(1));
}

TEST_CASE("heaviside at zero fires") {
  Network n(3);
  n.inputs = {1};
  n.nxt = 2;
  n.out = 2;
  Configuration c = n.initial_configuration();
  Configuration d = step(n, c, {0});
  CHECK(d.bit(2));
  n.set_weight(2, 0, Rational(-1, 100));
  CHECK_FALSE(step(n, c, {0}).bit(2));
  n.set_weight(2, 1, Rational(1, 100));
  CHECK(step(n, c, {1}).bit(2));
}

TEST_CASE("synchronous update uses the pre-state") {
  Network n(4);
  n.inputs = {1};
  n.nxt = 2;
  n.out = 3;
  n.set_weight(2, 0, Rational(-1));
  n.set_weight(2, 3, Rational(1));
  n.set_weight(3, 0, Rational(-1));
  n.set_weight(3, 2, Rational(1));
  n.set_weight(4, 4, Rational(2));
  Configuration c(n.initial_configuration());
  c.analog = Rational(1, 3);
  CHECK(c.bit(2));
  auto d = step(n, c, {0});
  CHECK_FALSE(d.bit(2));
  CHECK(d.bit(3));
  CHECK(d.analog == Rational(2, 3));
  auto e = step(n, d, {0});
  CHECK(e.bit(2));
  CHECK_FALSE(e.bit(3));
  CHECK(e.analog == Rational(1));
}

TEST_CASE("validation") {
  Network n(3);
  CHECK_FALSE(validate(n).empty());
  n.inputs = {1};
  n.nxt = 2;
  n.out = 2;
  CHECK(validate(n).empty());
  n.out = 3;
  CHECK_FALSE(validate(n).empty());
  CHECK_THROWS_AS(require_valid(n), ValidationError);
  n.out = 1;
  CHECK_FALSE(validate(n).empty());
  n.out = 2;
  n.delta = 0;
  CHECK_FALSE(validate(n).empty());
  n.delta = 1;
  n.init_analog = Rational(3, 2);
  CHECK_FALSE(validate(n).empty());
  n.init_analog = Rational(0);
  n.alphabet = {"a", "b"};
  CHECK_FALSE(validate(n).empty());
}

TEST_CASE("anet round trip") {
  auto cut = build_cut_acceptor({Rational(27, 8), Rational(1, 4)});
  std::string t = write_anet(cut);
  Network back = parse_anet(t);
  CHECK(write_anet(back) == t);
  CHECK(back.size() == 8);
  CHECK(back.weight(8, 8) == Rational(2, 3));
  CHECK(back.weight(8, 2) == Rational(19, 27));
  CHECK(back.weight(6, 0) == Rational(-51, 32));

  std::mt19937_64 g(7);
  for (int k = 0; k < 20; ++k) {
    auto r = oracle::random_network(g, 7, 2, 8, 0.5);
    r.alphabet = {"x", "yy"};
    r.init_active = std::vector<NeuronId>{};
    r.notes = {"random"};
    auto s = write_anet(r);
    CHECK(write_anet(parse_anet(s)) == s);
  }
}

TEST_CASE("anet parse errors carry the line") {
  CHECK_THROWS_AS(parse_anet("anet v2\n"), ParseError);
  try {
    parse_anet("anet v1\nsize 3\nanalog 3\ninputs 1\nnxt 2\nout 2\ndelta 1\noutdelay 0\nw 2 1 x\n");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 9") != std::string::npos);
  }
}
