#include <doctest.h>

#include <random>

#include "dqc1/parser.hpp"
#include "helpers.hpp"

using namespace dqc1;
using namespace dqc1::testing;

TEST_CASE("parses the basic forms") {
  const char* src =
      "width 3\n"
      "inputs 2\n"
      "# a comment line\n"
      "H 1   # trailing comment\n"
      "cx 1 2\n"
      "ctrl-h 2 1\n"
      "if 1 { t 3; ccx 1 2 3 }\n"
      "pair 2 { } { z 1 }\n";
  const Circuit c = parse(src);
  CHECK(c.width == 3);
  CHECK(c.input_len == 2);
  REQUIRE(c.instructions.size() == 5);
  CHECK(c.instructions[0] == Instruction::always({Gate::h(1)}));
  CHECK(c.instructions[1] == Instruction::always({Gate::cx(1, 2)}));
  CHECK(c.instructions[2] ==
        Instruction::always({Gate::h(1).controlled(2)}));
  CHECK(c.instructions[3] ==
        Instruction::if_bit(1, {Gate::t(3), Gate::ccx(1, 2, 3)}));
  CHECK(c.instructions[4] == Instruction::pair(2, {}, {Gate::z(1)}));
}

TEST_CASE("gate names are case-insensitive") {
  const Circuit a = parse("width 2\ninputs 0\nCX 1 2\nSdG 1\n");
  const Circuit b = parse("width 2\ninputs 0\ncx 1 2\nsdg 1\n");
  CHECK(a == b);
}

TEST_CASE("error positions and kinds") {
  auto expect = [](const char* src, SourceErrorKind kind, int line) {
    try {
      parse(src);
      FAIL_CHECK("no error for: " << src);
    } catch (const SourceError& e) {
      CHECK(e.kind == kind);
      CHECK(e.line == line);
      CHECK(e.column >= 1);
    }
  };
  expect("inputs 0\n", SourceErrorKind::Syntax, 1);
  expect("width 2\n", SourceErrorKind::Syntax, 2);
  expect("width 0\ninputs 0\n", SourceErrorKind::Syntax, 1);
  expect("width 2\ninputs 0\nfrobnicate 1\n", SourceErrorKind::UnknownGate, 3);
  expect("width 2\ninputs 0\nh 3\n", SourceErrorKind::QubitOutOfRange, 3);
  expect("width 2\ninputs 1\nif 2 { h 1 }\n", SourceErrorKind::BitOutOfRange,
         3);
  expect("width 2\ninputs 0\ncx 1 1\n", SourceErrorKind::DuplicateQubit, 3);
  expect("width 2\ninputs 0\ncx 1\n", SourceErrorKind::ArityMismatch, 3);
  expect("width 2\ninputs 0\nh 1 2\n", SourceErrorKind::ArityMismatch, 3);
  expect("width 2\ninputs 1\npair 1 { h 1 }\n", SourceErrorKind::Syntax, 3);
  expect("width 2\ninputs 0\n$\n", SourceErrorKind::Syntax, 3);
  expect("width 2\ninputs 0\nctrl-ctrl-ctrl-x 1 2\n",
         SourceErrorKind::ArityMismatch, 3);
}

TEST_CASE("column points at the offending token") {
  try {
    parse("width 2\ninputs 0\nh 9\n");
    FAIL_CHECK("expected an error");
  } catch (const SourceError& e) {
    CHECK(e.line == 3);
    CHECK(e.column == 3);
  }
}

TEST_CASE("print then parse is the identity on parsed circuits") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const Circuit c = random_circuit(4, 2, 20, Alphabet::CliffordT, rng());
    const Circuit back = parse(print_circuit(c));
    CHECK(back == c);
    // Canonical form is a fixed point of another round trip.
    CHECK(print_circuit(parse(print_circuit(back))) == print_circuit(back));
  }
}

TEST_CASE("multi-gate groups round-trip to the same resolved semantics") {
  Circuit c{2, 0, {Instruction::always({Gate::h(1), Gate::cx(1, 2)})}};
  const Circuit back = parse(print_circuit(c));
  CHECK(resolve(back, "") == resolve(c, ""));
}

TEST_CASE("fuzz inputs never crash") {
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<int> len(0, 60);
  const std::string charset =
      "whxyzstcip 0123456789{};#\n\t-ifpair";
  std::uniform_int_distribution<std::size_t> pick(0, charset.size() - 1);
  int parsed = 0;
  for (int i = 0; i < 5000; ++i) {
    std::string s = "width 3\ninputs 1\n";
    const int n = len(rng);
    for (int k = 0; k < n; ++k) s += charset[pick(rng)];
    try {
      parse(s);
      ++parsed;
    } catch (const SourceError&) {
    }
  }
  CHECK(parsed >= 1);  // the empty suffix alone must parse
}

TEST_CASE("random_circuit and random_input are seed-deterministic") {
  const Circuit a = random_circuit(5, 3, 40, Alphabet::Clifford, 99);
  const Circuit b = random_circuit(5, 3, 40, Alphabet::Clifford, 99);
  const Circuit c = random_circuit(5, 3, 40, Alphabet::Clifford, 100);
  CHECK(a == b);
  CHECK(a != c);
  CHECK_NOTHROW(a.validate());
  CHECK(random_input(16, 7) == random_input(16, 7));

  const Circuit cnot = random_circuit(4, 0, 30, Alphabet::CnotOnly, 5);
  for (const auto& ins : cnot.instructions) {
    for (const auto& g : ins.gates) {
      CHECK(g.base == GateKind::X);
      CHECK(g.controls.size() == 1);
    }
  }
}
