#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "dqc1/circuit.hpp"

namespace dqc1 {

enum class SourceErrorKind {
  Syntax,
  UnknownGate,
  QubitOutOfRange,
  BitOutOfRange,
  DuplicateQubit,
  ArityMismatch,
};

std::string to_string(SourceErrorKind k);

/// Parse failure with a position into the offending source.
struct SourceError : Error {
  SourceError(int line, int column, SourceErrorKind kind,
              const std::string& message);

  int line;
  int column;
  SourceErrorKind kind;
};

/// Parse the circuit DSL:
///
///   width 2
///   inputs 1
///   # gates, one statement per line
///   cx 1 2
///   if 1 { h 1; t 2 }
///   pair 1 { } { z 1 }
Circuit parse(std::string_view text);

/// Canonical text form; parse(print_circuit(c)) structurally equals c.
std::string print_circuit(const Circuit& c);

enum class Alphabet { Clifford, CliffordT, CnotOnly };

/// Seed-deterministic random circuit with `depth` instructions.  When
/// input_len > 0 a random mix of plain, if- and pair-selected instructions
/// is produced.
Circuit random_circuit(int width, int input_len, int depth, Alphabet alphabet,
                       std::uint64_t seed);

std::string random_input(int input_len, std::uint64_t seed);

}  // namespace dqc1
