#include "dqc1/parser.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>
#include <sstream>

namespace dqc1 {

std::string to_string(SourceErrorKind k) {
  switch (k) {
    case SourceErrorKind::Syntax: return "syntax";
    case SourceErrorKind::UnknownGate: return "unknown gate";
    case SourceErrorKind::QubitOutOfRange: return "qubit out of range";
    case SourceErrorKind::BitOutOfRange: return "bit out of range";
    case SourceErrorKind::DuplicateQubit: return "duplicate qubit";
    case SourceErrorKind::ArityMismatch: return "arity mismatch";
  }
  return "?";
}

SourceError::SourceError(int line, int column, SourceErrorKind kind,
                         const std::string& message)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
            to_string(kind) + ": " + message),
      line(line),
      column(column),
      kind(kind) {}

namespace {

struct Token {
  enum class Type { Name, Int, LBrace, RBrace, Semi, Newline, End };
  Type type;
  std::string text;
  long value = 0;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size()) {
      char ch = text_[pos_];
      if (ch == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
        continue;
      }
      if (ch == ' ' || ch == '\t' || ch == '\r') {
        advance();
        continue;
      }
      break;
    }
    if (pos_ >= text_.size()) return {Token::Type::End, "", 0, line_, col_};
    const int line = line_, col = col_;
    char ch = text_[pos_];
    if (ch == '\n') {
      advance();
      return {Token::Type::Newline, "\n", 0, line, col};
    }
    if (ch == '{') {
      advance();
      return {Token::Type::LBrace, "{", 0, line, col};
    }
    if (ch == '}') {
      advance();
      return {Token::Type::RBrace, "}", 0, line, col};
    }
    if (ch == ';') {
      advance();
      return {Token::Type::Semi, ";", 0, line, col};
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string num;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        num += text_[pos_];
        advance();
      }
      long value;
      try {
        value = std::stol(num);
      } catch (const std::out_of_range&) {
        throw SourceError(line, col, SourceErrorKind::Syntax,
                          "integer too large: " + num);
      }
      return {Token::Type::Int, num, value, line, col};
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '-')) {
        name += static_cast<char>(
            std::tolower(static_cast<unsigned char>(text_[pos_])));
        advance();
      }
      return {Token::Type::Name, name, 0, line, col};
    }
    throw SourceError(line, col, SourceErrorKind::Syntax,
                      std::string("unexpected character '") + ch + "'");
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

struct GateSpec {
  GateKind base;
  int extra_controls;
};

bool lookup_base(const std::string& name, GateSpec& spec) {
  static const std::map<std::string, GateSpec> table = {
      {"i", {GateKind::I, 0}},       {"h", {GateKind::H, 0}},
      {"x", {GateKind::X, 0}},       {"y", {GateKind::Y, 0}},
      {"z", {GateKind::Z, 0}},       {"s", {GateKind::S, 0}},
      {"sdg", {GateKind::Sdg, 0}},   {"t", {GateKind::T, 0}},
      {"tdg", {GateKind::Tdg, 0}},   {"cx", {GateKind::X, 1}},
      {"cz", {GateKind::Z, 1}},      {"swap", {GateKind::Swap, 0}},
      {"ccx", {GateKind::X, 2}},
  };
  auto it = table.find(name);
  if (it == table.end()) return false;
  spec = it->second;
  return true;
}

bool lookup_gate(std::string name, GateSpec& spec) {
  int wraps = 0;
  while (name.starts_with("ctrl-")) {
    ++wraps;
    name = name.substr(5);
  }
  if (!lookup_base(name, spec)) return false;
  spec.extra_controls += wraps;
  return true;
}

class Parser {
 public:
  Parser(std::string_view text) : lexer_(text) { shift(); }

  Circuit run() {
    Circuit c;
    c.width = int(header_int("width"));
    expect_newline();
    c.input_len = int(header_int("inputs"));
    if (tok_.type != Token::Type::End) expect_newline();

    while (true) {
      skip_newlines();
      if (tok_.type == Token::Type::End) break;
      c.instructions.push_back(statement(c));
    }
    return c;
  }

 private:
  long header_int(const std::string& keyword) {
    skip_newlines();
    if (tok_.type != Token::Type::Name || tok_.text != keyword) {
      fail(SourceErrorKind::Syntax, "expected '" + keyword + "'");
    }
    shift();
    if (tok_.type != Token::Type::Int) {
      fail(SourceErrorKind::Syntax, "expected integer after '" + keyword + "'");
    }
    long v = tok_.value;
    if (keyword == "width" && v < 1) {
      fail(SourceErrorKind::Syntax, "width must be positive");
    }
    if (keyword == "width" && v > 63) {
      fail(SourceErrorKind::Syntax, "width exceeds 63");
    }
    if (v > 1'000'000) {
      fail(SourceErrorKind::Syntax, "value too large");
    }
    shift();
    return v;
  }

  Instruction statement(const Circuit& c) {
    if (tok_.type != Token::Type::Name) {
      fail(SourceErrorKind::Syntax, "expected a statement");
    }
    if (tok_.text == "if") {
      shift();
      int bit = selector_bit(c);
      return Instruction::if_bit(bit, block(c));
    }
    if (tok_.text == "pair") {
      shift();
      int bit = selector_bit(c);
      auto zero = block(c);
      auto one = block(c);
      return Instruction::pair(bit, std::move(zero), std::move(one));
    }
    Gate g = gate(c);
    return Instruction::always({std::move(g)});
  }

  int selector_bit(const Circuit& c) {
    if (tok_.type != Token::Type::Int) {
      fail(SourceErrorKind::Syntax, "expected input-bit index");
    }
    long bit = tok_.value;
    if (bit < 1 || bit > c.input_len) {
      fail(SourceErrorKind::BitOutOfRange,
           "bit " + std::to_string(bit) + " with input arity " +
               std::to_string(c.input_len));
    }
    shift();
    return int(bit);
  }

  std::vector<Gate> block(const Circuit& c) {
    if (tok_.type != Token::Type::LBrace) {
      fail(SourceErrorKind::Syntax, "expected '{'");
    }
    shift();
    std::vector<Gate> gates;
    if (tok_.type != Token::Type::RBrace) {
      gates.push_back(gate(c));
      while (tok_.type == Token::Type::Semi) {
        shift();
        gates.push_back(gate(c));
      }
    }
    if (tok_.type != Token::Type::RBrace) {
      fail(SourceErrorKind::Syntax, "expected '}'");
    }
    shift();
    return gates;
  }

  Gate gate(const Circuit& c) {
    if (tok_.type != Token::Type::Name) {
      fail(SourceErrorKind::Syntax, "expected a gate name");
    }
    const Token name_tok = tok_;
    GateSpec spec{};
    if (!lookup_gate(tok_.text, spec)) {
      fail(SourceErrorKind::UnknownGate, "'" + tok_.text + "'");
    }
    if (spec.extra_controls > 2) {
      fail(SourceErrorKind::ArityMismatch,
           "control nesting deeper than 2 in '" + tok_.text + "'");
    }
    shift();
    std::vector<int> qubits;
    while (tok_.type == Token::Type::Int) {
      long q = tok_.value;
      if (q < 1 || q > c.width) {
        fail(SourceErrorKind::QubitOutOfRange,
             "qubit " + std::to_string(q) + " with width " +
                 std::to_string(c.width));
      }
      qubits.push_back(int(q));
      shift();
    }
    const int want =
        spec.extra_controls + (spec.base == GateKind::Swap ? 2 : 1);
    if (int(qubits.size()) != want) {
      throw SourceError(name_tok.line, name_tok.column,
                        SourceErrorKind::ArityMismatch,
                        "'" + name_tok.text + "' wants " +
                            std::to_string(want) + " qubits, got " +
                            std::to_string(qubits.size()));
    }
    std::set<int> seen(qubits.begin(), qubits.end());
    if (seen.size() != qubits.size()) {
      throw SourceError(name_tok.line, name_tok.column,
                        SourceErrorKind::DuplicateQubit,
                        "repeated qubit in '" + name_tok.text + "'");
    }
    Gate g;
    g.base = spec.base;
    g.controls.assign(qubits.begin(), qubits.begin() + spec.extra_controls);
    g.targets.assign(qubits.begin() + spec.extra_controls, qubits.end());
    return g;
  }

  void expect_newline() {
    if (tok_.type == Token::Type::Newline) {
      shift();
      return;
    }
    if (tok_.type == Token::Type::End) return;
    fail(SourceErrorKind::Syntax, "expected end of line");
  }

  void skip_newlines() {
    while (tok_.type == Token::Type::Newline) shift();
  }

  [[noreturn]] void fail(SourceErrorKind kind, const std::string& msg) {
    throw SourceError(tok_.line, tok_.column, kind, msg);
  }

  void shift() { tok_ = lexer_.next(); }

  Lexer lexer_;
  Token tok_{Token::Type::End, "", 0, 1, 1};
};

void print_gate(std::ostream& os, const Gate& g) {
  os << g.name();
  for (int q : g.qubits()) os << " " << q;
}

void print_block(std::ostream& os, const std::vector<Gate>& gates) {
  os << "{";
  for (std::size_t i = 0; i < gates.size(); ++i) {
    os << (i == 0 ? " " : "; ");
    print_gate(os, gates[i]);
  }
  os << (gates.empty() ? "}" : " }");
}

}  // namespace

Circuit parse(std::string_view text) {
  Circuit c = Parser(text).run();
  // Grammar checks cover everything structural; this is a backstop.
  c.validate();
  return c;
}

std::string print_circuit(const Circuit& c) {
  std::ostringstream os;
  os << "width " << c.width << "\n";
  os << "inputs " << c.input_len << "\n";
  for (const auto& ins : c.instructions) {
    switch (ins.kind) {
      case Instruction::Kind::Always:
        // One gate per line in canonical form.
        for (const auto& g : ins.gates) {
          print_gate(os, g);
          os << "\n";
        }
        break;
      case Instruction::Kind::IfBit:
        os << "if " << ins.bit << " ";
        print_block(os, ins.gates);
        os << "\n";
        break;
      case Instruction::Kind::Pair:
        os << "pair " << ins.bit << " ";
        print_block(os, ins.branch_zero);
        os << " ";
        print_block(os, ins.branch_one);
        os << "\n";
        break;
    }
  }
  return os.str();
}

namespace {

Gate random_gate(int width, Alphabet alphabet, std::mt19937_64& rng) {
  auto qubit = [&](int except = 0) {
    std::uniform_int_distribution<int> d(1, width);
    int q = d(rng);
    while (q == except) q = d(rng);
    return q;
  };
  if (alphabet == Alphabet::CnotOnly) {
    int c = qubit();
    return Gate::cx(c, qubit(c));
  }
  const bool two_qubit_ok = width >= 2;
  const int one_q_kinds = alphabet == Alphabet::CliffordT ? 8 : 6;
  const int total = one_q_kinds + (two_qubit_ok ? 3 : 0);
  std::uniform_int_distribution<int> pick(0, total - 1);
  int k = pick(rng);
  switch (k) {
    case 0: return Gate::h(qubit());
    case 1: return Gate::x(qubit());
    case 2: return Gate::y(qubit());
    case 3: return Gate::z(qubit());
    case 4: return Gate::s(qubit());
    case 5: return Gate::sdg(qubit());
    case 6:
      if (alphabet == Alphabet::CliffordT) return Gate::t(qubit());
      break;
    case 7:
      if (alphabet == Alphabet::CliffordT) return Gate::tdg(qubit());
      break;
    default: break;
  }
  int c = qubit();
  int t = qubit(c);
  switch (k - one_q_kinds) {
    case 0: return Gate::cx(c, t);
    case 1: return Gate::cz(c, t);
    default: return Gate::swap(c, t);
  }
}

}  // namespace

Circuit random_circuit(int width, int input_len, int depth, Alphabet alphabet,
                       std::uint64_t seed) {
  if (width < 1 || depth < 0 || input_len < 0) {
    throw Error("random_circuit sizes must be non-negative (width positive)");
  }
  if (alphabet == Alphabet::CnotOnly && width < 2) {
    throw Error("cnot-only circuits need width >= 2");
  }
  std::mt19937_64 rng(seed);
  Circuit c;
  c.width = width;
  c.input_len = input_len;
  std::uniform_int_distribution<int> selector(0, 3);
  std::uniform_int_distribution<int> branch_len(0, 2);
  auto bit = [&] {
    return std::uniform_int_distribution<int>(1, input_len)(rng);
  };
  auto gates = [&](int n) {
    std::vector<Gate> gs;
    for (int i = 0; i < n; ++i) gs.push_back(random_gate(width, alphabet, rng));
    return gs;
  };
  for (int i = 0; i < depth; ++i) {
    if (input_len == 0) {
      c.instructions.push_back(Instruction::always(gates(1)));
      continue;
    }
    switch (selector(rng)) {
      case 0:
      case 1:
        c.instructions.push_back(Instruction::always(gates(1)));
        break;
      case 2:
        c.instructions.push_back(Instruction::if_bit(bit(), gates(1)));
        break;
      default:
        c.instructions.push_back(
            Instruction::pair(bit(), gates(branch_len(rng)),
                              gates(branch_len(rng))));
        break;
    }
  }
  return c;
}

std::string random_input(int input_len, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> bit(0, 1);
  std::string s(std::size_t(input_len), '0');
  for (auto& ch : s) ch = bit(rng) ? '1' : '0';
  return s;
}

}  // namespace dqc1
