#include "polarmap/parse.hpp"

#include <cctype>
#include <optional>
#include <sstream>

#include "polarmap/error.hpp"

namespace polarmap {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  TernaryForm parse() {
    skip_space();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    TernaryForm::Terms terms;
    std::optional<int> degree;
    bool first = true;
    while (true) {
      skip_space();
      if (at_end()) break;
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_space();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      auto [exponents, coefficient] = parse_term();
      if (negative) coefficient = -coefficient;
      const int term_degree = total_degree(exponents);
      if (!degree) {
        degree = term_degree;
      } else if (*degree != term_degree) {
        throw NonHomogeneousError(*degree, term_degree);
      }
      auto [it, inserted] = terms.try_emplace(exponents, coefficient);
      if (!inserted) it->second += coefficient;
      first = false;
    }
    return TernaryForm::from_terms(std::move(terms), *degree, Field::rationals());
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool at_variable() const {
    if (at_end()) return false;
    const char c = peek();
    return c == 'x' || c == 'y' || c == 'z';
  }

  bool at_digit() const { return !at_end() && std::isdigit(static_cast<unsigned char>(peek())); }

  std::string read_digits() {
    std::string digits;
    while (at_digit()) digits.push_back(text_[pos_++]);
    return digits;
  }

  std::pair<Exponents, Scalar> parse_term() {
    Scalar coefficient(1);
    Exponents exponents{0, 0, 0};
    bool have_coefficient = false;
    if (at_digit()) {
      std::string literal = read_digits();
      skip_space();
      if (!at_end() && peek() == '/') {
        const std::size_t slash = pos_++;
        skip_space();
        if (!at_digit()) throw ParseError("expected denominator", pos_);
        literal += "/" + read_digits();
        if (mpz_class(literal.substr(literal.find('/') + 1)) == 0) {
          throw ParseError("zero denominator", slash);
        }
      }
      coefficient = Scalar::parse(literal);
      have_coefficient = true;
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
        if (!at_variable()) throw ParseError("expected variable after '*'", pos_);
      }
    }
    if (!have_coefficient && !at_variable()) {
      throw ParseError(at_end() ? "unexpected end of input" : "unexpected character '" +
                                                                  std::string(1, peek()) + "'",
                       pos_);
    }
    while (at_variable()) {
      const int var = parse_variable();
      skip_space();
      int exponent = 1;
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_space();
        if (!at_digit()) throw ParseError("expected exponent", pos_);
        const std::string digits = read_digits();
        if (digits.size() > 6) throw ParseError("exponent too large", pos_);
        exponent = std::stoi(digits);
        skip_space();
      }
      exponents[var] += exponent;
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
        if (!at_variable()) throw ParseError("expected variable after '*'", pos_);
      }
    }
    return {exponents, coefficient};
  }

  int parse_variable() {
    const char c = text_[pos_++];
    if (c == 'y') return 1;
    if (c == 'z') return 2;
    if (!at_end() && (peek() == '0' || peek() == '1' || peek() == '2')) {
      const int index = peek() - '0';
      ++pos_;
      if (at_digit()) throw ParseError("unknown variable", pos_ - 2);
      return index;
    }
    if (at_digit()) throw ParseError("unknown variable", pos_ - 1);
    return 0;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

TernaryForm parse_form(std::string_view text) { return Parser(text).parse(); }

std::string strip_comments(std::string_view text) {
  std::string result;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    result += line;
    result += ' ';
  }
  return result;
}

}  // namespace polarmap
