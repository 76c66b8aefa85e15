#include "tg/eval.hpp"

#include <stdexcept>

#include "tg/thompson_maps.hpp"

namespace tg {

namespace {

class ExprParser {
 public:
  ExprParser(SystemPtr sys, std::string_view text) : sys_(std::move(sys)), text_(text) {}

  EvalResult parse() {
    EvalResult v = cmp();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("parse error at position " + std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_).rfind(tok, 0) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  Element expect_element(EvalResult v, const char* what) {
    if (!std::holds_alternative<Element>(v)) fail(std::string(what) + " needs an element");
    return std::get<Element>(std::move(v));
  }

  EvalResult cmp() {
    EvalResult lhs = term();
    if (eat("==")) {
      EvalResult rhs = term();
      return equals(expect_element(std::move(lhs), "=="), expect_element(std::move(rhs), "=="));
    }
    return lhs;
  }

  EvalResult term() {
    EvalResult acc = factor();
    for (;;) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        acc = multiply(expect_element(std::move(acc), "*"), expect_element(factor(), "*"));
      } else {
        return acc;
      }
    }
  }

  EvalResult factor() {
    EvalResult acc = atom();
    while (eat("^")) {
      skip_ws();
      std::size_t start = pos_;
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an integer exponent");
      const int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
      acc = power(expect_element(std::move(acc), "^"), e);
    }
    return acc;
  }

  EvalResult atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (text_[pos_] == '[') {
      const std::size_t close = text_.find(']', pos_);
      if (close == std::string_view::npos) fail("unterminated element bracket");
      Element e = parse_element(sys_, text_.substr(pos_, close - pos_ + 1));
      pos_ = close + 1;
      return e;
    }
    if (text_[pos_] == '(') {
      ++pos_;
      EvalResult v = cmp();
      if (!eat(")")) fail("expected ')'");
      return v;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    if (name.empty()) fail("expected an element, constant, or function");
    if (name == "x0") return x0(sys_);
    if (name == "x1") return x1(sys_);
    if (name == "id") return Element::identity(sys_);
    if (!eat("(")) fail("expected '(' after " + name);
    EvalResult arg = cmp();
    if (!eat(")")) fail("expected ')'");
    if (name == "pi") return pi(expect_element(std::move(arg), "pi"));
    if (name == "theta") return theta(expect_element(std::move(arg), "theta"));
    if (name == "reduce") return expect_element(std::move(arg), "reduce");  // stored reduced
    if (name == "inv") return invert(expect_element(std::move(arg), "inv"));
    fail("unknown function: " + name);
  }

  SystemPtr sys_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

EvalResult eval_expression(const SystemPtr& sys, std::string_view text) {
  return ExprParser(sys, text).parse();
}

std::string render(const EvalResult& value) {
  if (std::holds_alternative<bool>(value)) return std::get<bool>(value) ? "true" : "false";
  if (std::holds_alternative<int>(value)) return std::to_string(std::get<int>(value));
  return to_text(std::get<Element>(value));
}

}  // namespace tg
