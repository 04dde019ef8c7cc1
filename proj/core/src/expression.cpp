// framoid - exact computations in framed and tied diagram monoids

#include "framoid/expression.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <string>

#include "framoid/error.hpp"

namespace framoid {

  namespace {
    bool is_letter(char c) {
      return std::isalpha(static_cast<unsigned char>(c)) != 0;
    }
    bool is_digit(char c) {
      return std::isdigit(static_cast<unsigned char>(c)) != 0;
    }

    int to_int(std::string_view s, std::string_view context) {
      int value = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
      if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw InvalidSymbol("malformed integer in '" + std::string(context)
                            + "'");
      }
      return value;
    }

    // The scalar named by token, if it names one.
    std::optional<Coefficient> scalar(std::string_view token) {
      std::string_view name     = token;
      int              exponent = 1;
      if (auto hat = token.find('^'); hat != std::string_view::npos) {
        name     = token.substr(0, hat);
        exponent = to_int(token.substr(hat + 1), token);
      }
      std::optional<Var> var;
      if (name == "x") {
        var = Var::x_();
      } else if (name == "y") {
        var = Var::y_();
      } else if (name == "v") {
        var = Var::v_();
      } else if (name == "a") {
        var = Var::a_();
      } else if (name == "q") {
        var = Var::q_();
      } else {
        for (auto [prefix, kind] : {std::pair<std::string_view, Var::Kind>{"alpha", Var::alpha},
                                    {"y", Var::y}}) {
          if (name.size() > prefix.size() && name.substr(0, prefix.size()) == prefix
              && is_digit(name[prefix.size()])) {
            int k = to_int(name.substr(prefix.size()), token);
            if (k == 0) {
              return Coefficient(1);
            }
            var = Var{kind, k};
            break;
          }
        }
      }
      if (!var) {
        return std::nullopt;
      }
      return Coefficient(*var, exponent);
    }

    class Parser {
     public:
      Parser(std::string_view      text,
             AlgebraElement const& one,
             SymbolResolver const& resolve)
          : _text(text), _pos(0), _one(one), _resolve(resolve) {}

      AlgebraElement parse() {
        AlgebraElement result = expr();
        skip();
        if (_pos != _text.size()) {
          fail("unexpected '" + std::string(1, _text[_pos]) + "'");
        }
        return result;
      }

     private:
      [[noreturn]] void fail(std::string const& why) const {
        throw InvalidSymbol("cannot parse '" + std::string(_text) + "' at "
                            + std::to_string(_pos) + ": " + why);
      }

      void skip() {
        while (_pos < _text.size()
               && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      bool peek(char c) {
        skip();
        return _pos < _text.size() && _text[_pos] == c;
      }

      AlgebraElement expr() {
        bool negate = false;
        if (peek('-')) {
          ++_pos;
          negate = true;
        }
        AlgebraElement result = term();
        if (negate) {
          result *= Coefficient(-1);
        }
        while (peek('+') || peek('-')) {
          char op = _text[_pos++];
          if (op == '+') {
            result += term();
          } else {
            result -= term();
          }
        }
        return result;
      }

      bool factor_starts() {
        skip();
        if (_pos >= _text.size()) {
          return false;
        }
        char c = _text[_pos];
        return c == '(' || is_letter(c) || is_digit(c);
      }

      AlgebraElement term() {
        if (!factor_starts()) {
          fail("expected a factor");
        }
        AlgebraElement result = factor();
        while (true) {
          if (peek('*')) {
            ++_pos;
            result = result * factor();
          } else if (factor_starts()) {
            result = result * factor();
          } else {
            return result;
          }
        }
      }

      AlgebraElement factor() {
        skip();
        if (_pos >= _text.size()) {
          fail("expected a factor");
        }
        char c = _text[_pos];
        if (c == '(') {
          ++_pos;
          AlgebraElement inner = expr();
          if (!peek(')')) {
            fail("expected ')'");
          }
          ++_pos;
          return inner;
        }
        if (is_digit(c)) {
          std::size_t start = _pos;
          while (_pos < _text.size()
                 && (is_digit(_text[_pos]) || _text[_pos] == '/')) {
            ++_pos;
          }
          mpq_class value(std::string(_text.substr(start, _pos - start)));
          if (value.get_den() == 0) {
            fail("zero denominator");
          }
          value.canonicalize();
          return _one * Coefficient(value);
        }
        if (!is_letter(c)) {
          fail("expected a factor");
        }
        std::size_t start = _pos;
        while (_pos < _text.size()
               && (std::isalnum(static_cast<unsigned char>(_text[_pos]))
                   || _text[_pos] == ',' || _text[_pos] == ':')) {
          ++_pos;
        }
        if (_pos < _text.size() && _text[_pos] == '^') {
          ++_pos;
          if (_pos < _text.size() && _text[_pos] == '-') {
            ++_pos;
          }
          std::size_t digits = _pos;
          while (_pos < _text.size() && is_digit(_text[_pos])) {
            ++_pos;
          }
          if (digits == _pos) {
            fail("expected an exponent");
          }
        }
        std::string_view token = _text.substr(start, _pos - start);
        if (auto s = scalar(token)) {
          return _one * *s;
        }
        return _resolve(token);
      }

      std::string_view      _text;
      std::size_t           _pos;
      AlgebraElement const& _one;
      SymbolResolver const& _resolve;
    };
  }  // namespace

  AlgebraElement evaluate_expression(std::string_view      text,
                                     AlgebraElement const& one,
                                     SymbolResolver const& resolve) {
    return Parser(text, one, resolve).parse();
  }

  std::vector<AlgebraElement> evaluate_equation(std::string_view      text,
                                                AlgebraElement const& one,
                                                SymbolResolver const& resolve) {
    std::vector<AlgebraElement> sides;
    std::size_t                 start = 0;
    while (true) {
      std::size_t eq = text.find('=', start);
      sides.push_back(evaluate_expression(
          text.substr(start, eq == std::string_view::npos ? eq : eq - start),
          one,
          resolve));
      if (eq == std::string_view::npos) {
        return sides;
      }
      start = eq + 1;
    }
  }

  namespace {
    // Splits "3,4" or "3:1:2" into integers.
    std::vector<int> indices(std::string_view body, std::string_view token) {
      std::vector<int> out;
      std::size_t      start = 0;
      while (true) {
        std::size_t sep = body.find_first_of(",:", start);
        out.push_back(to_int(
            body.substr(start, sep == std::string_view::npos ? sep : sep - start),
            token));
        if (sep == std::string_view::npos) {
          return out;
        }
        start = sep + 1;
      }
    }
  }  // namespace

  SymbolResolver bridge_resolver(MonoidFamily const& fam, LoopPolicy policy) {
    return [fam, policy](std::string_view token) -> AlgebraElement {
      char const head = token.front();
      if (!std::isupper(static_cast<unsigned char>(head))) {
        return AlgebraElement::from_diagram(
            fam, policy, generator(fam, parse_symbol(token)));
      }
      auto idx = indices(token.substr(1), token);
      auto bad = [&token]() {
        return InvalidSymbol("malformed bridge token '" + std::string(token)
                             + "'");
      };
      switch (head) {
        case 'E':
          if (idx.size() == 1) {
            return bridge_e(fam, policy, idx[0], idx[0] + 1);
          } else if (idx.size() == 2) {
            return bridge_e(fam, policy, idx[0], idx[1]);
          }
          throw bad();
        case 'F':
          if (idx.size() == 1) {
            return bridge_f(fam, policy, idx[0]);
          }
          throw bad();
        case 'Q':
          if (idx.size() == 1) {
            return bridge_q(fam, policy, idx[0]);
          }
          throw bad();
        case 'W':
          if (idx.size() == 1) {
            return bridge_w(fam, policy, idx[0], idx[0], idx[0]);
          } else if (idx.size() == 3) {
            return bridge_w(fam, policy, idx[0], idx[1], idx[2]);
          }
          throw bad();
        case 'Z':
          if (idx.size() == 1) {
            return cap_z(fam, policy, idx[0]);
          }
          throw bad();
        default:
          throw bad();
      }
    };
  }

}  // namespace framoid
