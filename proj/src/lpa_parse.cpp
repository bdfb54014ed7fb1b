/*
 *   Copyright 2026 The leavitt-tower authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Expression syntax for LpaElem:
//
//   sum     := ['+'|'-'] product { ('+'|'-') product }
//   product := power { ['.'|'*'] power }
//   power   := postfix [ '^' integer ]
//   postfix := atom { '*' }
//   atom    := integer ['/' integer] | name | 't+' | 't-' | '(' sum ')'
//
// A '*' immediately followed by the start of an operand multiplies; any
// other '*' is the adjoint. Names are vertex or edge ids, optionally in
// backquotes. 't+' and 't-' are available unless the graph names something
// 't'.

#include <cctype>

#include "leavitt/error.hpp"
#include "leavitt/lpa.hpp"

namespace leavitt {

  namespace {
    class Parser {
     public:
      Parser(std::shared_ptr<Graph const> g, std::string_view text)
          : _g(std::move(g)), _s(text) {
        _t_reserved = !_g->find_vertex("t") && !_g->find_edge("t");
      }

      LpaElem parse() {
        LpaElem x = sum();
        skip_ws();
        if (_pos != _s.size()) {
          fail("unexpected '" + std::string(1, _s[_pos]) + "'");
        }
        return x;
      }

     private:
      [[noreturn]] void fail(std::string const& msg) const {
        throw_input("expression, column " + std::to_string(_pos + 1) + ": " + msg);
      }

      void skip_ws() {
        while (_pos < _s.size() && std::isspace(static_cast<unsigned char>(_s[_pos]))) {
          ++_pos;
        }
      }

      char peek() {
        skip_ws();
        return _pos < _s.size() ? _s[_pos] : '\0';
      }

      static bool name_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
      }

      bool operand_start(std::size_t at) const {
        if (at >= _s.size()) {
          return false;
        }
        char const c = _s[at];
        return name_char(c) || c == '(' || c == '`';
      }

      LpaElem sum() {
        LpaElem out(_g);
        bool    neg = false;
        if (peek() == '+' || peek() == '-') {
          neg = _s[_pos++] == '-';
        }
        out = neg ? -product() : product();
        while (peek() == '+' || peek() == '-') {
          bool const minus = _s[_pos++] == '-';
          LpaElem    y     = product();
          out              = minus ? out - y : out + y;
        }
        return out;
      }

      LpaElem product() {
        LpaElem out = power();
        while (true) {
          char const c = peek();
          if (c == '.') {
            ++_pos;
            out = multiply(out, power());
          } else if (c == '*' && operand_start(_pos + 1)) {
            ++_pos;
            out = multiply(out, power());
          } else if (operand_start(_pos)) {
            out = multiply(out, power());
          } else {
            return out;
          }
        }
      }

      LpaElem power() {
        LpaElem x = postfix();
        if (peek() == '^') {
          ++_pos;
          skip_ws();
          std::size_t const start = _pos;
          while (_pos < _s.size() && std::isdigit(static_cast<unsigned char>(_s[_pos]))) {
            ++_pos;
          }
          if (start == _pos) {
            fail("expected an exponent");
          }
          unsigned long const n = std::stoul(std::string(_s.substr(start, _pos - start)));
          if (n > 64) {
            fail("exponent too large");
          }
          x = leavitt::power(x, static_cast<unsigned>(n));
        }
        return x;
      }

      LpaElem postfix() {
        LpaElem x = atom();
        while (peek() == '*' && !operand_start(_pos + 1)) {
          ++_pos;
          x = star(x);
        }
        return x;
      }

      LpaElem atom() {
        char const c = peek();
        if (c == '(') {
          ++_pos;
          LpaElem x = sum();
          if (peek() != ')') {
            fail("expected ')'");
          }
          ++_pos;
          return x;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
          return number();
        }
        if (c == '`') {
          std::size_t const end = _s.find('`', _pos + 1);
          if (end == std::string_view::npos) {
            fail("unterminated quoted name");
          }
          std::string const name(_s.substr(_pos + 1, end - _pos - 1));
          _pos = end + 1;
          return resolve(name);
        }
        if (name_char(c)) {
          std::size_t const start = _pos;
          while (_pos < _s.size() && name_char(_s[_pos])) {
            ++_pos;
          }
          std::string const name(_s.substr(start, _pos - start));
          if (_t_reserved && name == "t" && _pos < _s.size()
              && (_s[_pos] == '+' || _s[_pos] == '-')) {
            bool const plus = _s[_pos++] == '+';
            return plus ? t_plus(_g) : t_minus(_g);
          }
          return resolve(name);
        }
        fail(c ? "unexpected '" + std::string(1, c) + "'" : "unexpected end of input");
      }

      LpaElem number() {
        auto digits = [&]() {
          std::size_t const start = _pos;
          while (_pos < _s.size() && std::isdigit(static_cast<unsigned char>(_s[_pos]))) {
            ++_pos;
          }
          return std::string(_s.substr(start, _pos - start));
        };
        Integer const num(digits());
        Integer       den(1);
        if (_pos < _s.size() && _s[_pos] == '/') {
          ++_pos;
          std::string const d = digits();
          if (d.empty()) {
            fail("expected a denominator");
          }
          den = Integer(d);
          if (den == 0) {
            fail("zero denominator");
          }
        }
        Rational q(num, den);
        q.canonicalize();
        return LpaElem::scalar(_g, q);
      }

      LpaElem resolve(std::string const& name) {
        if (auto v = _g->find_vertex(name)) {
          return LpaElem::vertex(_g, *v);
        }
        if (auto e = _g->find_edge(name)) {
          return LpaElem::edge(_g, *e);
        }
        fail("unknown name '" + name + "'");
      }

      std::shared_ptr<Graph const> _g;
      std::string_view             _s;
      std::size_t                  _pos = 0;
      bool                         _t_reserved;
    };
  }  // namespace

  LpaElem parse_lpa(std::shared_ptr<Graph const> g, std::string_view text) {
    return Parser(std::move(g), text).parse();
  }

}  // namespace leavitt
