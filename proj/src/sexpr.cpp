// Copyright 2026 The LawSeeker Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lawseeker/sexpr.hpp"

#include <cctype>

namespace lawseeker {

std::string_view SExpr::head() const {
  if (kind != Kind::List || items.empty() || !items.front().is_symbol()) return {};
  return items.front().text;
}

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::vector<SExpr> read_all() {
    std::vector<SExpr> out;
    skip_space();
    while (pos_ < text_.size()) {
      out.push_back(read());
      skip_space();
    }
    return out;
  }

 private:
  SourceSpan here() const { return SourceSpan{pos_, pos_, line_, column_}; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  static bool is_delimiter(char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '"' || c == ';';
  }

  SExpr read() {
    SExpr e;
    e.span = here();
    char c = text_[pos_];
    if (c == ')') {
      throw ParseError(e.span, "expression", "unexpected ')'");
    }
    if (c == '(') {
      advance();
      e.kind = SExpr::Kind::List;
      for (;;) {
        skip_space();
        if (pos_ >= text_.size()) {
          throw ParseError(here(), "')'", "unterminated list opened at line " +
                                              std::to_string(e.span.line) + ", column " +
                                              std::to_string(e.span.column));
        }
        if (text_[pos_] == ')') {
          advance();
          break;
        }
        e.items.push_back(read());
      }
    } else if (c == '"') {
      advance();
      e.kind = SExpr::Kind::String;
      for (;;) {
        if (pos_ >= text_.size()) throw ParseError(here(), "'\"'", "unterminated string literal");
        char d = text_[pos_];
        if (d == '"') {
          advance();
          break;
        }
        if (d == '\\' && pos_ + 1 < text_.size()) {
          advance();
          d = text_[pos_];
          if (d == 'n') d = '\n';
        }
        e.text += d;
        advance();
      }
    } else {
      while (pos_ < text_.size() && !is_delimiter(text_[pos_])) {
        e.text += text_[pos_];
        advance();
      }
      std::size_t digits_from = (e.text.size() > 1 && e.text[0] == '-') ? 1 : 0;
      bool numeric = e.text.size() > digits_from;
      for (std::size_t i = digits_from; i < e.text.size(); ++i) {
        numeric = numeric && std::isdigit(static_cast<unsigned char>(e.text[i]));
      }
      e.kind = numeric ? SExpr::Kind::Integer : SExpr::Kind::Symbol;
    }
    e.span.end = pos_;
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::uint32_t line_ = 1;
  std::uint32_t column_ = 1;
};

void print_into(const SExpr& e, std::string& out) {
  switch (e.kind) {
    case SExpr::Kind::List:
      out += '(';
      for (std::size_t i = 0; i < e.items.size(); ++i) {
        if (i > 0) out += ' ';
        print_into(e.items[i], out);
      }
      out += ')';
      break;
    case SExpr::Kind::String:
      out += '"';
      for (char c : e.text) {
        if (c == '"' || c == '\\') out += '\\';
        if (c == '\n') {
          out += "\\n";
          continue;
        }
        out += c;
      }
      out += '"';
      break;
    default:
      out += e.text;
  }
}

}  // namespace

std::vector<SExpr> parse_sexprs(std::string_view text) { return Reader(text).read_all(); }

std::string print_sexpr(const SExpr& e) {
  std::string out;
  print_into(e, out);
  return out;
}

}  // namespace lawseeker
