#include "hornrev/parse.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace hornrev {

namespace {

enum class Tok {
  Ident,     // lowercase identifier
  Var,       // uppercase identifier
  LParen,
  RParen,
  Comma,
  Dot,
  If,        // :-
  Eq,        // =
  Neq,       // !=
  Section,   // %% name (text carries the name)
  End
};

struct Token {
  Tok kind;
  std::string text;
  int line;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  Token next() {
    skip_space_and_comments();
    if (pending_section_) {
      pending_section_ = false;
      return {Tok::Section, section_name_, line_};
    }
    if (pos_ >= s_.size()) return {Tok::End, "", line_};
    char c = s_[pos_];
    int line = line_;
    switch (c) {
      case '(':
        ++pos_;
        return {Tok::LParen, "(", line};
      case ')':
        ++pos_;
        return {Tok::RParen, ")", line};
      case ',':
        ++pos_;
        return {Tok::Comma, ",", line};
      case '.':
        ++pos_;
        return {Tok::Dot, ".", line};
      case ':':
        if (pos_ + 1 < s_.size() && s_[pos_ + 1] == '-') {
          pos_ += 2;
          return {Tok::If, ":-", line};
        }
        throw ParseError("expected ':-'", line);
      case '=':
        ++pos_;
        return {Tok::Eq, "=", line};
      case '!':
        if (pos_ + 1 < s_.size() && s_[pos_ + 1] == '=') {
          pos_ += 2;
          return {Tok::Neq, "!=", line};
        }
        throw ParseError("expected '!='", line);
      default:
        break;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
              s_[pos_] == '_'))
        ++pos_;
      std::string word = s_.substr(start, pos_ - start);
      return {std::isupper(static_cast<unsigned char>(c)) ? Tok::Var
                                                          : Tok::Ident,
              word, line};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line);
  }

 private:
  void skip_space_and_comments() {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '%') {
        if (pos_ + 1 < s_.size() && s_[pos_ + 1] == '%') {
          pos_ += 2;
          while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t'))
            ++pos_;
          std::size_t start = pos_;
          while (pos_ < s_.size() &&
                 (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                  s_[pos_] == '_'))
            ++pos_;
          if (pos_ == start)
            throw ParseError("expected section name after '%%'", line_);
          section_name_ = s_.substr(start, pos_ - start);
          pending_section_ = true;
          return;
        }
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else {
        return;
      }
    }
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  int line_ = 1;
  bool pending_section_ = false;
  std::string section_name_;
};

class Parser {
 public:
  explicit Parser(const std::string& s) : lex_(s) { advance(); }

  KnowledgeBase parse_kb_text() {
    KnowledgeBase kb;
    std::map<std::string, int> clause_lines;
    std::set<std::string> seen_sections;
    std::vector<HornClause>* current = nullptr;

    while (cur_.kind != Tok::End) {
      if (cur_.kind == Tok::Section) {
        std::string name = cur_.text;
        if (!seen_sections.insert(name).second)
          throw ParseError("duplicate section '%% " + name + "'", cur_.line);
        if (name == "immutable")
          current = &kb.immutable;
        else if (name == "updatable")
          current = &kb.updatable;
        else if (name == "constraints")
          current = &kb.constraints;
        else
          throw ParseError("unknown section '%% " + name + "'", cur_.line);
        advance();
        continue;
      }
      int line = cur_.line;
      HornClause c = parse_one_clause();
      if (!current)
        throw ParseError("clause before any '%% section' header", line);
      if (std::find(current->begin(), current->end(), c) == current->end()) {
        current->push_back(c);
        clause_lines.emplace(to_string(c), line);
      }
    }

    auto violations = validate(kb);
    if (!violations.empty()) {
      std::ostringstream os;
      int first_line = 0;
      for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i) os << "; ";
        os << violations[i].message;
        auto it = clause_lines.find(violations[i].clause_text);
        if (it != clause_lines.end()) {
          os << " (line " << it->second << ")";
          if (!first_line) first_line = it->second;
        }
      }
      throw ParseError(os.str(), first_line);
    }
    return kb;
  }

  HornClause parse_single_clause() {
    HornClause c = parse_one_clause();
    if (cur_.kind != Tok::End)
      throw ParseError("trailing input after clause", cur_.line);
    return c;
  }

  Atom parse_single_atom() {
    Atom a = parse_atom_tok();
    if (cur_.kind != Tok::End)
      throw ParseError("trailing input after atom", cur_.line);
    return a;
  }

 private:
  void advance() { cur_ = lex_.next(); }

  Atom parse_atom_tok() {
    if (cur_.kind != Tok::Ident)
      throw ParseError("expected predicate identifier", cur_.line);
    Atom a{cur_.text, {}};
    advance();
    if (cur_.kind == Tok::LParen) {
      advance();
      while (true) {
        a.args.push_back(parse_term());
        if (cur_.kind == Tok::Comma) {
          advance();
          continue;
        }
        break;
      }
      if (cur_.kind != Tok::RParen) throw ParseError("expected ')'", cur_.line);
      advance();
    }
    return a;
  }

  Term parse_term() {
    if (cur_.kind == Tok::Ident) {
      Term t = Term::constant(cur_.text);
      advance();
      return t;
    }
    if (cur_.kind == Tok::Var) {
      Term t = Term::variable(cur_.text);
      advance();
      return t;
    }
    throw ParseError("expected term", cur_.line);
  }

  HornClause parse_one_clause() {
    HornClause c;
    if (cur_.kind == Tok::If) {
      advance();  // denial
      parse_body(c);
    } else {
      c.head = parse_atom_tok();
      if (cur_.kind == Tok::If) {
        advance();
        parse_body(c);
      }
    }
    if (cur_.kind != Tok::Dot)
      throw ParseError("expected '.' at end of clause", cur_.line);
    advance();
    return c;
  }

  void parse_body(HornClause& c) {
    while (true) {
      if (cur_.kind == Tok::Var) {
        Term lhs = parse_term();
        parse_equality(c, std::move(lhs));
      } else {
        if (cur_.kind != Tok::Ident)
          throw ParseError("expected body literal", cur_.line);
        std::string word = cur_.text;
        Atom a = parse_atom_tok();
        // "const = t" / "const != t" is an equality, not an atom.
        if (a.args.empty() && (cur_.kind == Tok::Eq || cur_.kind == Tok::Neq)) {
          parse_equality(c, Term::constant(word));
        } else {
          c.body.push_back(std::move(a));
        }
      }
      if (cur_.kind == Tok::Comma) {
        advance();
        continue;
      }
      break;
    }
  }

  void parse_equality(HornClause& c, Term lhs) {
    bool neg;
    if (cur_.kind == Tok::Eq)
      neg = false;
    else if (cur_.kind == Tok::Neq)
      neg = true;
    else
      throw ParseError("expected '=' or '!=' after term", cur_.line);
    advance();
    Term rhs = parse_term();
    c.equalities.push_back(EqLiteral{std::move(lhs), std::move(rhs), neg});
  }

  Lexer lex_;
  Token cur_{Tok::End, "", 0};
};

}  // namespace

KnowledgeBase parse_kb(const std::string& text) {
  return Parser(text).parse_kb_text();
}

HornClause parse_clause(const std::string& text) {
  return Parser(text).parse_single_clause();
}

Atom parse_atom(const std::string& text) {
  return Parser(text).parse_single_atom();
}

std::string serialize_kb(const KnowledgeBase& kb) {
  std::ostringstream os;
  auto dump = [&](const char* name, const std::vector<HornClause>& part) {
    os << "%% " << name << '\n';
    for (const auto& c : part) os << to_string(c) << '\n';
  };
  dump("immutable", kb.immutable);
  dump("updatable", kb.updatable);
  dump("constraints", kb.constraints);
  return os.str();
}

}  // namespace hornrev
