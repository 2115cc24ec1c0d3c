#include "ltlfsyn/parser.hpp"

#include <cctype>

namespace ltlfsyn {

namespace {

enum class Tok {
  End,
  Ident,
  True,
  False,
  Not,
  And,
  Or,
  Implies,
  Equiv,
  NextOp,
  WeakNextOp,
  Finally,
  Globally,
  UntilOp,
  ReleaseOp,
  LParen,
  RParen,
};

struct Lexer {
  std::string_view text;
  size_t pos = 0;
  int line = 1;
  int col = 1;

  Tok tok = Tok::End;
  std::string ident;
  int tok_line = 1;
  int tok_col = 1;

  void advance_char() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  [[noreturn]] void fail(const std::string& msg, int l, int c) {
    throw ParseError(msg, l, c);
  }

  void next() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      advance_char();
    tok_line = line;
    tok_col = col;
    if (pos >= text.size()) {
      tok = Tok::End;
      return;
    }
    char c = text[pos];
    switch (c) {
      case '(':
        advance_char();
        tok = Tok::LParen;
        return;
      case ')':
        advance_char();
        tok = Tok::RParen;
        return;
      case '!':
        advance_char();
        tok = Tok::Not;
        return;
      case '&':
        advance_char();
        tok = Tok::And;
        return;
      case '|':
        advance_char();
        tok = Tok::Or;
        return;
      case '-':
        advance_char();
        if (pos >= text.size() || text[pos] != '>')
          fail("expected '>' after '-'", tok_line, tok_col);
        advance_char();
        tok = Tok::Implies;
        return;
      case '<':
        advance_char();
        if (pos + 1 >= text.size() || text[pos] != '-' || text[pos + 1] != '>')
          fail("expected '<->'", tok_line, tok_col);
        advance_char();
        advance_char();
        tok = Tok::Equiv;
        return;
      default:
        break;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        advance_char();
      ident = std::string(text.substr(start, pos - start));
      if (ident == "true")
        tok = Tok::True;
      else if (ident == "false")
        tok = Tok::False;
      else if (ident == "X")
        tok = Tok::NextOp;
      else if (ident == "N")
        tok = Tok::WeakNextOp;
      else if (ident == "F")
        tok = Tok::Finally;
      else if (ident == "G")
        tok = Tok::Globally;
      else if (ident == "U")
        tok = Tok::UntilOp;
      else if (ident == "R")
        tok = Tok::ReleaseOp;
      else
        tok = Tok::Ident;
      return;
    }
    fail(std::string("unexpected character '") + c + "'", tok_line, tok_col);
  }
};

struct Parser {
  FormulaStore& store;
  Lexer lex;

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, lex.tok_line, lex.tok_col);
  }

  // formula := or_expr (('->' | '<->') formula)?   right-associative
  FormulaId formula() {
    FormulaId l = or_expr();
    if (lex.tok == Tok::Implies) {
      lex.next();
      return store.implies(l, formula());
    }
    if (lex.tok == Tok::Equiv) {
      lex.next();
      return store.equiv(l, formula());
    }
    return l;
  }

  FormulaId or_expr() {
    FormulaId l = and_expr();
    while (lex.tok == Tok::Or) {
      lex.next();
      l = store.raw_or(l, and_expr());
    }
    return l;
  }

  FormulaId and_expr() {
    FormulaId l = until_expr();
    while (lex.tok == Tok::And) {
      lex.next();
      l = store.raw_and(l, until_expr());
    }
    return l;
  }

  // until_expr := unary (('U'|'R') until_expr)?    right-associative
  FormulaId until_expr() {
    FormulaId l = unary();
    if (lex.tok == Tok::UntilOp) {
      lex.next();
      return store.until(l, until_expr());
    }
    if (lex.tok == Tok::ReleaseOp) {
      lex.next();
      return store.release(l, until_expr());
    }
    return l;
  }

  FormulaId unary() {
    switch (lex.tok) {
      case Tok::Not: {
        lex.next();
        FormulaId f = unary();
        // Negated atoms become literals directly; everything else keeps a
        // raw negation node for to_nnf.
        if (store.op(f) == Op::Lit) {
          const FormulaNode& n = store.node(f);
          return store.lit(n.prop, !n.positive);
        }
        return store.raw_not(f);
      }
      case Tok::NextOp:
        lex.next();
        return store.next(unary());
      case Tok::WeakNextOp:
        lex.next();
        return store.weak_next(unary());
      case Tok::Finally:
        lex.next();
        return store.until(store.tt(), unary());
      case Tok::Globally:
        lex.next();
        return store.release(store.ff(), unary());
      default:
        return atom();
    }
  }

  FormulaId atom() {
    switch (lex.tok) {
      case Tok::True:
        lex.next();
        return store.tt();
      case Tok::False:
        lex.next();
        return store.ff();
      case Tok::Ident: {
        FormulaId f = store.lit(store.intern_prop(lex.ident), true);
        lex.next();
        return f;
      }
      case Tok::LParen: {
        lex.next();
        FormulaId f = formula();
        if (lex.tok != Tok::RParen) fail("expected ')'");
        lex.next();
        return f;
      }
      case Tok::End:
        fail("unexpected end of input");
      default:
        fail("expected a formula");
    }
  }
};

}  // namespace

FormulaId parse_formula(FormulaStore& store, std::string_view text) {
  Parser p{store, Lexer{text}};
  p.lex.next();
  FormulaId f = p.formula();
  if (p.lex.tok != Tok::End) p.fail("trailing input after formula");
  return f;
}

}  // namespace ltlfsyn
