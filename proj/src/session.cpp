// Copyright (c) 2026 the lch authors
// SPDX-License-Identifier: Apache-2.0
#include "session.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <set>

#include "error.hpp"
#include "report.hpp"
#include "rng.hpp"
#include "textio.hpp"

namespace lch {
namespace {

struct Env {
  std::map<std::string, RingPtr> rings;
  std::map<std::string, Ideal> ideals;
  std::map<std::string, ModulePresentation> modules;
  std::map<std::string, GradedModulePresentation> graded;
  std::map<std::string, long> ints;
  std::set<std::string> names;
  RingPtr active;  // most recent ring declaration
};

struct Pos {
  long line = 1;
  long col = 1;
};

Pos pos_of(const std::string& src, size_t off) {
  Pos p;
  for (size_t i = 0; i < off && i < src.size(); ++i) {
    if (src[i] == '\n') {
      ++p.line;
      p.col = 1;
    } else {
      ++p.col;
    }
  }
  return p;
}

[[noreturn]] void die_at(const std::string& src, size_t off, Errc c,
                         const std::string& msg) {
  Pos p = pos_of(src, off);
  fail(c, "line " + std::to_string(p.line) + ", column " +
              std::to_string(p.col) + ": " + msg);
}

// Mirrors the lexer's character set so invalid input fails with a located
// message instead of a bare offset.
void prescan(const std::string& src) {
  static const std::string singles = "()[]{},;=^*+-/:<>|";
  for (size_t i = 0; i < src.size(); ++i) {
    unsigned char c = (unsigned char)src[i];
    if (std::isspace(c) || std::isalnum(c) || c == '_' || c == '.' ||
        c == '#' || singles.find(char(c)) != std::string::npos)
      continue;
    die_at(src, i, Errc::parse_error,
           "unexpected character '" + std::string(1, char(c)) + "'");
  }
}

std::string hex16(uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
  return buf;
}

Token expect_ident(Lexer& lx, const std::string& src, const char* what) {
  const Token& t = lx.peek();
  if (t.kind != Token::Kind::ident)
    die_at(src, t.pos, Errc::parse_error,
           std::string("expected ") + what + ", found '" +
               (t.kind == Token::Kind::end ? "<end>" : t.text) + "'");
  return lx.next();
}

void expect_tok(Lexer& lx, const std::string& src, const std::string& text) {
  if (!lx.accept(text)) {
    const Token& t = lx.peek();
    die_at(src, t.pos, Errc::parse_error,
           "expected '" + text + "', found '" +
               (t.kind == Token::Kind::end ? "<end>" : t.text) + "'");
  }
}

long parse_int_literal(Lexer& lx, const std::string& src) {
  bool neg = lx.accept("-");
  const Token& t = lx.peek();
  if (t.kind != Token::Kind::integer)
    die_at(src, t.pos, Errc::parse_error, "expected an integer");
  long v = std::stol(lx.next().text);
  return neg ? -v : v;
}

// Integer argument: optional `name=` prefix, then a literal or a declared
// integer name.
long parse_int_arg(Lexer& lx, const std::string& src, Env& env,
                   const char* name) {
  if (name && lx.peek().kind == Token::Kind::ident && lx.peek().text == name &&
      lx.peek2().text == "=") {
    lx.next();
    lx.next();
  }
  if (lx.peek().kind == Token::Kind::ident) {
    Token t = lx.next();
    auto it = env.ints.find(t.text);
    if (it == env.ints.end()) {
      if (env.names.count(t.text))
        die_at(src, t.pos, Errc::context_mismatch,
               "'" + t.text + "' is not an integer");
      die_at(src, t.pos, Errc::undeclared_name,
             "unknown name '" + t.text + "'");
    }
    return it->second;
  }
  return parse_int_literal(lx, src);
}

const RingPtr& get_ring(Env& env, const Token& t, const std::string& src) {
  auto it = env.rings.find(t.text);
  if (it != env.rings.end()) return it->second;
  if (env.names.count(t.text))
    die_at(src, t.pos, Errc::context_mismatch, "'" + t.text + "' is not a ring");
  die_at(src, t.pos, Errc::undeclared_name, "unknown name '" + t.text + "'");
}

const Ideal& get_ideal(Env& env, const Token& t, const std::string& src) {
  auto it = env.ideals.find(t.text);
  if (it != env.ideals.end()) return it->second;
  if (env.names.count(t.text))
    die_at(src, t.pos, Errc::context_mismatch,
           "'" + t.text + "' is not an ideal");
  die_at(src, t.pos, Errc::undeclared_name, "unknown name '" + t.text + "'");
}

const GradedModulePresentation& get_graded(Env& env, const Token& t,
                                           const std::string& src) {
  auto it = env.graded.find(t.text);
  if (it != env.graded.end()) return it->second;
  if (env.names.count(t.text))
    die_at(src, t.pos, Errc::context_mismatch,
           "'" + t.text + "' is not a graded family");
  die_at(src, t.pos, Errc::undeclared_name, "unknown name '" + t.text + "'");
}

std::vector<Poly> parse_poly_list(Lexer& lx, const std::string& src,
                                  const Ring& R, const std::string& stop) {
  std::vector<Poly> out;
  if (lx.peek().text == stop && lx.peek().kind == Token::Kind::punct)
    return out;
  (void)src;
  for (;;) {
    out.push_back(parse_poly_expr(lx, R, nullptr));
    if (!lx.accept(",")) break;
  }
  return out;
}

std::vector<Poly> parse_poly_brackets(Lexer& lx, const std::string& src,
                                      const Ring& R) {
  expect_tok(lx, src, "[");
  std::vector<Poly> out = parse_poly_list(lx, src, R, "]");
  expect_tok(lx, src, "]");
  return out;
}

std::vector<long> parse_int_brackets(Lexer& lx, const std::string& src) {
  expect_tok(lx, src, "[");
  std::vector<long> out;
  if (!lx.accept("]")) {
    for (;;) {
      out.push_back(parse_int_literal(lx, src));
      if (!lx.accept(",")) break;
    }
    expect_tok(lx, src, "]");
  }
  return out;
}

std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

std::string echo_polys(const Ring& R, const std::vector<Poly>& fs,
                       const char* sep) {
  std::vector<std::string> ss;
  for (const auto& f : fs) ss.push_back(poly_to_string(R, f));
  return join(ss, sep);
}

std::string echo_ints(const std::vector<long>& xs) {
  std::vector<std::string> ss;
  for (long x : xs) ss.push_back(std::to_string(x));
  return "[" + join(ss, ",") + "]";
}

struct ModArg {
  ModulePresentation mod;
  std::string echo;
};

ModArg parse_modexpr(Lexer& lx, const std::string& src, Env& env) {
  Token t = expect_ident(lx, src, "a module expression");
  if (t.text == "quotient") {
    expect_tok(lx, src, "(");
    Token rt = expect_ident(lx, src, "a ring name");
    const RingPtr& R = get_ring(env, rt, src);
    expect_tok(lx, src, ",");
    Token it = expect_ident(lx, src, "an ideal name");
    const Ideal& I = get_ideal(env, it, src);
    expect_tok(lx, src, ")");
    if (I.ring() != R)
      die_at(src, it.pos, Errc::context_mismatch,
             "ideal '" + it.text + "' lives over a different ring");
    return {ModulePresentation::cyclic(I),
            "quotient(" + rt.text + ", " + it.text + ")"};
  }
  if (t.text == "free") {
    expect_tok(lx, src, "(");
    Token rt = expect_ident(lx, src, "a ring name");
    const RingPtr& R = get_ring(env, rt, src);
    expect_tok(lx, src, ",");
    long r = parse_int_arg(lx, src, env, nullptr);
    expect_tok(lx, src, ")");
    if (r < 0)
      die_at(src, rt.pos, Errc::malformed_input, "free rank must be >= 0");
    return {ModulePresentation::free_module(R, int(r)),
            "free(" + rt.text + ", " + std::to_string(r) + ")"};
  }
  if (t.text == "coker") {
    expect_tok(lx, src, "(");
    Token rt = expect_ident(lx, src, "a ring name");
    const RingPtr& R = get_ring(env, rt, src);
    expect_tok(lx, src, ",");
    expect_tok(lx, src, "[");
    std::vector<Vec> cols;
    std::vector<std::string> colechos;
    if (!lx.accept("]")) {
      for (;;) {
        Vec col = parse_poly_brackets(lx, src, *R);
        colechos.push_back("[" + echo_polys(*R, col, ",") + "]");
        cols.push_back(std::move(col));
        if (!lx.accept(",")) break;
      }
      expect_tok(lx, src, "]");
    }
    expect_tok(lx, src, ")");
    if (cols.empty())
      die_at(src, rt.pos, Errc::malformed_input,
             "coker needs at least one relation column");
    size_t rank = cols[0].size();
    for (const auto& c : cols)
      if (c.size() != rank)
        die_at(src, rt.pos, Errc::malformed_input,
               "relation columns have unequal lengths");
    return {ModulePresentation(R, int(rank), std::move(cols)),
            "coker(" + rt.text + ", [" + join(colechos, ", ") + "])"};
  }
  auto mit = env.modules.find(t.text);
  if (mit != env.modules.end()) return {mit->second, t.text};
  auto rit = env.rings.find(t.text);
  if (rit != env.rings.end())
    return {ModulePresentation::free_module(rit->second, 1), t.text};
  if (env.names.count(t.text))
    die_at(src, t.pos, Errc::context_mismatch,
           "'" + t.text + "' is not a module");
  die_at(src, t.pos, Errc::undeclared_name, "unknown name '" + t.text + "'");
}

struct Clauses {
  long lo = 0, hi = 0, window = 0, t_lo = 0, t_hi = 0;
  bool has_range = false, has_window = false, has_t = false;
};

Clauses parse_clauses(Lexer& lx, const std::string& src) {
  Clauses c;
  for (;;) {
    if (lx.peek().kind == Token::Kind::ident && lx.peek().text == "range") {
      lx.next();
      c.lo = parse_int_literal(lx, src);
      expect_tok(lx, src, "..");
      c.hi = parse_int_literal(lx, src);
      c.has_range = true;
    } else if (lx.peek().kind == Token::Kind::ident &&
               lx.peek().text == "window") {
      lx.next();
      c.window = parse_int_literal(lx, src);
      c.has_window = true;
    } else if (lx.peek().kind == Token::Kind::ident && lx.peek().text == "t") {
      lx.next();
      c.t_lo = parse_int_literal(lx, src);
      expect_tok(lx, src, "..");
      c.t_hi = parse_int_literal(lx, src);
      c.has_t = true;
    } else {
      break;
    }
  }
  return c;
}

void resolve_sampling(const Clauses& c, const SessionOptions& opt, long& lo,
                      long& hi, long& w) {
  lo = c.has_range ? c.lo : opt.range_lo;
  hi = c.has_range ? c.hi : opt.range_hi;
  w = c.has_window ? c.window : opt.window;
}

std::string run_decl(Lexer& lx, const std::string& src, Env& env) {
  Token kw = lx.next();  // ring | ideal | module | graded | int
  Token name = expect_ident(lx, src, "a name");
  if (env.names.count(name.text))
    die_at(src, name.pos, Errc::parse_error,
           "name '" + name.text + "' already declared");
  expect_tok(lx, src, "=");
  std::string echo;

  if (kw.text == "ring") {
    Token f = expect_ident(lx, src, "a field (zp or qq)");
    CoeffField field = CoeffField::rationals();
    std::string fecho;
    if (f.text == "zp") {
      expect_tok(lx, src, "(");
      long p = parse_int_literal(lx, src);
      expect_tok(lx, src, ")");
      field = CoeffField::prime(p);
      fecho = "zp(" + std::to_string(p) + ")";
    } else if (f.text == "qq") {
      fecho = "qq";
    } else {
      die_at(src, f.pos, Errc::parse_error,
             "unknown field '" + f.text + "' (expected zp or qq)");
    }
    expect_tok(lx, src, "[");
    std::vector<std::string> vars;
    for (;;) {
      Token v = expect_ident(lx, src, "a variable name");
      for (const auto& prev : vars)
        if (prev == v.text)
          die_at(src, v.pos, Errc::parse_error,
                 "duplicate variable '" + v.text + "'");
      vars.push_back(v.text);
      if (!lx.accept(",")) break;
    }
    expect_tok(lx, src, "]");
    expect_tok(lx, src, ";");
    RingPtr R = make_ring(field, vars);
    env.rings.emplace(name.text, R);
    env.active = R;
    echo = "ring " + name.text + " = " + fecho + "[" + join(vars, ",") + "];";
  } else if (kw.text == "ideal") {
    if (!env.active)
      die_at(src, name.pos, Errc::undeclared_name,
             "no ring declared before ideal '" + name.text + "'");
    std::vector<Poly> gens = parse_poly_list(lx, src, *env.active, ";");
    expect_tok(lx, src, ";");
    if (gens.empty())
      die_at(src, name.pos, Errc::parse_error, "empty generator list");
    std::string gecho = echo_polys(*env.active, gens, ", ");
    env.ideals.emplace(name.text, Ideal(env.active, std::move(gens)));
    echo = "ideal " + name.text + " = " + gecho + ";";
  } else if (kw.text == "module") {
    ModArg m = parse_modexpr(lx, src, env);
    expect_tok(lx, src, ";");
    env.modules.emplace(name.text, std::move(m.mod));
    echo = "module " + name.text + " = " + m.echo + ";";
  } else if (kw.text == "graded") {
    Token f = expect_ident(lx, src, "a family kind (rees, assgr, custom)");
    if (f.text == "rees" || f.text == "assgr") {
      expect_tok(lx, src, "(");
      Token it = expect_ident(lx, src, "an ideal name");
      const Ideal& I = get_ideal(env, it, src);
      expect_tok(lx, src, ",");
      ModArg m = parse_modexpr(lx, src, env);
      expect_tok(lx, src, ")");
      expect_tok(lx, src, ";");
      FamilyKind kind =
          f.text == "rees" ? FamilyKind::rees : FamilyKind::assoc_graded;
      env.graded.emplace(name.text, make_family(kind, I, m.mod));
      echo = "graded " + name.text + " = " + f.text + "(" + it.text + ", " +
             m.echo + ");";
    } else if (f.text == "custom") {
      expect_tok(lx, src, "(");
      Token rt = expect_ident(lx, src, "a ring name");
      const RingPtr& R = get_ring(env, rt, src);
      expect_tok(lx, src, ",");
      expect_tok(lx, src, "[");
      std::vector<std::string> gnames;
      if (!lx.accept("]")) {
        for (;;) {
          gnames.push_back(expect_ident(lx, src, "a generator name").text);
          if (!lx.accept(",")) break;
        }
        expect_tok(lx, src, "]");
      }
      GradedAlgebraSpec A = free_graded_algebra(R, gnames);
      expect_tok(lx, src, ",");
      Token kwrel = expect_ident(lx, src, "'relations'");
      if (kwrel.text != "relations")
        die_at(src, kwrel.pos, Errc::parse_error, "expected 'relations'");
      A.relations = parse_poly_brackets(lx, src, *A.ext);
      expect_tok(lx, src, ",");
      Token kwdeg = expect_ident(lx, src, "'degrees'");
      if (kwdeg.text != "degrees")
        die_at(src, kwdeg.pos, Errc::parse_error, "expected 'degrees'");
      std::vector<long> degs = parse_int_brackets(lx, src);
      expect_tok(lx, src, ",");
      Token kwcol = expect_ident(lx, src, "'columns'");
      if (kwcol.text != "columns")
        die_at(src, kwcol.pos, Errc::parse_error, "expected 'columns'");
      expect_tok(lx, src, "[");
      std::vector<Vec> cols;
      std::vector<std::string> colechos;
      if (!lx.accept("]")) {
        for (;;) {
          Vec col = parse_poly_brackets(lx, src, *A.ext);
          colechos.push_back("[" + echo_polys(*A.ext, col, ",") + "]");
          cols.push_back(std::move(col));
          if (!lx.accept(",")) break;
        }
        expect_tok(lx, src, "]");
      }
      expect_tok(lx, src, ")");
      expect_tok(lx, src, ";");
      std::string relecho = echo_polys(*A.ext, A.relations, ",");
      env.graded.emplace(
          name.text,
          GradedModulePresentation(std::move(A), degs, std::move(cols)));
      echo = "graded " + name.text + " = custom(" + rt.text + ", [" +
             join(gnames, ",") + "], relations [" + relecho + "], degrees " +
             echo_ints(degs) + ", columns [" + join(colechos, ",") + "]);";
    } else {
      die_at(src, f.pos, Errc::parse_error,
             "unknown family kind '" + f.text + "'");
    }
  } else {  // int
    long v = parse_int_literal(lx, src);
    expect_tok(lx, src, ";");
    env.ints.emplace(name.text, v);
    echo = "int " + name.text + " = " + std::to_string(v) + ";";
  }
  env.names.insert(name.text);
  return echo;
}

nlohmann::json run_cmd(Lexer& lx, const std::string& src, Env& env,
                       const SessionOptions& opt, std::string& echo) {
  uint64_t seed = opt.seed;
  Token head = lx.next();  // compute | check
  nlohmann::json j;

  if (head.text == "check") {
    Token o = expect_ident(lx, src, "'oracle'");
    if (o.text != "oracle")
      die_at(src, o.pos, Errc::parse_error, "expected 'oracle'");
    Token what = expect_ident(lx, src, "'asslch'");
    if (what.text != "asslch")
      die_at(src, what.pos, Errc::parse_error, "unknown check '" + what.text + "'");
    Token vs = expect_ident(lx, src, "'vs'");
    if (vs.text != "vs")
      die_at(src, vs.pos, Errc::parse_error, "expected 'vs'");
    Token ext = expect_ident(lx, src, "'ext'");
    if (ext.text != "ext")
      die_at(src, ext.pos, Errc::parse_error, "expected 'ext'");
    expect_tok(lx, src, "(");
    Token it = expect_ident(lx, src, "an ideal name");
    const Ideal& I = get_ideal(env, it, src);
    expect_tok(lx, src, ",");
    ModArg n = parse_modexpr(lx, src, env);
    expect_tok(lx, src, ",");
    long k = parse_int_arg(lx, src, env, "k");
    expect_tok(lx, src, ",");
    long l = parse_int_arg(lx, src, env, "l");
    expect_tok(lx, src, ")");
    Clauses c = parse_clauses(lx, src);
    expect_tok(lx, src, ";");
    long t_lo = c.has_t ? c.t_lo : opt.t_lo;
    long t_hi = c.has_t ? c.t_hi : opt.t_hi;
    echo = "check oracle asslch vs ext(" + it.text + ", " + n.echo +
           ", k=" + std::to_string(k) + ", l=" + std::to_string(l) + ") t " +
           std::to_string(t_lo) + ".." + std::to_string(t_hi) + ";";

    auto M = ModulePresentation::free_module(I.ring(), 1);
    TheoremSetResult f = ass_lch_formula(I, M, n.mod, k, l, seed);
    j["check"] = "asslch-vs-ext";
    j["k"] = k;
    j["l"] = l;
    j["t_range"] = nlohmann::json::array({t_lo, t_hi});
    j["union"] = json_of_assset(f.union_set);
    j["brief"] = assset_brief(f.union_set);
    j["guaranteed"] = f.guaranteed;
    bool all_equal = true;
    auto per_t = nlohmann::json::array();
    for (long t = t_lo; t <= t_hi; ++t) {
      AssSet o_set = ext_ass_sets(I, n.mod, k, l, t, seed);
      bool eq = f.union_set.set_equals(o_set);
      all_equal = all_equal && eq;
      nlohmann::json row;
      row["t"] = t;
      row["equal"] = eq;
      row["brief"] = assset_brief(o_set);
      per_t.push_back(std::move(row));
    }
    j["per_t"] = per_t;
    j["equal"] = all_equal;
    return j;
  }

  Token cmd = expect_ident(lx, src, "a command name");
  if (cmd.text == "assprimes") {
    ModArg m = parse_modexpr(lx, src, env);
    expect_tok(lx, src, ";");
    echo = "compute assprimes " + m.echo + ";";
    AssSet a = associated_primes(m.mod, seed);
    j["ass"] = json_of_assset(a);
    j["brief"] = assset_brief(a);
    return j;
  }
  if (cmd.text == "minprimes" || cmd.text == "gb" || cmd.text == "dim") {
    Token it = expect_ident(lx, src, "an ideal name");
    const Ideal& I = get_ideal(env, it, src);
    expect_tok(lx, src, ";");
    echo = "compute " + cmd.text + " " + it.text + ";";
    if (cmd.text == "minprimes") {
      AssSet s;
      for (auto& p : minimal_primes(I, seed)) s.insert(std::move(p));
      j["minimal"] = json_of_assset(s);
      j["brief"] = assset_brief(s);
    } else if (cmd.text == "gb") {
      j["basis"] = json_of_polys(*I.ring(), I.gb());
      j["dim"] = json_of_extint(krull_dim(I));
    } else {
      j["dim"] = json_of_extint(krull_dim(I));
    }
    return j;
  }
  if (cmd.text == "depthk") {
    expect_tok(lx, src, "(");
    Token it = expect_ident(lx, src, "an ideal name");
    const Ideal& I = get_ideal(env, it, src);
    expect_tok(lx, src, ",");
    ModArg n = parse_modexpr(lx, src, env);
    expect_tok(lx, src, ",");
    long k = parse_int_arg(lx, src, env, "k");
    expect_tok(lx, src, ")");
    expect_tok(lx, src, ";");
    echo = "compute depthk(" + it.text + ", " + n.echo + ", " +
           std::to_string(k) + ");";
    DepthResult d = depth_k(I, n.mod, k, seed);
    j = json_of_depth(d, *n.mod.ring());
    j["k"] = k;
    return j;
  }
  if (cmd.text == "asslch" || cmd.text == "asstop") {
    expect_tok(lx, src, "(");
    Token it = expect_ident(lx, src, "an ideal name");
    const Ideal& I = get_ideal(env, it, src);
    expect_tok(lx, src, ",");
    ModArg m = parse_modexpr(lx, src, env);
    expect_tok(lx, src, ",");
    ModArg n = parse_modexpr(lx, src, env);
    if (cmd.text == "asstop") {
      expect_tok(lx, src, ")");
      expect_tok(lx, src, ";");
      echo = "compute asstop(" + it.text + ", " + m.echo + ", " + n.echo + ");";
      AssSet s = ass_top_lch(I, m.mod, n.mod, seed);
      j["set"] = json_of_assset(s);
      j["brief"] = assset_brief(s);
      return j;
    }
    expect_tok(lx, src, ",");
    long k = parse_int_arg(lx, src, env, "k");
    expect_tok(lx, src, ",");
    long l = parse_int_arg(lx, src, env, "l");
    expect_tok(lx, src, ")");
    expect_tok(lx, src, ";");
    echo = "compute asslch(" + it.text + ", " + m.echo + ", " + n.echo +
           ", k=" + std::to_string(k) + ", l=" + std::to_string(l) + ");";
    TheoremSetResult r = ass_lch_formula(I, m.mod, n.mod, k, l, seed);
    return json_of_theorem_sets(r, *n.mod.ring());
  }
  if (cmd.text == "extass") {
    expect_tok(lx, src, "(");
    Token it = expect_ident(lx, src, "an ideal name");
    const Ideal& I = get_ideal(env, it, src);
    expect_tok(lx, src, ",");
    ModArg n = parse_modexpr(lx, src, env);
    expect_tok(lx, src, ",");
    long k = parse_int_arg(lx, src, env, "k");
    expect_tok(lx, src, ",");
    long l = parse_int_arg(lx, src, env, "l");
    expect_tok(lx, src, ",");
    long t = parse_int_arg(lx, src, env, "t");
    expect_tok(lx, src, ")");
    expect_tok(lx, src, ";");
    echo = "compute extass(" + it.text + ", " + n.echo + ", k=" +
           std::to_string(k) + ", l=" + std::to_string(l) + ", t=" +
           std::to_string(t) + ");";
    AssSet s = ext_ass_sets(I, n.mod, k, l, t, seed);
    j["k"] = k;
    j["l"] = l;
    j["t"] = t;
    j["set"] = json_of_assset(s);
    j["brief"] = assset_brief(s);
    return j;
  }
  if (cmd.text == "extasspowers") {
    expect_tok(lx, src, "(");
    Token it = expect_ident(lx, src, "an ideal name");
    const Ideal& I = get_ideal(env, it, src);
    expect_tok(lx, src, ",");
    ModArg n = parse_modexpr(lx, src, env);
    expect_tok(lx, src, ",");
    long k = parse_int_arg(lx, src, env, "k");
    expect_tok(lx, src, ",");
    long l = parse_int_arg(lx, src, env, "l");
    expect_tok(lx, src, ",");
    Token pw = expect_ident(lx, src, "'powers'");
    if (pw.text != "powers")
      die_at(src, pw.pos, Errc::parse_error, "expected 'powers'");
    lx.accept("=");
    std::vector<long> ts = parse_int_brackets(lx, src);
    expect_tok(lx, src, ")");
    expect_tok(lx, src, ";");
    echo = "compute extasspowers(" + it.text + ", " + n.echo + ", k=" +
           std::to_string(k) + ", l=" + std::to_string(l) + ", powers " +
           echo_ints(ts) + ");";
    AssSet s = ext_ass_sets_powers(I, ts, n.mod, k, l, seed);
    j["k"] = k;
    j["l"] = l;
    j["powers"] = ts;
    j["set"] = json_of_assset(s);
    j["brief"] = assset_brief(s);
    return j;
  }
  if (cmd.text == "powerinv") {
    expect_tok(lx, src, "(");
    ModArg n = parse_modexpr(lx, src, env);
    expect_tok(lx, src, ",");
    std::vector<Poly> xs = parse_poly_brackets(lx, src, *n.mod.ring());
    expect_tok(lx, src, ",");
    long k = parse_int_arg(lx, src, env, "k");
    expect_tok(lx, src, ",");
    Token ex = expect_ident(lx, src, "'exps'");
    if (ex.text != "exps")
      die_at(src, ex.pos, Errc::parse_error, "expected 'exps'");
    lx.accept("=");
    std::vector<long> exps = parse_int_brackets(lx, src);
    expect_tok(lx, src, ")");
    expect_tok(lx, src, ";");
    echo = "compute powerinv(" + n.echo + ", [" +
           echo_polys(*n.mod.ring(), xs, ",") + "], k=" + std::to_string(k) +
           ", exps " + echo_ints(exps) + ");";
    PowerInvarianceReport r = power_invariance_check(xs, n.mod, k, exps, seed);
    j = json_of_power_invariance(r);
    j["k"] = k;
    j["exps"] = exps;
    return j;
  }
  if (cmd.text == "bnstar") {
    expect_tok(lx, src, "(");
    ModArg n = parse_modexpr(lx, src, env);
    expect_tok(lx, src, ",");
    Token it = expect_ident(lx, src, "an ideal name");
    const Ideal& I = get_ideal(env, it, src);
    expect_tok(lx, src, ",");
    std::vector<Poly> xs = parse_poly_brackets(lx, src, *n.mod.ring());
    expect_tok(lx, src, ",");
    long k = parse_int_arg(lx, src, env, "k");
    expect_tok(lx, src, ",");
    long jj = parse_int_arg(lx, src, env, "j");
    expect_tok(lx, src, ")");
    expect_tok(lx, src, ";");
    echo = "compute bnstar(" + n.echo + ", " + it.text + ", [" +
           echo_polys(*n.mod.ring(), xs, ",") + "], k=" + std::to_string(k) +
           ", j=" + std::to_string(jj) + ");";
    BnStarResult r = bn_star_set(xs, n.mod, I, k, jj, seed);
    j = json_of_bn_star(r);
    j["k"] = k;
    j["j"] = jj;
    return j;
  }
  if (cmd.text == "component") {
    expect_tok(lx, src, "(");
    Token gt = expect_ident(lx, src, "a graded family name");
    const GradedModulePresentation& GN = get_graded(env, gt, src);
    expect_tok(lx, src, ",");
    long nn = parse_int_arg(lx, src, env, nullptr);
    expect_tok(lx, src, ")");
    expect_tok(lx, src, ";");
    echo = "compute component(" + gt.text + ", " + std::to_string(nn) + ");";
    ModulePresentation C = graded_component(GN, nn);
    AssSet a = associated_primes(C, seed);
    j["n"] = nn;
    j["rank"] = C.rank();
    j["ann"] = json_of_polys(*C.ring(), C.annihilator().gb());
    j["ass"] = json_of_assset(a);
    j["brief"] = assset_brief(a);
    return j;
  }
  if (cmd.text == "commonseq") {
    expect_tok(lx, src, "(");
    Token gt = expect_ident(lx, src, "a graded family name");
    const GradedModulePresentation& GN = get_graded(env, gt, src);
    expect_tok(lx, src, ",");
    Token it = expect_ident(lx, src, "an ideal name");
    const Ideal& I = get_ideal(env, it, src);
    expect_tok(lx, src, ",");
    long k = parse_int_arg(lx, src, env, "k");
    expect_tok(lx, src, ")");
    Clauses c = parse_clauses(lx, src);
    expect_tok(lx, src, ";");
    long lo, hi, w;
    resolve_sampling(c, opt, lo, hi, w);
    echo = "compute commonseq(" + gt.text + ", " + it.text + ", k=" +
           std::to_string(k) + ") range " + std::to_string(lo) + ".." +
           std::to_string(hi) + " window " + std::to_string(w) + ";";
    CommonSequenceResult r = common_sequence(GN, I, k, lo, hi, w, seed);
    j = json_of_common_sequence(r, *GN.algebra().base);
    j["k"] = k;
    return j;
  }
  if (cmd.text == "stabilize") {
    Token what = expect_ident(lx, src, "a quantity (ass, depthk, asslch)");
    if (what.text == "ass") {
      expect_tok(lx, src, "(");
      Token gt = expect_ident(lx, src, "a graded family name");
      const GradedModulePresentation& GN = get_graded(env, gt, src);
      expect_tok(lx, src, ")");
      Clauses c = parse_clauses(lx, src);
      expect_tok(lx, src, ";");
      long lo, hi, w;
      resolve_sampling(c, opt, lo, hi, w);
      echo = "compute stabilize ass(" + gt.text + ") range " +
             std::to_string(lo) + ".." + std::to_string(hi) + " window " +
             std::to_string(w) + ";";
      return json_of_stabilization(stabilize_ass(GN, lo, hi, w, seed));
    }
    if (what.text == "depthk") {
      expect_tok(lx, src, "(");
      Token gt = expect_ident(lx, src, "a graded family name");
      const GradedModulePresentation& GN = get_graded(env, gt, src);
      expect_tok(lx, src, ",");
      Token it = expect_ident(lx, src, "an ideal name");
      const Ideal& I = get_ideal(env, it, src);
      expect_tok(lx, src, ",");
      long k = parse_int_arg(lx, src, env, "k");
      expect_tok(lx, src, ")");
      Clauses c = parse_clauses(lx, src);
      expect_tok(lx, src, ";");
      long lo, hi, w;
      resolve_sampling(c, opt, lo, hi, w);
      echo = "compute stabilize depthk(" + gt.text + ", " + it.text + ", k=" +
             std::to_string(k) + ") range " + std::to_string(lo) + ".." +
             std::to_string(hi) + " window " + std::to_string(w) + ";";
      return json_of_stabilization(stabilize_depth_k(GN, I, k, lo, hi, w, seed));
    }
    if (what.text == "asslch") {
      expect_tok(lx, src, "(");
      Token it = expect_ident(lx, src, "an ideal name");
      const Ideal& I = get_ideal(env, it, src);
      expect_tok(lx, src, ",");
      ModArg m = parse_modexpr(lx, src, env);
      expect_tok(lx, src, ",");
      Token gt = expect_ident(lx, src, "a graded family name");
      const GradedModulePresentation& GN = get_graded(env, gt, src);
      expect_tok(lx, src, ",");
      long k = parse_int_arg(lx, src, env, "k");
      expect_tok(lx, src, ",");
      long l = parse_int_arg(lx, src, env, "l");
      expect_tok(lx, src, ")");
      Clauses c = parse_clauses(lx, src);
      expect_tok(lx, src, ";");
      long lo, hi, w;
      resolve_sampling(c, opt, lo, hi, w);
      echo = "compute stabilize asslch(" + it.text + ", " + m.echo + ", " +
             gt.text + ", k=" + std::to_string(k) + ", l=" + std::to_string(l) +
             ") range " + std::to_string(lo) + ".." + std::to_string(hi) +
             " window " + std::to_string(w) + ";";
      return json_of_theorem_stabilization(
          stabilize_theorem_sets(GN, I, m.mod, k, l, lo, hi, w, seed));
    }
    die_at(src, what.pos, Errc::parse_error,
           "unknown stabilize quantity '" + what.text + "'");
  }
  die_at(src, cmd.pos, Errc::parse_error,
         "unknown command '" + cmd.text + "'");
}

}  // namespace

SessionResult run_session(const std::string& text, const SessionOptions& opt) {
  SessionResult res;
  nlohmann::json top;
  top["engine"] = "lch";
  top["version"] = kEngineVersion;
  top["seed"] = opt.seed;
  top["session_hash"] = hex16(fnv1a64(text));
  auto decls = nlohmann::json::array();
  auto reports = nlohmann::json::array();
  auto t0 = std::chrono::steady_clock::now();
  int exit_code = 0;
  try {
    prescan(text);
    Lexer lx(text);
    Env env;
    while (!lx.at_end()) {
      if (opt.timeout_secs > 0) {
        auto dt = std::chrono::duration_cast<std::chrono::seconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        if (dt >= opt.timeout_secs)
          fail(Errc::timeout, "session exceeded the time budget");
      }
      size_t start = lx.peek().pos;
      try {
        const Token& t = lx.peek();
        if (t.kind != Token::Kind::ident)
          die_at(text, t.pos, Errc::parse_error,
                 "expected a declaration or command");
        if (t.text == "ring" || t.text == "ideal" || t.text == "module" ||
            t.text == "graded" || t.text == "int") {
          std::string echo = run_decl(lx, text, env);
          decls.push_back(echo);
          res.echoes.push_back(echo);
        } else if (t.text == "compute" || t.text == "check") {
          std::string echo;
          nlohmann::json payload = run_cmd(lx, text, env, opt, echo);
          res.echoes.push_back(echo);
          nlohmann::json r;
          r["command"] = echo;
          r["input_hash"] = hex16(fnv1a64(echo));
          r["result"] = std::move(payload);
          reports.push_back(std::move(r));
        } else {
          die_at(text, t.pos, Errc::parse_error,
                 "unknown statement '" + t.text + "'");
        }
      } catch (const Error& e) {
        std::string msg = e.what();
        if (msg.rfind("line ", 0) == 0) throw;
        size_t where = e.code() == Errc::parse_error ? lx.peek().pos : start;
        size_t at = msg.rfind(" at offset ");
        if (at != std::string::npos) {
          where = size_t(std::stoul(msg.substr(at + 11)));
          msg = msg.substr(0, at);
        }
        die_at(text, where, e.code(), msg);
      }
    }
    top["status"] = "ok";
  } catch (const Error& e) {
    exit_code = exit_class(e.code());
    top["status"] = "error";
    nlohmann::json err;
    err["code"] = errc_name(e.code());
    err["message"] = e.what();
    top["error"] = std::move(err);
  }
  top["declarations"] = std::move(decls);
  top["reports"] = std::move(reports);
  res.report = top;
  res.exit_code = exit_code;
  res.rendered = opt.format == "text" ? render_text(top) : top.dump(2) + "\n";
  return res;
}

}  // namespace lch
