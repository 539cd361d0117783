#include "rwm/pddl.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace rwm::pddl {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

struct SExpr {
  // Either an atom (leaf) or a list.
  std::string atom;
  std::vector<SExpr> items;
  bool is_list = false;
  int line = 0, col = 0;
};

struct Lexer {
  const std::string& text;
  std::size_t pos = 0;
  int line = 1, col = 1;

  explicit Lexer(const std::string& t) : text(t) {}

  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }
  void skip_ws() {
    while (pos < text.size()) {
      if (text[pos] == ';') {  // comment to end of line
        while (pos < text.size() && text[pos] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(text[pos]))) {
        advance();
      } else {
        break;
      }
    }
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
};

SExpr parse_sexpr(Lexer& lx) {
  lx.skip_ws();
  if (lx.pos >= lx.text.size()) throw PddlError("unexpected end of input", lx.line, lx.col);
  SExpr e;
  e.line = lx.line;
  e.col = lx.col;
  if (lx.text[lx.pos] == '(') {
    e.is_list = true;
    lx.advance();
    while (true) {
      lx.skip_ws();
      if (lx.pos >= lx.text.size())
        throw PddlError("unbalanced parentheses", e.line, e.col);
      if (lx.text[lx.pos] == ')') {
        lx.advance();
        break;
      }
      e.items.push_back(parse_sexpr(lx));
    }
    return e;
  }
  if (lx.text[lx.pos] == ')') throw PddlError("unexpected ')'", lx.line, lx.col);
  std::string tok;
  while (lx.pos < lx.text.size() && !std::isspace(static_cast<unsigned char>(lx.text[lx.pos])) &&
         lx.text[lx.pos] != '(' && lx.text[lx.pos] != ')' && lx.text[lx.pos] != ';') {
    tok += lx.text[lx.pos];
    lx.advance();
  }
  e.atom = lower(tok);
  return e;
}

// Parses "?a ?b - type ?c - type2" style typed lists.
std::vector<Param> parse_typed_list(const SExpr& list, std::size_t start,
                                    std::vector<Diagnostic>& diags, bool* ok) {
  std::vector<Param> out;
  std::vector<std::string> pending;
  *ok = true;
  for (std::size_t i = start; i < list.items.size(); ++i) {
    const SExpr& it = list.items[i];
    if (it.is_list) {
      diags.push_back({it.line, it.col, "unexpected list in typed parameter list"});
      *ok = false;
      return out;
    }
    if (it.atom == "-") {
      if (i + 1 >= list.items.size() || list.items[i + 1].is_list) {
        diags.push_back({it.line, it.col, "missing type after '-'"});
        *ok = false;
        return out;
      }
      const std::string ty = list.items[i + 1].atom;
      for (auto& v : pending) out.push_back({v, ty});
      pending.clear();
      ++i;
    } else {
      std::string v = it.atom;
      if (!v.empty() && v[0] == '?') v.erase(0, 1);
      if (v.empty()) {
        diags.push_back({it.line, it.col, "empty variable name"});
        *ok = false;
        return out;
      }
      pending.push_back(v);
    }
  }
  if (!pending.empty()) {
    diags.push_back({list.line, list.col, "untyped variables in parameter list"});
    *ok = false;
  }
  return out;
}

bool parse_literal(const SExpr& e, Literal& lit, std::vector<Diagnostic>& diags) {
  if (!e.is_list || e.items.empty() || e.items[0].is_list) {
    diags.push_back({e.line, e.col, "malformed literal"});
    return false;
  }
  lit.pred = e.items[0].atom;
  lit.line = e.line;
  lit.col = e.col;
  lit.args.clear();
  for (std::size_t i = 1; i < e.items.size(); ++i) {
    if (e.items[i].is_list) {
      diags.push_back({e.items[i].line, e.items[i].col, "nested list inside literal"});
      return false;
    }
    std::string v = e.items[i].atom;
    if (!v.empty() && v[0] == '?') v.erase(0, 1);
    lit.args.push_back(v);
  }
  return true;
}

// Flattens "(and ...)", bare literals and "(not lit)" into pos/neg lists.
bool parse_condition(const SExpr& e, std::vector<Literal>& pos, std::vector<Literal>& neg,
                     std::vector<Diagnostic>& diags) {
  if (!e.is_list) {
    diags.push_back({e.line, e.col, "expected a condition"});
    return false;
  }
  if (e.items.empty()) return true;  // "()" treated as empty conjunction
  if (!e.items[0].is_list && e.items[0].atom == "and") {
    for (std::size_t i = 1; i < e.items.size(); ++i)
      if (!parse_condition(e.items[i], pos, neg, diags)) return false;
    return true;
  }
  if (!e.items[0].is_list && e.items[0].atom == "not") {
    if (e.items.size() != 2) {
      diags.push_back({e.line, e.col, "'not' takes exactly one literal"});
      return false;
    }
    Literal lit;
    if (!parse_literal(e.items[1], lit, diags)) return false;
    neg.push_back(lit);
    return true;
  }
  if (!e.items[0].is_list &&
      (e.items[0].atom == "or" || e.items[0].atom == "when" || e.items[0].atom == "forall" ||
       e.items[0].atom == "exists" || e.items[0].atom == "=")) {
    diags.push_back({e.line, e.col, "unsupported construct '" + e.items[0].atom + "'"});
    return false;
  }
  Literal lit;
  if (!parse_literal(e, lit, diags)) return false;
  pos.push_back(lit);
  return true;
}

}  // namespace

ParseResult parse_domain(const std::string& text) {
  Lexer lx(text);
  SExpr root = parse_sexpr(lx);
  lx.skip_ws();
  if (lx.pos < lx.text.size())
    throw PddlError("trailing content after domain definition", lx.line, lx.col);
  if (!root.is_list || root.items.empty() || root.items[0].atom != "define")
    throw PddlError("expected (define (domain ...))", root.line, root.col);
  if (root.items.size() < 2 || !root.items[1].is_list || root.items[1].items.size() != 2 ||
      root.items[1].items[0].atom != "domain")
    throw PddlError("missing (domain NAME) header", root.line, root.col);

  ParseResult res;
  res.domain.name = root.items[1].items[1].atom;

  for (std::size_t i = 2; i < root.items.size(); ++i) {
    const SExpr& sec = root.items[i];
    if (!sec.is_list || sec.items.empty() || sec.items[0].is_list) {
      res.diagnostics.push_back({sec.line, sec.col, "ignoring malformed section"});
      continue;
    }
    const std::string& head = sec.items[0].atom;
    if (head == ":requirements") {
      for (std::size_t k = 1; k < sec.items.size(); ++k)
        if (sec.items[k].atom != ":strips" && sec.items[k].atom != ":typing")
          res.diagnostics.push_back(
              {sec.items[k].line, sec.items[k].col,
               "ignoring requirement flag " + sec.items[k].atom});
    } else if (head == ":types") {
      for (std::size_t k = 1; k < sec.items.size(); ++k) {
        if (sec.items[k].is_list) continue;
        if (sec.items[k].atom == "-") {  // flatten hierarchies: drop the parent
          if (k + 1 < sec.items.size()) {
            res.diagnostics.push_back({sec.items[k].line, sec.items[k].col,
                                       "flattening type hierarchy; ignoring parent " +
                                           sec.items[k + 1].atom});
            ++k;
          }
          continue;
        }
        res.domain.types.push_back(sec.items[k].atom);
      }
    } else if (head == ":predicates") {
      for (std::size_t k = 1; k < sec.items.size(); ++k) {
        const SExpr& p = sec.items[k];
        if (!p.is_list || p.items.empty() || p.items[0].is_list) {
          res.diagnostics.push_back({p.line, p.col, "dropping malformed predicate declaration"});
          continue;
        }
        bool ok = true;
        Predicate pred;
        pred.name = p.items[0].atom;
        pred.params = parse_typed_list(p, 1, res.diagnostics, &ok);
        if (!ok) {
          res.diagnostics.push_back({p.line, p.col, "dropping predicate " + pred.name});
          continue;
        }
        res.domain.predicates.push_back(pred);
      }
    } else if (head == ":action") {
      std::vector<Diagnostic> local;
      Action act;
      bool ok = sec.items.size() >= 2 && !sec.items[1].is_list;
      if (ok) act.name = sec.items[1].atom;
      for (std::size_t k = 2; ok && k + 1 < sec.items.size(); k += 2) {
        const std::string key = sec.items[k].is_list ? "" : sec.items[k].atom;
        const SExpr& val = sec.items[k + 1];
        if (key == ":parameters") {
          if (!val.is_list) {
            local.push_back({val.line, val.col, "expected parameter list"});
            ok = false;
            break;
          }
          act.params = parse_typed_list(val, 0, local, &ok);
        } else if (key == ":precondition") {
          ok = parse_condition(val, act.pre_pos, act.pre_neg, local);
        } else if (key == ":effect") {
          ok = parse_condition(val, act.add, act.del, local);
        } else {
          local.push_back({sec.items[k].line, sec.items[k].col,
                           "unknown action keyword '" + key + "'"});
          ok = false;
        }
      }
      if (ok) {
        // Semantic checks local to the action: declared predicates, declared
        // parameters, no predicate in both add and delete.
        auto declared = [&](const Literal& lit) {
          for (const auto& p : res.domain.predicates)
            if (p.name == lit.pred && p.params.size() == lit.args.size()) return true;
          return false;
        };
        auto param_known = [&](const std::string& v) {
          for (const auto& p : act.params)
            if (p.name == v) return true;
          return false;
        };
        for (const auto* lits : {&act.pre_pos, &act.pre_neg, &act.add, &act.del}) {
          for (const auto& lit : *lits) {
            if (!ok) break;
            if (!declared(lit)) {
              local.push_back({lit.line, lit.col, "undeclared predicate " + lit.pred});
              ok = false;
            }
            for (const auto& a : lit.args)
              if (!param_known(a)) {
                local.push_back({lit.line, lit.col, "literal uses unknown variable ?" + a});
                ok = false;
              }
          }
        }
        for (const auto& a : act.add)
          for (const auto& d : act.del)
            if (ok && a.pred == d.pred && a.args == d.args) {
              local.push_back({a.line, a.col,
                               "predicate " + a.pred + " in both add and delete"});
              ok = false;
            }
      }
      if (ok) {
        res.domain.actions.push_back(act);
      } else {
        local.push_back({sec.line, sec.col, "dropping action" +
                                                (act.name.empty() ? "" : " " + act.name)});
      }
      res.diagnostics.insert(res.diagnostics.end(), local.begin(), local.end());
    } else {
      res.diagnostics.push_back({sec.line, sec.col, "ignoring section " + head});
    }
  }
  return res;
}

namespace {

void write_typed(std::ostringstream& out, const std::vector<Param>& params) {
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out << " ";
    out << "?" << params[i].name << " - " << params[i].type;
  }
}

void write_condition(std::ostringstream& out, const std::vector<Literal>& pos,
                     const std::vector<Literal>& neg) {
  out << "(and";
  for (const auto& l : pos) {
    out << " (" << l.pred;
    for (const auto& a : l.args) out << " ?" << a;
    out << ")";
  }
  for (const auto& l : neg) {
    out << " (not (" << l.pred;
    for (const auto& a : l.args) out << " ?" << a;
    out << "))";
  }
  out << ")";
}

}  // namespace

std::string serialize(const PddlDomain& d) {
  std::ostringstream out;
  out << "(define (domain " << d.name << ")\n";
  out << "  (:requirements :strips :typing)\n";
  out << "  (:types";
  for (const auto& t : d.types) out << " " << t;
  out << ")\n";
  out << "  (:predicates\n";
  for (const auto& p : d.predicates) {
    out << "    (" << p.name;
    if (!p.params.empty()) out << " ";
    std::ostringstream tmp;
    write_typed(tmp, p.params);
    out << tmp.str() << ")\n";
  }
  out << "  )\n";
  for (const auto& a : d.actions) {
    out << "  (:action " << a.name << "\n";
    out << "    :parameters (";
    std::ostringstream tmp;
    write_typed(tmp, a.params);
    out << tmp.str() << ")\n";
    out << "    :precondition ";
    write_condition(out, a.pre_pos, a.pre_neg);
    out << "\n    :effect ";
    write_condition(out, a.add, a.del);
    out << "\n  )\n";
  }
  out << ")\n";
  return out.str();
}

std::string serialize_partial(const DomainSpec& domain,
                              const std::vector<LiftedPredicate>& known) {
  std::ostringstream out;
  out << "(define (domain " << lower(domain.name) << ")\n";
  out << "  (:requirements :strips :typing)\n";
  out << "  (:types";
  for (const auto& t : domain.types) out << " " << lower(t.name);
  out << ")\n";
  out << "  (:predicates\n";
  for (const auto& p : known) {
    out << "    (" << lower(p.name);
    for (std::size_t i = 0; i < p.arg_types.size(); ++i)
      out << " ?v" << i << " - " << lower(p.arg_types[i]);
    out << ")\n";
  }
  out << "  )\n";
  for (const auto& c : domain.controllers) {
    out << "  (:action " << lower(c.name) << "\n";
    out << "    :parameters (";
    for (std::size_t i = 0; i < c.param_types.size(); ++i) {
      if (i) out << " ";
      out << "?v" << i << " - " << lower(c.param_types[i]);
    }
    out << ")\n";
    out << "    :precondition (and ) ; TODO: complete\n";
    out << "    :effect (and ) ; TODO: complete\n";
    out << "  )\n";
  }
  out << ")\n";
  return out.str();
}

ExtractResult extract_candidates(const PddlDomain& pd,
                                 const std::vector<std::string>& known_names,
                                 const std::vector<ControllerSchema>& schemas,
                                 const std::vector<TypeSignature>& types) {
  ExtractResult res;
  auto known = [&](const std::string& n) {
    for (const auto& k : known_names)
      if (lower(k) == n) return true;
    return false;
  };
  auto find_schema = [&](const std::string& n) -> const ControllerSchema* {
    for (const auto& s : schemas)
      if (lower(s.name) == n) return &s;
    return nullptr;
  };
  auto find_type = [&](const std::string& n) -> const TypeSignature* {
    for (const auto& t : types)
      if (lower(t.name) == n) return &t;
    return nullptr;
  };
  for (const auto& a : pd.actions)
    if (!find_schema(a.name))
      throw ConfigError("completed domain action '" + a.name +
                        "' matches no controller schema");

  for (const auto& decl : pd.predicates) {
    if (known(decl.name)) continue;
    bool ok = true;
    Candidate cand;
    cand.pred.name = decl.name;
    cand.pred.kind = PredicateKind::BasicDynamic;
    for (const auto& p : decl.params) {
      const TypeSignature* t = find_type(p.type);
      if (!t) {
        res.diagnostics.push_back({0, 0, "dropping " + decl.name + ": unknown type " + p.type});
        ok = false;
        break;
      }
      cand.pred.arg_types.push_back(t->name);
    }
    if (!ok) continue;
    cand.ev.predicate = decl.name;

    for (const auto& a : pd.actions) {
      const ControllerSchema* schema = find_schema(a.name);
      auto param_index = [&](const std::string& v) {
        for (std::size_t i = 0; i < a.params.size(); ++i)
          if (a.params[i].name == v) return static_cast<int>(i);
        return -1;
      };
      int delta = 0;
      std::vector<int> binding;
      for (int sign : {+1, -1}) {
        const auto& lits = sign > 0 ? a.add : a.del;
        for (const auto& lit : lits) {
          if (lit.pred != decl.name) continue;
          if (delta != 0) {
            res.diagnostics.push_back({lit.line, lit.col,
                                       "dropping " + decl.name +
                                           ": appears more than once in effects of " + a.name});
            ok = false;
            break;
          }
          delta = sign;
          binding.clear();
          for (std::size_t i = 0; i < lit.args.size(); ++i) {
            int pi = param_index(lit.args[i]);
            if (pi < 0) {
              res.diagnostics.push_back({lit.line, lit.col,
                                         "dropping " + decl.name + ": effect variable ?" +
                                             lit.args[i] + " is not a parameter of " + a.name});
              ok = false;
              break;
            }
            if (lower(schema->param_types[pi]) != lower(cand.pred.arg_types[i])) {
              res.diagnostics.push_back({lit.line, lit.col,
                                         "dropping " + decl.name + ": argument " +
                                             std::to_string(i) + " type mismatch in " + a.name});
              ok = false;
              break;
            }
            if (std::find(binding.begin(), binding.end(), pi) != binding.end()) {
              res.diagnostics.push_back({lit.line, lit.col,
                                         "dropping " + decl.name +
                                             ": non-injective binding in " + a.name});
              ok = false;
              break;
            }
            binding.push_back(pi);
          }
          if (ok && binding.size() != cand.pred.arity()) ok = false;
        }
        if (!ok) break;
      }
      if (!ok) break;
      if (delta != 0) cand.ev.entries[schema->name] = EffectEntry{delta, binding};
    }
    if (!ok) continue;
    if (cand.ev.all_zero()) {
      res.diagnostics.push_back(
          {0, 0, "dropping " + decl.name + ": no effect entry in any action (no training signal)"});
      continue;
    }
    res.candidates.push_back(std::move(cand));
  }
  return res;
}

void print_diagnostics(const std::vector<Diagnostic>& diags, std::ostream& err) {
  for (const auto& d : diags)
    err << "pddl:" << d.line << ":" << d.col << ": " << d.message << "\n";
}

}  // namespace rwm::pddl
