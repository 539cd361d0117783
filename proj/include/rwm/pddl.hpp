#ifndef RWM_PDDL_HPP
#define RWM_PDDL_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "rwm/domain.hpp"
#include "rwm/types.hpp"

namespace rwm::pddl {

struct PddlError : std::runtime_error {
  int line, col;
  PddlError(const std::string& msg, int line_in, int col_in)
      : std::runtime_error(msg + " at " + std::to_string(line_in) + ":" + std::to_string(col_in)),
        line(line_in),
        col(col_in) {}
};

struct Diagnostic {
  int line = 0, col = 0;
  std::string message;
};

struct Param {
  std::string name;  // without the '?'
  std::string type;
};

struct Predicate {
  std::string name;
  std::vector<Param> params;
};

struct Literal {
  std::string pred;
  std::vector<std::string> args;  // variable names
  int line = 0, col = 0;
};

struct Action {
  std::string name;
  std::vector<Param> params;
  std::vector<Literal> pre_pos, pre_neg;
  std::vector<Literal> add, del;
};

struct PddlDomain {
  std::string name;
  std::vector<std::string> types;
  std::vector<Predicate> predicates;
  std::vector<Action> actions;
};

struct ParseResult {
  PddlDomain domain;
  std::vector<Diagnostic> diagnostics;  // dropped actions/predicates, ignored flags
};

/// Parses the supported PDDL subset. Structural problems (unbalanced parens,
/// missing domain header) throw PddlError; a malformed action or predicate
/// declaration is dropped with a diagnostic instead of failing the parse.
ParseResult parse_domain(const std::string& text);

/// Canonical serialization of a parsed domain (lower-case symbols).
std::string serialize(const PddlDomain& d);

/// Partial domain for proposer prompting: full action parameter lists, the
/// known predicates declared, empty precondition/effect bodies marked TODO.
std::string serialize_partial(const DomainSpec& domain,
                              const std::vector<LiftedPredicate>& known);

struct Candidate {
  LiftedPredicate pred;
  EffectVector ev;
};

struct ExtractResult {
  std::vector<Candidate> candidates;
  std::vector<Diagnostic> diagnostics;
};

/// New predicates and their effect vectors from a completed domain.
/// Candidates violating the at-most-once or parameter-subset rules are
/// dropped with a diagnostic. Throws ConfigError when an action name matches
/// no controller schema.
ExtractResult extract_candidates(const PddlDomain& pd,
                                 const std::vector<std::string>& known_names,
                                 const std::vector<ControllerSchema>& schemas,
                                 const std::vector<TypeSignature>& types);

void print_diagnostics(const std::vector<Diagnostic>& diags, std::ostream& err);

}  // namespace rwm::pddl

#endif
