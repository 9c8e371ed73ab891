#pragma once

#include "modelhom/complex.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

namespace modelhom {

/// Op1: merge adjacent u and v into `into`.
struct IdentifyAdjacent {
  std::string u, v, into;
  bool operator==(const IdentifyAdjacent&) const = default;
};

struct IdentifyGroup {
  std::vector<std::string> members;
  std::string into;
  bool operator==(const IdentifyGroup&) const = default;
};

/// Op2: merge nonadjacent vertices. Strict mode takes exactly one group of
/// two twins; quotient mode accepts several groups of any size at once.
struct IdentifyNonadjacent {
  std::vector<IdentifyGroup> groups;
  bool operator==(const IdentifyNonadjacent&) const = default;
};

/// Op3: replace u by the adjacent pair {c, d}.
struct Split {
  std::string u, c, d;
  bool operator==(const Split&) const = default;
};

/// Op4: add simplices (given by labels). `groups` names the identification
/// that undoes the inclusion; without it only a single-vertex twin copy is
/// recognised as invertible.
struct Include {
  std::vector<std::vector<std::string>> simplices;
  std::vector<IdentifyGroup> groups;
  bool operator==(const Include&) const = default;
};

/// Op5: relabel u as `into`.
struct Substitute {
  std::string u, into;
  bool operator==(const Substitute&) const = default;
};

using EquivalenceOp = std::variant<IdentifyAdjacent, IdentifyNonadjacent, Split, Include, Substitute>;

/// 1..5 in the order above.
int op_number(const EquivalenceOp& op);
std::string op_name(const EquivalenceOp& op);
std::string describe(const EquivalenceOp& op);

enum class Mode { Strict, Quotient };
Mode parse_mode(const std::string& name);
std::string mode_name(Mode mode);

/// Disjoint classes of labels regarded as conceptually equivalent. Labels in
/// no class form singleton classes.
class ConceptDeclaration {
 public:
  ConceptDeclaration() = default;
  /// Throws InputError if a label appears twice.
  explicit ConceptDeclaration(std::vector<std::vector<std::string>> classes);

  const std::vector<std::vector<std::string>>& classes() const { return classes_; }
  bool same_class(const std::vector<std::string>& labels) const;
  /// The labels sharing a class with `label`, excluding it.
  std::vector<std::string> equivalents(const std::string& label) const;
  std::vector<std::string> labels() const;

 private:
  std::vector<std::vector<std::string>> classes_;
  std::unordered_map<std::string, std::size_t> class_of_;
};

struct AdmissibilityReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  std::string describe() const;
};

AdmissibilityReport check_admissible(const LabelledComplex& k, const EquivalenceOp& op,
                                     const ConceptDeclaration& decl, Mode mode = Mode::Strict);

/// Structural preconditions only, without the declaration.
AdmissibilityReport check_structure(const LabelledComplex& k, const EquivalenceOp& op, Mode mode = Mode::Strict);

/// Throws OperationError when the structural preconditions fail. New labels
/// are appended to the universe.
LabelledComplex apply(const LabelledComplex& k, const EquivalenceOp& op, Mode mode = Mode::Strict);

struct Inversion {
  bool invertible = false;
  /// Applied in order, maps apply(before, op) back to before.
  std::vector<EquivalenceOp> inverse;
  std::string reason;
};

/// Builds the paired inverse and confirms it: every inverse step must be
/// admissible and the round trip must reproduce `before` exactly.
Inversion invert(const EquivalenceOp& op, const LabelledComplex& before, const ConceptDeclaration& decl,
                 Mode mode = Mode::Strict);

/// Same labelled simplex sets, universes aside.
bool labelled_equal(const LabelledComplex& a, const LabelledComplex& b);

struct TraceStep {
  std::size_t index = 0;
  std::string op;
  bool admissible = false;
  bool invertible = false;
  std::string fingerprint;
  std::string note;
};

struct Verdict {
  bool accepted = false;
  std::vector<TraceStep> trace;
  /// 0-based index of the failing step; equal to the script length when the
  /// steps all pass but the final complex differs from the target.
  std::optional<std::size_t> failed_step;
  std::string reason;
  LabelledComplex final_complex;
};

Verdict verify_script(const LabelledComplex& k, const std::vector<EquivalenceOp>& script, const LabelledComplex& l,
                      const ConceptDeclaration& decl, Mode mode = Mode::Strict);

/// Reverse-ordered inverses; throws OperationError on a non-invertible step.
std::vector<EquivalenceOp> invert_script(const LabelledComplex& k, const std::vector<EquivalenceOp>& script,
                                         const ConceptDeclaration& decl, Mode mode = Mode::Strict);

struct SearchOptions {
  std::size_t max_ops = 4;
  std::size_t max_states = 200000;
  Mode mode = Mode::Strict;
};

struct SearchResult {
  bool found = false;
  std::vector<EquivalenceOp> script;
  std::size_t states = 0;
};

/// Breadth-first search for a shortest script of admissible, invertible
/// operations. Nonadjacent identifications are proposed pairwise and
/// inclusions as single twin copies. Throws BudgetError after
/// `max_states` distinct complexes.
SearchResult search_equivalence(const LabelledComplex& k, const LabelledComplex& l, const ConceptDeclaration& decl,
                                const SearchOptions& options = {});

}  // namespace modelhom
