#include "modelhom/equivalence.hpp"

#include "modelhom/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

namespace modelhom {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string join(const std::vector<std::string>& parts, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string describe_groups(const std::vector<IdentifyGroup>& groups) {
  std::vector<std::string> parts;
  for (const auto& g : groups) parts.push_back("{" + join(g.members) + "} -> " + g.into);
  return join(parts, "; ");
}

std::optional<Vertex> vertex_of(const LabelledComplex& k, const std::string& label) {
  auto v = k.universe()->find(label);
  if (v && k.has_vertex(*v)) return v;
  return std::nullopt;
}

std::set<std::string> vertex_labels(const LabelledComplex& k) {
  std::set<std::string> out;
  for (Vertex v : k.vertices()) out.insert(k.universe()->label(v));
  return out;
}

// {S \ {u} : u in S, skip not in S, S != {u}}
std::set<std::vector<Vertex>> link(const LabelledComplex& k, Vertex u, std::optional<Vertex> skip) {
  std::set<std::vector<Vertex>> out;
  for (const auto& s : k.simplices()) {
    if (s.size() < 2 || !s.contains(u) || (skip && s.contains(*skip))) continue;
    std::vector<Vertex> rest;
    for (Vertex w : s.vertices())
      if (w != u) rest.push_back(w);
    out.insert(std::move(rest));
  }
  return out;
}

std::vector<Vertex> without(std::vector<Vertex> vs, Vertex x) {
  vs.erase(std::remove(vs.begin(), vs.end(), x), vs.end());
  return vs;
}

bool adjacent(const LabelledComplex& k, Vertex a, Vertex b) { return k.contains(Simplex{a, b}); }

// Labels an op introduces that the complex's universe may lack.
std::vector<std::string> introduced_labels(const EquivalenceOp& op) {
  return std::visit(overloaded{
                        [](const IdentifyAdjacent& o) { return std::vector<std::string>{o.into}; },
                        [](const IdentifyNonadjacent& o) {
                          std::vector<std::string> out;
                          for (const auto& g : o.groups) out.push_back(g.into);
                          return out;
                        },
                        [](const Split& o) { return std::vector<std::string>{o.c, o.d}; },
                        [](const Include& o) {
                          std::vector<std::string> out;
                          for (const auto& s : o.simplices) out.insert(out.end(), s.begin(), s.end());
                          return out;
                        },
                        [](const Substitute& o) { return std::vector<std::string>{o.into}; },
                    },
                    op);
}

LabelledComplex map_vertices(const LabelledComplex& k, const std::map<Vertex, Vertex>& m) {
  std::vector<Simplex> out;
  out.reserve(k.size());
  for (const auto& s : k.simplices()) {
    std::vector<Vertex> vs;
    vs.reserve(s.size());
    for (Vertex v : s.vertices()) {
      auto it = m.find(v);
      vs.push_back(it == m.end() ? v : it->second);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    out.push_back(make_sorted_simplex(std::move(vs)));
  }
  return LabelledComplex(k.universe(), std::move(out), k.max_dim());
}

LabelledComplex apply_unchecked(const LabelledComplex& k, const EquivalenceOp& op) {
  const auto fresh = introduced_labels(op);
  const UniversePtr u = extend_universe(k.universe(), fresh);
  const LabelledComplex base = relabel_into(k, u);
  return std::visit(
      overloaded{
          [&](const IdentifyAdjacent& o) {
            const Vertex c = u->index(o.into);
            return map_vertices(base, {{u->index(o.u), c}, {u->index(o.v), c}});
          },
          [&](const IdentifyNonadjacent& o) {
            std::map<Vertex, Vertex> m;
            for (const auto& g : o.groups)
              for (const auto& x : g.members) m[u->index(x)] = u->index(g.into);
            return map_vertices(base, m);
          },
          [&](const Split& o) {
            const Vertex uu = u->index(o.u), c = u->index(o.c), d = u->index(o.d);
            std::vector<Simplex> out;
            int top = base.max_dim();
            for (const auto& s : base.simplices()) {
              if (!s.contains(uu)) {
                out.push_back(s);
                continue;
              }
              auto vs = without(std::vector<Vertex>(s.vertices().begin(), s.vertices().end()), uu);
              vs.push_back(c);
              vs.push_back(d);
              Simplex t(std::move(vs));
              top = std::max(top, t.dimension());
              out.push_back(std::move(t));
            }
            return close_downward(LabelledComplex(u, std::move(out), top));
          },
          [&](const Include& o) {
            std::vector<Simplex> out = base.simplices();
            int top = base.max_dim();
            for (const auto& labels : o.simplices) {
              std::vector<Vertex> vs;
              for (const auto& l : labels) vs.push_back(u->index(l));
              Simplex s(std::move(vs));
              top = std::max(top, s.dimension());
              out.push_back(std::move(s));
            }
            return LabelledComplex(u, std::move(out), top);
          },
          [&](const Substitute& o) { return map_vertices(base, {{u->index(o.u), u->index(o.into)}}); },
      },
      op);
}

std::vector<std::vector<std::string>> labelled_simplices(const LabelledComplex& k) {
  std::vector<std::vector<std::string>> out;
  out.reserve(k.size());
  for (const auto& s : k.simplices()) out.push_back(simplex_labels(*k.universe(), s));
  return out;
}

}  // namespace

int op_number(const EquivalenceOp& op) { return static_cast<int>(op.index()) + 1; }

std::string op_name(const EquivalenceOp& op) {
  static const char* names[] = {"identify_adjacent", "identify_nonadjacent", "split", "include", "substitute"};
  return names[op.index()];
}

std::string describe(const EquivalenceOp& op) {
  return op_name(op) + "(" +
         std::visit(overloaded{
                        [](const IdentifyAdjacent& o) { return o.u + ", " + o.v + " -> " + o.into; },
                        [](const IdentifyNonadjacent& o) { return describe_groups(o.groups); },
                        [](const Split& o) { return o.u + " -> " + o.c + ", " + o.d; },
                        [](const Include& o) {
                          std::string s = std::to_string(o.simplices.size()) + " simplices";
                          if (!o.groups.empty()) s += "; undone by " + describe_groups(o.groups);
                          return s;
                        },
                        [](const Substitute& o) { return o.u + " -> " + o.into; },
                    },
                    op) +
         ")";
}

Mode parse_mode(const std::string& name) {
  if (name == "strict") return Mode::Strict;
  if (name == "quotient") return Mode::Quotient;
  throw InputError("unknown mode '" + name + "' (expected strict or quotient)");
}

std::string mode_name(Mode mode) { return mode == Mode::Strict ? "strict" : "quotient"; }

ConceptDeclaration::ConceptDeclaration(std::vector<std::vector<std::string>> classes) : classes_(std::move(classes)) {
  for (std::size_t i = 0; i < classes_.size(); ++i)
    for (const auto& l : classes_[i])
      if (!class_of_.emplace(l, i).second) throw InputError("declaration lists '" + l + "' in more than one place");
}

bool ConceptDeclaration::same_class(const std::vector<std::string>& labels) const {
  if (labels.empty()) return true;
  auto key = [&](const std::string& l) -> std::pair<std::size_t, std::string> {
    auto it = class_of_.find(l);
    if (it == class_of_.end()) return {classes_.size(), l};
    return {it->second, {}};
  };
  const auto first = key(labels.front());
  return std::all_of(labels.begin(), labels.end(), [&](const std::string& l) { return key(l) == first; });
}

std::vector<std::string> ConceptDeclaration::equivalents(const std::string& label) const {
  auto it = class_of_.find(label);
  if (it == class_of_.end()) return {};
  std::vector<std::string> out;
  for (const auto& l : classes_[it->second])
    if (l != label) out.push_back(l);
  return out;
}

std::vector<std::string> ConceptDeclaration::labels() const {
  std::vector<std::string> out;
  for (const auto& c : classes_) out.insert(out.end(), c.begin(), c.end());
  return out;
}

std::string AdmissibilityReport::describe() const { return violations.empty() ? "ok" : join(violations, "; "); }

AdmissibilityReport check_structure(const LabelledComplex& k, const EquivalenceOp& op, Mode mode) {
  AdmissibilityReport r;
  auto& out = r.violations;
  auto need = [&](const std::string& label) -> std::optional<Vertex> {
    auto v = vertex_of(k, label);
    if (!v) out.push_back("'" + label + "' is not a vertex of the complex");
    return v;
  };
  auto fresh = [&](const std::string& label, const std::vector<std::string>& allowed) {
    if (label.empty()) {
      out.push_back("empty target label");
      return;
    }
    if (std::find(allowed.begin(), allowed.end(), label) != allowed.end()) return;
    if (vertex_of(k, label)) out.push_back("target '" + label + "' is already a vertex of the complex");
  };

  std::visit(
      overloaded{
          [&](const IdentifyAdjacent& o) {
            if (o.u == o.v) {
              out.push_back("identified vertices must differ");
              return;
            }
            auto u = need(o.u), v = need(o.v);
            fresh(o.into, {o.u, o.v});
            if (!u || !v) return;
            if (!adjacent(k, *u, *v)) {
              out.push_back("'" + o.u + "' and '" + o.v + "' are not adjacent");
              return;
            }
            if (without(neighbors(k, *u), *v) != without(neighbors(k, *v), *u))
              out.push_back("neighbourhoods of '" + o.u + "' and '" + o.v + "' differ");
            else if (link(k, *u, *v) != link(k, *v, *u))
              out.push_back("some face W spans a simplex with '" + o.u + "' but not with '" + o.v + "' or vice versa");
          },
          [&](const IdentifyNonadjacent& o) {
            if (o.groups.empty()) {
              out.push_back("no vertices to identify");
              return;
            }
            if (mode == Mode::Strict && (o.groups.size() != 1 || o.groups[0].members.size() != 2)) {
              out.push_back("strict mode identifies exactly one pair of vertices");
              return;
            }
            std::set<std::string> seen, targets;
            for (const auto& g : o.groups) {
              if (g.members.size() < 2) out.push_back("a group needs at least two vertices");
              if (!targets.insert(g.into).second) out.push_back("target '" + g.into + "' used by two groups");
              fresh(g.into, g.members);
              std::vector<Vertex> vs;
              for (const auto& m : g.members) {
                if (!seen.insert(m).second) out.push_back("'" + m + "' appears in more than one group slot");
                if (auto v = need(m)) vs.push_back(*v);
              }
              if (vs.size() != g.members.size()) continue;
              for (std::size_t i = 0; i < vs.size(); ++i)
                for (std::size_t j = i + 1; j < vs.size(); ++j)
                  if (adjacent(k, vs[i], vs[j]))
                    out.push_back("'" + g.members[i] + "' and '" + g.members[j] + "' are adjacent");
              if (mode == Mode::Strict && vs.size() == 2 && !adjacent(k, vs[0], vs[1])) {
                if (neighbors(k, vs[0]) != neighbors(k, vs[1]))
                  out.push_back("neighbourhoods of '" + g.members[0] + "' and '" + g.members[1] + "' differ");
                else if (link(k, vs[0], std::nullopt) != link(k, vs[1], std::nullopt))
                  out.push_back("some face W spans a simplex with '" + g.members[0] + "' but not with '" +
                                g.members[1] + "' or vice versa");
              }
            }
          },
          [&](const Split& o) {
            need(o.u);
            if (o.c.empty() || o.d.empty() || o.c == o.d || o.c == o.u || o.d == o.u)
              out.push_back("split needs three distinct labels");
            fresh(o.c, {});
            fresh(o.d, {});
          },
          [&](const Include& o) {
            if (o.simplices.empty()) {
              out.push_back("nothing to include");
              return;
            }
            for (const auto& g : o.groups)
              if (g.members.size() < 2 || g.into.empty()) out.push_back("malformed undo group");
            const UniversePtr u = extend_universe(k.universe(), introduced_labels(op));
            const LabelledComplex base = relabel_into(k, u);
            std::vector<Simplex> all = base.simplices();
            for (const auto& labels : o.simplices) {
              std::vector<Vertex> vs;
              for (const auto& l : labels) vs.push_back(u->index(l));
              try {
                Simplex s(std::move(vs));
                if (base.contains(s)) out.push_back("{" + join(labels) + "} is already in the complex");
                all.push_back(std::move(s));
              } catch (const InputError&) {
                out.push_back("malformed simplex {" + join(labels) + "}");
              }
            }
            if (!out.empty()) return;
            const auto report = validate(LabelledComplex(u, std::move(all)));
            if (!report.ok()) out.push_back("result is not a complex: " + report.describe(*u));
          },
          [&](const Substitute& o) {
            need(o.u);
            if (o.into == o.u) out.push_back("substitution must change the label");
            fresh(o.into, {});
          },
      },
      op);
  return r;
}

AdmissibilityReport check_admissible(const LabelledComplex& k, const EquivalenceOp& op,
                                     const ConceptDeclaration& decl, Mode mode) {
  AdmissibilityReport r = check_structure(k, op, mode);
  auto concept_check = [&](std::vector<std::string> labels) {
    if (!decl.same_class(labels))
      r.violations.push_back("labels {" + join(labels) + "} are not declared conceptually equivalent");
  };
  std::visit(overloaded{
                 [&](const IdentifyAdjacent& o) { concept_check({o.u, o.v, o.into}); },
                 [&](const IdentifyNonadjacent& o) {
                   for (const auto& g : o.groups) {
                     auto labels = g.members;
                     labels.push_back(g.into);
                     concept_check(labels);
                   }
                 },
                 [&](const Split& o) { concept_check({o.u, o.c, o.d}); },
                 [](const Include&) {},
                 [&](const Substitute& o) { concept_check({o.u, o.into}); },
             },
             op);
  return r;
}

LabelledComplex apply(const LabelledComplex& k, const EquivalenceOp& op, Mode mode) {
  const auto report = check_structure(k, op, mode);
  if (!report.ok()) throw OperationError(describe(op) + " is not admissible: " + report.describe());
  return apply_unchecked(k, op);
}

bool labelled_equal(const LabelledComplex& a, const LabelledComplex& b) {
  if (a.size() != b.size()) return false;
  if (same_universe(a.universe(), b.universe())) return a.simplices() == b.simplices();
  for (const auto& s : a.simplices()) {
    std::vector<Vertex> vs;
    for (Vertex v : s.vertices()) {
      auto w = b.universe()->find(a.universe()->label(v));
      if (!w) return false;
      vs.push_back(*w);
    }
    if (!b.contains(Simplex(std::move(vs)))) return false;
  }
  return true;
}

namespace {

// Substitutions moving fresh targets back onto a member, then the simplices
// the identification removed.
std::vector<EquivalenceOp> undo_identification(const IdentifyNonadjacent& o, const LabelledComplex& before,
                                               const LabelledComplex& after) {
  std::vector<EquivalenceOp> seq;
  std::vector<IdentifyGroup> undo;
  LabelledComplex cur = after;
  for (const auto& g : o.groups) {
    const bool reused = std::find(g.members.begin(), g.members.end(), g.into) != g.members.end();
    const std::string rep = reused ? g.into : g.members.front();
    if (!reused) {
      Substitute s{g.into, rep};
      cur = apply_unchecked(cur, s);
      seq.emplace_back(std::move(s));
    }
    undo.push_back({g.members, rep});
  }
  std::set<std::vector<std::string>> present;
  for (auto& s : labelled_simplices(cur)) {
    std::sort(s.begin(), s.end());
    present.insert(std::move(s));
  }
  Include inc;
  for (const auto& s : labelled_simplices(before)) {
    auto key = s;
    std::sort(key.begin(), key.end());
    if (!present.count(key)) inc.simplices.push_back(s);
  }
  inc.groups = std::move(undo);
  if (!inc.simplices.empty()) seq.emplace_back(std::move(inc));
  return seq;
}

}  // namespace

Inversion invert(const EquivalenceOp& op, const LabelledComplex& before, const ConceptDeclaration& decl, Mode mode) {
  Inversion inv;
  const auto report = check_admissible(before, op, decl, mode);
  if (!report.ok()) {
    inv.reason = "not admissible: " + report.describe();
    return inv;
  }
  const LabelledComplex after = apply_unchecked(before, op);

  std::visit(overloaded{
                 [&](const IdentifyAdjacent& o) {
                   if (o.into == o.u || o.into == o.v)
                     inv.reason = "target reuses an identified label, so no split can restore both vertices";
                   else
                     inv.inverse.emplace_back(Split{o.into, o.u, o.v});
                 },
                 [&](const IdentifyNonadjacent& o) { inv.inverse = undo_identification(o, before, after); },
                 [&](const Split& o) { inv.inverse.emplace_back(IdentifyAdjacent{o.c, o.d, o.u}); },
                 [&](const Include& o) {
                   if (!o.groups.empty()) {
                     inv.inverse.emplace_back(IdentifyNonadjacent{o.groups});
                     return;
                   }
                   // a lone new vertex may be the twin of an existing one
                   const auto old = vertex_labels(before);
                   std::set<std::string> added;
                   for (const auto& s : o.simplices)
                     for (const auto& l : s)
                       if (!old.count(l)) added.insert(l);
                   if (added.size() == 1) {
                     const std::string x = *added.begin();
                     for (const auto& y : decl.equivalents(x)) {
                       if (!old.count(y)) continue;
                       EquivalenceOp cand = IdentifyNonadjacent{{IdentifyGroup{{y, x}, y}}};
                       if (check_admissible(after, cand, decl, mode).ok() &&
                           labelled_equal(apply_unchecked(after, cand), before)) {
                         inv.inverse.push_back(std::move(cand));
                         return;
                       }
                     }
                   }
                   inv.reason = "no identification undoes this inclusion";
                 },
                 [&](const Substitute& o) { inv.inverse.emplace_back(Substitute{o.into, o.u}); },
             },
             op);
  if (!inv.reason.empty()) {
    inv.inverse.clear();
    return inv;
  }

  LabelledComplex cur = after;
  for (const auto& step : inv.inverse) {
    const auto r = check_admissible(cur, step, decl, mode);
    if (!r.ok()) {
      inv.reason = "inverse step " + describe(step) + " is not admissible: " + r.describe();
      inv.inverse.clear();
      return inv;
    }
    cur = apply_unchecked(cur, step);
  }
  if (!labelled_equal(cur, before)) {
    inv.reason = "the inverse does not restore the original complex";
    inv.inverse.clear();
    return inv;
  }
  inv.invertible = true;
  return inv;
}

namespace {

std::size_t labelled_distance(const LabelledComplex& a, const LabelledComplex& b) {
  auto keys = [](const LabelledComplex& k) {
    std::set<std::vector<std::string>> out;
    for (auto& s : labelled_simplices(k)) {
      std::sort(s.begin(), s.end());
      out.insert(std::move(s));
    }
    return out;
  };
  const auto x = keys(a), y = keys(b);
  std::size_t common = 0;
  for (const auto& s : x) common += y.count(s);
  return x.size() + y.size() - 2 * common;
}

}  // namespace

Verdict verify_script(const LabelledComplex& k, const std::vector<EquivalenceOp>& script, const LabelledComplex& l,
                      const ConceptDeclaration& decl, Mode mode) {
  Verdict v;
  LabelledComplex cur = k;
  for (std::size_t i = 0; i < script.size(); ++i) {
    TraceStep step;
    step.index = i;
    step.op = describe(script[i]);
    const auto report = check_admissible(cur, script[i], decl, mode);
    step.admissible = report.ok();
    if (!step.admissible) {
      step.note = report.describe();
      v.reason = "step " + std::to_string(i + 1) + " " + step.op + " is not admissible: " + step.note;
      v.trace.push_back(std::move(step));
      v.failed_step = i;
      v.final_complex = cur;
      return v;
    }
    const auto inv = invert(script[i], cur, decl, mode);
    step.invertible = inv.invertible;
    if (!inv.invertible) {
      step.note = inv.reason;
      v.reason = "step " + std::to_string(i + 1) + " " + step.op + " is not invertible: " + inv.reason;
      v.trace.push_back(std::move(step));
      v.failed_step = i;
      v.final_complex = cur;
      return v;
    }
    cur = apply_unchecked(cur, script[i]);
    step.fingerprint = complex_fingerprint(cur);
    v.trace.push_back(std::move(step));
  }
  v.final_complex = cur;
  if (!labelled_equal(cur, l)) {
    v.failed_step = script.size();
    v.reason = "final complex differs from the target in " + std::to_string(labelled_distance(cur, l)) + " simplices";
    return v;
  }
  v.accepted = true;
  return v;
}

std::vector<EquivalenceOp> invert_script(const LabelledComplex& k, const std::vector<EquivalenceOp>& script,
                                         const ConceptDeclaration& decl, Mode mode) {
  std::vector<std::vector<EquivalenceOp>> inverses;
  LabelledComplex cur = k;
  for (std::size_t i = 0; i < script.size(); ++i) {
    auto inv = invert(script[i], cur, decl, mode);
    if (!inv.invertible)
      throw OperationError("step " + std::to_string(i + 1) + " " + describe(script[i]) +
                           " cannot be inverted: " + inv.reason);
    inverses.push_back(std::move(inv.inverse));
    cur = apply_unchecked(cur, script[i]);
  }
  std::vector<EquivalenceOp> out;
  for (auto it = inverses.rbegin(); it != inverses.rend(); ++it) out.insert(out.end(), it->begin(), it->end());
  return out;
}

namespace {

std::string state_key(const LabelledComplex& k) {
  std::string key;
  for (const auto& s : k.simplices()) {
    for (Vertex v : s.vertices()) key.append(reinterpret_cast<const char*>(&v), sizeof v);
    key.push_back('\xff');
  }
  return key;
}

constexpr std::size_t unreachable = static_cast<std::size_t>(-1);

// Every op drops at most two labels and adds at most two, and new labels only
// come from a class already present.
std::size_t lower_bound(const LabelledComplex& state, const std::set<std::string>& goal,
                        const ConceptDeclaration& decl) {
  const auto have = vertex_labels(state);
  std::size_t missing = 0, extra = 0;
  for (const auto& t : goal) {
    if (have.count(t)) continue;
    ++missing;
    const auto eq = decl.equivalents(t);
    if (std::none_of(eq.begin(), eq.end(), [&](const std::string& x) { return have.count(x) > 0; }))
      return unreachable;
  }
  for (const auto& h : have) extra += goal.count(h) ? 0 : 1;
  return std::max((missing + 1) / 2, (extra + 1) / 2);
}

struct Candidate {
  int number;
  std::vector<std::string> key;
  EquivalenceOp op;
};

std::vector<Candidate> candidates(const LabelledComplex& state, const ConceptDeclaration& decl) {
  const auto& u = *state.universe();
  const auto verts = state.vertices();
  const auto have = vertex_labels(state);
  std::vector<Candidate> out;

  auto fresh_for = [&](const std::string& label) {
    std::vector<std::string> f;
    for (auto& x : decl.equivalents(label))
      if (!have.count(x)) f.push_back(std::move(x));
    std::sort(f.begin(), f.end());
    return f;
  };

  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      std::string a = u.label(verts[i]), b = u.label(verts[j]);
      if (!decl.same_class({a, b}) || a == b) continue;
      if (b < a) std::swap(a, b);
      if (adjacent(state, verts[i], verts[j])) {
        for (const auto& c : fresh_for(a)) out.push_back({1, {a, b, c}, IdentifyAdjacent{a, b, c}});
      } else {
        auto targets = fresh_for(a);
        targets.push_back(a);
        targets.push_back(b);
        for (const auto& c : targets)
          out.push_back({2, {a, b, c}, IdentifyNonadjacent{{IdentifyGroup{{a, b}, c}}}});
      }
    }

  for (Vertex v : verts) {
    const std::string a = u.label(v);
    const auto fresh = fresh_for(a);
    for (std::size_t i = 0; i < fresh.size(); ++i)
      for (std::size_t j = i + 1; j < fresh.size(); ++j)
        out.push_back({3, {a, fresh[i], fresh[j]}, Split{a, fresh[i], fresh[j]}});
    for (const auto& c : fresh) {
      Include inc;
      for (const auto& s : state.simplices()) {
        if (!s.contains(v)) continue;
        std::vector<std::string> labels;
        for (Vertex w : s.vertices()) labels.push_back(w == v ? c : u.label(w));
        inc.simplices.push_back(std::move(labels));
      }
      inc.groups = {IdentifyGroup{{a, c}, a}};
      out.push_back({4, {a, c}, std::move(inc)});
      out.push_back({5, {a, c}, Substitute{a, c}});
    }
  }
  std::sort(out.begin(), out.end(), [](const Candidate& x, const Candidate& y) {
    return std::tie(x.number, x.key) < std::tie(y.number, y.key);
  });
  return out;
}

}  // namespace

SearchResult search_equivalence(const LabelledComplex& k, const LabelledComplex& l, const ConceptDeclaration& decl,
                                const SearchOptions& options) {
  UniversePtr work = extend_universe(k.universe(), l.universe()->labels());
  const auto extra = decl.labels();
  work = extend_universe(work, extra);
  const LabelledComplex start = relabel_into(k, work);
  const LabelledComplex goal = relabel_into(l, work);
  const auto goal_labels = vertex_labels(goal);

  struct Node {
    LabelledComplex complex;
    std::size_t parent;
    std::optional<EquivalenceOp> op;
    std::size_t depth;
  };
  std::vector<Node> nodes;
  std::unordered_set<std::string> seen;

  auto trace_back = [&](std::size_t i) {
    std::vector<EquivalenceOp> script;
    for (; nodes[i].op; i = nodes[i].parent) script.push_back(*nodes[i].op);
    std::reverse(script.begin(), script.end());
    return script;
  };

  SearchResult result;
  nodes.push_back({start, 0, std::nullopt, 0});
  seen.insert(state_key(start));
  result.states = 1;
  if (labelled_equal(start, goal)) {
    result.found = true;
    return result;
  }
  const std::size_t h0 = lower_bound(start, goal_labels, decl);
  if (h0 == unreachable || h0 > options.max_ops) return result;

  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    const std::size_t at = frontier.front();
    frontier.pop_front();
    if (nodes[at].depth >= options.max_ops) continue;
    const LabelledComplex state = nodes[at].complex;
    const std::size_t depth = nodes[at].depth + 1;
    for (auto& cand : candidates(state, decl)) {
      if (!check_admissible(state, cand.op, decl, options.mode).ok()) continue;
      LabelledComplex next = apply_unchecked(state, cand.op);
      std::string key = state_key(next);
      if (seen.count(key)) continue;
      const std::size_t h = lower_bound(next, goal_labels, decl);
      if (h == unreachable || depth + h > options.max_ops) continue;
      if (!invert(cand.op, state, decl, options.mode).invertible) continue;
      seen.insert(std::move(key));
      if (++result.states > options.max_states)
        throw BudgetError("equivalence search exceeded " + std::to_string(options.max_states) + " states");
      nodes.push_back({std::move(next), at, std::move(cand.op), depth});
      if (labelled_equal(nodes.back().complex, goal)) {
        result.found = true;
        result.script = trace_back(nodes.size() - 1);
        return result;
      }
      frontier.push_back(nodes.size() - 1);
    }
  }
  return result;
}

}  // namespace modelhom
