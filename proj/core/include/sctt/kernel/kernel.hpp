#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "sctt/kernel/context.hpp"
#include "sctt/kernel/term.hpp"
#include "sctt/kernel/value.hpp"
#include "sctt/syntax/resolve.hpp"

namespace sctt::kernel {

enum class GlobalStatus {
  Defined,    // unfolds to its value
  Postulate,  // axiom; evaluates to a neutral constant
  Opaque,     // type checked but body rejected; kept so later items still resolve
};

struct GlobalEntry {
  std::string name;
  GlobalStatus status;
  TermPtr type_term;
  TermPtr body_term;
  Val type;
  Val value;
  std::set<std::string> axioms;  // transitive postulate dependencies
};

// Postulates and, for each axiom, the declarations that depend on it.
class AxiomTable {
public:
  void add_axiom(const std::string& name, Val type);
  void record(const std::string& decl, const std::set<std::string>& axioms);

  bool is_axiom(const std::string& name) const { return types_.count(name) != 0; }
  const std::set<std::string>& dependents(const std::string& axiom) const;
  std::size_t usage_count(const std::string& axiom) const { return dependents(axiom).size(); }
  std::vector<std::string> axioms() const;

private:
  std::map<std::string, Val> types_;
  std::map<std::string, std::set<std::string>> dependents_;
};

struct KernelOptions {
  std::size_t cube_cap = shape::kDefaultCubeCap;
};

// Evaluation, readback, conversion and bidirectional checking over a growing
// prefix of checked declarations.
class Kernel {
public:
  explicit Kernel(KernelOptions options = {}) : options_(options) {}

  // Checks and binds one declaration. On failure the error is rethrown with
  // the declaration named; a def whose type checked is still bound, opaquely.
  void check_declaration(const syntax::ResolvedDecl& decl);

  const GlobalEntry* lookup(const std::string& name) const;
  const std::vector<std::string>& order() const { return order_; }
  const AxiomTable& axioms() const { return axioms_; }
  syntax::GlobalScope scope() const;

  Val eval(const Env& env, const TermPtr& t) const;
  TermPtr quote(const TeleContext& ctx, const Val& type, const Val& v) const;
  TermPtr quote_type(const TeleContext& ctx, const Val& type) const;
  bool conv(const TeleContext& ctx, const Val& type, const Val& a, const Val& b) const;
  bool conv_type(const TeleContext& ctx, const Val& a, const Val& b) const;
  // Unfolds boundary clauses and case splits that the tope context decides.
  Val force(const TeleContext& ctx, const Val& v) const;

  Val infer(const TeleContext& ctx, const TermPtr& t) const;
  void check(const TeleContext& ctx, const TermPtr& t, const Val& type) const;
  TermPtr normalize(const TeleContext& ctx, const TermPtr& t, const Val& type) const;

  // Eliminators on values.
  Val apply(const Val& f, const Val& arg) const;
  Val first(const Val& p) const;
  Val second(const Val& p) const;
  Val ext_apply(const Val& e, const std::vector<shape::Point>& points) const;
  Val idj(const std::vector<Val>& motive, const Val& path) const;
  Val instantiate(const Closure& c, const Val& arg) const;
  ExtInstance instantiate_ext(const Val& ext, const std::vector<shape::Point>& points) const;

  // Renders a value for diagnostics.
  std::string show(const TeleContext& ctx, const Val& type, const Val& v) const;
  std::string show_type(const TeleContext& ctx, const Val& type) const;

private:
  KernelOptions options_;
  std::map<std::string, GlobalEntry> globals_;
  std::vector<std::string> order_;
  AxiomTable axioms_;
  // Bumped whenever a reduction was blocked on an undecided tope.
  mutable std::size_t blocked_ = 0;

  bool conv_direct(const TeleContext& ctx, const Val& type, const Val& a, const Val& b) const;
  bool conv_type_direct(const TeleContext& ctx, const Val& a, const Val& b) const;
  bool conv_cases(const TeleContext& ctx, const Val& type, const Val& a, const Val& b, bool as_type) const;
  Val conv_neutral(const TeleContext& ctx, const Neutral& a, const Neutral& b) const;
  bool conv_points(const TeleContext& ctx, const std::vector<shape::Point>& a,
                   const std::vector<shape::Point>& b) const;
  Val force_neutral(const TeleContext& ctx, const Neutral& n) const;
  Val neutral_type(const TeleContext& ctx, const Neutral& n) const;
  TermPtr quote_neutral(const TeleContext& ctx, const Neutral& n, Val* type) const;
  TermPtr quote_untyped(const TeleContext& ctx, const Val& v) const;
  Val j_motive_type(const Val& a) const;
  Val j_base_type(const Val& a, const Val& motive) const;
  std::set<std::string> dependencies(const std::set<std::string>& references) const;
};

// Points and topes between de Bruijn indices (core terms) and levels (values).
shape::Point point_to_level(const Env& env, const shape::Point& p);
shape::Tope tope_to_levels(const Env& env, const shape::Tope& phi);
shape::Tope tope_to_indices(int depth, const shape::Tope& phi);

// The eta-expansion of an unapplied projection.
TermPtr eta_projection(TermKind kind);

}  // namespace sctt::kernel
