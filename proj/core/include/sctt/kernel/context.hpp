#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sctt/kernel/value.hpp"
#include "sctt/shape/weak_order.hpp"

namespace sctt::kernel {

// Three-layer context: cube variables, the tope constraints on them, and
// typed variables. The tope layer is kept semantically, as the set of weak
// orders of the cube variables that satisfy every assumed tope; entailment is
// truth in all of them.
class TeleContext {
public:
  TeleContext();

  int depth() const { return static_cast<int>(names_.size()); }
  const Env& env() const { return env_; }
  const std::vector<std::string>& names() const { return names_; }
  // Type of a type-layer variable; null for cube variables.
  const Val& type_of(int level) const { return types_.at(static_cast<std::size_t>(level)); }
  bool is_cube(int level) const { return cube_pos_.at(static_cast<std::size_t>(level)) >= 0; }
  std::size_t cube_count() const { return cube_names_.size(); }

  // A fresh type-layer variable.
  TeleContext bind(const std::string& name, Val type) const;
  // Fresh cube variables; throws Error(ContextTooLarge) past `cap`.
  TeleContext bind_cube(const std::vector<std::string>& names, std::size_t cap, Span span) const;
  // The most recent `n` variables as point values, outermost first.
  std::vector<shape::Point> last_points(std::size_t n) const;

  TeleContext assume(const shape::Tope& phi) const;
  bool entails(const shape::Tope& phi) const;
  // A model of the context refuting phi, rendered, if any.
  std::optional<std::string> refute(const shape::Tope& phi) const;

  bool inconsistent() const { return models_->empty(); }
  // Every tope over the cube variables has a fixed truth value.
  bool decided() const { return models_->size() <= 1; }
  // One context per model of the tope layer.
  std::vector<TeleContext> split() const;

  bool holds(const shape::WeakOrder& m, const shape::Tope& phi) const;

private:
  Env env_;
  std::vector<Val> types_;
  std::vector<std::string> names_;
  std::vector<int> cube_pos_;
  std::vector<std::string> cube_names_;
  std::shared_ptr<const std::vector<shape::WeakOrder>> models_;
};

}  // namespace sctt::kernel
