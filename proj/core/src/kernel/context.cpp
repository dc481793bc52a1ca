#include "sctt/kernel/context.hpp"

#include <algorithm>

namespace sctt::kernel {

TeleContext::TeleContext()
    : models_(std::make_shared<const std::vector<shape::WeakOrder>>(std::vector<shape::WeakOrder>{{{}, 1}})) {}

TeleContext TeleContext::bind(const std::string& name, Val type) const {
  TeleContext c = *this;
  c.env_ = env_.push(vvar(depth()));
  c.types_.push_back(std::move(type));
  c.names_.push_back(name);
  c.cube_pos_.push_back(-1);
  return c;
}

TeleContext TeleContext::bind_cube(const std::vector<std::string>& names, std::size_t cap, Span span) const {
  if (cube_names_.size() + names.size() > cap)
    throw Error(ErrorCode::ContextTooLarge,
                "cube context would have " + std::to_string(cube_names_.size() + names.size()) +
                    " variables; the cap is " + std::to_string(cap),
                span);
  TeleContext c = *this;
  std::vector<shape::WeakOrder> models = *models_;
  for (const auto& n : names) {
    const int level = c.depth();
    c.env_ = c.env_.push(vpoint(shape::Point::variable(level)));
    c.types_.push_back(nullptr);
    c.names_.push_back(n);
    c.cube_pos_.push_back(static_cast<int>(c.cube_names_.size()));
    c.cube_names_.push_back(n);
    std::vector<shape::WeakOrder> next;
    for (const auto& m : models) {
      auto ext = shape::extend_weak_order(m);
      next.insert(next.end(), ext.begin(), ext.end());
    }
    models = std::move(next);
  }
  std::sort(models.begin(), models.end());
  c.models_ = std::make_shared<const std::vector<shape::WeakOrder>>(std::move(models));
  return c;
}

std::vector<shape::Point> TeleContext::last_points(std::size_t n) const {
  std::vector<shape::Point> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(shape::Point::variable(depth() - static_cast<int>(n - i)));
  return out;
}

bool TeleContext::holds(const shape::WeakOrder& m, const shape::Tope& phi) const {
  auto rank = [&](const shape::Point& p) {
    switch (p.kind) {
      case shape::Point::Kind::Zero: return 0;
      case shape::Point::Kind::One: return m.top;
      case shape::Point::Kind::Var: return m.rank.at(static_cast<std::size_t>(cube_pos_.at(static_cast<std::size_t>(p.var))));
    }
    return 0;
  };
  switch (phi.kind()) {
    case shape::TopeKind::Top: return true;
    case shape::TopeKind::Bot: return false;
    case shape::TopeKind::Leq: return rank(phi.lhs_point()) <= rank(phi.rhs_point());
    case shape::TopeKind::Equal: return rank(phi.lhs_point()) == rank(phi.rhs_point());
    case shape::TopeKind::And: return holds(m, phi.left()) && holds(m, phi.right());
    case shape::TopeKind::Or: return holds(m, phi.left()) || holds(m, phi.right());
  }
  return false;
}

TeleContext TeleContext::assume(const shape::Tope& phi) const {
  if (phi.kind() == shape::TopeKind::Top) return *this;
  std::vector<shape::WeakOrder> kept;
  for (const auto& m : *models_)
    if (holds(m, phi)) kept.push_back(m);
  TeleContext c = *this;
  c.models_ = std::make_shared<const std::vector<shape::WeakOrder>>(std::move(kept));
  return c;
}

bool TeleContext::entails(const shape::Tope& phi) const {
  if (phi.kind() == shape::TopeKind::Top) return true;
  return std::all_of(models_->begin(), models_->end(), [&](const auto& m) { return holds(m, phi); });
}

std::optional<std::string> TeleContext::refute(const shape::Tope& phi) const {
  for (const auto& m : *models_)
    if (!holds(m, phi)) return m.to_string(shape::CubeContext{cube_names_});
  return std::nullopt;
}

std::vector<TeleContext> TeleContext::split() const {
  std::vector<TeleContext> out;
  for (const auto& m : *models_) {
    TeleContext c = *this;
    c.models_ = std::make_shared<const std::vector<shape::WeakOrder>>(std::vector<shape::WeakOrder>{m});
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace sctt::kernel
