#pragma once

#include <random>

#include "sctt/syntax/surface.hpp"

namespace sctt::testkit {

// Random surface terms in which every name is bound: term variables by
// enclosing Pi/Sigma/lambda binders or the initial scope, cube variables by
// enclosing extension types and extension lambdas. Covers every node kind the
// parser produces, including left-nested tope connectives and shadowing.
class TermGenerator {
public:
  explicit TermGenerator(unsigned seed) : rng_(seed) {}
  syntax::SurfacePtr term(int depth, std::vector<std::string> scope = {"A", "f", "x"});

private:
  std::mt19937 rng_;
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  std::string fresh();
  syntax::SurfacePtr gen(int depth, std::vector<std::string>& scope, std::vector<std::string>& cubes);
  syntax::SurfacePtr tope(int depth, const std::vector<std::string>& cubes);
  syntax::SurfacePtr point(const std::vector<std::string>& cubes);
};

}  // namespace sctt::testkit
