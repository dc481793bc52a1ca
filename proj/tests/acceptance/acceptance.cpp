// Prints one PASS/FAIL line per acceptance criterion; exits non-zero if any
// criterion fails.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "j_instances.hpp"
#include "negative.hpp"
#include "random_terms.hpp"
#include "sctt/cli.hpp"
#include "sctt/library/session.hpp"
#include "sctt/syntax/resolve.hpp"
#include "sctt/syntax/surface.hpp"
#include "tope_sweep.hpp"

using namespace sctt;
namespace fs = std::filesystem;

namespace {

const fs::path kRoot = SCTT_SOURCE_DIR;
const fs::path kLib = kRoot / "lib";

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

void collect_globals(const kernel::Term& t, std::set<std::string>& out) {
  if (t.kind == kernel::TermKind::Global) out.insert(t.name);
  for (const auto& a : t.args) collect_globals(*a, out);
  for (const auto& c : t.clauses) collect_globals(*c.body, out);
}

Outcome library_acceptance() {
  std::vector<std::string> args{"--no-color", "--lib-path", kLib.string(), "check", "--with-lib"};
  for (const auto& p : library::prelude_paths(kLib)) args.push_back(p.string());
  std::ostringstream out, err;
  const auto t0 = std::chrono::steady_clock::now();
  const int code = cli::run(args, out, err);
  const double secs = seconds_since(t0);
  auto report = library::verify_library(library::load_prelude(library::prelude_paths(kLib)));
  std::size_t green = 0;
  for (const auto& st : report.items) green += st.ok;
  std::ostringstream d;
  d << "exit " << code << ", " << green << "/" << report.items.size() << " items (a)-(s) green, " << secs << " s; "
    << out.str().substr(0, out.str().find('\n'));
  return {code == 0 && report.all_ok() && secs < 10.0, d.str()};
}

Outcome yoneda_reproduction() {
  auto s = library::load_prelude(library::prelude_paths(kLib));
  const auto& ax = s.kernel().axioms();
  const auto yoneda = library::report_axiom_usage(s, "yoneda");
  const auto left = library::report_axiom_usage(s, "yoneda_evid_yon");
  const auto right = library::report_axiom_usage(s, "yoneda_yon_evid");
  const auto& funext_users = ax.dependents("funext");
  std::set<std::string> left_refs;
  collect_globals(*s.kernel().lookup("yoneda_evid_yon")->body_term, left_refs);
  const bool unital = left_refs.count("comp_unit_right") && !left_refs.count("funext");
  const bool ok = yoneda == std::set<std::string>{"funext"} && left.empty() &&
                  right == std::set<std::string>{"funext"} && funext_users.count("yoneda") &&
                  !funext_users.count("yoneda_evid_yon") && unital && ax.usage_count("ua") == 1;
  std::ostringstream d;
  d << "axioms(yoneda) = {" << (yoneda.empty() ? "" : *yoneda.begin()) << "}, evid-after-yon uses "
    << (left.empty() ? "no axioms" : "axioms") << " and " << (unital ? "comp_unit_right" : "something else")
    << ", funext used by " << ax.usage_count("funext") << " declarations";
  return {ok, d.str()};
}

Outcome segal_composition() {
  auto run = [](const char* file) {
    auto s = library::load_prelude(library::prelude_paths(kLib));
    return s.check_source(file, slurp(kRoot / "tests/corpus" / file));
  };
  auto pos = run("segal_context.stt");
  auto neg = run("segal_without_hypothesis.stt");
  bool neg_ok = neg.diagnostics.size() == 2;
  for (const auto& d : neg.diagnostics) neg_ok = neg_ok && d.code == ErrorCode::TypeMismatch;
  std::ostringstream d;
  d << "with isSegal: " << pos.diagnostics.size() << " errors; without: " << neg.diagnostics.size()
    << " errors (E005 expected on comp and its witness)";
  return {pos.diagnostics.empty() && neg_ok, d.str()};
}

Outcome j_computation() {
  auto s = library::load_prelude(library::prelude_paths(kLib));
  s.check_source("j_context.stt", slurp(kRoot / "tests/corpus/j_context.stt"));
  const auto& k = s.kernel();
  auto term = [&](const std::string& src) {
    return syntax::resolve_term(*syntax::parse_term(syntax::tokenize(src)), k.scope());
  };
  const kernel::TeleContext root;
  std::size_t conv_ok = 0, check_ok = 0;
  for (const auto& j : testkit::j_instances()) {
    try {
      auto redex = term(j.redex());
      auto ty = k.infer(root, redex);
      if (k.conv(root, ty, k.eval(root.env(), redex), k.eval(root.env(), term(j.reduct())))) ++conv_ok;
    } catch (const Error&) {
    }
    if (s.check_source("j.stt", j.as_check()).diagnostics.empty()) ++check_ok;
  }
  std::size_t unit_ok = 0;
  for (const auto& [lhs, rhs] : testkit::right_unit_instances()) {
    auto l = term(lhs), r = term(rhs);
    auto ty = k.infer(root, l);
    if (kernel::term_equal(*k.normalize(root, l, ty), *k.normalize(root, r, ty))) ++unit_ok;
  }
  const std::size_t n = testkit::j_instances().size(), m = testkit::right_unit_instances().size();
  std::ostringstream d;
  d << conv_ok << "/" << n << " redexes convertible with their base case, " << check_ok << "/" << n
    << " as checked declarations, " << unit_ok << "/" << m << " concat-refl normal forms equal";
  return {n >= 20 && conv_ok == n && check_ok == n && unit_ok == m, d.str()};
}

Outcome tope_completeness() {
  const auto t0 = std::chrono::steady_clock::now();
  std::uint64_t sequents = 0, refuted = 0, laws = 0;
  bool ok = true;
  std::string example;
  for (int n = 1; n <= 3; ++n) {
    auto r = testkit::sweep(n);
    sequents += r.sequents;
    refuted += r.refuted;
    laws += r.laws;
    ok = ok && r.ok();
    if (!r.examples.empty() && example.empty()) example = "; first failure: " + r.examples.front();
  }
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << sequents << " sequents on <= 3 variables (" << refuted << " refuted), " << laws << " law instances, " << secs
    << " s" << example;
  return {ok && sequents >= 10000 && secs < 60.0, d.str()};
}

Outcome parser_roundtrip() {
  std::size_t corpus = 0, corpus_ok = 0;
  std::vector<fs::path> files = library::prelude_paths(kLib);
  for (const auto& dir : {kRoot / "tests/corpus", kRoot / "tests/negative"})
    for (const auto& f : testkit::negative_files(dir)) files.push_back(f);
  for (const auto& f : files) {
    std::vector<syntax::Declaration> decls;
    try {
      decls = syntax::parse_module(syntax::tokenize(slurp(f)));
    } catch (const Error&) {
      continue;  // lexically or syntactically ill-formed on purpose
    }
    for (const auto& d : decls)
      for (const auto& t : {d.type, d.body}) {
        if (!t) continue;
        ++corpus;
        if (syntax::alpha_equal(*syntax::parse_term(syntax::tokenize(syntax::pretty_print(*t))), *t)) ++corpus_ok;
      }
  }
  testkit::TermGenerator gen(2024);
  std::size_t random_ok = 0;
  const std::size_t random = 1000;
  for (std::size_t i = 0; i < random; ++i) {
    auto t = gen.term(2 + static_cast<int>(i % 5));
    try {
      if (syntax::alpha_equal(*syntax::parse_term(syntax::tokenize(syntax::pretty_print(*t))), *t)) ++random_ok;
    } catch (const Error&) {
    }
  }
  std::ostringstream d;
  d << corpus_ok << "/" << corpus << " corpus terms, " << random_ok << "/" << random << " random terms";
  return {corpus > 0 && corpus_ok == corpus && random_ok == random, d.str()};
}

Outcome negative_corpus() {
  const auto files = testkit::negative_files(kRoot / "tests/negative");
  std::size_t ok = 0;
  std::string first_bad;
  std::set<std::string> codes;
  for (const auto& f : files) {
    const auto c = testkit::load_negative(f);
    if (!c.expected) {
      if (first_bad.empty()) first_bad = f.filename().string() + ": " + c.header_error;
      continue;
    }
    codes.insert(c.expected->code);
    library::Session s;
    auto r = s.check_source(f.filename().string(), c.source);
    if (!r.diagnostics.empty() && code_string(r.diagnostics.front().code) == c.expected->code &&
        r.diagnostics.front().span == c.expected->span)
      ++ok;
    else if (first_bad.empty())
      first_bad = f.filename().string();
  }
  std::vector<std::string> args{"--output", "structured", "check"};
  for (const auto& f : files) args.push_back(f.string());
  std::ostringstream o1, o2, e1, e2;
  cli::run(args, o1, e1);
  cli::run(args, o2, e2);
  const bool identical = o1.str() == o2.str() && !o1.str().empty();
  std::ostringstream d;
  d << ok << "/" << files.size() << " files with expected code and span, " << codes.size()
    << " distinct codes, structured output " << (identical ? "byte-identical" : "differs") << " across two runs";
  if (!first_bad.empty()) d << "; first mismatch: " << first_bad;
  return {files.size() >= 25 && ok == files.size() && identical, d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"library-acceptance", library_acceptance}, {"yoneda-reproduction", yoneda_reproduction},
      {"segal-composition", segal_composition},   {"j-computation", j_computation},
      {"tope-solver-completeness", tope_completeness}, {"parser-roundtrip", parser_roundtrip},
      {"negative-corpus", negative_corpus},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
