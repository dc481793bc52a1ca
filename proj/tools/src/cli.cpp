#include "sctt/cli.hpp"

#include <unistd.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "sctt/library/session.hpp"
#include "sctt/shape/weak_order.hpp"
#include "sctt/syntax/resolve.hpp"
#include "sctt/syntax/surface.hpp"
#include "sctt/syntax/token.hpp"

namespace sctt::cli {

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct Config {
  std::size_t cube_cap = shape::kDefaultCubeCap;
  bool color = true;
  bool structured = false;
  std::vector<std::string> lib_paths;
};

struct Source {
  std::string name;
  std::string text;
};

bool read_file(const fs::path& p, std::string& out) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

// 1-based line and column of a byte offset.
std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

class Printer {
public:
  Printer(const Config& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  void diagnostic(const Diagnostic& d, const std::string& text) {
    if (cfg_.structured) {
      json j{{"kind", "diagnostic"},
             {"code", code_string(d.code)},
             {"file", d.file},
             {"start", d.span.start},
             {"end", d.span.end},
             {"severity", std::string(severity_string(d.severity))},
             {"message", d.message}};
      if (d.counter_model) j["counter_model"] = *d.counter_model;
      out_ << j.dump() << '\n';
      return;
    }
    auto [line, col] = line_col(text, d.span.start);
    const std::string sev(severity_string(d.severity));
    out_ << d.file << ':' << line << ':' << col << ": " << paint(sev + "[" + code_string(d.code) + "]") << ": "
         << d.message << '\n';
  }

  void summary(std::size_t decls, std::size_t errors) {
    if (cfg_.structured) {
      out_ << json{{"kind", "summary"}, {"declarations", decls}, {"errors", errors}}.dump() << '\n';
      return;
    }
    out_ << "checked " << decls << " declarations, " << errors << " errors\n";
  }

private:
  const Config& cfg_;
  std::ostream& out_;

  std::string paint(const std::string& s) const { return cfg_.color ? "\x1b[1;31m" + s + "\x1b[0m" : s; }
};

// Library directories: each --lib-path in order (first hit wins per file),
// else SCTT_LIB, else the build-time default.
std::vector<fs::path> library_dirs(const Config& cfg) {
  std::vector<fs::path> dirs;
  for (const auto& p : cfg.lib_paths) dirs.emplace_back(p);
  if (dirs.empty()) {
    if (const char* env = std::getenv("SCTT_LIB"); env && *env)
      dirs.emplace_back(env);
    else
      dirs.emplace_back(SCTT_DEFAULT_LIB);
  }
  return dirs;
}

std::vector<fs::path> library_files(const Config& cfg) {
  std::vector<fs::path> out;
  const auto dirs = library_dirs(cfg);
  for (const auto& f : library::prelude_files())
    for (const auto& d : dirs)
      if (fs::exists(d / f)) {
        out.push_back(d / f);
        break;
      }
  return out;
}

fs::path canonical_or_self(const fs::path& p) {
  std::error_code ec;
  auto c = fs::weakly_canonical(p, ec);
  return ec ? p : c;
}

struct RunResult {
  std::size_t declarations = 0;
  std::size_t errors = 0;
};

// Checks sources in order into `session`, printing diagnostics.
RunResult check_sources(library::Session& session, const std::vector<Source>& sources, Printer& printer) {
  RunResult r;
  for (const auto& s : sources) {
    auto report = session.check_source(s.name, s.text);
    r.declarations += report.declarations;
    r.errors += report.diagnostics.size();
    for (const auto& d : report.diagnostics) printer.diagnostic(d, s.text);
  }
  return r;
}

// Reads the library (if requested) followed by `files`. Returns false on I/O
// failure, after reporting it.
bool gather(const Config& cfg, bool with_lib, const std::vector<std::string>& files, std::vector<Source>& out,
            std::ostream& err) {
  std::vector<fs::path> lib;
  if (with_lib) lib = library_files(cfg);
  for (const auto& p : lib) {
    Source s{p.filename().string(), {}};
    if (!read_file(p, s.text)) {
      err << "sctt: cannot read " << p.string() << '\n';
      return false;
    }
    out.push_back(std::move(s));
  }
  for (const auto& f : files) {
    const fs::path p(f);
    bool dup = false;
    for (const auto& l : lib) dup = dup || canonical_or_self(l) == canonical_or_self(p);
    if (dup) continue;
    Source s{p.filename().string(), {}};
    if (!fs::is_regular_file(p) || !read_file(p, s.text)) {
      err << "sctt: cannot read " << f << '\n';
      return false;
    }
    out.push_back(std::move(s));
  }
  return true;
}

int cmd_check(const Config& cfg, bool with_lib, const std::vector<std::string>& files, std::ostream& out,
              std::ostream& err) {
  std::vector<Source> sources;
  if (!gather(cfg, with_lib, files, sources, err)) return 2;
  library::Session session(kernel::KernelOptions{cfg.cube_cap});
  Printer printer(cfg, out);
  auto r = check_sources(session, sources, printer);
  printer.summary(r.declarations, r.errors);
  return r.errors == 0 ? 0 : 1;
}

int cmd_normalize(const Config& cfg, bool with_lib, const std::string& file, const std::string& term,
                  std::ostream& out, std::ostream& err) {
  std::vector<Source> sources;
  if (!gather(cfg, with_lib, {file}, sources, err)) return 2;
  library::Session session(kernel::KernelOptions{cfg.cube_cap});
  Printer printer(cfg, out);
  auto r = check_sources(session, sources, printer);
  if (r.errors) {
    printer.summary(r.declarations, r.errors);
    return 1;
  }
  try {
    const std::string normal = session.normalize(term);
    if (cfg.structured)
      out << json{{"kind", "normal_form"}, {"term", term}, {"normal_form", normal}}.dump() << '\n';
    else
      out << normal << '\n';
    return 0;
  } catch (const Error& e) {
    printer.diagnostic(e.to_diagnostic("<term>"), term);
    return 1;
  }
}

int cmd_tope(const Config& cfg, const std::string& text, std::ostream& out, std::ostream& err) {
  try {
    auto seq = syntax::parse_sequent(syntax::tokenize(text));
    auto hyp = syntax::resolve_tope(*seq.hypothesis, seq.variables);
    auto goal = syntax::resolve_tope(*seq.goal, seq.variables);
    shape::CubeContext ctx{seq.variables};
    auto r = shape::tope_entails(ctx, hyp, goal, cfg.cube_cap);
    if (cfg.structured) {
      json j{{"kind", "entailment"}, {"valid", r.valid}};
      if (r.counter) j["counter_model"] = r.counter->to_string(ctx);
      out << j.dump() << '\n';
    } else if (r.valid) {
      out << "valid\n";
    } else {
      out << "invalid: " << r.counter->to_string(ctx) << '\n';
    }
    return r.valid ? 0 : 1;
  } catch (const Error& e) {
    err << "sctt: " << code_string(e.code()) << ": " << e.what() << '\n';
  } catch (const shape::ShapeError& e) {
    const char* code = e.kind() == shape::ShapeError::Kind::ContextTooLarge ? "E010" : "E011";
    err << "sctt: " << code << ": " << e.what() << '\n';
  }
  return 2;
}

int cmd_manifest(const Config& cfg, std::ostream& out, std::ostream& err) {
  std::vector<Source> sources;
  if (!gather(cfg, true, {}, sources, err)) return 2;
  library::Session session(kernel::KernelOptions{cfg.cube_cap});
  Printer printer(cfg, out);
  auto r = check_sources(session, sources, printer);
  auto report = library::verify_library(session);
  for (const auto& st : report.items) {
    if (!st.present) {
      err << "sctt: MissingItem(" << st.item.name << ")\n";
    } else if (!st.ok) {
      err << "sctt: item " << st.item.name << " is not verified\n";
    }
  }
  if (r.errors || !report.all_ok()) return 1;
  for (const auto& line : library::manifest(session)) {
    if (cfg.structured) {
      out << json{{"kind", "item"},
                  {"name", line.name},
                  {"file", line.file},
                  {"axioms", std::vector<std::string>(line.axioms.begin(), line.axioms.end())}}
                 .dump()
          << '\n';
    } else {
      out << line.to_string() << '\n';
    }
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"sctt: checker for simplicial type theory proofs"};
  app.set_help_all_flag("--help-all");
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  std::string output = "text";
  bool no_color = false;
  app.add_option("--lib-path", cfg.lib_paths, "library directory (repeatable)")
      ->check(CLI::ExistingDirectory)
      ->allow_extra_args(false);
  app.add_option("--output", output, "output format")->check(CLI::IsMember({"text", "structured"}));
  app.add_flag("--no-color", no_color, "disable colored output");
  app.add_option("--cube-cap", cfg.cube_cap, "maximum number of cube variables")->check(CLI::Range(1, 64));

  bool with_lib = false;
  std::vector<std::string> files;
  auto* check = app.add_subcommand("check", "type-check files");
  check->add_flag("--with-lib", with_lib, "check the standard library first");
  check->add_option("files", files, "source files")->required();

  std::string file, term;
  auto* normalize = app.add_subcommand("normalize", "print the normal form of a term");
  normalize->add_flag("--with-lib", with_lib, "load the standard library first");
  normalize->add_option("file", file, "source file providing the context")->required();
  normalize->add_option("term", term, "term to normalize")->required();

  std::string sequent;
  auto* tope = app.add_subcommand("tope", "decide a tope sequent 'x y |- HYP => GOAL'");
  tope->add_option("sequent", sequent)->required();

  auto* manifest = app.add_subcommand("manifest", "print the standard library manifest");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "sctt: " << e.what() << '\n';
    return 2;
  }
  cfg.structured = output == "structured";
  cfg.color = !no_color && !cfg.structured && &out == &std::cout && isatty(STDOUT_FILENO);

  if (check->parsed()) return cmd_check(cfg, with_lib, files, out, err);
  if (normalize->parsed()) return cmd_normalize(cfg, with_lib, file, term, out, err);
  if (tope->parsed()) return cmd_tope(cfg, sequent, out, err);
  if (manifest->parsed()) return cmd_manifest(cfg, out, err);
  return 2;
}

}  // namespace sctt::cli
