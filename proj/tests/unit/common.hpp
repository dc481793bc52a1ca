#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "sctt/library/session.hpp"

namespace sctt::testkit {

inline std::filesystem::path source_dir() { return SCTT_SOURCE_DIR; }
inline std::filesystem::path lib_dir() { return source_dir() / "lib"; }

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// The standard library, checked once per process.
inline const library::Session& library_session() {
  static const library::Session s = library::load_prelude(library::prelude_paths(lib_dir()));
  return s;
}

// The library followed by `extra` source text.
inline library::Session session_with(const std::string& extra, std::vector<Diagnostic>* diags = nullptr) {
  library::Session s = library_session();
  auto r = s.check_source("extra.stt", extra);
  if (diags) *diags = r.diagnostics;
  return s;
}

}  // namespace sctt::testkit
