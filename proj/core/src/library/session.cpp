#include "sctt/library/session.hpp"

#include <fstream>
#include <sstream>

#include "sctt/syntax/resolve.hpp"
#include "sctt/syntax/surface.hpp"
#include "sctt/syntax/token.hpp"

namespace sctt::library {

FileReport Session::check_source(const std::string& file, std::string_view source) {
  FileReport report{file, 0, {}};
  std::vector<syntax::Declaration> decls;
  try {
    decls = syntax::parse_module(syntax::tokenize(source));
  } catch (const Error& e) {
    report.diagnostics.push_back(e.to_diagnostic(file));
    return report;
  }
  for (const auto& d : decls) {
    ++report.declarations;
    try {
      auto resolved = syntax::resolve_declaration(d, kernel_.scope());
      kernel_.check_declaration(resolved);
    } catch (const Error& e) {
      report.diagnostics.push_back(e.to_diagnostic(file));
    }
    if (d.kind != syntax::DeclKind::Check && kernel_.lookup(d.name) && !files_.count(d.name)) files_[d.name] = file;
  }
  return report;
}

FileReport Session::check_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return check_source(path.filename().string(), buf.str());
}

std::optional<std::string> Session::file_of(const std::string& name) const {
  auto it = files_.find(name);
  if (it == files_.end()) return std::nullopt;
  return it->second;
}

std::string Session::normalize(std::string_view term_text) const {
  auto surface = syntax::parse_term(syntax::tokenize(term_text));
  auto term = syntax::resolve_term(*surface, kernel_.scope());
  const kernel::TeleContext root;
  auto type = kernel_.infer(root, term);
  auto normal = kernel_.normalize(root, term, type);
  return syntax::pretty_print(*syntax::to_surface(*normal));
}

const std::vector<std::string>& prelude_files() {
  static const std::vector<std::string> files{
      "00_prelude.stt", "01_paths.stt",     "02_contract.stt", "03_equiv.stt",  "04_univalence.stt",
      "05_shapes_hom.stt", "06_segal.stt", "07_rezk.stt",     "08_yoneda.stt",
  };
  return files;
}

std::vector<std::filesystem::path> prelude_paths(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> out;
  for (const auto& f : prelude_files())
    if (std::filesystem::exists(dir / f)) out.push_back(dir / f);
  return out;
}

Session load_prelude(const std::vector<std::filesystem::path>& paths, kernel::KernelOptions options) {
  Session s(options);
  for (const auto& p : paths) {
    FileReport r = s.check_file(p);
    if (!r.diagnostics.empty()) {
      const auto& d = r.diagnostics.front();
      throw LibraryError(LibraryError::Kind::CheckFailed, r.file,
                         r.file + ": " + code_string(d.code) + " " + d.message);
    }
  }
  return s;
}

const std::vector<RequiredItem>& required_items() {
  static const std::vector<RequiredItem> items{
      {"a", "inv", "inverse of an identification", {}},
      {"b", "concat", "composition of identifications", {}},
      {"c", "assoc", "associativity of concat", {}},
      {"d", "isContr", "contractible types", {}},
      {"e", "isEquiv", "equivalences by contractible fibers", {}},
      {"e", "Equiv", "type of equivalences", {}},
      {"f", "id_to_equiv", "identifications of types to equivalences", {}},
      {"g", "ua", "univalence", {"ua"}},
      {"h", "funext", "function extensionality", {"funext"}},
      {"i", "hom", "arrows of a type", {}},
      {"j", "hom2", "2-simplices over a composable pair", {}},
      {"k", "isSegal", "Segal condition", {}},
      {"l", "comp", "composition in a Segal type", {}},
      {"m", "idarr", "identity arrows", {}},
      {"n", "comp_unit_left", "left unit law", {}},
      {"n", "comp_unit_right", "right unit law", {}},
      {"n", "comp_assoc", "associativity of composition", {}},
      {"o", "Iso", "isomorphisms", {}},
      {"o", "isRezk", "completeness", {}},
      {"p", "evid", "evaluation at the identity arrow", {}},
      {"q", "yon", "post-composition", {}},
      {"r", "fiberwise_naturality", "naturality of fiberwise maps", {}},
      {"s", "yoneda", "the Yoneda lemma", {"funext"}},
      {"s", "yoneda_evid_yon", "evid after yon is the identity", {}},
      {"s", "yoneda_yon_evid", "yon after evid is the identity", {"funext"}},
  };
  return items;
}

bool LibraryReport::all_ok() const {
  for (const auto& i : items)
    if (!i.ok) return false;
  return true;
}

LibraryReport verify_library(const Session& session) {
  LibraryReport report;
  for (const auto& item : required_items()) {
    ItemStatus st{item, false, {}, {}, false};
    const kernel::GlobalEntry* g = session.kernel().lookup(item.name);
    if (g) {
      st.present = true;
      st.file = session.file_of(item.name).value_or("");
      st.axioms = g->axioms;
      st.ok = g->status != kernel::GlobalStatus::Opaque && st.axioms == item.allowed_axioms;
    }
    report.items.push_back(std::move(st));
  }
  return report;
}

std::set<std::string> report_axiom_usage(const Session& session, const std::string& item) {
  const kernel::GlobalEntry* g = session.kernel().lookup(item);
  if (!g) throw LibraryError(LibraryError::Kind::MissingItem, item, "missing library item '" + item + "'");
  return g->axioms;
}

std::string ManifestLine::to_string() const {
  std::string ax;
  for (const auto& a : axioms) ax += (ax.empty() ? "" : ",") + a;
  return name + " " + file + " " + (ax.empty() ? "-" : ax);
}

std::vector<ManifestLine> manifest(const Session& session) {
  std::vector<ManifestLine> out;
  for (const auto& name : session.kernel().order()) {
    const kernel::GlobalEntry* g = session.kernel().lookup(name);
    out.push_back({name, session.file_of(name).value_or(""), g->axioms});
  }
  return out;
}

}  // namespace sctt::library
