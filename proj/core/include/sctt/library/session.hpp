#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sctt/diagnostics.hpp"
#include "sctt/kernel/kernel.hpp"

namespace sctt::library {

struct FileReport {
  std::string file;
  std::size_t declarations = 0;
  std::vector<Diagnostic> diagnostics;
};

// A growing environment: files are checked in order, each seeing everything
// declared before it. Checking continues past failing declarations.
class Session {
public:
  explicit Session(kernel::KernelOptions options = {}) : kernel_(options) {}

  FileReport check_source(const std::string& file, std::string_view source);
  // Throws IoError when the file cannot be read.
  FileReport check_file(const std::filesystem::path& path);

  const kernel::Kernel& kernel() const { return kernel_; }
  // The file that declared `name`, if any.
  std::optional<std::string> file_of(const std::string& name) const;
  // Normal form of a term in the current environment (type inferred).
  std::string normalize(std::string_view term_text) const;

private:
  kernel::Kernel kernel_;
  std::map<std::string, std::string> files_;
};

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A library item is missing, or depends on an axiom it should not.
class LibraryError : public std::runtime_error {
public:
  enum class Kind { MissingItem, UnexpectedAxiomUse, CheckFailed };
  LibraryError(Kind kind, std::string item, const std::string& what)
      : std::runtime_error(what), kind_(kind), item_(std::move(item)) {}
  Kind kind() const { return kind_; }
  const std::string& item() const { return item_; }

private:
  Kind kind_;
  std::string item_;
};

// Library files in dependency order.
const std::vector<std::string>& prelude_files();

// Files under `dir`, in prelude order, that exist.
std::vector<std::filesystem::path> prelude_paths(const std::filesystem::path& dir);

// Checks the files in order; throws LibraryError(CheckFailed) naming the first
// failing declaration.
Session load_prelude(const std::vector<std::filesystem::path>& paths, kernel::KernelOptions options = {});

struct RequiredItem {
  std::string tag;   // "a" .. "s"
  std::string name;  // declaration name
  std::string description;
  std::set<std::string> allowed_axioms;
};
const std::vector<RequiredItem>& required_items();

struct ItemStatus {
  RequiredItem item;
  bool present = false;
  std::string file;
  std::set<std::string> axioms;
  bool ok = false;
};

struct LibraryReport {
  std::vector<ItemStatus> items;
  bool all_ok() const;
};

LibraryReport verify_library(const Session& session);

// Transitive postulate dependencies; throws LibraryError(MissingItem).
std::set<std::string> report_axiom_usage(const Session& session, const std::string& item);

struct ManifestLine {
  std::string name;
  std::string file;
  std::set<std::string> axioms;
  std::string to_string() const;  // "name file ax1,ax2" or "name file -"
};
std::vector<ManifestLine> manifest(const Session& session);

}  // namespace sctt::library
