#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/pole_form.hpp"
#include "hurwitz/topological_recursion.hpp"

namespace hurwitz {

/// On-disk memo table of PoleForms.
///
/// {"version": kVersion, "entries": [{"g", "k", "trunc_order", "fingerprint", "form"}, ...]}
/// A file with another version tag, or one that fails to parse, is ignored as a whole.
/// Entries whose fingerprint or order differ from the engine's are skipped on load but
/// kept when the file is rewritten.
class CacheFile {
 public:
  static constexpr const char* kVersion = "hurwitz-cache/1";

  struct Entry {
    int g;
    int k;
    int trunc_order;
    std::string fingerprint;
    PoleForm form;
  };

  explicit CacheFile(std::filesystem::path path) : path_(std::move(path)) {}

  const std::filesystem::path& path() const { return path_; }
  /// Reads the file. Returns false (leaving no entries) when it is missing, unreadable or versioned differently;
  /// the reason lands in last_message().
  bool load();
  const std::vector<Entry>& entries() const { return entries_; }
  const std::string& last_message() const { return message_; }

  /// Seeds the engine with every matching entry; returns how many were used.
  int apply(TopologicalRecursion& tr) const;
  /// Replaces this engine's entries with its current memo table.
  void absorb(const TopologicalRecursion& tr);
  /// Writes through a temporary file and a rename.
  void save() const;

 private:
  std::filesystem::path path_;
  std::vector<Entry> entries_;
  std::string message_;
};

}  // namespace hurwitz
