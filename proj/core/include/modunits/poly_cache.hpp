#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "modunits/divpoly.hpp"

namespace modunits {

// PolyStore backed by a directory of JSON files, one per polynomial
// (P_000017.json, F_000017.json). Entries carry the tool version and a
// SHA-256 over (kind, n, polynomial); entries that fail either check are
// ignored and recomputed. Writes go to a temporary file and are renamed into
// place, so concurrent writers never expose partial files.
class DiskPolyStore final : public PolyStore {
 public:
  explicit DiskPolyStore(std::filesystem::path dir, std::string tool_version = MODUNITS_VERSION_STRING);

  std::optional<BivarPoly> load(char kind, long n) override;
  void save(char kind, long n, const BivarPoly& poly) override;

  [[nodiscard]] std::filesystem::path entry_path(char kind, long n) const;
  [[nodiscard]] const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
  std::string version_;
};

// Lowercase hex SHA-256 of the canonical entry payload.
std::string entry_hash(char kind, long n, const std::string& poly_json);

}  // namespace modunits
