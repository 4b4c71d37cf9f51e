#include "modunits/poly_cache.hpp"

#include <openssl/evp.h>

#include <atomic>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include "modunits/errors.hpp"
#include "modunits/serialize.hpp"

namespace modunits {

namespace fs = std::filesystem;

std::string entry_hash(char kind, long n, const std::string& poly_json) {
  const std::string payload = std::string(1, kind) + ":" + std::to_string(n) + ":" + poly_json;
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(payload.data(), payload.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

DiskPolyStore::DiskPolyStore(fs::path dir, std::string tool_version)
    : dir_(std::move(dir)), version_(std::move(tool_version)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) throw Error("cannot create cache directory " + dir_.string() + ": " + ec.message());
}

fs::path DiskPolyStore::entry_path(char kind, long n) const {
  char name[32];
  std::snprintf(name, sizeof name, "%c_%06ld.json", kind, n);
  return dir_ / name;
}

std::optional<BivarPoly> DiskPolyStore::load(char kind, long n) {
  std::ifstream in(entry_path(kind, n));
  if (!in) return std::nullopt;
  try {
    const Json j = Json::parse(in);
    if (j.at("kind").get<std::string>() != std::string(1, kind) || j.at("n").get<long>() != n) {
      return std::nullopt;
    }
    if (j.at("toolVersion").get<std::string>() != version_) return std::nullopt;
    const Json& poly = j.at("poly");
    if (j.at("contentHash").get<std::string>() != entry_hash(kind, n, poly.dump())) return std::nullopt;
    return bivar_from_json(poly);
  } catch (const std::exception&) {
    // Corrupt or foreign file: treat as a miss.
    return std::nullopt;
  }
}

void DiskPolyStore::save(char kind, long n, const BivarPoly& poly) {
  const Json pj = to_json(poly);
  const std::string pdump = pj.dump();
  Json j{{"kind", std::string(1, kind)},
         {"n", n},
         {"toolVersion", version_},
         {"poly", pj},
         {"contentHash", entry_hash(kind, n, pdump)}};

  static std::atomic<unsigned long> counter{0};
  std::ostringstream tmpname;
  tmpname << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "."
          << std::random_device{}() << "." << counter++;
  const fs::path final_path = entry_path(kind, n);
  const fs::path tmp = dir_ / (final_path.filename().string() + tmpname.str());
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return;  // unwritable cache: stay correct, just slower
    out << j.dump() << '\n';
    if (!out.flush()) {
      std::error_code ec;
      fs::remove(tmp, ec);
      return;
    }
  }
  std::error_code ec;
  fs::rename(tmp, final_path, ec);
  if (ec) fs::remove(tmp, ec);
}

}  // namespace modunits
