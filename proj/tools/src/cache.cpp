#include "cache.hpp"

#include "rtint/serialize.hpp"

#include <openssl/evp.h>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace rtint::cli {

namespace fs = std::filesystem;

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw ResourceError("SHA-256 digest failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return os.str();
}

TableCache TableCache::from_environment(const std::string& flag_value) {
  if (!flag_value.empty()) return TableCache(fs::path(flag_value));
  if (const char* env = std::getenv("RTINT_CACHE_DIR"); env && *env) return TableCache(fs::path(env));
  return TableCache(std::nullopt);
}

fs::path TableCache::path_for(const RootSystem& rs, int r) const {
  return *dir_ / (rs.type().name() + "_r" + std::to_string(r) + ".json");
}

ModularData TableCache::load(const RootSystem& rs, int r, std::ostream& log) const {
  if (!dir_) {
    status_ = "off";
    return ModularData::build(fusion_table(rs, r));
  }
  const fs::path path = path_for(rs, r);
  const json key = {{"lie_type", std::string(1, rs.type().letter())}, {"rank", rs.rank()}, {"r", r}};
  status_ = "miss";
  if (fs::exists(path)) {
    try {
      std::ifstream in(path);
      const json doc = json::parse(in);
      if (doc.at("key") != key) throw ParseError(path.string(), "key mismatch");
      const json& payload = doc.at("payload");
      if (doc.at("sha256").get<std::string>() != sha256_hex(payload.dump()))
        throw ParseError(path.string(), "integrity hash mismatch");
      ModularData md = modular_from_cache(rs, r, payload);
      status_ = "hit";
      return md;
    } catch (const std::exception& e) {
      log << "warning: ignoring cache entry " << path.string() << ": " << e.what() << "\n";
      status_ = "corrupt";
    }
  }
  ModularData md = ModularData::build(fusion_table(rs, r));
  std::error_code ec;
  fs::create_directories(*dir_, ec);
  const json payload = cache_payload(md);
  const json doc = {{"format", 1}, {"key", key}, {"sha256", sha256_hex(payload.dump())}, {"payload", payload}};
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << doc.dump() << "\n";
    if (!out) {
      log << "warning: could not write cache entry " << path.string() << "\n";
      return md;
    }
  }
  fs::rename(tmp, path, ec);
  if (ec) log << "warning: could not move cache entry into place: " << ec.message() << "\n";
  return md;
}

}  // namespace rtint::cli
