#include "cpold/cache.hpp"

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <unistd.h>

#include "cpold/error.hpp"
#include "cpold/serialize.hpp"

namespace cpold {

namespace fs = std::filesystem;

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

ChernCache::ChernCache(fs::path dir) : dir_(std::move(dir)) {}

std::optional<fs::path> ChernCache::default_dir() {
  const char* env = std::getenv(kCacheDirEnv);
  if (env == nullptr || *env == '\0') return std::nullopt;
  return fs::path(env);
}

fs::path ChernCache::path_for(int n, int k) const {
  return dir_ / ("chern_n" + std::to_string(n) + "_k" + std::to_string(k) + ".json");
}

std::optional<BasisExpansion<UniPoly>> ChernCache::load(int n, int k) {
  const fs::path path = path_for(n, k);
  std::ifstream in(path);
  if (!in) {
    ++misses_;
    return std::nullopt;
  }
  try {
    const auto doc = json::Json::parse(in);
    if (doc.at("format_version").get<std::string>() != kCacheFormatVersion) {
      warnings_.push_back("stale cache format in " + path.string() + ", recomputing");
      ++misses_;
      return std::nullopt;
    }
    const auto& payload = doc.at("payload");
    if (fnv1a_hex(payload.dump()) != doc.at("checksum").get<std::string>() || doc.at("n").get<int>() != n ||
        doc.at("k").get<int>() != k)
      throw Error(ErrorKind::inconsistent_data, "checksum mismatch");
    auto e = json::poly_expansion_from_json(payload);
    if (e.basis != Basis::monomial || e.num_vars != n) throw Error(ErrorKind::inconsistent_data, "wrong payload");
    ++hits_;
    return e;
  } catch (const std::exception& err) {
    warnings_.push_back("corrupt cache file " + path.string() + " (" + err.what() + "), recomputing");
    ++misses_;
    return std::nullopt;
  }
}

void ChernCache::store(int n, int k, const BasisExpansion<UniPoly>& monomial) {
  static std::mutex write_mutex;
  std::lock_guard lock(write_mutex);
  std::error_code ec;
  fs::create_directories(dir_, ec);
  const json::Json payload = json::to_json(monomial);
  json::Json doc{{"format_version", kCacheFormatVersion},
                 {"n", n},
                 {"k", k},
                 {"checksum", fnv1a_hex(payload.dump())},
                 {"payload", payload}};
  static std::atomic<unsigned> counter{0};
  const fs::path target = path_for(n, k);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid()) + "." +
         std::to_string(counter++);
  {
    std::ofstream out(tmp);
    if (!out) {
      warnings_.push_back("cannot write cache file " + tmp.string());
      return;
    }
    out << doc.dump(1) << '\n';
  }
  fs::rename(tmp, target, ec);
  if (ec) {
    warnings_.push_back("cannot move cache file into place: " + ec.message());
    fs::remove(tmp, ec);
  }
}

}  // namespace cpold
