#include "qmzv/vector_cache.hpp"

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <unistd.h>

namespace qmzv {

namespace {

constexpr std::string_view kMagic = "qmzv-vector-cache";

}  // namespace

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string VectorCache::path_for(const std::string& key) const {
  char name[32];
  std::snprintf(name, sizeof(name), "%016llx.vec",
                static_cast<unsigned long long>(fnv1a64(std::string(kKernelVersion) + "|" + key)));
  return (std::filesystem::path(dir_) / name).string();
}

VectorCache::Bundle VectorCache::load(const std::string& key) const {
  Bundle out;
  if (!enabled()) return out;
  std::ifstream in(path_for(key));
  if (!in) return out;
  std::string magic, kernel, stored_key;
  int version = 0;
  in >> magic >> version >> kernel;
  in.ignore();
  std::getline(in, stored_key);
  if (magic != kMagic || version != kCacheFormatVersion || kernel != kKernelVersion || stored_key != key) return {};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string name;
    std::size_t count = 0;
    if (!(ls >> name >> count)) return {};
    std::vector<Integer> v(count);
    for (auto& x : v) {
      std::string tok;
      if (!(ls >> tok)) return {};
      if (x.set_str(tok, 10) != 0) return {};
    }
    out.emplace(std::move(name), std::move(v));
  }
  return out;
}

void VectorCache::store(const std::string& key, const Bundle& bundle) const {
  if (!enabled()) return;
  std::filesystem::create_directories(dir_);
  const std::string final_path = path_for(key);
  static std::atomic<unsigned> counter{0};
  const std::string tmp = final_path + ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp);
    out << kMagic << ' ' << kCacheFormatVersion << ' ' << kKernelVersion << '\n' << key << '\n';
    for (const auto& [name, v] : bundle) {
      out << name << ' ' << v.size();
      for (const auto& x : v) out << ' ' << x.get_str();
      out << '\n';
    }
    if (!out) throw std::runtime_error("cannot write cache file " + tmp);
  }
  std::filesystem::rename(tmp, final_path);
}

}  // namespace qmzv
