#include "cache.hpp"

#include <fcntl.h>
#include <openssl/evp.h>
#include <sys/file.h>
#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace modclass::cli {

namespace {

constexpr int kEntryFormat = 1;

class EntryLock {
 public:
  explicit EntryLock(const std::filesystem::path& path) {
    fd_ = ::open(path.c_str(), O_CREAT | O_RDWR | O_CLOEXEC, 0644);
    if (fd_ < 0) throw std::runtime_error("cannot open cache lock " + path.string());
    if (::flock(fd_, LOCK_EX) != 0) {
      ::close(fd_);
      throw std::runtime_error("cannot lock cache entry " + path.string());
    }
  }
  ~EntryLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  EntryLock(const EntryLock&) = delete;
  EntryLock& operator=(const EntryLock&) = delete;

 private:
  int fd_ = -1;
};

}  // namespace

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

Cache::Cache(std::filesystem::path dir, std::ostream& warnings) : dir_(std::move(dir)), warnings_(warnings) {
  std::filesystem::create_directories(dir_);
}

std::filesystem::path Cache::entry_path(const std::string& key) const { return dir_ / (sha256_hex(key) + ".json"); }

Json Cache::fetch_or_compute(const std::string& key, const std::function<Json()>& compute) {
  const auto path = entry_path(key);
  auto lock_path = path;
  lock_path += ".lock";
  EntryLock lock(lock_path);

  if (std::filesystem::exists(path)) {
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    const Json entry = Json::parse(text.str(), nullptr, false);
    std::string problem;
    if (entry.is_discarded() || !entry.is_object()) {
      problem = "unreadable";
    } else if (entry.value("format", 0) != kEntryFormat || entry.value("key", "") != key) {
      problem = "does not match the request";
    } else if (!entry.contains("payload") || entry.value("checksum", "") != sha256_hex(entry["payload"].dump())) {
      problem = "fails its checksum";
    }
    if (problem.empty()) return entry["payload"];
    warnings_ << "warning: cache entry " << path.filename().string() << " " << problem << "; recomputing\n";
    std::filesystem::remove(path);
  }

  Json payload = compute();
  const Json entry = {{"format", kEntryFormat}, {"key", key}, {"checksum", sha256_hex(payload.dump())},
                      {"payload", payload}};
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << entry.dump() << '\n';
    if (!out) throw std::runtime_error("cannot write cache entry " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
  return payload;
}

}  // namespace modclass::cli
