#include "fusionscan/cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace fusionscan {

namespace fs = std::filesystem;

std::string cacheKey(Int N, const ClassifyConfig& config) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : configFingerprint(N, config)) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

fs::path entryPath(const fs::path& dir, Int N, const ClassifyConfig& config) {
  return dir / ("fpdim-" + std::to_string(N) + "-" + cacheKey(N, config) + ".json");
}

}  // namespace

std::optional<ClassificationReport> cacheLoad(const fs::path& dir, Int N, const ClassifyConfig& config) {
  std::ifstream in(entryPath(dir, N, config));
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    auto rep = reportFromJson(buf.str());
    // The file name is only a hash; a stale or colliding entry must not be trusted.
    if (rep.N != N || rep.fingerprint != configFingerprint(N, config)) return std::nullopt;
    return rep;
  } catch (const Error&) {
    return std::nullopt;
  }
}

void cacheStore(const fs::path& dir, const ClassificationReport& report, const ClassifyConfig& config) {
  fs::create_directories(dir);
  const auto target = entryPath(dir, report.N, config);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cannot write cache entry " + tmp.string());
    out << reportToJson(report);
  }
  fs::rename(tmp, target);
}

ClassificationReport classifyCached(Int N, const ClassifyConfig& config, const fs::path& dir, bool* hit) {
  if (auto cached = cacheLoad(dir, N, config)) {
    if (hit) *hit = true;
    return *std::move(cached);
  }
  if (hit) *hit = false;
  auto rep = classify(N, config);
  cacheStore(dir, rep, config);
  return rep;
}

}  // namespace fusionscan
