#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "fusionscan/pipeline.hpp"

namespace fusionscan {

/// 16 hex digits: FNV-1a over the config fingerprint (which embeds N and the version).
std::string cacheKey(Int N, const ClassifyConfig& config);

std::optional<ClassificationReport> cacheLoad(const std::filesystem::path& dir, Int N, const ClassifyConfig& config);
void cacheStore(const std::filesystem::path& dir, const ClassificationReport& report, const ClassifyConfig& config);

/// classify() behind the cache. `hit` reports whether the result was loaded.
ClassificationReport classifyCached(Int N, const ClassifyConfig& config, const std::filesystem::path& dir,
                                    bool* hit = nullptr);

}  // namespace fusionscan
