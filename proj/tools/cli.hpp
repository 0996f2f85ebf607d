#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "qshapo/freealg.hpp"

namespace qshapo::cli {

enum ExitCode { kOk = 0, kCheckFailed = 1, kBadInput = 2, kCapExhausted = 3 };

// QSHAPO_CACHE, then XDG_CACHE_HOME/qshapo, then ~/.cache/qshapo.
std::filesystem::path default_cache_dir();
// QSHAPO_CACHE overrides the --cache-dir flag, which overrides the default.
std::filesystem::path resolve_cache_dir(const std::string& flag);

struct CacheResult {
  RewriteSystem system;
  std::string status;  // "built", "loaded", "rebuilt"
  std::filesystem::path file;
};

// Loads the completed system for (n, cap) from dir, or builds and stores it. A corrupt file is
// reported on `warn` and rebuilt; a file from another format version is rebuilt silently.
CacheResult load_or_build(const std::filesystem::path& dir, int n, int cap, std::ostream& warn);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qshapo::cli
