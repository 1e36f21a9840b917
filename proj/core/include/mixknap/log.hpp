#pragma once

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace mixknap {

enum class LogLevel { Error = 0, Info = 1, Debug = 2 };

/// Level comes from MIXKNAP_LOG in {error, info, debug}; default error.
inline LogLevel log_level() {
  static LogLevel level = [] {
    const char* env = std::getenv("MIXKNAP_LOG");
    if (env && std::strcmp(env, "debug") == 0) return LogLevel::Debug;
    if (env && std::strcmp(env, "info") == 0) return LogLevel::Info;
    return LogLevel::Error;
  }();
  return level;
}

template <typename... Args>
void log_at(LogLevel level, const char* fmt, Args... args) {
  if (static_cast<int>(level) > static_cast<int>(log_level())) return;
  const char* tag = level == LogLevel::Error  ? "error"
                    : level == LogLevel::Info ? "info"
                                              : "debug";
  std::fprintf(stderr, "[mixknap:%s] ", tag);
  std::fprintf(stderr, fmt, args...);
  std::fprintf(stderr, "\n");
}

#define MIXKNAP_LOG_INFO(...) ::mixknap::log_at(::mixknap::LogLevel::Info, __VA_ARGS__)
#define MIXKNAP_LOG_DEBUG(...) ::mixknap::log_at(::mixknap::LogLevel::Debug, __VA_ARGS__)
#define MIXKNAP_LOG_ERROR(...) ::mixknap::log_at(::mixknap::LogLevel::Error, __VA_ARGS__)

}  // namespace mixknap
