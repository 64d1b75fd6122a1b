#include "logging.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace uimigrate {

static LogLevel parse_level(const char* value) {
    if (value == nullptr) return LogLevel::Warn;
    if (std::strcmp(value, "silent") == 0) return LogLevel::Silent;
    if (std::strcmp(value, "error") == 0) return LogLevel::Error;
    if (std::strcmp(value, "warn") == 0) return LogLevel::Warn;
    if (std::strcmp(value, "info") == 0) return LogLevel::Info;
    if (std::strcmp(value, "debug") == 0) return LogLevel::Debug;
    return LogLevel::Warn;
}

LogLevel log_level() {
    static LogLevel level = parse_level(std::getenv("UIMIGRATE_LOG"));
    return level;
}

void log_message(LogLevel level, const std::string& message) {
    if (level > log_level() || level == LogLevel::Silent) return;
    const char* tag = "?";
    switch (level) {
        case LogLevel::Error: tag = "error"; break;
        case LogLevel::Warn: tag = "warn"; break;
        case LogLevel::Info: tag = "info"; break;
        case LogLevel::Debug: tag = "debug"; break;
        case LogLevel::Silent: return;
    }
    std::fprintf(stderr, "uimigrate: [%s] %s\n", tag, message.c_str());
}

} // namespace uimigrate
