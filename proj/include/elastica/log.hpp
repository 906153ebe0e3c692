#pragma once

#include <spdlog/spdlog.h>

#include <utility>

namespace elastica::log {

// stderr logger; level from ELASTICA_LOG (debug, info, warn), default warn.
spdlog::logger& logger();

template <class... Args>
void debug(fmt::format_string<Args...> fmt, Args&&... args) {
    logger().debug(fmt, std::forward<Args>(args)...);
}

template <class... Args>
void info(fmt::format_string<Args...> fmt, Args&&... args) {
    logger().info(fmt, std::forward<Args>(args)...);
}

template <class... Args>
void warn(fmt::format_string<Args...> fmt, Args&&... args) {
    logger().warn(fmt, std::forward<Args>(args)...);
}

}  // namespace elastica::log
