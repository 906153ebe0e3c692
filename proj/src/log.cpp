#include "elastica/log.hpp"

#include <spdlog/sinks/stdout_sinks.h>

#include <cstdlib>
#include <string_view>

namespace elastica::log {

spdlog::logger& logger() {
    static std::shared_ptr<spdlog::logger> l = [] {
        auto made = std::make_shared<spdlog::logger>("elastica", std::make_shared<spdlog::sinks::stderr_sink_mt>());
        made->set_pattern("[%l] %v");
        spdlog::level::level_enum level = spdlog::level::warn;
        if (const char* env = std::getenv("ELASTICA_LOG")) {
            const std::string_view v(env);
            if (v == "debug") level = spdlog::level::debug;
            else if (v == "info") level = spdlog::level::info;
        }
        made->set_level(level);
        return made;
    }();
    return *l;
}

}  // namespace elastica::log
