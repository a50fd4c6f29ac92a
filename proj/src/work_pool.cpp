#include "korenblum/work_pool.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace korenblum {

std::size_t default_thread_count() {
    if (const char* env = std::getenv("KORENBLUM_THREADS")) {
        const std::string_view text(env);
        std::size_t n = 0;
        const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
        if (ec == std::errc{} && end == text.data() + text.size() && n > 0) return n;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace korenblum
