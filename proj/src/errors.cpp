#include "repdecomp/errors.hpp"

#include <atomic>

namespace repdecomp {

namespace {
std::atomic<std::size_t> g_size_cap{10'000'000};
}

std::size_t character_size_cap() {
    return g_size_cap.load();
}

void set_character_size_cap(std::size_t cap) {
    if (cap == 0)
        throw std::invalid_argument("character size cap must be positive");
    g_size_cap.store(cap);
}

}  // namespace repdecomp
