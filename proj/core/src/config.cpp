#include "cohchan/config.hpp"

#include <cstdlib>

namespace cohchan {

int max_qubits() {
    static const int limit = [] {
        int value = kMaxQubitsHard;
        if (const char* env = std::getenv("COHCHAN_NMAX")) {
            char* end = nullptr;
            const long parsed = std::strtol(env, &end, 10);
            // the variable may only lower the ceiling; garbage is ignored
            if (end != env && *end == '\0' && parsed >= 1 && parsed < kMaxQubitsHard)
                value = static_cast<int>(parsed);
        }
        return value;
    }();
    return limit;
}

std::size_t max_dimension() {
    return std::size_t{1} << max_qubits();
}

}  // namespace cohchan
