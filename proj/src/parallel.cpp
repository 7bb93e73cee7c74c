#include "dessin/parallel.hpp"

namespace dessin {

namespace {
std::atomic<int> g_jobs{0};
}

int default_jobs() {
    int j = g_jobs.load();
    if (j > 0) return j;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void set_default_jobs(int jobs) { g_jobs.store(jobs); }

}  // namespace dessin
