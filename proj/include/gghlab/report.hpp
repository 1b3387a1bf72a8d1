/*
 * report.hpp
 *
 * Machine-readable run reports and the small work pool that executes
 * independent suite items.  Reports are deterministic: checks keep a
 * fixed order regardless of scheduling, keys are sorted, and wall
 * times are recorded only on request so default output stays
 * byte-identical across runs with the same inputs and seed.
 */

#pragma once

#include "gghlab/check.hpp"
#include "gghlab/version.hpp"

#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace gghlab {

struct Report {
    std::string version = GGHLAB_VERSION;
    nlohmann::json parameters = nlohmann::json::object();
    std::vector<CheckItem> checks;
    double elapsed_seconds = -1.0; /* < 0: omitted from the output */

    bool all_pass() const {
        for (const auto& it : checks)
            if (!it.pass) return false;
        return true;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["version"] = version;
        j["parameters"] = parameters;
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& it : checks) {
            nlohmann::json c;
            c["check"] = it.name;
            c["status"] = it.pass ? "pass" : "fail";
            if (!it.pass) c["witness"] = it.witness;
            arr.push_back(std::move(c));
        }
        j["checks"] = std::move(arr);
        if (elapsed_seconds >= 0.0) j["timing"] = {{"seconds", elapsed_seconds}};
        return j;
    }

    /* One line per check plus a tally, for terminal display. */
    std::string to_text() const {
        std::string out;
        for (const auto& it : checks) {
            out += it.pass ? "pass  " : "FAIL  ";
            out += it.name;
            if (!it.pass && !it.witness.empty()) out += "  [" + it.witness + "]";
            out += '\n';
        }
        std::size_t failed = 0;
        for (const auto& it : checks)
            if (!it.pass) ++failed;
        out += std::to_string(checks.size() - failed) + "/" + std::to_string(checks.size()) +
               " checks passed\n";
        return out;
    }
};

/* --threads wins, then GGHLAB_THREADS, then the hardware count. */
inline unsigned resolve_thread_count(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("GGHLAB_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return unsigned(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

/*
 * Runs independent tasks on a fixed-size pool and returns results in
 * submission order.  Tasks must not throw; wrap fallible work so a
 * failure becomes a failing item instead of an exception.
 */
inline std::vector<CheckReport> run_check_pool(
    const std::vector<std::function<CheckReport()>>& tasks, unsigned threads) {
    std::vector<CheckReport> results(tasks.size());
    if (tasks.empty()) return results;
    threads = std::min<std::size_t>(std::max(threads, 1u), tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            results[i] = tasks[i]();
        }
    };
    if (threads == 1) {
        worker();
        return results;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return results;
}

} // namespace gghlab
