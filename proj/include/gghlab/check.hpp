/*
 * check.hpp
 *
 * Tiny pass/fail report container shared by the verification suites.
 * A check item carries a witness string only when it fails, so
 * reports stay diffable.
 */

#pragma once

#include <string>
#include <vector>

namespace gghlab {

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string witness; // empty iff pass
};

struct CheckReport {
    std::vector<CheckItem> items;

    void add(const std::string& name, bool pass, const std::string& witness = "") {
        items.push_back({name, pass, pass ? std::string() : witness});
    }
    void merge(const CheckReport& other) {
        items.insert(items.end(), other.items.begin(), other.items.end());
    }
    bool all_pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
    std::size_t fail_count() const {
        std::size_t c = 0;
        for (const auto& it : items)
            if (!it.pass) ++c;
        return c;
    }
};

/* Clip long residuals so failure witnesses stay readable. */
inline std::string clip_witness(const std::string& s, std::size_t max = 200) {
    if (s.size() <= max) return s;
    return s.substr(0, max) + "...";
}

} // namespace gghlab
