// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the vorder Project.

#pragma once

#include <cstddef>
#include <cstdlib>
#include <iostream>
#include <string>

namespace vorder {

/// Desk-scale guards. Read once from the environment:
///   VORDER_MAX_EXACT_N    largest n for full subset tables (default 26)
///   VORDER_SCHEME_BUDGET  largest level * n for the FAS scheme (default 48)
///   VORDER_MAX_ORACLE_N   largest n for permutation enumeration (default 9)
struct Limits {
    std::size_t max_exact_n = 26;
    std::size_t scheme_budget = 48;
    std::size_t max_oracle_n = 9;

    static Limits from_environment(std::ostream &warn) {
        Limits limits;
        const auto read = [&warn](const char *name, std::size_t &target) {
            const char *text = std::getenv(name);
            if (!text || !*text) return;
            char *end = nullptr;
            const unsigned long long value = std::strtoull(text, &end, 10);
            if (end == text || *end != '\0') {
                warn << "warning: ignoring malformed " << name << "='" << text << "'\n";
                return;
            }
            warn << "*** WARNING: desk-scale guard overridden: " << name << "=" << value
                 << " (default " << target << "); runs may exhaust memory or time ***\n";
            target = static_cast<std::size_t>(value);
        };
        read("VORDER_MAX_EXACT_N", limits.max_exact_n);
        read("VORDER_SCHEME_BUDGET", limits.scheme_budget);
        read("VORDER_MAX_ORACLE_N", limits.max_oracle_n);
        return limits;
    }
};

/// Process-wide guards, initialised from the environment on first use and
/// immutable afterwards.
inline const Limits &limits() {
    static const Limits instance = Limits::from_environment(std::cerr);
    return instance;
}

}  // namespace vorder
