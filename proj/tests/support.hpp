#pragma once

// Shared helpers for the test and acceptance suites: a deterministic RNG
// (stable across standard libraries, unlike <random> distributions), random
// space/map generators, and a small process runner for driving the CLI.

#include <sys/wait.h>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bmfp/space.hpp"

namespace testsupport {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ull) {
        next();
        next();
    }

    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ull + 1442695040888963407ull;
        std::uint64_t x = state_;
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdull;
        x ^= x >> 33;
        return x;
    }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    double uniform_real(double lo, double hi) {
        const double u = static_cast<double>(next() >> 11) / 9007199254740992.0;  // [0,1)
        return lo + (hi - lo) * u;
    }

private:
    std::uint64_t state_;
};

inline std::vector<std::string> point_labels(int n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 0; i < n; ++i) {
        labels.push_back("p" + std::to_string(i));
    }
    return labels;
}

/// Symmetric table with zero diagonal and integer entries in [1, 20]; always
/// satisfies the entry axioms, so pairing it with its minimal coefficient
/// yields a valid space.
inline bmfp::DistanceMatrix random_integer_matrix(Rng& rng, int n) {
    bmfp::DistanceMatrix d(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            d[i][j] = d[j][i] = static_cast<double>(rng.uniform_int(1, 20));
        }
    }
    return d;
}

inline bmfp::FiniteBMetricSpace random_space(Rng& rng, int min_points = 3, int max_points = 8) {
    const int n = rng.uniform_int(min_points, max_points);
    bmfp::DistanceMatrix d = random_integer_matrix(rng, n);
    const double s = bmfp::minimal_coefficient(d);
    return bmfp::FiniteBMetricSpace(point_labels(n), std::move(d), s);
}

inline bmfp::SelfMap random_map(Rng& rng, const bmfp::FiniteBMetricSpace& space) {
    bmfp::SelfMap map;
    map.image.reserve(space.size());
    for (std::size_t i = 0; i < space.size(); ++i) {
        map.image.push_back(static_cast<std::size_t>(
            rng.uniform_int(0, static_cast<int>(space.size()) - 1)));
    }
    return map;
}

struct CommandResult {
    int exit_code = -1;
    std::string output;  // stdout only, unless the command redirects
};

inline CommandResult run_command(const std::string& command) {
    CommandResult result;
    FILE* pipe = ::popen(command.c_str(), "r");
    if (pipe == nullptr) {
        throw std::runtime_error("popen failed for: " + command);
    }
    char buffer[4096];
    std::size_t got = 0;
    while ((got = std::fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
        result.output.append(buffer, got);
    }
    const int status = ::pclose(pipe);
    result.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return result;
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << content;
}

}  // namespace testsupport
