#pragma once

#include <cstdint>
#include <functional>
#include <string>

namespace CLI {
class App;
}

namespace secant::cli {

enum class Format { Default, Csv, Json };

struct Global {
    std::uint64_t seed = 1;
    unsigned threads = 0;
    std::string out;
    std::string format;  // "", "csv" or "json"
    std::string simd = "auto";

    Format fmt() const;
};

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kCheckFailed = 2;

using Runner = std::function<int()>;

/// Registers every subcommand on `app`; the parsed subcommand stores its
/// action in `run`.
void register_commands(CLI::App& app, const Global& g, Runner& run);

}  // namespace secant::cli
