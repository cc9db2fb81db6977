#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace cgtk::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Dispatches one subcommand. args excludes the program name. The report goes
/// to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a, used for the report's inputs digest.
class Fnv1a {
public:
  void add(std::string_view bytes);
  std::uint64_t value() const { return h_; }
  std::string hex() const;

private:
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

}  // namespace cgtk::cli
