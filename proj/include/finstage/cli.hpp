#ifndef FINSTAGE_CLI_HPP
#define FINSTAGE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace finstage::cli {

enum class OutputFormat { Plain, Csv, JsonLines };

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

// `args` includes the program name in front.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace finstage::cli

#endif
