#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

namespace spherelevels::csv {

/// Reals use 12 significant digits.
std::string real(double x);
std::string real(const std::optional<double>& x);  // empty when absent

/// Writes comma-separated, newline-terminated rows to a file.
class Writer {
 public:
  Writer(const std::filesystem::path& path, const std::vector<std::string>& header);

  void row(const std::vector<std::string>& fields);
  void close();

 private:
  std::filesystem::path path_;
  std::ofstream out_;
};

}  // namespace spherelevels::csv
