#include "spherelevels/csv.hpp"

#include <cstdio>

#include "spherelevels/errors.hpp"

namespace spherelevels::csv {

std::string real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string real(const std::optional<double>& x) { return x ? real(*x) : std::string(); }

Writer::Writer(const std::filesystem::path& path, const std::vector<std::string>& header)
    : path_(path), out_(path, std::ios::binary) {
  if (!out_) throw Error("cannot write " + path.string());
  row(header);
}

void Writer::row(const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out_ << ',';
    out_ << fields[i];
  }
  out_ << '\n';
  if (!out_) throw Error("write failed for " + path_.string());
}

void Writer::close() {
  out_.close();
  if (!out_) throw Error("close failed for " + path_.string());
}

}  // namespace spherelevels::csv
