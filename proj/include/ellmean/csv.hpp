#pragma once

#include <string>
#include <vector>

namespace ellmean::csv {

/// Shortest round-trip decimal representation (std::to_chars); locale-free
/// and byte-deterministic.
std::string format_double(double x);

std::string format_int(long long x);

/// RFC-4180-style writer: comma separator, "\n" line endings, header row
/// mandatory.  Fields are written verbatim (the artifact never emits commas,
/// quotes or newlines inside a field).
class Writer {
 public:
  void header(std::vector<std::string> names);
  void row(std::vector<std::string> fields);
  const std::string& str() const { return out_; }

 private:
  void emit(const std::vector<std::string>& fields);
  std::string out_;
  std::size_t n_cols_ = 0;
};

}  // namespace ellmean::csv
