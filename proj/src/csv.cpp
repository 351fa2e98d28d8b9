#include "ellmean/csv.hpp"

#include <charconv>
#include <stdexcept>
#include <system_error>

namespace ellmean::csv {

std::string format_double(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  if (res.ec != std::errc{}) throw std::runtime_error("format_double failed");
  return std::string(buf, res.ptr);
}

std::string format_int(long long x) {
  char buf[24];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

void Writer::header(std::vector<std::string> names) {
  if (n_cols_ != 0) throw std::logic_error("csv::Writer: header already written");
  n_cols_ = names.size();
  emit(names);
}

void Writer::row(std::vector<std::string> fields) {
  if (n_cols_ == 0) throw std::logic_error("csv::Writer: header row is mandatory");
  if (fields.size() != n_cols_) throw std::logic_error("csv::Writer: column count mismatch");
  emit(fields);
}

void Writer::emit(const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out_ += ',';
    out_ += fields[i];
  }
  out_ += '\n';
}

}  // namespace ellmean::csv
