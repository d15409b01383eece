#pragma once

#include <string>
#include <vector>

namespace fjhawkes {

// Shortest decimal form of a double that parses back to the same bits.
// C locale, '.' decimal point, byte-identical across runs and platforms.
std::string fmt_double(double x);

// Minimal CSV emitter. Cells never need quoting here (numbers, identifiers),
// so rows are plain comma joins with '\n' endings.
class CsvFile {
 public:
  explicit CsvFile(const std::string& path);
  ~CsvFile();

  CsvFile(const CsvFile&) = delete;
  CsvFile& operator=(const CsvFile&) = delete;

  void row(const std::vector<std::string>& cells);
  void close();

 private:
  struct Impl;
  Impl* impl_;
};

}  // namespace fjhawkes
