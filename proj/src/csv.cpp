#include "fjhawkes/csv.hpp"

#include <charconv>
#include <fstream>

#include "fjhawkes/errors.hpp"

namespace fjhawkes {

std::string fmt_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

struct CsvFile::Impl {
  std::ofstream out;
  std::string path;
};

CsvFile::CsvFile(const std::string& path) : impl_(new Impl{std::ofstream(path), path}) {
  if (!impl_->out) {
    const std::string msg = "csv: cannot open " + path;
    delete impl_;
    impl_ = nullptr;
    throw IoError(msg);
  }
}

CsvFile::~CsvFile() {
  delete impl_;
}

void CsvFile::row(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) impl_->out << ',';
    impl_->out << cells[i];
  }
  impl_->out << '\n';
  if (!impl_->out) throw IoError("csv: write failed for " + impl_->path);
}

void CsvFile::close() {
  impl_->out.close();
  if (impl_->out.fail()) throw IoError("csv: close failed for " + impl_->path);
}

}  // namespace fjhawkes
