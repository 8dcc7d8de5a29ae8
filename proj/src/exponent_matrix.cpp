#include "cldpc/exponent_matrix.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "cldpc/errors.hpp"

namespace cldpc {

ExponentMatrix::ExponentMatrix(int rows, int cols,
                               std::vector<std::int64_t> entries,
                               std::int64_t lifting)
    : rows_(rows), cols_(cols), lifting_(lifting), entries_(std::move(entries)) {
  if (rows_ < 1 || cols_ < 1) {
    throw std::invalid_argument("exponent matrix needs at least one row and column");
  }
  if (lifting_ < 0) {
    throw std::invalid_argument("lifting degree must be positive or unbounded");
  }
  if (entries_.size() != static_cast<std::size_t>(rows_) * cols_) {
    throw std::invalid_argument("entry count does not match rows*cols");
  }
  for (std::int64_t p : entries_) {
    if (p < 0) {
      throw std::invalid_argument("exponent entries must be non-negative");
    }
    if (lifting_ != kUnboundedLifting && p >= lifting_) {
      throw std::invalid_argument("exponent entry out of range [0, N)");
    }
  }
}

ExponentMatrix ExponentMatrix::zeros(int rows, int cols, std::int64_t lifting) {
  return ExponentMatrix(rows, cols,
                        std::vector<std::int64_t>(static_cast<std::size_t>(rows) * cols, 0),
                        lifting);
}

std::int64_t ExponentMatrix::max_entry() const {
  return *std::max_element(entries_.begin(), entries_.end());
}

std::int64_t ExponentMatrix::min_entry() const {
  return *std::min_element(entries_.begin(), entries_.end());
}

ExponentMatrix ExponentMatrix::with_entry(int i, int j, std::int64_t value) const {
  std::vector<std::int64_t> e = entries_;
  e.at(static_cast<std::size_t>(i) * cols_ + j) = value;
  return ExponentMatrix(rows_, cols_, std::move(e), lifting_);
}

ExponentMatrix ExponentMatrix::with_lifting(std::int64_t lifting) const {
  return ExponentMatrix(rows_, cols_, entries_, lifting);
}

namespace {

bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

ExponentMatrix read_exponent_matrix(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) {
    throw ParseError("empty exponent matrix input");
  }
  std::istringstream head(line);
  int m = 0, n = 0;
  std::string lift_tok;
  if (!(head >> m >> n >> lift_tok)) {
    throw ParseError("header must be 'm n N' with N an integer or 'inf'");
  }
  std::int64_t lifting;
  if (lift_tok == "inf") {
    lifting = kUnboundedLifting;
  } else {
    try {
      lifting = std::stoll(lift_tok);
    } catch (const std::exception&) {
      throw ParseError("bad lifting degree '" + lift_tok + "'");
    }
    if (lifting < 1) throw ParseError("lifting degree must be >= 1 or 'inf'");
  }
  if (m < 1 || n < 1) throw ParseError("matrix dimensions must be positive");

  std::vector<std::int64_t> entries;
  entries.reserve(static_cast<std::size_t>(m) * n);
  for (int i = 0; i < m; ++i) {
    if (!next_content_line(in, line)) {
      throw ParseError("unexpected end of input while reading matrix rows");
    }
    std::istringstream row(line);
    for (int j = 0; j < n; ++j) {
      std::int64_t v;
      if (!(row >> v)) throw ParseError("row " + std::to_string(i) + " is short");
      entries.push_back(v);
    }
    std::int64_t extra;
    if (row >> extra) throw ParseError("row " + std::to_string(i) + " has extra entries");
  }
  try {
    return ExponentMatrix(m, n, std::move(entries), lifting);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

ExponentMatrix read_exponent_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return read_exponent_matrix(in);
}

void write_exponent_matrix(const ExponentMatrix& m, std::ostream& out) {
  out << m.rows() << ' ' << m.cols() << ' ';
  if (m.is_finite()) {
    out << m.lifting();
  } else {
    out << "inf";
  }
  out << '\n';
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << m.at(i, j);
    }
    out << '\n';
  }
}

void write_exponent_matrix_file(const ExponentMatrix& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_exponent_matrix(m, out);
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace cldpc
