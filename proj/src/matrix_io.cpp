#include "foolset/matrix_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

namespace foolset {

namespace {

void write_delimited(std::ostream& os, const Matrix& m, char sep) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto row = m.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) os << sep;
      os << row[j];
    }
    os << '\n';
  }
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto nl = text.find('\n');
    if (nl == std::string_view::npos) {
      lines.push_back(text);
      break;
    }
    lines.push_back(text.substr(0, nl));
    text.remove_prefix(nl + 1);
  }
  return lines;
}

std::vector<std::int64_t> split_numbers(std::string_view line, char sep, std::size_t line_no) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (true) {
    auto end = line.find(sep, pos);
    auto tok = line.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw Error(Errc::Parse, "line " + std::to_string(line_no) + ": bad number '" + std::string(tok) + "'");
    }
    out.push_back(v);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

Matrix build(PrimeField field, const std::vector<std::vector<std::int64_t>>& rows,
             std::size_t first_line) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (auto v : rows[i]) {
      if (v < 0 || v >= static_cast<std::int64_t>(field.modulus())) {
        throw Error(Errc::Parse, "line " + std::to_string(first_line + i) + ": residue " +
                                     std::to_string(v) + " outside [0, " +
                                     std::to_string(field.modulus()) + ")");
      }
    }
    if (rows[i].size() != rows.front().size()) {
      throw Error(Errc::Parse, "line " + std::to_string(first_line + i) + ": ragged row");
    }
  }
  return Matrix::from_rows(field, rows);
}

}  // namespace

void write_fsm(std::ostream& os, const Matrix& m) {
  os << "FSM 1 " << m.field().modulus() << ' ' << m.rows() << ' ' << m.cols() << '\n';
  write_delimited(os, m, ' ');
}

void write_csv(std::ostream& os, const Matrix& m) { write_delimited(os, m, ','); }

std::string to_fsm(const Matrix& m) {
  std::ostringstream os;
  write_fsm(os, m);
  return os.str();
}

std::string to_csv(const Matrix& m) {
  std::ostringstream os;
  write_csv(os, m);
  return os.str();
}

Matrix parse_fsm(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty() || !lines[0].starts_with("FSM ")) throw Error(Errc::Parse, "missing FSM header");
  const auto header = split_numbers(lines[0].substr(4), ' ', 1);
  if (header.size() != 4 || header[0] != 1) {
    throw Error(Errc::Parse, "header must read 'FSM 1 <p> <rows> <cols>'");
  }
  PrimeField field = [&] {
    try {
      return PrimeField::make(header[1]);
    } catch (const Error& e) {
      throw Error(Errc::Parse, std::string("header modulus: ") + e.what());
    }
  }();
  if (header[2] < 1 || header[3] < 1) throw Error(Errc::Parse, "dimensions must be positive");
  const auto rows = static_cast<std::size_t>(header[2]);
  const auto cols = static_cast<std::size_t>(header[3]);
  if (lines.size() != rows + 1) {
    throw Error(Errc::Parse, "expected " + std::to_string(rows) + " rows, found " +
                                 std::to_string(lines.size() - 1));
  }
  std::vector<std::vector<std::int64_t>> values;
  for (std::size_t i = 0; i < rows; ++i) {
    values.push_back(split_numbers(lines[i + 1], ' ', i + 2));
    if (values.back().size() != cols) {
      throw Error(Errc::Parse, "line " + std::to_string(i + 2) + ": expected " +
                                   std::to_string(cols) + " entries");
    }
  }
  return build(field, values, 2);
}

Matrix parse_csv(std::string_view text, std::optional<PrimeField> field) {
  std::vector<std::vector<std::int64_t>> values;
  std::size_t line_no = 0;
  for (auto line : split_lines(text)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    values.push_back(split_numbers(line, ',', line_no));
  }
  if (values.empty()) throw Error(Errc::Parse, "empty CSV matrix");
  if (!field) {
    std::int64_t top = 0;
    for (const auto& row : values) {
      for (auto v : row) top = std::max(top, v);
    }
    std::int64_t p = std::max<std::int64_t>(2, top + 1);
    while (!is_prime(p)) ++p;
    if (p >= (std::int64_t{1} << 31)) throw Error(Errc::Parse, "CSV entries too large for a prime field");
    field = PrimeField::make(p);
  }
  return build(*field, values, 1);
}

Matrix parse_matrix(std::string_view text, std::optional<PrimeField> csv_field) {
  if (text.starts_with("FSM ")) return parse_fsm(text);
  return parse_csv(text, csv_field);
}

Matrix read_matrix_file(const std::string& path, std::optional<PrimeField> csv_field) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Parse, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str(), csv_field);
}

}  // namespace foolset
