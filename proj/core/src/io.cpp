#include "shlin/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "shlin/error.hpp"

namespace shlin {

namespace {

Error parse_error(std::size_t line, std::size_t column, const std::string& why) {
  return Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + why);
}

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> split(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back(Token{line.substr(start, i - start), start + 1});
  }
  return out;
}

std::optional<long> to_int(std::string_view s) {
  long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

struct Header {
  std::map<std::string, Token> keys;
  FieldPtr field;
};

Header parse_header(std::istream& in, std::initializer_list<const char*> required) {
  std::string line;
  if (!std::getline(in, line)) throw parse_error(1, 1, "missing header");
  Header h;
  for (const Token& t : split(line)) {
    const auto eq = t.text.find('=');
    if (eq == std::string::npos || eq == 0) throw parse_error(1, t.column, "expected key=value, got '" + t.text + "'");
    const std::string key = t.text.substr(0, eq);
    if (!h.keys.emplace(key, Token{t.text.substr(eq + 1), t.column + eq + 1}).second) {
      throw parse_error(1, t.column, "repeated key '" + key + "'");
    }
  }
  for (const char* key : required) {
    if (!h.keys.count(key)) throw parse_error(1, 1, std::string("header lacks ") + key + "=");
  }
  for (const auto& [key, tok] : h.keys) {
    bool known = key == "poly";
    for (const char* r : required) known = known || key == r;
    if (!known) throw parse_error(1, tok.column, "unknown header key '" + key + "'");
  }
  const Token& qt = h.keys.at("q");
  const auto q = to_int(qt.text);
  if (!q) throw parse_error(1, qt.column, "q is not an integer");
  std::optional<std::vector<int>> poly;
  if (auto it = h.keys.find("poly"); it != h.keys.end()) {
    std::vector<int> coeffs;
    std::size_t pos = 0;
    const std::string& s = it->second.text;
    while (true) {
      const std::size_t comma = s.find(',', pos);
      const auto c = to_int(std::string_view(s).substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
      if (!c) throw parse_error(1, it->second.column + pos, "bad polynomial coefficient");
      coeffs.push_back(static_cast<int>(*c));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    poly = std::move(coeffs);
  }
  try {
    h.field = make_field_of_order(static_cast<int>(*q), poly);
  } catch (const Error& e) {
    throw parse_error(1, qt.column, e.what());
  }
  return h;
}

std::size_t header_size(const Header& h, const char* key) {
  const Token& t = h.keys.at(key);
  const auto v = to_int(t.text);
  if (!v || *v < 0) throw parse_error(1, t.column, std::string(key) + " must be a non-negative integer");
  return static_cast<std::size_t>(*v);
}

std::vector<Elem> parse_row(const std::string& line, std::size_t line_no, std::size_t width, const Field& f) {
  const auto tokens = split(line);
  if (tokens.size() != width) {
    throw parse_error(line_no, tokens.empty() ? 1 : tokens.back().column,
                      "expected " + std::to_string(width) + " entries, found " + std::to_string(tokens.size()));
  }
  std::vector<Elem> out;
  out.reserve(width);
  for (const Token& t : tokens) {
    const auto v = to_int(t.text);
    if (!v) throw parse_error(line_no, t.column, "'" + t.text + "' is not an integer");
    if (!f.contains(static_cast<int>(*v))) {
      throw parse_error(line_no, t.column, "element code " + t.text + " is outside [0," + std::to_string(f.q()) + ")");
    }
    out.push_back(static_cast<Elem>(*v));
  }
  return out;
}

void write_row(std::ostream& out, std::span<const Elem> row) {
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (j) out << ' ';
    out << static_cast<int>(row[j]);
  }
  out << '\n';
}

void check_field(const FieldPtr& got, const FieldPtr& expected) {
  if (!got->same_as(*expected)) {
    throw Error(ErrorCode::FieldMismatch, "file is over " + got->header() + ", expected " + expected->header());
  }
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  return out;
}

}  // namespace

VectorList read_set(std::istream& in) {
  const Header h = parse_header(in, {"q", "r"});
  VectorList out;
  out.field = h.field;
  out.r = header_size(h, "r");
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    out.vectors.emplace_back(out.field, parse_row(line, line_no, out.r, *out.field));
  }
  return out;
}

VectorList load_set(const std::string& path) {
  auto in = open_in(path);
  return read_set(in);
}

VectorList load_set(const std::string& path, const FieldPtr& expected) {
  VectorList out = load_set(path);
  check_field(out.field, expected);
  return out;
}

void write_set(std::ostream& out, const Field& field, std::size_t r, const std::vector<FqVector>& vectors) {
  out << field.header() << " r=" << r << '\n';
  for (const FqVector& v : vectors) {
    if (v.dim() != r) throw Error(ErrorCode::DimensionMismatch, "vector has wrong dimension");
    write_row(out, v.coords());
  }
}

void save_set(const std::string& path, const Field& field, std::size_t r, const std::vector<FqVector>& vectors) {
  auto out = open_out(path);
  write_set(out, field, r, vectors);
}

FqMatrix read_matrix(std::istream& in) {
  const Header h = parse_header(in, {"q", "rows", "cols"});
  const std::size_t rows = header_size(h, "rows");
  const std::size_t cols = header_size(h, "cols");
  std::vector<Elem> entries;
  entries.reserve(rows * cols);
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no - 1 > rows) throw parse_error(line_no, 1, "more rows than declared");
    const auto row = parse_row(line, line_no, cols, *h.field);
    entries.insert(entries.end(), row.begin(), row.end());
  }
  if (line_no - 1 != rows) {
    throw parse_error(line_no + 1, 1, "expected " + std::to_string(rows) + " rows, found " + std::to_string(line_no - 1));
  }
  return FqMatrix(h.field, rows, cols, std::move(entries));
}

FqMatrix load_matrix(const std::string& path) {
  auto in = open_in(path);
  return read_matrix(in);
}

FqMatrix load_matrix(const std::string& path, const FieldPtr& expected) {
  FqMatrix m = load_matrix(path);
  check_field(m.field_ptr(), expected);
  return m;
}

void write_matrix(std::ostream& out, const FqMatrix& m) {
  out << "q=" << m.field().q() << " rows=" << m.rows() << " cols=" << m.cols();
  const std::string header = m.field().header();
  if (const auto pos = header.find(" poly="); pos != std::string::npos) out << header.substr(pos);
  out << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) write_row(out, m.row_span(i));
}

void save_matrix(const std::string& path, const FqMatrix& m) {
  auto out = open_out(path);
  write_matrix(out, m);
}

}  // namespace shlin
