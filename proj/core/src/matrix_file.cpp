#include "fmds/matrix_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace fmds {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::uint64_t parse_uint(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
    fail(line, "expected a nonnegative integer, got '" + std::string(token) + "'");
  }
  return value;
}

std::string_view value_of(std::string_view token, std::string_view key, std::size_t line) {
  if (token.substr(0, key.size()) != key || token.size() <= key.size() || token[key.size()] != '=') {
    fail(line, "expected " + std::string(key) + "=...");
  }
  return token.substr(key.size() + 1);
}

std::vector<std::string> split(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

FieldSpec parse_field_line(const std::string& line, std::size_t no) {
  const auto tokens = split(line);
  if (tokens.size() != 4 || tokens[0] != "field") fail(no, "expected 'field p=<> m=<> modulus=[..]'");
  FieldSpec spec;
  spec.p = static_cast<std::uint32_t>(parse_uint(value_of(tokens[1], "p", no), no));
  spec.m = static_cast<std::uint32_t>(parse_uint(value_of(tokens[2], "m", no), no));
  std::string_view list = value_of(tokens[3], "modulus", no);
  if (list.size() < 2 || list.front() != '[' || list.back() != ']') fail(no, "modulus must be [c0,...,cm]");
  list = list.substr(1, list.size() - 2);
  while (!list.empty()) {
    const std::size_t comma = list.find(',');
    spec.modulus.push_back(static_cast<std::uint32_t>(parse_uint(list.substr(0, comma), no)));
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return spec;
}

Provenance parse_provenance(const std::string& body, std::size_t no) {
  const auto tokens = split(body);
  if (tokens.empty()) fail(no, "empty provenance");
  Provenance prov;
  const auto kind = construction_from_string(value_of(tokens[0], "kind", no));
  if (!kind) fail(no, "unknown provenance kind");
  prov.kind = *kind;
  if (tokens.size() == 4) {
    RowSelection sel;
    const std::uint64_t start = parse_uint(value_of(tokens[1], "start", no), no);
    if (start == 0) fail(no, "start is 1-based");
    sel.start = start - 1;
    sel.count = parse_uint(value_of(tokens[2], "count", no), no);
    sel.step = parse_uint(value_of(tokens[3], "step", no), no);
    prov.selection = sel;
  } else if (tokens.size() != 1) {
    fail(no, "provenance takes kind and optionally start, count, step");
  }
  return prov;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + "]";
}

}  // namespace

std::string serialize(const FieldMatrix& matrix, const std::optional<Provenance>& provenance) {
  std::ostringstream os;
  os << "field " << to_string(matrix.field().spec()) << '\n';
  os << "dims " << matrix.rows() << ' ' << matrix.cols() << '\n';
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    for (std::size_t c = 0; c < matrix.cols(); ++c) {
      if (c) os << ' ';
      os << matrix(r, c).value;
    }
    os << '\n';
  }
  if (provenance) {
    os << "# provenance: kind=" << to_string(provenance->kind);
    if (provenance->selection) {
      const RowSelection& s = *provenance->selection;
      os << " start=" << s.start + 1 << " count=" << s.count << " step=" << s.step;
    }
    os << '\n';
  }
  return os.str();
}

std::string serialize(const LinearCode& code) { return serialize(code.generator(), code.provenance()); }

MatrixFile parse_matrix_file(std::istream& in) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::optional<Provenance> provenance;
  std::size_t no = 0;
  for (std::string line; std::getline(in, line);) {
    ++no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind("# provenance:", 0) == 0) {
      provenance = parse_provenance(line.substr(13), no);
    } else if (!line.empty() && line.front() == '#') {
      continue;
    } else if (line.find_first_not_of(" \t") != std::string::npos) {
      lines.emplace_back(no, line);
    }
  }
  if (lines.size() < 2) fail(no, "missing field or dims line");
  const FieldSpec spec = parse_field_line(lines[0].second, lines[0].first);
  FieldPtr field;
  try {
    field = FieldContext::from_spec(spec);
  } catch (const Error& e) {
    fail(lines[0].first, e.what());
  }

  const auto dims = split(lines[1].second);
  if (dims.size() != 3 || dims[0] != "dims") fail(lines[1].first, "expected 'dims <rows> <cols>'");
  const std::size_t rows = parse_uint(dims[1], lines[1].first);
  const std::size_t cols = parse_uint(dims[2], lines[1].first);
  if (lines.size() - 2 != rows) {
    fail(lines[1].first, "expected " + std::to_string(rows) + " rows, found " + std::to_string(lines.size() - 2));
  }
  std::vector<FieldElement> entries;
  entries.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& [line_no, text] = lines[2 + r];
    const auto tokens = split(text);
    if (tokens.size() != cols) {
      fail(line_no, "expected " + std::to_string(cols) + " entries, found " + std::to_string(tokens.size()));
    }
    for (const auto& tok : tokens) {
      const std::uint64_t v = parse_uint(tok, line_no);
      if (v >= field->q()) fail(line_no, "entry " + tok + " not below q = " + std::to_string(field->q()));
      entries.emplace_back(static_cast<std::uint32_t>(v));
    }
  }
  return MatrixFile{FieldMatrix(field, rows, cols, std::move(entries)), provenance};
}

MatrixFile parse_matrix_file(const std::string& text) {
  std::istringstream is(text);
  return parse_matrix_file(is);
}

MatrixFile read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  return parse_matrix_file(in);
}

LinearCode to_code(const MatrixFile& file) {
  return LinearCode(file.matrix, file.provenance.value_or(Provenance{}));
}

std::string to_string(const Minor& minor) {
  return "rows=" + join(minor.rows) + " cols=" + join(minor.cols);
}

std::string to_text(const MdsCertificate& cert) {
  std::ostringstream os;
  os << "verdict: " << (cert.verdict ? "mds" : "not-mds") << '\n';
  if (cert.mode.kind == CertifyMode::Kind::Full) {
    os << "mode: full\n";
  } else {
    os << "mode: sampled samples=" << cert.mode.samples << " seed=" << cert.mode.seed << '\n';
  }
  os << "minors_checked: " << cert.minors_checked << '\n';
  if (cert.counterexample) os << "counterexample: " << to_string(*cert.counterexample) << '\n';
  return os.str();
}

std::string to_text(const SearchReport& report) {
  std::ostringstream os;
  os << "q: " << report.q << '\n';
  os << "max_n: " << report.max_n << '\n';
  os << "candidates_examined: " << report.candidates_examined << '\n';
  for (const auto& [n, examined] : report.per_length) os << "examined_at_n " << n << ": " << examined << '\n';
  os << "normalization: " << report.normalization << '\n';
  if (report.witness) os << "witness:\n" << serialize(*report.witness);
  return os.str();
}

}  // namespace fmds
