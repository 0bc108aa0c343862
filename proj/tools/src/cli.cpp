#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "fmds/bounds.hpp"
#include "fmds/codec.hpp"
#include "fmds/matrix_file.hpp"

namespace fmds::cli {

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

constexpr std::uint64_t kDemoSamples = 100'000;
constexpr std::uint64_t kDemoSeed = 42;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CertifyMode parse_mode(const std::string& text, std::uint64_t budget) {
  if (text == "full") return CertifyMode::full(budget);
  // sampled:N:seed
  const auto first = text.find(':');
  const auto second = text.find(':', first == std::string::npos ? first : first + 1);
  if (text.substr(0, first) != "sampled" || first == std::string::npos || second == std::string::npos) {
    throw UsageError("--mode must be 'full' or 'sampled:N:seed'");
  }
  try {
    std::size_t used = 0;
    const std::string n_text = text.substr(first + 1, second - first - 1);
    const std::string seed_text = text.substr(second + 1);
    const std::uint64_t samples = std::stoull(n_text, &used);
    if (used != n_text.size()) throw std::invalid_argument(n_text);
    const std::uint64_t seed = std::stoull(seed_text, &used);
    if (used != seed_text.size()) throw std::invalid_argument(seed_text);
    return CertifyMode::sampled(samples, seed);
  } catch (const std::logic_error&) {
    throw UsageError("bad number in --mode '" + text + "'");
  }
}

Word parse_symbols(const std::string& text, const FieldContext& field) {
  std::istringstream is(text);
  Word word;
  bool any_erased = false;
  for (std::string tok; is >> tok;) {
    if (tok == "?") {
      word.symbols.emplace_back(0);
      word.erasures.push_back(true);
      any_erased = true;
      continue;
    }
    std::uint64_t v = 0;
    std::size_t used = 0;
    try {
      v = std::stoull(tok, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used != tok.size() || tok.front() == '-' || v >= field.q()) {
      throw UsageError("symbol '" + tok + "' is not an integer in [0, " + std::to_string(field.q()) + ")");
    }
    word.symbols.emplace_back(static_cast<std::uint32_t>(v));
    word.erasures.push_back(false);
  }
  if (!any_erased) word.erasures.clear();
  return word;
}

std::string read_all(std::istream& in) {
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string join_symbols(std::span<const FieldElement> symbols) {
  std::string out;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(symbols[i].value);
  }
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::string rows_label(const Provenance& prov, std::size_t q) {
  if (!prov.selection) return "-";
  std::string out;
  for (std::size_t r : selected_rows(*prov.selection, q - 1)) {
    if (!out.empty()) out += ',';
    out += std::to_string(r + 1);
  }
  return out;
}

std::string field_label(const FieldContext& f) { return "GF(" + std::to_string(f.q()) + ")"; }

std::string shape_label(const LinearCode& code) {
  return "[" + std::to_string(code.n()) + "," + std::to_string(code.k()) + "]";
}

// Option values shared by the subcommands; CLI11 binds into these.
struct Options {
  std::uint32_t p = 0;
  std::uint32_t m = 1;
  std::string kind = "extended";
  std::size_t start = 1;
  std::size_t count = 0;
  std::size_t step = 1;
  std::string output;
  std::string file;
  std::string mode = "full";
  std::uint64_t budget = kDefaultMinorBudget;
  bool standard = false;
  std::string symbols;
  bool symbols_given = false;
  std::string method = "auto";
  bool print_codeword = false;
  std::uint32_t q = 0;
  std::string out_dir = ".";
};

int cmd_build(const Options& o, Io io) {
  const FieldPtr field = FieldContext::build(o.p, o.m);
  if (o.start == 0) throw UsageError("--start is 1-based");
  std::optional<LinearCode> code;
  if (o.kind == "even3") {
    const RowSelection sel{o.start - 1, o.count == 0 ? 3 : o.count, o.step};
    code = extend_identity_columns_dim3(field, sel);
  } else {
    if (o.count == 0) throw UsageError("--count is required for kind " + o.kind);
    const RowSelection sel{o.start - 1, o.count, o.step};
    code = code_from_rows(field, sel);
    if (o.kind == "extended") {
      code = extend_two_columns(*code);
    } else if (o.kind != "fourier") {
      throw UsageError("unknown --kind '" + o.kind + "'");
    }
  }
  const std::string text = serialize(*code);
  if (o.output.empty() || o.output == "-") {
    io.out << text;
  } else {
    write_file(o.output, text);
  }
  return kOk;
}

int cmd_certify(const Options& o, Io io) {
  const LinearCode code = to_code(read_matrix_file(o.file));
  MdsCertificate cert;
  if (o.standard) {
    if (o.mode != "full") throw UsageError("--standard certifies in full mode only");
    const StandardForm sf = standard_form(code);
    cert = certify_mds_standard(sf.code, o.budget);
    if (cert.counterexample) {
      // A column set is singular for every generator of the code.
      for (auto& c : cert.counterexample->cols) c = sf.permutation[c];
      std::sort(cert.counterexample->cols.begin(), cert.counterexample->cols.end());
    }
  } else {
    cert = certify_mds(code, parse_mode(o.mode, o.budget));
  }
  io.out << to_text(cert);
  return cert.verdict ? kOk : kNegative;
}

std::string input_symbols(const Options& o, Io io) { return o.symbols_given ? o.symbols : read_all(io.in); }

int cmd_encode(const Options& o, Io io) {
  const LinearCode code = to_code(read_matrix_file(o.file));
  const Word message = parse_symbols(input_symbols(o, io), code.field());
  if (!message.erasures.empty()) throw UsageError("erasure marks are not allowed in a message");
  io.out << join_symbols(encode(message.symbols, code).symbols) << '\n';
  return kOk;
}

int cmd_decode(const Options& o, Io io) {
  const LinearCode code = to_code(read_matrix_file(o.file));
  const Word received = parse_symbols(input_symbols(o, io), code.field());
  if (received.symbols.size() != code.n()) {
    throw Error(Errc::LengthMismatch, "expected " + std::to_string(code.n()) + " symbols, got " +
                                          std::to_string(received.symbols.size()));
  }
  std::string method = o.method;
  if (method == "auto") method = received.erased_count() > 0 ? "erasure" : "error";
  DecodeResult result;
  if (method == "erasure") {
    result = erasure_decode(received, code);
  } else if (method == "error") {
    if (received.erased_count() > 0) throw UsageError("error decoding does not take erasure marks");
    result = error_decode(received, with_check(code), o.budget);
  } else {
    throw UsageError("--method must be auto, erasure or error");
  }
  io.out << join_symbols(o.print_codeword ? std::span<const FieldElement>(result.codeword.symbols)
                                          : std::span<const FieldElement>(result.message))
         << '\n';
  io.err << "corrections: " << result.corrections << '\n';
  return kOk;
}

int cmd_search(const Options& o, Io io) {
  if (o.q > 9) throw UsageError("search is limited to q <= 9");
  const FieldPtr field = FieldContext::of_order(o.q);
  const SearchReport report = max_length_dim3(field);
  std::string path = "-";
  if (report.witness) {
    path = (std::filesystem::path(o.out_dir) /
            ("witness_q" + std::to_string(report.q) + "_n" + std::to_string(report.max_n) + ".txt"))
               .string();
    write_file(path, serialize(*report.witness));
  }
  SearchReport summary = report;
  summary.witness.reset();
  io.out << to_text(summary) << "witness: " << path << '\n';
  return kOk;
}

int cmd_demo(const Options& o, Io io) {
  const auto samples = run_demo(o.out_dir);
  io.out << demo_table(samples);
  const bool all = std::all_of(samples.begin(), samples.end(), [](const DemoSample& s) { return s.verdict; });
  return all ? kOk : kNegative;
}

}  // namespace

std::vector<DemoSample> run_demo(const std::string& out_dir) {
  struct SampleCode {
    std::string name;
    LinearCode code;
    CertifyMode mode;
  };
  const auto gf9 = FieldContext::of_order(9);
  const auto gf27 = FieldContext::of_order(27);
  const auto gf257 = FieldContext::of_order(257);
  const LinearCode gf27_28_4 = extend_two_columns(code_from_rows(gf27, {0, 4, 1}));
  const std::vector<SampleCode> codes{
      {"gf9_10_4", extend_two_columns(code_from_rows(gf9, {0, 4, 1})), CertifyMode::full()},
      {"gf9_10_3_step3", extend_two_columns(code_from_rows(gf9, {1, 3, 3})), CertifyMode::full()},
      {"gf9_10_4_wrap", extend_two_columns(code_from_rows(gf9, {1, 4, 3})), CertifyMode::full()},
      {"gf27_28_4", gf27_28_4, CertifyMode::full()},
      {"gf27_28_24_dual", dual_code(gf27_28_4), CertifyMode::full()},
      {"gf8_10_3_even3", extend_identity_columns_dim3(FieldContext::of_order(8)), CertifyMode::full()},
      {"gf257_258_4_step3", extend_two_columns(code_from_rows(gf257, {0, 4, 3})),
       CertifyMode::sampled(kDemoSamples, kDemoSeed)},
  };

  std::vector<DemoSample> out;
  for (const SampleCode& s : codes) {
    const MdsCertificate cert = certify_mds(s.code, s.mode);
    DemoSample row;
    row.name = s.name;
    row.field = field_label(s.code.field());
    row.shape = shape_label(s.code);
    row.construction = std::string(to_string(s.code.provenance().kind));
    row.rows = s.code.provenance().kind == Construction::Dual ? "-" : rows_label(s.code.provenance(), s.code.field().q());
    row.mode = s.mode.kind == CertifyMode::Kind::Full
                   ? "full"
                   : "sampled:" + std::to_string(s.mode.samples) + ":" + std::to_string(s.mode.seed);
    row.minors_checked = cert.minors_checked;
    row.verdict = cert.verdict;
    out.push_back(std::move(row));
    if (!out_dir.empty()) write_file((std::filesystem::path(out_dir) / (s.name + ".txt")).string(), serialize(s.code));
  }
  return out;
}

std::string demo_table(const std::vector<DemoSample>& samples) {
  std::ostringstream os;
  os << std::left << std::setw(20) << "sample" << std::setw(9) << "field" << std::setw(9) << "code"
     << std::setw(10) << "kind" << std::setw(10) << "rows" << std::setw(22) << "mode" << std::setw(10) << "minors"
     << "mds\n";
  for (const DemoSample& s : samples) {
    os << std::left << std::setw(20) << s.name << std::setw(9) << s.field << std::setw(9) << s.shape
       << std::setw(10) << s.construction << std::setw(10) << s.rows << std::setw(22) << s.mode << std::setw(10)
       << s.minors_checked << (s.verdict ? "true" : "false") << '\n';
  }
  return os.str();
}

int run(const std::vector<std::string>& args, Io io) {
  CLI::App app{"MDS codes from Fourier matrices over finite fields", "fmds"};
  app.require_subcommand(1);
  Options o;

  auto* build = app.add_subcommand("build", "Write a generator matrix file");
  build->add_option("-p", o.p, "field characteristic")->required();
  build->add_option("-m", o.m, "extension degree")->capture_default_str();
  build->add_option("--kind", o.kind, "fourier | extended | even3")->capture_default_str();
  build->add_option("--start", o.start, "first Fourier row, 1-based")->capture_default_str();
  build->add_option("--count", o.count, "number of rows (dimension)");
  build->add_option("--step", o.step, "row step, coprime to q - 1")->capture_default_str();
  build->add_option("-o,--output", o.output, "output file (default stdout)");

  auto* certify = app.add_subcommand("certify", "Check every (or sampled) maximal minor");
  certify->add_option("file", o.file)->required();
  certify->add_option("--mode", o.mode, "full | sampled:N:seed")->capture_default_str();
  certify->add_option("--budget", o.budget, "refuse full checks above this many minors")->capture_default_str();
  certify->add_flag("--standard", o.standard, "reduce to (I | A) and check the minors of A");

  auto* encode_cmd = app.add_subcommand("encode", "Encode a message read from stdin or --symbols");
  encode_cmd->add_option("file", o.file)->required();
  encode_cmd->add_option("-s,--symbols", o.symbols, "whitespace separated symbols");

  auto* decode_cmd = app.add_subcommand("decode", "Decode a received word; '?' marks an erasure");
  decode_cmd->add_option("file", o.file)->required();
  decode_cmd->add_option("-s,--symbols", o.symbols, "whitespace separated symbols");
  decode_cmd->add_option("--method", o.method, "auto | erasure | error")->capture_default_str();
  decode_cmd->add_option("--budget", o.budget, "maximum error supports tried")->capture_default_str();
  decode_cmd->add_flag("--codeword", o.print_codeword, "print the codeword instead of the message");

  auto* search = app.add_subcommand("search", "Find the longest [n,3] MDS code over GF(q)");
  search->add_option("-q", o.q, "field order, at most 9")->required();
  search->add_option("--out-dir", o.out_dir, "directory for the witness matrix")->capture_default_str();

  auto* demo = app.add_subcommand("demo", "Build and certify the sample codes");
  demo->add_option("--out-dir", o.out_dir, "directory for the matrix files")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = app.exit(e, out, err);
    io.out << out.str();
    io.err << err.str();
    return code == 0 ? kOk : kUsage;
  }
  o.symbols_given = (encode_cmd->parsed() && encode_cmd->count("--symbols") > 0) ||
                    (decode_cmd->parsed() && decode_cmd->count("--symbols") > 0);

  try {
    if (build->parsed()) return cmd_build(o, io);
    if (certify->parsed()) return cmd_certify(o, io);
    if (encode_cmd->parsed()) return cmd_encode(o, io);
    if (decode_cmd->parsed()) return cmd_decode(o, io);
    if (search->parsed()) return cmd_search(o, io);
    if (demo->parsed()) return cmd_demo(o, io);
  } catch (const UsageError& e) {
    io.err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    io.err << "error: " << e.what() << '\n';
    return e.code() == Errc::DecodingFailure ? kNegative : kUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    io.err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace fmds::cli
