// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "corpus.hpp"
#include "fmds/bounds.hpp"
#include "fmds/codec.hpp"
#include "fmds/combinatorics.hpp"
#include "fmds/fourier.hpp"
#include "fmds/matrix_file.hpp"
#include "oracles.hpp"
#include "patterns.hpp"

using namespace fmds;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

constexpr std::uint32_t kSweepOrders[] = {4, 5, 7, 8, 9, 11, 13, 16};

std::vector<std::size_t> coprime_steps(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t s = 1; s <= n; ++s) {
    if (std::gcd(s, n) == 1) out.push_back(s);
  }
  return out;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Outcome fail(std::string why) { return {false, std::move(why)}; }

// 1. Every row selection (start, coprime step, r) of F_{q-1} is MDS.
Outcome fourier_row_sweep() {
  std::uint64_t codes = 0;
  std::uint64_t minors = 0;
  for (std::uint32_t q : kSweepOrders) {
    const auto field = FieldContext::of_order(q);
    const std::size_t n = q - 1;
    for (std::size_t step : coprime_steps(n)) {
      for (std::size_t start = 0; start < n; ++start) {
        for (std::size_t r = 1; r <= n; ++r) {
          if (binomial(n, r) > 1'000'000) continue;
          const RowSelection sel{start, r, step};
          const MdsCertificate cert = certify_mds(code_from_rows(field, sel));
          ++codes;
          minors += cert.minors_checked;
          if (!cert.verdict) {
            return fail("GF(" + std::to_string(q) + ") start=" + std::to_string(start + 1) +
                        " count=" + std::to_string(r) + " step=" + std::to_string(step));
          }
        }
      }
    }
  }
  return {true, std::to_string(codes) + " codes, " + std::to_string(minors) + " minors"};
}

// 2. The [q+1, r] two-column extension is MDS for r in [2, min(q-1, 6)].
Outcome two_column_sweep() {
  std::uint64_t codes = 0;
  std::uint64_t minors = 0;
  for (std::uint32_t q : kSweepOrders) {
    const auto field = FieldContext::of_order(q);
    const std::size_t n = q - 1;
    for (std::size_t step : coprime_steps(n)) {
      for (std::size_t start = 0; start < n; ++start) {
        for (std::size_t r = 2; r <= std::min<std::size_t>(n, 6); ++r) {
          const LinearCode code = extend_two_columns(code_from_rows(field, {start, r, step}));
          const MdsCertificate cert = certify_mds(code);
          ++codes;
          minors += cert.minors_checked;
          if (!cert.verdict || cert.minors_checked != binomial(q + 1, r)) {
            return fail("GF(" + std::to_string(q) + ") start=" + std::to_string(start + 1) +
                        " count=" + std::to_string(r) + " step=" + std::to_string(step));
          }
        }
      }
    }
  }
  return {true, std::to_string(codes) + " codes, " + std::to_string(minors) + " minors"};
}

// 3. (I_3 | A) over GF(4), GF(8), GF(16) and its dual.
Outcome even_dim3_codes() {
  std::string detail;
  for (const auto [q, expected] : {std::pair{4u, 20u}, std::pair{8u, 120u}, std::pair{16u, 816u}}) {
    const LinearCode code = extend_identity_columns_dim3(FieldContext::of_order(q));
    const MdsCertificate cert = certify_mds(code);
    if (!cert.verdict || cert.minors_checked != expected) {
      return fail("GF(" + std::to_string(q) + ") [q+2,3]: " + std::to_string(cert.minors_checked) + " minors");
    }
    const LinearCode dual = standard_form(dual_code(code)).code;
    const MdsCertificate dual_cert = certify_mds_standard(dual);
    if (!dual_cert.verdict || dual.k() != q - 1 || dual_cert.minors_checked != binomial(q + 2, q - 1)) {
      return fail("GF(" + std::to_string(q) + ") dual");
    }
    detail += "GF(" + std::to_string(q) + "): " + std::to_string(cert.minors_checked) + " + dual " +
              std::to_string(dual_cert.minors_checked) + "; ";
  }
  detail.resize(detail.size() - 2);
  return {true, detail};
}

std::string per_length_text(const SearchReport& report) {
  std::string out;
  for (const auto& [n, examined] : report.per_length) {
    if (!out.empty()) out += ' ';
    out += "n=" + std::to_string(n) + ":" + std::to_string(examined);
  }
  return out;
}

// 4. Odd q: the longest [n, 3] MDS code has n = q + 1.
Outcome odd_max_length() {
  std::string detail;
  for (std::uint32_t q : {3u, 5u, 7u}) {
    const SearchReport report = max_length_dim3(FieldContext::of_order(q));
    if (report.max_n != q + 1 || !report.witness || !certify_mds(*report.witness).verdict) {
      return fail("q=" + std::to_string(q) + " max_n=" + std::to_string(report.max_n));
    }
    if (report.per_length.front().first != q + 2 ||
        report.per_length.front().second != dim3_candidate_count(q, q + 2)) {
      return fail("q=" + std::to_string(q) + " did not exhaust n = q + 2");
    }
    if (q == 7 && report.per_length.front().second > 720) return fail("q=7 examined more than 720 at n=9");
    detail += "q=" + std::to_string(q) + " max_n=" + std::to_string(report.max_n) + " (" +
              per_length_text(report) + "); ";
  }
  detail.resize(detail.size() - 2);
  return {true, detail};
}

// 5. Even q: the longest [n, 3] MDS code has n = q + 2.
Outcome even_max_length() {
  std::string detail;
  for (std::uint32_t q : {4u, 8u}) {
    const SearchReport report = max_length_dim3(FieldContext::of_order(q));
    if (report.max_n != q + 2 || !report.witness || !certify_mds(*report.witness).verdict) {
      return fail("q=" + std::to_string(q) + " max_n=" + std::to_string(report.max_n));
    }
    detail += "q=" + std::to_string(q) + " max_n=" + std::to_string(report.max_n) + " (" +
              per_length_text(report) + "); ";
  }
  detail.resize(detail.size() - 2);
  return {true, detail};
}

// 6. det [[w^i, w^j], [w^k, w^l]] = 0 exactly when i - k = j - l mod q - 1.
Outcome power_determinants() {
  std::mt19937_64 rng(6);
  std::uint64_t trials = 0;
  for (std::uint32_t q : {4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 27u, 32u, 257u}) {
    const auto field = FieldContext::of_order(q);
    const oracle::PolyField ref(field->spec());
    const std::uint32_t omega = test::oracle_omega(ref, field->spec());
    const std::int64_t n = q - 1;
    std::vector<std::uint32_t> powers(static_cast<std::size_t>(4 * n + 1));
    powers[0] = 1;
    for (std::size_t e = 1; e < powers.size(); ++e) powers[e] = ref.mul(powers[e - 1], omega);
    std::uniform_int_distribution<std::int64_t> pick(0, 2 * n);
    for (int t = 0; t < 10'000; ++t) {
      const std::int64_t i = pick(rng), j = pick(rng), k = pick(rng), l = pick(rng);
      const bool congruent = (((i - k) - (j - l)) % n + n) % n == 0;
      const auto at = [&](std::int64_t e) { return powers[static_cast<std::size_t>(e)]; };
      const bool oracle_zero = ref.sub(ref.mul(at(i), at(l)), ref.mul(at(j), at(k))) == 0;
      const FieldMatrix m = FieldMatrix::from_rows(field, {{at(i), at(j)}, {at(k), at(l)}});
      const bool library_zero = determinant(m).value == 0;
      ++trials;
      if (congruent != oracle_zero || congruent != library_zero) {
        return fail("GF(" + std::to_string(q) + ") exponents " + std::to_string(i) + "," + std::to_string(j) + "," +
                    std::to_string(k) + "," + std::to_string(l));
      }
    }
  }
  return {true, std::to_string(trials) + " trials over 11 fields"};
}

// 7. The first three rows of F_{q-1} have no singular 2x2 submatrix for even q.
Outcome first_three_rows() {
  for (std::uint32_t q : {4u, 8u, 16u, 32u}) {
    const auto field = FieldContext::of_order(q);
    if (!check_first_three_rows_2x2(field)) return fail("GF(" + std::to_string(q) + ")");
    const FieldMatrix a = select_rows(fourier_matrix(field), {0, 3, 1});
    if (!oracle::brute_minors(oracle::PolyField(field->spec()), oracle::to_grid(a), 2).all_nonzero) {
      return fail("GF(" + std::to_string(q) + ") oracle disagrees");
    }
  }
  return {true, "GF(4), GF(8), GF(16), GF(32)"};
}

// 8. Encode then decode recovers the message.
Outcome codec_roundtrips() {
  const LinearCode even3 = extend_identity_columns_dim3(FieldContext::of_order(8));
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::uint32_t> sym8(0, 7);
  std::size_t masks = 0;
  for (const auto& erased : oracle::subsets(10, 7)) {
    std::vector<FieldElement> msg(3);
    for (auto& s : msg) s = FieldElement{sym8(rng)};
    Word r = encode(msg, even3);
    r.erasures.assign(10, false);
    for (std::size_t i : erased) {
      r.erasures[i] = true;
      r.symbols[i] = FieldElement{0};
    }
    if (erasure_decode(r, even3).message != msg) return fail("erasure mask " + std::to_string(masks));
    ++masks;
  }

  const auto gf9 = FieldContext::of_order(9);
  const LinearCode code = with_check(extend_two_columns(code_from_rows(gf9, {0, 4, 1})));
  std::uniform_int_distribution<std::uint32_t> sym9(0, 8);
  std::uniform_int_distribution<std::uint32_t> nonzero9(1, 8);
  std::vector<std::size_t> positions(10);
  std::iota(positions.begin(), positions.end(), std::size_t{0});
  for (int t = 0; t < 1000; ++t) {
    std::vector<FieldElement> msg(4);
    for (auto& s : msg) s = FieldElement{sym9(rng)};
    Word r = encode(msg, code);
    std::shuffle(positions.begin(), positions.end(), rng);
    const std::size_t weight = static_cast<std::size_t>(t) % 4;
    for (std::size_t e = 0; e < weight; ++e) {
      r.symbols[positions[e]] = gf9->add(r.symbols[positions[e]], FieldElement{nonzero9(rng)});
    }
    const DecodeResult d = error_decode(r, code);
    if (d.message != msg || d.corrections != weight) return fail("error trial " + std::to_string(t));
  }
  return {true, std::to_string(masks) + " erasure masks, 1000 error injections"};
}

// 9. Exhaustive minimum distance equals n - k + 1.
Outcome singleton_equality() {
  std::size_t checked = 0;
  for (const auto& entry : test::code_corpus()) {
    const LinearCode& code = entry.code;
    std::uint64_t space = 1;
    for (std::size_t i = 0; i < code.k(); ++i) space = saturating_mul(space, code.field().q());
    if (space > 1'000'000) continue;
    const std::size_t d = oracle::min_distance(oracle::PolyField(code.field().spec()), oracle::to_grid(code.generator()));
    if (d != code.mds_distance()) return fail(entry.name + ": d=" + std::to_string(d));
    ++checked;
  }
  return {true, std::to_string(checked) + " corpus codes"};
}

// 10. The demo regenerates the sample matrices exactly.
Outcome sample_reproduction() {
  const auto start = std::chrono::steady_clock::now();
  const fs::path dir = fs::temp_directory_path() / ("fmds_acceptance_" + std::to_string(std::random_device{}()));
  fs::create_directories(dir);
  const auto samples = cli::run_demo(dir.string());
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Outcome out{true, ""};
  const fs::path golden(FMDS_GOLDEN_DIR);
  if (cli::demo_table(samples) != slurp(golden / "demo.txt")) out = fail("summary table differs from golden");
  for (const auto& s : samples) {
    if (!out.pass) break;
    if (!s.verdict) out = fail(s.name + " not certified");
    else if (slurp(dir / (s.name + ".txt")) != slurp(golden / (s.name + ".txt"))) out = fail(s.name + " differs");
  }
  struct Pattern {
    std::string name;
    std::size_t offset;
    std::vector<std::size_t> rows;
  };
  const std::vector<Pattern> patterns{{"gf9_10_4", 2, {0, 1, 2, 3}},
                                      {"gf27_28_4", 2, {0, 1, 2, 3}},
                                      {"gf8_10_3_even3", 3, {0, 1, 2}},
                                      {"gf257_258_4_step3", 2, {0, 3, 6, 9}}};
  for (const auto& p : patterns) {
    if (!out.pass) break;
    const FieldMatrix g = read_matrix_file((dir / (p.name + ".txt")).string()).matrix;
    if (auto mismatch = test::fourier_pattern_mismatch(g, p.offset, p.rows)) out = fail(p.name + ": " + *mismatch);
  }
  const auto gf257 = FieldContext::of_order(257);
  if (out.pass && gf257->omega().value != 3) out = fail("GF(257) omega is not 3");
  const auto& last = samples.back();
  if (out.pass && (last.mode != "sampled:100000:42" || last.minors_checked != 100'000)) {
    out = fail("GF(257) sampling mode");
  }
  if (out.pass && seconds > 120) out = fail("demo took " + std::to_string(seconds) + " s");
  std::error_code ec;
  fs::remove_all(dir, ec);
  if (out.pass) out.detail = std::to_string(samples.size()) + " samples match golden files";
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    double limit_seconds;
  };
  const std::vector<Criterion> criteria{
      {1, "Fourier row-selection codes are MDS", fourier_row_sweep, 300},
      {2, "two-column extensions are MDS", two_column_sweep, 300},
      {3, "even q: [q+2,3] codes and duals are MDS", even_dim3_codes, 300},
      {4, "odd q: longest [n,3] MDS code is q+1", odd_max_length, 60},
      {5, "even q: longest [n,3] MDS code is q+2", even_max_length, 60},
      {6, "2x2 power determinants vs exponent congruence", power_determinants, 300},
      {7, "first three Fourier rows, even q: no singular 2x2", first_three_rows, 300},
      {8, "codec roundtrips", codec_roundtrips, 300},
      {9, "exhaustive minimum distance is n-k+1", singleton_equality, 300},
      {10, "sample matrices reproduced", sample_reproduction, 120},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.pass && seconds > c.limit_seconds) out = fail("exceeded " + std::to_string(c.limit_seconds) + " s");
    failures += out.pass ? 0 : 1;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", seconds);
    std::cout << (out.pass ? "PASS" : "FAIL") << ' ' << std::setw(2) << c.id << ' ' << c.name << ": " << out.detail
              << " (" << timing << ")\n";
  }
  std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}
