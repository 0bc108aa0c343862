#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace fmds::cli {

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

/// Runs one `fmds` invocation. `args` excludes the program name. Exit status:
/// 0 success or MDS verdict, 1 not MDS or decoding failure, 2 usage, input
/// or budget errors.
int run(const std::vector<std::string>& args, Io io);

/// One row of the demo summary table.
struct DemoSample {
  std::string name;  // file stem
  std::string field;
  std::string shape;
  std::string construction;
  std::string rows;  // 1-based row indices of the Fourier matrix
  std::string mode;
  std::uint64_t minors_checked = 0;
  bool verdict = false;
};

/// Builds and certifies the sample codes, writing `<name>.txt` matrix files to
/// `out_dir` (skipped when empty).
std::vector<DemoSample> run_demo(const std::string& out_dir);

std::string demo_table(const std::vector<DemoSample>& samples);

}  // namespace fmds::cli
