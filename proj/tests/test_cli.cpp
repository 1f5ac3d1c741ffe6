#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "redwords/cli.hpp"

using redwords::cli_run;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli_run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("words transcript") {
  CliResult r = run({"words", "3,4,2,1"});
  CHECK(r.code == 0);
  CHECK(r.out == "12132\n12312\n21232\n21323\n23123\n");
}

TEST_CASE("count transcript") {
  CliResult r = run({"count", "3,4,2,1"});
  CHECK(r.code == 0);
  CHECK(r.out == "5\n");
}

TEST_CASE("classes transcript") {
  CliResult r = run({"classes", "3,4,2,1"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "[12132] = {12132, 12312}\n"
        "[21232] = {21232}\n"
        "[21323] = {21323, 23123}\n");
}

TEST_CASE("atoms transcript with both methods") {
  CliResult r = run({"atoms", "3,4,2,1", "--method", "both"});
  CHECK(r.code == 0);
  CHECK(r.out == "21232\n# methods agree: 1 atom(s)\n");
}

TEST_CASE("atoms accepts cycle notation with a degree hint") {
  CliResult r = run({"atoms", "(1 2)", "--degree", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
}

TEST_CASE("structure transcript") {
  CliResult r = run({"structure", "3,4,2,1"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "word=21232 case=seg_up m=1 M=3 i=2 j=2 oscillating=false\n"
        "atoms=1 oscillation=none\n");

  CliResult one = run({"structure", "3,4,2,1", "21232"});
  CHECK(one.code == 0);
  CHECK(one.out == "word=21232 case=seg_up m=1 M=3 i=2 j=2 oscillating=false\n");
}

TEST_CASE("render transcripts") {
  CliResult ascii = run({"render", "121"});
  CHECK(ascii.code == 0);
  CHECK(ascii.out == " *\n* *\n");

  CliResult svg = run({"render", "21232", "--format", "svg"});
  CHECK(svg.code == 0);
  CHECK(svg.out.find("points=\"1,2 2,1 4,3 5,2\"") != std::string::npos);
}

TEST_CASE("shift transcript") {
  CliResult r = run({"shift", "21232", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "32343\n");
}

TEST_CASE("table csv transcript") {
  CliResult r = run({"table", "--max-n", "4", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "n,a0,a1,a2,a3,a4\n"
        "1,1,1,0,0,0\n"
        "2,1,4,1,0,0\n"
        "3,5,15,3,0,1\n"
        "4,53,52,12,0,3\n");
}

TEST_CASE("verify subcommands map verdicts to exit codes") {
  CliResult holds = run({"--no-timing", "verify", "bound", "--n", "3"});
  CHECK(holds.code == 0);
  CHECK(holds.out ==
        "check=bound range=n=3 verdict=holds detail=max=4 witness=4,3,2,1\n");

  CliResult limited = run({"--no-timing", "verify", "tenner", "--letters", "2", "--max-len", "3"});
  CHECK(limited.code == 3);
  CHECK(limited.out.find("verdict=resource-limited") != std::string::npos);
}

TEST_CASE("verify bigclass transcript") {
  CliResult r = run({"--no-timing", "verify", "bigclass", "6,5,4,3,2,1"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "check=big-class range=perm=6,5,4,3,2,1 verdict=holds "
        "detail=class_size>=4;via_atom=123454321234323 witness=123451432134323\n");
}

TEST_CASE("verify agreement honors the seed") {
  CliResult a = run({"--no-timing", "--seed", "42", "verify", "agreement", "--degree", "5",
                     "--samples", "25"});
  CliResult b = run({"--no-timing", "--seed", "42", "verify", "agreement", "--degree", "5",
                     "--samples", "25"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("bscan transcript") {
  CliResult r = run({"--no-timing", "bscan", "--rank", "2"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "check=b-scan range=B2 verdict=holds detail=elements=8;max=2 witness=-1,-2\n");
}

TEST_CASE("usage errors exit 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"words"}).code == 1);
  CHECK(run({"words", "3,4,x"}).code == 1);
  CHECK(run({"atoms", "3,4,2,1", "--method", "bogus"}).code == 1);
  CHECK(run({"verify", "bigclass", "3,4,2,1"}).code == 1);  // fails the hypothesis gate
}

TEST_CASE("resource limits exit 3") {
  CliResult r = run({"--ceiling", "100", "words", "5,4,3,2,1"});
  CHECK(r.code == 3);
  CHECK(r.err.find("resource limit") != std::string::npos);
}

TEST_CASE("--output writes to a file") {
  auto path = std::filesystem::temp_directory_path() / "redwords-cli-out.txt";
  CliResult r = run({"--output", path.string(), "words", "3,4,2,1"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == "12132\n12312\n21232\n21323\n23123\n");
  std::filesystem::remove(path);
}

TEST_CASE("table cache is written once and reused") {
  auto dir = std::filesystem::temp_directory_path() / "redwords-cli-cache";
  std::filesystem::remove_all(dir);
  CliResult first =
      run({"table", "--max-n", "3", "--format", "csv", "--cache-dir", dir.string()});
  CHECK(first.code == 0);
  CHECK(std::filesystem::exists(dir / "atoms-n3.tsv"));
  CliResult second =
      run({"table", "--max-n", "3", "--format", "csv", "--cache-dir", dir.string()});
  CHECK(second.code == 0);
  CHECK(first.out == second.out);
  std::filesystem::remove_all(dir);
}

TEST_CASE("output is identical across worker counts") {
  CliResult one = run({"--workers", "1", "--no-timing", "table", "--max-n", "5",
                       "--format", "csv"});
  CliResult many = run({"--workers", "8", "--no-timing", "table", "--max-n", "5",
                        "--format", "csv"});
  CHECK(one.code == 0);
  CHECK(one.out == many.out);
}
