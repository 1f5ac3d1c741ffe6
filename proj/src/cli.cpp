#include "redwords/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "redwords/atoms.hpp"
#include "redwords/coxeter_b.hpp"
#include "redwords/diagrams.hpp"
#include "redwords/errors.hpp"
#include "redwords/verify.hpp"

namespace redwords {

namespace {

struct GlobalConfig {
  int workers = 0;
  long long ceiling = kDefaultWordCeiling;
  std::uint64_t seed = 1;
  std::string output_path;
  bool no_timing = false;
};

VerifyOptions verify_options(const GlobalConfig& cfg) {
  VerifyOptions opts;
  opts.workers = cfg.workers;
  opts.ceiling = cfg.ceiling;
  return opts;
}

Permutation parse_perm_arg(const std::string& text, int degree_hint) {
  return parse_permutation(text, degree_hint > 0 ? std::optional<int>(degree_hint) : std::nullopt);
}

std::string structure_line(const Permutation& p, const Word& a) {
  AtomStructure s = atom_structure(p, a);
  std::string line = "word=" + a.str() +
                     " case=" + (s.seg_case == AtomCase::SegUp ? "seg_up" : "seg_down") +
                     " m=" + std::to_string(s.m) + " M=" + std::to_string(s.M) +
                     " i=" + (s.i ? std::to_string(*s.i) : "-") +
                     " j=" + (s.j ? std::to_string(*s.j) : "-") +
                     " oscillating=" + (s.oscillating ? "true" : "false");
  return line;
}

std::array<std::uint64_t, 5> table_row(int n,
                                       const std::map<Permutation, std::vector<Word>>& scan) {
  std::array<std::uint64_t, 5> row{};
  for (auto& [size, count] : atom_histogram(n, scan)) {
    if (size > 4)
      throw TheoremViolation("scan found a permutation with " + std::to_string(size) +
                             " one-element classes");
    row[size] = count;
  }
  return row;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"reduced words, commutation classes, and one-element classes of permutations"};
  app.require_subcommand(1);

  GlobalConfig cfg;
  app.add_option("--workers", cfg.workers, "worker threads (0 = machine parallelism)")
      ->envname("REDWORDS_WORKERS");
  app.add_option("--ceiling", cfg.ceiling, "largest reduced-word set to materialize")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for sampled checks");
  app.add_option("--output", cfg.output_path, "write results to a file instead of stdout");
  app.add_flag("--no-timing", cfg.no_timing, "omit elapsed-ms from verification records");

  std::string perm_text, word_text;
  int degree_hint = 0;

  auto* words_cmd = app.add_subcommand("words", "list the reduced words of a permutation");
  words_cmd->add_option("perm", perm_text, "one-line or cycle notation")->required();
  words_cmd->add_option("--degree", degree_hint, "degree hint for cycle notation");

  auto* count_cmd = app.add_subcommand("count", "count the reduced words of a permutation");
  count_cmd->add_option("perm", perm_text)->required();
  count_cmd->add_option("--degree", degree_hint);

  auto* classes_cmd = app.add_subcommand("classes", "list the commutation classes");
  classes_cmd->add_option("perm", perm_text)->required();
  classes_cmd->add_option("--degree", degree_hint);

  std::string method = "search";
  auto* atoms_cmd = app.add_subcommand("atoms", "list the one-element commutation classes");
  atoms_cmd->add_option("perm", perm_text)->required();
  atoms_cmd->add_option("--degree", degree_hint);
  atoms_cmd->add_option("--method", method, "search | brute | both")
      ->check(CLI::IsMember({"search", "brute", "both"}));

  auto* structure_cmd =
      app.add_subcommand("structure", "structural skeleton of one-element classes");
  structure_cmd->add_option("perm", perm_text)->required();
  structure_cmd->add_option("word", word_text, "a specific atom (default: all)");
  structure_cmd->add_option("--degree", degree_hint);

  std::string render_style = "ascii";
  auto* render_cmd = app.add_subcommand("render", "draw the line diagram of a word");
  render_cmd->add_option("word", word_text)->required();
  render_cmd->add_option("--format", render_style, "ascii | svg")
      ->check(CLI::IsMember({"ascii", "svg"}));

  int shift_by = 0;
  auto* shift_cmd = app.add_subcommand("shift", "add a constant to every letter");
  shift_cmd->add_option("word", word_text)->required();
  shift_cmd->add_option("k", shift_by, "shift amount")->required()->check(CLI::PositiveNumber);

  int table_max_n = 7;
  std::string table_format = "md", cache_dir;
  auto* table_cmd = app.add_subcommand("table", "atom-count histogram rows for n = 1..max-n");
  table_cmd->add_option("--max-n", table_max_n)->check(CLI::Range(1, 9));
  table_cmd->add_option("--format", table_format, "md | csv | records")
      ->check(CLI::IsMember({"md", "csv", "records"}));
  table_cmd->add_option("--cache-dir", cache_dir, "directory of resumable scan records");

  auto* verify_cmd = app.add_subcommand("verify", "run a verification check");
  verify_cmd->require_subcommand(1);
  int verify_n = 8, verify_letters = 5, verify_len = 15, agreement_degree = 7,
      agreement_samples = 100;
  auto* v_bound = verify_cmd->add_subcommand("bound", "max |A| over S_{n+1} is at most 4");
  v_bound->add_option("--n", verify_n)->check(CLI::Range(1, 9));
  auto* v_spectrum = verify_cmd->add_subcommand("spectrum", "atom counts stay in {0,1,2,4}");
  v_spectrum->add_option("--n", verify_n)->check(CLI::Range(1, 9));
  int classes_n = 5;
  auto* v_classes =
      verify_cmd->add_subcommand("classes", "class-count inequalities over S_{n+1}");
  v_classes->add_option("--n", classes_n)->check(CLI::Range(1, 6));
  auto* v_equiv = verify_cmd->add_subcommand(
      "equivalence", "witness-free coincides with reduced-and-commutation-free");
  v_equiv->add_option("--letters", verify_letters)->check(CLI::PositiveNumber);
  v_equiv->add_option("--max-len", verify_len)->check(CLI::PositiveNumber);
  auto* v_tenner = verify_cmd->add_subcommand(
      "tenner", "find a non-reduced word passing the five spike conditions");
  v_tenner->add_option("--letters", verify_letters)->check(CLI::PositiveNumber);
  v_tenner->add_option("--max-len", verify_len)->check(CLI::PositiveNumber);
  auto* v_bigclass =
      verify_cmd->add_subcommand("bigclass", "qualifying permutations own a class of size >= 4");
  v_bigclass->add_option("perm", perm_text)->required();
  v_bigclass->add_option("--degree", degree_hint);
  auto* v_agreement =
      verify_cmd->add_subcommand("agreement", "compare both atom enumeration routes");
  v_agreement->add_option("--degree", agreement_degree)->check(CLI::Range(2, 16));
  v_agreement->add_option("--samples", agreement_samples)->check(CLI::PositiveNumber);

  int bscan_rank = 3;
  auto* bscan_cmd = app.add_subcommand("bscan", "max atom count over the type B group");
  bscan_cmd->add_option("--rank", bscan_rank)->check(CLI::Range(1, 4));

  std::vector<const char*> argv;
  argv.push_back("redwords");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.output_path.empty()) {
    file.open(cfg.output_path);
    if (!file) {
      err << "cannot open " << cfg.output_path << " for writing\n";
      return 1;
    }
    sink = &file;
  }

  auto emit_report = [&](const VerificationReport& report) {
    *sink << report.record(!cfg.no_timing) << "\n";
    return exit_code(report.verdict);
  };

  try {
    if (*words_cmd) {
      Permutation p = parse_perm_arg(perm_text, degree_hint);
      for (const Word& w : reduced_words(p, cfg.ceiling)) *sink << w.str() << "\n";
      return 0;
    }
    if (*count_cmd) {
      Permutation p = parse_perm_arg(perm_text, degree_hint);
      *sink << count_reduced_words(p).str() << "\n";
      return 0;
    }
    if (*classes_cmd) {
      Permutation p = parse_perm_arg(perm_text, degree_hint);
      ClassPartition part = commutation_classes(p, cfg.ceiling);
      for (const auto& cls : part.classes) {
        *sink << "[" << cls.front().str() << "] = {";
        for (std::size_t k = 0; k < cls.size(); ++k)
          *sink << (k ? ", " : "") << cls[k].str();
        *sink << "}\n";
      }
      return 0;
    }
    if (*atoms_cmd) {
      Permutation p = parse_perm_arg(perm_text, degree_hint);
      std::vector<Word> result;
      if (method == "brute") {
        result = atoms_bruteforce(p, cfg.ceiling);
      } else if (method == "search") {
        result = atoms_search(p);
      } else {
        std::vector<Word> brute = atoms_bruteforce(p, cfg.ceiling);
        result = atoms_search(p);
        if (brute != result) {
          err << "method disagreement for permutation " << p.to_one_line() << "\n";
          return 2;
        }
      }
      for (const Word& w : result) *sink << w.str() << "\n";
      if (method == "both")
        *sink << "# methods agree: " << result.size() << " atom(s)\n";
      return 0;
    }
    if (*structure_cmd) {
      Permutation p = parse_perm_arg(perm_text, degree_hint);
      if (!word_text.empty()) {
        *sink << structure_line(p, Word::parse(word_text)) << "\n";
        return 0;
      }
      std::vector<Word> atoms = atoms_search(p);
      for (const Word& a : atoms) *sink << structure_line(p, a) << "\n";
      OscillationClass osc = classify_oscillation(p);
      *sink << "atoms=" << atoms.size() << " oscillation="
            << (osc == OscillationClass::All
                    ? "all"
                    : osc == OscillationClass::None ? "none" : "empty")
            << "\n";
      return 0;
    }
    if (*render_cmd) {
      Word w = Word::parse(word_text);
      *sink << (render_style == "svg" ? render_svg(w) : render_ascii(w));
      return 0;
    }
    if (*shift_cmd) {
      *sink << shifted(Word::parse(word_text), shift_by).str() << "\n";
      return 0;
    }
    if (*table_cmd) {
      AtomTable table;
      table.n_max = table_max_n;
      for (int n = 1; n <= table_max_n; ++n) {
        std::map<Permutation, std::vector<Word>> scan;
        if (!cache_dir.empty()) {
          auto path = std::filesystem::path(cache_dir) /
                      ("atoms-n" + std::to_string(n) + ".tsv");
          if (std::filesystem::exists(path)) {
            auto [file_n, loaded] = load_atom_scan(path.string());
            if (file_n != n) throw std::runtime_error(path.string() + ": wrong n");
            scan = std::move(loaded);
          } else {
            scan = scan_atoms(n, {cfg.workers, 9});
            std::filesystem::create_directories(cache_dir);
            save_atom_scan(path.string(), n, scan);
          }
        } else {
          scan = scan_atoms(n, {cfg.workers, 9});
        }
        table.rows.push_back(table_row(n, scan));
      }
      if (table_format == "csv") {
        *sink << to_csv(table);
      } else if (table_format == "records") {
        for (int n = 1; n <= table.n_max; ++n) {
          const auto& row = table.rows[n - 1];
          *sink << "table n=" << n;
          for (std::size_t k = 0; k < row.size(); ++k) *sink << " a" << k << "=" << row[k];
          *sink << "\n";
        }
      } else {
        *sink << to_markdown(table);
      }
      return 0;
    }
    if (*verify_cmd) {
      VerifyOptions opts = verify_options(cfg);
      if (*v_bound) return emit_report(check_bound(verify_n, opts));
      if (*v_spectrum) return emit_report(check_spectrum(verify_n, opts));
      if (*v_classes) return emit_report(check_class_inequality(classes_n, opts));
      if (*v_equiv) return emit_report(check_equivalence(verify_letters, verify_len, opts));
      if (*v_tenner)
        return emit_report(check_tenner_insufficiency(verify_letters, verify_len, opts));
      if (*v_bigclass)
        return emit_report(check_big_class(parse_perm_arg(perm_text, degree_hint), opts));
      if (*v_agreement)
        return emit_report(
            check_oracle_agreement(agreement_degree, agreement_samples, cfg.seed, opts));
    }
    if (*bscan_cmd) {
      typeb::BScanOptions opts;
      opts.workers = cfg.workers;
      opts.ceiling = cfg.ceiling;
      return emit_report(typeb::scan(bscan_rank, opts));
    }
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const BudgetError& e) {
    err << "budget: " << e.what() << "\n";
    return 3;
  } catch (const TheoremViolation& e) {
    err << "theorem violation: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "no subcommand dispatched\n";
  return 1;
}

}  // namespace redwords
