#include "horton/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "horton/codec.hpp"
#include "horton/counting.hpp"
#include "horton/entropy.hpp"
#include "horton/errors.hpp"
#include "horton/tree.hpp"

namespace horton {

namespace {

std::string fixed12(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12Lf", v);
  return buf;
}

std::string show_count(const big_count& v, bool pretty) {
  return pretty ? group_digits(v.get_str()) : v.get_str();
}

// Table rows and tail columns as published; cells stay empty where the
// combined sequence is inadmissible.
const std::vector<std::uint64_t> kTableRows = {4, 5, 6, 7, 8, 9, 10, 11, 12, 30};
const std::vector<std::vector<std::uint64_t>> kTableTails = {
    {2, 1}, {3, 1}, {4, 2, 1}, {5, 2, 1}};

void cmd_table1(std::ostream& out, bool pretty) {
  std::vector<std::vector<std::string>> cells;
  for (const std::uint64_t n1 : kTableRows) {
    std::vector<std::string> row{std::to_string(n1)};
    for (const auto& tail : kTableTails) {
      horton_sequence seq{{n1}};
      seq.counts.insert(seq.counts.end(), tail.begin(), tail.end());
      row.push_back(is_admissible(seq) ? show_count(count_trees(seq), pretty)
                                       : std::string());
    }
    cells.push_back(std::move(row));
  }
  if (!pretty) {
    out << "N1,\"2,1\",\"3,1\",\"4,2,1\",\"5,2,1\"\n";
    for (const auto& row : cells) {
      for (std::size_t i = 0; i < row.size(); ++i)
        out << (i ? "," : "") << row[i];
      out << "\n";
    }
    return;
  }
  const std::vector<std::string> heads = {"N1", "(2,1)", "(3,1)", "(4,2,1)",
                                          "(5,2,1)"};
  std::vector<std::size_t> width(heads.size());
  for (std::size_t c = 0; c < heads.size(); ++c) {
    width[c] = heads[c].size();
    for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
  }
  for (std::size_t c = 0; c < heads.size(); ++c)
    out << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << heads[c];
  out << "\n";
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c)
      out << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << row[c];
    out << "\n";
  }
}

int cmd_verify(std::ostream& out, std::uint64_t max_leaves) {
  bool all_pass = true;
  for (const verify_line& line : run_verification(max_leaves)) {
    out << "n=" << line.leaves << " " << (line.pass ? "PASS" : "FAIL");
    if (!line.pass) {
      out << " " << line.detail;
      all_pass = false;
    }
    out << "\n";
  }
  return all_pass ? 0 : 1;
}

void cmd_curve(std::ostream& out, long double rmin, long double rmax,
               long double step) {
  if (!(rmin >= 2.0L)) throw std::domain_error("curve: r-min must be >= 2");
  if (!(rmin < rmax)) throw std::domain_error("curve: need r-min < r-max");
  if (!(step > 0.0L)) throw std::domain_error("curve: step must be positive");
  out << "R,entropy_rate\n";
  const long double span = (rmax - rmin) / step;
  const std::uint64_t steps = static_cast<std::uint64_t>(span * (1 + 1e-12L));
  for (std::uint64_t i = 0; i <= steps; ++i) {
    const long double r = rmin + step * static_cast<long double>(i);
    out << fixed12(r) << "," << fixed12(entropy_rate(r)) << "\n";
  }
}

void cmd_tkr(std::ostream& out, std::int32_t order, long double exponent,
             long double alpha, bool table, bool pretty) {
  if (!table) {
    const tkr_params p{order, exponent, alpha};
    out << show_count(tkr_count(p), pretty) << "\n";
    return;
  }
  out << "K,R,alpha,sequences,log2_count,normalized,closed_form,abs_error\n";
  for (std::int32_t k = 1; k <= order; ++k) {
    const tkr_row row = tkr_convergence_row(tkr_params{k, exponent, alpha});
    out << row.order << "," << fixed12(row.exponent) << ","
        << fixed12(row.alpha) << "," << row.sequences << ","
        << fixed12(row.log2_count) << "," << fixed12(row.normalized) << ","
        << fixed12(row.closed_form) << "," << fixed12(row.abs_error) << "\n";
  }
}

void cmd_unrank(std::ostream& out, const std::string& text) {
  // "N1,...,NK@index" or "N1,...,NK@first..last" (inclusive).
  const std::size_t at = text.find('@');
  const std::size_t dots =
      at == std::string::npos ? std::string::npos : text.find("..", at);
  if (dots == std::string::npos) {
    out << unrank(parse_rank(text)).to_bits() << "\n";
    return;
  }
  const tree_rank first = parse_rank(text.substr(0, dots));
  const tree_rank last =
      parse_rank(text.substr(0, at + 1) + text.substr(dots + 2));
  if (first.index > last.index)
    throw std::domain_error("unrank: empty range, first index above last");
  for (big_count i = first.index; i <= last.index; ++i)
    out << unrank(first.sequence, i).to_bits() << "\n";
}

std::vector<std::uint8_t> read_binary(std::istream& in) {
  std::vector<std::uint8_t> bytes;
  char c;
  while (in.get(c)) bytes.push_back(static_cast<std::uint8_t>(c));
  return bytes;
}

struct parsed_args {
  CLI::App app{"Exact combinatorics of planted binary plane trees:\n"
               "counting by Horton-Strahler branch numbers, rank/unrank,\n"
               "uniform sampling, entropy curves, and an enumerative codec."};

  std::string out_path;
  bool pretty = false;
  bool csv = false;

  std::string count_seq;
  std::uint64_t verify_max = 9;
  double curve_min = 2.0, curve_max = 10.0, curve_step = 0.1;
  std::int32_t tkr_order = 1;
  double tkr_exponent = 4.0, tkr_alpha = 1.25;
  bool tkr_table = false;
  std::uint64_t sequences_n = 1;
  std::string sample_seq;
  std::uint64_t sample_leaves = 0;
  std::uint64_t seed = 0;
  std::uint64_t sample_count = 1;
  std::vector<std::string> rank_bits;
  std::string unrank_expr;
  std::string encode_bits;
  std::string codec_file;
  std::uint64_t entropy_vertices = 2;
  bool entropy_residual_flag = false;

  CLI::App* count = nullptr;
  CLI::App* table1 = nullptr;
  CLI::App* verify = nullptr;
  CLI::App* curve = nullptr;
  CLI::App* tkr = nullptr;
  CLI::App* sequences = nullptr;
  CLI::App* sample = nullptr;
  CLI::App* rankc = nullptr;
  CLI::App* unrankc = nullptr;
  CLI::App* encodec = nullptr;
  CLI::App* decodec = nullptr;
  CLI::App* entropyc = nullptr;

  parsed_args() {
    app.require_subcommand(1);
    app.add_option("--out", out_path, "Write stdout output to this file");
    app.add_flag("--pretty", pretty, "Thousands separators / aligned tables");
    app.add_flag("--csv", csv, "Machine output (default)");

    count = app.add_subcommand("count", "Number of trees with the given branch counts");
    count->add_option("sequence", count_seq, "\"N1,...,NK\"")->required();

    table1 = app.add_subcommand("table1", "The published count table, computed");

    verify = app.add_subcommand("verify", "Catalan identity + brute-force cross-check");
    verify->add_option("max-leaves", verify_max, "Check n = 1..max-leaves")->required();

    curve = app.add_subcommand("curve", "Entropy rate over a grid of exponents R");
    curve->add_option("r-min", curve_min)->required();
    curve->add_option("r-max", curve_max)->required();
    curve->add_option("step", curve_step)->required();

    tkr = app.add_subcommand("tkr", "Horton-law ensemble size / convergence table");
    tkr->add_option("order", tkr_order, "K")->required();
    tkr->add_option("exponent", tkr_exponent, "R > 2")->required();
    tkr->add_option("alpha", tkr_alpha, "error base in (1, R)")->required();
    tkr->add_flag("--table", tkr_table, "Emit convergence CSV for K' = 1..K");

    sequences = app.add_subcommand("sequences", "All admissible sequences with N1 = n");
    sequences->add_option("leaves", sequences_n)->required();

    sample = app.add_subcommand("sample", "Uniform random trees, one bit string per line");
    sample->add_option("sequence", sample_seq, "\"N1,...,NK\"");
    sample->add_option("--leaves", sample_leaves, "Uniform over all trees with n leaves");
    sample->add_option("--seed", seed, "RNG seed (default 0)");
    sample->add_option("--count", sample_count, "Number of samples (default 1)");

    rankc = app.add_subcommand("rank", "Rank trees given as preorder bit strings");
    rankc->add_option("bits", rank_bits, "Canonical tree strings")->required();

    unrankc = app.add_subcommand("unrank", "Tree(s) for \"N1,...,NK@index\" or \"...@a..b\"");
    unrankc->add_option("rank", unrank_expr)->required();

    encodec = app.add_subcommand("encode", "Wire-encode a tree bit string");
    encodec->add_option("bits", encode_bits, "Canonical tree string")->required();

    decodec = app.add_subcommand("decode", "Decode a wire message to a tree bit string");
    decodec->add_option("file", codec_file, "Input file (default: stdin)");

    entropyc = app.add_subcommand("entropy", "log2 of the tree-space size at N vertices");
    entropyc->add_option("vertices", entropy_vertices, "Even vertex count N")->required();
    entropyc->add_flag("--residual", entropy_residual_flag,
                       "Print the deviation from N - log2(N) - 1 instead");
  }
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  parsed_args args;
  try {
    args.app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << args.app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  std::ostringstream buffer;
  int code = 0;
  try {
    if (args.count->parsed()) {
      buffer << show_count(count_trees(parse_sequence(args.count_seq)),
                           args.pretty)
             << "\n";
    } else if (args.table1->parsed()) {
      cmd_table1(buffer, args.pretty);
    } else if (args.verify->parsed()) {
      code = cmd_verify(buffer, args.verify_max);
    } else if (args.curve->parsed()) {
      cmd_curve(buffer, args.curve_min, args.curve_max, args.curve_step);
    } else if (args.tkr->parsed()) {
      cmd_tkr(buffer, args.tkr_order, args.tkr_exponent, args.tkr_alpha,
              args.tkr_table, args.pretty);
    } else if (args.sequences->parsed()) {
      for (const horton_sequence& s : admissible_sequences(args.sequences_n))
        buffer << to_string(s) << "\n";
    } else if (args.sample->parsed()) {
      const bool have_seq = args.sample->count("sequence") > 0;
      const bool have_leaves = args.sample->count("--leaves") > 0;
      if (have_seq == have_leaves)
        throw std::domain_error(
            "sample: give either a sequence or --leaves, not both or neither");
      tree_sampler sampler(args.seed);
      for (std::uint64_t i = 0; i < args.sample_count; ++i) {
        const plane_tree t = have_seq
                                 ? sampler.sample(parse_sequence(args.sample_seq))
                                 : sampler.sample_leaves(args.sample_leaves);
        buffer << t.to_bits() << "\n";
      }
    } else if (args.rankc->parsed()) {
      for (const std::string& bits : args.rank_bits)
        buffer << to_string(rank(plane_tree::from_bits(bits))) << "\n";
    } else if (args.unrankc->parsed()) {
      cmd_unrank(buffer, args.unrank_expr);
    } else if (args.encodec->parsed()) {
      const auto bytes = encode(plane_tree::from_bits(args.encode_bits));
      buffer.write(reinterpret_cast<const char*>(bytes.data()),
                   static_cast<std::streamsize>(bytes.size()));
    } else if (args.decodec->parsed()) {
      std::vector<std::uint8_t> bytes;
      if (args.codec_file.empty()) {
        bytes = read_binary(std::cin);
      } else {
        std::ifstream in(args.codec_file, std::ios::binary);
        if (!in)
          throw std::domain_error("decode: cannot open " + args.codec_file);
        bytes = read_binary(in);
      }
      buffer << decode(bytes).to_bits() << "\n";
    } else if (args.entropyc->parsed()) {
      buffer << fixed12(args.entropy_residual_flag
                            ? entropy_residual(args.entropy_vertices)
                            : tree_space_entropy(args.entropy_vertices))
             << "\n";
    }
  } catch (const format_error& e) {
    err << "error: " << e.what() << " (at offset " << e.offset() << ")\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (args.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(args.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << args.out_path << "\n";
      return 1;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace horton
