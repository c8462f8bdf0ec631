// rbh: command-line front end for the rbh library.
//
// Exit status: 0 success / witness found / verification passed,
//              1 no witness / verification failed,
//              2 usage, input or I/O error.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rbh/rbh.hpp"

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text;
  if (!out) throw IoError("write to '" + path + "' failed");
}

std::string fixed12(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 12);
  return std::string(buf, res.ptr);
}

bool is_family_text(const std::string& text) { return text.rfind("p bfam", 0) == 0; }

std::uint64_t default_seed() {
  if (const char* env = std::getenv("RBH_SEED")) {
    std::uint64_t v = 0;
    const std::string s(env);
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) throw IoError("RBH_SEED must be an unsigned integer");
    return v;
  }
  return 1;
}

rbh::FamilyName parse_family_name(const std::string& s) {
  // TAG:k:n, e.g. B:1:3
  std::istringstream in(s);
  std::string tag, k, n;
  if (!std::getline(in, tag, ':') || !std::getline(in, k, ':') || !std::getline(in, n)) {
    throw rbh::Error(rbh::Errc::invalid_parameter, "expected TAG:k:n, got '" + s + "'");
  }
  return {rbh::parse_family_tag(tag), std::stoi(k), std::stoi(n)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bipartite rainbow Hamiltonicity toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  double eps = rbh::kDefaultEps;
  double tol = rbh::kDefaultTol;
  std::string output;
  app.add_option("--eps", eps, "threshold tie window")->check(CLI::PositiveNumber);
  app.add_option("--tol", tol, "spectral convergence tolerance")->check(CLI::PositiveNumber);
  app.add_option("-o,--output", output, "write machine output here instead of stdout");

  // construct
  auto* construct = app.add_subcommand("construct", "build Q/R/S/T/B^k_n as BGF");
  std::string family_tag;
  int k = 0, n = 0;
  construct->add_option("--family", family_tag, "Q, R, S, T or B")->required();
  construct->add_option("--k", k)->required();
  construct->add_option("--n", n)->required();

  // rho
  auto* rho = app.add_subcommand("rho", "spectral radius of a BGF graph");
  std::string input;
  rho->add_option("input", input, "BGF file or -")->required();

  // shift
  auto* shift = app.add_subcommand("shift", "apply one (x, y)-shift to a BGF graph or BFAM family");
  std::vector<int> pair;
  shift->add_option("input", input, "BGF/BFAM file or -")->required();
  shift->add_option("--pair", pair, "labels x y")->expected(2)->required();

  // bishift
  auto* bishift = app.add_subcommand("bishift", "bi-shift a BGF graph or BFAM family to its fixpoint");
  std::string order = "lexicographic";
  bishift->add_option("input", input, "BGF/BFAM file or -")->required();
  bishift->add_option("--order", order, "sweep order")->check(CLI::IsMember({"lexicographic", "reversed"}));

  // searches
  auto* path = app.add_subcommand("path", "rainbow Hamilton path of a BFAM family");
  path->add_option("input", input, "BFAM file or -")->required();
  auto* cycle = app.add_subcommand("cycle", "rainbow Hamilton cycle of a BFAM family");
  cycle->add_option("input", input, "BFAM file or -")->required();
  auto* longest = app.add_subcommand("longest", "longest rainbow path of a BFAM family");
  longest->add_option("input", input, "BFAM file or -")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification harness");
  std::string target, mode = "exhaustive", json_path, csv_path, orientation = "x_larger", replay;
  std::optional<std::uint64_t> seed;
  std::uint64_t count = 100000;
  unsigned jobs = rbh::default_jobs();
  verify->add_option("--target", target, "harness id")->required()->check(CLI::IsMember(rbh::target_ids()));
  verify->add_option("--n", n, "size parameter")->required();
  verify->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "sample", "extremal-only"}));
  verify->add_option("--seed", seed, "sampling seed (default: RBH_SEED or 1)");
  verify->add_option("--count", count, "number of samples")->check(CLI::PositiveNumber);
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--orientation", orientation, "larger part of nearly balanced targets")
      ->check(CLI::IsMember({"x_larger", "y_larger"}));
  verify->add_option("--json", json_path, "also write the JSON report here");
  verify->add_option("--csv", csv_path, "also write a CSV summary here");
  verify->add_option("--replay", replay, "re-run one recorded case from this file");

  // sample
  auto* sample = app.add_subcommand("sample", "seeded random families as BFAM");
  int nx = 0, ny = 0;
  std::size_t size = 0;
  std::string copies;
  bool non_constant = false;
  sample->add_option("--nx", nx)->required();
  sample->add_option("--ny", ny)->required();
  sample->add_option("--k", size, "family size")->required();
  sample->add_option("--seed", seed, "sampling seed (default: RBH_SEED or 1)");
  sample->add_option("--count", count)->check(CLI::PositiveNumber);
  sample->add_option("--copies", copies, "draw labeled copies of TAG:k:n, e.g. B:1:3");
  sample->add_flag("--non-constant", non_constant, "skip constant families");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (construct->parsed()) {
      write_output(output, rbh::encode_graph(rbh::construct(rbh::parse_family_tag(family_tag), k, n)));
      return 0;
    }
    if (rho->parsed()) {
      const auto g = rbh::decode_graph(read_input(input));
      write_output(output, fixed12(rbh::spectral_radius(g, tol).value) + "\n");
      return 0;
    }
    if (shift->parsed()) {
      const auto text = read_input(input);
      const rbh::ShiftPair p{pair[0], pair[1]};
      if (is_family_text(text)) {
        std::vector<rbh::BipartiteGraph> out;
        for (const auto& g : rbh::decode_family(text)) out.push_back(rbh::shift_xy(g, p));
        write_output(output, rbh::encode_family(rbh::GraphFamily(std::move(out))));
      } else {
        write_output(output, rbh::encode_graph(rbh::shift_xy(rbh::decode_graph(text), p)));
      }
      return 0;
    }
    if (bishift->parsed()) {
      const auto text = read_input(input);
      const auto o = order == "reversed" ? rbh::SweepOrder::reversed : rbh::SweepOrder::lexicographic;
      if (is_family_text(text)) {
        write_output(output, rbh::encode_family(rbh::bi_shift_family(rbh::decode_family(text), o)));
      } else {
        write_output(output, rbh::encode_graph(rbh::bi_shift(rbh::decode_graph(text), o)));
      }
      return 0;
    }
    if (path->parsed() || cycle->parsed()) {
      const bool closed = cycle->parsed();
      const auto f = rbh::decode_family(read_input(input));
      const auto w = closed ? rbh::find_rainbow_hamilton_cycle(f) : rbh::find_rainbow_hamilton_path(f);
      write_output(output, rbh::format_witness(w, closed) + "\n");
      return w ? 0 : 1;
    }
    if (longest->parsed()) {
      const auto f = rbh::decode_family(read_input(input));
      write_output(output, rbh::format_witness(rbh::longest_rainbow_path(f), false) + "\n");
      return 0;
    }
    if (verify->parsed()) {
      rbh::RunOptions opts;
      opts.n = n;
      opts.jobs = jobs;
      opts.eps = eps;
      opts.tol = tol;
      opts.orientation = rbh::parse_orientation(orientation);
      if (mode == "sample") {
        opts.mode = rbh::Mode::sample(seed.value_or(default_seed()), count);
      } else if (mode == "extremal-only") {
        opts.mode = rbh::Mode::extremal_only();
      }
      if (!replay.empty()) {
        const auto outcome = rbh::replay_case(target, read_input(replay), opts);
        static const char* names[] = {"outside-hypothesis", "holds", "exception", "violation"};
        write_output(output, std::string(names[static_cast<int>(outcome)]) + "\n");
        return outcome == rbh::CaseOutcome::violation ? 1 : 0;
      }
      const auto report = rbh::run_target(target, opts);
      const auto json = rbh::to_json(report).dump(2) + "\n";
      write_output(output, json);
      if (!json_path.empty()) write_output(json_path, json);
      if (!csv_path.empty()) write_output(csv_path, rbh::csv_header() + "\n" + rbh::to_csv_row(report) + "\n");
      if (!report.passed()) std::cerr << "verification failed: " << report.violations.size() << " violation(s)\n";
      return report.passed() ? 0 : 1;
    }
    if (sample->parsed()) {
      rbh::SamplePool pool;
      if (!copies.empty()) pool = rbh::SamplePool::copies_of(parse_family_name(copies), nx, ny);
      pool.non_constant = non_constant;
      const auto families = rbh::sample_families(nx, ny, size, seed.value_or(default_seed()), count, pool);
      std::string text;
      for (std::size_t i = 0; i < families.size(); ++i) {
        if (i > 0) text += "\n";
        text += rbh::encode_family(families[i]);
      }
      write_output(output, text);
      return 0;
    }
  } catch (const rbh::Error& e) {
    std::cerr << "rbh: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "rbh: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "rbh: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
