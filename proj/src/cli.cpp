#include "foolset/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "foolset/fooling.hpp"
#include "foolset/lrs.hpp"
#include "foolset/matrix_io.hpp"
#include "foolset/search.hpp"
#include "foolset/tensor.hpp"

namespace foolset::cli {

namespace {

struct Config {
  std::uint64_t seed = 0;
  std::size_t size_limit = kDefaultSizeLimit;
  std::int64_t p = 0;
  std::int64_t t = 0;
  std::int64_t r = 0;
  std::int64_t t_max = 0;
  std::int64_t cap = kDefaultPeriodCap;
  std::uint64_t budget = kDefaultNodeBudget;
  std::optional<std::size_t> size;
  std::string format = "fsm";
  std::string input;
  std::string output;
  std::string left;
  std::string right;
};

const CLI::Validator kPrime(
    [](std::string& s) -> std::string {
      std::int64_t v = 0;
      if (!CLI::detail::lexical_cast(s, v) || !is_prime(v) || v >= (std::int64_t{1} << 31)) {
        return "value " + s + " is not a prime below 2^31";
      }
      return {};
    },
    "PRIME");

std::string fraction_text(const Fraction& f) {
  return std::to_string(f.numerator()) + "/" + std::to_string(f.denominator());
}

std::string decimal6(const Fraction& f) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6)
     << static_cast<long double>(f.numerator()) / static_cast<long double>(f.denominator());
  return os.str();
}

std::optional<PrimeField> csv_field(const Config& cfg) {
  if (cfg.p == 0) return std::nullopt;
  return PrimeField::make(cfg.p);
}

void emit_matrix(std::ostream& out, const Matrix& m, const std::string& format) {
  if (format == "csv") {
    write_csv(out, m);
  } else {
    write_fsm(out, m);
  }
}

void write_witness(std::ostream& out, const FoolingWitness& w) {
  switch (w.kind) {
    case FoolingWitness::Kind::Pass: out << "pass\n"; break;
    case FoolingWitness::Kind::ZeroDiagonal: out << "zero-diagonal " << w.k << '\n'; break;
    case FoolingWitness::Kind::SymmetricPair: out << "symmetric-pair " << w.k << ' ' << w.l << '\n'; break;
  }
}

int cmd_gen(const Config& cfg, std::ostream& out) {
  const auto bundle = construct(cfg.p, cfg.t, cfg.size_limit);
  std::ostringstream body;
  if (cfg.format == "table") {
    body << "p t r n rank fooling\n"
         << bundle.p << ' ' << bundle.t << ' ' << bundle.r << ' ' << bundle.n << ' ' << bundle.rank
         << ' ' << (bundle.fooling ? "yes" : "no") << '\n';
  } else {
    emit_matrix(body, bundle.matrix, cfg.format);
  }
  if (cfg.output.empty()) {
    out << body.str();
  } else {
    std::ofstream file(cfg.output, std::ios::binary);
    if (!(file << body.str())) throw Error(Errc::Parse, "cannot write " + cfg.output);
  }
  return bundle.fooling ? kExitOk : kExitFail;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  const auto m = read_matrix_file(cfg.input, csv_field(cfg));
  const auto w = verify_fooling(m);
  write_witness(out, w);
  return w.pass() ? kExitOk : kExitFail;
}

int cmd_rank(const Config& cfg, std::ostream& out) {
  auto m = read_matrix_file(cfg.input, csv_field(cfg));
  if (cfg.p != 0 && m.field().modulus() != cfg.p) m = m.reduced(PrimeField::make(cfg.p));
  out << "rank " << rank_mod_p(m) << '\n';
  return kExitOk;
}

int cmd_period(const Config& cfg, std::ostream& out) {
  const auto seq = construction_sequence(cfg.p, cfg.r);
  const auto period = seq.period(cfg.cap);
  out << "period " << period << '\n';
  // For r = p^t + 1 also report whether the minimal period divides r(r - 1) + 1.
  std::int64_t q = cfg.r - 1;
  while (q > 1 && q % cfg.p == 0) q /= cfg.p;
  if (q == 1 && cfg.r > 2) {
    const std::int64_t n = cfg.r * (cfg.r - 1) + 1;
    const bool divides = n % period == 0;
    out << "construction-period " << n << ' ' << (divides ? "divisible" : "not-divisible") << '\n';
    return divides ? kExitOk : kExitFail;
  }
  return kExitOk;
}

int cmd_search(const Config& cfg, std::ostream& out, std::ostream& err) {
  const auto pattern = PatternMatrix::from_matrix(read_matrix_file(cfg.input, csv_field(cfg)));
  const auto result = max_fooling_submatrix(pattern, cfg.budget);
  out << "size " << result.size << '\n';
  for (auto c : result.cells) out << c.row << ' ' << c.col << '\n';
  if (!result.optimal) {
    err << "node budget of " << cfg.budget << " exhausted; size " << result.size
        << " is a lower bound\n";
  }
  if (!cfg.size) return kExitOk;
  if (result.size >= *cfg.size) {
    out << "yes\n";
    return kExitOk;
  }
  out << (result.optimal ? "no\n" : "unknown\n");
  return kExitFail;
}

int cmd_table(const Config& cfg, std::ostream& out) {
  const auto rows = ratio_report(cfg.p, cfg.t_max, cfg.size_limit);
  out << "p t r n rank ratio approx\n";
  bool ok = true;
  for (const auto& row : rows) {
    out << row.p << ' ' << row.t << ' ' << row.r << ' ' << row.n << ' ' << row.rank << ' '
        << fraction_text(row.ratio) << ' ' << decimal6(row.ratio) << '\n';
    ok = ok && row.gap_identity && row.lower_bound;
  }
  return ok ? kExitOk : kExitFail;
}

int cmd_kron(const Config& cfg, std::ostream& out) {
  const auto a = read_matrix_file(cfg.left, csv_field(cfg));
  const auto b = read_matrix_file(cfg.right, csv_field(cfg));
  emit_matrix(out, kron(a, b, cfg.size_limit), cfg.format);
  return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Config cfg;
  if (const char* env = std::getenv("FOOLSET_SIZE_LIMIT")) {
    try {
      std::size_t used = 0;
      cfg.size_limit = std::stoul(env, &used);
      if (used != std::string(env).size() || cfg.size_limit == 0) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      err << "FOOLSET_SIZE_LIMIT: expected a positive integer, got '" << env << "'\n";
      return kExitUsage;
    }
  }

  CLI::App app{"Fooling-set matrices over prime fields", "foolset"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", cfg.seed, "Seed for randomized steps")->capture_default_str();
  app.add_option("--size-limit", cfg.size_limit, "Largest matrix dimension to build")
      ->check(CLI::PositiveNumber);

  auto* gen = app.add_subcommand("gen", "Build the fooling-set matrix for (p, t)");
  gen->add_option("--p", cfg.p, "Prime modulus")->required()->check(kPrime);
  gen->add_option("--t", cfg.t, "Exponent t, r = p^t + 1")->required()->check(CLI::PositiveNumber);
  gen->add_option("--format", cfg.format, "fsm, csv or table")
      ->check(CLI::IsMember({"fsm", "csv", "table"}));
  gen->add_option("--output", cfg.output, "Write to a file instead of standard output");

  auto* verify = app.add_subcommand("verify", "Check the fooling-set conditions");
  verify->add_option("--input", cfg.input, "FSM or CSV matrix")->required();
  verify->add_option("--p", cfg.p, "Modulus for CSV input")->check(kPrime);

  auto* rank = app.add_subcommand("rank", "Exact rank over F_p");
  rank->add_option("--input", cfg.input, "FSM or CSV matrix")->required();
  rank->add_option("--p", cfg.p, "Modulus (reduces FSM entries when it differs)")->check(kPrime);

  auto* period = app.add_subcommand("period", "Minimal period of the construction sequence");
  period->add_option("--p", cfg.p, "Prime modulus")->required()->check(kPrime);
  period->add_option("--r", cfg.r, "Recurrence order")->required()->check(CLI::Range(2, 1 << 20));
  period->add_option("--cap", cfg.cap, "Step limit")->check(CLI::PositiveNumber);

  auto* search = app.add_subcommand("search", "Maximum fooling-set submatrix of a pattern");
  search->add_option("--input", cfg.input, "FSM or CSV matrix")->required();
  search->add_option("--budget", cfg.budget, "Search node limit")->check(CLI::PositiveNumber);
  search->add_option("--size", cfg.size, "Answer whether a submatrix of this size exists");
  search->add_option("--p", cfg.p, "Modulus for CSV input")->check(kPrime);

  auto* table = app.add_subcommand("table", "Ratio n / rank^2 for t = 1..t-max");
  table->add_option("--p", cfg.p, "Prime modulus")->required()->check(kPrime);
  table->add_option("--t-max", cfg.t_max, "Largest t")->required()->check(CLI::PositiveNumber);

  auto* kron_cmd = app.add_subcommand("kron", "Kronecker product of two matrices");
  kron_cmd->add_option("left", cfg.left, "Left factor")->required();
  kron_cmd->add_option("right", cfg.right, "Right factor")->required();
  kron_cmd->add_option("--format", cfg.format, "fsm or csv")->check(CLI::IsMember({"fsm", "csv"}));
  kron_cmd->add_option("--p", cfg.p, "Modulus for CSV input")->check(kPrime);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
    if (*rank) return cmd_rank(cfg, out);
    if (*period) return cmd_period(cfg, out);
    if (*search) return cmd_search(cfg, out, err);
    if (*table) return cmd_table(cfg, out);
    if (*kron_cmd) return cmd_kron(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace foolset::cli
