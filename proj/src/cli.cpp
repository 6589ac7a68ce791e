#include "commdeg/cli.hpp"

#include "commdeg/algebra_io.hpp"
#include "commdeg/classify.hpp"
#include "commdeg/degree.hpp"

#include <CLI11.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace commdeg {

namespace {

// Raised for outcomes that carry their own exit code.
struct Exit {
  int code;
};

std::size_t to_index(const std::string &s) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(s, &used);
    if (used != s.size())
      throw InvalidParameter("not a number: " + s);
    return static_cast<std::size_t>(v);
  } catch (const std::logic_error &) {
    throw InvalidParameter("not a number: " + s);
  }
}

Field make_field(std::uint64_t q, const std::string &modulus) {
  if (modulus.empty())
    return Field::make(q);
  std::vector<std::uint32_t> coeffs;
  std::stringstream ss(modulus);
  std::string piece;
  while (std::getline(ss, piece, ','))
    coeffs.push_back(static_cast<std::uint32_t>(to_index(piece)));
  return Field::make(q, coeffs);
}

LieAlgebra load_valid(const std::string &path) {
  LieAlgebra L = read_algebra_file(path);
  validate(L);
  return L;
}

LieAlgebra build_family(const std::string &family, const std::vector<std::string> &args,
                        std::uint64_t q, const std::string &modulus) {
  auto need = [&](std::size_t count) {
    if (args.size() != count)
      throw InvalidParameter("'" + family + "' takes " + std::to_string(count) +
                             " argument(s)");
  };
  if (family == "sum") {
    need(2);
    return direct_sum(load_valid(args[0]), load_valid(args[1]));
  }
  if (family == "cprod") {
    need(4);
    const std::size_t z1 = to_index(args[1]), z2 = to_index(args[3]);
    if (z1 == 0 || z2 == 0)
      throw InvalidParameter("central element indices are 1-based");
    return central_product(load_valid(args[0]), z1 - 1, load_valid(args[2]), z2 - 1);
  }
  const Field field = make_field(q, modulus);
  if (family == "abelian") {
    need(1);
    return make_abelian(field, to_index(args[0]));
  }
  if (family == "heisenberg") {
    need(1);
    return make_heisenberg(field, to_index(args[0]));
  }
  need(0);
  if (family == "affine")
    return make_affine(field);
  if (family == "l43")
    return make_L43(field);
  if (family == "l55")
    return make_L55(field);
  throw InvalidParameter("unknown family '" + family + "'");
}

DegreeReport run_method(const std::string &method, const LieAlgebra &L,
                        const DegreeOptions &opts) {
  if (method == "auto")
    return degree_auto(L, opts);
  if (method == "rank")
    return degree_rank_sum(L, opts);
  if (method == "pairs")
    return degree_pair_count(L, opts);
  if (method == "centralizer")
    return degree_centralizer_sum(L, opts);
  throw InvalidParameter("unknown method '" + method + "'");
}

void cmd_degree(const std::string &path, const std::string &method, bool all_methods,
                const DegreeOptions &opts, std::ostream &out) {
  const LieAlgebra L = load_valid(path);
  if (!all_methods) {
    out << format_report(L, run_method(method, L, opts));
    return;
  }

  std::optional<DegreeReport> first;
  bool mismatch = false;
  std::ostringstream lines;
  for (const char *m : {"rank", "pairs", "centralizer", "auto"}) {
    try {
      DegreeReport rep = run_method(m, L, opts);
      lines << "method " << method_name(rep.method) << ": d = " << rep.degree.str() << '\n';
      if (!first)
        first = std::move(rep);
      else if (rep.degree != first->degree || rep.rank_histogram != first->rank_histogram)
        mismatch = true;
    } catch (const BudgetExceeded &e) {
      lines << "method " << m << ": skipped (" << e.what() << ")\n";
    }
  }
  if (!first)
    throw BudgetExceeded("every method", 0, 0);
  out << format_report(L, *first) << lines.str();
  if (mismatch) {
    out << "methods DISAGREE\n";
    throw Exit{kExitMethodMismatch};
  }
  out << "all methods agree\n";
}

void cmd_verify(std::uint64_t q, std::size_t n, bool large, const std::string &witness,
                EnumerationOptions opts, std::ostream &out, std::ostream &err) {
  if (n > 3 && !large)
    throw BudgetExceeded("dimension above the default ceiling of 3 (pass --opt-in-large)",
                         candidate_count(q, n), candidate_count(q, 3));
  const std::uint64_t total = candidate_count(q, n);
  if (large)
    opts.progress = [&err, total](std::uint64_t done) {
      err << "progress " << done << "/" << total << std::endl;
    };

  const VerificationSummary sum = verify_small(q, n, opts);
  out << "field q=" << q << ", dim " << n << '\n';
  out << "candidates: " << sum.spectrum.candidates << '\n';
  out << "valid: " << sum.spectrum.valid << '\n';
  out << "dim L^2 counts:";
  for (const auto &[k, c] : sum.derived_dims)
    out << ' ' << k << ':' << c;
  out << '\n';
  out << "checks run: " << sum.checks_run << '\n';
  out << "spectrum:\n";
  for (auto it = sum.spectrum.values.rbegin(); it != sum.spectrum.values.rend(); ++it)
    out << "  " << it->first.str() << " (" << it->first.decimal(6) << "): " << it->second
        << '\n';
  for (const auto &[d, c] : sum.spectrum.values)
    out << "@spectrum " << d.str() << ' ' << c << '\n';

  if (sum.passed()) {
    out << "all theorem checks passed\n";
    return;
  }
  for (const auto &v : sum.spectrum.violations)
    out << "VIOLATION " << v << '\n';
  for (const auto &f : sum.failures)
    for (const auto &c : f.report.checks)
      if (!c.passed)
        out << "VIOLATION " << f.report.id << " " << c.tag << ": " << c.witness << '\n';
  if (!sum.failures.empty()) {
    write_algebra_file(witness, sum.failures.front().algebra);
    out << "witness written to " << witness << '\n';
  }
  throw Exit{kExitTheoremViolation};
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Commutativity degree of Lie algebras over finite fields"};
  app.require_subcommand(1);

  std::uint64_t q = 2;
  std::string modulus, out_path, method = "auto", family;
  std::size_t dim = 3, count = 3, terms = 5;
  std::uint64_t k = 1, budget = 0;
  unsigned workers = 1;
  bool all_methods = false, large = false;
  std::vector<std::string> args;
  std::string path;

  auto *validate_cmd = app.add_subcommand("validate", "Check alternation and Jacobi");
  validate_cmd->add_option("path", path, "algebra file")->required();

  auto *make_cmd = app.add_subcommand(
      "make", "Write an algebra file: abelian N | heisenberg M | affine | l43 | l55 | "
              "sum F1 F2 | cprod F1 Z1 F2 Z2");
  make_cmd->add_option("family", family)->required();
  make_cmd->add_option("args", args);
  make_cmd->add_option("--q", q, "field order");
  make_cmd->add_option("--modulus", modulus, "c0,c1,...,ce for F_{p^e}");
  make_cmd->add_option("--out", out_path, "output path (default stdout)");

  auto *degree_cmd = app.add_subcommand("degree", "Compute d(L)");
  degree_cmd->add_option("path", path, "algebra file")->required();
  degree_cmd->add_option("--method", method, "auto|rank|pairs|centralizer")
      ->check(CLI::IsMember({"auto", "rank", "pairs", "centralizer"}));
  degree_cmd->add_flag("--all-methods", all_methods, "run every in-budget method");
  degree_cmd->add_option("--workers", workers);
  degree_cmd->add_option("--budget", budget, "enumeration budget for every method");

  auto *verify_cmd = app.add_subcommand("verify", "Check the theorems on all small algebras");
  verify_cmd->add_option("--q", q)->required();
  verify_cmd->add_option("--dim", dim)->required();
  verify_cmd->add_flag("--opt-in-large", large, "allow dimension 4 and above");
  verify_cmd->add_option("--workers", workers);
  verify_cmd->add_option("--budget", budget, "candidate tensor budget");
  verify_cmd->add_option("--out", out_path, "witness file on violation");

  auto *sequence_cmd = app.add_subcommand("sequence", "Terms (q^2m+q-1)/q^(2m+1)");
  sequence_cmd->add_option("--q", q)->required();
  sequence_cmd->add_option("--count", count);

  auto *asym_cmd = app.add_subcommand(
      "asymptotic",
      "Limit of d over a family: heisenberg | heisenberg-power | class3-even | "
      "class3-odd | abelian");
  asym_cmd->add_option("family", family)->required();
  asym_cmd->add_option("--q", q)->required();
  asym_cmd->add_option("--k", k, "summands for heisenberg-power");
  asym_cmd->add_option("--terms", terms, "prefix length");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadParameter;
  }

  try {
    DegreeOptions dopts;
    dopts.workers = workers;
    if (budget != 0)
      dopts.budget = {budget, budget, budget};

    if (validate_cmd->parsed()) {
      const LieAlgebra L = read_algebra_file(path);
      const StructureReport s = validate(L);
      out << "valid Lie algebra, field " << L.field().describe() << ", dim " << L.dim()
          << '\n'
          << format_structure(s) << '\n';
    } else if (make_cmd->parsed()) {
      const LieAlgebra L = build_family(family, args, q, modulus);
      if (out_path.empty())
        out << format_algebra(L);
      else
        write_algebra_file(out_path, L);
    } else if (degree_cmd->parsed()) {
      cmd_degree(path, method, all_methods, dopts, out);
    } else if (verify_cmd->parsed()) {
      EnumerationOptions eopts;
      eopts.degree = dopts;
      if (budget != 0)
        eopts.budget = budget;
      cmd_verify(q, dim, large, out_path.empty() ? "verify-witness.alg" : out_path, eopts,
                 out, err);
    } else if (sequence_cmd->parsed()) {
      const auto seq = sequence_dim1(q, count);
      for (std::size_t m = 0; m < seq.size(); ++m) {
        out << "m=" << m + 1 << ": " << seq[m].str() << " (" << seq[m].decimal(6) << ")\n";
      }
      for (std::size_t m = 0; m < seq.size(); ++m)
        out << "@term " << m + 1 << ' ' << seq[m].str() << '\n';
    } else if (asym_cmd->parsed()) {
      const auto rep = asymptotic(FamilySpec::parse(family, q, k), terms);
      out << "family " << family << ", q=" << q << '\n';
      out << "limit = " << rep.limit.str() << " (" << rep.limit.decimal(6) << ")\n";
      out << "prefix:";
      for (const auto &t : rep.prefix)
        out << ' ' << t.str();
      out << '\n';
      out << "@limit " << rep.limit.str() << '\n';
      for (std::size_t t = 0; t < rep.prefix.size(); ++t)
        out << "@term " << t + 1 << ' ' << rep.prefix[t].str() << '\n';
    }
  } catch (const Exit &e) {
    return e.code;
  } catch (const ParseError &e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const InvalidAlgebra &e) {
    err << "invalid algebra: " << e.what() << '\n';
    return kExitInvalidAlgebra;
  } catch (const BudgetExceeded &e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return kExitBadParameter;
  }
  return kExitOk;
}

} // namespace commdeg
