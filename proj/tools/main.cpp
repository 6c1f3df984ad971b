#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"

namespace {

std::vector<unsigned> list_option(const std::string& text) {
  return text.empty() ? std::vector<unsigned>{} : qmzv::cli::parse_range(text);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace qmzv::cli;
  CLI::App app{"Multiple harmonic q-sums: exact residues, identity checks, relation mining and limits"};
  app.require_subcommand(1);

  HsumArgs hsum;
  auto* c_hsum = app.add_subcommand("hsum", "Residue of H_{p-1}(k; s; q) in Z_(p)[q]/([p]^n)");
  c_hsum->add_option("--variant", hsum.variant, "plain|star|bar|bar-star|generalized")->capture_default_str();
  c_hsum->add_option("--p", hsum.p, "Prime")->required();
  c_hsum->add_option("--n", hsum.n, "Power of [p]")->capture_default_str();
  c_hsum->add_option("--index", hsum.index, "Index, e.g. 2,1")->required();
  c_hsum->add_option("--s", hsum.s, "Numerator exponents for the generalized variant");
  c_hsum->add_option("--format", hsum.format, "text|json")->capture_default_str();

  VerifyArgs verify;
  std::string v_p, v_n, v_l, v_k, v_m;
  auto* c_verify = app.add_subcommand("verify", "Check an identity family exactly");
  c_verify->add_option("--id", verify.id, "reversal|duality|cyclic|wt1|q2|bradley|theta")->required();
  c_verify->add_option("--p", v_p, "Primes, e.g. 5 or 3,5,7");
  c_verify->add_option("--n", v_n, "Powers of [p]; upper limits for bradley");
  c_verify->add_option("--index", verify.index, "One index (cyclic: orbit representative); default all");
  c_verify->add_option("--max-weight", verify.max_weight, "Weight bound when no index is given")->capture_default_str();
  c_verify->add_option("--variant", verify.variant, "reversal: plain|star|both")->capture_default_str();
  c_verify->add_option("--form", verify.form, "cyclic: plain|star|both")->capture_default_str();
  c_verify->add_option("--l", v_l, "theta: derivative orders");
  c_verify->add_option("--k", v_k, "theta: exponents");
  c_verify->add_option("--m", v_m, "theta: upper limits");
  c_verify->add_flag("--quiet", verify.quiet, "Print only the summary table");

  DimsArgs dims;
  auto* c_dims = app.add_subcommand("dims", "Numerical dimensions over a prime set");
  c_dims->add_option("--family", dims.family, "O|Q|O2")->required();
  c_dims->add_option("--weights", dims.weights, "a..b or a list")->required();
  c_dims->add_option("--primes", dims.primes, "p1,p2,... or auto")->capture_default_str();
  c_dims->add_option("--format", dims.format, "csv|json")->capture_default_str();
  c_dims->add_option("--engine", dims.engine, "fraction-free|modular")->capture_default_str();
  c_dims->add_option("--cache-dir", dims.cache_dir, "Overrides QMZV_CACHE_DIR");

  MineArgs mine;
  auto* c_mine = app.add_subcommand("mine", "Relation candidates among the generators of one weight");
  c_mine->add_option("--family", mine.family, "O|Q|O2")->required();
  c_mine->add_option("--weight", mine.weight, "Weight k")->required();
  c_mine->add_option("--primes", mine.primes, "p1,p2,... or auto")->capture_default_str();
  c_mine->add_option("--emit", mine.emit, "Write the relations as JSON");
  c_mine->add_option("--engine", mine.engine, "fraction-free|modular")->capture_default_str();
  c_mine->add_option("--cache-dir", mine.cache_dir, "Overrides QMZV_CACHE_DIR");

  MemberArgs member;
  auto* c_member = app.add_subcommand("member", "Span membership over a prime set");
  c_member->add_option("--target", member.target, "Combination JSON")->required()->check(CLI::ExistingFile);
  c_member->add_option("--span", member.span, "Span JSON")->required()->check(CLI::ExistingFile);
  c_member->add_option("--engine", member.engine, "fraction-free|modular")->capture_default_str();
  c_member->add_option("--cache-dir", member.cache_dir, "Overrides QMZV_CACHE_DIR");

  LimitsArgs limits;
  std::string l_m;
  auto* c_limits = app.add_subcommand("limits", "Coefficients alpha_l(k; m) at roots of unity");
  c_limits->add_option("--index", limits.index, "Index")->required();
  c_limits->add_option("--m", l_m, "Increasing list of m")->required();
  c_limits->add_option("--order", limits.order, "Number of coefficients")->capture_default_str();
  c_limits->add_option("--digits", limits.digits, "Decimal digits")->capture_default_str();
  c_limits->add_option("--format", limits.format, "csv|json")->capture_default_str();

  TablesArgs tables;
  tables.data = QMZV_REFERENCE_TABLES;
  auto* c_tables = app.add_subcommand("tables", "Recompute the dimension tables against the reference data");
  c_tables->add_option("--data", tables.data, "Reference table file")->capture_default_str();
  c_tables->add_option("--out-dir", tables.out_dir, "Directory for the CSV files")->capture_default_str();
  c_tables->add_flag("--full", tables.full, "Include every listed weight (long run)");
  c_tables->add_option("--only", tables.only, "Table ids to compute")->delimiter(',');
  c_tables->add_option("--cache-dir", tables.cache_dir, "Overrides QMZV_CACHE_DIR");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*c_hsum) return run_hsum(hsum, std::cout);
    if (*c_verify) {
      verify.p = list_option(v_p);
      verify.n = list_option(v_n);
      verify.l = list_option(v_l);
      verify.k = list_option(v_k);
      verify.m = list_option(v_m);
      return run_verify(verify, std::cout);
    }
    if (*c_dims) return run_dims(dims, std::cout);
    if (*c_mine) return run_mine(mine, std::cout);
    if (*c_member) return run_member(member, std::cout);
    if (*c_limits) {
      limits.m = parse_range(l_m);
      return run_limits(limits, std::cout);
    }
    if (*c_tables) return run_tables(tables, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
