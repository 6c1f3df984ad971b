#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qmzv/analytic.hpp"
#include "qmzv/errors.hpp"
#include "qmzv/hsum.hpp"
#include "qmzv/json_io.hpp"
#include "qmzv/miner.hpp"
#include "qmzv/verify.hpp"
#include "qmzv/word_algebra.hpp"

namespace qmzv::cli {

namespace {

unsigned parse_unsigned(const std::string& text) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(text, &used);
  } catch (const std::exception&) {
    throw DomainError("not a number: " + text);
  }
  if (used != text.size()) throw DomainError("not a number: " + text);
  return static_cast<unsigned>(v);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

Engine parse_engine(const std::string& text) {
  if (text == "fraction-free" || text == "fraction_free") return Engine::fraction_free;
  if (text == "modular") return Engine::modular;
  throw DomainError("unknown engine: " + text);
}

MinerOptions miner_options(const std::string& engine, const std::string& cache_dir) {
  MinerOptions o;
  o.engine = parse_engine(engine);
  o.cache_dir = cache_dir.empty() ? cache_dir_from_env() : cache_dir;
  return o;
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read " + path);
  return Json::parse(in);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write " + path.string());
  out << text;
  if (!out) throw DomainError("cannot write " + path.string());
}

/// Distinct rotations of k, starting with k.
std::vector<Index> orbit_of(const Index& k) {
  std::vector<Index> out{k};
  for (Index r = rotate(k); !(r == k); r = rotate(r)) out.push_back(r);
  return out;
}

std::vector<Index> indices_up_to(unsigned max_weight) {
  std::vector<Index> out;
  for (unsigned w = 1; w <= max_weight; ++w)
    for (auto& k : compositions(w)) out.push_back(std::move(k));
  return out;
}

std::vector<unsigned> or_default(const std::vector<unsigned>& v, unsigned lo, unsigned hi) {
  if (!v.empty()) return v;
  std::vector<unsigned> out;
  for (unsigned x = lo; x <= hi; ++x) out.push_back(x);
  return out;
}

Json case_json(const GridCase& c) {
  if (c.report) return to_json(*c.report);
  Json params = Json::object();
  for (const auto& [k, v] : c.params) params[k] = v;
  return Json{{"params", params}, {"skipped", true}, {"reason", c.skip_reason}};
}

}  // namespace

std::vector<unsigned> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const unsigned a = parse_unsigned(text.substr(0, dots));
    const unsigned b = parse_unsigned(text.substr(dots + 2));
    if (a > b) throw DomainError("empty range: " + text);
    std::vector<unsigned> out;
    for (unsigned x = a; x <= b; ++x) out.push_back(x);
    return out;
  }
  std::vector<unsigned> out;
  for (const auto& s : split(text, ',')) out.push_back(parse_unsigned(s));
  if (out.empty()) throw DomainError("empty list");
  return out;
}

std::optional<std::vector<unsigned>> parse_primes(const std::string& text) {
  if (text.empty() || text == "auto") return std::nullopt;
  return parse_range(text);
}

int run_hsum(const HsumArgs& a, std::ostream& out) {
  const Variant v = parse_variant(a.variant);
  std::optional<ExpVector> s;
  if (!a.s.empty()) s = parse_exp_vector(a.s);
  const CycModElement x = hsum_mod(v, a.p, a.n, parse_index(a.index), s);
  if (a.format == "json") {
    out << to_json(x).dump() << "\n";
  } else if (a.format == "text") {
    out << x.to_string() << "\n";
  } else {
    throw DomainError("unknown format: " + a.format);
  }
  return 0;
}

int run_verify(const VerifyArgs& a, std::ostream& out) {
  GridSummary summary;
  const std::vector<Index> indices = a.index.empty() ? indices_up_to(a.max_weight)
                                                     : std::vector<Index>{parse_index(a.index)};
  auto need_p = [&] {
    if (a.p.empty()) throw DomainError("--p is required for --id " + a.id);
  };
  auto str = [](auto x) { return std::to_string(x); };
  const std::vector<unsigned> ns = a.n.empty() ? std::vector<unsigned>{1} : a.n;

  if (a.id == "reversal") {
    need_p();
    std::vector<Variant> variants;
    if (a.variant == "both" || a.variant == "plain") variants.push_back(Variant::plain);
    if (a.variant == "both" || a.variant == "star") variants.push_back(Variant::star);
    if (variants.empty()) throw DomainError("reversal variant must be plain, star or both");
    for (unsigned p : a.p)
      for (unsigned n : ns)
        for (const auto& k : indices)
          for (Variant v : variants)
            run_case(summary, {{"p", str(p)}, {"n", str(n)}, {"k", k.to_string()}, {"variant", to_string(v)}},
                     [&] { return verify_reversal(p, n, k, v); });
  } else if (a.id == "duality") {
    need_p();
    for (unsigned p : a.p)
      for (unsigned n : ns)
        for (const auto& k : indices)
          run_case(summary, {{"p", str(p)}, {"n", str(n)}, {"k", k.to_string()}},
                   [&] { return verify_hat_duality(p, n, k); });
  } else if (a.id == "cyclic") {
    need_p();
    std::vector<std::vector<Index>> orbit_list;
    if (!a.index.empty()) {
      orbit_list.push_back(orbit_of(parse_index(a.index)));
    } else {
      for (unsigned w = 1; w <= a.max_weight; ++w)
        for (unsigned d = 1; d <= w; ++d)
          for (auto& o : orbits(w, d)) orbit_list.push_back(std::move(o));
    }
    std::vector<bool> forms;
    if (a.form == "both" || a.form == "plain") forms.push_back(false);
    if (a.form == "both" || a.form == "star") forms.push_back(true);
    if (forms.empty()) throw DomainError("cyclic form must be plain, star or both");
    for (unsigned p : a.p)
      for (unsigned n : ns)
        for (const auto& o : orbit_list)
          for (bool starred : forms)
            run_case(summary,
                     {{"p", str(p)}, {"n", str(n)}, {"orbit", o.front().to_string()}, {"star", starred ? "1" : "0"}},
                     [&] { return verify_cyclic(p, n, o, starred); });
  } else if (a.id == "wt1") {
    need_p();
    for (unsigned p : a.p)
      for (unsigned n : ns)
        run_case(summary, {{"p", str(p)}, {"n", str(n)}}, [&] { return verify_weight_one(p, n); });
  } else if (a.id == "q2") {
    need_p();
    for (unsigned p : a.p)
      for (const auto& k : indices)
        run_case(summary, {{"p", str(p)}, {"n", "2"}, {"k", k.to_string()}},
                 [&] { return verify_q2_suite(p, k); });
  } else if (a.id == "bradley") {
    const auto uppers = or_default(a.n, 1, 8);
    const std::vector<Index> ks = a.index.empty() ? indices_up_to(std::min(a.max_weight, 3u)) : indices;
    for (unsigned n : uppers)
      for (const auto& k : ks)
        run_case(summary, {{"n", str(n)}, {"k", k.to_string()}}, [&] { return verify_bradley(n, k); });
  } else if (a.id == "theta") {
    for (unsigned l : or_default(a.l, 0, 4))
      for (unsigned k : or_default(a.k, 1, 3))
        for (unsigned m : or_default(a.m, 1, 5))
          run_case(summary, {{"l", str(l)}, {"k", str(k)}, {"m", str(m)}},
                   [&] { return verify_theta_lemma(l, k, m); });
  } else {
    throw DomainError("unknown identity: " + a.id);
  }

  if (!a.quiet)
    for (const auto& c : summary.cases) out << case_json(c).dump() << "\n";
  out << "id,passed,failed,skipped\n"
      << a.id << "," << summary.passed << "," << summary.failed << "," << summary.skipped << "\n";
  return summary.ok() ? 0 : 1;
}

int run_dims(const DimsArgs& a, std::ostream& out) {
  const Family f = parse_family(a.family);
  const auto ks = parse_range(a.weights);
  const auto primes = parse_primes(a.primes);
  const MinerOptions options = miner_options(a.engine, a.cache_dir);
  std::vector<DimReport> reports;
  bool ok = true;
  for (unsigned k : ks) {
    reports.push_back(dim_tilde(f, k, primes, options));
    ok = ok && reports.back().stabilized && reports.back().certified;
  }
  if (a.format == "json") {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    out << arr.dump(2) << "\n";
  } else if (a.format == "csv") {
    for (std::size_t i = 0; i < ks.size(); ++i) out << (i ? "," : "") << ks[i];
    out << "\n";
    for (std::size_t i = 0; i < reports.size(); ++i) out << (i ? "," : "") << reports[i].dim_tilde;
    out << "\n";
  } else {
    throw DomainError("unknown format: " + a.format);
  }
  return ok ? 0 : 1;
}

int run_mine(const MineArgs& a, std::ostream& out) {
  const Family f = parse_family(a.family);
  const auto candidates = find_relations(f, a.weight, parse_primes(a.primes), miner_options(a.engine, a.cache_dir));
  Json arr = Json::array();
  bool ok = true;
  for (const auto& c : candidates) {
    arr.push_back(to_json(c.coefficients));
    ok = ok && c.verified;
  }
  if (!a.emit.empty()) write_text(a.emit, arr.dump(2) + "\n");
  for (const auto& r : arr) out << r.dump() << "\n";
  out << "relations," << candidates.size() << "\n";
  return ok ? 0 : 1;
}

int run_member(const MemberArgs& a, std::ostream& out) {
  const Combination target = combination_from_json(read_json(a.target));
  const SpanSpec span = span_from_json(read_json(a.span));
  const auto r = membership(target, span.basis, span.primes, span.n, miner_options(a.engine, a.cache_dir));
  out << to_json(r).dump(2) << "\n";
  return r.certified ? 0 : 1;
}

int run_limits(const LimitsArgs& a, std::ostream& out) {
  const Index k = parse_index(a.index);
  const auto rows = convergence_report(k, a.m, a.order, a.digits);
  if (a.format == "csv") {
    out << "m,l,Re,Im,delta\n";
    for (const auto& r : rows) {
      out << r.m << "," << r.l << "," << r.value.real().to_string(a.digits) << ","
          << r.value.imag().to_string(a.digits) << ",";
      if (r.delta) out << r.delta->to_string(a.digits);
      out << "\n";
    }
  } else if (a.format == "json") {
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json row{{"m", r.m},
               {"l", r.l},
               {"re", r.value.real().to_string(a.digits)},
               {"im", r.value.imag().to_string(a.digits)}};
      row["delta"] = r.delta ? Json(r.delta->to_string(a.digits)) : Json(nullptr);
      arr.push_back(row);
    }
    out << arr.dump(2) << "\n";
  } else {
    throw DomainError("unknown format: " + a.format);
  }
  return 0;
}

int run_tables(const TablesArgs& a, std::ostream& out) {
  const Json data = read_json(a.data);
  if (data.value("format", "") != "qmzv-reference-tables") throw DomainError(a.data + " is not a reference table file");
  const MinerOptions options = miner_options("fraction-free", a.cache_dir);
  bool all_match = true;
  for (const auto& t : data.at("tables")) {
    const std::string id = t.at("id").get<std::string>();
    if (!a.only.empty() && std::find(a.only.begin(), a.only.end(), id) == a.only.end()) continue;
    const auto ks = t.at("k").get<std::vector<unsigned>>();
    const auto expected = t.at("values").get<std::vector<long>>();
    const unsigned max_k = a.full ? ks.back() : t.at("default_max_k").get<unsigned>();
    const bool miner = id != "word_quotient";
    std::optional<Family> family;
    if (miner) family = parse_family(id.substr(id.find('_') + 1));

    std::ostringstream csv;
    csv << "k,computed,expected,match";
    if (miner) csv << ",stabilized";
    if (t.contains("metadata")) csv << "," << t.at("metadata").at("column").get<std::string>();
    csv << "\n";
    std::size_t cells = 0, matched = 0;
    for (std::size_t i = 0; i < ks.size() && ks[i] <= max_k; ++i) {
      long computed = 0;
      bool stabilized = true;
      if (miner) {
        const DimReport r = dim_tilde(*family, ks[i], std::nullopt, options);
        computed = static_cast<long>(r.dim_tilde);
        stabilized = r.stabilized && r.certified;
      } else {
        computed = static_cast<long>(dim_word_quotient(ks[i]));
      }
      const bool match = computed == expected[i] && stabilized;
      ++cells;
      if (match) ++matched;
      csv << ks[i] << "," << computed << "," << expected[i] << "," << (match ? "match" : "mismatch");
      if (miner) csv << "," << (stabilized ? "true" : "false");
      if (t.contains("metadata")) csv << "," << t.at("metadata").at("values").at(i).get<long>();
      csv << "\n";
    }
    const auto path = std::filesystem::path(a.out_dir) / (id + ".csv");
    write_text(path, csv.str());
    out << id << "," << matched << "/" << cells << "," << path.string() << "\n";
    all_match = all_match && matched == cells;
  }
  return all_match ? 0 : 1;
}

}  // namespace qmzv::cli
