// cmfield: minus class numbers and unit indices of abelian CM-fields.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cmfield/errors.hpp"
#include "cmfield/fieldspec.hpp"
#include "cmfield/hminus.hpp"
#include "cmfield/parallel.hpp"
#include "cmfield/report.hpp"
#include "cmfield/theorems.hpp"
#include "cmfield/unitindex.hpp"

using namespace cmfield;

namespace {

struct Global {
  std::size_t max_degree = kDefaultMaxDegree;
  bool strict = false;
  unsigned threads = 1;
};

enum class Format { human, json, csv };

Format pick_format(bool json, bool csv) {
  if (json && csv) throw CLI::ValidationError("--json and --csv are mutually exclusive");
  return json ? Format::json : csv ? Format::csv : Format::human;
}

std::optional<int> maybe(int v) { return v ? std::optional<int>(v) : std::nullopt; }

int run_unit_index(const Global& g, const std::string& spec, int override_q) {
  const auto k = field_from_spec(spec, g.max_degree);
  const auto v = hasse_unit_index(k, maybe(override_q));
  std::cout << to_json(v, k, spec).dump(2) << '\n';
  return 0;
}

int run_hminus(const Global& g, const std::string& spec, int q_override, Format fmt) {
  const auto k = field_from_spec(spec, g.max_degree);
  const auto r = minus_class_number(k, maybe(q_override));
  if (fmt == Format::json) {
    std::cout << to_json(r, spec).dump(2) << '\n';
  } else {
    Table t{kHminusColumns, {hminus_row(r, spec)}};
    std::cout << (fmt == Format::csv ? render_csv(t) : render_aligned(t));
  }
  return 0;
}

struct VerifyArgs {
  std::string kind;
  bool sweep = false;
  std::int64_t max = 0;
  bool json = false;
  std::int64_t m = 0, n = 0, d1 = 0, d2 = 0, p = 0;
  int family = 1;
  std::string k, l, l1, l2;
};

std::vector<CheckReport> verify_reports(const Global& g, const VerifyArgs& a) {
  SweepOptions opt{a.max, g.threads, g.max_degree};
  auto need = [](bool ok, const char* what) {
    if (!ok) throw CLI::ValidationError(std::string("missing ") + what);
  };
  if (a.sweep) {
    need(a.max > 0, "--max for --sweep");
    if (a.kind == "masley") return masley_sweep(opt);
    if (a.kind == "v4") return v4_sweep(opt);
    if (a.kind == "metsankyla") return metsankyla_sweep(opt);
    if (a.kind == "counterexample") return counterexample_sweep(opt);
    if (a.kind == "martinet") return martinet_sweep(opt);
    return odd_degree_sweep(opt);
  }
  if (a.kind == "masley") {
    need(a.m > 0 && a.n > 0, "--m and --n");
    return {check_masley(a.m, a.n, g.max_degree)};
  }
  if (a.kind == "v4") {
    need(a.d1 && a.d2, "--d1 and --d2");
    return {check_v4(a.d1, a.d2)};
  }
  if (a.kind == "metsankyla") {
    need(!a.l1.empty() && !a.l2.empty(), "--l1 and --l2");
    return {check_metsankyla(field_from_spec(a.l1, g.max_degree), field_from_spec(a.l2, g.max_degree), g.max_degree)};
  }
  if (a.kind == "counterexample") {
    if (a.family == 2) {
      need(a.m > 0, "--m");
      return {check_counterexample_family2(a.m)};
    }
    need(a.d1 && a.d2, "--d1 and --d2");
    return {check_counterexample_family1(a.d1, a.d2)};
  }
  if (a.kind == "martinet") {
    need(a.p > 0, "--p");
    return {check_martinet(a.p)};
  }
  need(!a.k.empty() && !a.l.empty(), "--k and --l");
  return {check_odd_degree(field_from_spec(a.k, g.max_degree), field_from_spec(a.l, g.max_degree))};
}

int run_verify(const Global& g, const VerifyArgs& a) {
  const auto reports = verify_reports(g, a);
  bool failed = false;
  Json all = Json::array();
  for (const auto& r : reports) {
    failed = failed || r.failed();
    if (a.json) {
      all.push_back(to_json(r));
      continue;
    }
    std::cout << to_string(r.verdict) << "  " << r.name;
    for (const auto& in : r.inputs) std::cout << ' ' << in;
    for (const auto& [k, v] : r.quantities) std::cout << "  " << k << '=' << v;
    std::cout << '\n';
  }
  if (a.json) std::cout << all.dump(2) << '\n';
  return failed ? 1 : 0;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) throw CLI::ValidationError("range must look like a..b");
  return {std::stoll(s.substr(0, dots)), std::stoll(s.substr(dots + 2))};
}

int run_table(const Global& g, const std::string& kind, const std::string& range, std::vector<std::string> specs,
              int q_override, Format fmt) {
  if (!range.empty()) {
    const auto [a, b] = parse_range(range);
    for (std::int64_t m = a; m <= b; ++m)
      if (m >= 1 && m % 4 != 2) specs.push_back("zeta:" + std::to_string(m));
  }
  struct Row {
    std::vector<std::string> cells;
    Json json;
    bool error = false;
  };
  const bool hm = kind == "hminus";
  const auto rows = parallel_map(specs, [&](const std::string& spec) {
    Row row;
    try {
      const auto k = field_from_spec(spec, g.max_degree);
      if (hm) {
        const auto r = minus_class_number(k, maybe(q_override));
        row.cells = hminus_row(r, spec);
        row.json = to_json(r, spec);
      } else {
        const auto v = hasse_unit_index(k, maybe(q_override));
        row.cells = unitindex_row(v, k, spec);
        row.json = to_json(v, k, spec);
      }
    } catch (const Error& e) {
      row.error = true;
      row.cells = {spec};
      const auto width = (hm ? kHminusColumns : kUnitIndexColumns).size();
      while (row.cells.size() + 1 < width) row.cells.push_back("");
      row.cells.push_back(std::string("error: ") + e.what());
      row.json = {{"field", spec}, {"error", e.what()}};
    }
    return row;
  }, g.threads);
  bool any_error = false;
  Table t{hm ? kHminusColumns : kUnitIndexColumns, {}};
  Json all = Json::array();
  for (const auto& r : rows) {
    any_error = any_error || r.error;
    t.rows.push_back(r.cells);
    all.push_back(r.json);
  }
  if (fmt == Format::json) std::cout << all.dump(2) << '\n';
  else std::cout << (fmt == Format::csv ? render_csv(t) : render_aligned(t));
  return any_error && g.strict ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minus class numbers and Hasse unit indices of abelian CM-fields"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--max-degree", g.max_degree, "Largest field degree to build")->capture_default_str();
  app.add_flag("--strict", g.strict, "Nonzero exit when a table row fails");
  app.add_option("--threads", g.threads, "Worker threads for sweeps and tables")->check(CLI::Range(1u, 256u));

  std::string field;
  int override_q = 0;
  bool json = false, csv = false;

  auto* ui = app.add_subcommand("unit-index", "Hasse unit index Q(K) and capitulation order");
  ui->add_option("--field", field, "Field spec")->required();
  ui->add_option("--override", override_q, "Use this Q instead of the rule engine")->check(CLI::IsMember({1, 2}));

  auto* hm = app.add_subcommand("hminus", "Minus class number h-(K)");
  hm->add_option("--field", field, "Field spec")->required();
  hm->add_option("--q-override", override_q, "Unit index to use")->check(CLI::IsMember({1, 2}));
  hm->add_flag("--json", json);
  hm->add_flag("--csv", csv);

  VerifyArgs va;
  auto* vf = app.add_subcommand("verify", "Check a divisibility or unit index statement");
  vf->add_option("kind", va.kind)
      ->required()
      ->check(CLI::IsMember({"masley", "metsankyla", "v4", "counterexample", "martinet", "odd-degree"}));
  vf->add_flag("--sweep", va.sweep, "Run the whole family up to --max");
  vf->add_option("--max", va.max, "Sweep bound");
  vf->add_flag("--json", va.json);
  vf->add_option("--m", va.m);
  vf->add_option("--n", va.n);
  vf->add_option("--d1", va.d1);
  vf->add_option("--d2", va.d2);
  vf->add_option("--p", va.p);
  vf->add_option("--family", va.family)->check(CLI::IsMember({1, 2}));
  vf->add_option("--k", va.k, "Subfield spec (odd-degree)");
  vf->add_option("--l", va.l, "Field spec (odd-degree)");
  vf->add_option("--l1", va.l1, "First factor (metsankyla)");
  vf->add_option("--l2", va.l2, "Second factor (metsankyla)");

  std::string table_kind, range;
  std::vector<std::string> specs;
  auto* tb = app.add_subcommand("table", "One row per field");
  tb->add_option("kind", table_kind)->required()->check(CLI::IsMember({"hminus", "unitindex"}));
  tb->add_option("--zeta-range", range, "Cyclotomic fields Q(zeta_m), a <= m <= b, m != 2 mod 4");
  tb->add_option("--spec", specs, "Field spec (repeatable)");
  tb->add_option("--q-override", override_q)->check(CLI::IsMember({1, 2}));
  tb->add_flag("--json", json);
  tb->add_flag("--csv", csv);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*ui) return run_unit_index(g, field, override_q);
    if (*hm) return run_hminus(g, field, override_q, pick_format(json, csv));
    if (*vf) return run_verify(g, va);
    return run_table(g, table_kind, range, specs, override_q, pick_format(json, csv));
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
