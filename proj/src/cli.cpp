#include "qbk/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "qbk/errors.hpp"
#include "qbk/qbernoulli.hpp"
#include "qbk/qsums.hpp"
#include "qbk/qzeta.hpp"

namespace qbk::cli {

namespace {

const std::vector<int>& at_least(const std::vector<int>& params, std::size_t count) {
  if (params.size() < count) throw std::invalid_argument("too few identity parameters");
  return params;
}

}  // namespace

const IdentityRegistry& IdentityRegistry::standard() {
  static const IdentityRegistry registry = [] {
    IdentityRegistry r;
    r.set(IdentityId::warnaar, [](const auto& p) { return warnaar_check(at_least(p, 1)[0]); });
    r.set(IdentityId::garrett_hummel,
          [](const auto& p) { return garrett_hummel_check(at_least(p, 1)[0]); });
    for (IdentityId id : {IdentityId::schlosser_m2, IdentityId::schlosser_m3, IdentityId::schlosser_m4,
                          IdentityId::schlosser_m5}) {
      r.set(id, [](const auto& p) { return schlosser_check(at_least(p, 2)[0], p[1]); });
    }
    r.set(IdentityId::kim_linear,
          [](const auto& p) { return kim_check(KimFormula::linear, at_least(p, 1)[0]); });
    r.set(IdentityId::kim_quadratic,
          [](const auto& p) { return kim_check(KimFormula::quadratic, at_least(p, 1)[0]); });
    r.set(IdentityId::theorem3, [](const auto& p) { return theorem3_check(at_least(p, 2)[0], p[1]); });
    r.set(IdentityId::s12_vs_theorem3,
          [](const auto& p) { return theorem3_bridge_check(at_least(p, 2)[0], p[1]); });
    return r;
  }();
  return registry;
}

VerificationReport IdentityRegistry::run(const IdentityCase& c) const {
  const auto it = checks_.find(c.id);
  if (it == checks_.end()) {
    return {c.id, c.params, Status::error, "no check registered", ""};
  }
  try {
    return it->second(c.params);
  } catch (const std::exception& e) {
    return {c.id, c.params, Status::error, e.what(), ""};
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size()) throw std::invalid_argument("not an integer list: '" + text + "'");
    return v;
  };
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(to_int(item));
      continue;
    }
    const int lo = to_int(item.substr(0, dots));
    const int hi = to_int(item.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("empty range '" + item + "'");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

unsigned threads_from_env() {
  const char* value = std::getenv("QBK_THREADS");
  if (value == nullptr) return 0;
  try {
    const long n = std::stol(value);
    return n > 0 ? static_cast<unsigned>(n) : 0U;
  } catch (const std::exception&) {
    return 0;
  }
}

std::vector<VerificationReport> run_cases(const std::vector<IdentityCase>& cases,
                                          const IdentityRegistry& registry, unsigned threads) {
  std::vector<VerificationReport> reports(cases.size());
  if (threads <= 1 || cases.size() <= 1) {
    for (std::size_t i = 0; i < cases.size(); ++i) reports[i] = registry.run(cases[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    const unsigned count = std::min<unsigned>(threads, static_cast<unsigned>(cases.size()));
    for (unsigned t = 0; t < count; ++t) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < cases.size(); i = next++) reports[i] = registry.run(cases[i]);
      });
    }
  }
  std::stable_sort(reports.begin(), reports.end(), report_order);
  return reports;
}

namespace {

std::vector<int> range(int lo, int hi, int step = 1) {
  std::vector<int> v;
  for (int i = lo; i <= hi; i += step) v.push_back(i);
  return v;
}

void require_even(const std::vector<int>& ns) {
  for (int n : ns) {
    if (n < 2 || n % 2 != 0) {
      throw OddOrder("order n = " + std::to_string(n) + " must be a positive even integer");
    }
  }
}

std::vector<int> n_range(const CliConfig& c, int default_max, int first, int step) {
  if (!c.n_values.empty()) return c.n_values;
  return range(first, c.n_max.value_or(default_max), step);
}

std::vector<int> k_range(const CliConfig& c, int default_max) {
  if (!c.k_values.empty()) return c.k_values;
  return range(1, c.k_max.value_or(default_max));
}

std::vector<IdentityCase> verify_cases(const CliConfig& c) {
  std::vector<IdentityId> ids;
  if (c.identity == "all") {
    ids = all_identities();
  } else if (c.identity == "schlosser") {
    ids = {IdentityId::schlosser_m2, IdentityId::schlosser_m3, IdentityId::schlosser_m4,
           IdentityId::schlosser_m5};
  } else if (c.identity == "kim") {
    ids = {IdentityId::kim_linear, IdentityId::kim_quadratic};
  } else {
    ids = {identity_from_string(c.identity)};
  }
  if (c.m) {
    if (*c.m < 2 || *c.m > 5) throw UnsupportedM("m = " + std::to_string(*c.m) + " (supported: 2..5)");
    std::erase_if(ids, [&](IdentityId id) {
      const int base = static_cast<int>(IdentityId::schlosser_m2);
      const int idx = static_cast<int>(id) - base;
      return idx >= 0 && idx <= 3 && idx + 2 != *c.m;
    });
  }

  std::vector<IdentityCase> cases;
  for (IdentityId id : ids) {
    switch (id) {
      case IdentityId::warnaar:
      case IdentityId::kim_linear:
      case IdentityId::kim_quadratic:
        for (int n : n_range(c, 30, 1, 1)) cases.push_back({id, {n}});
        break;
      case IdentityId::garrett_hummel:
        for (int n : n_range(c, 20, 1, 1)) cases.push_back({id, {n}});
        break;
      case IdentityId::schlosser_m2:
      case IdentityId::schlosser_m3:
      case IdentityId::schlosser_m4:
      case IdentityId::schlosser_m5: {
        const int m = static_cast<int>(id) - static_cast<int>(IdentityId::schlosser_m2) + 2;
        for (int n : n_range(c, 20, 1, 1)) cases.push_back({id, {m, n}});
        break;
      }
      case IdentityId::theorem3:
      case IdentityId::s12_vs_theorem3: {
        const auto ns = n_range(c, 8, 2, 2);
        require_even(ns);
        for (int n : ns) {
          for (int k : k_range(c, 8)) cases.push_back({id, {n, k}});
        }
        break;
      }
    }
  }
  for (const auto& cs : cases) {
    for (int v : cs.params) {
      if (v < 1) throw std::invalid_argument("identity parameters must be positive");
    }
  }
  return cases;
}

std::string render_reports(const std::vector<VerificationReport>& reports, OutputFormat format) {
  std::ostringstream os;
  if (format == OutputFormat::csv) os << "identity,params,status,lhs,rhs\n";
  for (const auto& r : reports) {
    std::string params;
    for (std::size_t i = 0; i < r.params.size(); ++i) {
      params += (i ? (format == OutputFormat::csv ? ";" : ",") : "") + std::to_string(r.params[i]);
    }
    switch (format) {
      case OutputFormat::json: os << r.to_json_line() << '\n'; break;
      case OutputFormat::csv:
        os << to_string(r.identity) << ',' << params << ',' << to_string(r.status) << ',' << r.lhs << ','
           << r.rhs << '\n';
        break;
      case OutputFormat::text:
        os << to_string(r.identity) << " [" << params << "] " << to_string(r.status) << '\n';
        break;
    }
  }
  return os.str();
}

QRatio table_value(const std::string& quantity, int n, int k) {
  if (quantity == "beta") return beta_star(n, k);
  if (quantity == "beta-poly") return beta_star_poly(n, k);
  if (quantity == "beta-oracle") return beta_star_oracle(n, k);
  if (quantity == "beta-poly-oracle") return beta_star_poly_oracle(n, k);
  if (quantity == "theorem3") return QRatio(s_theorem3_brute(n, k));
  if (quantity == "theorem3-closed") return s_theorem3_closed(n, k);
  if (quantity == "zeta-special") return zeta_special(n, k);
  throw std::invalid_argument("unknown quantity '" + quantity + "'");
}

int single(const std::vector<int>& values, const char* flag) {
  if (values.size() != 1) throw std::invalid_argument(std::string("--") + flag + " needs a single value");
  return values.front();
}

std::string value_or_eval(const QRatio& value, const CliConfig& c) {
  if (c.q) return to_string(eval_q(value, *c.q));
  return value.to_string();
}

std::string run_beta(const CliConfig& c, BetaKind kind) {
  const int n = single(c.n_values, "n");
  const int k = single(c.k_values, "k");
  BetaResult result;
  if (kind == BetaKind::polynomial && c.printed) {
    result = {n, k, kind, BetaMethod::closed_form, beta_star_poly_printed(n, k)};
  } else {
    const BetaMethod method = c.method == "oracle" ? BetaMethod::oracle : BetaMethod::closed_form;
    if (c.method != "oracle" && c.method != "closed") {
      throw std::invalid_argument("--method must be closed or oracle");
    }
    result = compute_beta(kind, method, n, k);
  }
  const std::string value = value_or_eval(result.value, c);
  if (c.format == OutputFormat::json) {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["k"] = k;
    j["kind"] = std::string(to_string(kind));
    j["method"] = c.printed ? std::string("printed") : std::string(to_string(result.method));
    j["value"] = value;
    return j.dump() + "\n";
  }
  return value + "\n";
}

std::string run_sum(const CliConfig& c) {
  const int n = single(c.n_values, "n");
  QRatio value;
  if (c.theorem3) {
    const int k = single(c.k_values, "k");
    value = c.closed ? s_theorem3_closed(n, k) : QRatio(s_theorem3_brute(n, k));
  } else {
    if (!c.m) throw std::invalid_argument("sum needs --m (or --theorem3)");
    value = QRatio(s_mn_brute(*c.m, n));
  }
  return value_or_eval(value, c) + "\n";
}

std::string run_zeta(const CliConfig& c) {
  if (c.special) {
    const QRatio v = zeta_special(single(c.n_values, "n"), single(c.k_values, "k"));
    return value_or_eval(v, c) + "\n";
  }
  if (!c.s || !c.q || !c.tolerance) throw std::invalid_argument("zeta needs --s, --q and --tolerance");
  const ZetaQuery query{*c.s, *c.q, c.k_values.empty() ? 1 : single(c.k_values, "k"), *c.tolerance};
  const ZetaResult r = zeta_series(query, zeta_variant_from_string(c.variant));
  if (c.format == OutputFormat::json) return r.to_json().dump() + "\n";
  std::ostringstream os;
  os << to_string(r.value) << '\n'
     << "# ~ " << r.value.get_d() << " after " << r.terms_used << " terms\n";
  return os.str();
}

std::string run_limit(const CliConfig& c) {
  if (c.expr) return to_string(limit_at_q1(QRatio::parse(*c.expr))) + "\n";
  const int n = single(c.n_values, "n");
  const int k = single(c.k_values, "k");
  Rational v;
  if (c.quantity == "beta") {
    v = beta_limit_q1(n, k, BetaKind::number);
  } else if (c.quantity == "beta-poly") {
    v = beta_limit_q1(n, k, BetaKind::polynomial);
  } else {
    v = limit_at_q1(table_value(c.quantity, n, k));
  }
  return to_string(v) + "\n";
}

void write_output(const CliConfig& c, const std::string& text, std::ostream& out) {
  if (!c.output_path) {
    out << text << std::flush;
    return;
  }
  std::ofstream file(*c.output_path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + *c.output_path + "' for writing");
  file << text;
  file.flush();
  if (!file) throw IoError("write to '" + *c.output_path + "' failed");
}

OutputFormat parse_format(const std::string& s) {
  if (s == "text") return OutputFormat::text;
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  throw std::invalid_argument("--format must be text, json or csv");
}

// Raw flag values before conversion.
struct RawFlags {
  std::string n, k, format = "text";
  std::optional<int> m, n_max, k_max;
  std::string s, q, tolerance;
  std::optional<std::string> out;
};

}  // namespace

std::string emit_table(const CliConfig& config) {
  const auto ns = n_range(config, 4, 2, 2);
  const auto ks = k_range(config, 3);
  require_even(ns);
  struct Row {
    int n, k;
    std::string value;
  };
  std::vector<Row> rows;
  for (int n : ns) {
    for (int k : ks) {
      if (k < 1) throw std::invalid_argument("k must be positive");
      rows.push_back({n, k, table_value(config.quantity, n, k).to_string()});
    }
  }
  std::sort(rows.begin(), rows.end(),
            [](const Row& a, const Row& b) { return std::tie(a.n, a.k) < std::tie(b.n, b.k); });
  std::ostringstream os;
  switch (config.format) {
    case OutputFormat::csv:
      os << "n,k,value\n";
      for (const auto& r : rows) os << r.n << ',' << r.k << ',' << r.value << '\n';
      break;
    case OutputFormat::json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& r : rows) {
        nlohmann::ordered_json j;
        j["n"] = r.n;
        j["k"] = r.k;
        j["value"] = r.value;
        arr.push_back(std::move(j));
      }
      os << arr.dump() << '\n';
      break;
    }
    case OutputFormat::text:
      for (const auto& r : rows) os << "n=" << r.n << " k=" << r.k << "  " << r.value << '\n';
      break;
  }
  return os.str();
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err,
        const IdentityRegistry& registry) {
  CLI::App app{"Exact q-Bernoulli numbers, q-power sums and identity verification", "qbk"};
  app.require_subcommand(1);

  CliConfig config;
  RawFlags raw;

  auto add_range_flags = [&](CLI::App* sub) {
    sub->add_option("--n", raw.n, "order / upper index; accepts 4, 2,4,6 or 2..8");
    sub->add_option("--k", raw.k, "parameter k; accepts lists and ranges like --n");
    sub->add_option("--n-max", raw.n_max, "upper bound of the n range");
    sub->add_option("--k-max", raw.k_max, "upper bound of the k range");
  };
  auto add_output_flags = [&](CLI::App* sub) {
    sub->add_option("--format", raw.format, "text, json or csv");
    sub->add_option("--out", raw.out, "write output to this file instead of stdout");
  };

  auto* beta = app.add_subcommand("beta", "q-Bernoulli number beta*_{n,k,q}");
  auto* beta_poly = app.add_subcommand("beta-poly", "q-Bernoulli polynomial beta*_{n,k,q}(k)");
  for (auto* sub : {beta, beta_poly}) {
    add_range_flags(sub);
    add_output_flags(sub);
    sub->add_option("--method", config.method, "closed or oracle");
    sub->add_option("--q", raw.q, "evaluate at this rational q instead of printing the function");
  }
  beta_poly->add_flag("--printed", config.printed, "use the prefactor 1/([2]_q (1-q)^{n-1}) verbatim");

  auto* sum = app.add_subcommand("sum", "finite q-power sums");
  add_range_flags(sum);
  add_output_flags(sum);
  sum->add_option("--m", raw.m, "power m of S_{m,n}(q)");
  sum->add_flag("--theorem3", config.theorem3, "sum_{j<k} [j]_{q^2}[j]_q^{n-1} q^{(n+1)(k-j)/2}");
  sum->add_flag("--closed", config.closed, "with --theorem3: the beta-difference closed form");
  sum->add_option("--q", raw.q, "evaluate at this rational q");

  auto* verify = app.add_subcommand("verify", "verify the identity corpus exactly");
  add_range_flags(verify);
  add_output_flags(verify);
  verify->add_option("--identity", config.identity, "identity id, 'schlosser', 'kim' or 'all'");
  verify->add_option("--m", raw.m, "restrict schlosser to this m");

  auto* table = app.add_subcommand("table", "tabulate a quantity over (n, k)");
  add_range_flags(table);
  add_output_flags(table);
  table->add_option("--quantity", config.quantity,
                    "beta, beta-poly, beta-oracle, beta-poly-oracle, theorem3, theorem3-closed, zeta-special");

  auto* zeta = app.add_subcommand("zeta", "q-zeta series values");
  add_range_flags(zeta);
  add_output_flags(zeta);
  zeta->add_option("--variant", config.variant, "shifted or plain");
  zeta->add_option("--s", raw.s, "integer argument s");
  zeta->add_option("--q", raw.q, "rational q > 1");
  zeta->add_option("--tolerance", raw.tolerance, "positive rational tolerance, e.g. 1/1000000000000");
  zeta->add_flag("--special", config.special, "special value at s = 1 - n");

  auto* limit = app.add_subcommand("limit", "exact limit at q -> 1");
  add_range_flags(limit);
  add_output_flags(limit);
  limit->add_option("--quantity", config.quantity, "beta, beta-poly, theorem3, theorem3-closed, ...");
  limit->add_option("--expr", config.expr, "canonical rendering of a ratio, e.g. '(1 - 1*q^3)/(1 - 1*q^1)'");

  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    config.format = parse_format(raw.format);
    config.output_path = raw.out;
    config.m = raw.m;
    config.n_max = raw.n_max;
    config.k_max = raw.k_max;
    if (!raw.n.empty()) config.n_values = parse_int_list(raw.n);
    if (!raw.k.empty()) config.k_values = parse_int_list(raw.k);
    if (!raw.s.empty()) config.s = parse_rational(raw.s);
    if (!raw.q.empty()) config.q = parse_rational(raw.q);
    if (!raw.tolerance.empty()) config.tolerance = parse_rational(raw.tolerance);

    std::string output;
    int code = kExitOk;
    if (beta->parsed()) {
      config.command = Command::beta;
      output = run_beta(config, BetaKind::number);
    } else if (beta_poly->parsed()) {
      config.command = Command::beta_poly;
      output = run_beta(config, BetaKind::polynomial);
    } else if (sum->parsed()) {
      config.command = Command::sum;
      output = run_sum(config);
    } else if (verify->parsed()) {
      config.command = Command::verify;
      const auto reports = run_cases(verify_cases(config), registry, threads_from_env());
      output = render_reports(reports, config.format);
      const bool all_equal = std::all_of(reports.begin(), reports.end(),
                                         [](const auto& r) { return r.status == Status::equal; });
      if (!all_equal) code = kExitMismatch;
      for (const auto& r : reports) {
        if (r.status != Status::equal) {
          err << "qbk: " << to_string(r.identity) << " " << to_string(r.status) << " for params";
          for (int p : r.params) err << ' ' << p;
          err << '\n';
        }
      }
    } else if (table->parsed()) {
      config.command = Command::table;
      output = emit_table(config);
    } else if (zeta->parsed()) {
      config.command = Command::zeta;
      output = run_zeta(config);
    } else {
      config.command = Command::limit;
      output = run_limit(config);
    }
    write_output(config, output, out);
    return code;
  } catch (const std::exception& e) {
    err << "qbk: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace qbk::cli
