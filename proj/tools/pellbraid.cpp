// Command-line front end: sequence generation, identity sweeps, closed-form
// vs oracle comparison, reference-table rendering, and the conjecture scan.
//
// Exit codes: 0 success, 1 verification failure or closed-form/oracle
// disagreement, 2 usage error, 3 conjecture counterexample found.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pellbraid/closed_forms.hpp"
#include "pellbraid/errors.hpp"
#include "pellbraid/identities.hpp"
#include "pellbraid/oracle.hpp"
#include "pellbraid/padic.hpp"
#include "pellbraid/report_json.hpp"
#include "pellbraid/sequences.hpp"

namespace {

using nlohmann::json;
using namespace pellbraid;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCounterexample = 3;

enum class Format { Ascii, Json, Csv };

const std::map<std::string, Format> kFormatNames = {
    {"ascii", Format::Ascii}, {"json", Format::Json}, {"csv", Format::Csv}};

std::vector<std::string> kind_names() {
  std::vector<std::string> names;
  for (SequenceKind kind : kAllKinds) names.emplace_back(kind_name(kind));
  return names;
}

// Rectangular table with a header row; renders as aligned ascii or csv.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void print_ascii(std::ostream& out) const {
    std::size_t columns = header.size();
    for (const auto& row : rows) columns = std::max(columns, row.size());
    std::vector<std::size_t> widths(columns);
    for (std::size_t c = 0; c < header.size(); ++c)
      widths[c] = header[c].size();
    for (const auto& row : rows)
      for (std::size_t c = 0; c < row.size(); ++c)
        widths[c] = std::max(widths[c], row[c].size());
    auto emit = [&](const std::vector<std::string>& cells) {
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c) out << "  ";
        out << cells[c];
        if (c + 1 < cells.size())
          for (std::size_t pad = cells[c].size(); pad < widths[c]; ++pad)
            out << ' ';
      }
      out << '\n';
    };
    emit(header);
    for (const auto& row : rows) emit(row);
  }

  void print_csv(std::ostream& out) const {
    auto emit = [&](const std::vector<std::string>& cells) {
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c) out << ',';
        out << cells[c];
      }
      out << '\n';
    };
    emit(header);
    for (const auto& row : rows) emit(row);
  }
};

struct OutputTarget {
  std::string path;  // empty = stdout

  template <typename Fn>
  int with_stream(Fn&& fn) const {
    if (path.empty()) return fn(std::cout);
    std::ofstream file(path);
    if (!file) {
      std::cerr << "error: cannot open " << path << " for writing\n";
      return kExitUsage;
    }
    return fn(file);
  }
};

// ---------------------------------------------------------------- seq

struct SeqOptions {
  std::string kind;
  bool all_kinds = false;
  std::int64_t start = 0;
  std::int64_t count = 11;
  Format format = Format::Ascii;
  OutputTarget target;
};

int run_seq(const SeqOptions& opt) {
  std::vector<SequenceKind> kinds;
  if (opt.all_kinds) {
    kinds.assign(kAllKinds.begin(), kAllKinds.end());
  } else {
    auto kind = parse_kind(opt.kind);
    if (!kind) {
      std::cerr << "error: unknown sequence kind '" << opt.kind << "'\n";
      return kExitUsage;
    }
    kinds.push_back(*kind);
  }

  return opt.target.with_stream([&](std::ostream& out) {
    if (opt.format == Format::Json) {
      json rows = json::array();
      for (SequenceKind kind : kinds) {
        json values = json::array();
        for (const Integer& t : terms(kind, opt.start, opt.count))
          values.push_back(t.get_str());
        rows.push_back({{"kind", std::string(kind_name(kind))},
                        {"terms", values}});
      }
      out << json{{"start", opt.start}, {"count", opt.count}, {"rows", rows}}
                 .dump(2)
          << '\n';
      return kExitOk;
    }
    Table table;
    table.header.push_back("kind");
    for (std::int64_t n = opt.start; n < opt.start + opt.count; ++n)
      table.header.push_back(std::to_string(n));
    for (SequenceKind kind : kinds) {
      std::vector<std::string> row{std::string(kind_name(kind))};
      for (const Integer& t : terms(kind, opt.start, opt.count))
        row.push_back(t.get_str());
      table.rows.push_back(std::move(row));
    }
    if (opt.format == Format::Csv)
      table.print_csv(out);
    else
      table.print_ascii(out);
    return kExitOk;
  });
}

// ---------------------------------------------------------------- curl

struct CurlOptions {
  std::string kind;
  std::int64_t k = 1;
  std::int64_t m = 1;
  std::int64_t horizon = 64;
  Format format = Format::Ascii;
  OutputTarget target;
};

int run_curl(const CurlOptions& opt) {
  auto kind = parse_kind(opt.kind);
  if (!kind) {
    std::cerr << "error: unknown sequence kind '" << opt.kind << "'\n";
    return kExitUsage;
  }
  CurlQuery query{*kind, opt.k, opt.m};
  GcdReport report = curl_report(query, opt.horizon);

  return opt.target.with_stream([&](std::ostream& out) {
    if (opt.format == Format::Json) {
      out << to_json(report).dump(2) << '\n';
    } else if (opt.format == Format::Csv) {
      Table table;
      table.header = {"kind", "k",     "m",       "closed_form",
                      "oracle", "agree", "horizon", "stabilized_at"};
      table.rows.push_back(
          {std::string(kind_name(report.kind)), std::to_string(report.k),
           std::to_string(report.m),
           report.closed_form ? report.closed_form->get_str() : "none",
           report.oracle.get_str(), report.agree ? "true" : "false",
           std::to_string(report.horizon),
           std::to_string(report.stabilized_at)});
      table.print_csv(out);
    } else {
      out << "curl(" << kind_name(report.kind) << ", k=" << report.k
          << ", m=" << report.m << ")\n";
      if (report.closed_form)
        out << "  closed form: " << *report.closed_form << '\n';
      else
        out << "  closed form: none (oracle-only query)\n";
      out << "  oracle:      " << report.oracle << "  (horizon "
          << report.horizon << ", stabilized at " << report.stabilized_at
          << ")\n";
      if (report.closed_form)
        out << "  agree:       " << (report.agree ? "yes" : "NO") << '\n';
    }
    return report.agree ? kExitOk : kExitVerificationFailed;
  });
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  std::string suite = "all";
  std::int64_t max_k = -1;
  std::int64_t max_n = -1;
  std::int64_t max_s = -1;
  std::int64_t max_r = -1;
  std::int64_t max_i = -1;
  std::int64_t max_ell = -1;
  Format format = Format::Ascii;
  OutputTarget target;
};

std::int64_t pick(std::int64_t flag, std::int64_t fallback) {
  return flag > 0 ? flag : fallback;
}

std::vector<IdentityReport> run_suite(const std::string& suite,
                                      const VerifyOptions& opt) {
  if (suite == "sums") return verify_sums(pick(opt.max_k, 300));
  if (suite == "cassini") return verify_cassini(pick(opt.max_k, 500));
  if (suite == "gcd-lemmas") return verify_gcd_lemmas(pick(opt.max_n, 300));
  if (suite == "sigma")
    return verify_sigma(pick(opt.max_k, 60), pick(opt.max_n, 60));
  if (suite == "braids") return verify_braids(pick(opt.max_n, 200));
  if (suite == "padic") {
    std::int64_t k_max = pick(opt.max_k, 2048);
    return {verify_nu2_pell(k_max), verify_nu2_product(std::max<std::int64_t>(k_max, 2))};
  }
  if (suite == "identities") {
    auto reports = verify_diff_factors(pick(opt.max_s, 120), pick(opt.max_r, 120));
    for (auto& r : verify_t_lemma(pick(opt.max_k, 100), pick(opt.max_i, 100)))
      reports.push_back(std::move(r));
    for (auto& r : verify_pell_binomial(pick(opt.max_ell, 200)))
      reports.push_back(std::move(r));
    return reports;
  }
  throw std::invalid_argument("unknown suite: " + suite);
}

int run_verify(const VerifyOptions& opt) {
  static const std::vector<std::string> kSuites = {
      "sums", "cassini", "gcd-lemmas", "sigma",
      "identities", "padic", "braids"};
  std::vector<IdentityReport> reports;
  if (opt.suite == "all") {
    for (const auto& suite : kSuites)
      for (auto& report : run_suite(suite, opt))
        reports.push_back(std::move(report));
  } else {
    reports = run_suite(opt.suite, opt);
  }

  std::int64_t failures = 0;
  for (const auto& report : reports)
    failures += static_cast<std::int64_t>(report.failures.size());

  return opt.target.with_stream([&](std::ostream& out) {
    if (opt.format == Format::Json) {
      json body = json::array();
      for (const auto& report : reports) body.push_back(to_json(report));
      out << json{{"suite", opt.suite},
                  {"reports", body},
                  {"failures_total", failures}}
                 .dump(2)
          << '\n';
    } else if (opt.format == Format::Csv) {
      // One summary row per sweep; one detail row per failing tuple.
      Table table;
      table.header = {"identity_id", "checked", "failures",
                      "params", "lhs", "rhs"};
      for (const auto& report : reports) {
        table.rows.push_back({report.identity_id,
                              std::to_string(report.checked),
                              std::to_string(report.failures.size()), "", "",
                              ""});
        for (const auto& failure : report.failures) {
          std::string params;
          for (const auto& [name, value] : failure.params) {
            if (!params.empty()) params += ';';
            params += name + '=' + std::to_string(value);
          }
          table.rows.push_back({report.identity_id,
                                std::to_string(report.checked),
                                std::to_string(report.failures.size()),
                                params, failure.lhs.get_str(),
                                failure.rhs.get_str()});
        }
      }
      table.print_csv(out);
    } else {
      for (const auto& report : reports) {
        out << (report.ok() ? "ok   " : "FAIL ") << report.identity_id
            << "  checked " << report.checked << ", failures "
            << report.failures.size() << '\n';
        for (const auto& failure : report.failures) {
          out << "       at";
          for (const auto& [name, value] : failure.params)
            out << ' ' << name << '=' << value;
          out << ": lhs=" << failure.lhs << " rhs=" << failure.rhs << '\n';
        }
      }
      out << (failures == 0 ? "all identities hold" : "FAILURES FOUND")
          << " (" << reports.size() << " sweeps, " << failures
          << " failing tuples)\n";
    }
    return failures == 0 ? kExitOk : kExitVerificationFailed;
  });
}

// ---------------------------------------------------------------- tables

struct TablesOptions {
  int which = 1;
  bool braid = false;
  Format format = Format::Ascii;
  OutputTarget target;
};

// Tables 2, 3, 4 pair up the curls of sibling sequences; table 2 runs one
// column further, matching the reference rows.
std::pair<SequenceKind, SequenceKind> curl_table_pair(int which) {
  switch (which) {
    case 2: return {SequenceKind::Pell, SequenceKind::AssociatedPell};
    case 3: return {SequenceKind::Balancing, SequenceKind::LucasBalancing};
    default: return {SequenceKind::Cobalancing, SequenceKind::LucasCobalancing};
  }
}

int curl_table_max_k(int which) { return which == 2 ? 14 : 13; }

Table reference_table(int which) {
  Table table;
  if (which == 1) {
    table.header.push_back("n");
    for (int n = 0; n <= 10; ++n) table.header.push_back(std::to_string(n));
    for (SequenceKind kind : kAllKinds) {
      std::vector<std::string> row{std::string(kind_symbol(kind))};
      for (const Integer& t : terms(kind, 0, 11)) row.push_back(t.get_str());
      table.rows.push_back(std::move(row));
    }
    return table;
  }
  const int max_k = curl_table_max_k(which);
  const auto [first, second] = curl_table_pair(which);
  table.header.push_back("k");
  for (int k = 1; k <= max_k; ++k) table.header.push_back(std::to_string(k));
  for (SequenceKind kind : {first, second}) {
    std::vector<std::string> row{"curl_" + std::string(kind_symbol(kind))};
    for (int k = 1; k <= max_k; ++k)
      row.push_back(curl_closed({kind, k, 1}).get_str());
    table.rows.push_back(std::move(row));
  }
  return table;
}

// Which Pell-family term each closed form draws from, per k; '.' marks the
// constant-1 entries that draw from neither row.
std::string braid_source(SequenceKind kind, std::int64_t k) {
  auto idx = [](std::int64_t i) { return std::to_string(i); };
  switch (kind) {
    case SequenceKind::Pell:
      if (k % 4 == 0) return "2P_" + idx(k / 2);
      if (k % 4 == 2) return "Q_" + idx(k / 2);
      return ".";
    case SequenceKind::AssociatedPell:
      if (k % 4 == 0) return "2P_" + idx(k / 2);
      if (k % 4 == 2) return "2Q_" + idx(k / 2);
      return ".";
    case SequenceKind::Balancing:
      return k % 2 == 0 ? "P_" + idx(k) + "/2" : "Q_" + idx(k);
    case SequenceKind::LucasBalancing:
      return k % 2 == 0 ? "2P_" + idx(k) : "Q_" + idx(k);
    case SequenceKind::LucasCobalancing:
      return k % 2 == 0 ? "4P_" + idx(k) : "Q_" + idx(k);
    case SequenceKind::Cobalancing:
      return k % 2 == 0 ? "gcd(P_" + idx(k) + "," + idx(k) + ")"
                        : "2gcd(Q_" + idx(k) + "," + idx(k) + ")";
  }
  return ".";
}

void print_braid(std::ostream& out, int which) {
  if (which == 1) return;
  const int max_k = curl_table_max_k(which);
  const auto [first, second] = curl_table_pair(which);
  Table table;
  table.header.push_back("k");
  for (int k = 1; k <= max_k; ++k) table.header.push_back(std::to_string(k));
  for (SequenceKind kind : {first, second}) {
    std::vector<std::string> row{"curl_" + std::string(kind_symbol(kind))};
    for (int k = 1; k <= max_k; ++k) row.push_back(braid_source(kind, k));
    table.rows.push_back(std::move(row));
  }
  out << "\nbraid view (Pell-family source of each closed form):\n";
  table.print_ascii(out);
}

int run_tables(const TablesOptions& opt) {
  Table table = reference_table(opt.which);
  return opt.target.with_stream([&](std::ostream& out) {
    if (opt.format == Format::Json) {
      json rows = json::array();
      for (const auto& row : table.rows) {
        json values = json::array();
        for (std::size_t c = 1; c < row.size(); ++c) values.push_back(row[c]);
        rows.push_back({{"label", row[0]}, {"values", values}});
      }
      json columns(std::vector<std::string>(table.header.begin() + 1,
                                            table.header.end()));
      out << json{{"table", opt.which}, {"columns", columns}, {"rows", rows}}
                 .dump(2)
          << '\n';
    } else if (opt.format == Format::Csv) {
      table.print_csv(out);
    } else {
      table.print_ascii(out);
      if (opt.braid) print_braid(out, opt.which);
    }
    return kExitOk;
  });
}

// ------------------------------------------------------- scan-conjecture

struct ScanOptions {
  std::int64_t max_k = 500;
  Format format = Format::Ascii;
  OutputTarget target;
};

int run_scan(const ScanOptions& opt) {
  auto findings = conjecture_scan(opt.max_k);
  std::int64_t counterexamples = 0;
  for (const auto& finding : findings)
    if (!finding.biconditional_holds) ++counterexamples;

  return opt.target.with_stream([&](std::ostream& out) {
    if (opt.format == Format::Json) {
      json body = json::array();
      for (const auto& finding : findings) body.push_back(to_json(finding));
      out << json{{"max_k", opt.max_k},
                  {"counterexamples", counterexamples},
                  {"findings", body}}
                 .dump(2)
          << '\n';
    } else if (opt.format == Format::Csv) {
      Table table;
      table.header = {"k", "gcd_qk_k", "witnesses", "holds"};
      for (const auto& finding : findings) {
        std::string witnesses;
        for (const auto& w : finding.witnesses) {
          if (!witnesses.empty()) witnesses += ';';
          witnesses += std::to_string(w.p) + ':' + std::to_string(w.entry);
        }
        table.rows.push_back({std::to_string(finding.k),
                              finding.gcd_qk_k.get_str(), witnesses,
                              finding.biconditional_holds ? "true" : "false"});
      }
      table.print_csv(out);
    } else {
      for (const auto& finding : findings) {
        out << "k=" << finding.k << "  gcd(Q_k,k)=" << finding.gcd_qk_k;
        if (!finding.witnesses.empty()) {
          out << "  witnesses:";
          for (const auto& w : finding.witnesses)
            out << " (p=" << w.p << ", e_Q=" << w.entry << ")";
        }
        out << (finding.biconditional_holds ? "" : "  COUNTEREXAMPLE")
            << '\n';
      }
      out << "scanned k=1.." << opt.max_k << ": " << counterexamples
          << " counterexample(s)\n";
    }
    return counterexamples == 0 ? kExitOk : kExitCounterexample;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pell-family GCD-of-sums toolkit"};
  app.require_subcommand(1);

  auto add_format = [](CLI::App* cmd, Format& format, OutputTarget& target) {
    cmd->add_option("--format", format, "output format")
        ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case))
        ->default_val("ascii");
    cmd->add_option("--out", target.path, "write output to a file");
  };

  SeqOptions seq_opt;
  auto* seq = app.add_subcommand("seq", "emit sequence terms");
  seq->add_option("--kind", seq_opt.kind, "sequence kind")
      ->check(CLI::IsMember(kind_names()));
  seq->add_flag("--all-kinds", seq_opt.all_kinds, "all six sequences");
  seq->add_option("--start", seq_opt.start, "first index")
      ->check(CLI::NonNegativeNumber);
  seq->add_option("--count", seq_opt.count, "number of terms")
      ->check(CLI::NonNegativeNumber);
  add_format(seq, seq_opt.format, seq_opt.target);

  CurlOptions curl_opt;
  auto* curl = app.add_subcommand(
      "curl", "GCD of all sums of k consecutive m-th powers");
  curl->add_option("--kind", curl_opt.kind, "sequence kind")
      ->required()
      ->check(CLI::IsMember(kind_names()));
  curl->add_option("--k", curl_opt.k, "window length")
      ->required()
      ->check(CLI::PositiveNumber);
  curl->add_option("--m", curl_opt.m, "power")->check(CLI::PositiveNumber);
  curl->add_option("--horizon", curl_opt.horizon, "oracle horizon")
      ->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 20));
  add_format(curl, curl_opt.format, curl_opt.target);

  VerifyOptions verify_opt;
  auto* verify = app.add_subcommand("verify", "run identity sweeps");
  verify->add_option("--suite", verify_opt.suite, "which sweep family")
      ->check(CLI::IsMember({"identities", "cassini", "sums", "sigma",
                             "gcd-lemmas", "padic", "braids", "all"}));
  verify->add_option("--max-k", verify_opt.max_k, "k range upper bound");
  verify->add_option("--max-n", verify_opt.max_n, "n range upper bound");
  verify->add_option("--max-s", verify_opt.max_s, "s range upper bound");
  verify->add_option("--max-r", verify_opt.max_r, "r range upper bound");
  verify->add_option("--max-i", verify_opt.max_i, "i range upper bound");
  verify->add_option("--max-ell", verify_opt.max_ell, "ell range upper bound");
  add_format(verify, verify_opt.format, verify_opt.target);

  TablesOptions tables_opt;
  auto* tables = app.add_subcommand("tables", "render the reference tables");
  tables->add_option("--which", tables_opt.which, "table number")
      ->required()
      ->check(CLI::Range(1, 4));
  tables->add_flag("--braid", tables_opt.braid,
                   "show the Pell/associated-Pell braid view (ascii only)");
  add_format(tables, tables_opt.format, tables_opt.target);

  ScanOptions scan_opt;
  auto* scan = app.add_subcommand("scan-conjecture",
                                  "scan the gcd(Q_k, k) entry-point claim");
  scan->add_option("--max-k", scan_opt.max_k, "scan upper bound")
      ->check(CLI::PositiveNumber);
  add_format(scan, scan_opt.format, scan_opt.target);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (seq->parsed()) {
      if (!seq_opt.all_kinds && seq_opt.kind.empty()) {
        std::cerr << "error: pass --kind or --all-kinds\n";
        return kExitUsage;
      }
      return run_seq(seq_opt);
    }
    if (curl->parsed()) return run_curl(curl_opt);
    if (verify->parsed()) return run_verify(verify_opt);
    if (tables->parsed()) return run_tables(tables_opt);
    if (scan->parsed()) return run_scan(scan_opt);
  } catch (const InternalInconsistencyError& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
