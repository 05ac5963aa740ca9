#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "occupancy/entropy.hpp"
#include "occupancy/errors.hpp"
#include "occupancy/exactmath.hpp"
#include "occupancy/format.hpp"
#include "occupancy/maxprob.hpp"
#include "occupancy/oracle.hpp"
#include "occupancy/weights.hpp"

namespace occupancy::cli {

namespace {

using nlohmann::ordered_json;

enum class Format { text, csv, json_lines };

struct GlobalOptions {
  Format format = Format::text;
  int precision = 6;
  std::uint64_t max_space = kDefaultSearchCap;
  unsigned input_limit = kDefaultInputLimit;
  bool serial = false;

  SearchOptions search() const { return {max_space, serial ? Execution::serial : Execution::parallel}; }
};

// One command's output: the same rows rendered as text, CSV or JSON lines.
struct Output {
  std::string command;
  ordered_json inputs = ordered_json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<ordered_json> results;
  bool text_header = false;
  std::string text_separator = "  ";
  std::vector<std::string> text_footer;

  void add(std::vector<std::string> row, ordered_json result) {
    rows.push_back(std::move(row));
    results.push_back(std::move(result));
  }
};

std::string csv_cell(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void emit(const Output& o, Format format, std::ostream& out) {
  switch (format) {
    case Format::text: {
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? o.text_separator : "") << cells[i];
        out << '\n';
      };
      if (o.text_header) line(o.columns);
      for (const auto& row : o.rows) line(row);
      for (const auto& f : o.text_footer) out << f << '\n';
      break;
    }
    case Format::csv: {
      for (std::size_t i = 0; i < o.columns.size(); ++i) out << (i ? "," : "") << csv_cell(o.columns[i]);
      out << '\n';
      for (const auto& row : o.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
        out << '\n';
      }
      break;
    }
    case Format::json_lines:
      for (const auto& r : o.results) {
        ordered_json rec;
        rec["schema_version"] = kSchemaVersion;
        rec["command"] = o.command;
        rec["inputs"] = o.inputs;
        rec["results"] = r;
        out << rec.dump() << '\n';
      }
      break;
  }
}

// Probability column: fixed decimals, or four significant digits once the
// fixed form would show fewer than three.
std::string probability_cell(const BigCount& w, const BigCount& total, int precision) {
  if (BigCount{1000} * w < total && !w.is_zero()) return format_ratio_scientific(w, total, 4);
  return format_probability(w, total, precision);
}

std::string realization_text(const AnyRealization& r) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Realization>) {
          return format_multiset(v.parts());
        } else {
          return format_ordered(v.slots());
        }
      },
      r);
}

std::vector<unsigned> realization_values(const AnyRealization& r) {
  return std::visit(
      [](const auto& v) -> std::vector<unsigned> {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Realization>) {
          return {v.parts().begin(), v.parts().end()};
        } else {
          return {v.slots().begin(), v.slots().end()};
        }
      },
      r);
}

std::string joined_maxima(const MaxProbResult& res) {
  std::string out;
  for (std::size_t i = 0; i < res.maxima.size(); ++i) {
    if (i) out += ", ";
    out += realization_text(res.maxima[i].realization);
  }
  return out;
}

const std::vector<std::string> kMaxProbColumns = {"N", "s", "statistic", "g", "realizations", "maxima",
                                                  "W", "P", "total_weight", "W_exact", "P_sci"};

// Columns: N s statistic g realizations maxima W P total W_exact P_sci
void add_maxprob_row(Output& o, const MaxProbResult& res, int precision) {
  const std::string p = format_fixed(res.max_weight, res.total_weight, precision);
  const std::string p_sci = format_ratio_scientific(res.max_weight, res.total_weight, 4);
  std::vector<std::string> row = {std::to_string(res.n_total),
                                  std::to_string(res.s_slots),
                                  std::string(to_string(res.statistic)),
                                  res.g ? std::to_string(*res.g) : "",
                                  joined_maxima(res),
                                  std::to_string(res.maxima.size()),
                                  format_weight_short(res.max_weight),
                                  probability_cell(res.max_weight, res.total_weight, precision),
                                  res.total_weight.to_string(),
                                  res.max_weight.to_string(),
                                  p_sci};
  ordered_json j;
  j["N"] = res.n_total;
  j["s"] = res.s_slots;
  j["statistic"] = to_string(res.statistic);
  if (res.g) j["g"] = *res.g;
  ordered_json maxima = ordered_json::array();
  for (const auto& m : res.maxima) maxima.push_back(realization_values(m.realization));
  j["maxima"] = maxima;
  j["maxima_count"] = res.maxima.size();
  j["weight"] = res.max_weight.to_string();
  j["weight_sci"] = format_scientific(res.max_weight, 3);
  j["probability"] = p;
  j["probability_sci"] = p_sci;
  j["total_weight"] = res.total_weight.to_string();
  j["entropy_exact"] = res.maxima.front().entropy_exact.nats;
  o.add(std::move(row), std::move(j));
}

// Text form of a maxprob row: realizations, count, W, P, and the exact
// weight when W was abbreviated.
void maxprob_text_rows(Output& o) {
  for (auto& row : o.rows) {
    std::vector<std::string> text = {row[4], row[5], row[6], row[7]};
    if (row[6] != row[9]) text.push_back(row[9]);
    row = std::move(text);
  }
}

// --- commands ---------------------------------------------------------------

Output cmd_stirling(std::optional<unsigned> n, std::optional<unsigned> k, std::optional<unsigned> row) {
  Output o;
  o.command = "stirling";
  o.columns = {"n", "k", "value"};
  if (row) {
    check_input_size(*row, "stirling");
    o.inputs["row"] = *row;
    const StirlingTable table(*row);
    std::vector<std::string> text;
    for (unsigned kk = 1; kk <= *row; ++kk) {
      const std::string v = table(*row, kk).to_string();
      o.results.push_back({{"n", *row}, {"k", kk}, {"value", v}});
      o.rows.push_back({std::to_string(*row), std::to_string(kk), v});
      text.push_back(v);
    }
    return o;
  }
  if (!n || !k) throw CLI::ValidationError("stirling", "expected N K or --row N");
  if (*k < 1) throw CLI::ValidationError("stirling", "k must be at least 1");
  check_input_size(*n, "stirling");
  o.inputs = {{"n", *n}, {"k", *k}};
  const std::string v = stirling2(*n, *k).to_string();
  o.add({std::to_string(*n), std::to_string(*k), v}, {{"n", *n}, {"k", *k}, {"value", v}});
  return o;
}

Output cmd_bell(unsigned n, std::optional<unsigned> s) {
  if (n < 1) throw CLI::ValidationError("bell", "N must be at least 1");
  const unsigned slots = s.value_or(n);
  if (slots < 1) throw CLI::ValidationError("bell", "s must be at least 1");
  check_input_size(n, "bell");
  Output o;
  o.command = "bell";
  o.columns = {"n", "s", "value"};
  o.inputs = {{"n", n}, {"s", slots}};
  const std::string v = bell_incomplete(n, slots).to_string();
  o.add({std::to_string(n), std::to_string(slots), v}, {{"n", n}, {"s", slots}, {"value", v}});
  return o;
}

struct ParsedInput {
  Statistic statistic;
  std::variant<Realization, OrderedOccupancy> value;
};

ParsedInput parse_for(Statistic statistic, const std::string& text, std::optional<unsigned> s_override) {
  ParsedOccupancy parsed = parse_occupancy(text);
  if (statistic == Statistic::multinomial) {
    if (parsed.bracket != Bracket::ordered) {
      throw CLI::ValidationError("realization", "the multinomial statistic takes an ordered [..] occupancy");
    }
    return {statistic, OrderedOccupancy(std::move(parsed.values))};
  }
  if (parsed.bracket != Bracket::multiset) {
    throw CLI::ValidationError("realization", "the D:I statistics take an unordered {..} occupancy");
  }
  const unsigned s = s_override.value_or(static_cast<unsigned>(parsed.values.size()));
  return {statistic, Realization(parsed.values, s)};
}

void check_parsed_size(const ParsedInput& in) {
  std::visit([](const auto& v) { check_input_size(v.n_total(), "realization"); }, in.value);
}

Output cmd_weight(Statistic statistic, unsigned g, const std::string& text, std::optional<unsigned> s) {
  const ParsedInput in = parse_for(statistic, text, s);
  check_parsed_size(in);
  BigCount w;
  if (statistic == Statistic::multinomial) {
    w = weight_multinomial(std::get<OrderedOccupancy>(in.value));
  } else if (statistic == Statistic::di) {
    w = weight_di(std::get<Realization>(in.value));
  } else {
    w = weight_di_degenerate(std::get<Realization>(in.value), DegenerateSpec(g));
  }
  Output o;
  o.command = "weight";
  o.inputs = {{"statistic", to_string(statistic)}, {"realization", text}};
  if (statistic == Statistic::di_degenerate) o.inputs["g"] = g;
  o.columns = {"realization", "W", "W_sci"};
  const std::string rtext = realization_text(in.value);
  o.add({rtext, w.to_string(), format_scientific(w, 3)},
        {{"realization", rtext}, {"weight", w.to_string()}, {"weight_sci", format_scientific(w, 3)}});
  return o;
}

Output cmd_entropy(Statistic statistic, unsigned g, bool asymptotic, const std::string& text,
                   std::optional<unsigned> s, int precision) {
  const ParsedInput in = parse_for(statistic, text, s);
  check_parsed_size(in);
  double h = 0.0;
  if (statistic == Statistic::multinomial) {
    const auto& occ = std::get<OrderedOccupancy>(in.value);
    h = asymptotic ? entropy_shannon(ProbabilityVector::from_occupancy(occ)).nats
                   : entropy_exact_multinomial(occ).nats;
  } else {
    const auto& r = std::get<Realization>(in.value);
    const ProbabilityVector p = ProbabilityVector::from_realization(r);
    if (statistic == Statistic::di) {
      h = asymptotic ? entropy_shannon(p).nats : entropy_exact_di(r).nats;
    } else {
      const DegenerateSpec spec(g);
      if (asymptotic) {
        std::vector<unsigned> gammas = gamma_sharp(r, spec);
        gammas.resize(p.size(), 1);  // empty states carry no probability
        h = entropy_asymptotic_degenerate(p, gammas).nats;
      } else {
        h = entropy_exact_di_degenerate(r, spec).nats;
      }
    }
  }
  Output o;
  o.command = "entropy";
  o.inputs = {{"statistic", to_string(statistic)}, {"realization", text}, {"asymptotic", asymptotic}};
  if (statistic == Statistic::di_degenerate) o.inputs["g"] = g;
  o.columns = {"realization", "kind", "H"};
  const std::string rtext = realization_text(in.value);
  const std::string kind = asymptotic ? "asymptotic" : "exact";
  o.add({rtext, kind, format_real(h, precision)}, {{"realization", rtext}, {"kind", kind}, {"entropy", h}});
  return o;
}

Output cmd_maxprob(Statistic statistic, unsigned n, unsigned s, unsigned g, const GlobalOptions& opts) {
  if (n < 1 || s < 1) throw CLI::ValidationError("maxprob", "N and s must be at least 1");
  const MaxProbResult res = maxprob(statistic, n, s, g, opts.search());
  Output o;
  o.command = "maxprob";
  o.inputs = {{"N", n}, {"s", s}, {"statistic", to_string(statistic)}};
  if (statistic == Statistic::di_degenerate) o.inputs["g"] = g;
  o.columns = kMaxProbColumns;
  add_maxprob_row(o, res, opts.precision);
  return o;
}

const std::vector<std::pair<unsigned, unsigned>>& reference_rows() {
  static const std::vector<std::pair<unsigned, unsigned>> rows = [] {
    std::vector<std::pair<unsigned, unsigned>> r;
    for (unsigned n : {1U, 2U, 3U, 4U, 5U, 10U, 20U, 30U, 40U, 50U}) r.emplace_back(n, n);
    for (unsigned n : {1U, 2U, 3U, 4U, 5U, 10U, 20U, 30U, 40U, 50U}) r.emplace_back(n, 3U);
    return r;
  }();
  return rows;
}

Output cmd_table(int which, const GlobalOptions& opts) {
  Output o;
  o.command = "table";
  o.inputs = {{"paper_table", which}};
  if (which == 1) {
    constexpr unsigned kRows = 7;
    const StirlingTable table(kRows);
    o.columns = {"n", "k", "value"};
    o.text_header = false;
    std::vector<std::vector<std::string>> text_rows;
    for (unsigned n = 1; n <= kRows; ++n) {
      std::vector<std::string> line = {"N=" + std::to_string(n) + ":"};
      for (unsigned k = 1; k <= n; ++k) {
        const std::string v = table(n, k).to_string();
        o.add({std::to_string(n), std::to_string(k), v}, {{"n", n}, {"k", k}, {"value", v}});
        line.push_back(v);
      }
      text_rows.push_back(std::move(line));
    }
    if (opts.format == Format::text) {
      o.rows = std::move(text_rows);
      o.text_separator = " ";
    }
    return o;
  }
  const Statistic statistic = which == 2 ? Statistic::multinomial : Statistic::di;
  o.columns = kMaxProbColumns;
  for (auto [n, s] : reference_rows()) add_maxprob_row(o, maxprob(statistic, n, s, 1, opts.search()), opts.precision);
  if (opts.format == Format::text) {
    for (auto& row : o.rows) {
      row = {row[0], row[1], row[4], row[5], row[6], row[7], row[8]};
    }
    o.columns = {"N", "s", "MaxProb realization", "Maxima", "W (each)", "P (each)", "sum W"};
    o.text_header = true;
  }
  return o;
}

struct OracleLine {
  std::string check;
  unsigned n;
  unsigned s;
  std::optional<unsigned> g;
  bool pass;
  std::string detail;
};

OracleLine check_set_partitions(unsigned n, unsigned s) {
  const auto counts = oracle::count_set_partitions_by_shape(n, s);
  BigCount total{0};
  bool ok = true;
  std::size_t shapes = 0;
  for (const auto& r : partitions(n, std::min(s, n))) {
    ++shapes;
    auto it = counts.find(r);
    if (it == counts.end() || it->second != weight_di(r)) ok = false;
  }
  for (const auto& [shape, c] : counts) total += c;
  ok = ok && shapes == counts.size() && total == bell_incomplete(n, s);
  return {"set-partitions", n, s, std::nullopt, ok, "total " + total.to_string()};
}

OracleLine check_functions(unsigned n, unsigned s) {
  const auto counts = oracle::count_functions_by_occupancy(n, s);
  BigCount total{0};
  bool ok = true;
  std::size_t seen = 0;
  for (const auto& slots : CompositionRange(n, s)) {
    ++seen;
    const OrderedOccupancy occ(slots);
    auto it = counts.find(occ);
    if (it == counts.end() || it->second != weight_multinomial(occ)) ok = false;
  }
  for (const auto& [occ, c] : counts) total += c;
  ok = ok && seen == counts.size() && total == BigCount::pow(s, n);
  return {"functions", n, s, std::nullopt, ok, "total " + total.to_string()};
}

OracleLine check_two_level(unsigned n, unsigned s, unsigned g) {
  const auto counts = oracle::count_two_level_by_shape(n, s, g);
  const DegenerateSpec spec(g);
  bool ok = true;
  std::size_t shapes = 0;
  BigCount total{0};
  for (const auto& r : partitions(n, std::min(s, n))) {
    ++shapes;
    auto it = counts.find(r);
    if (it == counts.end() || it->second != weight_di_degenerate(r, spec)) ok = false;
  }
  for (const auto& [shape, c] : counts) total += c;
  ok = ok && shapes == counts.size();
  return {"two-level", n, s, g, ok, "total " + total.to_string()};
}

Output cmd_oracle_check(unsigned max_n, bool& all_pass) {
  if (max_n < 1) throw CLI::ValidationError("oracle-check", "--max-n must be at least 1");
  if (max_n > oracle::kMaxSetPartitionN) {
    throw OracleTooLarge("oracle-check: --max-n " + std::to_string(max_n) + " exceeds the oracle limit " +
                         std::to_string(oracle::kMaxSetPartitionN));
  }
  std::vector<OracleLine> lines;
  for (unsigned n = 1; n <= max_n; ++n) {
    for (unsigned s = 1; s <= n; ++s) lines.push_back(check_set_partitions(n, s));
  }
  for (unsigned n = 1; n <= max_n; ++n) {
    for (unsigned s = 1; s <= 4; ++s) {
      if (BigCount::pow(s, n) > BigCount{oracle::kMaxFunctionCount}) continue;
      lines.push_back(check_functions(n, s));
    }
  }
  for (unsigned n = 1; n <= std::min(max_n, oracle::kMaxTwoLevelN); ++n) {
    for (unsigned s = 1; s <= 3; ++s) {
      for (unsigned g = 1; g <= 3; ++g) lines.push_back(check_two_level(n, s, g));
    }
  }

  Output o;
  o.command = "oracle-check";
  o.inputs = {{"max_n", max_n}};
  o.columns = {"check", "N", "s", "g", "status", "detail"};
  std::size_t failed = 0;
  for (const auto& l : lines) {
    if (!l.pass) ++failed;
    const std::string status = l.pass ? "PASS" : "FAIL";
    ordered_json j = {{"check", l.check}, {"N", l.n}, {"s", l.s}};
    if (l.g) j["g"] = *l.g;
    j["status"] = status;
    j["detail"] = l.detail;
    o.add({l.check, std::to_string(l.n), std::to_string(l.s), l.g ? std::to_string(*l.g) : "-", status, l.detail},
          std::move(j));
  }
  o.text_footer.push_back(std::to_string(lines.size() - failed) + "/" + std::to_string(lines.size()) +
                          " checks passed");
  all_pass = failed == 0;
  return o;
}

Statistic statistic_from(const std::string& name) {
  if (auto s = parse_statistic(name)) return *s;
  throw CLI::ValidationError("--statistic", "expected mult, di or di-g, got '" + name + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact occupancy statistics: weights, entropies and most probable realizations", "occstat"};
  app.require_subcommand(1);

  GlobalOptions opts;
  std::string format_name = "text";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json-lines"}))
      ->capture_default_str();
  app.add_option("--precision", opts.precision, "Decimal places for probabilities and entropies")
      ->check(CLI::Range(0, 30))
      ->capture_default_str();
  app.add_option("--max-space", opts.max_space, "Largest number of realizations a search may visit")
      ->capture_default_str();
  app.add_option("--input-limit", opts.input_limit, "Largest N accepted")->capture_default_str();
  app.add_flag("--serial", opts.serial, "Use the single-threaded reference enumeration");
  app.fallthrough();

  std::function<Output()> action;
  bool oracle_pass = true;

  // stirling
  auto* stirling = app.add_subcommand("stirling", "Stirling number of the second kind {n k}");
  std::optional<unsigned> st_n, st_k, st_row;
  stirling->add_option("n", st_n, "n");
  stirling->add_option("k", st_k, "k (>= 1)");
  stirling->add_option("--row", st_row, "print the whole row {n 1} ... {n n}");
  stirling->callback([&] {
    action = [&] {
      Output o = cmd_stirling(st_n, st_k, st_row);
      if (st_row && opts.format == Format::text) {
        std::vector<std::string> line;
        for (const auto& r : o.rows) line.push_back(r[2]);
        o.rows = {line};
        o.text_separator = " ";
      } else if (opts.format == Format::text) {
        o.rows.back() = {o.rows.back()[2]};
      }
      return o;
    };
  });

  // bell
  auto* bell = app.add_subcommand("bell", "Incomplete Bell number B(N, s)");
  unsigned bell_n = 0;
  std::optional<unsigned> bell_s;
  bell->add_option("N", bell_n, "N")->required();
  bell->add_option("s", bell_s, "s (default N)");
  bell->callback([&] {
    action = [&] {
      Output o = cmd_bell(bell_n, bell_s);
      if (opts.format == Format::text) o.rows.back() = {o.rows.back()[2]};
      return o;
    };
  });

  // weight
  auto* weight = app.add_subcommand("weight", "Statistical weight of one realization");
  std::string w_stat = "di";
  std::string w_text;
  unsigned w_g = 1;
  std::optional<unsigned> w_s;
  weight->add_option("--statistic", w_stat, "mult, di or di-g")->capture_default_str();
  weight->add_option("--g", w_g, "degeneracy for di-g")->check(CLI::PositiveNumber)->capture_default_str();
  weight->add_option("--s", w_s, "number of states (default: entries given)")->check(CLI::PositiveNumber);
  weight->add_option("realization", w_text, "{..} for di/di-g, [..] for mult")->required();
  weight->callback([&] {
    action = [&] {
      Output o = cmd_weight(statistic_from(w_stat), w_g, w_text, w_s);
      if (opts.format == Format::text) o.rows.back() = {o.rows.back()[1]};
      return o;
    };
  });

  // entropy
  auto* entropy = app.add_subcommand("entropy", "Exact or asymptotic entropy of one realization");
  std::string e_stat = "di";
  std::string e_text;
  unsigned e_g = 1;
  bool e_asym = false;
  std::optional<unsigned> e_s;
  entropy->add_option("--statistic", e_stat, "mult, di or di-g")->capture_default_str();
  entropy->add_option("--g", e_g, "degeneracy for di-g")->check(CLI::PositiveNumber)->capture_default_str();
  entropy->add_option("--s", e_s, "number of states (default: entries given)")->check(CLI::PositiveNumber);
  entropy->add_flag("--asymptotic", e_asym, "large-N limit form instead of (1/N) ln W");
  entropy->add_option("realization", e_text, "{..} for di/di-g, [..] for mult")->required();
  entropy->callback([&] {
    action = [&] {
      Output o = cmd_entropy(statistic_from(e_stat), e_g, e_asym, e_text, e_s, opts.precision);
      if (opts.format == Format::text) o.rows.back() = {o.rows.back()[2]};
      return o;
    };
  });

  // maxprob
  auto* mp = app.add_subcommand("maxprob", "Most probable realization(s) for N entities in s states");
  unsigned mp_n = 0, mp_s = 0, mp_g = 1;
  std::string mp_stat = "di";
  mp->add_option("N", mp_n, "N")->required();
  mp->add_option("s", mp_s, "s")->required();
  mp->add_option("--statistic", mp_stat, "mult, di or di-g")->capture_default_str();
  mp->add_option("--g", mp_g, "degeneracy for di-g")->check(CLI::PositiveNumber)->capture_default_str();
  mp->callback([&] {
    action = [&] {
      Output o = cmd_maxprob(statistic_from(mp_stat), mp_n, mp_s, mp_g, opts);
      if (opts.format == Format::text) maxprob_text_rows(o);
      return o;
    };
  });

  // table
  auto* table = app.add_subcommand("table", "Reproduce a reference table");
  int table_id = 0;
  table->add_option("--paper-table", table_id, "1: Stirling triangle, 2: multinomial maxima, 3: D:I maxima")
      ->required()
      ->check(CLI::IsMember({1, 2, 3}));
  table->callback([&] { action = [&] { return cmd_table(table_id, opts); }; });

  // oracle-check
  auto* oc = app.add_subcommand("oracle-check", "Compare closed forms against brute-force enumeration");
  unsigned oc_max = 8;
  oc->add_option("--max-n", oc_max, "largest N to enumerate")->capture_default_str();
  oc->callback([&] { action = [&] { return cmd_oracle_check(oc_max, oracle_pass); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  opts.format = format_name == "csv" ? Format::csv : (format_name == "json-lines" ? Format::json_lines : Format::text);
  const unsigned saved_limit = input_limit();
  set_input_limit(opts.input_limit);
  int code = kOk;
  try {
    const Output o = action();
    emit(o, opts.format, out);
    if (!oracle_pass) code = kOracleMismatch;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    code = kUsage;
  } catch (const LimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    code = kLimit;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    code = kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    code = kFailure;
  }
  set_input_limit(saved_limit);
  return code;
}

}  // namespace occupancy::cli
