#include "command.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "emergelab/analysis.hpp"
#include "emergelab/ant.hpp"
#include "emergelab/candidates.hpp"
#include "emergelab/eca.hpp"
#include "emergelab/error.hpp"
#include "emergelab/eturing.hpp"
#include "emergelab/life.hpp"
#include "emergelab/pbm.hpp"

namespace emergelab::cli {

namespace {

constexpr std::uint64_t kDefaultTmBudget = 10'000'000;
constexpr std::uint64_t kDefaultAntSteps = 20'000;
constexpr std::uint64_t kDefaultFateBudget = 1'000;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << bytes;
  if (!out) throw Error("write to '" + path + "' failed");
}

std::vector<std::uint64_t> read_numbers(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<std::uint64_t> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
      v = std::stoull(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || tok.front() == '-') throw Error("'" + path + "': bad integer '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

std::string to_text(const FieldValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else if constexpr (std::is_same_v<T, std::string>) {
          return x;
        } else if constexpr (std::is_same_v<T, double>) {
          std::ostringstream ss;
          ss << std::setprecision(10) << x;
          return ss.str();
        } else {
          return std::to_string(x);
        }
      },
      v);
}

// Recovers the type of a value that arrives already formatted.
FieldValue typed(const std::string& v) {
  if (v == "true") return true;
  if (v == "false") return false;
  if (!v.empty() && v.find_first_not_of("-0123456789") == std::string::npos && v.find('-', 1) == std::string::npos &&
      v != "-") {
    try {
      return static_cast<std::int64_t>(std::stoll(v));
    } catch (const std::out_of_range&) {
      return v;
    }
  }
  return v;
}

life::FateReport fate_of(const CellSet& cells, std::uint64_t budget) { return life::detect_fate(cells, budget); }

CellSet load_pattern(const LifeOptions& o) {
  if (!o.rle.empty()) return life::parse_rle(read_file(o.rle));
  return life::parse_cells(read_file(o.cells));
}

int run_eca(const Command& cmd, std::ostream& out) {
  const auto& o = cmd.eca;
  const eca::RuleTable rule = eca::parse_rule(o.rule);
  const std::size_t height = o.steps + 1;
  std::vector<std::string> lines;
  std::unique_ptr<BitGrid> grid;

  if (o.cyclic_width > 0) {
    const std::size_t width = o.cyclic_width;
    if (height > o.row_limit) throw HistoryLimitExceeded(height, o.row_limit);
    std::vector<std::uint8_t> row(width, 0);
    for (const auto p : o.seed) {
      const auto w = static_cast<std::int64_t>(width);
      row[static_cast<std::size_t>(((p % w) + w) % w)] = 1;
    }
    grid = std::make_unique<BitGrid>(width, height);
    for (std::size_t t = 0; t < height; ++t) {
      std::string line(width, '.');
      for (std::size_t x = 0; x < width; ++x) {
        if (row[x]) {
          grid->set(x, t);
          line[x] = '#';
        }
      }
      lines.push_back(std::move(line));
      if (t + 1 < height) row = eca::step_cyclic(rule, row);
    }
  } else {
    const eca::BitRow seed = eca::BitRow::from_positions(o.seed);
    const eca::EcaHistory history = eca::evolve(rule, seed, o.steps, o.row_limit);
    const auto steps = static_cast<std::int64_t>(o.steps);
    const std::int64_t from = (seed.empty() ? 0 : seed.first()) - steps;
    const std::size_t width = (seed.empty() ? 1 : seed.length()) + 2 * o.steps;
    grid = std::make_unique<BitGrid>(width, height);
    for (std::size_t t = 0; t < height; ++t) {
      for (const auto p : history.rows[t].positions()) grid->set(static_cast<std::size_t>(p - from), t);
      lines.push_back(history.rows[t].render(from, width));
    }
  }

  if (!o.out.empty()) write_file(o.out, render_pbm(*grid));
  if (o.text == "-" || (o.text.empty() && o.out.empty())) {
    for (const auto& l : lines) out << l << '\n';
  } else if (!o.text.empty()) {
    std::string text;
    for (const auto& l : lines) text += l + '\n';
    write_file(o.text, text);
  }
  return 0;
}

BitGrid life_grid(const CellSet& cells) {
  if (cells.empty()) throw EmptyImage();
  const BBox b = cells.bbox();
  BitGrid grid(static_cast<std::size_t>(b.width()), static_cast<std::size_t>(b.height()));
  for (const Cell& c : cells) grid.set(static_cast<std::size_t>(c.x - b.min_x), static_cast<std::size_t>(c.y - b.min_y));
  return grid;
}

int run_life(const Command& cmd, std::ostream& out) {
  const auto& o = cmd.life;
  const CellSet start = load_pattern(o);
  if (cmd.action == "fate") {
    const std::uint64_t budget = o.budget.value_or(kDefaultFateBudget);
    const auto f = fate_of(start, budget);
    emit_report({{"verdict", std::string(life::to_string(f.verdict))},
                 {"generation", static_cast<std::uint64_t>(f.generation)},
                 {"period", static_cast<std::uint64_t>(f.period)},
                 {"dx", f.dx},
                 {"dy", f.dy},
                 {"budget", budget}},
                cmd.json, out);
    return 0;
  }

  const CellSet end = life::run(start, o.steps);
  if (!o.out.empty()) write_file(o.out, render_pbm(life_grid(end)));
  if (!o.rle_out.empty()) write_file(o.rle_out, life::write_rle(end));

  std::vector<std::string> print = o.print;
  if (print.empty() && o.out.empty() && o.rle_out.empty()) print = {"bbox", "population"};
  Report report;
  bool want_rle = false;
  for (const auto& what : print) {
    if (what == "bbox") {
      const BBox b = end.bbox();
      report.push_back({"min_x", b.min_x});
      report.push_back({"min_y", b.min_y});
      report.push_back({"max_x", b.max_x});
      report.push_back({"max_y", b.max_y});
    } else if (what == "population") {
      report.push_back({"population", static_cast<std::uint64_t>(life::population(end))});
    } else if (what == "rle") {
      want_rle = true;
    }
  }
  if (!report.empty()) emit_report(report, cmd.json, out);
  if (want_rle) out << life::write_rle(end);
  return 0;
}

void write_ant_image(const ant::AntState& s, const std::string& path) {
  std::int64_t x0 = s.pos.x, x1 = s.pos.x, y0 = s.pos.y, y1 = s.pos.y;
  for (const Cell& c : s.black) {
    x0 = std::min(x0, c.x);
    x1 = std::max(x1, c.x);
    y0 = std::min(y0, c.y);
    y1 = std::max(y1, c.y);
  }
  BitGrid grid(static_cast<std::size_t>(x1 - x0 + 1), static_cast<std::size_t>(y1 - y0 + 1));
  // Image rows run downward; the ant's y axis points up.
  for (const Cell& c : s.black) grid.set(static_cast<std::size_t>(c.x - x0), static_cast<std::size_t>(y1 - c.y));
  write_file(path, render_pbm(grid));

  std::ostringstream side;
  side << "# ant marker for " << path << "\n"
       << "# pixel (column, row) = (x - origin_x, origin_y - y)\n"
       << "origin_x=" << x0 << "\norigin_y=" << y1 << "\nx=" << s.pos.x << "\ny=" << s.pos.y
       << "\nheading=" << ant::to_char(s.heading) << "\nsteps=" << s.steps << "\n";
  write_file(path + ".txt", side.str());
}

int run_ant(const Command& cmd, std::ostream& out) {
  const auto& o = cmd.ant;
  const auto heading = ant::parse_heading(o.heading);
  const ant::AntState start = ant::standard_start(*heading);
  const std::uint64_t steps = o.steps.value_or(kDefaultAntSteps);

  Report report;
  if (o.detect_highway) {
    for (auto& [k, v] : ant::report_fields(ant::detect_highway(start, steps, o.window, o.confirmations))) {
      report.push_back({k, typed(v)});
    }
  }
  if (!o.detect_highway || !o.out.empty()) {
    const ant::AntState end = ant::run(start, steps);
    if (!o.out.empty()) write_ant_image(end, o.out);
    if (!o.detect_highway) {
      report = {{"steps", end.steps},
                {"x", end.pos.x},
                {"y", end.pos.y},
                {"heading", std::string(1, ant::to_char(end.heading))},
                {"black_cells", static_cast<std::uint64_t>(end.black.size())}};
    }
  }
  emit_report(report, cmd.json, out);
  return 0;
}

int run_tm(const Command& cmd, std::ostream& out) {
  const auto& o = cmd.tm;
  const std::uint64_t budget = o.budget.value_or(kDefaultTmBudget);
  if (cmd.action == "run") {
    const auto m = eturing::load_machine(o.machine);
    out << eturing::format_trace(eturing::run(m, o.input, budget));
    return 0;
  }
  const auto approx = eturing::load_machine(o.approx);
  const auto finisher = eturing::load_machine(o.finisher);
  if (cmd.action == "compose") {
    const auto r = eturing::compose(approx, finisher, o.input, budget);
    emit_report({{"value", r.value},
                 {"intermediate", r.intermediate},
                 {"approx_steps", r.approx_steps},
                 {"finisher_steps", r.finisher_steps},
                 {"total_steps", r.total_steps()}},
                cmd.json, out);
    return 0;
  }

  std::vector<std::uint64_t> values, timing;
  std::string source;
  if (!o.reference_machine.empty()) {
    const auto ref = eturing::load_machine(o.reference_machine);
    std::tie(values, timing) = eturing::measure_reference(ref, o.to, budget);
    source = "measured:" + ref.name();
  } else {
    values = read_numbers(o.values_file);
    timing = read_numbers(o.timing_file);
    source = "file:" + o.timing_file;
  }
  const eturing::BigOWitness witness{{o.c_num, o.c_den}, o.n0};
  const auto rep = eturing::check_p_approximation(approx, finisher, values, timing, witness, {o.from, o.to},
                                                  budget, source);
  Report report{{"verdict", rep.verdict},
                {"vacuous", rep.vacuous},
                {"audited", static_cast<std::uint64_t>(rep.records.size())},
                {"c", std::to_string(o.c_num) + "/" + std::to_string(o.c_den)},
                {"n0", o.n0},
                {"approx_steps", rep.approx_steps},
                {"timing_source", rep.timing_source}};
  if (cmd.json) {
    nlohmann::ordered_json j;
    for (const auto& [k, v] : report) std::visit([&](const auto& x) { j[k] = x; }, v);
    j["records"] = nlohmann::ordered_json::array();
    for (const auto& r : rep.records) {
      j["records"].push_back({{"index", r.index},
                              {"r", r.intermediate},
                              {"value", r.value},
                              {"finisher_steps", r.finisher_steps},
                              {"reference_time", r.reference_time},
                              {"bound", r.bound},
                              {"pass", r.pass}});
    }
    out << j.dump(2) << '\n';
    return 0;
  }
  for (const auto& r : rep.records) {
    const std::string p = "record." + std::to_string(r.index) + ".";
    report.push_back({p + "r", r.intermediate});
    report.push_back({p + "value", r.value});
    report.push_back({p + "finisher_steps", r.finisher_steps});
    report.push_back({p + "reference_time", r.reference_time});
    report.push_back({p + "bound", r.bound});
    report.push_back({p + "pass", r.pass});
  }
  emit_report(report, false, out);
  return 0;
}

int run_candidate(const Command& cmd, std::ostream& out) {
  const auto& o = cmd.candidate;
  const candidates::WordNumbering numbering{!o.skip_epsilon};
  Report report;
  if (cmd.action == "sqrt") {
    std::string digits;
    for (const auto d : candidates::sqrt_digits(o.m, o.count)) digits += static_cast<char>('0' + d);
    report = {{"m", static_cast<std::int64_t>(o.m)}, {"digits", digits}};
  } else if (cmd.action == "chain") {
    auto stream = o.sqrt_of ? candidates::DigitStream::sqrt(*o.sqrt_of)
                            : candidates::DigitStream::from_file(o.digits_file);
    const auto values = candidates::digit_chain(stream, o.n);
    for (std::size_t i = 0; i < values.size(); ++i) report.push_back({"f" + std::to_string(i + 1), values[i].get_str()});
  } else if (cmd.action == "words") {
    report = {{"index", o.index}, {"word", candidates::enumerate_words(o.index, numbering)}};
  } else if (cmd.action == "lang") {
    const auto dfa = candidates::load_dfa(o.dfa);
    report = {{"n", o.n}, {"count", candidates::language_count(dfa, o.n, numbering)}};
  } else {
    const auto count = o.serial ? candidates::life_survival_count_serial(o.n) : candidates::life_survival_count(o.n);
    report = {{"n", o.n}, {"count", count}};
  }
  emit_report(report, cmd.json, out);
  return 0;
}

int run_analyze(const Command& cmd, std::ostream& out) {
  const auto& o = cmd.analyze;
  if (o.bits == 0) throw EmptyInput("analyze");
  const auto rule = eca::parse_rule(o.rule);
  const auto bits = eca::center_column(rule, o.bits - 1);
  const auto frac = analysis::ones_fraction(bits);
  emit_report({{"rule", static_cast<std::int64_t>(o.rule)},
               {"bits", static_cast<std::uint64_t>(bits.size())},
               {"ones", frac.num},
               {"ones_fraction", frac.value()},
               {"block_size", o.k},
               {"block_entropy", analysis::block_entropy(bits, o.k)},
               {"max_period", o.max_period},
               {"no_short_period", analysis::no_short_period(bits, o.max_period)}},
              cmd.json, out);
  return 0;
}

std::optional<std::uint64_t> env_budget() {
  const char* v = std::getenv("EMERGELAB_BUDGET");
  if (v == nullptr || *v == '\0') return std::nullopt;
  const std::string s(v);
  std::size_t used = 0;
  std::uint64_t n = 0;
  try {
    n = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.front() == '-' || n == 0) {
    throw CLI::ValidationError("EMERGELAB_BUDGET", "must be a positive integer, got '" + s + "'");
  }
  return n;
}

}  // namespace

void emit_report(const Report& report, bool json, std::ostream& out) {
  if (json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [k, v] : report) std::visit([&](const auto& x) { j[k] = x; }, v);
    out << j.dump(2) << '\n';
    return;
  }
  for (const auto& [k, v] : report) out << k << '=' << to_text(v) << '\n';
}

ParseResult parse_args(const std::vector<std::string>& args) {
  Command cmd;
  CLI::App app{"Automata and enumerative-machine workbench", "emergelab"};
  app.require_subcommand(1);

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", cmd.json, "Emit reports as a JSON object"); };

  auto* eca = app.add_subcommand("eca", "Elementary cellular automaton from a finite seed");
  eca->add_option("--rule", cmd.eca.rule, "Wolfram rule number")->required()->check(CLI::Range(0, 255));
  eca->add_option("--steps", cmd.eca.steps, "Generations to compute")->required();
  eca->add_option("--seed", cmd.eca.seed, "Black cell coordinates")->delimiter(',');
  eca->add_option("--out", cmd.eca.out, "PBM output path");
  eca->add_option("--text", cmd.eca.text, "Text output path ('-' for stdout)");
  eca->add_option("--cyclic-width", cmd.eca.cyclic_width, "Run on a ring of this many cells");
  eca->add_option("--row-limit", cmd.eca.row_limit, "Largest history kept")->check(CLI::PositiveNumber);

  auto* life = app.add_subcommand("life", "Conway's Game of Life");
  life->require_subcommand(1);
  auto add_pattern = [&](CLI::App* sub) {
    auto* rle = sub->add_option("--rle", cmd.life.rle, "RLE pattern file");
    auto* cells = sub->add_option("--cells", cmd.life.cells, "Plaintext .cells pattern file");
    rle->excludes(cells);
    cells->excludes(rle);
  };
  auto* life_run = life->add_subcommand("run", "Run a pattern");
  add_pattern(life_run);
  life_run->add_option("--steps", cmd.life.steps, "Generations");
  life_run->add_option("--print", cmd.life.print, "bbox, population, rle")
      ->delimiter(',')
      ->check(CLI::IsMember({"bbox", "population", "rle"}));
  life_run->add_option("--out", cmd.life.out, "PBM snapshot of the final generation");
  life_run->add_option("--rle-out", cmd.life.rle_out, "RLE of the final generation");
  add_json(life_run);
  auto* life_fate = life->add_subcommand("fate", "Bounded fate classification");
  add_pattern(life_fate);
  life_fate->add_option("--budget", cmd.life.budget, "Generations to search")->check(CLI::PositiveNumber);
  add_json(life_fate);

  auto* antc = app.add_subcommand("ant", "Langton's ant");
  antc->add_option("--steps", cmd.ant.steps, "Steps to simulate");
  antc->add_option("--heading", cmd.ant.heading, "Initial heading")->check(CLI::IsMember({"N", "E", "S", "W"}));
  antc->add_flag("--detect-highway", cmd.ant.detect_highway, "Search for the translation-periodic regime");
  antc->add_option("--window", cmd.ant.window, "Fingerprint window radius")->check(CLI::PositiveNumber);
  antc->add_option("--confirmations", cmd.ant.confirmations, "Extra periods to verify")->check(CLI::PositiveNumber);
  antc->add_option("--out", cmd.ant.out, "PBM of the final black cells; marker in <out>.txt");
  add_json(antc);

  auto* tm = app.add_subcommand("tm", "Enumerative Turing machines");
  tm->require_subcommand(1);
  auto* tm_run = tm->add_subcommand("run", "Run a machine and print its output trace");
  tm_run->add_option("--machine", cmd.tm.machine, "Machine file")->required();
  tm_run->add_option("--input", cmd.tm.input, "Input n")->check(CLI::PositiveNumber);
  tm_run->add_option("--budget", cmd.tm.budget, "Step budget")->check(CLI::PositiveNumber);
  auto* tm_compose = tm->add_subcommand("compose", "f(n) via an approximating machine and a finisher");
  tm_compose->add_option("--approx", cmd.tm.approx, "Approximating machine")->required();
  tm_compose->add_option("--finisher", cmd.tm.finisher, "Finisher machine")->required();
  tm_compose->add_option("--input", cmd.tm.input, "Input n")->check(CLI::PositiveNumber);
  tm_compose->add_option("--budget", cmd.tm.budget, "Step budget per phase")->check(CLI::PositiveNumber);
  add_json(tm_compose);
  auto* tm_audit = tm->add_subcommand("audit", "Empirical P-approximation audit");
  tm_audit->add_option("--approx", cmd.tm.approx, "Approximating machine")->required();
  tm_audit->add_option("--finisher", cmd.tm.finisher, "Finisher machine")->required();
  auto* ref = tm_audit->add_option("--reference-machine", cmd.tm.reference_machine,
                                   "E-Turing machine whose runs supply f(i) and T(i)");
  auto* vals = tm_audit->add_option("--values", cmd.tm.values_file, "File of f(1), f(2), ...");
  auto* tims = tm_audit->add_option("--timing", cmd.tm.timing_file, "File of T(1), T(2), ...");
  ref->excludes(vals)->excludes(tims);
  vals->needs(tims);
  tims->needs(vals);
  tm_audit->add_option("--from", cmd.tm.from, "First index")->check(CLI::PositiveNumber);
  tm_audit->add_option("--to", cmd.tm.to, "Last index")->required();
  tm_audit->add_option("--c", cmd.tm.c_num, "Numerator of c")->check(CLI::PositiveNumber);
  tm_audit->add_option("--c-den", cmd.tm.c_den, "Denominator of c")->check(CLI::PositiveNumber);
  tm_audit->add_option("--n0", cmd.tm.n0, "n0")->check(CLI::PositiveNumber);
  tm_audit->add_option("--budget", cmd.tm.budget, "Step budget per run")->check(CLI::PositiveNumber);
  add_json(tm_audit);

  auto* cand = app.add_subcommand("candidate", "Candidate irreducible functions");
  cand->require_subcommand(1);
  auto* c_sqrt = cand->add_subcommand("sqrt", "Decimal digits of sqrt(m)");
  c_sqrt->add_option("--m", cmd.candidate.m, "Radicand")->required();
  c_sqrt->add_option("--count", cmd.candidate.count, "Number of digits");
  add_json(c_sqrt);
  auto* c_chain = cand->add_subcommand("chain", "Digit chain f(1..n)");
  auto* c_src_sqrt = c_chain->add_option("--sqrt", cmd.candidate.sqrt_of, "Use the digits of sqrt(m)");
  auto* c_src_file = c_chain->add_option("--digits", cmd.candidate.digits_file, "Digit file");
  c_src_sqrt->excludes(c_src_file);
  c_chain->add_option("--n", cmd.candidate.n, "Terms")->required()->check(CLI::PositiveNumber);
  add_json(c_chain);
  auto* c_words = cand->add_subcommand("words", "i-th word of {0,1}* in length-lex order");
  c_words->add_option("--index", cmd.candidate.index, "Index i")->required()->check(CLI::PositiveNumber);
  c_words->add_flag("--skip-epsilon", cmd.candidate.skip_epsilon, "Number words from \"0\"");
  add_json(c_words);
  auto* c_lang = cand->add_subcommand("lang", "Accepted words among w_1..w_{n-1}");
  c_lang->add_option("--dfa", cmd.candidate.dfa, "DFA file")->required();
  c_lang->add_option("--n", cmd.candidate.n, "n")->required()->check(CLI::PositiveNumber);
  c_lang->add_flag("--skip-epsilon", cmd.candidate.skip_epsilon, "Number words from \"0\"");
  add_json(c_lang);
  auto* c_life = cand->add_subcommand("life", "Configurations 1..n alive after n generations");
  c_life->add_option("--n", cmd.candidate.n, "n")->required();
  c_life->add_flag("--serial", cmd.candidate.serial, "Do not fan out across threads");
  add_json(c_life);

  auto* an = app.add_subcommand("analyze", "Randomness statistics of an ECA centre column");
  an->add_option("--rule", cmd.analyze.rule, "Wolfram rule number")->check(CLI::Range(0, 255));
  an->add_option("--bits", cmd.analyze.bits, "Column length")->check(CLI::PositiveNumber);
  an->add_option("--k", cmd.analyze.k, "Block size for entropy")->check(CLI::Range(1, 32));
  an->add_option("--max-period", cmd.analyze.max_period, "Largest period to exclude");
  add_json(an);

  std::vector<const char*> argv{"emergelab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream sout, serr;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (life_run->parsed() || life_fate->parsed()) {
      if (cmd.life.rle.empty() && cmd.life.cells.empty()) {
        throw CLI::RequiredError("one of --rle or --cells");
      }
    }
    if (tm_audit->parsed() && cmd.tm.reference_machine.empty() && cmd.tm.values_file.empty()) {
      throw CLI::RequiredError("--reference-machine or --values/--timing");
    }
    if (c_chain->parsed() && !cmd.candidate.sqrt_of && cmd.candidate.digits_file.empty()) {
      throw CLI::RequiredError("--sqrt or --digits");
    }
    const auto budget = env_budget();
    if (budget) {
      if (!cmd.tm.budget) cmd.tm.budget = budget;
      if (!cmd.ant.steps) cmd.ant.steps = budget;
      if (!cmd.life.budget) cmd.life.budget = budget;
    }
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, sout, serr);
    return {std::nullopt, 0, sout.str() + serr.str()};
  } catch (const CLI::ParseError& e) {
    app.exit(e, sout, serr);
    return {std::nullopt, 2, sout.str() + serr.str()};
  }

  for (auto* sub : app.get_subcommands()) {
    cmd.subcommand = sub->get_name();
    for (auto* nested : sub->get_subcommands()) cmd.action = nested->get_name();
  }
  return {std::move(cmd), 0, {}};
}

int run_command(const Command& cmd, std::ostream& out, std::ostream& err) {
  try {
    if (cmd.subcommand == "eca") return run_eca(cmd, out);
    if (cmd.subcommand == "life") return run_life(cmd, out);
    if (cmd.subcommand == "ant") return run_ant(cmd, out);
    if (cmd.subcommand == "tm") return run_tm(cmd, out);
    if (cmd.subcommand == "candidate") return run_candidate(cmd, out);
    if (cmd.subcommand == "analyze") return run_analyze(cmd, out);
    err << "emergelab: unknown subcommand '" << cmd.subcommand << "'\n";
    return 2;
  } catch (const std::exception& e) {
    err << "emergelab " << cmd.subcommand << (cmd.action.empty() ? "" : " " + cmd.action) << ": " << e.what()
        << '\n';
    return 1;
  }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const ParseResult parsed = parse_args(args);
  if (!parsed.command) {
    (parsed.exit_code == 0 ? out : err) << parsed.message;
    return parsed.exit_code;
  }
  return run_command(*parsed.command, out, err);
}

}  // namespace emergelab::cli
