#pragma once

// Command-line front end. Exit codes: 0 success, 1 a requested check failed,
// 2 usage error (bad flags, bad input file, out-of-range arguments).

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <cayley2/cayley2.hpp>

namespace cayley2::cli {

inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("range must look like A..B, got '" + text + "'");
  try {
    std::size_t used_a = 0, used_b = 0;
    const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    const int lo = std::stoi(a, &used_a), hi = std::stoi(b, &used_b);
    if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument("trailing");
    if (lo > hi) throw UsageError("empty range " + text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("range must look like A..B, got '" + text + "'");
  }
}

inline GroupElement parse_element(const GroupSpec& spec, const std::string& text) {
  long long x = 0, y = 0;
  int f = 0;
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  std::string rest;
  if (!(in >> x >> c1 >> y >> c2 >> f) || c1 != ',' || c2 != ',' || (in >> rest))
    throw UsageError("element must look like x,y,f, got '" + text + "'");
  if (x < 0 || y < 0 || x >= spec.n() || y >= spec.n() || (f != 0 && f != 1))
    throw UsageError("element " + text + " is out of range for n = " + std::to_string(spec.n()));
  return {x, y, f};
}

inline std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

inline GeneratorSet load_generator_file(const std::string& path, bool close_inverses) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return read_generator_file(in, close_inverses);
  } catch (const FormatError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

class App {
 public:
  App(std::ostream& out, std::ostream& err) : out_(out), err_(err) { setup(); }

  int run(int argc, const char* const* argv) {
    try {
      app_.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
      out_ << app_.help();
      return kOk;
    } catch (const CLI::CallForAllHelp& e) {
      out_ << app_.help("", CLI::AppFormatMode::All);
      return kOk;
    } catch (const CLI::ParseError& e) {
      err_ << "error: " << e.what() << "\n";
      return kUsage;
    }
    try {
      return dispatch();
    } catch (const UsageError& e) {
      err_ << "error: " << e.what() << "\n";
      return kUsage;
    } catch (const std::invalid_argument& e) {
      err_ << "error: " << e.what() << "\n";
      return kUsage;
    } catch (const std::exception& e) {
      err_ << "error: " << e.what() << "\n";
      return kCheckFailed;
    }
  }

 private:
  void setup() {
    app_.description("Diameter-two Cayley graphs over (Z_n x Z_n) x| Z_2");
    app_.require_subcommand(1);
    app_.fallthrough();
    app_.add_flag("--porcelain", porcelain_, "Emit 'key = value' lines");

    construct_ = app_.add_subcommand("construct", "Build and verify a generating set");
    auto* r = construct_->add_option("--r", c_.r, "Family parameter r >= 1");
    construct_->add_option("--s", c_.s, "Family parameter s in {0,1}")->needs(r);
    construct_->add_option("--eps", c_.eps, "Family parameter eps in {0,1}")->needs(r);
    construct_->add_option("--pad-to", c_.pad_to, "Pad with involutions up to this degree")->needs(r);
    auto* deg = construct_->add_option("--degree", c_.degree, "Build the padded family member for degree D >= 8");
    r->excludes(deg);

    records_ = app_.add_subcommand("records", "Record generating sets");
    records_->require_subcommand(1);
    records_list_ = records_->add_subcommand("list", "List registry entries");
    records_verify_ = records_->add_subcommand("verify", "Verify every registry entry");
    records_verify_->add_flag("--verbatim", rec_.verbatim, "Skip errata and verify the printed data as-is");
    records_show_ = records_->add_subcommand("show", "Print a record set in generator-file format");
    records_show_->add_option("--degree", rec_.degree, "Degree")->required();

    verify_ = app_.add_subcommand("verify", "Verify a generator file");
    verify_->add_option("--file", v_.file, "Generator file")->required();
    verify_->add_flag("--exact-diameter", v_.exact, "Also run BFS for the exact diameter");
    verify_->add_flag("--close-inverses", v_.close, "Add missing inverses before verifying");

    factorize_ = app_.add_subcommand("factorize", "Write elements as products of <= 2 generators");
    factorize_->add_option("--r", f_.r, "Family parameter r >= 1")->required();
    factorize_->add_option("--s", f_.s, "Family parameter s in {0,1}");
    factorize_->add_option("--eps", f_.eps, "Family parameter eps in {0,1}");
    auto* el = factorize_->add_option("--element", f_.element, "Element x,y,f");
    auto* all = factorize_->add_flag("--all", f_.all, "Factor every non-identity element");
    el->excludes(all);

    bounds_ = app_.add_subcommand("bounds", "Moore bound and diameter-two upper bounds");
    auto* bd = bounds_->add_option("--degree", b_.degree, "Degree d >= 3");
    auto* br = bounds_->add_option("--range", b_.range, "Degree range A..B");
    bd->excludes(br);
    bounds_->add_flag("--integer", b_.integer, "Print floor(w) instead of the exact value");

    table_ = app_.add_subcommand("table", "Compare against published record orders");
    table_->add_option("--range", t_.range, "Degree range A..B (A >= 8)")->required();
    table_->add_flag("--csv", t_.csv, "Comma-separated output");

    search_ = app_.add_subcommand("search", "Seeded local search for a diameter-two set");
    search_->add_option("--n", s_.n, "Group modulus")->required();
    search_->add_option("--degree", s_.degree, "Target degree")->required();
    search_->add_option("--seed", s_.seed, "PRNG seed")->required();
    search_->add_option("--budget", s_.budget, "Iteration budget")->required();
    search_->add_option("--anneal", s_.anneal, "Anneal with initial temperature T0 and per-step decay")
        ->expected(2);
    search_->add_option("--out", s_.out, "Write the generator file here instead of stdout");
    search_->add_flag("--free-c", s_.free_c, "Let the search move C as well");

    export_ = app_.add_subcommand("export", "Write the Cayley graph of a generator file");
    export_->add_option("--file", e_.file, "Generator file")->required();
    export_->add_option("--format", e_.format, "edgelist | dimacs")->required();
    export_->add_option("--out", e_.out, "Output path")->required();
  }

  int dispatch() {
    if (*construct_) return cmd_construct();
    if (*records_list_) return cmd_records_list();
    if (*records_verify_) return cmd_records_verify();
    if (*records_show_) return cmd_records_show();
    if (*verify_) return cmd_verify();
    if (*factorize_) return cmd_factorize();
    if (*bounds_) return cmd_bounds();
    if (*table_) return cmd_table();
    if (*search_) return cmd_search();
    if (*export_) return cmd_export();
    throw UsageError("no command");
  }

  void print_set(const GeneratorSet& x) {
    const auto& labels = x.labels();
    for (std::size_t i = 0; i < x.degree(); ++i) {
      const auto& g = x.elements()[i];
      const std::string label = labels ? std::string(label_name((*labels)[i])) : std::string();
      if (porcelain_)
        out_ << "generator = " << to_string(g) << (label.empty() ? "" : " " + label) << "\n";
      else
        out_ << "  " << to_string(g) << (label.empty() ? "" : "  " + label) << "\n";
    }
  }

  int cmd_construct() {
    GeneratorSet x = [&] {
      if (c_.degree) {
        if (*c_.degree < 8) throw UsageError("--degree must be >= 8");
        const auto recipe = recipe_for_degree(*c_.degree);
        print_params(recipe.base, recipe.padding);
        return construct_for_degree(*c_.degree);
      }
      if (!c_.r) throw UsageError("construct needs --r R [--s S --eps E] or --degree D");
      const auto p = params_from_rse(*c_.r, c_.s, c_.eps);
      auto base = theorem1_generating_set(p);
      const std::size_t target = c_.pad_to ? static_cast<std::size_t>(*c_.pad_to) : base.degree();
      if (target < base.degree()) throw UsageError("--pad-to is below the construction degree");
      print_params(p, static_cast<int>(target - base.degree()));
      return pad_to_degree(base, target);
    }();
    if (!porcelain_) out_ << "generators (" << x.degree() << "):\n";
    print_set(x);
    const auto report = verify_report(x);
    write_report(out_, report, porcelain_);
    return report.passed() ? kOk : kCheckFailed;
  }

  void print_params(const ConstructionParams& p, int padding) {
    if (porcelain_) {
      out_ << "r = " << p.r << "\ns = " << p.s << "\neps = " << p.eps << "\nn = " << p.n() << "\nm = " << p.m()
           << "\nbase_degree = " << p.degree() << "\npadding = " << padding << "\n";
    } else {
      out_ << "params: r=" << p.r << " s=" << p.s << " eps=" << p.eps << " n=" << p.n() << " m=" << p.m()
           << " d=" << p.degree() << " order=" << p.order();
      if (padding > 0) out_ << " padding=" << padding;
      out_ << "\n";
    }
  }

  int cmd_records_list() {
    for (const auto& e : record_registry()) {
      out_ << "d=" << e.degree << " n=" << e.n << " order=" << e.order << " |A|=" << e.a_set.size()
           << " |B|=" << e.b_set.size() << "  " << e.source << "\n";
    }
    for (const auto& err : record_errata())
      out_ << "erratum n=" << err.n << ": (" << err.printed.x << "," << err.printed.y << "," << err.printed.flip
           << ") -> (" << err.corrected.x << "," << err.corrected.y << "," << err.corrected.flip << ")  " << err.note
           << "\n";
    return kOk;
  }

  int cmd_records_verify() {
    std::size_t passed = 0;
    for (const auto& e : record_registry()) {
      const auto x = expand_record(e, !rec_.verbatim);
      const auto rep = verify_report(x);
      const bool ok = rep.passed() && rep.degree == static_cast<std::size_t>(e.degree) &&
                      rep.order == static_cast<std::size_t>(e.order) && rep.diameter->exact == 2;
      passed += ok;
      if (porcelain_) {
        out_ << "record_" << e.degree << " = " << (ok ? "pass" : "fail") << "\n";
      } else {
        out_ << "d=" << std::setw(2) << e.degree << " n=" << std::setw(2) << e.n << " order=" << std::setw(4)
             << rep.order << " degree=" << rep.degree << " uncovered=" << (rep.diameter ? rep.diameter->uncovered_count : 0)
             << " diameter="
             << (rep.diameter && rep.diameter->exact ? std::to_string(*rep.diameter->exact) : std::string("-"))
             << "  " << (ok ? "PASS" : "FAIL") << "\n";
      }
    }
    const auto total = record_registry().size();
    if (porcelain_)
      out_ << "passed = " << passed << "\ntotal = " << total << "\n";
    else
      out_ << passed << "/" << total << " pass" << (rec_.verbatim ? " (verbatim, no errata)" : "") << "\n";
    return passed == total ? kOk : kCheckFailed;
  }

  int cmd_records_show() {
    if (!has_record(rec_.degree)) throw UsageError("no record construction for degree " + std::to_string(rec_.degree));
    const auto x = record_set(rec_.degree);
    const auto& entry = nearest_record_entry(rec_.degree);
    std::vector<std::string> header = {"record set, degree " + std::to_string(rec_.degree) + ", order " +
                                       std::to_string(x.order())};
    if (entry.degree != rec_.degree)
      header.push_back("registry degree " + std::to_string(entry.degree) + " padded with " +
                       std::to_string(rec_.degree - entry.degree) + " involution(s)");
    write_generator_file(out_, x, header);
    return kOk;
  }

  int cmd_verify() {
    const auto x = load_generator_file(v_.file, v_.close);
    const auto report = verify_report(x, v_.exact);
    write_report(out_, report, porcelain_);
    return report.passed() ? kOk : kCheckFailed;
  }

  int cmd_factorize() {
    if (!f_.element && !f_.all) throw UsageError("factorize needs --element x,y,f or --all");
    const auto p = params_from_rse(f_.r, f_.s, f_.eps);
    const auto x = theorem1_generating_set(p);
    const auto& spec = x.spec();
    if (f_.element) {
      const auto g = parse_element(spec, *f_.element);
      if (g == identity(spec)) {
        out_ << to_string(g) << " is the identity: distance 0\n";
        return kOk;
      }
      const auto fz = factorize(p, x, g);
      std::string joined;
      for (std::size_t i = 0; i < fz.factors.size(); ++i) joined += (i ? " · " : "") + to_string(fz.factors[i]);
      if (porcelain_) {
        out_ << "element = " << to_string(g) << "\nfactors = " << joined << "\ncase = " << fz.proof_case
             << "\nfallback = " << (fz.fallback ? "true" : "false") << "\n";
      } else {
        out_ << to_string(g) << " = " << joined << "  [" << fz.proof_case << "]\n";
        if (fz.fallback) {
          out_ << "  fallback: case formulas";
          for (const auto& c : fz.attempted_cases) out_ << " " << c;
          out_ << " did not reproduce the element\n";
        }
      }
      return product(spec, fz.factors) == g ? kOk : kCheckFailed;
    }

    std::size_t checked = 0, mismatches = 0, fallbacks = 0;
    std::map<std::string, std::size_t> by_case;
    for (const auto& g : enumerate(spec)) {
      if (g == identity(spec)) continue;
      ++checked;
      const auto fz = factorize(p, x, g);
      if (fz.factors.empty() || fz.factors.size() > 2 || product(spec, fz.factors) != g) ++mismatches;
      if (fz.fallback) {
        ++fallbacks;
        std::string key;
        for (const auto& c : fz.attempted_cases) key += (key.empty() ? "" : ", ") + c;
        ++by_case[key.empty() ? "(no case applies)" : key];
      }
    }
    if (porcelain_) {
      out_ << "elements = " << checked << "\nmismatches = " << mismatches << "\nfallbacks = " << fallbacks << "\n";
    } else {
      out_ << "n=" << p.n() << " d=" << p.degree() << ": factored " << checked << " elements, " << mismatches
           << " mismatches, " << fallbacks << " fallbacks\n";
      for (const auto& [k, v] : by_case) out_ << "  fallback after " << k << ": " << v << "\n";
    }
    return mismatches == 0 ? kOk : kCheckFailed;
  }

  int cmd_bounds() {
    int lo = 0, hi = 0;
    if (b_.degree) {
      lo = hi = *b_.degree;
    } else if (b_.range) {
      std::tie(lo, hi) = parse_range(*b_.range);
    } else {
      throw UsageError("bounds needs --degree D or --range A..B");
    }
    if (lo < 3) throw UsageError("bounds need degree >= 3");
    for (int d = lo; d <= hi; ++d) {
      const auto rep = bound_report(d);
      const std::string w = b_.integer ? std::to_string(rep.w.value.floor()) : rep.w.value.to_string();
      const std::string w_even = b_.integer ? std::to_string(rep.w_even.floor()) : rep.w_even.to_string();
      const std::string t1 = rep.table1 ? std::to_string(*rep.table1) : std::string("n/a");
      if (porcelain_) {
        out_ << "d = " << d << "\nmoore = " << rep.moore << "\nw = " << w << "\nw_argmax_k = " << rep.w.argmax_k
             << "\nw_even = " << w_even << "\nasymptotic = " << fixed(rep.asymptotic, 6) << "\ntable1_order = " << t1
             << "\n";
      } else {
        out_ << "d=" << d << "  moore=" << rep.moore << "  w=" << w << " (k=" << rep.w.argmax_k << ")"
             << "  w_even=" << w_even << "  asymptotic=" << fixed(rep.asymptotic, 2) << "  table1_order=" << t1
             << "\n";
      }
    }
    return kOk;
  }

  int cmd_table() {
    const auto [lo, hi] = parse_range(t_.range);
    if (lo < 8) throw UsageError("table range must start at degree >= 8");
    const auto rows = comparison_table(lo, hi);
    if (t_.csv)
      write_comparison_csv(out_, rows);
    else
      write_comparison_text(out_, rows);
    return kOk;
  }

  int cmd_search() {
    if (s_.n < 1) throw UsageError("--n must be >= 1");
    SearchConfig cfg;
    cfg.n = s_.n;
    cfg.target_degree = s_.degree;
    cfg.seed = s_.seed;
    cfg.budget = s_.budget;
    cfg.fix_c = !s_.free_c;
    if (!s_.anneal.empty()) {
      cfg.strategy = Strategy::Anneal;
      cfg.initial_temperature = s_.anneal[0];
      cfg.decay = s_.anneal[1];
      if (cfg.initial_temperature <= 0 || cfg.decay <= 0 || cfg.decay > 1)
        throw UsageError("--anneal needs T0 > 0 and 0 < DECAY <= 1");
    }
    const auto result = search_generating_set(cfg);
    if (!result.set) {
      err_ << "budget exhausted after " << result.iterations << " iterations; best score " << result.best_score
           << "\n";
      return kCheckFailed;
    }
    std::ostringstream header;
    std::vector<std::string> comments = {
        "search n=" + std::to_string(cfg.n) + " degree=" + std::to_string(cfg.target_degree) +
            " seed=" + std::to_string(cfg.seed) + " budget=" + std::to_string(cfg.budget) + " strategy=" +
            (cfg.strategy == Strategy::Anneal
                 ? "anneal T0=" + fixed(cfg.initial_temperature, 6) + " decay=" + fixed(cfg.decay, 6)
                 : std::string("hill_climb")) +
            (cfg.fix_c ? "" : " free-c"),
        "score 0 after " + std::to_string(result.iterations) + " iterations, trace length " +
            std::to_string(result.accepted_scores.size())};
    if (s_.out) {
      std::ofstream f(*s_.out);
      if (!f) throw UsageError("cannot write " + *s_.out);
      write_generator_file(f, *result.set, comments);
      out_ << "wrote " << *s_.out << "\n";
    } else {
      write_generator_file(out_, *result.set, comments);
    }
    return kOk;
  }

  int cmd_export() {
    const auto format = parse_graph_format(e_.format);
    const auto x = load_generator_file(e_.file, false);
    if (!validate_set(x).empty()) {
      err_ << "error: " << e_.file << " is not a valid generating set\n";
      return kCheckFailed;
    }
    std::ofstream f(e_.out);
    if (!f) throw UsageError("cannot write " + e_.out);
    const auto edges = export_graph(x, format, f);
    if (porcelain_)
      out_ << "vertices = " << x.order() << "\nedges = " << edges << "\n";
    else
      out_ << "wrote " << x.order() << " vertices, " << edges << " edges to " << e_.out << "\n";
    return kOk;
  }

  std::ostream& out_;
  std::ostream& err_;
  CLI::App app_{"cayley2"};
  bool porcelain_ = false;

  CLI::App* construct_ = nullptr;
  CLI::App* records_ = nullptr;
  CLI::App* records_list_ = nullptr;
  CLI::App* records_verify_ = nullptr;
  CLI::App* records_show_ = nullptr;
  CLI::App* verify_ = nullptr;
  CLI::App* factorize_ = nullptr;
  CLI::App* bounds_ = nullptr;
  CLI::App* table_ = nullptr;
  CLI::App* search_ = nullptr;
  CLI::App* export_ = nullptr;

  struct {
    std::optional<int> r;
    int s = 0;
    int eps = 0;
    std::optional<int> pad_to;
    std::optional<int> degree;
  } c_;
  struct {
    bool verbatim = false;
    int degree = 0;
  } rec_;
  struct {
    std::string file;
    bool exact = false;
    bool close = false;
  } v_;
  struct {
    int r = 1;
    int s = 0;
    int eps = 0;
    std::optional<std::string> element;
    bool all = false;
  } f_;
  struct {
    std::optional<int> degree;
    std::optional<std::string> range;
    bool integer = false;
  } b_;
  struct {
    std::string range;
    bool csv = false;
  } t_;
  struct {
    long long n = 0;
    std::size_t degree = 0;
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;
    std::vector<double> anneal;
    std::optional<std::string> out;
    bool free_c = false;
  } s_;
  struct {
    std::string file;
    std::string format;
    std::string out;
  } e_;
};

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("cayley2");
  for (const auto& a : args) argv.push_back(a.c_str());
  App app(out, err);
  return app.run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace cayley2::cli
