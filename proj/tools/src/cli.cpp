// framoid - exact computations in framed and tied diagram monoids

#include "framoid/cli.hpp"

#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "framoid/error.hpp"
#include "framoid/family.hpp"
#include "framoid/normal_form.hpp"
#include "framoid/verify.hpp"
#include "json.hpp"

namespace framoid::cli {

  namespace {
    using json = nlohmann::ordered_json;

    struct UsageError : Error {
      using Error::Error;
    };

    // An inclusive range of integers given as `a` or `a..b`.
    struct Range {
      int lo = 1;
      int hi = 1;

      std::vector<int> values() const {
        std::vector<int> out;
        for (int x = lo; x <= hi; ++x) {
          out.push_back(x);
        }
        return out;
      }
    };

    int to_positive(std::string_view s, std::string_view option) {
      int value = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
      if (ec != std::errc() || ptr != s.data() + s.size() || value < 1) {
        throw UsageError("--" + std::string(option)
                         + " expects a positive integer or a range a..b, got '"
                         + std::string(s) + "'");
      }
      return value;
    }

    Range parse_range(std::string const& text, std::string_view option) {
      auto dots = text.find("..");
      if (dots == std::string::npos) {
        int v = to_positive(text, option);
        return {v, v};
      }
      Range r{to_positive(std::string_view(text).substr(0, dots), option),
              to_positive(std::string_view(text).substr(dots + 2), option)};
      if (r.lo > r.hi) {
        throw UsageError("--" + std::string(option) + " range " + text
                         + " is empty");
      }
      return r;
    }

    std::string lower(std::string s) {
      std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
        return static_cast<char>(std::tolower(c));
      });
      return s;
    }

    std::string family_label(FamilyName f) {
      return lower(to_string(f));
    }

    // Options shared by the subcommands; empty strings mean "not given".
    struct Options {
      std::string family;
      std::string d;
      std::string n;
      std::string word;
      std::string format;
      std::string suite = "all";
      std::size_t cap     = default_closure_cap;
      std::uint64_t seed  = default_seed;
      unsigned    threads = 1;
      std::size_t pairs   = 1000;
      std::size_t triples = 10000;
      bool        dump    = false;
      bool        timing  = false;
    };

    std::shared_ptr<spdlog::logger> make_logger(std::ostream& err) {
      auto sink   = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
      auto logger = std::make_shared<spdlog::logger>("framoid", sink);
      logger->set_pattern("[%l] %v");
      auto level = spdlog::level::warn;
      if (char const* env = std::getenv("FRAMOID_LOG")) {
        std::string name = lower(env);
        if (name == "error") {
          level = spdlog::level::err;
        } else if (name == "warn") {
          level = spdlog::level::warn;
        } else if (name == "info") {
          level = spdlog::level::info;
        } else if (name == "debug") {
          level = spdlog::level::debug;
        } else {
          logger->warn("ignoring FRAMOID_LOG={}: expected error, warn, info or debug", env);
        }
      }
      logger->set_level(level);
      return logger;
    }

    class Runner {
     public:
      Runner(Options const& opts, std::ostream& out, std::ostream& err)
          : _opts(opts), _out(out), _log(make_logger(err)) {}

      int enumerate(bool table) {
        auto const format = format_or(table ? "csv" : "json");
        auto const name   = family_from_string(required(_opts.family, "family"));
        auto const ds     = parse_range(_opts.d.empty() ? "1" : _opts.d, "d");
        auto const ns     = parse_range(required(_opts.n, "n"), "n");
        bool       all_match = true;
        if (format == "csv") {
          _out << "family,d,n,count,predicted,match\n";
        }
        std::set<std::pair<int, int>> seen;
        for (int d : ds.values()) {
          for (int n : ns.values()) {
            MonoidFamily fam(name, d, n);
            if (!seen.insert({fam.modulus(), n}).second) {
              continue;
            }
            _log->info("enumerating {}", fam.to_string());
            auto const elements  = closure(fam, _opts.cap, _opts.threads);
            auto const predicted = predicted_cardinality(fam);
            bool const match
                = mpz_class(static_cast<unsigned long>(elements.size())) == predicted;
            all_match = all_match && match;
            print_count(format, fam, elements, predicted, match);
          }
        }
        return all_match ? ok : mismatch;
      }

      int verify() {
        auto const   format = format_or("json");
        VerifyOptions vo;
        vo.seed    = _opts.seed;
        vo.timing  = _opts.timing;
        vo.cap     = _opts.cap;
        vo.threads = _opts.threads;
        static std::set<std::string> const suites
            = {"all", "cardinalities", "presentations", "bridges", "tl", "tied", "hom"};
        if (!suites.contains(_opts.suite)) {
          throw UsageError("unknown suite '" + _opts.suite
                           + "'; expected one of all, cardinalities, presentations, "
                             "bridges, tl, tied, hom");
        }
        bool const  all = _opts.suite == "all";
        SuiteReport report{_opts.suite, {}};
        if (all || _opts.suite == "cardinalities") {
          _log->info("running the cardinality suite");
          report.append(suite_cardinalities(grid(), vo));
        }
        if (all || _opts.suite == "presentations") {
          _log->info("running the presentation suite");
          report.append(suite_presentations(grid(), vo));
        }
        if (all || _opts.suite == "bridges") {
          _log->info("running the bridge suite");
          auto const ds = values_or(_opts.d, "d", Range{2, 4});
          auto const ns = values_or(_opts.n, "n", Range{4, 4});
          for (auto t : all_bridge_targets()) {
            if (!_opts.family.empty()
                && family_from_string(_opts.family) != bridge_family(t)) {
              continue;
            }
            for (int n : ns) {
              report.append(suite_bridges(t, ds, n, vo));
            }
          }
        }
        if (all || _opts.suite == "tl") {
          _log->info("running the framed Temperley-Lieb suite");
          for (int d : values_or(_opts.d, "d", Range{1, 3})) {
            for (int n : values_or(_opts.n, "n", Range{1, 4})) {
              report.append(suite_framed_tl(d, n, _opts.triples, vo));
            }
          }
        }
        if (all || _opts.suite == "tied") {
          _log->info("running the tied specialization suite");
          for (int n : values_or(_opts.n, "n", Range{1, 4})) {
            report.append(suite_tied_specializations(n, vo));
          }
        }
        if (all || _opts.suite == "hom") {
          _log->info("running the specialization homomorphism suite");
          for (auto const& fam : homomorphism_grid()) {
            report.append(suite_specialization_homomorphism(fam, _opts.pairs, vo));
          }
        }
        if (format == "json") {
          _out << to_json(report, _opts.timing);
        } else if (format == "csv") {
          _out << to_csv(report);
        } else {
          _out << to_text(report);
        }
        _log->info("{} identities checked, {} failed", report.results.size(), report.failures());
        return report.pass() ? ok : mismatch;
      }

      int normal_form() {
        auto const format = format_or("text");
        auto const fam    = single_family();
        auto const w      = parse_word(required(_opts.word, "word"));
        auto const x      = evaluate(fam, w).diagram;
        auto const nf     = normal_form_of(fam, x);
        if (!nf) {
          throw UsageError("no normal form is implemented for "
                           + to_string(fam.name()));
        }
        if (format == "json") {
          json j = header(fam);
          j["word"]        = to_string(w);
          j["normal_form"] = to_string(*nf);
          j["length"]      = nf->length();
          if (_opts.dump) {
            j["diagram"] = encode(x);
          }
          _out << j.dump() << "\n";
        } else {
          _out << to_string(*nf) << "\n";
          if (_opts.dump) {
            _out << encode(x) << "\n";
          }
        }
        return ok;
      }

      int eval_word() {
        auto const format = format_or("text");
        auto const fam    = single_family();
        auto const w      = parse_word(required(_opts.word, "word"));
        auto const r      = evaluate(fam, w);
        auto const nf     = normal_form_of(fam, r.diagram);
        if (format == "json") {
          json j = header(fam);
          j["word"]    = to_string(w);
          j["diagram"] = encode(r.diagram);
          j["loops"]   = r.loops.to_string();
          if (nf) {
            j["normal_form"] = to_string(*nf);
          }
          _out << j.dump() << "\n";
        } else {
          _out << "diagram: " << encode(r.diagram) << "\n";
          if (nf) {
            _out << "normal form: " << to_string(*nf) << "\n";
          }
          _out << "loops: " << r.loops.to_string() << "\n";
        }
        return ok;
      }

     private:
      std::string format_or(std::string const& fallback) const {
        auto f = _opts.format.empty() ? fallback : lower(_opts.format);
        if (f != "json" && f != "csv" && f != "text") {
          throw UsageError("--format expects json, csv or text, got '" + f + "'");
        }
        return f;
      }

      static std::string const& required(std::string const& value, char const* option) {
        if (value.empty()) {
          throw UsageError("--" + std::string(option) + " is required");
        }
        return value;
      }

      static std::vector<int> values_or(std::string const& text,
                                        char const*        option,
                                        Range              fallback) {
        return (text.empty() ? fallback : parse_range(text, option)).values();
      }

      MonoidFamily single_family() const {
        auto const name = family_from_string(required(_opts.family, "family"));
        auto const d    = parse_range(_opts.d.empty() ? "1" : _opts.d, "d");
        auto const n    = parse_range(required(_opts.n, "n"), "n");
        if (d.lo != d.hi || n.lo != n.hi) {
          throw UsageError("this command expects a single --d and --n");
        }
        return MonoidFamily(name, d.lo, n.lo);
      }

      // The default grid, or the requested family over the requested
      // ranges.
      std::vector<MonoidFamily> grid() const {
        if (_opts.family.empty() && _opts.d.empty() && _opts.n.empty()) {
          return default_grid();
        }
        std::vector<FamilyName> names;
        if (_opts.family.empty()) {
          names = all_families();
        } else {
          names = {family_from_string(_opts.family)};
        }
        std::vector<MonoidFamily>     out;
        std::set<std::tuple<int, int, int>> seen;
        for (auto f : names) {
          for (int d : values_or(_opts.d, "d", Range{1, 2})) {
            for (int n : values_or(_opts.n, "n", Range{1, 4})) {
              MonoidFamily fam(f, d, n);
              if (seen.insert({static_cast<int>(f), fam.modulus(), n}).second) {
                out.push_back(fam);
              }
            }
          }
        }
        return out;
      }

      std::vector<MonoidFamily> homomorphism_grid() const {
        std::vector<FamilyName> names = {FamilyName::Cdn,
                                         FamilyName::Sdn,
                                         FamilyName::Pdn,
                                         FamilyName::Jdn,
                                         FamilyName::Brdn,
                                         FamilyName::Rdn,
                                         FamilyName::RPrimeDn};
        if (!_opts.family.empty()) {
          names = {family_from_string(_opts.family)};
        }
        std::vector<MonoidFamily> out;
        for (auto f : names) {
          Range const n_default = f == FamilyName::RPrimeDn ? Range{3, 3} : Range{4, 4};
          for (int d : values_or(_opts.d, "d", Range{3, 3})) {
            for (int n : values_or(_opts.n, "n", n_default)) {
              out.emplace_back(f, d, n);
            }
          }
        }
        return out;
      }

      static std::optional<NormalFormWord> normal_form_of(MonoidFamily const& fam,
                                                          Diagram const&      x) {
        switch (fam.name()) {
          case FamilyName::Jn:
          case FamilyName::Jdn:
            return jones_nf(x);
          case FamilyName::Brn:
          case FamilyName::Brdn:
            return brauer_nf(x);
          case FamilyName::Rn:
          case FamilyName::Rdn:
            return rook_nf(x, RookVariant::first);
          case FamilyName::RPrimeDn:
            return rook_nf(x, RookVariant::prime);
          default:
            return std::nullopt;
        }
      }

      static json header(MonoidFamily const& fam) {
        json j;
        j["family"] = family_label(fam.name());
        j["d"]      = fam.modulus();
        j["n"]      = fam.degree();
        return j;
      }

      void print_count(std::string const&          format,
                       MonoidFamily const&         fam,
                       std::vector<Diagram> const& elements,
                       mpz_class const&            predicted,
                       bool                        match) {
        auto const label = family_label(fam.name());
        if (format == "json") {
          json j = header(fam);
          j["count"] = elements.size();
          if (predicted.fits_ulong_p()) {
            j["predicted"] = predicted.get_ui();
          } else {
            j["predicted"] = predicted.get_str();
          }
          j["match"] = match;
          if (_opts.dump) {
            json list = json::array();
            for (auto const& x : elements) {
              list.push_back(encode(x));
            }
            j["elements"] = std::move(list);
          }
          _out << j.dump() << "\n";
        } else if (format == "csv") {
          _out << label << "," << fam.modulus() << "," << fam.degree() << ","
               << elements.size() << "," << predicted.get_str() << ","
               << (match ? "true" : "false") << "\n";
        } else {
          _out << label << " d=" << fam.modulus() << " n=" << fam.degree()
               << " count=" << elements.size() << " predicted=" << predicted.get_str()
               << (match ? " match" : " MISMATCH") << "\n";
        }
        if (_opts.dump && format != "json") {
          for (auto const& x : elements) {
            _out << encode(x) << "\n";
          }
        }
      }

      Options const&                  _opts;
      std::ostream&                   _out;
      std::shared_ptr<spdlog::logger> _log;
    };

    void add_family_options(CLI::App* cmd, Options& opts, bool word) {
      cmd->add_option("--family", opts.family, "Monoid family, e.g. jdn, brdn, trprimen");
      cmd->add_option("--d", opts.d, "Framing modulus d, or a range a..b");
      cmd->add_option("--n", opts.n, "Number of strands n, or a range a..b");
      cmd->add_option("--format", opts.format, "Output format: json, csv or text");
      if (word) {
        cmd->add_option("--word", opts.word, "Word such as \"t1 o1^2 s2\"");
      } else {
        cmd->add_option("--cap", opts.cap, "Maximum number of elements to enumerate");
        cmd->add_option("--threads", opts.threads, "Worker threads for enumeration");
      }
      cmd->add_flag("--dump", opts.dump, "Also print canonical diagram encodings");
    }
  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    Options  opts;
    CLI::App app{"Exact computations in framed and tied diagram monoids", "framoid"};
    app.require_subcommand(1);

    auto* enumerate = app.add_subcommand("enumerate", "Enumerate a monoid and compare with its formula");
    add_family_options(enumerate, opts, false);
    auto* table = app.add_subcommand("cardinality-table", "Tabulate cardinalities over ranges of d and n");
    add_family_options(table, opts, false);
    auto* verify = app.add_subcommand("verify", "Run verification suites");
    add_family_options(verify, opts, false);
    verify->add_option("--suite", opts.suite, "all, cardinalities, presentations, bridges, tl, tied or hom");
    verify->add_option("--seed", opts.seed, "Seed for random sampling");
    verify->add_option("--pairs", opts.pairs, "Random pairs per family in the hom suite");
    verify->add_option("--triples", opts.triples, "Random triples per (d, n) in the tl suite");
    verify->add_flag("--timing", opts.timing, "Record milliseconds per identity");
    auto* nf = app.add_subcommand("normal-form", "Print the normal form of a word");
    add_family_options(nf, opts, true);
    auto* eval = app.add_subcommand("eval-word", "Evaluate a word to a diagram and its removed loops");
    add_family_options(eval, opts, true);

    try {
      app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return usage;
    }

    Runner runner(opts, out, err);
    try {
      if (*enumerate) {
        return runner.enumerate(false);
      } else if (*table) {
        return runner.enumerate(true);
      } else if (*verify) {
        return runner.verify();
      } else if (*nf) {
        return runner.normal_form();
      } else {
        return runner.eval_word();
      }
    } catch (CapExceeded const& e) {
      err << "framoid: " << e.what() << "\n";
      return cap_reached;
    } catch (Error const& e) {
      err << "framoid: " << e.what() << "\n";
      return usage;
    }
  }

  int run(int argc, char const* const* argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
  }

}  // namespace framoid::cli
