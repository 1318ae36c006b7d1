// cf: command-line front end for the sadic library.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sadic/automaton.hpp"
#include "sadic/cf_algorithms.hpp"
#include "sadic/combinatorics.hpp"
#include "sadic/fractal.hpp"
#include "sadic/geometry.hpp"
#include "sadic/io.hpp"
#include "sadic/lyapunov.hpp"
#include "sadic/render.hpp"
#include "sadic/torus.hpp"

namespace {

using namespace sadic;

enum Exit { ok = 0, config_error = 1, certification_failure = 2, inconclusive = 3, domain_error = 4 };

// Options shared by most subcommands.  Preset values fill only what the
// command line leaves unset.
struct Common {
  std::string preset;
  std::string algo = "cassaigne";
  std::string x;
  std::string directive;
  std::string period;
  std::string out;
  Json cfg = Json::object();

  void add(CLI::App* app) {
    app->add_option("--preset,--config", preset, "preset name or JSON config file");
    app->add_option("--algo", algo, "cassaigne | sturmian | brun | arnoux-rauzy");
    app->add_option("--x", x, "direction: a,b,c | eigen:<names> | random:<seed>");
    app->add_option("--directive", directive, "directive prefix, e.g. c1c0c0");
    app->add_option("--period", period, "periodic directive sequence, e.g. c0c1");
    app->add_option("--out", out, "output file");
  }

  void load(CLI::App* app) {
    if (preset.empty()) return;
    cfg = load_preset(preset);
    auto fill = [&](const char* flag, const char* key, std::string& target) {
      if (app->count(flag) == 0 && cfg.contains(key)) {
        const Json& v = cfg[key];
        if (v.is_array()) {
          std::string joined;
          for (const auto& e : v) joined += (joined.empty() ? "" : ",") + e.get<std::string>();
          target = joined;
        } else {
          target = v.get<std::string>();
        }
      }
    };
    fill("--algo", "algorithm", algo);
    fill("--x", "x", x);
    fill("--directive", "directive", directive);
    fill("--period", "period", period);
  }

  template <class T>
  void fill_number(CLI::App* app, const char* flag, const char* key, T& target) const {
    if (app->count(flag) == 0 && cfg.contains(key)) target = cfg[key].get<T>();
  }

  const Algorithm& algorithm() const { return Algorithm::by_name(algo); }

  // Periodic, explicit prefix, or driven by the exact orbit of x, in that order.
  DirectiveSequence sequence() const {
    const Algorithm& alg = algorithm();
    if (!period.empty())
      return DirectiveSequence::periodic(alg.set_ptr(), DirectiveSequence::parse_names(alg.set(), period));
    if (!x.empty()) return algorithm_sequence(alg, parse_direction(alg, x));
    if (!directive.empty())
      return DirectiveSequence::with_prefix(alg.set_ptr(), DirectiveSequence::parse_names(alg.set(), directive));
    throw std::invalid_argument("need --period, --x or --directive");
  }

  Vec<double> direction(const DirectiveSequence& s, std::size_t depth) const {
    const Algorithm& alg = algorithm();
    if (!x.empty()) {
      Vec<double> v;
      for (const auto& c : parse_direction(alg, x)) v.push_back(to_double(c));
      return v;
    }
    return perron_direction(s.product(0, std::max<std::size_t>(depth, 1))).mid();
  }

  void emit(const std::string& text) const {
    if (out.empty()) std::cout << text;
    else write_text_file(out, text);
  }
};

Vec<double> to_doubles(const Vec<Rational>& x) {
  Vec<double> v;
  for (const auto& c : x) v.push_back(to_double(c));
  return v;
}

template <class T>
std::string coordinate_string(const T& c) {
  if constexpr (std::is_same_v<T, Rational>) return to_string(c);
  else if constexpr (std::is_same_v<T, Interval>) {
    std::ostringstream os;
    os.precision(17);
    os << '[' << c.lo() << ' ' << c.hi() << ']';
    return os.str();
  } else {
    std::ostringstream os;
    os.precision(17);
    os << c;
    return os.str();
  }
}

template <class T>
int write_orbit(const Common& c, const Algorithm& alg, Vec<T> x, std::size_t steps) {
  const OrbitRecord<T> rec = orbit(alg, std::move(x), steps);
  std::ostringstream os;
  for (std::size_t k = 0; k < rec.directions.size(); ++k) {
    Json j{{"k", k}, {"substitution", nullptr}, {"tie", false}, {"x", Json::array()}};
    if (k < rec.length()) {
      j["substitution"] = alg.set()[rec.ids[k]].name();
      j["tie"] = bool(rec.ties[k]);
    }
    for (const auto& v : rec.directions[k]) j["x"].push_back(coordinate_string(v));
    os << j.dump() << '\n';
  }
  c.emit(os.str());
  if (rec.exit_index) {
    std::cerr << "orbit stopped: " << rec.exit_reason << '\n';
    return rec.exit_inconclusive ? inconclusive : domain_error;
  }
  return ok;
}

void add_orbit(CLI::App& app, std::function<int()>& run) {
  auto* cmd = app.add_subcommand("orbit", "orbit of a direction under the algorithm");
  auto c = std::make_shared<Common>();
  auto steps = std::make_shared<std::size_t>(30);
  auto mode = std::make_shared<std::string>("exact");
  c->add(cmd);
  cmd->add_option("--steps", *steps);
  cmd->add_option("--mode", *mode)->check(CLI::IsMember({"exact", "float", "interval"}));
  cmd->callback([=, &run] {
    run = [=] {
      c->load(cmd);
      c->fill_number(cmd, "--steps", "steps", *steps);
      const Algorithm& alg = c->algorithm();
      const Vec<Rational> x = parse_direction(alg, c->x.empty() ? "random:0" : c->x);
      if (*mode == "exact") return write_orbit(*c, alg, x, *steps);
      if (*mode == "float") return write_orbit(*c, alg, to_doubles(x), *steps);
      Vec<Interval> xi;
      for (const auto& v : x) xi.push_back(to_interval(v));
      return write_orbit(*c, alg, xi, *steps);
    };
  });
}

void add_lyapunov(CLI::App& app, std::function<int()>& run) {
  auto* cmd = app.add_subcommand("lyapunov", "Lyapunov exponents over random directions");
  auto c = std::make_shared<Common>();
  auto trials = std::make_shared<std::size_t>(100);
  auto n = std::make_shared<std::size_t>(100000);
  auto seed = std::make_shared<std::uint64_t>(1);
  auto csv = std::make_shared<std::string>();
  c->add(cmd);
  cmd->add_option("--trials", *trials);
  cmd->add_option("--n,--steps", *n, "steps per trial");
  cmd->add_option("--seed", *seed);
  cmd->add_option("--csv", *csv, "per-trial CSV output");
  cmd->callback([=, &run] {
    run = [=] {
      c->load(cmd);
      c->fill_number(cmd, "--trials", "trials", *trials);
      c->fill_number(cmd, "--n", "n", *n);
      c->fill_number(cmd, "--seed", "seed", *seed);
      const Algorithm& alg = c->algorithm();
      if (!c->period.empty()) {
        const auto dir = certify_periodic(alg, DirectiveSequence::parse_names(alg.set(), c->period));
        Json j{{"period", c->period},
               {"theta1", theta1_periodic(alg, dir, *n)},
               {"theta2", theta2_periodic_fixed_left(alg, dir, *n)},
               {"steps", *n}};
        c->emit(j.dump() + "\n");
        return int(ok);
      }
      const LyapunovReport rep = pisot_report(alg, *trials, *n, *seed);
      if (!csv->empty()) write_text_file(*csv, rep.to_csv());
      c->emit(rep.summary_json() + "\n");
      return int(ok);
    };
  });
}

void add_complexity(CLI::App& app, std::function<int()>& run) {
  auto* cmd = app.add_subcommand("complexity", "factor complexity of a fixed-point prefix");
  auto c = std::make_shared<Common>();
  auto n = std::make_shared<std::size_t>(200);
  auto length = std::make_shared<std::size_t>(100000);
  auto seed = std::make_shared<std::uint64_t>(1);
  auto max_run = std::make_shared<std::size_t>(4);
  c->add(cmd);
  cmd->add_option("--n", *n);
  cmd->add_option("--length", *length, "prefix length");
  cmd->add_option("--seed", *seed, "seed of a random directive sequence");
  cmd->add_option("--max-run", *max_run, "longest run in a random directive sequence");
  cmd->callback([=, &run] {
    run = [=] {
      c->load(cmd);
      c->fill_number(cmd, "--n", "n", *n);
      c->fill_number(cmd, "--length", "prefix_length", *length);
      c->fill_number(cmd, "--max-run", "max_run", *max_run);
      if (cmd->count("--seed") == 0 && c->cfg.contains("seeds")) *seed = c->cfg["seeds"].at(0).get<std::uint64_t>();
      const Algorithm& alg = c->algorithm();
      const bool random = c->period.empty() && c->x.empty() && c->directive.empty();
      const DirectiveSequence s = random ? random_runs(alg, *seed, *max_run) : c->sequence();
      const auto fp = fixed_point_prefix(s, 1, *length, 100000);
      const FixedPointRow& row = fp.rows.at(0);
      if (row.determined < *length)
        throw std::domain_error("only " + std::to_string(row.determined) + " letters are determined");
      const Word prefix(row.letters.begin(), row.letters.begin() + std::ptrdiff_t(*length));
      const ComplexityTable t = complexity(prefix, *n);
      c->emit(t.to_csv());
      if (!t.stable_under_doubling) std::cerr << "warning: table changes between the half and the full prefix\n";
      return int(ok);
    };
  });
}

void add_fractal(CLI::App& app, std::function<int()>& run) {
  auto* cmd = app.add_subcommand("fractal", "Rauzy fractal approximation");
  auto c = std::make_shared<Common>();
  auto depth = std::make_shared<std::size_t>(20);
  auto width = std::make_shared<int>(400);
  auto height = std::make_shared<int>(400);
  auto csv = std::make_shared<std::string>();
  auto golden = std::make_shared<std::string>();
  auto tolerance = std::make_shared<double>(0.005);
  auto translates = std::make_shared<int>(0);
  auto no_golden = std::make_shared<bool>(false);
  c->add(cmd);
  cmd->add_flag("--no-golden", *no_golden, "skip the comparison named by the preset");
  cmd->add_option("--depth", *depth);
  cmd->add_option("--width", *width);
  cmd->add_option("--height", *height);
  cmd->add_option("--csv", *csv, "point cloud CSV output");
  cmd->add_option("--golden", *golden, "PPM to compare the raster with");
  cmd->add_option("--tolerance", *tolerance, "allowed fraction of differing pixels");
  cmd->add_option("--translates", *translates, "draw lattice translates within this radius");
  cmd->callback([=, &run] {
    run = [=] {
      c->load(cmd);
      c->fill_number(cmd, "--depth", "depth", *depth);
      c->fill_number(cmd, "--width", "width", *width);
      c->fill_number(cmd, "--height", "height", *height);
      if (!*no_golden && cmd->count("--golden") == 0 && c->cfg.contains("golden"))
        *golden = (std::filesystem::path(preset_path(c->preset)).parent_path().parent_path() /
                   c->cfg["golden"].get<std::string>()).string();
      const Algorithm& alg = c->algorithm();
      const DirectiveSequence s = c->sequence();
      const auto aut = PrefixAutomaton::build(alg.set_ptr());
      const FractalApprox f = approximate(aut, s, c->direction(s, *depth), *depth);
      if (!csv->empty()) write_text_file(*csv, f.to_csv());
      RenderOptions opt;
      opt.width = *width;
      opt.height = *height;
      if (*translates > 0) {
        for (const IntVec& t : lattice_box(alg.dimension(), *translates))
          if (t != IntVec(t.size(), 0)) opt.translates.push_back(IntVec(t.begin() + 1, t.end()));
        opt.window = fit_window(f, 1.0);
      }
      const Raster r = render(f, opt);
      if (!c->out.empty()) {
        if (c->out.ends_with(".ppm")) r.write_ppm(c->out);
        else r.write_png(c->out);
      }
      Json j{{"points", f.size()}, {"depth", f.depth}, {"tail_radius", f.tail_radius},
             {"tail_rigorous", f.tail_rigorous}, {"downsampled", f.downsampled}, {"counts", f.counts()}};
      int status = ok;
      if (!golden->empty()) {
        const double diff = r.difference(Raster::read_ppm(*golden));
        j["golden_difference"] = diff;
        j["golden_match"] = diff <= *tolerance;
        if (diff > *tolerance) status = certification_failure;
      }
      std::cout << j.dump() << '\n';
      return status;
    };
  });
}

struct SeedSetup {
  ComplexEmbedding emb = ComplexEmbedding::cassaigne();
  std::shared_ptr<const SubstitutionSet> set;
  std::vector<Ball> balls;
  std::size_t depth = 8;
  double threshold = 1.5;
};

SeedSetup seed_setup(const Common& c, CLI::App* cmd, std::size_t depth) {
  SeedSetup s;
  const SubstitutionSet cas = subs::cassaigne();
  s.set = std::make_shared<const SubstitutionSet>(std::vector<Substitution>{compose(cas[0], cas[1])});
  if (!c.cfg.contains("balls")) throw std::invalid_argument("the configuration has no balls");
  s.balls = balls_from_json(c.cfg["balls"]);
  s.depth = depth;
  if (cmd->count("--depth") == 0 && c.cfg.contains("depth")) s.depth = c.cfg["depth"].get<std::size_t>();
  if (c.cfg.contains("threshold")) s.threshold = to_double(parse_rational(c.cfg["threshold"].get<std::string>()));
  return s;
}

void add_certify_seed(CLI::App& app, std::function<int()>& run) {
  auto* cmd = app.add_subcommand("certify-seed", "ball certificate for the c0c1 seed");
  auto c = std::make_shared<Common>();
  auto depth = std::make_shared<std::size_t>(8);
  c->preset = "cassaigne-c0c1";
  c->add(cmd);
  cmd->add_option("--depth", *depth);
  cmd->callback([=, &run] {
    run = [=] {
      c->load(cmd);
      const SeedSetup s = seed_setup(*c, cmd, *depth);
      const auto aut = PrefixAutomaton::build(s.set);
      const BallCertificate cert = certify_balls(s.emb, aut, 0, s.balls, s.depth);
      const SeedReport rep = seed_certificate(s.emb, cert, s.threshold);
      Json j{{"balls", Json::parse(cert.to_json())}, {"seed", Json::parse(rep.to_json())}, {"ok", rep.ok}};
      c->emit(j.dump() + "\n");
      if (!rep.inconclusive.empty()) return int(inconclusive);
      return rep.ok ? int(ok) : int(certification_failure);
    };
  });
}

void add_code(CLI::App& app, std::function<int()>& run) {
  auto* cmd = app.add_subcommand("code", "symbolic coding of a torus orbit");
  auto c = std::make_shared<Common>();
  auto steps = std::make_shared<std::size_t>(1000);
  auto depth = std::make_shared<std::size_t>(20);
  c->add(cmd);
  cmd->add_option("--steps", *steps);
  cmd->add_option("--depth", *depth, "Cassaigne steps of the approximation");
  cmd->callback([=, &run] {
    run = [=] {
      c->load(cmd);
      c->fill_number(cmd, "--steps", "orbit_length", *steps);
      c->fill_number(cmd, "--depth", "coding_depth", *depth);
      const Algorithm& alg = c->algorithm();
      PieceCover cover;
      Vec<double> v;
      if (c->cfg.contains("balls") && c->x.empty()) {
        // Seed direction: rigorous disks from the ball certificate.
        const SeedSetup s = seed_setup(*c, cmd, 8);
        const auto aut = PrefixAutomaton::build(s.set);
        if (*depth % 2) throw std::invalid_argument("the c0c1 cover needs an even number of Cassaigne steps");
        cover = ball_cover(s.emb, aut, 0, s.balls, *depth / 2);
        v = perron_direction(s.emb.matrix()).mid();
      } else {
        const DirectiveSequence s = c->sequence();
        v = c->direction(s, *depth);
        cover = cloud_cover(approximate(PrefixAutomaton::build(alg.set_ptr()), s, v, *depth));
      }
      const auto tr = TorusTranslation<double>::from_direction(v);
      const CodingResult res = code_orbit(cover, tr.t, Vec<double>(v.size() - 1, 0.0), *steps);
      std::ostringstream os;
      for (std::size_t k = 0; k < res.letters.size(); ++k)
        os << Json{{"n", k}, {"letter", res.letters[k]}, {"certainty", res.certain[k] ? "certain" : "ambiguous"}}.dump()
           << '\n';
      c->emit(os.str());
      std::cerr << Json{{"ambiguous", res.ambiguous}, {"uncovered", res.uncovered},
                        {"ambiguity_rate", res.ambiguity_rate()}}.dump()
                << '\n';
      return res.uncovered ? int(certification_failure) : int(ok);
    };
  });
}

void add_renormalize(CLI::App& app, std::function<int()>& run) {
  auto* cmd = app.add_subcommand("renormalize", "induction and renormalization steps");
  auto c = std::make_shared<Common>();
  auto steps = std::make_shared<std::size_t>(2);
  auto depth = std::make_shared<std::size_t>(30);
  auto panel = std::make_shared<int>(240);
  auto dir = std::make_shared<std::string>();
  auto golden = std::make_shared<std::string>();
  auto tolerance = std::make_shared<double>(0.005);
  auto no_golden = std::make_shared<bool>(false);
  c->add(cmd);
  cmd->add_flag("--no-golden", *no_golden, "skip the comparison named by the preset");
  cmd->add_option("--golden", *golden, "PPM to compare the rendered panels with");
  cmd->add_option("--tolerance", *tolerance, "allowed fraction of differing pixels");
  cmd->add_option("--steps", *steps);
  cmd->add_option("--depth", *depth);
  cmd->add_option("--panel", *panel, "panel size in pixels");
  cmd->add_option("--render", *dir, "directory for the images");
  cmd->callback([=, &run] {
    run = [=] {
      c->load(cmd);
      c->fill_number(cmd, "--steps", "steps", *steps);
      c->fill_number(cmd, "--depth", "depth", *depth);
      c->fill_number(cmd, "--panel", "panel", *panel);
      if (!*no_golden && cmd->count("--golden") == 0 && c->cfg.contains("golden"))
        *golden = (std::filesystem::path(preset_path(c->preset)).parent_path().parent_path() /
                   c->cfg["golden"].get<std::string>()).string();
      const Algorithm& alg = Algorithm::get(AlgorithmKind::cassaigne);
      Vec<Rational> x = parse_direction(alg, c->x);
      std::ostringstream os;
      for (std::size_t k = 0; k < *steps; ++k) {
        const Renormalization r = renormalize(alg, x, *depth - k, *depth - k + 12);
        os << r.step.to_json() << '\n';
        x = r.step.next;
      }
      c->emit(os.str());
      if (dir->empty() && golden->empty()) return int(ok);
      const Raster img = render_renormalization(alg, parse_direction(alg, c->x), *steps, *depth, *panel);
      if (!dir->empty()) {
        std::filesystem::create_directories(*dir);
        img.write_png((std::filesystem::path(*dir) / "renormalization.png").string());
        img.write_ppm((std::filesystem::path(*dir) / "renormalization.ppm").string());
      }
      if (golden->empty()) return int(ok);
      const double diff = img.difference(Raster::read_ppm(*golden));
      std::cerr << Json{{"golden_difference", diff}, {"golden_match", diff <= *tolerance}}.dump() << '\n';
      return diff <= *tolerance ? int(ok) : int(certification_failure);
    };
  });
}

void add_automaton(CLI::App& app, std::function<int()>& run) {
  auto* cmd = app.add_subcommand("automaton", "prefix automaton in DOT format");
  auto c = std::make_shared<Common>();
  c->add(cmd);
  cmd->callback([=, &run] {
    run = [=] {
      c->load(cmd);
      const Algorithm& alg = c->algorithm();
      c->emit(PrefixAutomaton::build(alg.set_ptr()).to_dot(alg.name()));
      return int(ok);
    };
  });
}

void add_worm(CLI::App& app, std::function<int()>& run) {
  auto* cmd = app.add_subcommand("worm", "worm of a word as CSV");
  auto c = std::make_shared<Common>();
  auto word = std::make_shared<std::string>();
  auto n = std::make_shared<std::size_t>(100);
  auto alphabet = std::make_shared<std::size_t>(0);
  c->add(cmd);
  cmd->add_option("--word", *word, "finite word, repeated periodically");
  cmd->add_option("--n", *n, "number of points");
  cmd->add_option("--alphabet", *alphabet, "alphabet size (default: from the word)");
  cmd->callback([=, &run] {
    run = [=] {
      c->load(cmd);
      Word prefix;
      std::size_t d = *alphabet;
      if (!word->empty()) {
        const Word w = parse_word(*word);
        while (prefix.size() < *n) prefix.insert(prefix.end(), w.begin(), w.end());
        prefix.resize(*n);
        if (d == 0)
          for (Letter a : w) d = std::max<std::size_t>(d, a + 1u);
        d = std::max<std::size_t>(d, 2);
      } else {
        const DirectiveSequence s = c->sequence();
        const auto fp = fixed_point_prefix(s, 1, *n, 10000);
        prefix = fp.rows.at(0).letters;
        prefix.resize(std::min(prefix.size(), *n));
        d = s.set().alphabet_size();
      }
      c->emit(worm(prefix, d).to_csv());
      return int(ok);
    };
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app("cf: S-adic continued fractions, Rauzy fractals and torus codings");
  app.require_subcommand(1);
  std::function<int()> run;
  add_orbit(app, run);
  add_lyapunov(app, run);
  add_complexity(app, run);
  add_fractal(app, run);
  add_certify_seed(app, run);
  add_code(app, run);
  add_renormalize(app, run);
  add_automaton(app, run);
  add_worm(app, run);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int r = app.exit(e);
    return r == 0 ? ok : config_error;
  }
  try {
    return run();
  } catch (const Inconclusive& e) {
    std::cerr << "inconclusive: " << e.what() << '\n';
    return inconclusive;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return domain_error;
  } catch (const Json::exception& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return config_error;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return config_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return config_error;
  }
}
