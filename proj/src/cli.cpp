#include "hsnum/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <utility>

#include "CLI11.hpp"
#include "hsnum/config.hpp"
#include "hsnum/records.hpp"

namespace hsnum::cli {

namespace {

struct Reference {
  std::string  name;
  SeveriTriple triple;
  BigInt       h;
  BigInt       hs;
};

std::vector<Reference> const& references() {
  static std::vector<Reference> const refs = {
      {"smooth cubic, outside point", {1, 3, 0}, 240, 40},
      {"smooth cubic, point on curve", {1, 2, 1}, 1, 1},
      {"nodal cubic, outside point", {0, 3, 0}, 24, 12},
      {"nodal cubic, smooth point", {0, 2, 1}, 1, 1},
      {"smooth quartic, point on curve", {3, 3, 1}, 19680, 3280},
  };
  return refs;
}

// Memoizes h per (g, d) so that a table box computes each value once.
HurwitzProvider caching(HurwitzProvider inner) {
  auto cache = std::make_shared<std::map<std::pair<int, int>, TupleCount>>();
  return [inner = std::move(inner), cache](HurwitzQuery const& q) {
    auto key = std::make_pair(q.genus, q.degree);
    if (auto it = cache->find(key); it != cache->end()) {
      return it->second;
    }
    TupleCount value = inner(q);
    cache->emplace(key, value);
    return value;
  };
}

}  // namespace

int verify_paper(HurwitzProvider const& provider, std::ostream& out,
                 std::ostream& err) {
  out << "| check | triple | expected | got | result |\n"
      << "|---|---|---|---|---|\n";
  int passed = 0;
  int total  = 0;
  for (auto const& ref : references()) {
    ++total;
    std::string got;
    bool        ok = false;
    try {
      HSValue const v = hs_number(ref.triple, provider);
      got = "h=" + to_string(v.hurwitz_input.value) + ", H=" + to_string(v.value);
      ok  = v.hurwitz_input.value == ref.h && v.value == Rational(ref.hs);
    } catch (std::exception const& e) {
      got = "error";
      err << ref.name << ": " << e.what() << '\n';
    }
    if (ok) {
      ++passed;
    } else {
      err << "check failed: " << ref.name << '\n';
    }
    out << "| " << ref.name << " | " << ref.triple.to_string() << " | h="
        << to_string(ref.h) << ", H=" << to_string(ref.hs) << " | " << got
        << " | " << (ok ? "PASS" : "FAIL") << " |\n";
  }

  ++total;
  SeveriTriple const quartic(3, 4, 0);
  std::string        got;
  bool               ok = classify(quartic).kind == Kind::Unbendable;
  got = std::string(kind_label(classify(quartic)));
  try {
    hs_number(quartic, provider);
    ok = false;
    got += ", value returned";
  } catch (UnbendableUnsupported const&) {
    got += ", no formula";
  } catch (std::exception const& e) {
    ok = false;
    got += ", error";
    err << "smooth quartic, outside point: " << e.what() << '\n';
  }
  if (ok) {
    ++passed;
  } else {
    err << "check failed: smooth quartic, outside point\n";
  }
  out << "| smooth quartic, outside point | " << quartic.to_string()
      << " | unbendable, no formula | " << got << " | "
      << (ok ? "PASS" : "FAIL") << " |\n";

  out << '\n' << passed << "/" << total << " checks passed\n";
  return passed == total ? kOk : kVerificationFailed;
}

int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err, Context const& ctx) {
  CLI::App app{"Hurwitz numbers and Hurwitz-Severi numbers of plane curves",
               "hsnum"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string                format_name = "md";
  std::optional<std::string> method_name;
  std::optional<std::uint64_t> cap_flag;
  bool                       strict_flag = false;
  std::optional<std::string> config_path;

  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"json", "csv", "md"}));
  app.add_option("--method", method_name, "Hurwitz engine")
      ->check(CLI::IsMember({"auto", "brute", "characters", "cutjoin", "all"}));
  app.add_option("--cap", cap_flag, "Brute-force node budget")
      ->check(CLI::PositiveNumber);
  app.add_flag("--strict", strict_flag,
               "Exit with code 3 when any table row exceeds the cap");
  app.add_option("--config", config_path, "Config file (JSON)");

  int g = 0, d = 1, l = 0;
  auto* classify_cmd
      = app.add_subcommand("classify", "Classify a triple (g, d, l)");
  auto* hs_cmd = app.add_subcommand("hs", "Hurwitz-Severi number of (g, d, l)");
  for (auto* sub : {classify_cmd, hs_cmd}) {
    sub->add_option("g", g, "genus")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("d", d, "projection degree")
        ->required()
        ->check(CLI::PositiveNumber);
    sub->add_option("l", l, "multiplicity at p")
        ->required()
        ->check(CLI::NonNegativeNumber);
  }
  auto* hurwitz_cmd = app.add_subcommand("hurwitz", "Hurwitz number h_{g,1^d}");
  hurwitz_cmd->add_option("g", g, "genus")
      ->required()
      ->check(CLI::NonNegativeNumber);
  hurwitz_cmd->add_option("d", d, "degree")
      ->required()
      ->check(CLI::PositiveNumber);

  int   max_g = 0, max_d = 1, max_l = 0;
  auto* table_cmd = app.add_subcommand("table", "All triples in a box");
  table_cmd->add_option("max_g", max_g)
      ->required()
      ->check(CLI::NonNegativeNumber);
  table_cmd->add_option("max_d", max_d)->required()->check(CLI::PositiveNumber);
  table_cmd->add_option("max_l", max_l)
      ->required()
      ->check(CLI::NonNegativeNumber);

  auto* verify_cmd = app.add_subcommand(
      "verify-paper", "Recompute the reference examples and check them");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Settings settings;
  try {
    Settings from_config;
    if (config_path) {
      from_config = read_config_file(*config_path);
    } else if (ctx.use_default_config) {
      if (auto path = default_config_path();
          path && std::filesystem::exists(*path)) {
        from_config = read_config_file(*path);
      }
    }
    Overrides flags;
    flags.cap    = cap_flag;
    flags.strict = strict_flag;
    if (method_name) {
      flags.method = parse_method(*method_name);
    }
    settings = resolve_settings(from_config, ctx.env_cap, flags);
  } catch (std::exception const& e) {
    err << "hsnum: " << e.what() << '\n';
    return kUsage;
  }

  Format const        format = parse_format(format_name);
  EngineOptions const opts{settings.cap};
  HurwitzProvider     provider
      = ctx.provider ? *ctx.provider : engine_provider(settings.method, opts);

  try {
    if (*verify_cmd) {
      return verify_paper(provider, out, err);
    }

    if (*hurwitz_cmd) {
      HurwitzQuery const q(g, d);
      HurwitzRecord      rec;
      rec.genus          = g;
      rec.degree         = d;
      rec.transpositions = q.transpositions();
      rec.engines        = run_engines(q, settings.method, opts);
      rec.h              = rec.engines.front().value;
      rec.pairs = Rational(rec.h, factorial(static_cast<unsigned>(d)));
      rec.agree = std::all_of(
          rec.engines.begin(), rec.engines.end(),
          [&](EngineResult const& e) { return e.value == rec.h; });
      write_hurwitz(out, rec, format);
      if (!rec.agree) {
        err << "hsnum: engines disagree on h_{" << g << ",1^" << d << "}\n";
        return kDisagreement;
      }
      if (settings.method == Method::All
          && !brute_force_feasible(d, q.transpositions(), settings.cap)) {
        err << "hsnum: brute force skipped (node bound "
            << brute_force_node_bound(d, q.transpositions()) << " > cap "
            << settings.cap << ")\n";
      }
      return kOk;
    }

    if (*classify_cmd || *hs_cmd) {
      OutputRecord const rec = make_record(SeveriTriple(g, d, l), provider);
      write_records(out, {rec}, format, false);
      if (*classify_cmd) {
        return (settings.strict && rec.status == Status::CapExceeded)
                   ? kCapExceeded
                   : kOk;
      }
      switch (rec.status) {
        case Status::Ok:
          return kOk;
        case Status::Empty:
          err << "hsnum: triple " << rec.triple.to_string()
              << " is empty: no curves exist\n";
          return kEmptyVariety;
        case Status::Unbendable:
          err << "hsnum: triple " << rec.triple.to_string()
              << " is unbendable; this case is still widely open\n";
          return kUnbendable;
        case Status::Degenerate:
          err << "hsnum: triple " << rec.triple.to_string()
              << " has a degree-1 projection; no formula applies\n";
          return kDegenerate;
        case Status::CapExceeded:
          for (auto const& w : rec.warnings) {
            err << "hsnum: " << w << '\n';
          }
          return kCapExceeded;
      }
    }

    if (*table_cmd) {
      HurwitzProvider const     cached = caching(provider);
      std::vector<OutputRecord> rows;
      bool                      any_capped = false;
      for (int dd = 1; dd <= max_d; ++dd) {
        for (int ll = 0; ll <= max_l; ++ll) {
          for (int gg = 0; gg <= max_g; ++gg) {
            rows.push_back(make_record(SeveriTriple(gg, dd, ll), cached));
            any_capped = any_capped || rows.back().status == Status::CapExceeded;
          }
        }
      }
      write_records(out, rows, format, true);
      if (any_capped) {
        err << "hsnum: some rows exceeded the brute-force cap\n";
        if (settings.strict) {
          return kCapExceeded;
        }
      }
      return kOk;
    }
  } catch (CapExceeded const& e) {
    err << "hsnum: " << e.what() << '\n';
    return kCapExceeded;
  } catch (MethodDisagreement const& e) {
    err << "hsnum: engine disagreement: " << e.what() << '\n';
    return kDisagreement;
  }
  return kUsage;
}

}  // namespace hsnum::cli
