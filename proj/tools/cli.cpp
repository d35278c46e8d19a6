// Copyright 2026 The simroot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "simroot/decomposition.hpp"
#include "simroot/error.hpp"
#include "simroot/notation.hpp"
#include "simroot/oracle.hpp"
#include "simroot/root_count.hpp"

namespace simroot::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::optional<Digit> ground;
  bool json = false;
};

std::string to_string(const BigInt& value) { return value.str(); }

json ground_json(const GroundSet& ground) {
  return json(std::vector<Digit>(ground.digits().begin(), ground.digits().end()));
}

json base_record(const PartialInjection& f) {
  return json{{"element", format(f)}, {"ground", ground_json(f.ground())}};
}

void emit(std::ostream& out, const json& record) { out << record.dump() << '\n'; }

void require_k(unsigned k) {
  if (k == 0) throw KInvalid("--k must be at least 1");
}

// -- decompose ---------------------------------------------------------------

int cmd_decompose(const std::string& text, const Common& common, std::ostream& out) {
  const PartialInjection f = parse(text, common.ground);
  const Decomposition d = decompose(f);
  std::vector<std::size_t> cycle_lengths;
  std::vector<std::size_t> path_lengths;
  for (const auto& c : d.cycles) cycle_lengths.push_back(c.length());
  for (const auto& p : d.paths) path_lengths.push_back(p.length());

  if (common.json) {
    json record = base_record(f);
    json cycles = json::array();
    json paths = json::array();
    for (const auto& c : d.cycles) cycles.push_back(std::vector<Digit>(c.digits().begin(), c.digits().end()));
    for (const auto& p : d.paths) paths.push_back(std::vector<Digit>(p.digits().begin(), p.digits().end()));
    record["cycles"] = cycles;
    record["paths"] = paths;
    record["cycle_lengths"] = cycle_lengths;
    record["path_lengths"] = path_lengths;
    emit(out, record);
    return kOk;
  }
  auto join = [](const std::vector<std::size_t>& values) {
    std::ostringstream os;
    for (std::size_t i = 0; i < values.size(); ++i) os << (i ? " " : "") << values[i];
    return os.str();
  };
  out << format(d) << '\n'
      << "cycle lengths: " << join(cycle_lengths) << '\n'
      << "path lengths: " << join(path_lengths) << '\n';
  return kOk;
}

// -- power -------------------------------------------------------------------

int cmd_power(const std::string& text, unsigned k, const Common& common, std::ostream& out) {
  require_k(k);
  const PartialInjection f = parse(text, common.ground);
  const PartialInjection p = power(f, k);
  if (common.json) {
    json record = base_record(f);
    record["k"] = k;
    record["power"] = format(p);
    emit(out, record);
  } else {
    out << format(p) << '\n';
  }
  return kOk;
}

// -- roots -------------------------------------------------------------------

struct RootsOptions {
  std::string mode;
  std::string element;
  std::string root;
  unsigned k = 0;
  std::size_t list_cap = 1'000'000;
};

int cmd_roots(const RootsOptions& opt, const Common& common, std::ostream& out,
              std::ostream& err) {
  require_k(opt.k);
  if (opt.mode == "verify") {
    if (opt.root.empty()) throw UsageError("verify needs a candidate root");
    // Both elements live on the union of their digits (and --ground).
    const Decomposition sd = parse_components(opt.element);
    const Decomposition ad = parse_components(opt.root);
    std::vector<Digit> digits = sd.digits();
    const auto more = ad.digits();
    digits.insert(digits.end(), more.begin(), more.end());
    GroundSet ground(std::move(digits));
    if (common.ground) {
      if (!ground.empty() && ground[ground.size() - 1] > *common.ground) {
        throw GroundError("digit " + std::to_string(ground[ground.size() - 1]) +
                          " exceeds ground size " + std::to_string(*common.ground));
      }
      ground = GroundSet::range(*common.ground);
    }
    const PartialInjection sigma = recompose(sd, ground);
    const PartialInjection alpha = recompose(ad, ground);
    const PartialInjection powered = power(alpha, opt.k);
    const bool ok = powered == sigma;
    if (common.json) {
      json record = base_record(sigma);
      record["k"] = opt.k;
      record["root"] = format(alpha);
      record["power"] = format(powered);
      record["is_root"] = ok;
      emit(out, record);
    } else if (ok) {
      out << "yes\n";
    } else {
      out << "no: " << format(alpha) << "^" << opt.k << " = " << format(powered) << '\n';
    }
    return ok ? kOk : kNotARoot;
  }

  const PartialInjection f = parse(opt.element, common.ground);
  const RootCount count = count_kth_roots(f, opt.k);
  if (opt.mode == "count") {
    if (common.json) {
      json record = base_record(f);
      record["k"] = opt.k;
      record["count"] = to_string(count);
      emit(out, record);
    } else {
      out << count << '\n';
    }
    return kOk;
  }
  if (opt.mode != "list") throw UsageError("unknown roots mode '" + opt.mode + "'");

  if (count > opt.list_cap) {
    err << "simroot: " << count << " roots exceed the list cap of " << opt.list_cap
        << "; use 'roots count' or raise --cap\n";
    return kCapExceeded;
  }
  json roots = json::array();
  for_each_root(f, opt.k, [&](const PartialInjection& alpha) {
    if (common.json) {
      roots.push_back(format(alpha));
    } else {
      out << format(alpha) << '\n';
    }
    return true;
  });
  if (common.json) {
    json record = base_record(f);
    record["k"] = opt.k;
    record["count"] = to_string(count);
    record["roots"] = roots;
    emit(out, record);
  }
  return kOk;
}

// -- selftest ----------------------------------------------------------------

struct SelftestOptions {
  std::size_t max_ground = 4;
  unsigned max_k = 6;
  std::size_t limit = 6;
};

int cmd_selftest(const SelftestOptions& opt, const Common& common, std::ostream& out,
                 std::ostream& err) {
  require_k(opt.max_k);
  const std::size_t limit = std::min(opt.limit, kOracleGroundCap);
  if (opt.max_ground > limit) {
    err << "simroot: --max-ground " << opt.max_ground << " exceeds the limit of " << limit;
    if (opt.max_ground <= kOracleGroundCap) {
      err << "; pass --limit " << opt.max_ground << " to allow it";
    } else {
      err << " (exhaustive oracles stop at " << kOracleGroundCap << " points)";
    }
    err << '\n';
    return kCapExceeded;
  }

  std::uint64_t elements = 0;
  std::uint64_t checks = 0;
  for (std::size_t n = 0; n <= opt.max_ground; ++n) {
    const GroundSet ground = GroundSet::range(static_cast<Digit>(n));
    const auto all = enumerate_all(ground);
    elements += all.size();
    for (unsigned k = 1; k <= opt.max_k; ++k) {
      const auto table = brute_force_root_table(ground, k);
      for (const auto& f : all) {
        const RootCount formula = count_kth_roots(f, k);
        const RootCount generic = count_roots_generic(f, k);
        const auto it = table.find(f.code());
        const RootCount brute = it == table.end() ? 0 : it->second;
        ++checks;
        if (formula != generic || formula != brute) {
          if (common.json) {
            json record = base_record(f);
            record["k"] = k;
            record["count"] = to_string(formula);
            record["generic"] = to_string(generic);
            record["brute_force"] = to_string(brute);
            record["agree"] = false;
            emit(out, record);
          } else {
            out << "mismatch: " << format(f) << " on " << n << " points, k=" << k
                << ": formula " << formula << ", generic " << generic
                << ", brute force " << brute << '\n';
          }
          return kMismatch;
        }
      }
    }
  }
  if (common.json) {
    emit(out, json{{"max_ground", opt.max_ground},
                   {"max_k", opt.max_k},
                   {"elements", elements},
                   {"checks", checks},
                   {"agree", true}});
  } else {
    out << "checked " << elements << " elements on up to " << opt.max_ground
        << " points, k = 1.." << opt.max_k << " (" << checks
        << " checks): all agree\n";
  }
  return kOk;
}

// -- bench -------------------------------------------------------------------

/// "5^3,4^2" -> lengths {5,5,5,4,4}; a bare "5" means one path.
std::vector<unsigned> parse_profile(const std::string& profile_text) {
  std::vector<unsigned> lengths;
  std::stringstream ss(profile_text);
  std::string item;
  auto number = [&](const std::string& s) {
    if (s.empty() || s.size() > 9 ||
        !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw UsageError("malformed profile '" + profile_text + "'");
    }
    return static_cast<unsigned>(std::stoul(s));
  };
  while (std::getline(ss, item, ',')) {
    const auto caret = item.find('^');
    const unsigned length = number(item.substr(0, caret));
    const unsigned count = caret == std::string::npos ? 1 : number(item.substr(caret + 1));
    if (length == 0 || count == 0) throw UsageError("malformed profile '" + profile_text + "'");
    lengths.insert(lengths.end(), count, length);
  }
  if (lengths.empty() || profile_text.back() == ',') throw UsageError("malformed profile '" + profile_text + "'");
  return lengths;
}

PartialInjection synthesize(const std::vector<unsigned>& lengths) {
  Decomposition d;
  Digit next = 1;
  for (unsigned length : lengths) {
    std::vector<Digit> digits(length);
    for (auto& digit : digits) digit = next++;
    d.paths.emplace_back(std::move(digits));
  }
  return recompose(d, GroundSet::range(next - 1));
}

template <typename F>
json time_runs(unsigned reps, RootCount& result, F&& fn) {
  std::vector<double> ms;
  for (unsigned r = 0; r < reps; ++r) {
    const auto start = std::chrono::steady_clock::now();
    result = fn();
    const auto stop = std::chrono::steady_clock::now();
    ms.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
  }
  std::sort(ms.begin(), ms.end());
  double mean = 0;
  for (double v : ms) mean += v;
  mean /= static_cast<double>(ms.size());
  return json{{"runs", reps}, {"min_ms", ms.front()}, {"median_ms", ms[ms.size() / 2]},
              {"mean_ms", mean}, {"max_ms", ms.back()}};
}

int cmd_bench(const std::string& profile_text, unsigned k, unsigned reps, const Common& common,
              std::ostream& out) {
  require_k(k);
  if (reps == 0) throw UsageError("--reps must be at least 1");
  const auto lengths = parse_profile(profile_text);
  const PartialInjection f = synthesize(lengths);

  RootCount formula;
  json timings;
  timings["formula"] = time_runs(reps, formula, [&] { return count_roots_path_part(lengths, k); });

  std::optional<RootCount> generic;
  if (lengths.size() <= SetPartitionStream::default_cap) {
    RootCount value;
    timings["generic"] = time_runs(reps, value, [&] { return count_roots_generic(f, k); });
    generic = value;
  }
  const bool agree = !generic || *generic == formula;

  if (common.json) {
    json record = base_record(f);
    record["profile"] = profile_text;
    record["k"] = k;
    record["count"] = to_string(formula);
    record["timings"] = timings;
    if (generic) {
      record["generic_count"] = to_string(*generic);
      record["agree"] = agree;
    }
    emit(out, record);
  } else {
    const auto& ft = timings["formula"];
    out << "profile " << profile_text << ", k = " << k << ", " << lengths.size() << " paths\n"
        << "count: " << formula << '\n'
        << "formula: median " << ft["median_ms"].get<double>() << " ms over " << reps << " runs\n";
    if (generic) {
      const auto& gt = timings["generic"];
      out << "generic: median " << gt["median_ms"].get<double>() << " ms, "
          << (agree ? "counts agree" : "COUNTS DIFFER: " + to_string(*generic)) << '\n';
    } else {
      out << "generic: skipped (" << lengths.size() << " components exceed "
          << SetPartitionStream::default_cap << ")\n";
    }
  }
  return agree ? kOk : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Count and enumerate k-th roots of partial injections"};
  app.name("simroot");
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub, bool with_ground) {
    if (with_ground) {
      sub->add_option("--ground", common.ground,
                      "Ground set {1..N}; unmentioned points become isolated");
    }
    sub->add_flag("--json", common.json, "Emit one JSON record per line");
  };

  std::string element;
  unsigned k = 0;

  auto* decompose_cmd = app.add_subcommand("decompose", "Print the canonical path/cycle decomposition");
  decompose_cmd->add_option("element", element, "Element in path/cycle notation")->required();
  add_common(decompose_cmd, true);

  auto* power_cmd = app.add_subcommand("power", "Raise an element to the k-th power");
  power_cmd->add_option("element", element)->required();
  power_cmd->add_option("--k", k)->required();
  add_common(power_cmd, true);

  RootsOptions roots;
  auto* roots_cmd = app.add_subcommand("roots", "Count, list or verify k-th roots");
  roots_cmd->add_option("mode", roots.mode, "count | list | verify")
      ->required()
      ->check(CLI::IsMember({"count", "list", "verify"}));
  roots_cmd->add_option("element", roots.element, "The element sigma")->required();
  roots_cmd->add_option("root", roots.root, "Candidate root alpha (verify mode)");
  roots_cmd->add_option("--k", roots.k)->required();
  roots_cmd->add_option("--cap", roots.list_cap, "Refuse to list more roots than this");
  add_common(roots_cmd, true);

  SelftestOptions selftest;
  auto* selftest_cmd = app.add_subcommand("selftest", "Cross-check formulas against brute force");
  selftest_cmd->add_option("--max-ground", selftest.max_ground);
  selftest_cmd->add_option("--max-k", selftest.max_k);
  selftest_cmd->add_option("--limit", selftest.limit, "Largest ground size accepted");
  add_common(selftest_cmd, false);

  std::string profile;
  unsigned reps = 5;
  auto* bench_cmd = app.add_subcommand("bench", "Time the closed forms against the generic sum");
  bench_cmd->add_option("profile", profile, "Path lengths, e.g. 2^60 or 5^3,4^2")->required();
  bench_cmd->add_option("--k", k)->required();
  bench_cmd->add_option("--reps", reps);
  add_common(bench_cmd, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }

  try {
    if (*decompose_cmd) return cmd_decompose(element, common, out);
    if (*power_cmd) return cmd_power(element, k, common, out);
    if (*roots_cmd) return cmd_roots(roots, common, out, err);
    if (*selftest_cmd) return cmd_selftest(selftest, common, out, err);
    if (*bench_cmd) return cmd_bench(profile, k, reps, common, out);
  } catch (const ParseError& e) {
    err << "simroot: parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const KInvalid& e) {
    err << "simroot: " << e.what() << '\n';
    return kParseError;
  } catch (const UsageError& e) {
    err << "simroot: " << e.what() << '\n';
    return kParseError;
  } catch (const OverlapError& e) {
    err << "simroot: invalid element: " << e.what() << '\n';
    return kInvalidElement;
  } catch (const GroundError& e) {
    err << "simroot: invalid element: " << e.what() << '\n';
    return kInvalidElement;
  } catch (const CapExceeded& e) {
    err << "simroot: " << e.what() << "; try 'roots count' or a smaller input\n";
    return kCapExceeded;
  }
  return kParseError;
}

}  // namespace simroot::cli
