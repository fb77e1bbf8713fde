// slablab: enumeration, twist invariants, flip graphs, constructions,
// statement checks and floor-diagram rendering for slab/domino/mixed
// tilings of cubiculated regions.
//
// Exit codes: 0 ok (including reported refutations), 1 internal error,
// 2 usage error.

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "slablab/construct.hpp"
#include "slablab/enumerate.hpp"
#include "slablab/flipgraph.hpp"
#include "slablab/io.hpp"
#include "slablab/render.hpp"
#include "slablab/threads.hpp"
#include "slablab/transform.hpp"
#include "slablab/twist.hpp"
#include "slablab/verify.hpp"

namespace {

using namespace slablab;

struct RegionSel {
  std::vector<int> box;
  std::string file;

  void attach(CLI::App* cmd) {
    cmd->add_option("--box", box, "box extents L,M,N")->delimiter(',');
    cmd->add_option("--region", file, "region JSON file");
  }
  Region resolve() const {
    if (!box.empty() && !file.empty())
      throw std::invalid_argument("--box and --region are mutually exclusive");
    if (!box.empty()) {
      if (box.size() != 3 || box[0] <= 0 || box[1] <= 0 || box[2] <= 0)
        throw std::invalid_argument("--box expects three positive extents");
      return Region::box(box[0], box[1], box[2]);
    }
    if (file.empty())
      throw std::invalid_argument("one of --box or --region is required");
    return load_region(file);
  }
};

GoodPair parse_pair(const std::string& s) {
  if (s.size() == 3 && s[1] == ',' && (s[2] == '0' || s[2] == '1')) {
    const char c = char(std::tolower(static_cast<unsigned char>(s[0])));
    const int parity = s[2] - '0';
    if (c == 'x') return GoodPair{Axis::X, parity};
    if (c == 'y') return GoodPair{Axis::Y, parity};
    if (c == 'z') return GoodPair{Axis::Z, parity};
  }
  throw std::invalid_argument("--pair expects axis,parity (e.g. z,0)");
}

void write_output(const std::string& path, const std::string& body) {
  if (path.empty()) {
    std::cout << body;
    if (!body.empty() && body.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << body;
}

void report_construct(const Tiling& t, const std::string& path, bool json) {
  save_json(tiling_to_json(t), path);
  const TripleTwist tt = triple_twist(t);
  if (json) {
    nlohmann::json j;
    j["path"] = path;
    j["pieces"] = t.pieces().size();
    j["ttw"] = {tt.x, tt.y, tt.z};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "wrote " << path << ": " << t.pieces().size()
              << " pieces, TTw=" << tt.to_string() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slab and domino tilings: enumeration, twists, flip graphs"};
  app.require_subcommand(1);

  bool json = false;
  int threads = 0;
  std::uint64_t seed = 0;
  app.add_flag("--json", json, "machine-readable output");
  app.add_option("--threads", threads,
                 "worker threads (default: SLABLAB_THREADS or 1)");
  app.add_option("--seed", seed, "seed for randomized traversal orders");

  std::function<void()> action;

  auto* enum_cmd = app.add_subcommand("enumerate", "list tilings of a region");
  RegionSel enum_sel;
  enum_sel.attach(enum_cmd);
  std::string enum_family;
  std::uint64_t enum_limit = 0;
  enum_cmd->add_option("--family", enum_family, "domino|slab|mixed")
      ->required();
  enum_cmd->add_option("--limit", enum_limit, "stop after K tilings");
  enum_cmd->callback([&] {
    action = [&] {
      const Region r = enum_sel.resolve();
      const Family f = family_from_name(enum_family);
      std::uint64_t n = 0;
      enumerate(r, f, [&](const Tiling& t) {
        if (enum_limit && n == enum_limit) return false;
        ++n;
        if (json) {
          std::cout << to_json_line(t) << "\n";
        } else {
          std::cout << "#" << n - 1;
          for (const Piece& p : t.pieces()) std::cout << " " << to_string(p);
          std::cout << "\n";
        }
        return true;
      });
      if (!json)
        std::cout << n << (n == 1 ? " tiling" : " tilings") << "\n";
    };
  });

  auto* count_cmd = app.add_subcommand("count", "count tilings of a region");
  RegionSel count_sel;
  count_sel.attach(count_cmd);
  std::string count_family;
  count_cmd->add_option("--family", count_family, "domino|slab|mixed")
      ->required();
  count_cmd->callback([&] {
    action = [&] {
      const Region r = count_sel.resolve();
      const Family f = family_from_name(count_family);
      const std::uint64_t n = count_tilings(r, f);
      if (json) {
        nlohmann::json j;
        j["region"] = region_to_json(r);
        j["family"] = family_name(f);
        j["count"] = n;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << n << "\n";
      }
    };
  });

  auto* twist_cmd =
      app.add_subcommand("twist", "twist of a tiling (optionally per pair)");
  std::string twist_file, twist_pair;
  twist_cmd->add_option("--tiling", twist_file, "tiling JSON file")->required();
  twist_cmd->add_option("--pair", twist_pair,
                        "good pair axis,parity (default z,0 for slab/mixed)");
  twist_cmd->callback([&] {
    action = [&] {
      const Tiling t = load_tiling(twist_file);
      if (t.family() == Family::domino) {
        if (!twist_pair.empty())
          throw std::invalid_argument(
              "--pair applies to slab and mixed tilings only");
        const Quarters q = twist(t);
        if (json) {
          nlohmann::json j;
          j["family"] = family_name(t.family());
          j["twist"] = q.to_string();
          j["twist_quarters"] = q.quarters;
          std::cout << j.dump() << "\n";
        } else {
          std::cout << q.to_string() << "\n";
        }
        return;
      }
      const GoodPair k = twist_pair.empty() ? canonical_pair(Axis::Z)
                                            : parse_pair(twist_pair);
      const std::int64_t v = t.family() == Family::mixed
                                 ? mixed_twist(t, k)
                                 : twist_for_pair(t, k);
      if (json) {
        nlohmann::json j;
        j["family"] = family_name(t.family());
        j["pair"] = k.name();
        j["twist"] = v;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << v << "\n";
      }
    };
  });

  auto* ttw_cmd =
      app.add_subcommand("ttw", "triple twist of a slab tiling of a box");
  std::string ttw_file;
  ttw_cmd->add_option("--tiling", ttw_file, "tiling JSON file")->required();
  ttw_cmd->callback([&] {
    action = [&] {
      const TripleTwist tt = triple_twist(load_tiling(ttw_file));
      if (json) {
        nlohmann::json j;
        j["ttw"] = {tt.x, tt.y, tt.z};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << tt.to_string() << "\n";
      }
    };
  });

  auto* comp_cmd =
      app.add_subcommand("components", "flip components of all tilings");
  RegionSel comp_sel;
  comp_sel.attach(comp_cmd);
  std::string comp_family;
  std::uint64_t comp_budget = 10'000'000;
  comp_cmd->add_option("--family", comp_family, "domino|slab|mixed")
      ->required();
  comp_cmd->add_option("--budget", comp_budget, "max tilings enumerated");
  comp_cmd->callback([&] {
    action = [&] {
      const Region r = comp_sel.resolve();
      const Family f = family_from_name(comp_family);
      const FlipGraphReport rep = components(r, f, comp_budget, seed);
      if (json) {
        std::cout << report_to_json(rep) << "\n";
        return;
      }
      std::cout << "tilings: " << rep.tiling_count
                << (rep.truncated ? " (budget exhausted)" : "") << "\n";
      std::cout << "components: " << rep.components.size() << "\n";
      for (const ComponentInfo& c : rep.components)
        std::cout << "  size=" << c.size << " invariant=" << c.invariant
                  << (c.rigid ? " rigid" : "") << " rep=" << to_hex(c.representative)
                  << "\n";
    };
  });

  auto* construct_cmd =
      app.add_subcommand("construct", "generate a named tiling family member");
  construct_cmd->require_subcommand(1);

  auto* rigid_cmd = construct_cmd->add_subcommand(
      "rigid", "flip-rigid staircase pattern on a 2Nx2Nx5l box");
  int rigid_n = 3, rigid_layers = 1;
  std::string rigid_out;
  rigid_cmd->add_option("N", rigid_n, "half the footprint side (>= 3)")
      ->required();
  rigid_cmd->add_option("layers", rigid_layers, "stacked stories (default 1)");
  rigid_cmd->add_option("-o,--output", rigid_out, "output tiling file")
      ->required();
  rigid_cmd->callback([&] {
    action = [&] {
      report_construct(rigid_pattern(rigid_n, rigid_layers), rigid_out, json);
    };
  });

  auto* sol_cmd = construct_cmd->add_subcommand(
      "solenoid", "interlocked flux tubes on a 6nx6nx8n box");
  int sol_n = 1, sol_u = 0, sol_v = 0;
  std::string sol_out;
  sol_cmd->add_option("n", sol_n, "scale (>= 1)")->required();
  sol_cmd->add_option("u", sol_u, "first flux, |u| <= n^2")->required();
  sol_cmd->add_option("v", sol_v, "second flux, |v| <= n^2")->required();
  sol_cmd->add_option("-o,--output", sol_out, "output tiling file")->required();
  sol_cmd->callback([&] {
    action = [&] {
      report_construct(solenoid(sol_n, {sol_u, sol_v}), sol_out, json);
    };
  });

  auto* cubes_cmd = construct_cmd->add_subcommand(
      "composed", "subcube composition on a 16n^3 box realizing TTw = t");
  int cubes_n = 1;
  std::vector<std::int64_t> cubes_t;
  std::string cubes_out;
  cubes_cmd->add_option("n", cubes_n, "scale (>= 1)")->required();
  cubes_cmd->add_option("t", cubes_t, "target triple tx ty tz (even, |t| <= 2n^4)")
      ->expected(3);
  cubes_cmd->add_option("-o,--output", cubes_out, "output tiling file")
      ->required();
  cubes_cmd->callback([&] {
    action = [&] {
      if (cubes_t.size() != 3)
        throw std::invalid_argument("composed expects three target values");
      report_construct(
          composed(cubes_n, TripleTwist{cubes_t[0], cubes_t[1], cubes_t[2]}),
          cubes_out, json);
    };
  });

  auto* verify_cmd =
      app.add_subcommand("verify", "machine-check the named statements");
  std::string verify_id = "all";
  std::uint64_t verify_budget = 10'000'000;
  verify_cmd->add_option("statement", verify_id, "statement id or 'all'");
  verify_cmd->add_option("--budget", verify_budget,
                         "max tilings / nodes per statement");
  verify_cmd->callback([&] {
    action = [&] {
      VerifyOptions opts;
      opts.budget = verify_budget;
      opts.seed = seed;
      std::vector<VerificationOutcome> outcomes;
      if (verify_id == "all")
        outcomes = verify_all(opts);
      else
        outcomes.push_back(verify_statement(verify_id, opts));
      for (const VerificationOutcome& o : outcomes) {
        if (json) {
          std::cout << outcome_to_json_line(o) << "\n";
          continue;
        }
        std::cout << verify_status_name(o.status) << "\t" << o.id << "\t"
                  << o.scope << " | " << o.detail;
        for (const std::string& w : o.witnesses) std::cout << " witness:" << w;
        std::cout << "\n";
      }
    };
  });

  auto* render_cmd =
      app.add_subcommand("render", "floor diagram of a tiling");
  std::string render_file, render_format, render_out;
  render_cmd->add_option("--tiling", render_file, "tiling JSON file")
      ->required();
  render_cmd->add_option("--format", render_format, "ascii|svg")->required();
  render_cmd->add_option("-o,--output", render_out,
                         "output file (default stdout)");
  render_cmd->callback([&] {
    action = [&] {
      const Tiling t = load_tiling(render_file);
      if (render_format == "ascii")
        write_output(render_out, render_ascii(t));
      else if (render_format == "svg")
        write_output(render_out, render_svg(t));
      else
        throw std::invalid_argument("--format expects ascii or svg");
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (threads > 0) set_thread_count(threads);
  try {
    if (action) action();
    return 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
