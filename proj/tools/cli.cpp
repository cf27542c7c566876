#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "brittle/bounds.hpp"
#include "brittle/brittleness.hpp"
#include "brittle/connectivity.hpp"
#include "brittle/errors.hpp"
#include "brittle/graph.hpp"
#include "brittle/graphio.hpp"
#include "brittle/linear_rank_width.hpp"
#include "brittle/verify.hpp"
#include "brittle/vertex_minor.hpp"
#include "json.hpp"

namespace {

using brittle::Graph;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Graph load_graph(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw UsageError("cannot open " + arg.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  if (!text.empty() && text[0] == '{') return brittle::graph_from_json(json::parse(text));
  return brittle::graph_from_text(text);
}

std::vector<int> parse_vertex_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (...) {
      throw UsageError("bad vertex '" + tok + "' (expected comma-separated indices)");
    }
  }
  return out;
}

std::vector<std::pair<int, int>> parse_edge_list(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto dash = tok.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 >= tok.size())
      throw UsageError("bad edge '" + tok + "' (expected u-v pairs)");
    try {
      out.emplace_back(std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1)));
    } catch (...) {
      throw UsageError("bad edge '" + tok + "'");
    }
  }
  return out;
}

std::string emit_graph(const Graph& g, const std::string& format) {
  if (format == "graph6") return brittle::to_graph6(g);
  if (format == "sparse6") return brittle::to_sparse6(g);
  if (format == "json") return brittle::graph_to_json(g).dump();
  throw UsageError("unknown format " + format);
}

json partition_json(const brittle::GroundContext& ctx, const brittle::Partition& p) {
  json blocks = json::array();
  for (const auto& block : p.blocks) {
    json names = json::array();
    for (int e : block) names.push_back(ctx.element_name(e));
    blocks.push_back(names);
  }
  return blocks;
}

int aggregate_exit(const std::vector<brittle::Report>& reports) {
  bool failed = false, inconclusive = false;
  for (const auto& r : reports) {
    if (r.status == "fail") failed = true;
    if (r.status == "inconclusive") inconclusive = true;
  }
  if (failed) return kExitFail;
  if (inconclusive) return kExitInconclusive;
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph connectivity, exact brittleness, vertex-minors, linear rank-width"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  // gen
  auto* gen = app.add_subcommand("gen", "emit a named graph family");
  std::string gen_family, gen_format = "graph6";
  std::vector<int> gen_params;
  gen->add_option("family", gen_family, "path|complete|star|complete_bipartite|empty")->required();
  gen->add_option("params", gen_params, "size parameters")->expected(-1);
  gen->add_option("--format", gen_format, "graph6|sparse6|json");

  // conn
  auto* conn = app.add_subcommand("conn", "evaluate a connectivity function");
  std::string conn_fn, conn_graph, conn_set;
  conn->add_option("fn", conn_fn, "vc|ec|matc|cutrank")->required();
  conn->add_option("graph", conn_graph, "graph6/sparse6 text or @file")->required();
  conn->add_option("set", conn_set, "vertices 'a,b,c' or edges 'a-b,c-d' for vc")->required();

  // brittleness
  auto* brit = app.add_subcommand("brittleness", "exact k-brittleness");
  std::string brit_fn, brit_graph;
  int brit_k = 1;
  int brit_ground_cap = 0;
  brit->add_option("fn", brit_fn, "vc|ec|matc|cutrank")->required();
  brit->add_option("graph", brit_graph)->required();
  brit->add_option("-k", brit_k, "block size cap")->required();
  brit->add_option("--max-ground", brit_ground_cap, "raise the exact-search ground cap");

  // lrw
  auto* lrw = app.add_subcommand("lrw", "exact linear rank-width");
  std::string lrw_graph;
  lrw->add_option("graph", lrw_graph)->required();

  // vm
  auto* vm = app.add_subcommand("vm", "vertex-minor operations");
  vm->require_subcommand(1);
  auto* vm_contains = vm->add_subcommand("contains", "search for a vertex-minor");
  std::string vmc_g, vmc_h;
  std::size_t vmc_limit = 0;
  vm_contains->add_option("graph", vmc_g)->required();
  vm_contains->add_option("minor", vmc_h)->required();
  vm_contains->add_option("--limit", vmc_limit, "state cap (default from BRITTLE_STATE_LIMIT)");
  auto* vm_lc = vm->add_subcommand("lc", "apply local complementations");
  std::string vmlc_g, vmlc_verts;
  vm_lc->add_option("graph", vmlc_g)->required();
  vm_lc->add_option("verts", vmlc_verts, "comma-separated vertices, applied left to right")
      ->required();
  auto* vm_pivot = vm->add_subcommand("pivot", "pivot an edge");
  std::string vmp_g, vmp_verts;
  vm_pivot->add_option("graph", vmp_g)->required();
  vm_pivot->add_option("verts", vmp_verts, "the edge 'u,v'")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "run verification claims");
  std::vector<std::string> verify_ids;
  std::string verify_scale = "small";
  std::uint64_t verify_seed = 20250607;
  verify->add_option("claims", verify_ids, "claim ids, or 'all'")->required();
  verify->add_option("--scale", verify_scale, "small|medium");
  verify->add_option("--seed", verify_seed, "rng seed");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "evaluate a partition threshold");
  std::string bounds_family;
  int bounds_k = 1;
  long long bounds_n = 1;
  bool bounds_toy = false;
  bounds->add_option("family", bounds_family, "vertex|edge|matching|rank")->required();
  bounds->add_option("-k", bounds_k)->required();
  bounds->add_option("-n", bounds_n)->required();
  bounds->add_flag("--toy-rules", bounds_toy,
                   "rank family only: replace the default ramsey/dov rules with tiny "
                   "demonstration rules (values are then illustrative, not bounds)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*gen) {
      auto kind = brittle::family_from_name(gen_family);
      if (!kind) throw UsageError("unknown family " + gen_family);
      Graph g = brittle::make_family(*kind, gen_params);
      std::cout << emit_graph(g, as_json ? "json" : gen_format) << "\n";
      return kExitPass;
    }

    if (*conn) {
      auto kind = brittle::conn_from_name(conn_fn);
      if (!kind) throw UsageError("unknown connectivity function " + conn_fn);
      Graph g = load_graph(conn_graph);
      int value = 0;
      if (brittle::edge_ground(*kind)) {
        value = brittle::eval(*kind, g, parse_edge_list(conn_set));
      } else {
        value = brittle::eval(*kind, g, brittle::indices_to_set(parse_vertex_list(conn_set)));
      }
      if (as_json)
        std::cout << json{{"fn", conn_fn}, {"set", conn_set}, {"value", value}}.dump() << "\n";
      else
        std::cout << value << "\n";
      return kExitPass;
    }

    if (*brit) {
      auto kind = brittle::conn_from_name(brit_fn);
      if (!kind) throw UsageError("unknown connectivity function " + brit_fn);
      Graph g = load_graph(brit_graph);
      brittle::SolverLimits limits;
      if (brit_ground_cap > 0) limits.max_ground = brit_ground_cap;
      brittle::BrittlenessResult res = brittle::brittleness(*kind, g, brit_k, limits);
      auto ctx = brittle::GroundContext::make(*kind, g);
      if (as_json) {
        json j{{"fn", brit_fn},
               {"k", brit_k},
               {"value", res.value},
               {"partition", partition_json(ctx, res.partition)},
               {"worst_union", res.worst_union}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "value " << res.value << "\n";
        std::cout << "partition";
        for (const auto& block : res.partition.blocks) {
          std::cout << " [";
          for (std::size_t i = 0; i < block.size(); ++i)
            std::cout << (i ? " " : "") << ctx.element_name(block[i]);
          std::cout << "]";
        }
        std::cout << "\nworst-union blocks";
        for (int b : res.worst_union) std::cout << " " << b;
        std::cout << "\n";
      }
      return kExitPass;
    }

    if (*lrw) {
      Graph g = load_graph(lrw_graph);
      brittle::LrwResult res = brittle::linear_rank_width(g);
      if (as_json) {
        std::cout << json{{"value", res.value}, {"layout", res.layout.order}}.dump() << "\n";
      } else {
        std::cout << "value " << res.value << "\nlayout";
        for (int v : res.layout.order) std::cout << " " << v;
        std::cout << "\n";
      }
      return kExitPass;
    }

    if (*vm_contains) {
      Graph g = load_graph(vmc_g);
      Graph h = load_graph(vmc_h);
      brittle::VertexMinorResult res = brittle::has_vertex_minor(g, h, vmc_limit);
      std::string status = res.status == brittle::SearchStatus::Found        ? "found"
                           : res.status == brittle::SearchStatus::Absent     ? "absent"
                                                                             : "inconclusive";
      if (as_json) {
        json j{{"status", status}, {"states", res.states}};
        if (res.status == brittle::SearchStatus::Found) j["word"] = brittle::word_to_string(res.word);
        std::cout << j.dump() << "\n";
      } else if (res.status == brittle::SearchStatus::Found) {
        std::cout << "found: " << brittle::word_to_string(res.word) << "\n";
      } else {
        std::cout << status << " after " << res.states << " states\n";
      }
      return res.status == brittle::SearchStatus::Found    ? kExitPass
             : res.status == brittle::SearchStatus::Absent ? kExitFail
                                                           : kExitInconclusive;
    }

    if (*vm_lc) {
      Graph g = load_graph(vmlc_g);
      for (int v : parse_vertex_list(vmlc_verts)) g = brittle::local_complement(g, v);
      std::cout << emit_graph(g, as_json ? "json" : "graph6") << "\n";
      return kExitPass;
    }

    if (*vm_pivot) {
      Graph g = load_graph(vmp_g);
      auto verts = parse_vertex_list(vmp_verts);
      if (verts.size() != 2) throw UsageError("pivot needs exactly two vertices 'u,v'");
      std::cout << emit_graph(brittle::pivot(g, verts[0], verts[1]), as_json ? "json" : "graph6")
                << "\n";
      return kExitPass;
    }

    if (*verify) {
      auto scale = brittle::scale_from_name(verify_scale);
      if (!scale) throw UsageError("unknown scale " + verify_scale + " (use small or medium)");
      std::vector<std::string> ids;
      if (verify_ids.size() == 1 && verify_ids[0] == "all") {
        for (const auto& c : brittle::all_claims()) ids.push_back(c.id);
      } else {
        for (const auto& id : verify_ids) {
          if (!brittle::find_claim(id)) {
            std::string known;
            for (const auto& c : brittle::all_claims()) known += "\n  " + c.id;
            throw UsageError("unknown claim id '" + id + "'; known claims:" + known);
          }
          ids.push_back(id);
        }
      }
      std::vector<brittle::Report> reports = brittle::run_claims(ids, *scale, verify_seed);
      if (as_json) {
        json j = json::array();
        for (const auto& r : reports) j.push_back(r.to_json());
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& r : reports) {
          std::string tag = r.status == "pass"           ? "[PASS]"
                            : r.status == "inconclusive" ? "[????]"
                                                         : "[FAIL]";
          std::cout << tag << " " << r.claim << " (" << r.elapsed_ms << " ms)\n";
          if (r.status != "pass") std::cout << "       " << r.witness.dump() << "\n";
        }
      }
      return aggregate_exit(reports);
    }

    if (*bounds) {
      auto family = brittle::bound_family_from_name(bounds_family);
      if (!family) throw UsageError("unknown bound family " + bounds_family);
      brittle::BoundRules rules = brittle::default_bound_rules();
      if (bounds_toy) {
        rules.ramsey = [](const brittle::BigInt& n, const brittle::BigInt& k) { return n + k; };
        rules.dov = [](const brittle::BigInt& n) { return 2 * n + 1; };
      }
      brittle::BigInt value = brittle::bound_ell(*family, bounds_k, bounds_n, rules);
      if (as_json)
        std::cout << json{{"family", bounds_family},
                          {"k", bounds_k},
                          {"n", bounds_n},
                          {"value", value.str()},
                          {"toy_rules", bounds_toy}}
                         .dump()
                  << "\n";
      else
        std::cout << value.str() << "\n";
      return kExitPass;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const brittle::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const brittle::ResourceLimit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
