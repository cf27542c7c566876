#include "brittle/vertex_minor.hpp"

#include <cstdlib>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "brittle/errors.hpp"
#include "brittle/isomorphism.hpp"

namespace brittle {

Graph local_complement(const Graph& g, int v) {
  g.check_vertex(v);
  Graph out = g;
  std::uint64_t nb = g.adj[v];
  for (std::uint64_t s = nb; s; s &= s - 1) {
    int x = lowest_bit(s);
    out.adj[x] ^= nb & ~(1ull << x);
  }
  return out;
}

Graph pivot(const Graph& g, int u, int v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (!g.has_edge(u, v)) throw std::invalid_argument("pivot requires an edge");
  std::uint64_t cu = g.adj[u] & ~g.adj[v] & ~(1ull << v);
  std::uint64_t cv = g.adj[v] & ~g.adj[u] & ~(1ull << u);
  std::uint64_t cb = g.adj[u] & g.adj[v];
  Graph out = g;
  auto flip_between = [&](std::uint64_t a, std::uint64_t b) {
    for (std::uint64_t s = a; s; s &= s - 1) {
      int x = lowest_bit(s);
      out.adj[x] ^= b;
    }
    for (std::uint64_t s = b; s; s &= s - 1) {
      int x = lowest_bit(s);
      out.adj[x] ^= a;
    }
  };
  flip_between(cu, cv);
  flip_between(cu, cb);
  flip_between(cv, cb);
  // swap the roles of u and v
  std::swap(out.adj[u], out.adj[v]);
  for (int x = 0; x < out.n; ++x) {
    std::uint64_t bu = (out.adj[x] >> u) & 1, bv = (out.adj[x] >> v) & 1;
    out.adj[x] &= ~((1ull << u) | (1ull << v));
    out.adj[x] |= (bu << v) | (bv << u);
  }
  return out;
}

Graph apply_word(const Graph& g, const LCWord& word) {
  Graph cur = g;
  for (const LCOp& op : word.ops) {
    switch (op.kind) {
      case LCOp::Lc: cur = local_complement(cur, op.u); break;
      case LCOp::Pivot: cur = pivot(cur, op.u, op.v); break;
      case LCOp::Del: cur = delete_vertex(cur, op.u); break;
    }
  }
  return cur;
}

std::string word_to_string(const LCWord& word) {
  std::string out;
  for (const LCOp& op : word.ops) {
    if (!out.empty()) out += "; ";
    switch (op.kind) {
      case LCOp::Lc: out += "lc " + std::to_string(op.u); break;
      case LCOp::Pivot: out += "pv " + std::to_string(op.u) + " " + std::to_string(op.v); break;
      case LCOp::Del: out += "del " + std::to_string(op.u); break;
    }
  }
  return out;
}

LCWord word_from_string(const std::string& text) {
  LCWord word;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    std::stringstream ps(part);
    std::string tok;
    if (!(ps >> tok)) continue;
    LCOp op;
    if (tok == "lc") {
      op.kind = LCOp::Lc;
      if (!(ps >> op.u)) throw std::invalid_argument("lc needs a vertex");
    } else if (tok == "pv") {
      op.kind = LCOp::Pivot;
      if (!(ps >> op.u >> op.v)) throw std::invalid_argument("pv needs two vertices");
    } else if (tok == "del") {
      op.kind = LCOp::Del;
      if (!(ps >> op.u)) throw std::invalid_argument("del needs a vertex");
    } else {
      throw std::invalid_argument("unknown word token: " + tok);
    }
    word.ops.push_back(op);
  }
  return word;
}

std::size_t default_state_limit() {
  if (const char* env = std::getenv("BRITTLE_STATE_LIMIT")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 2'000'000;
}

namespace {

std::size_t effective_limit(std::size_t limit) { return limit == 0 ? default_state_limit() : limit; }

// exact labeled key for small states, canonical key from 8 vertices up
std::string state_key(const Graph& g, bool canonical) {
  if (canonical) return canonical_form(g).bytes();
  std::string out;
  out.reserve(1 + 8 * g.adj.size());
  out.push_back(static_cast<char>(g.n));
  for (std::uint64_t r : g.adj)
    for (int b = 0; b < 8; ++b) out.push_back(static_cast<char>((r >> (8 * b)) & 0xff));
  return out;
}

}  // namespace

Orbit orbit(const Graph& g, std::size_t limit) {
  limit = effective_limit(limit);
  bool canonical = g.n >= 8;
  Orbit out;
  std::unordered_set<std::string> visited;
  visited.insert(state_key(g, canonical));
  out.graphs.push_back(g);
  std::size_t next = 0;
  while (next < out.graphs.size()) {
    Graph cur = out.graphs[next++];
    for (int v = 0; v < cur.n; ++v) {
      if (!cur.adj[v]) continue;  // isolated vertices fix the graph
      Graph succ = local_complement(cur, v);
      if (visited.insert(state_key(succ, canonical)).second) {
        if (out.graphs.size() >= limit) {
          out.limit_hit = true;
          return out;
        }
        out.graphs.push_back(std::move(succ));
      }
    }
  }
  return out;
}

SearchStatus orbit_contains(const Graph& g, const Graph& h, std::size_t limit) {
  limit = effective_limit(limit);
  if (g.n != h.n) return SearchStatus::Absent;  // complementations fix n
  bool canonical = g.n >= 8;
  std::unordered_set<std::string> visited;
  std::vector<Graph> frontier;
  visited.insert(state_key(g, canonical));
  frontier.push_back(g);
  std::size_t next = 0;
  while (next < frontier.size()) {
    Graph cur = frontier[next++];
    if (is_isomorphic(cur, h)) return SearchStatus::Found;
    for (int v = 0; v < cur.n; ++v) {
      if (!cur.adj[v]) continue;
      Graph succ = local_complement(cur, v);
      if (visited.insert(state_key(succ, canonical)).second) {
        if (frontier.size() >= limit) return SearchStatus::Inconclusive;
        frontier.push_back(std::move(succ));
      }
    }
  }
  return SearchStatus::Absent;
}

namespace {

struct StateRec {
  Graph g;
  long parent = -1;
  LCOp op;  // op applied to the parent to reach this state
};

LCWord word_to_state(const std::vector<StateRec>& states, long idx) {
  std::vector<LCOp> rev;
  for (long cur = idx; cur > 0; cur = states[cur].parent) rev.push_back(states[cur].op);
  LCWord word;
  word.ops.assign(rev.rbegin(), rev.rend());
  return word;
}

}  // namespace

VertexMinorResult has_vertex_minor(const Graph& g, const Graph& h, std::size_t limit) {
  limit = effective_limit(limit);
  VertexMinorResult res;
  if (h.n > g.n) {
    res.status = SearchStatus::Absent;
    return res;
  }
  bool canonical = g.n >= 8;
  std::unordered_set<std::string> visited;
  std::vector<StateRec> states;
  std::deque<long> queue;
  visited.insert(state_key(g, canonical));
  states.push_back({g, -1, {}});
  queue.push_back(0);

  while (!queue.empty()) {
    long idx = queue.front();
    queue.pop_front();
    Graph cur = states[idx].g;  // copy: states may reallocate below
    ++res.states;
    if (cur.n >= h.n) {
      if (auto image = find_induced_pattern(cur, h)) {
        LCWord word = word_to_state(states, idx);
        // delete everything outside the copy, highest index first so the
        // earlier indices stay valid
        std::vector<int> extra = set_to_indices(cur.vertex_set() & ~*image);
        for (auto it = extra.rbegin(); it != extra.rend(); ++it)
          word.ops.push_back({LCOp::Del, *it, -1});
        res.status = SearchStatus::Found;
        res.word = std::move(word);
        return res;
      }
    }

    auto push_state = [&](Graph&& succ, LCOp op) -> bool {
      if (!visited.insert(state_key(succ, canonical)).second) return false;
      if (states.size() >= limit) return true;  // signals limit hit
      states.push_back({std::move(succ), idx, op});
      queue.push_back(static_cast<long>(states.size()) - 1);
      return false;
    };
    for (int v = 0; v < cur.n; ++v) {
      if (!cur.adj[v]) continue;
      if (push_state(local_complement(cur, v), {LCOp::Lc, v, -1})) {
        res.status = SearchStatus::Inconclusive;
        return res;
      }
    }
    // deletions only while the state can stay at least as large as h
    if (cur.n > h.n) {
      for (int v = 0; v < cur.n; ++v) {
        if (push_state(delete_vertex(cur, v), {LCOp::Del, v, -1})) {
          res.status = SearchStatus::Inconclusive;
          return res;
        }
      }
    }
  }
  res.status = SearchStatus::Absent;
  return res;
}

std::optional<ConstructionName> construction_from_name(const std::string& name) {
  if (name == "mat_ks") return ConstructionName::MatKS;
  if (name == "mat_kk") return ConstructionName::MatKK;
  if (name == "antimat_ss") return ConstructionName::AntimatSS;
  if (name == "antimat_ks") return ConstructionName::AntimatKS;
  if (name == "antimat_kk") return ConstructionName::AntimatKK;
  if (name == "tri_kk") return ConstructionName::TriKK;
  return std::nullopt;
}

const char* construction_name(ConstructionName c) {
  switch (c) {
    case ConstructionName::MatKS: return "mat_ks";
    case ConstructionName::MatKK: return "mat_kk";
    case ConstructionName::AntimatSS: return "antimat_ss";
    case ConstructionName::AntimatKS: return "antimat_ks";
    case ConstructionName::AntimatKK: return "antimat_kk";
    case ConstructionName::TriKK: return "tri_kk";
  }
  return "?";
}

Construction construction(ConstructionName name, int n) {
  auto require = [&](int threshold) {
    if (n < threshold)
      throw std::invalid_argument(std::string(construction_name(name)) + " needs n >= " +
                                  std::to_string(threshold));
  };
  // side ordering: v_i at index i-1, w_j at index n+j-1
  int v1 = 0, w1 = n, w2 = n + 1;
  Construction out;
  switch (name) {
    case ConstructionName::MatKS:
      require(2);
      out.input = join(make_complete(n), make_empty(n), JoinKind::Mat);
      out.word.ops = {{LCOp::Del, w1, -1}, {LCOp::Lc, v1, -1}, {LCOp::Del, v1, -1}};
      out.target = join(make_empty(n - 1), make_empty(n - 1), JoinKind::Mat);
      break;
    case ConstructionName::MatKK:
      require(3);
      out.input = join(make_complete(n), make_complete(n), JoinKind::Mat);
      // delete v1 and w2, complement at v2 then w1, delete both
      out.word.ops = {{LCOp::Del, w2, -1}, {LCOp::Del, v1, -1},
                      {LCOp::Lc, 0, -1},        // v2 after the deletions
                      {LCOp::Lc, n - 1, -1},    // w1 after the deletions
                      {LCOp::Del, n - 1, -1}, {LCOp::Del, 0, -1}};
      out.target = join(make_empty(n - 2), make_empty(n - 2), JoinKind::Mat);
      break;
    case ConstructionName::AntimatSS:
      require(3);
      out.input = join(make_empty(n), make_empty(n), JoinKind::Antimat);
      // delete v1 and w2, pivot v2w1, delete both
      out.word.ops = {{LCOp::Del, w2, -1}, {LCOp::Del, v1, -1},
                      {LCOp::Pivot, 0, n - 1},
                      {LCOp::Del, n - 1, -1}, {LCOp::Del, 0, -1}};
      out.target = join(make_empty(n - 2), make_empty(n - 2), JoinKind::Mat);
      break;
    case ConstructionName::AntimatKS:
      require(3);
      out.input = join(make_complete(n), make_empty(n), JoinKind::Antimat);
      // first stage lands on the matched independent/clique pair, then the
      // mat_ks recipe applies with the clique side in the leading role
      out.word.ops = {{LCOp::Del, w1, -1}, {LCOp::Lc, v1, -1}, {LCOp::Del, v1, -1},
                      {LCOp::Del, 0, -1},      // v2 of the intermediate
                      {LCOp::Lc, n - 2, -1},   // w2 of the intermediate
                      {LCOp::Del, n - 2, -1}};
      out.checkpoint = {3u, join(make_empty(n - 1), make_complete(n - 1), JoinKind::Mat)};
      out.target = join(make_empty(n - 2), make_empty(n - 2), JoinKind::Mat);
      break;
    case ConstructionName::AntimatKK:
      require(2);
      out.input = join(make_complete(n), make_complete(n), JoinKind::Antimat);
      out.word.ops = {{LCOp::Del, w1, -1}, {LCOp::Lc, v1, -1}, {LCOp::Del, v1, -1}};
      out.target = join(make_empty(n - 1), make_empty(n - 1), JoinKind::Mat);
      break;
    case ConstructionName::TriKK:
      require(2);
      out.input = join(make_complete(n), make_complete(n), JoinKind::Tri);
      out.word.ops = {{LCOp::Del, w1, -1}, {LCOp::Lc, v1, -1}, {LCOp::Del, v1, -1}};
      out.target = join(make_empty(n - 1), make_complete(n - 1), JoinKind::Tri);
      break;
  }
  return out;
}

}  // namespace brittle
