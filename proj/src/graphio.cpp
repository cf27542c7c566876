#include "brittle/graphio.hpp"

#include <bit>

namespace brittle {

namespace {

class BitWriter {
 public:
  void put(bool bit) {
    group = (group << 1) | (bit ? 1 : 0);
    if (++filled == 6) flush_group();
  }
  void put_value(std::uint64_t value, int bits) {
    for (int i = bits - 1; i >= 0; --i) put((value >> i) & 1);
  }
  // pads the last group with the given bit
  std::string finish(bool pad_bit) {
    while (filled != 0) put(pad_bit);
    return std::move(out);
  }

 private:
  void flush_group() {
    out.push_back(static_cast<char>(group + 63));
    group = 0;
    filled = 0;
  }
  std::string out;
  int group = 0;
  int filled = 0;
};

class BitReader {
 public:
  BitReader(std::string_view text, std::size_t start) : text_(text), pos_(start) {}

  bool exhausted() const { return pos_ >= text_.size() && filled_ == 0; }

  // Returns false when the stream ran out (padding-tolerant reads).
  bool try_get(bool& bit) {
    if (filled_ == 0) {
      if (pos_ >= text_.size()) return false;
      unsigned char c = static_cast<unsigned char>(text_[pos_]);
      if (c < 63 || c > 126) throw ParseError(pos_, "byte outside graph6 range 63..126");
      group_ = c - 63;
      filled_ = 6;
      ++pos_;
    }
    bit = (group_ >> (filled_ - 1)) & 1;
    --filled_;
    return true;
  }

  bool try_get_value(int bits, std::uint64_t& value) {
    value = 0;
    for (int i = 0; i < bits; ++i) {
      bool b;
      if (!try_get(b)) return false;
      value = (value << 1) | (b ? 1 : 0);
    }
    return true;
  }

  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_;
  int group_ = 0;
  int filled_ = 0;
};

void append_order(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    // 63 <= n <= 258047: '~' then three 6-bit groups, big-endian
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
}

int read_order(std::string_view text, std::size_t& pos) {
  if (pos >= text.size()) throw ParseError(pos, "missing vertex count");
  unsigned char c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) throw ParseError(pos, "byte outside graph6 range 63..126");
  if (c != 126) {
    ++pos;
    return c - 63;
  }
  if (pos + 1 < text.size() && static_cast<unsigned char>(text[pos + 1]) == 126)
    throw ParseError(pos, "graphs beyond 258047 vertices are not supported");
  if (pos + 4 > text.size()) throw ParseError(text.size(), "truncated long vertex count");
  long n = 0;
  for (int i = 1; i <= 3; ++i) {
    unsigned char d = static_cast<unsigned char>(text[pos + i]);
    if (d < 63 || d > 126) throw ParseError(pos + i, "byte outside graph6 range 63..126");
    n = (n << 6) | (d - 63);
  }
  pos += 4;
  return static_cast<int>(n);
}

int bits_for(int n) {  // bits to represent n-1, at least 1
  int k = 1;
  while ((1 << k) < n) ++k;
  return n <= 1 ? 1 : k;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  std::string out;
  append_order(out, g.n);
  BitWriter bits;
  for (int v = 1; v < g.n; ++v)
    for (int u = 0; u < v; ++u) bits.put(g.has_edge(u, v));
  out += bits.finish(false);
  return out;
}

Graph from_graph6(std::string_view text) {
  std::size_t pos = 0;
  int n = read_order(text, pos);
  if (n > kMaxVertices) throw ParseError(0, "graph exceeds the 63-vertex cap");
  Graph g(n);
  int nbits = n * (n - 1) / 2;
  std::size_t need = (static_cast<std::size_t>(nbits) + 5) / 6;
  if (text.size() - pos < need) throw ParseError(text.size(), "truncated adjacency bits");
  if (text.size() - pos > need) throw ParseError(pos + need, "trailing bytes after graph");
  BitReader bits(text, pos);
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      bool b;
      bits.try_get(b);  // length checked above
      if (b) g.add_edge(u, v);
    }
  }
  return g;
}

std::string to_sparse6(const Graph& g) {
  std::string out = ":";
  append_order(out, g.n);
  int k = bits_for(g.n);
  // edges sorted by larger endpoint, then smaller
  std::vector<std::pair<int, int>> es;
  for (auto [a, b] : g.edges()) es.emplace_back(b, a);
  std::sort(es.begin(), es.end());

  BitWriter bits;
  int v = 0;
  for (auto [w, u] : es) {
    if (w == v) {
      bits.put(false);
      bits.put_value(u, k);
    } else if (w == v + 1) {
      v = w;
      bits.put(true);
      bits.put_value(u, k);
    } else {
      v = w;
      bits.put(true);
      bits.put_value(w, k);
      bits.put(false);
      bits.put_value(u, k);
    }
  }
  // A run of 1-padding decodes as (1, 11..1); when n is a power of two and
  // the stream sits at v = n-2, that would decode as a spurious edge, so the
  // padding starts with a single 0 bit.
  if (g.n >= 2 && (g.n & (g.n - 1)) == 0 && v == g.n - 2) bits.put(false);
  return out + bits.finish(true);
}

Graph from_sparse6(std::string_view text) {
  if (text.empty() || text[0] != ':') throw ParseError(0, "sparse6 must start with ':'");
  std::size_t pos = 1;
  int n = read_order(text, pos);
  if (n > kMaxVertices) throw ParseError(1, "graph exceeds the 63-vertex cap");
  Graph g(n);
  int k = bits_for(n);
  BitReader bits(text, pos);
  long v = 0;
  for (;;) {
    bool b;
    if (!bits.try_get(b)) break;
    std::uint64_t x;
    if (!bits.try_get_value(k, x)) break;
    if (b) ++v;
    if (v >= n || static_cast<long>(x) >= n) break;  // padding
    if (static_cast<long>(x) > v) {
      v = static_cast<long>(x);
    } else if (static_cast<long>(x) == v) {
      throw ParseError(bits.pos(), "loop in sparse6 stream");
    } else {
      g.add_edge(static_cast<int>(x), static_cast<int>(v));
    }
  }
  return g;
}

Graph graph_from_text(std::string_view text) {
  std::size_t begin = text.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) throw ParseError(0, "empty input");
  std::size_t end = text.find_last_not_of(" \t\r\n");
  text = text.substr(begin, end - begin + 1);
  if (text.rfind(">>graph6<<", 0) == 0) text.remove_prefix(10);
  if (text.rfind(">>sparse6<<", 0) == 0) text.remove_prefix(11);
  if (!text.empty() && text[0] == ':') return from_sparse6(text);
  return from_graph6(text);
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.n;
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  if (g.has_labels()) j["labels"] = g.labels;
  return j;
}

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("graph JSON needs \"n\" and \"edges\"");
  Graph g(j.at("n").get<int>());
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge entries must be pairs");
    g.add_edge(e[0].get<int>(), e[1].get<int>());
  }
  if (j.contains("labels")) {
    auto ls = j.at("labels").get<std::vector<std::string>>();
    if (static_cast<int>(ls.size()) != g.n)
      throw std::invalid_argument("label list length must equal n");
    g.labels = std::move(ls);
  }
  return g;
}

}  // namespace brittle
