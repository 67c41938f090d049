#include "wdc/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "wdc/error.hpp"
#include "wdc/faces.hpp"

namespace wdc {

namespace {

struct Line {
  int number;
  std::vector<std::string_view> tokens;
};

// Non-blank, non-comment lines split on whitespace.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t') ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (line.tokens.empty() || line.tokens.front().front() == '#') continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw Error(ErrorCode::InvalidInput, "line " + std::to_string(line) + ": " + what);
}

class Reader {
 public:
  explicit Reader(std::string_view text) : lines_(tokenize(text)) {}

  bool done() const { return at_ >= lines_.size(); }
  int number() const { return done() ? (lines_.empty() ? 0 : lines_.back().number) : lines_[at_].number; }

  const Line& next(const char* expecting) {
    if (done()) fail(number(), std::string("unexpected end of input, expected ") + expecting);
    return lines_[at_++];
  }

  bool peek_keyword(std::string_view word) const { return !done() && lines_[at_].tokens.front() == word; }

 private:
  std::vector<Line> lines_;
  std::size_t at_ = 0;
};

long long to_int(const Line& line, std::string_view token, long long lo, long long hi) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    fail(line.number, "expected an integer, got '" + std::string(token) + "'");
  }
  if (value < lo || value > hi) fail(line.number, "value " + std::string(token) + " out of range");
  return value;
}

void expect_arity(const Line& line, std::size_t count) {
  if (line.tokens.size() != count) fail(line.number, "expected " + std::to_string(count) + " fields");
}

int read_vertex_count(Reader& in) {
  const Line& line = in.next("vertices");
  if (line.tokens.front() != "vertices") fail(line.number, "expected 'vertices N'");
  expect_arity(line, 2);
  return static_cast<int>(to_int(line, line.tokens[1], 0, 1 << 28));
}

// "<tag> <id> : x1 x2 ..." for vertex `id`.
std::vector<long long> read_record(Reader& in, std::string_view tag, int id, long long lo, long long hi) {
  const Line& line = in.next("a vertex record");
  if (line.tokens.front() != tag || line.tokens.size() < 3 || line.tokens[2] != ":") {
    fail(line.number, "expected '" + std::string(tag) + " " + std::to_string(id) + " : ...'");
  }
  if (to_int(line, line.tokens[1], 0, 1 << 28) != id) {
    fail(line.number, "records must be in vertex order; expected vertex " + std::to_string(id));
  }
  std::vector<long long> values;
  for (std::size_t i = 3; i < line.tokens.size(); ++i) values.push_back(to_int(line, line.tokens[i], lo, hi));
  return values;
}

ListAssignment read_lists(Reader& in, int n) {
  ListAssignment lists(n);
  for (Vertex v = 0; v < n; ++v) {
    const int line = in.number();
    for (long long c : read_record(in, "l", v, 0, INT32_MAX)) lists[v].push_back(static_cast<Color>(c));
    for (std::size_t i = 1; i < lists[v].size(); ++i) {
      if (lists[v][i - 1] >= lists[v][i]) fail(line, "list of vertex " + std::to_string(v) + " is not increasing");
    }
  }
  return lists;
}

void expect_end(Reader& in) {
  const Line& line = in.next("end");
  if (line.tokens.front() != "end") fail(line.number, "expected 'end'");
  expect_arity(line, 1);
  if (!in.done()) fail(in.number(), "text after 'end'");
}

void expect_header(Reader& in, std::string_view magic) {
  const Line& line = in.next("header");
  if (line.tokens.front() != magic) fail(line.number, "expected '" + std::string(magic) + " <version>'");
  expect_arity(line, 2);
  if (to_int(line, line.tokens[1], 0, 1 << 20) != kGraphFormatVersion) {
    fail(line.number, "unsupported format version " + std::string(line.tokens[1]));
  }
}

void append_list(std::ostringstream& os, const ColorList& list) {
  for (Color c : list) os << ' ' << c;
}

}  // namespace

GraphFile parse_graph_file(std::string_view text) {
  Reader in(text);
  expect_header(in, "wdc-graph");
  const int n = read_vertex_count(in);

  std::optional<Dart> marker;
  {
    const Line& line = in.next("outer");
    if (line.tokens.front() != "outer") fail(line.number, "expected 'outer U V' or 'outer default'");
    if (line.tokens.size() != 2 || line.tokens[1] != "default") {
      expect_arity(line, 3);
      marker = Dart{static_cast<Vertex>(to_int(line, line.tokens[1], 0, n - 1)),
                    static_cast<Vertex>(to_int(line, line.tokens[2], 0, n - 1))};
    }
  }

  // Rotations are clockwise on disk and counterclockwise in memory.
  std::vector<std::vector<Vertex>> rot(n);
  for (Vertex v = 0; v < n; ++v) {
    for (long long w : read_record(in, "v", v, 0, n - 1)) rot[v].push_back(static_cast<Vertex>(w));
    std::reverse(rot[v].begin(), rot[v].end());
  }
  GraphFile file;
  file.graph = EmbeddedGraph(std::move(rot), marker);
  trace_faces(file.graph);

  if (in.peek_keyword("lists")) {
    expect_arity(in.next("lists"), 1);
    file.lists = read_lists(in, n);
  }
  if (in.peek_keyword("coloring")) {
    expect_arity(in.next("coloring"), 1);
    Coloring phi(n);
    for (Vertex v = 0; v < n; ++v) {
      const Line& line = in.next("a coloring record");
      if (line.tokens.front() != "c") fail(line.number, "expected 'c " + std::to_string(v) + " <color>|-'");
      expect_arity(line, 3);
      if (to_int(line, line.tokens[1], 0, n - 1) != v) {
        fail(line.number, "records must be in vertex order; expected vertex " + std::to_string(v));
      }
      if (line.tokens[2] != "-") phi.set(v, static_cast<Color>(to_int(line, line.tokens[2], 0, INT32_MAX)));
    }
    file.coloring = std::move(phi);
  }
  expect_end(in);
  return file;
}

std::string format_graph_file(const GraphFile& file) {
  const EmbeddedGraph& g = file.graph;
  const int n = g.num_vertices();
  if (file.lists && static_cast<int>(file.lists->size()) != n) {
    throw Error(ErrorCode::InvalidInput, "list assignment size differs from the vertex count");
  }
  if (file.coloring && file.coloring->size() != n) {
    throw Error(ErrorCode::InvalidInput, "coloring size differs from the vertex count");
  }
  std::ostringstream os;
  os << "wdc-graph " << kGraphFormatVersion << "\n";
  os << "vertices " << n << "\n";
  if (const auto m = g.outer_marker()) {
    os << "outer " << m->from << ' ' << m->to << "\n";
  } else {
    os << "outer default\n";
  }
  for (Vertex v = 0; v < n; ++v) {
    os << "v " << v << " :";
    const auto& r = g.rotation(v);
    for (auto it = r.rbegin(); it != r.rend(); ++it) os << ' ' << *it;
    os << "\n";
  }
  if (file.lists) {
    os << "lists\n";
    for (Vertex v = 0; v < n; ++v) {
      os << "l " << v << " :";
      append_list(os, (*file.lists)[v]);
      os << "\n";
    }
  }
  if (file.coloring) {
    os << "coloring\n";
    for (Vertex v = 0; v < n; ++v) {
      os << "c " << v << ' ';
      if (file.coloring->has(v)) {
        os << (*file.coloring)[v];
      } else {
        os << '-';
      }
      os << "\n";
    }
  }
  os << "end\n";
  return os.str();
}

ListAssignment parse_lists_file(std::string_view text, int expected_vertices) {
  Reader in(text);
  expect_header(in, "wdc-lists");
  const int n = read_vertex_count(in);
  if (n != expected_vertices) {
    throw Error(ErrorCode::InvalidInput, "lists file has " + std::to_string(n) + " vertices, graph has " +
                                             std::to_string(expected_vertices));
  }
  ListAssignment lists = read_lists(in, n);
  expect_end(in);
  return lists;
}

std::string format_lists_file(const ListAssignment& lists) {
  std::ostringstream os;
  os << "wdc-lists " << kGraphFormatVersion << "\n";
  os << "vertices " << lists.size() << "\n";
  for (std::size_t v = 0; v < lists.size(); ++v) {
    os << "l " << v << " :";
    append_list(os, lists[v]);
    os << "\n";
  }
  os << "end\n";
  return os.str();
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidInput, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::InvalidInput, "write failed for " + path);
}

GraphFile read_graph_file(const std::string& path) { return parse_graph_file(read_text(path)); }

void write_graph_file(const std::string& path, const GraphFile& file) { write_text(path, format_graph_file(file)); }

}  // namespace wdc
