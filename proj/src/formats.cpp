#include "proxigraph/formats.hpp"

#include <openssl/evp.h>
#include <unistd.h>

#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "proxigraph/errors.hpp"

namespace proxigraph {

namespace {

struct Token {
  std::string_view text;
  int column = 0;
};

struct Line {
  int number = 0;
  std::vector<Token> tokens;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<Line> lex(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && is_space(raw[i])) ++i;
      if (i == raw.size()) break;
      const std::size_t from = i;
      while (i < raw.size() && !is_space(raw[i])) ++i;
      line.tokens.push_back({raw.substr(from, i - from), static_cast<int>(from) + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(const std::string& what, const Line& line, const Token& token) {
  throw ParseError(what, line.number, token.column);
}

[[noreturn]] void fail_line(const std::string& what, const Line& line) {
  throw ParseError(what, line.number, line.tokens.empty() ? 1 : line.tokens.back().column);
}

// Consumes the "<name> v1" header and returns the remaining lines.
std::vector<Line> body(std::string_view text, std::string_view name) {
  std::vector<Line> lines = lex(text);
  if (lines.empty()) throw ParseError("empty input, expected header '" + std::string(name) + " v1'", 1, 1);
  const Line& h = lines.front();
  if (h.tokens.size() != 2 || h.tokens[0].text != name || h.tokens[1].text != "v1") {
    fail("expected header '" + std::string(name) + " v1'", h, h.tokens.front());
  }
  lines.erase(lines.begin());
  return lines;
}

std::size_t parse_index(const Line& line, const Token& t) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) {
    fail("expected a non-negative integer, got '" + std::string(t.text) + "'", line, t);
  }
  return v;
}

long parse_long(const Line& line, const Token& t) {
  long v = 0;
  const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) {
    fail("expected an integer, got '" + std::string(t.text) + "'", line, t);
  }
  return v;
}

Scalar parse_coordinate(const Line& line, const Token& t) {
  try {
    return parse_scalar(t.text);
  } catch (const ParseError& e) {
    throw ParseError("bad coordinate '" + std::string(t.text) + "'", line.number, t.column + std::max(e.column(), 1) - 1);
  }
}

// Expects exactly "key value" and returns the value token.
const Token& keyed(const Line& line, std::string_view key) {
  if (line.tokens.front().text != key) fail("expected '" + std::string(key) + "'", line, line.tokens.front());
  if (line.tokens.size() != 2) fail_line("expected '" + std::string(key) + " <value>'", line);
  return line.tokens[1];
}

const Line& next_line(const std::vector<Line>& lines, std::size_t& at, std::string_view what) {
  if (at >= lines.size()) {
    const int last = lines.empty() ? 1 : lines.back().number + 1;
    throw ParseError("unexpected end of input, expected " + std::string(what), last, 1);
  }
  return lines[at++];
}

std::string fmt_double(double v) {
  std::ostringstream out;
  out << std::setprecision(17) << v;
  return out.str();
}

const char* verdict(bool ok) { return ok ? "ok" : "fail"; }

}  // namespace

PointSetFile parse_point_set(std::string_view text) {
  const std::vector<Line> lines = body(text, "pointset");
  PointSetFile file;
  std::vector<Point> pts;
  std::map<std::pair<std::string, std::string>, int> seen;
  for (const Line& line : lines) {
    if (line.tokens.size() < 2 || line.tokens.size() > 3) fail_line("expected 'x y [label]'", line);
    Point p(parse_coordinate(line, line.tokens[0]), parse_coordinate(line, line.tokens[1]));
    auto [it, fresh] = seen.emplace(std::pair{to_string(p.x), to_string(p.y)}, line.number);
    if (!fresh) fail("duplicate of the point on line " + std::to_string(it->second), line, line.tokens[0]);
    pts.push_back(std::move(p));
    file.labels.emplace_back(line.tokens.size() == 3 ? std::string(line.tokens[2].text) : std::string());
  }
  file.points = PointSet(std::move(pts));
  return file;
}

std::string format_point_set(const PointSet& s, const std::vector<std::string>& labels) {
  std::string out = "pointset v1\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += to_string(s[i].x) + ' ' + to_string(s[i].y);
    if (i < labels.size() && !labels[i].empty()) out += ' ' + labels[i];
    out += '\n';
  }
  return out;
}

std::string format_graph(const GeometricGraph& g) {
  std::string out = "graph v1\n";
  out += "kind " + to_string(g.kind()) + '\n';
  out += "k " + std::to_string(g.k()) + '\n';
  out += "n " + std::to_string(g.vertex_count()) + '\n';
  out += "edges " + std::to_string(g.edges().size()) + '\n';
  for (const Edge& e : g.edges()) out += std::to_string(e.a) + ' ' + std::to_string(e.b) + '\n';
  return out;
}

GeometricGraph parse_graph(std::string_view text, std::shared_ptr<const PointSet> points) {
  const std::vector<Line> lines = body(text, "graph");
  std::size_t at = 0;
  const Line& kind_line = next_line(lines, at, "'kind'");
  GraphKind kind;
  try {
    kind = parse_graph_kind(std::string(keyed(kind_line, "kind").text));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    fail(e.what(), kind_line, kind_line.tokens[1]);
  }
  const Line& k_line = next_line(lines, at, "'k'");
  const long k = parse_long(k_line, keyed(k_line, "k"));
  const Line& n_line = next_line(lines, at, "'n'");
  const std::size_t n = parse_index(n_line, keyed(n_line, "n"));
  if (n != points->size()) {
    fail("graph has " + std::to_string(n) + " vertices but the point set has " + std::to_string(points->size()),
         n_line, n_line.tokens[1]);
  }
  const Line& m_line = next_line(lines, at, "'edges'");
  const std::size_t m = parse_index(m_line, keyed(m_line, "edges"));
  GeometricGraph g(std::move(points), kind, static_cast<int>(k));
  for (std::size_t e = 0; e < m; ++e) {
    const Line& line = next_line(lines, at, "an edge 'a b'");
    if (line.tokens.size() != 2) fail_line("expected 'a b'", line);
    const std::size_t a = parse_index(line, line.tokens[0]);
    const std::size_t b = parse_index(line, line.tokens[1]);
    if (a >= n || b >= n || a == b) fail("edge endpoints out of range or equal", line, line.tokens[0]);
    g.add_edge(a, b);
  }
  if (at != lines.size()) fail_line("unexpected trailing content", lines[at]);
  if (g.edges().size() != m) fail_line("duplicate edges", m_line);
  return g;
}

std::string format_cycle(const HamCycle& c, const PointSet& s) {
  std::string out = "cycle v1\nn " + std::to_string(c.size()) + "\norder";
  for (std::size_t v : c.order()) out += ' ' + std::to_string(v);
  out += "\nds";
  for (const Scalar& d : distance_sequence(c, s).values) out += ' ' + to_string(d);
  out += '\n';
  return out;
}

HamCycle parse_cycle(std::string_view text, const PointSet& s) {
  const std::vector<Line> lines = body(text, "cycle");
  std::size_t at = 0;
  const Line& n_line = next_line(lines, at, "'n'");
  const std::size_t n = parse_index(n_line, keyed(n_line, "n"));
  if (n != s.size()) {
    fail("cycle has " + std::to_string(n) + " vertices but the point set has " + std::to_string(s.size()), n_line,
         n_line.tokens[1]);
  }
  const Line& o_line = next_line(lines, at, "'order'");
  if (o_line.tokens.front().text != "order") fail("expected 'order'", o_line, o_line.tokens.front());
  if (o_line.tokens.size() != n + 1) fail_line("order must list exactly n vertices", o_line);
  std::vector<std::size_t> order;
  std::vector<bool> used(n, false);
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t v = parse_index(o_line, o_line.tokens[i]);
    if (v >= n || used[v]) fail("vertex out of range or repeated", o_line, o_line.tokens[i]);
    used[v] = true;
    order.push_back(v);
  }
  HamCycle c(std::move(order));
  if (at < lines.size()) {
    const Line& d_line = lines[at++];
    if (d_line.tokens.front().text != "ds") fail("expected 'ds'", d_line, d_line.tokens.front());
    const DistanceSequence ds = distance_sequence(c, s);
    if (d_line.tokens.size() != n + 1) fail_line("ds must list exactly n values", d_line);
    for (std::size_t i = 1; i <= n; ++i) {
      if (parse_coordinate(d_line, d_line.tokens[i]) != ds.values[i - 1]) {
        fail("ds value does not match the cycle", d_line, d_line.tokens[i]);
      }
    }
  }
  if (at != lines.size()) fail_line("unexpected trailing content", lines[at]);
  return c;
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xf];
  }
  return out;
}

std::string format_audit(const TheoremAudit& audit, std::string_view input_bytes) {
  std::string out = "audit v1\n";
  out += std::string("tool ") + kToolVersion + '\n';
  out += "input-sha256 " + sha256_hex(input_bytes) + '\n';
  out += "mode " + to_string(audit.mode) + '\n';
  out += "seed " + std::to_string(audit.seed) + '\n';
  out += "k " + std::to_string(audit.k) + '\n';
  out += "tol " + fmt_double(audit.tol) + '\n';
  out += "n " + std::to_string(audit.cycle.size()) + '\n';
  out += "cycle";
  for (std::size_t v : audit.cycle.order()) out += ' ' + std::to_string(v);
  out += '\n';
  out += "max-kappa " + std::to_string(audit.max_kappa) + '\n';
  out += "edges " + std::to_string(audit.edges.size()) + '\n';
  for (const EdgeAudit& e : audit.edges) {
    out += "edge " + std::to_string(e.x) + ' ' + std::to_string(e.y);
    out += " kappa " + std::to_string(e.report.kappa()) + ' ' + verdict(e.kappa_ok);
    out += " inequalities " + std::to_string(e.report.checks.size()) + ' ' + verdict(e.inequalities_ok);
    out += " packing " + std::to_string(e.witness.centers.size()) + ' ' + verdict(e.packing_ok);
    out += " boundary " + std::to_string(e.boundary_points);
    out += '\n';
    for (const InequalityCheck& v : e.report.violations()) {
      out += "  violation " + to_string(v.family) + ' ' + std::to_string(v.i) + ' ' + std::to_string(v.j) +
             " slack " + to_string(v.slack) + '\n';
    }
  }
  out += std::string("pass ") + (audit.pass() ? "true" : "false") + '\n';
  return out;
}

std::string format_feasibility(const FeasibilitySystem& sys, const FeasibilityResult& r) {
  std::string out = "feasibility v1\n";
  out += "kappa " + std::to_string(sys.kappa()) + '\n';
  out += "constraints " + std::to_string(sys.constraints().size()) + '\n';
  out += "terms " + std::to_string(sys.term_count()) + '\n';
  out += "start " + (r.start < 0 ? std::string("structured") : "random " + std::to_string(r.start)) + '\n';
  out += "max-residual " + fmt_double(r.max_residual) + '\n';
  static constexpr std::array<const char*, 6> kNames{"u.x", "u.y", "s.x", "s.y", "t.x", "t.y"};
  for (std::size_t v = 0; v < r.best.values.size(); ++v) {
    out += "var " + std::to_string(v / 6 + 1) + ' ' + kNames[v % 6] + ' ' + fmt_double(r.best.values[v]) + '\n';
  }
  for (const Residual& res : residuals(sys, r.best)) {
    if (res.violation <= 0.0) continue;
    const Constraint& c = sys.constraints()[res.constraint];
    out += "residual " + to_string(c.family) + ' ' + std::to_string(c.i + 1) + ' ' + std::to_string(c.j + 1) +
           " term " + std::to_string(res.term) + ' ' + fmt_double(res.violation) + '\n';
  }
  return out;
}

std::string format_manifest(const SearchResult& r, std::size_t n, std::uint64_t base_seed,
                            const std::string& witness_file) {
  std::string out = "manifest v1\n";
  out += "generator " + to_string(r.best.generator) + '\n';
  out += "n " + std::to_string(n) + '\n';
  out += "seed " + std::to_string(base_seed) + '\n';
  out += "trials " + std::to_string(r.trials.size()) + '\n';
  out += "witness " + witness_file + " max-kappa seed " + std::to_string(r.best.seed) + " kappa " +
         std::to_string(r.best.kappa) + " trial " + std::to_string(r.best.trial) + " edge " +
         std::to_string(r.best.edge.a) + ' ' + std::to_string(r.best.edge.b) + '\n';
  for (const TrialOutcome& t : r.trials) {
    out += "trial " + std::to_string(t.trial) + " seed " + std::to_string(t.seed) + " kappa " +
           std::to_string(t.max_kappa) + ' ' + (t.pass ? "pass" : "fail") + '\n';
  }
  return out;
}

void write_witness_store(const std::filesystem::path& dir, const SearchResult& r, std::size_t n,
                         std::uint64_t base_seed) {
  std::filesystem::create_directories(dir);
  write_file_atomic(dir / "best.pts", format_point_set(r.best.points));
  write_file_atomic(dir / "best.cycle", format_cycle(r.best.cycle, r.best.points));
  write_file_atomic(dir / "manifest.txt", format_manifest(r, n, base_seed, "best.pts"));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + tmp.string() + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::filesystem::remove(tmp);
      throw Error("write to '" + tmp.string() + "' failed");
    }
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace proxigraph
