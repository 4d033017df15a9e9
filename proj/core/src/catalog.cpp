#include "radact/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace radact {

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      line.tokens.push_back(Token{raw.substr(i, j - i), i + 1});
      i = j;
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

class Reader {
 public:
  Reader(std::istream& in, std::string source) : lines_(tokenize(in)), source_(std::move(source)) {}

  bool done() const { return pos_ >= lines_.size(); }
  const std::string& source() const { return source_; }

  [[noreturn]] void fail(const Line& l, std::size_t token, const std::string& expected) const {
    const std::size_t col = token < l.tokens.size() ? l.tokens[token].column
                            : l.tokens.empty()      ? 1
                                                    : l.tokens.back().column +
                                                          l.tokens.back().text.size();
    throw ParseError(source_, l.number, col, expected);
  }

  [[noreturn]] void fail_eof(const std::string& expected) const {
    const std::size_t line = lines_.empty() ? 1 : lines_.back().number + 1;
    throw ParseError(source_, line, 1, expected);
  }

  const Line& next(const std::string& expected) {
    if (done()) fail_eof(expected);
    return lines_[pos_++];
  }

  // A line `<keyword> <args...>` with exactly `nargs` arguments.
  const Line& keyword(const std::string& kw, std::size_t nargs, const std::string& expected) {
    const Line& l = next(expected);
    if (l.tokens[0].text != kw) fail(l, 0, expected);
    if (l.tokens.size() != nargs + 1) fail(l, std::min(l.tokens.size(), nargs + 1), expected);
    return l;
  }

  int integer(const Line& l, std::size_t token, const std::string& expected) const {
    if (token >= l.tokens.size()) fail(l, token, expected);
    const std::string& s = l.tokens[token].text;
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v < 0) fail(l, token, expected);
    return v;
  }

  std::vector<std::vector<int>> rows(std::size_t count, std::size_t width, std::size_t& first_line) {
    std::vector<std::vector<int>> out;
    const std::string expected = std::to_string(width) + " indices";
    for (std::size_t r = 0; r < count; ++r) {
      const Line& l = next("row " + std::to_string(r) + " of " + expected);
      if (r == 0) first_line = l.number;
      if (l.tokens.size() != width) fail(l, std::min(l.tokens.size(), width), expected);
      std::vector<int> row;
      for (std::size_t c = 0; c < width; ++c) row.push_back(integer(l, c, "an index"));
      out.push_back(std::move(row));
    }
    return out;
  }

  [[noreturn]] void rethrow_at(const Error& e, std::size_t line) const {
    throw Error(e.kind(), source_ + ":" + std::to_string(line) + ": " + e.what());
  }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  std::string source_;
};

std::string join_row(std::span<const Elem> row) {
  std::string s;
  for (std::size_t i = 0; i < row.size(); ++i) s += (i ? " " : "") + std::to_string(row[i]);
  return s;
}

}  // namespace

ParseError::ParseError(std::string source, std::size_t line, std::size_t column,
                       const std::string& expected)
    : Error(ErrorKind::ParseError, source + ":" + std::to_string(line) + ":" +
                                       std::to_string(column) + ": expected " + expected),
      source_(std::move(source)),
      line_(line),
      column_(column) {}

CatalogKind detect_kind(std::istream& in, const std::string& source) {
  const std::vector<Line> lines = tokenize(in);
  if (lines.empty()) throw ParseError(source, 1, 1, "'monoid', 'act' or 'radical'");
  const std::string& kw = lines[0].tokens[0].text;
  if (kw == "monoid") return CatalogKind::Monoid;
  if (kw == "act") return CatalogKind::Act;
  if (kw == "radical") return CatalogKind::RadicalTable;
  throw ParseError(source, lines[0].number, 1, "'monoid', 'act' or 'radical'");
}

FiniteMonoid parse_monoid(std::istream& in, const std::string& source) {
  Reader rd(in, source);
  const Line& head = rd.keyword("monoid", 1, "'monoid <name>'");
  const std::string name = head.tokens[1].text;
  const Line& el = rd.keyword("elements", 1, "'elements <n>'");
  const int n = rd.integer(el, 1, "a positive element count");
  if (n == 0 || static_cast<std::size_t>(n) > kMaxCarrier) rd.fail(el, 1, "a positive element count");
  const Line& id = rd.keyword("identity", 1, "'identity <i>'");
  const int identity = rd.integer(id, 1, "an identity index");
  rd.keyword("table", 0, "'table'");
  std::size_t first = 0;
  const auto table = rd.rows(static_cast<std::size_t>(n), static_cast<std::size_t>(n), first);
  if (!rd.done()) rd.fail(rd.next(""), 0, "end of file");
  try {
    return FiniteMonoid::validate(table, identity, name);
  } catch (const Error& e) {
    rd.rethrow_at(e, first);
  }
}

FiniteAct parse_act(std::istream& in, const MonoidResolver& monoids, const std::string& source) {
  Reader rd(in, source);
  const Line& head = rd.keyword("act", 3, "'act <name> over <monoid-name>'");
  if (head.tokens[2].text != "over") rd.fail(head, 2, "'over'");
  const std::string name = head.tokens[1].text;
  const std::optional<FiniteMonoid> m = monoids ? monoids(head.tokens[3].text) : std::nullopt;
  if (!m) rd.fail(head, 3, "a known monoid name");
  const Line& el = rd.keyword("elements", 1, "'elements <m>'");
  const int size = rd.integer(el, 1, "a positive element count");
  if (size == 0 || static_cast<std::size_t>(size) > kMaxCarrier) rd.fail(el, 1, "a positive element count");
  rd.keyword("action", 0, "'action'");
  std::size_t first = 0;
  const auto rows = rd.rows(m->size(), static_cast<std::size_t>(size), first);
  if (!rd.done()) rd.fail(rd.next(""), 0, "end of file");
  try {
    return FiniteAct::validate(*m, rows, name);
  } catch (const Error& e) {
    rd.rethrow_at(e, first);
  }
}

Radical parse_radical_table(std::istream& in, const ActResolver& acts, const std::string& source) {
  Reader rd(in, source);
  const Line& head = rd.keyword("radical", 2, "'radical <name> extensional'");
  if (head.tokens[2].text != "extensional") rd.fail(head, 2, "'extensional'");
  ExtensionalTable table;
  while (!rd.done()) {
    const Line& l = rd.next("");
    if (l.tokens[0].text != "act") rd.fail(l, 0, "'act <name> partition <blocks>'");
    if (l.tokens.size() < 4) rd.fail(l, l.tokens.size(), "'act <name> partition <blocks>'");
    if (l.tokens[2].text != "partition") rd.fail(l, 2, "'partition'");
    const std::optional<FiniteAct> a = acts ? acts(l.tokens[1].text) : std::nullopt;
    if (!a) rd.fail(l, 1, "a known act name");
    std::string text;
    for (std::size_t k = 3; k < l.tokens.size(); ++k) text += (k > 3 ? " " : "") + l.tokens[k].text;
    Congruence c;
    try {
      c = parse_partition(text, a->size());
      require_congruence(*a, c);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::ParseError) rd.fail(l, 3, std::string("a partition (") + e.what() + ")");
      rd.rethrow_at(e, l.number);
    }
    table.set(*a, c);
  }
  return Radical::extensional(head.tokens[1].text, std::move(table));
}

std::string print_monoid(const FiniteMonoid& m) {
  std::ostringstream out;
  out << "monoid " << m.name() << "\n"
      << "elements " << m.size() << "\n"
      << "identity " << static_cast<int>(m.identity()) << "\n"
      << "table\n";
  for (std::size_t x = 0; x < m.size(); ++x) {
    out << join_row(m.table().subspan(x * m.size(), m.size())) << "\n";
  }
  return out.str();
}

std::string print_act(const FiniteAct& a) {
  std::ostringstream out;
  out << "act " << a.name() << " over " << a.monoid().name() << "\n"
      << "elements " << a.size() << "\n"
      << "action\n";
  for (std::size_t s = 0; s < a.monoid().size(); ++s) {
    out << join_row(a.row(static_cast<Elem>(s))) << "\n";
  }
  return out.str();
}

std::string print_radical_table(const std::string& name,
                                const std::vector<std::pair<FiniteAct, Congruence>>& entries) {
  std::ostringstream out;
  out << "radical " << name << " extensional\n";
  for (const auto& [a, c] : entries) out << "act " << a.name() << " partition " << c.to_string() << "\n";
  return out.str();
}

void Catalog::add_monoid(FiniteMonoid m) {
  std::string name = m.name();
  monoids_.insert_or_assign(std::move(name), std::move(m));
}

void Catalog::add_act(FiniteAct a) {
  std::string name = a.name();
  acts_.insert_or_assign(std::move(name), std::move(a));
}

std::optional<FiniteMonoid> Catalog::monoid(const std::string& name) const {
  if (auto it = monoids_.find(name); it != monoids_.end()) return it->second;
  if (fallback_monoids) return fallback_monoids(name);
  return std::nullopt;
}

std::optional<FiniteAct> Catalog::act(const std::string& name) const {
  if (auto it = acts_.find(name); it != acts_.end()) return it->second;
  if (fallback_acts) return fallback_acts(name);
  return std::nullopt;
}

void Catalog::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const std::string source = path.string();
  std::istringstream probe(text);
  const CatalogKind kind = detect_kind(probe, source);
  std::istringstream body(text);
  switch (kind) {
    case CatalogKind::Monoid:
      add_monoid(parse_monoid(body, source));
      break;
    case CatalogKind::Act:
      add_act(parse_act(body, [this](const std::string& n) { return monoid(n); }, source));
      break;
    case CatalogKind::RadicalTable:
      radicals_.push_back(
          parse_radical_table(body, [this](const std::string& n) { return act(n); }, source));
      break;
  }
}

void Catalog::load_dir(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw Error(ErrorKind::InvalidArgument, "not a directory: '" + dir.string() + "'");
  }
  for (const char* ext : {".monoid", ".act", ".radical"}) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ext) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) load_file(f);
  }
}

}  // namespace radact
