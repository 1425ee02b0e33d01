#include "pgw/ingest.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "pgw/errors.hpp"

namespace pgw {

namespace {

constexpr CorpusEntry kCorpus[] = {
#include "corpus_data.inc"
};

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

int to_int(std::string_view s, int line, const char* what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw SyntaxError(line, std::string("expected an integer for ") + what + ", got '" + std::string(s) + "'");
  return v;
}

// 1-based generator index -> 0-based.
int to_gen(std::string_view s, int n, int line) {
  const int i = to_int(s, line, "generator index");
  if (i < 1 || i > n) throw SyntaxError(line, "generator index " + std::to_string(i) + " out of range");
  return i - 1;
}

Word parse_word(std::span<const std::string_view> tokens, int p, int n, int line) {
  if (tokens.empty()) throw SyntaxError(line, "missing word");
  if (tokens.size() == 1 && tokens[0] == "1") return {};
  Word w;
  for (auto tok : tokens) {
    const auto caret = tok.find('^');
    if (tok.size() < 2 || tok[0] != 'g' || caret == std::string_view::npos)
      throw SyntaxError(line, "bad word token '" + std::string(tok) + "', expected g<k>^<e>");
    const int g = to_gen(tok.substr(1, caret - 1), n, line);
    const int e = to_int(tok.substr(caret + 1), line, "exponent");
    if (e < 1 || e >= p) throw SyntaxError(line, "exponent " + std::to_string(e) + " outside [1, p)");
    if (!w.empty() && w.back().gen >= g) throw SyntaxError(line, "word generators must strictly increase");
    w.push_back({g, e});
  }
  return w;
}

}  // namespace

PcPresentation parse_presentation(std::string_view text) {
  PcPresentation P;
  bool have_name = false, have_p = false, have_n = false;
  std::vector<char> pow_seen, def_seen;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = split(line);
    if (tok.empty()) continue;
    const auto key = tok[0];

    if (key == "name") {
      if (have_name) throw SyntaxError(line_no, "duplicate name");
      const auto label = trim(trim(line).substr(4));
      if (label.empty()) throw SyntaxError(line_no, "empty name");
      P.name = std::string(label);
      have_name = true;
      continue;
    }
    if (key == "p" || key == "n") {
      const bool with_eq = tok.size() == 3 && tok[1] == "=";
      if (tok.size() != 2 && !with_eq) throw SyntaxError(line_no, "expected '" + std::string(key) + " <integer>'");
      const int v = to_int(tok.back(), line_no, key == "p" ? "p" : "n");
      if (key == "p") {
        if (have_p) throw SyntaxError(line_no, "duplicate p");
        if (!is_prime(v)) throw SyntaxError(line_no, std::to_string(v) + " is not prime");
        if (v > kMaxPrime) throw SyntaxError(line_no, "p exceeds " + std::to_string(kMaxPrime));
        P.p = v;
        have_p = true;
      } else {
        if (have_n) throw SyntaxError(line_no, "duplicate n");
        if (v < 1 || v > kMaxGenerators)
          throw SyntaxError(line_no, "n must lie in [1, " + std::to_string(kMaxGenerators) + "]");
        P.n = v;
        have_n = true;
        P.power.assign(static_cast<std::size_t>(v), Word{});
        P.defn.assign(static_cast<std::size_t>(v), std::nullopt);
        pow_seen.assign(static_cast<std::size_t>(v), 0);
        def_seen.assign(static_cast<std::size_t>(v), 0);
      }
      continue;
    }
    if (key != "pow" && key != "comm" && key != "def")
      throw SyntaxError(line_no, "unknown keyword '" + std::string(key) + "'");
    if (!have_p || !have_n) throw SyntaxError(line_no, "p and n must precede the relations");

    if (key == "pow") {
      if (tok.size() < 4 || tok[2] != "=") throw SyntaxError(line_no, "expected 'pow <i> = <word>'");
      const int i = to_gen(tok[1], P.n, line_no);
      if (pow_seen[static_cast<std::size_t>(i)]) throw SyntaxError(line_no, "duplicate power relation");
      pow_seen[static_cast<std::size_t>(i)] = 1;
      P.power[static_cast<std::size_t>(i)] =
          parse_word(std::span(tok).subspan(3), P.p, P.n, line_no);
    } else if (key == "comm") {
      if (tok.size() < 5 || tok[3] != "=") throw SyntaxError(line_no, "expected 'comm <i> <j> = <word>'");
      const int i = to_gen(tok[1], P.n, line_no);
      const int j = to_gen(tok[2], P.n, line_no);
      if (i <= j) throw SyntaxError(line_no, "commutator relations need i > j");
      if (P.comm.contains({i, j})) throw SyntaxError(line_no, "duplicate commutator relation");
      Word w = parse_word(std::span(tok).subspan(4), P.p, P.n, line_no);
      if (!w.empty()) P.comm.emplace(std::pair{i, j}, std::move(w));
    } else {
      if (tok.size() < 4 || tok[2] != "=") throw SyntaxError(line_no, "expected 'def <i> = pow <j>' or 'def <i> = comm <j> <k>'");
      const int i = to_gen(tok[1], P.n, line_no);
      if (def_seen[static_cast<std::size_t>(i)]) throw SyntaxError(line_no, "duplicate definition");
      def_seen[static_cast<std::size_t>(i)] = 1;
      Definition d;
      if (tok[3] == "pow" && tok.size() == 5) {
        d.kind = Definition::Kind::Power;
        d.j = to_gen(tok[4], P.n, line_no);
      } else if (tok[3] == "comm" && tok.size() == 6) {
        d.kind = Definition::Kind::Commutator;
        d.j = to_gen(tok[4], P.n, line_no);
        d.k = to_gen(tok[5], P.n, line_no);
      } else {
        throw SyntaxError(line_no, "expected 'pow <j>' or 'comm <j> <k>' after '='");
      }
      P.defn[static_cast<std::size_t>(i)] = d;
    }
  }
  if (!have_name) throw SyntaxError(line_no, "missing name");
  if (!have_p) throw SyntaxError(line_no, "missing p");
  if (!have_n) throw SyntaxError(line_no, "missing n");
  return P;
}

GroupFile parse(std::string_view text, std::string source) {
  return GroupFile{PcGroup::validate(parse_presentation(text)), std::move(source)};
}

GroupFile parse_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path.string());
}

namespace {

std::string format_letters(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += 'g' + std::to_string(l.gen + 1) + '^' + std::to_string(l.exp);
  }
  return out;
}

}  // namespace

std::string serialize(const PcPresentation& P) {
  std::ostringstream os;
  os << "name " << P.name << "\n";
  os << "p    " << P.p << "\n";
  os << "n    " << P.n << "\n";
  for (int i = 0; i < P.n; ++i)
    if (!P.power[static_cast<std::size_t>(i)].empty())
      os << "pow  " << i + 1 << " = " << format_letters(P.power[static_cast<std::size_t>(i)]) << "\n";
  for (const auto& [key, w] : P.comm)
    if (!w.empty()) os << "comm " << key.first + 1 << " " << key.second + 1 << " = " << format_letters(w) << "\n";
  for (int i = 0; i < P.n; ++i) {
    const auto& d = P.defn[static_cast<std::size_t>(i)];
    if (!d) continue;
    os << "def  " << i + 1 << " = ";
    if (d->kind == Definition::Kind::Power)
      os << "pow " << d->j + 1 << "\n";
    else
      os << "comm " << d->j + 1 << " " << d->k + 1 << "\n";
  }
  return os.str();
}

std::string format_word(const Element& x) {
  Word w;
  for (int i = 0; i < x.size(); ++i)
    if (x[i] != 0) w.push_back({i, x[i]});
  return format_letters(w);
}

Element parse_element(const PcGroup& G, std::string_view word) {
  const auto tok = split(word);
  return G.collect(parse_word(tok, G.prime(), G.ngens(), 0));
}

std::span<const CorpusEntry> builtin_corpus() { return kCorpus; }

GroupFile builtin(std::string_view key) {
  for (const auto& e : kCorpus)
    if (e.key == key) return parse(e.text, "builtin:" + std::string(key));
  throw InputError("unknown built-in group '" + std::string(key) + "'");
}

}  // namespace pgw
