#include "commdeg/algebra_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace commdeg {

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  std::string tok;
  while (is >> tok)
    out.push_back(tok);
  return out;
}

template <class Int>
std::optional<Int> to_int(std::string_view s) {
  Int v{};
  const auto *end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end)
    return std::nullopt;
  return v;
}

std::vector<std::uint32_t> parse_modulus(std::size_t line, std::string_view text) {
  std::vector<std::uint32_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                           : comma - start);
    const auto v = to_int<std::uint32_t>(piece);
    if (!v)
      throw ParseError(line, "bad modulus coefficient '" + std::string(piece) + "'");
    out.push_back(*v);
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  return out;
}

} // namespace

LieAlgebra parse_algebra(std::istream &in) {
  std::optional<Field> field;
  std::optional<std::size_t> dim;
  std::vector<Bracket> brackets;
  std::set<std::pair<std::size_t, std::size_t>> seen;

  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    const auto tok = split_ws(line);
    if (tok.empty())
      continue;

    if (tok[0] == "field") {
      if (field)
        throw ParseError(lineno, "duplicate field line");
      std::optional<std::uint64_t> q;
      std::optional<std::vector<std::uint32_t>> modulus;
      for (std::size_t t = 1; t < tok.size(); ++t) {
        std::string_view kv = tok[t];
        if (kv.starts_with("q=")) {
          q = to_int<std::uint64_t>(kv.substr(2));
          if (!q)
            throw ParseError(lineno, "bad field order '" + tok[t] + "'");
        } else if (kv.starts_with("modulus=")) {
          modulus = parse_modulus(lineno, kv.substr(8));
        } else {
          throw ParseError(lineno, "unknown field attribute '" + tok[t] + "'");
        }
      }
      if (!q)
        throw ParseError(lineno, "field line needs q=<int>");
      try {
        field = Field::make(*q, modulus);
      } catch (const Error &e) {
        throw ParseError(lineno, e.what());
      }
    } else if (tok[0] == "dim") {
      if (!field)
        throw ParseError(lineno, "dim before field");
      if (dim)
        throw ParseError(lineno, "duplicate dim line");
      if (tok.size() != 2)
        throw ParseError(lineno, "expected 'dim <n>'");
      dim = to_int<std::size_t>(tok[1]);
      if (!dim || *dim > 64)
        throw ParseError(lineno, "bad dimension '" + tok[1] + "'");
    } else if (tok[0] == "bracket") {
      if (!field || !dim)
        throw ParseError(lineno, "bracket before field and dim");
      const std::size_t n = *dim;
      if (tok.size() != 4 + n || tok[3] != "->")
        throw ParseError(lineno, "expected 'bracket <i> <j> -> <k1> ... <k" +
                                     std::to_string(n) + ">'");
      const auto i = to_int<std::size_t>(tok[1]);
      const auto j = to_int<std::size_t>(tok[2]);
      if (!i || !j)
        throw ParseError(lineno, "bad bracket indices");
      if (*i >= *j)
        throw ParseError(lineno, "expected i < j");
      if (*i < 1 || *j > n)
        throw ParseError(lineno, "bracket index out of range 1.." + std::to_string(n));
      if (!seen.insert({*i, *j}).second)
        throw ParseError(lineno, "duplicate bracket " + tok[1] + " " + tok[2]);
      Vector v(n);
      for (std::size_t k = 0; k < n; ++k) {
        const auto c = to_int<std::int64_t>(tok[4 + k]);
        if (!c)
          throw ParseError(lineno, "bad coordinate '" + tok[4 + k] + "'");
        if (field->e() == 1) {
          v[k] = field->from_int(*c);
        } else {
          if (*c < 0 || static_cast<std::uint64_t>(*c) >= field->q())
            throw ParseError(lineno, "coordinate out of range [0, q)");
          v[k] = field->from_code(static_cast<std::uint64_t>(*c));
        }
      }
      brackets.push_back({*i - 1, *j - 1, std::move(v)});
    } else {
      throw ParseError(lineno, "unknown directive '" + tok[0] + "'");
    }
  }
  if (!field)
    throw ParseError(lineno, "missing field line");
  if (!dim)
    throw ParseError(lineno, "missing dim line");
  return LieAlgebra::from_brackets(*field, *dim, brackets);
}

LieAlgebra parse_algebra(std::string_view text) {
  std::istringstream is{std::string(text)};
  return parse_algebra(is);
}

LieAlgebra read_algebra_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError(0, "cannot open " + path);
  return parse_algebra(in);
}

std::string format_algebra(const LieAlgebra &L) {
  std::ostringstream os;
  const std::size_t n = L.dim();
  if (!L.labels().empty()) {
    os << "# basis:";
    for (const auto &l : L.labels())
      os << ' ' << l;
    os << '\n';
  }
  os << "field " << L.field().describe() << '\n';
  os << "dim " << n << '\n';
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto c = L.structure(i, j);
      bool zero = true;
      for (auto x : c)
        zero = zero && x.is_zero();
      if (zero)
        continue;
      os << "bracket " << i + 1 << ' ' << j + 1 << " ->";
      for (auto x : c)
        os << ' ' << x.v;
      os << '\n';
    }
  return os.str();
}

void write_algebra_file(const std::string &path, const LieAlgebra &L) {
  std::ofstream out(path);
  if (!out)
    throw InvalidParameter("cannot write " + path);
  out << format_algebra(L);
}

std::string format_structure(const StructureReport &s) {
  std::string out = "dim L^2 = " + std::to_string(s.dim_derived) +
                    ", dim Z = " + std::to_string(s.dim_center) + ", ";
  out += s.nilpotency_class ? "class " + std::to_string(*s.nilpotency_class)
                            : std::string("not nilpotent");
  return out;
}

std::string format_report(const LieAlgebra &L, const DegreeReport &rep) {
  std::ostringstream os;
  os << "field " << L.field().describe() << ", dim " << L.dim() << '\n';
  os << format_structure(rep.dims) << '\n';
  os << "method " << method_name(rep.method) << '\n';
  os << "d = " << rep.degree.str() << " (" << rep.decimal << ")\n";
  os << "rank histogram:";
  for (const auto &[k, count] : rep.rank_histogram)
    os << ' ' << k << ':' << count;
  os << '\n';

  os << "@q " << L.field().q() << '\n';
  os << "@n " << L.dim() << '\n';
  os << "@dim_derived " << rep.dims.dim_derived << '\n';
  os << "@dim_center " << rep.dims.dim_center << '\n';
  os << "@class "
     << (rep.dims.nilpotency_class ? std::to_string(*rep.dims.nilpotency_class) : "none")
     << '\n';
  os << "@d " << rep.degree.str() << '\n';
  os << "@decimal " << rep.decimal << '\n';
  os << "@method " << method_name(rep.method) << '\n';
  for (const auto &[k, count] : rep.rank_histogram)
    os << "@rank " << k << ' ' << count << '\n';
  return os.str();
}

ReportFields parse_report(std::string_view text) {
  ReportFields out;
  std::istringstream is{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] != '@')
      continue;
    const auto tok = split_ws(std::string_view(line).substr(1));
    if (tok.size() < 2)
      throw ParseError(lineno, "truncated report line");
    const auto &key = tok[0];
    auto number = [&](const std::string &s) {
      const auto v = to_int<std::uint64_t>(s);
      if (!v)
        throw ParseError(lineno, "bad number '" + s + "'");
      return *v;
    };
    if (key == "q")
      out.q = number(tok[1]);
    else if (key == "n")
      out.n = number(tok[1]);
    else if (key == "dim_derived")
      out.dim_derived = number(tok[1]);
    else if (key == "dim_center")
      out.dim_center = number(tok[1]);
    else if (key == "class")
      out.nilpotency_class =
          tok[1] == "none" ? std::nullopt : std::optional<std::size_t>(number(tok[1]));
    else if (key == "d")
      out.degree = Rational::parse(tok[1]);
    else if (key == "decimal")
      out.decimal = tok[1];
    else if (key == "method")
      out.method = tok[1];
    else if (key == "rank" && tok.size() == 3)
      out.rank_histogram[number(tok[1])] = BigInt(tok[2]);
  }
  return out;
}

} // namespace commdeg
