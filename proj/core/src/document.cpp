#include "pencilrank/document.hpp"

#include <cctype>
#include <cstdlib>
#include <istream>
#include <iterator>
#include <regex>
#include <sstream>

namespace pencilrank {

DocumentError::DocumentError(int line, int column, const std::string& what)
    : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

std::string section_name(int k) {
  if (k == 0) return "A";
  if (k == 1) return "B";
  return "A" + std::to_string(k + 1);
}

namespace {

struct Token {
  std::string text;
  int column = 0;
};

std::vector<Token> split(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

const std::regex& rational_re() {
  static const std::regex re(R"([+-]?[0-9]+(/[0-9]*[1-9][0-9]*)?)");
  return re;
}

const std::regex& float_re() {
  static const std::regex re(R"([+-]?([0-9]+\.?[0-9]*|\.[0-9]+)([eE][+-]?[0-9]+)?)");
  return re;
}

int parse_count(const Token& t, int line, const char* what, int min) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(t.text, &used);
    if (used != t.text.size()) throw std::invalid_argument("trailing");
    if (v < min) throw DocumentError(line, t.column, std::string(what) + " must be >= " + std::to_string(min));
    return v;
  } catch (const DocumentError&) {
    throw;
  } catch (const std::exception&) {
    throw DocumentError(line, t.column, std::string("expected an integer for ") + what);
  }
}

std::string rational_token(const Rational& r) { return r.to_string(); }

std::string float_token(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

PencilDocument parse_document(const std::string& text) {
  PencilDocument doc;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  bool header = false, seen_section = false;
  int degree = 2;
  int section = -1, row = 0;
  int last_line = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const auto toks = split(raw);
    if (toks.empty()) continue;
    if (toks[0].text[0] == '#') {
      if (!header) doc.comments.push_back(raw.substr(raw.find('#') + 1));
      continue;
    }
    last_line = line_no;
    const std::string& key = toks[0].text;
    if (!header) {
      if (key != "pencil") throw DocumentError(line_no, toks[0].column, "expected 'pencil <m> <n>'");
      if (toks.size() != 3) throw DocumentError(line_no, toks[0].column, "expected 'pencil <m> <n>'");
      doc.m = parse_count(toks[1], line_no, "m", 0);
      doc.n = parse_count(toks[2], line_no, "n", 0);
      header = true;
      continue;
    }
    if (!seen_section && (key == "entries" || key == "tolerance" || key == "degree")) {
      if (toks.size() != 2) throw DocumentError(line_no, toks[0].column, "expected '" + key + " <value>'");
      if (key == "entries") {
        if (toks[1].text == "rational") doc.mode = EntryMode::rational;
        else if (toks[1].text == "float") doc.mode = EntryMode::floating;
        else throw DocumentError(line_no, toks[1].column, "entries must be 'rational' or 'float'");
      } else if (key == "tolerance") {
        char* end = nullptr;
        const double t = std::strtod(toks[1].text.c_str(), &end);
        if (*end != '\0' || !(t > 0)) throw DocumentError(line_no, toks[1].column, "tolerance must be a positive decimal");
        doc.tolerance = t;
        doc.tolerance_text = toks[1].text;
      } else {
        degree = parse_count(toks[1], line_no, "degree", 2);
      }
      continue;
    }
    if (toks.size() == 1 && std::isalpha(static_cast<unsigned char>(key[0]))) {
      if (section >= 0 && row != doc.m) {
        throw DocumentError(line_no, toks[0].column,
                            "section " + section_name(section) + " has " + std::to_string(row) + " rows, expected " +
                                std::to_string(doc.m));
      }
      ++section;
      if (section >= degree) throw DocumentError(line_no, toks[0].column, "more sections than the declared degree");
      if (key != section_name(section) && key != "A" + std::to_string(section + 1)) {
        throw DocumentError(line_no, toks[0].column, "expected section '" + section_name(section) + "'");
      }
      seen_section = true;
      doc.tokens.emplace_back();
      row = 0;
      continue;
    }
    if (section < 0) throw DocumentError(line_no, toks[0].column, "unexpected '" + key + "' before section A");
    if (row >= doc.m) throw DocumentError(line_no, toks[0].column, "too many rows in section " + section_name(section));
    if (static_cast<int>(toks.size()) != doc.n) {
      throw DocumentError(line_no, toks.size() > static_cast<std::size_t>(doc.n) ? toks[static_cast<std::size_t>(doc.n)].column : toks[0].column,
                          "row has " + std::to_string(toks.size()) + " entries, expected " + std::to_string(doc.n));
    }
    std::vector<std::string> entries;
    for (const auto& t : toks) {
      const bool ok = doc.mode == EntryMode::rational ? std::regex_match(t.text, rational_re())
                                                      : std::regex_match(t.text, float_re());
      if (!ok) {
        throw DocumentError(line_no, t.column,
                            std::string("malformed ") + (doc.mode == EntryMode::rational ? "rational" : "float") +
                                " entry '" + t.text + "'");
      }
      entries.push_back(t.text);
    }
    doc.tokens.back().push_back(std::move(entries));
    ++row;
  }
  if (!header) throw DocumentError(line_no + 1, 1, "missing 'pencil <m> <n>' header");
  if (section >= 0 && row != doc.m) {
    throw DocumentError(last_line + 1, 1, "section " + section_name(section) + " is missing rows");
  }
  if (doc.degree() != degree) {
    throw DocumentError(last_line + 1, 1,
                        "expected " + std::to_string(degree) + " sections, found " + std::to_string(doc.degree()));
  }
  if (doc.m == 0 || doc.n == 0) {
    // Empty matrices have no rows to read.
    for (auto& c : doc.tokens) c.assign(static_cast<std::size_t>(doc.m), std::vector<std::string>());
  }
  return doc;
}

PencilDocument read_document(std::istream& in) {
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_document(text);
}

std::string write_document(const PencilDocument& doc) {
  std::ostringstream os;
  for (const auto& c : doc.comments) os << "#" << c << "\n";
  os << "pencil " << doc.m << " " << doc.n << "\n";
  os << "entries " << (doc.mode == EntryMode::rational ? "rational" : "float") << "\n";
  if (doc.tolerance) {
    os << "tolerance " << (doc.tolerance_text.empty() ? float_token(*doc.tolerance) : doc.tolerance_text) << "\n";
  }
  if (doc.degree() != 2) os << "degree " << doc.degree() << "\n";
  for (int k = 0; k < doc.degree(); ++k) {
    os << section_name(k) << "\n";
    for (const auto& row : doc.tokens[static_cast<std::size_t>(k)]) {
      for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
      os << "\n";
    }
  }
  return os.str();
}

MatrixQ PencilDocument::coefficient(int k) const {
  const auto& c = tokens.at(static_cast<std::size_t>(k));
  MatrixQ out(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = Rational::parse(c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  return out;
}

Eigen::MatrixXd PencilDocument::coefficient_float(int k) const {
  const auto& c = tokens.at(static_cast<std::size_t>(k));
  Eigen::MatrixXd out(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      const std::string& t = c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      out(i, j) = mode == EntryMode::rational ? Rational::parse(t).to_double() : std::strtod(t.c_str(), nullptr);
    }
  return out;
}

Pencil PencilDocument::pencil() const {
  if (degree() != 2) throw InputError("document holds a degree-" + std::to_string(degree()) + " polynomial, not a pencil");
  return Pencil(coefficient(0), coefficient(1));
}

FloatPencil PencilDocument::float_pencil(double default_tolerance) const {
  if (degree() != 2) throw InputError("document holds a degree-" + std::to_string(degree()) + " polynomial, not a pencil");
  return FloatPencil(coefficient_float(0), coefficient_float(1), tolerance.value_or(default_tolerance));
}

MatrixPolynomial PencilDocument::polynomial() const {
  std::vector<MatrixQ> cs;
  for (int k = 0; k < degree(); ++k) cs.push_back(coefficient(k));
  return MatrixPolynomial(std::move(cs));
}

namespace {

std::vector<std::vector<std::string>> rational_tokens(const MatrixQ& mq) {
  std::vector<std::vector<std::string>> out(static_cast<std::size_t>(mq.rows()));
  for (int i = 0; i < mq.rows(); ++i)
    for (int j = 0; j < mq.cols(); ++j) out[static_cast<std::size_t>(i)].push_back(rational_token(mq(i, j)));
  return out;
}

std::vector<std::vector<std::string>> float_tokens(const Eigen::MatrixXd& md) {
  std::vector<std::vector<std::string>> out(static_cast<std::size_t>(md.rows()));
  for (Eigen::Index i = 0; i < md.rows(); ++i)
    for (Eigen::Index j = 0; j < md.cols(); ++j) out[static_cast<std::size_t>(i)].push_back(float_token(md(i, j)));
  return out;
}

}  // namespace

PencilDocument PencilDocument::from_pencil(const Pencil& p) {
  PencilDocument d;
  d.m = p.m();
  d.n = p.n();
  d.tokens = {rational_tokens(p.a()), rational_tokens(p.b())};
  return d;
}

PencilDocument PencilDocument::from_float(const FloatPencil& p) {
  PencilDocument d;
  d.m = p.m();
  d.n = p.n();
  d.mode = EntryMode::floating;
  d.tolerance = p.tolerance;
  d.tokens = {float_tokens(p.a), float_tokens(p.b)};
  return d;
}

PencilDocument PencilDocument::from_polynomial(const MatrixPolynomial& p) {
  PencilDocument d;
  d.m = p.m();
  d.n = p.n();
  for (const auto& c : p.coefficients()) d.tokens.push_back(rational_tokens(c));
  return d;
}

}  // namespace pencilrank
