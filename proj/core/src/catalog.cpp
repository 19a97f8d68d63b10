#include "pencilrank/catalog.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <set>

#include "detail/catalog_data.hpp"
#include "pencilrank/errors.hpp"

namespace pencilrank {

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw InputError("malformed block '" + std::string(whole) + "'");
  }
  return std::stoi(std::string(s));
}

}  // namespace

BlockSpec BlockSpec::parse(std::string_view text) {
  BlockSpec b;
  if (text.empty()) throw InputError("empty block descriptor");
  const char head = text[0];
  std::string_view rest = text.substr(1);
  const auto open = rest.find('(');
  const std::string_view digits = open == std::string_view::npos ? rest : rest.substr(0, open);
  b.size = parse_int(digits, text);
  std::vector<std::string> args;
  if (open != std::string_view::npos) {
    if (rest.back() != ')') throw InputError("malformed block '" + std::string(text) + "'");
    std::string inner(rest.substr(open + 1, rest.size() - open - 2));
    std::size_t start = 0;
    while (true) {
      const auto comma = inner.find(',', start);
      args.push_back(inner.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    for (const auto& a : args)
      if (a.empty()) throw InputError("empty parameter in block '" + std::string(text) + "'");
  }
  switch (head) {
    case 'L':
    case 'R':
      if (!args.empty() || b.size < 1) throw InputError("malformed singular block '" + std::string(text) + "'");
      b.kind = head == 'L' ? Kind::column : Kind::row;
      break;
    case 'J':
      if (args.size() != 1 || b.size < 1) throw InputError("malformed Jordan block '" + std::string(text) + "'");
      b.kind = Kind::jordan;
      b.symbol = args[0];
      break;
    case 'Q':
      if (args.size() != 2 || b.size < 2 || b.size % 2) {
        throw InputError("malformed quadratic block '" + std::string(text) + "'");
      }
      b.kind = Kind::quadratic;
      b.symbol = args[0];
      b.symbol2 = args[1];
      break;
    default:
      throw InputError("unknown block kind in '" + std::string(text) + "'");
  }
  return b;
}

std::string BlockSpec::to_string() const {
  switch (kind) {
    case Kind::column:
      return "L" + std::to_string(size);
    case Kind::row:
      return "R" + std::to_string(size);
    case Kind::jordan:
      return "J" + std::to_string(size) + "(" + symbol + ")";
    case Kind::quadratic:
      return "Q" + std::to_string(size) + "(" + symbol + "," + symbol2 + ")";
  }
  return {};
}

int BlockSpec::rows() const {
  switch (kind) {
    case Kind::column:
      return size;
    case Kind::row:
      return size + 1;
    default:
      return size;
  }
}

int BlockSpec::cols() const {
  switch (kind) {
    case Kind::column:
      return size + 1;
    case Kind::row:
      return size;
    default:
      return size;
  }
}

int FamilyRecord::prime_count() const { return static_cast<int>(std::count(name.begin(), name.end(), '\'')); }

std::vector<std::string> FamilyRecord::symbols() const {
  std::vector<std::string> out;
  const auto add = [&](const std::string& s) {
    if (!s.empty() && std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  };
  for (const auto& b : blocks) {
    add(b.symbol);
    add(b.symbol2);
  }
  return out;
}

namespace {

std::vector<std::vector<std::string>> parse_matrix(const nlohmann::json& j, const std::string& family) {
  std::vector<std::vector<std::string>> out;
  if (!j.is_array()) throw InputError("equivalent pencil of " + family + " is not a matrix");
  for (const auto& row : j) {
    if (!row.is_array()) throw InputError("equivalent pencil of " + family + " is not a matrix");
    std::vector<std::string> r;
    for (const auto& x : row) r.push_back(x.is_string() ? x.get<std::string>() : x.dump());
    if (!out.empty() && r.size() != out[0].size()) throw InputError("ragged equivalent pencil in " + family);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

Catalog Catalog::from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("catalog is not valid JSON: ") + e.what());
  }
  Catalog c;
  try {
    if (doc.at("schema").get<std::string>() != "pencilrank-family-catalog") throw InputError("unexpected catalog schema");
    c.version_ = doc.at("version").get<int>();
    if (c.version_ != 1) throw InputError("unsupported catalog version " + std::to_string(c.version_));
    std::set<std::string> seen;
    for (const auto& f : doc.at("families")) {
      FamilyRecord r;
      r.name = f.at("name").get<std::string>();
      if (!seen.insert(r.name).second) throw InputError("duplicate family " + r.name);
      r.m = f.at("m").get<int>();
      r.n = f.at("n").get<int>();
      r.tensor_rank = f.at("tensor_rank").get<int>();
      const auto ml = f.at("multilinear_rank").get<std::vector<int>>();
      const auto rho = f.at("rho").get<std::vector<int>>();
      if (ml.size() != 3 || rho.size() != 2) throw InputError("bad rank columns for " + r.name);
      r.multilinear_rank = {ml[0], ml[1], ml[2]};
      r.rho = {rho[0], rho[1]};
      int rows = 0, cols = 0;
      for (const auto& b : f.at("blocks")) {
        r.blocks.push_back(BlockSpec::parse(b.get<std::string>()));
        rows += r.blocks.back().rows();
        cols += r.blocks.back().cols();
      }
      if (rows != r.m || cols != r.n) throw InputError("block recipe of " + r.name + " does not match its dimensions");
      if (f.contains("equivalent")) {
        r.equivalent_a = parse_matrix(f["equivalent"].at("A"), r.name);
        r.equivalent_b = parse_matrix(f["equivalent"].at("B"), r.name);
        if (r.equivalent_a.size() != static_cast<std::size_t>(r.m) || r.equivalent_b.size() != static_cast<std::size_t>(r.m) ||
            r.equivalent_a[0].size() != static_cast<std::size_t>(r.n) ||
            r.equivalent_b[0].size() != static_cast<std::size_t>(r.n)) {
          throw InputError("equivalent pencil of " + r.name + " has wrong dimensions");
        }
      }
      c.families_.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("catalog schema violation: ") + e.what());
  }
  return c;
}

const Catalog& Catalog::builtin() {
  static const Catalog c = from_json(detail::embedded_catalog_json());
  return c;
}

const FamilyRecord* Catalog::find(std::string_view name) const {
  const std::string key = normalize_family_name(name);
  for (const auto& f : families_)
    if (f.name == key) return &f;
  return nullptr;
}

const FamilyRecord& Catalog::at(std::string_view name) const {
  const FamilyRecord* f = find(name);
  if (!f) throw InputError("unknown family '" + std::string(name) + "'");
  return *f;
}

std::string normalize_family_name(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '_' || c == '{' || c == '}' || c == ' ') continue;
    if (c == '.') c = ',';
    out.push_back(c);
  }
  return out;
}

}  // namespace pencilrank
