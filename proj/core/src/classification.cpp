#include "pencilrank/classification.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include "detail/descriptor_value.hpp"
#include "pencilrank/errors.hpp"

namespace pencilrank {

ParamValue ParamValue::rational(const Rational& v) {
  ParamValue p;
  p.is_rational = true;
  p.value = v;
  p.approx = v.to_double();
  return p;
}

std::string ParamValue::to_string() const {
  if (is_rational) return value.to_string();
  std::ostringstream os;
  if (!min_poly.is_zero()) {
    os << "root #" << root_index << " of " << min_poly.to_string("x") << " ~ " << approx;
  } else {
    os << "~ " << approx;
  }
  return os.str();
}

namespace {

Rational bound_value(const std::map<std::string, Rational>& params, const std::string& sym, const std::string& family) {
  const auto it = params.find(sym);
  if (it == params.end()) throw InputError("family " + family + " needs parameter '" + sym + "'");
  return it->second;
}

void check_constraints(const FamilyRecord& rec, const std::map<std::string, Rational>& params) {
  const auto symbols = rec.symbols();
  for (const auto& [k, v] : params) {
    if (std::find(symbols.begin(), symbols.end(), k) == symbols.end()) {
      throw InputError("family " + rec.name + " has no parameter '" + k + "'");
    }
  }
  std::map<std::string, Rational> jordan;
  std::vector<std::pair<std::string, std::pair<Rational, Rational>>> quads;
  for (const auto& b : rec.blocks) {
    if (b.kind == BlockSpec::Kind::jordan) {
      jordan[b.symbol] = bound_value(params, b.symbol, rec.name);
    } else if (b.kind == BlockSpec::Kind::quadratic) {
      const Rational a = bound_value(params, b.symbol, rec.name);
      const Rational bb = bound_value(params, b.symbol2, rec.name);
      if (bb.is_zero()) throw InputError("family " + rec.name + " needs " + b.symbol2 + " != 0");
      const std::string key = b.symbol + "," + b.symbol2;
      if (std::none_of(quads.begin(), quads.end(), [&](const auto& q) { return q.first == key; })) {
        quads.push_back({key, {a, bb.abs()}});
      }
    }
  }
  for (auto i = jordan.begin(); i != jordan.end(); ++i)
    for (auto j = std::next(i); j != jordan.end(); ++j)
      if (i->second == j->second) {
        throw InputError("family " + rec.name + " needs " + i->first + " != " + j->first);
      }
  for (std::size_t i = 0; i < quads.size(); ++i)
    for (std::size_t j = i + 1; j < quads.size(); ++j)
      if (quads[i].second == quads[j].second) {
        throw InputError("family " + rec.name + " needs distinct quadratic blocks (" + quads[i].first + ") and (" +
                         quads[j].first + ")");
      }
}

}  // namespace

Pencil canonical_representative(const std::string& family, const std::map<std::string, Rational>& params) {
  const FamilyRecord& rec = Catalog::builtin().at(family);
  check_constraints(rec, params);
  Pencil out = Pencil::zero(0, 0);
  for (const auto& b : rec.blocks) {
    switch (b.kind) {
      case BlockSpec::Kind::column:
        out = direct_sum(out, blocks::column_block(b.size));
        break;
      case BlockSpec::Kind::row:
        out = direct_sum(out, blocks::row_block(b.size));
        break;
      case BlockSpec::Kind::jordan:
        out = direct_sum(out, blocks::jordan(b.size, params.at(b.symbol)));
        break;
      case BlockSpec::Kind::quadratic:
        out = direct_sum(out, blocks::quadratic(b.size / 2, params.at(b.symbol), params.at(b.symbol2)));
        break;
    }
  }
  return out;
}

Pencil canonical_representative(const FamilyLabel& label) {
  std::map<std::string, Rational> params;
  for (const auto& [k, v] : label.parameters) {
    if (!v.is_rational) throw InputError("parameter '" + k + "' is irrational; no exact representative");
    params[k] = v.value;
  }
  return canonical_representative(label.name, params);
}

Pencil equivalent_representative(const FamilyRecord& record, const std::map<std::string, Rational>& params) {
  if (!record.has_equivalent()) throw InputError("family " + record.name + " lists no equivalent pencil");
  const auto build = [&](const std::vector<std::vector<std::string>>& cells) {
    MatrixQ m(record.m, record.n);
    for (int i = 0; i < record.m; ++i)
      for (int j = 0; j < record.n; ++j) {
        const std::string& cell = cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        const bool numeric = !cell.empty() && (std::isdigit(static_cast<unsigned char>(cell[0])) || cell[0] == '-');
        m(i, j) = numeric ? Rational::parse(cell) : bound_value(params, cell, record.name);
      }
    return m;
  };
  return Pencil(build(record.equivalent_a), build(record.equivalent_b));
}

std::array<int, 3> multilinear_rank(const Pencil& p) {
  const int r1 = rank_exact(hstack(p.a(), p.b()));
  const int r2 = rank_exact(hstack(p.a().transpose(), p.b().transpose()));
  const int r3 = rank_exact(hstack(vec(p.a()), vec(p.b())));
  return {r1, r2, r3};
}

int tensor_rank_lookup(const FamilyLabel& label) { return Catalog::builtin().at(label.name).tensor_rank; }

namespace {

struct PointGroup {
  EigenvalueDescriptor where;
  std::vector<int> powers;  // ascending
};

std::vector<PointGroup> group_divisors(const KroneckerStructure& ks) {
  std::vector<PointGroup> out;
  const auto add = [&](const EigenvalueDescriptor& d, int power) {
    for (auto& g : out)
      if (g.where == d) {
        g.powers.push_back(power);
        return;
      }
    out.push_back({d, {power}});
  };
  for (const auto& d : ks.finite_divisors) add(d.eigenvalue, d.power);
  for (int v : ks.infinite_divisor_degrees) add(EigenvalueDescriptor::infinity(), v);
  for (auto& g : out) std::sort(g.powers.begin(), g.powers.end());
  return out;
}

std::vector<int> nonzero(const std::vector<int>& v) {
  std::vector<int> out;
  for (int x : v)
    if (x != 0) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

bool perfect_square(const Rational& q, Rational& root) {
  if (q.sign() < 0) return false;
  const Integer num = q.numerator(), den = q.denominator();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  root = Rational(rn, rd);
  return true;
}

// a = -lambda0 for a real eigenvalue lambda0.
ParamValue real_param(const EigenvalueDescriptor& d) {
  if (d.kind == EigenvalueDescriptor::Kind::rational) return ParamValue::rational(-d.value);
  ParamValue p;
  p.is_rational = false;
  p.min_poly = d.min_poly.mobius(-1, 0, 0, 1, d.min_poly.degree()).monic();
  const int real_count = static_cast<int>(isolate_real_roots(d.min_poly).size());
  p.root_index = real_count - 1 - d.index;
  p.approx = -d.approx.real();
  return p;
}

// Eigenvalues -a +- i b of Q_{2k}(a, b) + lambda E.
std::pair<ParamValue, ParamValue> pair_params(const EigenvalueDescriptor& d) {
  ParamValue a, b;
  if (d.min_poly.degree() == 2) {
    const Rational p = d.min_poly.coeff(1), q = d.min_poly.coeff(0);
    a = ParamValue::rational(p / 2);
    const Rational disc = q - p * p / 4;
    Rational root;
    if (perfect_square(disc, root)) {
      b = ParamValue::rational(root);
    } else {
      b.is_rational = false;
      b.min_poly = PolyQ({-disc, 0, 1});
      b.root_index = 1;
      b.approx = std::sqrt(disc.to_double());
    }
    return {a, b};
  }
  a.is_rational = false;
  a.approx = -d.approx.real();
  b.is_rational = false;
  b.approx = std::abs(d.approx.imag());
  return {a, b};
}

bool partition_order(const std::vector<int>& x, const std::vector<int>& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  return x < y;
}

std::optional<FamilyLabel> match(const FamilyRecord& rec, const std::vector<int>& cols, const std::vector<int>& rows,
                                 const std::vector<PointGroup>& groups) {
  std::vector<int> rl, rr;
  std::map<std::string, std::vector<int>> jordan;
  std::map<std::pair<std::string, std::string>, std::vector<int>> quad;
  for (const auto& b : rec.blocks) {
    switch (b.kind) {
      case BlockSpec::Kind::column:
        rl.push_back(b.size);
        break;
      case BlockSpec::Kind::row:
        rr.push_back(b.size);
        break;
      case BlockSpec::Kind::jordan:
        jordan[b.symbol].push_back(b.size);
        break;
      case BlockSpec::Kind::quadratic:
        quad[{b.symbol, b.symbol2}].push_back(b.size / 2);
        break;
    }
  }
  std::sort(rl.begin(), rl.end());
  std::sort(rr.begin(), rr.end());
  if (rl != cols || rr != rows) return std::nullopt;

  std::vector<std::pair<std::vector<int>, std::string>> jsyms;
  for (auto& [s, v] : jordan) {
    std::sort(v.begin(), v.end());
    jsyms.push_back({v, s});
  }
  std::vector<std::pair<std::vector<int>, std::pair<std::string, std::string>>> qsyms;
  for (auto& [s, v] : quad) {
    std::sort(v.begin(), v.end());
    qsyms.push_back({v, s});
  }
  std::vector<const PointGroup*> reals, pairs;
  for (const auto& g : groups) {
    if (g.where.kind == EigenvalueDescriptor::Kind::complex_pair) pairs.push_back(&g);
    else if (g.where.is_real()) reals.push_back(&g);
    else return std::nullopt;
  }
  if (reals.size() != jsyms.size() || pairs.size() != qsyms.size()) return std::nullopt;
  const auto by_partition = [](const auto& x, const auto& y) {
    if (x.first != y.first) return partition_order(x.first, y.first);
    return x.second < y.second;
  };
  std::sort(jsyms.begin(), jsyms.end(), by_partition);
  std::sort(qsyms.begin(), qsyms.end(), by_partition);
  const auto group_order = [](const PointGroup* x, const PointGroup* y) {
    if (x->powers != y->powers) return partition_order(x->powers, y->powers);
    return descriptor_less(x->where, y->where);
  };
  std::sort(reals.begin(), reals.end(), group_order);
  std::sort(pairs.begin(), pairs.end(), group_order);

  FamilyLabel label;
  label.name = rec.name;
  label.m = rec.m;
  label.n = rec.n;
  label.prime_count = rec.prime_count();
  for (std::size_t i = 0; i < reals.size(); ++i) {
    if (reals[i]->powers != jsyms[i].first) return std::nullopt;
    label.parameters[jsyms[i].second] = real_param(reals[i]->where);
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i]->powers != qsyms[i].first) return std::nullopt;
    auto [a, b] = pair_params(pairs[i]->where);
    label.parameters[qsyms[i].second.first] = a;
    label.parameters[qsyms[i].second.second] = b;
  }
  return label;
}

}  // namespace

Classification classify(const Pencil& input) {
  Classification out;
  Pencil p = input;
  KroneckerStructure ks = kronecker_structure(p, Field::real);
  if (!ks.infinite_divisor_degrees.empty()) {
    // Some B + cA has no infinite elementary divisors: the regular part has finitely many eigenvalues.
    for (int c = 1;; ++c) {
      const Gl2Transform t{1, 0, c, 1};
      const Pencil q = p.apply(t);
      KroneckerStructure kq = kronecker_structure(q, Field::real);
      if (kq.infinite_divisor_degrees.empty()) {
        out.mobius = t;
        p = q;
        ks = std::move(kq);
        break;
      }
      check_internal(c < 64, "could not move infinite eigenvalues to finite ones");
    }
  }
  const auto cols = nonzero(ks.min_col_indices);
  const auto rows = nonzero(ks.min_row_indices);
  out.padding.zero_cols = static_cast<int>(ks.min_col_indices.size() - cols.size());
  out.padding.zero_rows = static_cast<int>(ks.min_row_indices.size() - rows.size());
  const int m = p.m() - out.padding.zero_rows;
  const int n = p.n() - out.padding.zero_cols;
  if (m == 0 && n == 0) {
    out.label.name = kZeroFamily;
    out.in_catalog = false;
    return out;
  }
  if (m > 4 || n > 4) {
    throw InputError("pencil reduces to " + std::to_string(m) + "x" + std::to_string(n) +
                     ", outside the 4x4 family catalog");
  }
  const auto groups = group_divisors(ks);
  for (int attempt = 0; attempt < 2; ++attempt) {
    const bool transposed = attempt == 1;
    const int mm = transposed ? n : m, nn = transposed ? m : n;
    if (mm > nn) continue;
    for (const auto& rec : Catalog::builtin().families()) {
      if (rec.m != mm || rec.n != nn) continue;
      auto label = transposed ? match(rec, rows, cols, groups) : match(rec, cols, rows, groups);
      if (label) {
        out.label = std::move(*label);
        out.padding.transposed = transposed;
        return out;
      }
    }
  }
  throw InternalError("no catalog family matches a " + std::to_string(m) + "x" + std::to_string(n) + " structure:\n" +
                      ks.to_string());
}

// ---------------------------------------------------------------------------
// Equivalence under GL_m x GL_n x GL_2(R).

namespace {

using detail::HPComplex;
using detail::HPFloat;

struct EqPoint {
  EigenvalueDescriptor where;  // real point, infinity, or one root of a complex pair
  std::vector<int> powers;
  int pair_id = -1;  // shared by the two roots of a pair
};

std::vector<EqPoint> expand_points(const KroneckerStructure& ks) {
  std::vector<EqPoint> out;
  int next_pair = 0;
  for (const auto& g : group_divisors(ks)) {
    if (g.where.kind == EigenvalueDescriptor::Kind::complex_pair) {
      EigenvalueDescriptor up = g.where, down = g.where;
      up.kind = down.kind = EigenvalueDescriptor::Kind::complex_root;
      up.upper = true;
      down.upper = false;
      down.approx = std::conj(g.where.approx);
      out.push_back({up, g.powers, next_pair});
      out.push_back({down, g.powers, next_pair});
      ++next_pair;
    } else {
      out.push_back({g.where, g.powers, -1});
    }
  }
  return out;
}

// Projective coordinates (x, y) with lambda = x / y; infinity is (1, 0).
template <class T>
using Vec2 = std::array<T, 2>;
template <class T>
using Mat2 = std::array<std::array<T, 2>, 2>;

template <class T>
Vec2<T> map_point(const Mat2<T>& f, const Vec2<T>& v) {
  return {f[0][0] * v[0] + f[0][1] * v[1], f[1][0] * v[0] + f[1][1] * v[1]};
}

// Matrix sending e1, e2, e1 + e2 to multiples of p1, p2, p3 (distinct points); false if degenerate.
template <class T>
bool frame(const Vec2<T>& p1, const Vec2<T>& p2, const Vec2<T>& p3, Mat2<T>& out) {
  const T det = p1[0] * p2[1] - p1[1] * p2[0];
  if (det == T(0)) return false;
  const T alpha = (p3[0] * p2[1] - p3[1] * p2[0]) / det;
  const T beta = (p1[0] * p3[1] - p1[1] * p3[0]) / det;
  out = {{{alpha * p1[0], beta * p2[0]}, {alpha * p1[1], beta * p2[1]}}};
  return true;
}

template <class T>
Mat2<T> inverse2(const Mat2<T>& m) {
  const T det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  return {{{m[1][1] / det, -m[0][1] / det}, {-m[1][0] / det, m[0][0] / det}}};
}

template <class T>
Mat2<T> mul2(const Mat2<T>& a, const Mat2<T>& b) {
  Mat2<T> c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return c;
}

struct ExactOps {
  using T = Rational;
  static Vec2<T> coords(const EigenvalueDescriptor& d) {
    if (d.kind == EigenvalueDescriptor::Kind::infinite) return {Rational(1), Rational(0)};
    return {d.value, Rational(1)};
  }
  static bool same(const Vec2<T>& u, const Vec2<T>& v) { return (u[0] * v[1] - u[1] * v[0]).is_zero(); }
  static bool real_map(const Mat2<T>&) { return true; }
};

struct NumericOps {
  using T = HPComplex;
  static Vec2<T> coords(const EigenvalueDescriptor& d) {
    if (d.kind == EigenvalueDescriptor::Kind::infinite) return {HPComplex(1), HPComplex(0)};
    return {detail::hp_value(d), HPComplex(1)};
  }
  static HPFloat norm(const Vec2<T>& v) {
    const HPFloat a = abs(v[0]), b = abs(v[1]);
    return a > b ? a : b;
  }
  static bool same(const Vec2<T>& u, const Vec2<T>& v) {
    return abs(u[0] * v[1] - u[1] * v[0]) <= HPFloat("1e-60") * norm(u) * norm(v);
  }
  static bool real_map(const Mat2<T>& f) {
    HPComplex pivot(0);
    for (const auto& row : f)
      for (const auto& x : row)
        if (abs(x) > abs(pivot)) pivot = x;
    for (const auto& row : f)
      for (const auto& x : row)
        if (abs((x / pivot).imag()) > HPFloat("1e-60")) return false;
    return true;
  }
};

template <class Ops>
bool search_mobius(const std::vector<EqPoint>& p1, const std::vector<EqPoint>& p2) {
  using T = typename Ops::T;
  std::vector<Vec2<T>> c1, c2;
  for (const auto& p : p1) c1.push_back(Ops::coords(p.where));
  for (const auto& p : p2) c2.push_back(Ops::coords(p.where));

  // Anchors: a full conjugate pair when present, then further points.
  std::vector<std::size_t> anchors;
  for (std::size_t i = 0; i < p1.size() && anchors.empty(); ++i)
    if (p1[i].pair_id >= 0)
      for (std::size_t j = i + 1; j < p1.size(); ++j)
        if (p1[j].pair_id == p1[i].pair_id) anchors = {i, j};
  for (std::size_t i = 0; i < p1.size() && anchors.size() < 3; ++i)
    if (std::find(anchors.begin(), anchors.end(), i) == anchors.end()) anchors.push_back(i);

  const auto compatible = [&](std::size_t i, std::size_t j) {
    return p1[i].powers == p2[j].powers && (p1[i].pair_id >= 0) == (p2[j].pair_id >= 0);
  };
  const auto check = [&](const Mat2<T>& f) {
    if (!Ops::real_map(f)) return false;
    std::vector<bool> used(p2.size(), false);
    for (std::size_t i = 0; i < p1.size(); ++i) {
      const Vec2<T> img = map_point(f, c1[i]);
      bool hit = false;
      for (std::size_t j = 0; j < p2.size() && !hit; ++j) {
        if (used[j] || !compatible(i, j)) continue;
        if (Ops::same(img, c2[j])) {
          used[j] = true;
          hit = true;
        }
      }
      if (!hit) return false;
    }
    return true;
  };

  Mat2<T> src;
  if (!frame(c1[anchors[0]], c1[anchors[1]], c1[anchors[2]], src)) return false;
  const Mat2<T> src_inv = inverse2(src);
  for (std::size_t a = 0; a < p2.size(); ++a) {
    if (!compatible(anchors[0], a)) continue;
    for (std::size_t b = 0; b < p2.size(); ++b) {
      if (b == a || !compatible(anchors[1], b)) continue;
      for (std::size_t c = 0; c < p2.size(); ++c) {
        if (c == a || c == b || !compatible(anchors[2], c)) continue;
        Mat2<T> dst;
        if (!frame(c2[a], c2[b], c2[c], dst)) continue;
        if (check(mul2(dst, src_inv))) return true;
      }
    }
  }
  return false;
}

std::vector<std::pair<bool, std::vector<int>>> signature(const std::vector<EqPoint>& pts) {
  std::vector<std::pair<bool, std::vector<int>>> s;
  for (const auto& p : pts) s.push_back({p.pair_id >= 0, p.powers});
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

EquivalenceResult verify_equivalence_detailed(const Pencil& p1, const Pencil& p2) {
  EquivalenceResult res;
  if (p1.m() != p2.m() || p1.n() != p2.n()) return res;
  const KroneckerStructure k1 = kronecker_structure(p1, Field::real);
  const KroneckerStructure k2 = kronecker_structure(p2, Field::real);
  if (k1.min_col_indices != k2.min_col_indices || k1.min_row_indices != k2.min_row_indices) return res;
  const auto e1 = expand_points(k1);
  const auto e2 = expand_points(k2);
  if (signature(e1) != signature(e2)) return res;

  int pairs = 0;
  for (const auto& p : e1)
    if (p.pair_id >= 0) ++pairs;
  pairs /= 2;
  const int reals = static_cast<int>(e1.size()) - 2 * pairs;
  // Real Moebius maps act 3-transitively on the real line and transitively on conjugate pairs.
  if ((pairs == 0 && reals <= 3) || (pairs == 1 && reals <= 1)) {
    res.equivalent = true;
    return res;
  }
  const auto rational_only = [](const std::vector<EqPoint>& pts) {
    return std::all_of(pts.begin(), pts.end(), [](const EqPoint& p) {
      return p.where.kind == EigenvalueDescriptor::Kind::rational || p.where.kind == EigenvalueDescriptor::Kind::infinite;
    });
  };
  if (rational_only(e1) && rational_only(e2)) {
    res.equivalent = search_mobius<ExactOps>(e1, e2);
  } else {
    res.certified = false;
    res.equivalent = search_mobius<NumericOps>(e1, e2);
  }
  return res;
}

bool verify_equivalence(const Pencil& p1, const Pencil& p2) { return verify_equivalence_detailed(p1, p2).equivalent; }

}  // namespace pencilrank
