#include "pencilrank/sturm.hpp"

#include "pencilrank/errors.hpp"

namespace pencilrank {

std::vector<PolyQ> sturm_chain(const PolyQ& p) {
  std::vector<PolyQ> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  PolyQ d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d);
  while (true) {
    PolyQ r = -(chain[chain.size() - 2] % chain.back());
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  return chain;
}

namespace {

int sign_at(const PolyQ& q, const Bound& x) {
  switch (x.kind) {
    case Bound::Kind::finite:
      return q.evaluate(x.value).sign();
    case Bound::Kind::pos_inf:
      return q.leading().sign();
    case Bound::Kind::neg_inf:
      return (q.degree() % 2 == 0) ? q.leading().sign() : -q.leading().sign();
  }
  return 0;
}

int variations(const std::vector<PolyQ>& chain, const Bound& x) {
  int count = 0;
  int last = 0;
  for (const auto& q : chain) {
    const int s = sign_at(q, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

bool less(const Bound& a, const Bound& b) {
  if (a.kind == Bound::Kind::neg_inf) return b.kind != Bound::Kind::neg_inf;
  if (a.kind == Bound::Kind::pos_inf) return false;
  if (b.kind == Bound::Kind::pos_inf) return true;
  if (b.kind == Bound::Kind::neg_inf) return false;
  return a.value < b.value;
}

}  // namespace

int sturm_real_root_count(const PolyQ& p, const Bound& lo, const Bound& hi) {
  if (p.is_zero()) throw InputError("Sturm count of the zero polynomial");
  if (!less(lo, hi)) return 0;
  const auto chain = sturm_chain(p);
  return variations(chain, lo) - variations(chain, hi);
}

int real_root_count(const PolyQ& p) {
  return sturm_real_root_count(squarefree_part(p), Bound::neg_infinity(), Bound::pos_infinity());
}

Rational root_bound(const PolyQ& p) {
  if (p.degree() <= 0) return Rational(1);
  Rational m(0);
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = (p.coeff(i) / p.leading()).abs();
    if (r > m) m = r;
  }
  return m + 1;
}

std::vector<RootInterval> isolate_real_roots(const PolyQ& p) {
  std::vector<RootInterval> out;
  if (p.degree() <= 0) return out;
  const PolyQ f = squarefree_part(p);
  const auto chain = sturm_chain(f);
  const Rational bound = root_bound(f);
  struct Pending {
    Rational lo, hi;
    int count;
  };
  std::vector<Pending> stack;
  const int total = variations(chain, -bound) - variations(chain, bound);
  if (total > 0) stack.push_back({-bound, bound, total});
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    if (cur.count == 1) {
      out.push_back({cur.lo, cur.hi});
      continue;
    }
    const Rational mid = (cur.lo + cur.hi) / 2;
    const int vm = variations(chain, mid);
    const int left = variations(chain, cur.lo) - vm;
    const int right = cur.count - left;
    if (right > 0) stack.push_back({mid, cur.hi, right});
    if (left > 0) stack.push_back({cur.lo, mid, left});
  }
  return out;
}

void refine_root(const PolyQ& p, RootInterval& interval, const Rational& width) {
  const PolyQ f = squarefree_part(p);
  while (interval.hi - interval.lo > width) {
    const Rational mid = (interval.lo + interval.hi) / 2;
    const int s_mid = f.evaluate(mid).sign();
    if (s_mid == 0) {
      // Root sits exactly at mid: the interval (lo, mid] keeps it.
      interval.hi = mid;
      continue;
    }
    const int s_hi = f.evaluate(interval.hi).sign();
    if (s_hi == 0 || s_mid != s_hi) {
      interval.lo = mid;
    } else {
      interval.hi = mid;
    }
  }
}

}  // namespace pencilrank
