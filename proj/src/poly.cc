#include "zkpcp/poly.h"

#include <algorithm>
#include <stdexcept>

namespace zkpcp {

MultiPoly::MultiPoly(DegreeVector bounds) : bounds_(std::move(bounds)) {
  strides_.assign(bounds_.size(), 1);
  std::size_t n = 1;
  for (std::size_t i = bounds_.size(); i-- > 0;) {
    strides_[i] = n;
    n *= bounds_[i] + 1;
  }
  coeffs_.assign(n, Fe(0));
}

std::size_t MultiPoly::index_of(std::span<const std::size_t> exps) const {
  if (exps.size() != bounds_.size())
    throw std::invalid_argument("exponent arity mismatch");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] > bounds_[i]) throw std::out_of_range("exponent above bound");
    idx += exps[i] * strides_[i];
  }
  return idx;
}

std::vector<std::size_t> MultiPoly::exponents_of(std::size_t index) const {
  std::vector<std::size_t> e(bounds_.size());
  for (std::size_t i = 0; i < bounds_.size(); ++i) {
    e[i] = index / strides_[i];
    index %= strides_[i];
  }
  return e;
}

Fe MultiPoly::eval(const PrimeField& f, std::span<const Fe> x) const {
  if (x.size() != arity()) throw std::invalid_argument("eval: arity mismatch");
  // Horner, innermost variable last.
  std::vector<Fe> acc(coeffs_);
  std::size_t len = acc.size();
  for (std::size_t v = arity(); v-- > 0;) {
    const std::size_t k = bounds_[v] + 1;
    const std::size_t groups = len / k;
    for (std::size_t g = 0; g < groups; ++g) {
      Fe r(0);
      for (std::size_t e = k; e-- > 0;)
        r = f.add(f.mul(r, x[v]), acc[g * k + e]);
      acc[g] = r;
    }
    len = groups;
  }
  return acc[0];
}

bool MultiPoly::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](Fe c) { return c.value() == 0; });
}

DegreeVector MultiPoly::degrees() const {
  DegreeVector d(arity(), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].value() == 0) continue;
    auto e = exponents_of(i);
    for (std::size_t v = 0; v < arity(); ++v) d[v] = std::max(d[v], e[v]);
  }
  return d;
}

MultiPoly MultiPoly::rebound(const DegreeVector& bounds) const {
  if (bounds.size() != arity())
    throw std::invalid_argument("rebound: arity mismatch");
  MultiPoly out(bounds);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].value() == 0) continue;
    auto e = exponents_of(i);
    for (std::size_t v = 0; v < arity(); ++v)
      if (e[v] > bounds[v])
        throw std::invalid_argument("rebound: degree exceeds new bound");
    out.coeffs_[out.index_of(e)] = coeffs_[i];
  }
  return out;
}

namespace {

DegreeVector max_bounds(const MultiPoly& a, const MultiPoly& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("arity mismatch");
  DegreeVector d(a.arity());
  for (std::size_t i = 0; i < d.size(); ++i)
    d[i] = std::max(a.bounds()[i], b.bounds()[i]);
  return d;
}

}  // namespace

MultiPoly add(const PrimeField& f, const MultiPoly& a, const MultiPoly& b) {
  const DegreeVector d = max_bounds(a, b);
  MultiPoly out = a.rebound(d);
  MultiPoly bb = b.rebound(d);
  for (std::size_t i = 0; i < out.num_coeffs(); ++i)
    out.coeffs()[i] = f.add(out.coeffs()[i], bb.coeffs()[i]);
  return out;
}

MultiPoly scale(const PrimeField& f, Fe c, const MultiPoly& a) {
  MultiPoly out = a;
  for (auto& v : out.coeffs()) v = f.mul(c, v);
  return out;
}

MultiPoly sub(const PrimeField& f, const MultiPoly& a, const MultiPoly& b) {
  return add(f, a, scale(f, f.neg(f.one()), b));
}

MultiPoly mul(const PrimeField& f, const MultiPoly& a, const MultiPoly& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("arity mismatch");
  DegreeVector d(a.arity());
  for (std::size_t i = 0; i < d.size(); ++i)
    d[i] = a.bounds()[i] + b.bounds()[i];
  MultiPoly out(d);
  std::vector<std::size_t> e(a.arity());
  for (std::size_t i = 0; i < a.num_coeffs(); ++i) {
    const Fe x = a.coeffs()[i];
    if (x.value() == 0) continue;
    const auto ea = a.exponents_of(i);
    for (std::size_t j = 0; j < b.num_coeffs(); ++j) {
      const Fe y = b.coeffs()[j];
      if (y.value() == 0) continue;
      const auto eb = b.exponents_of(j);
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
      Fe& slot = out.coeffs()[out.index_of(e)];
      slot = f.add(slot, f.mul(x, y));
    }
  }
  return out;
}

MultiPoly reverse_variables(const MultiPoly& p) {
  DegreeVector d(p.bounds().rbegin(), p.bounds().rend());
  MultiPoly out(d);
  for (std::size_t i = 0; i < p.num_coeffs(); ++i) {
    auto e = p.exponents_of(i);
    std::reverse(e.begin(), e.end());
    out.coeffs()[out.index_of(e)] = p.coeffs()[i];
  }
  return out;
}

MultiPoly in_variable(std::size_t arity, std::size_t var,
                      std::span<const Fe> coeffs) {
  if (var >= arity || coeffs.empty())
    throw std::invalid_argument("in_variable: bad arguments");
  DegreeVector d(arity, 0);
  d[var] = coeffs.size() - 1;
  MultiPoly out(d);
  std::vector<std::size_t> e(arity, 0);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    e[var] = k;
    out.set_coeff(e, coeffs[k]);
  }
  return out;
}

std::vector<Fe> vanishing(const PrimeField& f, std::span<const Fe> s) {
  std::vector<Fe> c{f.one()};
  for (Fe r : s) {
    std::vector<Fe> next(c.size() + 1, Fe(0));
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] = f.add(next[k + 1], c[k]);
      next[k] = f.sub(next[k], f.mul(r, c[k]));
    }
    c = std::move(next);
  }
  return c;
}

Fe eval_univariate(const PrimeField& f, std::span<const Fe> coeffs, Fe x) {
  Fe r(0);
  for (std::size_t k = coeffs.size(); k-- > 0;) r = f.add(f.mul(r, x), coeffs[k]);
  return r;
}

std::vector<Fe> interpolate_univariate(const PrimeField& f,
                                       std::span<const Fe> nodes,
                                       std::span<const Fe> values) {
  if (nodes.size() != values.size() || nodes.empty())
    throw std::invalid_argument("interpolate_univariate: size mismatch");
  std::vector<Fe> out(nodes.size(), Fe(0));
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    std::vector<Fe> others;
    Fe denom = f.one();
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      if (k == j) continue;
      if (nodes[k] == nodes[j])
        throw std::invalid_argument("interpolate_univariate: repeated node");
      others.push_back(nodes[k]);
      denom = f.mul(denom, f.sub(nodes[j], nodes[k]));
    }
    const Fe s = f.mul(values[j], f.inv(denom));
    const auto basis = vanishing(f, others);
    for (std::size_t k = 0; k < basis.size(); ++k)
      out[k] = f.add(out[k], f.mul(s, basis[k]));
  }
  return out;
}

MultiPoly lagrange(const PrimeField& f, const ProductSet& s, const Point& w) {
  if (!s.contains(w)) throw std::invalid_argument("lagrange: w not in S");
  MultiPoly out(DegreeVector(s.arity(), 0));
  out.coeffs()[0] = f.one();
  for (std::size_t i = 0; i < s.arity(); ++i) {
    std::vector<Fe> vals(s.factor(i).size(), Fe(0));
    for (std::size_t k = 0; k < vals.size(); ++k)
      if (s.factor(i)[k] == w[i]) vals[k] = f.one();
    const auto c = interpolate_univariate(f, s.factor(i), vals);
    out = mul(f, out, in_variable(s.arity(), i, c));
  }
  return out;
}

MultiPoly interpolate(const PrimeField& f, const ProductSet& s,
                      std::span<const Fe> values) {
  const auto pts = s.points();
  if (values.size() != pts.size())
    throw std::invalid_argument("interpolate: value count mismatch");
  DegreeVector d(s.arity());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = s.factor(i).size() - 1;
  MultiPoly out(d);
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (values[k].value() == 0) continue;
    out = add(f, out, scale(f, values[k], lagrange(f, s, pts[k])));
  }
  return out;
}

MultiPoly random_poly(const PrimeField& f, const DegreeVector& d, Rng& rng) {
  MultiPoly out(d);
  for (auto& c : out.coeffs()) c = f.sample(rng);
  return out;
}

MultiPoly sample_lde(const PrimeField& f, const ProductSet& s,
                     std::span<const Fe> values, const DegreeVector& d,
                     Rng& rng) {
  if (d.size() != s.arity())
    throw std::invalid_argument("sample_lde: arity mismatch");
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] + 1 < s.factor(i).size())
      throw std::invalid_argument("sample_lde: degree below |S_i| - 1");
  MultiPoly out = interpolate(f, s, values).rebound(d);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < s.factor(i).size()) continue;
    DegreeVector di = d;
    di[i] = d[i] - s.factor(i).size();
    const MultiPoly t = random_poly(f, di, rng);
    const auto z = vanishing(f, s.factor(i));
    out = add(f, out, mul(f, in_variable(d.size(), i, z), t).rebound(d));
  }
  return out;
}

Fe subcube_sum(const PrimeField& f, const MultiPoly& p, const ProductSet& h,
               const Point& prefix) {
  if (h.arity() != p.arity() || prefix.length() > p.arity())
    throw std::invalid_argument("subcube_sum: arity mismatch");
  Fe total(0);
  std::vector<Fe> x(prefix.coords());
  for (const auto& tail : h.trailing(prefix.length()).points()) {
    x.resize(prefix.length());
    x.insert(x.end(), tail.coords().begin(), tail.coords().end());
    total = f.add(total, p.eval(f, x));
  }
  return total;
}

std::vector<Fe> monomial_values(const PrimeField& f, const DegreeVector& d,
                                std::span<const Fe> x) {
  if (x.size() != d.size())
    throw std::invalid_argument("monomial_values: arity mismatch");
  std::vector<Fe> out{f.one()};
  for (std::size_t v = 0; v < d.size(); ++v) {
    std::vector<Fe> next;
    next.reserve(out.size() * (d[v] + 1));
    for (Fe base : out) {
      Fe pw = base;
      for (std::size_t e = 0; e <= d[v]; ++e) {
        next.push_back(pw);
        pw = f.mul(pw, x[v]);
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<Fe> evaluate_on_grid(const PrimeField& f, const MultiPoly& p) {
  const std::size_t m = p.arity();
  const std::uint64_t q = f.modulus();
  std::size_t maxdeg = 0;
  for (auto b : p.bounds()) maxdeg = std::max(maxdeg, b);
  std::vector<Fe> powers(q * (maxdeg + 1));
  for (std::uint64_t x = 0; x < q; ++x) {
    Fe pw = f.one();
    for (std::size_t e = 0; e <= maxdeg; ++e) {
      powers[x * (maxdeg + 1) + e] = pw;
      pw = f.mul(pw, Fe(x));
    }
  }
  std::vector<Fe> cur = p.coeffs();
  std::size_t inner = 1;
  for (std::size_t v = m; v-- > 0;) {
    const std::size_t k = p.bounds()[v] + 1;
    const std::size_t outer = cur.size() / (k * inner);
    std::vector<Fe> next(outer * q * inner, Fe(0));
    for (std::size_t o = 0; o < outer; ++o)
      for (std::uint64_t x = 0; x < q; ++x)
        for (std::size_t e = 0; e < k; ++e) {
          const Fe pw = powers[x * (maxdeg + 1) + e];
          const Fe* src = &cur[(o * k + e) * inner];
          Fe* dst = &next[(o * q + x) * inner];
          for (std::size_t i = 0; i < inner; ++i)
            dst[i] = f.add(dst[i], f.mul(pw, src[i]));
        }
    cur = std::move(next);
    inner *= q;
  }
  return cur;
}

}  // namespace zkpcp
