#include "strmod/polynomials.hpp"

#include <sstream>

namespace strmod {

namespace {

std::vector<Scalar> strip(FieldSpec f, std::vector<Scalar> c) {
  while (!c.empty() && f.is_zero(c.back()))
    c.pop_back();
  return c;
}

} // namespace

Poly::Poly(FieldSpec f, std::vector<Scalar> c)
    : field(f), coeff(strip(f, std::move(c))) {}

bool Poly::is_monic() const {
  return !is_zero() && field.is_one(coeff.back());
}

Scalar Poly::leading() const {
  if (is_zero())
    throw UsageError("leading coefficient of the zero polynomial");
  return coeff.back();
}

Poly Poly::constant(FieldSpec f, const Scalar& c) {
  return Poly(f, std::vector<Scalar>{c});
}

Poly Poly::x(FieldSpec f) {
  return Poly(f, std::vector<Scalar>{f.zero(), f.one()});
}

Poly Poly::from_ints(FieldSpec f, const std::vector<std::int64_t>& c) {
  std::vector<Scalar> v;
  v.reserve(c.size());
  for (std::int64_t n : c)
    v.push_back(f.from_int(n));
  return Poly(f, std::move(v));
}

bool Poly::operator==(const Poly& o) const {
  return field == o.field && coeff == o.coeff;
}

std::string Poly::to_string() const {
  if (is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    if (field.is_zero(coeff[k]))
      continue;
    if (!first)
      os << " + ";
    first = false;
    const bool unit = field.is_one(coeff[k]);
    if (k == 0 || !unit)
      os << field.to_string(coeff[k]);
    if (k > 0) {
      if (!unit)
        os << ' ';
      os << 't';
      if (k > 1)
        os << '^' << k;
    }
  }
  return os.str();
}

Poly add(const Poly& a, const Poly& b) {
  if (a.field != b.field)
    throw UsageError("field mismatch in polynomial sum");
  const FieldSpec& f = a.field;
  std::vector<Scalar> c(std::max(a.coeff.size(), b.coeff.size()), f.zero());
  for (std::size_t k = 0; k < c.size(); ++k) {
    Scalar s = k < a.coeff.size() ? a.coeff[k] : f.zero();
    if (k < b.coeff.size())
      s = f.add(s, b.coeff[k]);
    c[k] = s;
  }
  return Poly(f, std::move(c));
}

Poly sub(const Poly& a, const Poly& b) { return add(a, scale(b, b.field.from_int(-1))); }

Poly mul(const Poly& a, const Poly& b) {
  if (a.field != b.field)
    throw UsageError("field mismatch in polynomial product");
  const FieldSpec& f = a.field;
  if (a.is_zero() || b.is_zero())
    return Poly::zero(f);
  std::vector<Scalar> c(a.coeff.size() + b.coeff.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.coeff.size(); ++i) {
    if (f.is_zero(a.coeff[i]))
      continue;
    for (std::size_t j = 0; j < b.coeff.size(); ++j)
      c[i + j] = f.add(c[i + j], f.mul(a.coeff[i], b.coeff[j]));
  }
  return Poly(f, std::move(c));
}

Poly scale(const Poly& a, const Scalar& c) {
  std::vector<Scalar> v(a.coeff.size(), a.field.zero());
  for (std::size_t k = 0; k < a.coeff.size(); ++k)
    v[k] = a.field.mul(a.coeff[k], c);
  return Poly(a.field, std::move(v));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (a.field != b.field)
    throw UsageError("field mismatch in polynomial division");
  if (b.is_zero())
    throw UsageError("polynomial division by zero");
  const FieldSpec& f = a.field;
  std::vector<Scalar> rem = a.coeff;
  const int db = b.degree();
  const Scalar lead_inv = f.inv(b.leading());
  if (a.degree() < db)
    return {Poly::zero(f), a};
  std::vector<Scalar> quo(a.degree() - db + 1, f.zero());
  for (int k = a.degree(); k >= db; --k) {
    const Scalar c = rem[k];
    if (f.is_zero(c))
      continue;
    const Scalar q = f.mul(c, lead_inv);
    quo[k - db] = q;
    for (int j = 0; j <= db; ++j)
      rem[k - db + j] = f.sub(rem[k - db + j], f.mul(q, b.coeff[j]));
  }
  return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
}

Poly make_monic(const Poly& a) {
  if (a.is_zero())
    return a;
  return scale(a, a.field.inv(a.leading()));
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly u = a, v = b;
  while (!v.is_zero()) {
    Poly r = divmod(u, v).second;
    u = v;
    v = r;
  }
  return make_monic(u);
}

Poly derivative(const Poly& a) {
  const FieldSpec& f = a.field;
  if (a.degree() < 1)
    return Poly::zero(f);
  std::vector<Scalar> c(a.coeff.size() - 1, f.zero());
  for (std::size_t k = 1; k < a.coeff.size(); ++k)
    c[k - 1] = f.mul(a.coeff[k], f.from_int(static_cast<std::int64_t>(k)));
  return Poly(f, std::move(c));
}

Scalar eval(const Poly& a, const Scalar& x) {
  const FieldSpec& f = a.field;
  Scalar acc = f.zero();
  for (int k = a.degree(); k >= 0; --k)
    acc = f.add(f.mul(acc, x), a.coeff[k]);
  return acc;
}

Poly pow_mod(const Poly& base, const mpz_class& e, const Poly& m) {
  if (m.degree() < 1)
    throw UsageError("modulus must have degree >= 1");
  if (e < 0)
    throw UsageError("negative exponent");
  const FieldSpec& f = base.field;
  Poly result = Poly::constant(f, f.one());
  Poly b = divmod(base, m).second;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0)
    return result;
  for (std::size_t i = bits; i-- > 0;) {
    result = divmod(mul(result, result), m).second;
    if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i)))
      result = divmod(mul(result, b), m).second;
  }
  return result;
}

Matrix companion_matrix(const Poly& f) {
  if (!f.is_monic() || f.degree() < 1)
    throw UsageError("companion matrix needs a monic polynomial of degree >= 1");
  const int n = f.degree();
  Matrix m(f.field, n, n);
  for (int i = 0; i + 1 < n; ++i)
    m.set_int(i + 1, i, 1);
  for (int i = 0; i < n; ++i)
    m.set(i, n - 1, f.field.neg(f.coeff[i]));
  return m;
}

PolyExtGcd ext_gcd(const Poly& a, const Poly& b) {
  const FieldSpec& f = a.field;
  Poly r0 = a, r1 = b;
  Poly u0 = Poly::constant(f, f.one()), u1 = Poly::zero(f);
  Poly v0 = Poly::zero(f), v1 = Poly::constant(f, f.one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly nu = sub(u0, mul(q, u1));
    Poly nv = sub(v0, mul(q, v1));
    r0 = r1;
    r1 = r;
    u0 = u1;
    u1 = nu;
    v0 = v1;
    v1 = nv;
  }
  if (r0.is_zero())
    return {r0, u0, v0};
  const Scalar lead_inv = f.inv(r0.leading());
  return {scale(r0, lead_inv), scale(u0, lead_inv), scale(v0, lead_inv)};
}

namespace {

// p-th root of a polynomial of the form u(x^p) over GF(p); Frobenius fixes
// the prime subfield, so coefficients carry over unchanged.
Poly pth_root(const Poly& f) {
  const std::int64_t p = f.field.characteristic();
  std::vector<Scalar> c;
  for (std::size_t k = 0; k < f.coeff.size(); k += static_cast<std::size_t>(p))
    c.push_back(f.coeff[k]);
  return Poly(f.field, std::move(c));
}

std::vector<PolyPower> squarefree_char_p(const Poly& f_in) {
  const FieldSpec& fld = f_in.field;
  const std::int64_t p = fld.characteristic();
  std::vector<PolyPower> out;
  Poly f = make_monic(f_in);
  Poly fp = derivative(f);
  if (fp.is_zero()) {
    // f = u(x^p)
    for (auto& pp : squarefree_char_p(pth_root(f)))
      out.push_back({pp.factor, pp.multiplicity * static_cast<int>(p)});
    return out;
  }
  Poly c = gcd(f, fp);
  Poly w = divmod(f, c).first;
  int i = 1;
  while (!w.is_constant()) {
    Poly y = gcd(w, c);
    Poly z = divmod(w, y).first;
    if (!z.is_constant())
      out.push_back({make_monic(z), i});
    w = y;
    c = divmod(c, y).first;
    ++i;
  }
  if (!c.is_constant())
    for (auto& pp : squarefree_char_p(pth_root(c)))
      out.push_back({pp.factor, pp.multiplicity * static_cast<int>(p)});
  return out;
}

std::vector<PolyPower> squarefree_char_0(const Poly& f_in) {
  // Yun
  std::vector<PolyPower> out;
  Poly f = make_monic(f_in);
  Poly fp = derivative(f);
  Poly g = gcd(f, fp);
  Poly b = divmod(f, g).first;
  Poly c = divmod(fp, g).first;
  Poly d = sub(c, derivative(b));
  int i = 1;
  while (b.degree() > 0) {
    Poly a = gcd(b, d);
    if (!a.is_constant())
      out.push_back({make_monic(a), i});
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = sub(c, derivative(b));
    ++i;
  }
  return out;
}

// distinct-degree buckets of a squarefree monic f over GF(p)
std::vector<PolyPower> ddf(const Poly& f) {
  const FieldSpec& fld = f.field;
  const mpz_class p(static_cast<long>(fld.characteristic()));
  std::vector<PolyPower> out; // multiplicity field holds the factor degree
  Poly rest = f;
  Poly h = divmod(Poly::x(fld), rest).second;
  int d = 1;
  while (rest.degree() >= 2 * d) {
    h = pow_mod(h, p, rest);
    Poly g = gcd(rest, sub(h, Poly::x(fld)));
    if (!g.is_constant()) {
      out.push_back({g, d});
      rest = divmod(rest, g).first;
      h = divmod(h, rest).second;
    }
    ++d;
  }
  if (!rest.is_constant())
    out.push_back({rest, rest.degree()});
  return out;
}

Poly random_poly_below(FieldSpec fld, int degree_bound, Rng& rng) {
  std::vector<Scalar> c(static_cast<std::size_t>(degree_bound), fld.zero());
  for (auto& e : c)
    e = fld.from_int(static_cast<std::int64_t>(
        rng.below(static_cast<std::uint64_t>(fld.characteristic()))));
  return Poly(fld, std::move(c));
}

// split a squarefree product of >= 2 irreducibles, all of degree d
Poly equal_degree_factor(const Poly& f, int d, Rng& rng) {
  const FieldSpec& fld = f.field;
  const std::int64_t p = fld.characteristic();
  for (int attempt = 0; attempt < 256; ++attempt) {
    Poly a = random_poly_below(fld, f.degree(), rng);
    if (a.is_constant())
      continue;
    Poly g = gcd(f, a);
    if (!g.is_constant() && g.degree() < f.degree())
      return g;
    Poly b(fld);
    if (p == 2) {
      // trace map over GF(2^d)
      b = divmod(a, f).second;
      Poly t = b;
      for (int i = 1; i < d; ++i) {
        b = divmod(mul(b, b), f).second;
        t = add(t, b);
      }
      b = t;
    } else {
      mpz_class e;
      mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p),
                    static_cast<unsigned long>(d));
      e = (e - 1) / 2;
      b = sub(pow_mod(a, e, f), Poly::constant(fld, fld.one()));
    }
    g = gcd(f, b);
    if (!g.is_constant() && g.degree() < f.degree())
      return g;
  }
  throw CertificationError("equal-degree splitting did not converge");
}

// best-effort small integer roots of a squarefree monic rational polynomial
std::optional<Scalar> small_rational_root(const Poly& f) {
  const FieldSpec& fld = f.field;
  for (std::int64_t t = -1000; t <= 1000; ++t) {
    Scalar v = eval(f, fld.from_int(t));
    if (fld.is_zero(v))
      return fld.from_int(t);
  }
  return std::nullopt;
}

Poly poly_power(const Poly& f, int e) {
  Poly r = Poly::constant(f.field, f.field.one());
  for (int i = 0; i < e; ++i)
    r = mul(r, f);
  return r;
}

} // namespace

std::vector<PolyPower> squarefree_decomposition(const Poly& f) {
  if (f.is_zero() || f.is_constant())
    throw UsageError("squarefree decomposition needs degree >= 1");
  if (f.field.is_rationals())
    return squarefree_char_0(f);
  return squarefree_char_p(f);
}

std::optional<std::pair<Poly, Poly>> coprime_split(const Poly& f_in, Rng& rng) {
  if (f_in.is_zero() || f_in.is_constant())
    throw UsageError("coprime split needs degree >= 1");
  const Poly f = make_monic(f_in);
  if (f.degree() == 1)
    return std::nullopt;

  const auto sf = squarefree_decomposition(f);
  if (sf.size() >= 2) {
    Poly g = poly_power(sf[0].factor, sf[0].multiplicity);
    Poly h = divmod(f, g).first;
    return std::make_pair(g, h);
  }
  const Poly& s = sf[0].factor;
  const int m = sf[0].multiplicity;
  if (s.degree() == 1)
    return std::nullopt; // power of a linear

  if (f.field.is_rationals()) {
    auto root = small_rational_root(s);
    if (!root)
      return std::nullopt; // unknown
    Poly lin(f.field,
             std::vector<Scalar>{f.field.neg(*root), f.field.one()});
    Poly g = poly_power(lin, m);
    Poly h = divmod(f, g).first;
    return std::make_pair(g, h);
  }

  const auto buckets = ddf(s);
  Poly u(f.field);
  if (buckets.size() >= 2) {
    u = buckets[0].factor;
  } else if (buckets[0].factor.degree() == buckets[0].multiplicity) {
    return std::nullopt; // s irreducible, f primary
  } else {
    u = equal_degree_factor(buckets[0].factor, buckets[0].multiplicity, rng);
  }
  Poly g = poly_power(u, m);
  Poly h = divmod(f, g).first;
  return std::make_pair(g, h);
}

} // namespace strmod
