#include "sextic/fqf.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "sextic/matrix.hpp"

namespace sextic {

namespace {

i64 lowest_prime(i64 n) {
  for (i64 p = 2; p * p <= n; ++p)
    if (n % p == 0) return p;
  return n;
}

// Position of a numerator in the canonical listing 1, -1, 2, -2, 3, -3, ...
i64 numerator_rank(i64 m) { return m > 0 ? 2 * m : -2 * m + 1; }

}  // namespace

// ---------------------------------------------------------------- FormBlock

FormBlock FormBlock::cyclic(i64 m, i64 n) {
  if (n < 2) throw DomainError("invalid block <" + std::to_string(m) + "/" + std::to_string(n) + ">: order must be >= 2");
  if (gcd64(m, n) != 1)
    throw DomainError("invalid block <" + std::to_string(m) + "/" + std::to_string(n) + ">: fraction not reduced");
  if ((m * n) % 2 != 0)
    throw DomainError("invalid block <" + std::to_string(m) + "/" + std::to_string(n) + ">: m*n must be even");
  FormBlock b;
  b.kind = Kind::Cyclic;
  b.den = n;
  i64 r = mod(m, 2 * n);
  if (r > n) r -= 2 * n;
  b.num = r;
  return b;
}

FormBlock FormBlock::u(int k) {
  if (k < 1 || k > 30) throw DomainError("invalid block U(2^" + std::to_string(k) + ")");
  FormBlock b;
  b.kind = Kind::U;
  b.den = i64(1) << k;
  return b;
}

FormBlock FormBlock::v(int k) {
  if (k < 1 || k > 30) throw DomainError("invalid block V(2^" + std::to_string(k) + ")");
  FormBlock b;
  b.kind = Kind::V;
  b.den = i64(1) << k;
  return b;
}

i64 FormBlock::prime() const { return lowest_prime(den); }

int FormBlock::scale() const { return valuation(den, prime()); }

i64 FormBlock::order() const { return kind == Kind::Cyclic ? den : den * den; }

std::string FormBlock::str() const {
  switch (kind) {
    case Kind::Cyclic:
      return "<" + std::to_string(num) + "/" + std::to_string(den) + ">";
    case Kind::U:
      return "U(" + std::to_string(den) + ")";
    case Kind::V:
      return "V(" + std::to_string(den) + ")";
  }
  return "?";
}

bool FormBlock::operator<(const FormBlock& o) const {
  auto key = [](const FormBlock& b) {
    return std::make_tuple(b.prime(), b.den, static_cast<int>(b.kind), numerator_rank(b.num));
  };
  return key(*this) < key(o);
}

// ---------------------------------------------------------------- FiniteQuadraticForm

FiniteQuadraticForm::FiniteQuadraticForm(std::vector<i64> orders, std::vector<std::vector<i64>> scaled, i64 exponent) {
  std::size_t n = orders.size();
  if (scaled.size() != n) throw DomainError("form: matrix size does not match number of generators");
  for (auto& row : scaled)
    if (row.size() != n) throw DomainError("form: matrix is not square");
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i) {
    if (orders[i] < 1) throw DomainError("form: generator orders must be positive");
    if (orders[i] > 1) keep.push_back(i);
  }
  i64 N = 1;
  for (std::size_t i : keep) N = lcm64(N, orders[i]);
  if (N > (i64(1) << 30)) throw BoundExceeded("form exponent too large: " + std::to_string(N));
  if (exponent % N != 0) throw DomainError("form: scaling exponent is not a multiple of the group exponent");
  i64 f = exponent / N;
  orders_.clear();
  for (std::size_t i : keep) orders_.push_back(orders[i]);
  N_ = N;
  raw_.assign(keep.size(), std::vector<i64>(keep.size(), 0));
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t c = 0; c < keep.size(); ++c) {
      i64 v = scaled[keep[a]][keep[c]];
      if (v % f != 0) throw DomainError("form: value denominators exceed generator orders");
      v /= f;
      raw_[a][c] = a == c ? mod(v, 2 * N) : mod(v, N);
    }
  for (std::size_t i = 0; i < rank(); ++i) {
    i64 d = orders_[i];
    if ((static_cast<__int128>(raw_[i][i]) * d) % N != 0)
      throw DomainError("form: q(g) has denominator not dividing the order of g");
    __int128 t = static_cast<__int128>(raw_[i][i]) * d * d;
    if ((t / N) % 2 != 0) throw DomainError("form: q(d g) must vanish modulo 2");
    for (std::size_t j = 0; j < rank(); ++j) {
      if (i == j) continue;
      if (raw_[i][j] != raw_[j][i]) throw DomainError("form: bilinear form is not symmetric");
      if ((static_cast<__int128>(raw_[i][j]) * gcd64(d, orders_[j])) % N != 0)
        throw DomainError("form: b(g_i,g_j) has denominator not dividing gcd of orders");
    }
  }
}

FiniteQuadraticForm FiniteQuadraticForm::from_matrix(const std::vector<i64>& orders,
                                                     const std::vector<std::vector<Rat>>& q_matrix) {
  i64 N = 1;
  for (i64 d : orders) N = lcm64(N, d);
  std::size_t n = orders.size();
  std::vector<std::vector<i64>> raw(n, std::vector<i64>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rat v = q_matrix.at(i).at(j) * N;
      v.canonicalize();
      if (v.get_den() != 1) throw DomainError("form: value " + rat_str(q_matrix[i][j]) + " has an invalid denominator");
      raw[i][j] = to_i64(v.get_num());
    }
  FiniteQuadraticForm f(orders, raw, N);
  if (!f.nondegenerate()) throw DomainError("form: bilinear form is degenerate");
  return f;
}

i64 FiniteQuadraticForm::size() const {
  i64 s = 1;
  for (i64 d : orders_) {
    if (s > (i64(1) << 62) / d) throw BoundExceeded("group order overflows 64 bits");
    s *= d;
  }
  return s;
}

std::vector<std::vector<Rat>> FiniteQuadraticForm::q_matrix() const {
  std::vector<std::vector<Rat>> m(rank(), std::vector<Rat>(rank()));
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) {
      m[i][j] = Rat(raw_[i][j], N_);
      m[i][j].canonicalize();
    }
  return m;
}

i64 FiniteQuadraticForm::q_scaled(const Element& x) const {
  __int128 s = 0, M = 2 * static_cast<__int128>(N_);
  std::size_t n = rank();
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    s += static_cast<__int128>(x[i]) * x[i] % M * raw_[i][i];
    for (std::size_t j = i + 1; j < n; ++j)
      if (x[j] != 0) s += 2 * (static_cast<__int128>(x[i]) * x[j] % N_) * raw_[i][j];
    s %= M;
  }
  return static_cast<i64>(s % M);
}

i64 FiniteQuadraticForm::b_scaled(const Element& x, const Element& y) const {
  __int128 s = 0;
  std::size_t n = rank();
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (y[j] != 0) s += static_cast<__int128>(x[i]) * y[j] % N_ * (raw_[i][j] % N_);
    s %= N_;
  }
  return static_cast<i64>(s % N_);
}

Rat FiniteQuadraticForm::q(const Element& x) const {
  Rat r(q_scaled(x), N_);
  r.canonicalize();
  return r;
}

Rat FiniteQuadraticForm::b(const Element& x, const Element& y) const {
  Rat r(b_scaled(x, y), N_);
  r.canonicalize();
  return r;
}

Element FiniteQuadraticForm::unit(std::size_t i) const {
  Element e = zero();
  e[i] = 1;
  return e;
}

Element FiniteQuadraticForm::add(const Element& x, const Element& y) const {
  Element r(rank());
  for (std::size_t i = 0; i < rank(); ++i) r[i] = mod(x[i] + y[i], orders_[i]);
  return r;
}

Element FiniteQuadraticForm::scale(const Element& x, i64 k) const {
  Element r(rank());
  for (std::size_t i = 0; i < rank(); ++i)
    r[i] = static_cast<i64>(mod(static_cast<i64>(static_cast<__int128>(x[i]) * mod(k, orders_[i]) % orders_[i]),
                                orders_[i]));
  return r;
}

Element FiniteQuadraticForm::reduce(Element x) const {
  for (std::size_t i = 0; i < rank(); ++i) x[i] = mod(x[i], orders_[i]);
  return x;
}

i64 FiniteQuadraticForm::order_of(const Element& x) const {
  i64 o = 1;
  for (std::size_t i = 0; i < rank(); ++i) o = lcm64(o, orders_[i] / gcd64(mod(x[i], orders_[i]), orders_[i]));
  return o;
}

i64 FiniteQuadraticForm::index_of(const Element& x) const {
  i64 idx = 0, stride = 1;
  for (std::size_t i = 0; i < rank(); ++i) {
    idx += mod(x[i], orders_[i]) * stride;
    stride *= orders_[i];
  }
  return idx;
}

Element FiniteQuadraticForm::element_at(i64 index) const {
  Element x(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    x[i] = index % orders_[i];
    index /= orders_[i];
  }
  return x;
}

std::vector<Element> FiniteQuadraticForm::elements(i64 bound) const {
  i64 n = size();
  if (n > bound)
    throw BoundExceeded("group of order " + std::to_string(n) + " exceeds enumeration bound " + std::to_string(bound));
  std::vector<Element> out;
  out.reserve(n);
  for (i64 i = 0; i < n; ++i) out.push_back(element_at(i));
  return out;
}

bool FiniteQuadraticForm::nondegenerate() const {
  std::size_t n = rank();
  if (n == 0) return true;
  IntMat rows;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec r(n);
    for (std::size_t j = 0; j < n; ++j) r[j] = Int(static_cast<long>(((raw_[i][j] % N_) * (orders_[j])) / N_));
    rows.push_back(r);
  }
  for (std::size_t j = 0; j < n; ++j) {
    IntVec r(n, Int(0));
    r[j] = Int(static_cast<long>(orders_[j]));
    rows.push_back(r);
  }
  IntMat h = hnf_rows(rows);
  Int index = 1;
  for (std::size_t i = 0; i < h.size(); ++i) index *= h[i][i];
  // |image| = |G| / index must equal |G|.
  return abs(index) == 1;
}

std::string FiniteQuadraticForm::str() const { return to_string(normal_form(*this)); }

// ---------------------------------------------------------------- small helpers

bool Subgroup::contains(i64 index) const { return std::binary_search(elements.begin(), elements.end(), index); }

Element FormAutomorphism::apply(const FiniteQuadraticForm& f, const Element& x) const {
  Element r = f.zero();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) r = f.add(r, f.scale(images[i], x[i]));
  return r;
}

FormAutomorphism FormAutomorphism::compose(const FiniteQuadraticForm& f, const FormAutomorphism& inner) const {
  FormAutomorphism c;
  for (const Element& y : inner.images) c.images.push_back(apply(f, y));
  return c;
}

std::vector<i64> FormAutomorphism::key(const FiniteQuadraticForm& f) const {
  std::vector<i64> k;
  for (const Element& y : images) k.push_back(f.index_of(y));
  return k;
}

FormAutomorphism FormAutomorphism::identity(const FiniteQuadraticForm& f) {
  FormAutomorphism a;
  for (std::size_t i = 0; i < f.rank(); ++i) a.images.push_back(f.unit(i));
  return a;
}

Element QuotientForm::project(const FiniteQuadraticForm& ambient, const Element& x) const {
  i64 idx = projection.at(ambient.index_of(x));
  if (idx < 0) throw DomainError("project: element is not in the orthogonal complement of the kernel");
  return form.element_at(idx);
}

// ---------------------------------------------------------------- constructions

FiniteQuadraticForm from_blocks(const std::vector<FormBlock>& blocks) {
  std::vector<i64> orders;
  std::vector<std::pair<std::size_t, FormBlock>> placed;
  for (const FormBlock& blk : blocks) {
    FormBlock b = blk;
    if (b.kind == FormBlock::Kind::Cyclic) b = FormBlock::cyclic(blk.num, blk.den);
    placed.emplace_back(orders.size(), b);
    if (b.kind == FormBlock::Kind::Cyclic) {
      orders.push_back(b.den);
    } else {
      orders.push_back(b.den);
      orders.push_back(b.den);
    }
  }
  std::size_t n = orders.size();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
  for (auto& [at, b] : placed) {
    if (b.kind == FormBlock::Kind::Cyclic) {
      m[at][at] = Rat(b.num, b.den);
    } else {
      Rat off(1, b.den);
      m[at][at + 1] = m[at + 1][at] = off;
      if (b.kind == FormBlock::Kind::V) m[at][at] = m[at + 1][at + 1] = Rat(2, b.den);
    }
  }
  for (auto& row : m)
    for (auto& x : row) x.canonicalize();
  return FiniteQuadraticForm::from_matrix(orders, m);
}

FiniteQuadraticForm direct_sum(const FiniteQuadraticForm& f, const FiniteQuadraticForm& g) {
  std::size_t a = f.rank(), c = g.rank();
  i64 N = lcm64(f.exponent(), g.exponent());
  std::vector<i64> orders = f.orders();
  orders.insert(orders.end(), g.orders().begin(), g.orders().end());
  std::vector<std::vector<i64>> raw(a + c, std::vector<i64>(a + c, 0));
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < a; ++j) raw[i][j] = f.scaled(i, j) * (N / f.exponent());
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j) raw[a + i][a + j] = g.scaled(i, j) * (N / g.exponent());
  return FiniteQuadraticForm(orders, raw, N);
}

FiniteQuadraticForm negate(const FiniteQuadraticForm& f) {
  std::size_t n = f.rank();
  std::vector<std::vector<i64>> raw(n, std::vector<i64>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) raw[i][j] = -f.scaled(i, j);
  return FiniteQuadraticForm(f.orders(), raw, f.exponent());
}

std::vector<i64> primes_of(const FiniteQuadraticForm& f) {
  std::vector<i64> ps;
  for (i64 d : f.orders())
    for (i64 p : prime_divisors(d))
      if (std::find(ps.begin(), ps.end(), p) == ps.end()) ps.push_back(p);
  std::sort(ps.begin(), ps.end());
  return ps;
}

// Form induced on the subgroup with the given basis (elements of the stated orders).
FiniteQuadraticForm induced_form(const FiniteQuadraticForm& f, const std::vector<Element>& basis,
                                 const std::vector<i64>& orders) {
  std::size_t n = basis.size();
  i64 M = 1;
  for (i64 d : orders) M = lcm64(M, d);
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = i == j ? f.q(basis[i]) : f.b(basis[i], basis[j]);
  std::vector<std::vector<i64>> raw(n, std::vector<i64>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rat v = m[i][j] * M;
      v.canonicalize();
      if (v.get_den() != 1) throw InternalError("induced_form: value not compatible with subgroup orders");
      raw[i][j] = to_i64(v.get_num());
    }
  return FiniteQuadraticForm(orders, raw, M);
}

SubformBasis primary_part(const FiniteQuadraticForm& f, i64 p) {
  if (!is_prime(p)) throw DomainError("primary_part: " + std::to_string(p) + " is not prime");
  SubformBasis out;
  std::vector<i64> orders;
  for (std::size_t i = 0; i < f.rank(); ++i) {
    i64 d = f.orders()[i];
    int a = valuation(d, p);
    if (a == 0) continue;
    i64 pa = ipow(p, a);
    out.basis.push_back(f.scale(f.unit(i), d / pa));
    orders.push_back(pa);
  }
  out.form = induced_form(f, out.basis, orders);
  return out;
}

RankInvariants rank_invariants(const FiniteQuadraticForm& f) {
  RankInvariants r;
  for (i64 p : primes_of(f)) {
    int c = 0;
    for (i64 d : f.orders())
      if (d % p == 0) ++c;
    r.ell_p[p] = c;
    r.ell = std::max(r.ell, c);
  }
  for (std::size_t i = 0; i < f.rank(); ++i) {
    i64 d = f.orders()[i];
    if (d % 2) continue;
    Element t = f.scale(f.unit(i), d / 2);
    if (f.q(t).get_den() != 1) r.even = false;
  }
  return r;
}

std::vector<i64> invariant_factors(const FiniteQuadraticForm& f) {
  std::vector<i64> out;
  for (i64 d : f.orders())
    for (auto& [p, e] : factorize(d)) out.push_back(ipow(p, e));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- text

std::string to_string(const std::vector<FormBlock>& blocks) {
  if (blocks.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) s += "+";
    s += blocks[i].str();
  }
  return s;
}

namespace {

i64 parse_power_of_two(const std::string& s, const std::string& token) {
  i64 v;
  std::size_t caret = s.find('^');
  try {
    if (caret != std::string::npos) {
      if (s.substr(0, caret) != "2") throw DomainError("");
      int k = std::stoi(s.substr(caret + 1));
      if (k < 1 || k > 30) throw DomainError("");
      v = i64(1) << k;
    } else {
      v = std::stoll(s);
    }
  } catch (const std::exception&) {
    throw DomainError("cannot parse block '" + token + "'");
  }
  if (v < 2 || (v & (v - 1)) != 0) throw DomainError("U/V blocks need a power of two >= 2 in '" + token + "'");
  return v;
}

}  // namespace

std::vector<FormBlock> parse_blocks(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  std::vector<FormBlock> out;
  if (s.empty() || s == "0") return out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t start = pos;
    i64 mult = 1;
    std::size_t digits = pos;
    while (digits < s.size() && std::isdigit(static_cast<unsigned char>(s[digits]))) ++digits;
    if (digits > pos) {
      mult = std::stoll(s.substr(pos, digits - pos));
      pos = digits;
      if (pos < s.size() && s[pos] == '*') ++pos;
    }
    if (pos >= s.size()) throw DomainError("unexpected end of form at position " + std::to_string(pos));
    FormBlock b;
    char c = s[pos];
    if (c == '<') {
      std::size_t close = s.find('>', pos);
      if (close == std::string::npos) throw DomainError("missing '>' at position " + std::to_string(pos));
      std::string body = s.substr(pos + 1, close - pos - 1);
      std::size_t slash = body.find('/');
      if (slash == std::string::npos) throw DomainError("expected <m/n> at position " + std::to_string(pos));
      i64 m, n;
      try {
        m = std::stoll(body.substr(0, slash));
        n = std::stoll(body.substr(slash + 1));
      } catch (const std::exception&) {
        throw DomainError("cannot parse fraction '" + body + "' at position " + std::to_string(pos));
      }
      b = FormBlock::cyclic(m, n);
      pos = close + 1;
    } else if (c == 'U' || c == 'u' || c == 'V' || c == 'v') {
      if (pos + 1 >= s.size() || s[pos + 1] != '(') throw DomainError("expected '(' at position " + std::to_string(pos + 1));
      std::size_t close = s.find(')', pos);
      if (close == std::string::npos) throw DomainError("missing ')' at position " + std::to_string(pos));
      std::string body = s.substr(pos + 2, close - pos - 2);
      i64 v = parse_power_of_two(body, s.substr(start, close + 1 - start));
      int k = valuation(v, 2);
      b = (c == 'U' || c == 'u') ? FormBlock::u(k) : FormBlock::v(k);
      pos = close + 1;
    } else {
      throw DomainError(std::string("unexpected character '") + c + "' at position " + std::to_string(pos));
    }
    for (i64 i = 0; i < mult; ++i) out.push_back(b);
    if (pos < s.size()) {
      if (s[pos] != '+') throw DomainError("expected '+' at position " + std::to_string(pos));
      ++pos;
      if (pos == s.size()) throw DomainError("trailing '+'");
    }
  }
  return out;
}

FiniteQuadraticForm parse_form(const std::string& text) { return from_blocks(parse_blocks(text)); }

}  // namespace sextic
