#include "sextic/lattice.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace sextic {

GramLattice::GramLattice(IntMat gram) : gram_(std::move(gram)) {
  for (std::size_t i = 0; i < gram_.size(); ++i) {
    if (gram_[i].size() != gram_.size()) throw DomainError("Gram matrix is not square");
    for (std::size_t j = 0; j < i; ++j)
      if (gram_[i][j] != gram_[j][i]) throw DomainError("Gram matrix is not symmetric");
  }
}

bool GramLattice::even() const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (gram_[i][i] % 2 != 0) return false;
  return true;
}

LatticeInvariants invariants(const GramLattice& l) {
  LatticeInvariants inv;
  inv.det = determinant(l.gram());
  inv.even = l.even();
  // Symmetric elimination by congruences; the pivots carry the signature.
  std::size_t n = l.rank();
  RatMat m = to_rat(l.gram());
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && m[i][i] != 0) {
        piv = i;
        break;
      }
    if (piv == n) {
      // All remaining diagonal entries vanish: fold a nonzero off-diagonal entry into the diagonal.
      std::size_t a = n, b = n;
      for (std::size_t i = 0; i < n && a == n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && i != j && m[i][j] != 0) {
            a = i;
            b = j;
            break;
          }
      if (a == n) break;
      // e_a <- e_a + e_b
      for (std::size_t k = 0; k < n; ++k) m[a][k] += m[b][k];
      for (std::size_t k = 0; k < n; ++k) m[k][a] += m[k][b];
      piv = a;
    }
    Rat p = m[piv][piv];
    if (p > 0)
      ++inv.sigma_plus;
    else
      ++inv.sigma_minus;
    done[piv] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || m[i][piv] == 0) continue;
      Rat f = m[i][piv] / p;
      for (std::size_t k = 0; k < n; ++k) m[i][k] -= f * m[piv][k];
      for (std::size_t k = 0; k < n; ++k) m[k][i] -= f * m[k][piv];
    }
  }
  inv.radical = static_cast<int>(n) - inv.sigma_plus - inv.sigma_minus;
  return inv;
}

GramLattice direct_sum(const GramLattice& a, const GramLattice& b) {
  std::size_t n = a.rank(), m = b.rank();
  IntMat g = zero_matrix(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g[i][j] = a.at(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g[n + i][n + j] = b.at(i, j);
  return GramLattice(g);
}

GramLattice rescale(const GramLattice& l, const Int& n) {
  IntMat g = l.gram();
  for (auto& row : g)
    for (auto& x : row) x *= n;
  return GramLattice(g);
}

GramLattice copies(const GramLattice& l, int n) {
  GramLattice out;
  for (int i = 0; i < n; ++i) out = direct_sum(out, l);
  return out;
}

GramLattice negate(const GramLattice& l) { return rescale(l, Int(-1)); }

// ---------------------------------------------------------------- discriminant

Element DiscriminantData::coordinates(const RatVec& x) const {
  Element c(coord_rows.size());
  for (std::size_t i = 0; i < coord_rows.size(); ++i) {
    Rat s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s += Rat(coord_rows[i][j]) * x[j];
    s.canonicalize();
    if (s.get_den() != 1) throw DomainError("discriminant coordinates: vector is not in the dual lattice");
    Int r = s.get_num() % Int(static_cast<long>(coord_mod[i]));
    c[i] = mod(to_i64(r), coord_mod[i]);
  }
  return c;
}

DiscriminantData discriminant_form(const GramLattice& l) {
  if (!l.even()) throw DomainError("discriminant_form: lattice is not even");
  std::size_t n = l.rank();
  DiscriminantData out;
  if (n == 0) return out;
  if (determinant(l.gram()) == 0) throw DomainError("discriminant_form: lattice is degenerate");
  SmithForm snf = smith_normal_form(l.gram());
  // G = U^{-1} D V^{-1}, so L* = G^{-1} Z^n = V D^{-1} Z^n.
  IntMat vinv = unimodular_inverse(snf.V);
  std::vector<i64> orders;
  for (std::size_t i = 0; i < n; ++i) {
    const Int& d = snf.diagonal[i];
    if (d == 1) continue;
    i64 di = to_i64(d);
    RatVec lift(n);
    for (std::size_t r = 0; r < n; ++r) {
      lift[r] = Rat(snf.V[r][i], d);
      lift[r].canonicalize();
    }
    out.lifts.push_back(lift);
    orders.push_back(di);
    IntVec row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = vinv[i][j] * d;
    out.coord_rows.push_back(row);
    out.coord_mod.push_back(di);
  }
  std::size_t k = orders.size();
  std::vector<std::vector<Rat>> qm(k, std::vector<Rat>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Rat v = l.dot(out.lifts[i], out.lifts[j]);
      Int m = i == j ? Int(2) : Int(1);
      // reduce into [0, m)
      Int fl = floor_rat(v / Rat(m));
      v -= Rat(fl * m);
      qm[i][j] = v;
    }
  out.form = FiniteQuadraticForm::from_matrix(orders, qm);
  return out;
}

// ---------------------------------------------------------------- enumeration

namespace {

// Q(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2 for a positive definite rational matrix.
struct Decomposition {
  std::vector<Rat> d;
  RatMat mu;
};

Decomposition decompose(const RatMat& a) {
  std::size_t n = a.size();
  RatMat q = a;
  for (std::size_t i = 0; i < n; ++i) {
    if (q[i][i] <= 0) throw DomainError("lattice is not definite");
    for (std::size_t j = i + 1; j < n; ++j) {
      q[j][i] = q[i][j];
      q[i][j] /= q[i][i];
    }
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
  }
  Decomposition dec;
  dec.d.resize(n);
  dec.mu.assign(n, RatVec(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    dec.d[i] = q[i][i];
    for (std::size_t j = i + 1; j < n; ++j) dec.mu[i][j] = q[i][j];
  }
  return dec;
}

int definiteness(const GramLattice& l) {
  LatticeInvariants inv = invariants(l);
  if (inv.radical == 0 && inv.sigma_minus == 0) return 1;
  if (inv.radical == 0 && inv.sigma_plus == 0) return -1;
  return 0;
}

// Visits every x in shift + Z^n with Q(x) <= bound, where Q = sign * G is positive definite.
void enumerate_bounded(const GramLattice& l, int sign, const RatVec& shift, const Rat& bound, WorkBudget& budget,
                       const std::function<void(const RatVec&, const Rat&)>& visit) {
  std::size_t n = l.rank();
  if (n == 0) {
    visit({}, Rat(0));
    return;
  }
  RatMat a = to_rat(l.gram());
  if (sign < 0)
    for (auto& row : a)
      for (auto& x : row) x = -x;
  Decomposition dec = decompose(a);
  RatVec x(n);
  std::function<void(std::size_t, const Rat&)> rec = [&](std::size_t ii, const Rat& remaining) {
    std::size_t i = ii - 1;
    Rat c = 0;
    for (std::size_t j = i + 1; j < n; ++j) c += dec.mu[i][j] * x[j];
    Rat y = shift[i] + c;
    Rat t = remaining / dec.d[i];
    Int b = isqrt(floor_rat(t)) + 1;
    Int lo = ceil_rat(-y - Rat(b)), hi = floor_rat(-y + Rat(b));
    for (Int z = lo; z <= hi; ++z) {
      budget.spend(1, "lattice enumeration");
      Rat s = Rat(z) + y;
      Rat val = dec.d[i] * s * s;
      if (val > remaining) continue;
      x[i] = shift[i] + Rat(z);
      if (i == 0)
        visit(x, bound - (remaining - val));
      else
        rec(i, remaining - val);
    }
  };
  rec(n, bound);
}

}  // namespace

std::vector<std::pair<RatVec, Rat>> coset_vectors(const GramLattice& l, const RatVec& shift, const Rat& bound,
                                                  const Limits& limits) {
  int sign = definiteness(l);
  if (sign == 0) throw DomainError("coset_vectors: lattice is not definite");
  WorkBudget budget(limits.max_work);
  std::vector<std::pair<RatVec, Rat>> out;
  enumerate_bounded(l, sign, shift, bound, budget, [&](const RatVec& v, const Rat& q) {
    out.emplace_back(v, sign > 0 ? q : Rat(-q));
  });
  return out;
}

std::vector<IntVec> short_vectors(const GramLattice& l, const Int& norm, const Limits& limits) {
  int sign = definiteness(l);
  if (sign == 0) throw DomainError("short_vectors: lattice is not definite");
  std::vector<IntVec> out;
  if (norm * sign < 0) return out;
  WorkBudget budget(limits.max_work);
  RatVec shift(l.rank(), Rat(0));
  Rat target = Rat(norm * sign);
  enumerate_bounded(l, sign, shift, target, budget, [&](const RatVec& v, const Rat& q) {
    if (q != target) return;
    IntVec iv;
    for (const Rat& c : v) iv.push_back(c.get_num());
    out.push_back(iv);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::string components_label(std::vector<RootComponent> comps) {
  std::sort(comps.begin(), comps.end(), [](const RootComponent& a, const RootComponent& b) {
    if (a.type != b.type) return a.type > b.type;
    return a.rank > b.rank;
  });
  std::string s;
  for (std::size_t i = 0; i < comps.size();) {
    std::size_t j = i;
    while (j < comps.size() && comps[j] == comps[i]) ++j;
    if (!s.empty()) s += "+";
    if (j - i > 1) s += std::to_string(j - i);
    s += comps[i].str();
    i = j;
  }
  return s;
}

RootComponent identify_root_component(int rank, std::size_t roots) {
  auto r = static_cast<std::size_t>(rank);
  if (roots == r * (r + 1)) return {'A', rank};
  if (rank >= 4 && roots == 2 * r * (r - 1)) return {'D', rank};
  if (rank == 6 && roots == 72) return {'E', 6};
  if (rank == 7 && roots == 126) return {'E', 7};
  if (rank == 8 && roots == 240) return {'E', 8};
  throw InternalError("root system of rank " + std::to_string(rank) + " with " + std::to_string(roots) +
                      " roots is not of ADE type");
}

RootSublattice root_sublattice(const GramLattice& l, const Limits& limits) {
  int sign = definiteness(l);
  if (sign == 0) throw DomainError("root_sublattice: lattice is not definite");
  std::vector<IntVec> roots = short_vectors(l, Int(2 * sign), limits);
  RootSublattice out;
  out.root_count = roots.size();
  std::size_t m = roots.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  WorkBudget budget(limits.max_work);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      budget.spend(1, "root_sublattice");
      if (l.dot(roots[i], roots[j]) != 0) parent[find(i)] = find(j);
    }
  std::map<std::size_t, std::vector<IntVec>> comps;
  for (std::size_t i = 0; i < m; ++i) comps[find(i)].push_back(roots[i]);
  IntMat all;
  for (auto& [rep, vs] : comps) {
    IntMat h = hnf_rows(vs);
    out.components.push_back(identify_root_component(static_cast<int>(h.size()), vs.size()));
    all.insert(all.end(), vs.begin(), vs.end());
  }
  std::sort(out.components.begin(), out.components.end());
  out.basis = hnf_rows(all);
  IntMat g = zero_matrix(out.basis.size(), out.basis.size());
  for (std::size_t i = 0; i < out.basis.size(); ++i)
    for (std::size_t j = 0; j < out.basis.size(); ++j) g[i][j] = l.dot(out.basis[i], out.basis[j]);
  out.lattice = GramLattice(g);
  return out;
}

IntMat reflection(const GramLattice& l, const IntVec& a) {
  std::size_t n = l.rank();
  Int aa = l.dot(a, a);
  if (aa == 0) throw DomainError("reflection: vector is isotropic");
  IntMat t = identity_matrix(n);
  for (std::size_t j = 0; j < n; ++j) {
    IntVec e(n, Int(0));
    e[j] = 1;
    Int num = 2 * l.dot(a, e);
    if (num % aa != 0) throw DomainError("reflection: a is not in (a^2/2) L*");
    Int c = num / aa;
    for (std::size_t r = 0; r < n; ++r) t[r][j] -= c * a[r];
  }
  return t;
}

Extension finite_index_extension(const GramLattice& l, const std::vector<RatVec>& kernel_lifts) {
  std::size_t n = l.rank();
  Int den = 1;
  for (const RatVec& v : kernel_lifts) {
    RatVec gv = mul(l.gram(), v);
    for (const Rat& c : gv)
      if (c.get_den() != 1) throw DomainError("finite_index_extension: lift is not in the dual lattice");
    for (const Rat& c : v) den = lcm(den, Int(c.get_den()));
  }
  IntMat rows;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec r(n, Int(0));
    r[i] = den;
    rows.push_back(r);
  }
  for (const RatVec& v : kernel_lifts) {
    IntVec r(n);
    for (std::size_t j = 0; j < n; ++j) {
      Rat s = v[j] * Rat(den);
      s.canonicalize();
      r[j] = s.get_num();
    }
    rows.push_back(r);
  }
  Extension ext;
  IntMat h = n ? hnf_rows(rows) : IntMat{};
  ext.basis.assign(h.size(), RatVec(n));
  Int detb = 1;
  for (std::size_t i = 0; i < h.size(); ++i) {
    detb *= h[i][i];
    for (std::size_t j = 0; j < n; ++j) {
      ext.basis[i][j] = Rat(h[i][j], den);
      ext.basis[i][j].canonicalize();
    }
  }
  // [ext : L] = den^n / det(h)
  Int full = 1;
  for (std::size_t i = 0; i < n; ++i) full *= den;
  ext.index = full / detb;
  IntMat g = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rat v = l.dot(ext.basis[i], ext.basis[j]);
      if (v.get_den() != 1) throw DomainError("finite_index_extension: kernel is not isotropic (non-integral)");
      g[i][j] = v.get_num();
    }
  ext.lattice = GramLattice(g);
  if (!ext.lattice.even()) throw DomainError("finite_index_extension: kernel is not isotropic (odd extension)");
  return ext;
}

bool is_isometry(const GramLattice& l, const IntMat& t) {
  return mul(transpose(t), mul(l.gram(), t)) == l.gram();
}

std::vector<IntMat> definite_isometries(const GramLattice& l, const Limits& limits) {
  std::size_t n = l.rank();
  if (static_cast<int>(n) > limits.max_isometry_rank)
    throw BoundExceeded("definite_isometries: rank " + std::to_string(n) + " exceeds bound " +
                        std::to_string(limits.max_isometry_rank));
  if (definiteness(l) == 0 && n > 0) throw DomainError("definite_isometries: lattice is not definite");
  std::map<Int, std::vector<IntVec>> by_norm;
  for (std::size_t i = 0; i < n; ++i)
    if (!by_norm.count(l.at(i, i))) by_norm[l.at(i, i)] = short_vectors(l, l.at(i, i), limits);
  WorkBudget budget(limits.max_work);
  std::vector<IntMat> out;
  std::vector<const IntVec*> img(n);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      IntMat t = zero_matrix(n, n);
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) t[r][c] = (*img[c])[r];
      out.push_back(t);
      return;
    }
    for (const IntVec& v : by_norm[l.at(i, i)]) {
      budget.spend(1, "definite_isometries");
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        if (l.dot(v, *img[j]) != l.at(i, j)) ok = false;
      if (!ok) continue;
      img[i] = &v;
      rec(i + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

FormAutomorphism discriminant_action(const DiscriminantData& d, const IntMat& t) {
  FormAutomorphism a;
  for (const RatVec& lift : d.lifts) a.images.push_back(d.coordinates(mul(t, lift)));
  return a;
}

int orientation_character(const GramLattice& l, const IntMat& t) {
  if (definiteness(l) != 1) throw DomainError("orientation_character: only positive definite lattices are supported");
  Int det = determinant(t);
  if (det == 1) return 1;
  if (det == -1) return -1;
  throw DomainError("orientation_character: matrix is not unimodular");
}

// ---------------------------------------------------------------- text

GramLattice parse_gram(const std::string& text) {
  std::istringstream in(text);
  std::string line, word;
  std::vector<std::string> tokens;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    while (ls >> word) tokens.push_back(word);
  }
  if (tokens.size() < 2 || tokens[0] != "rank") throw DomainError("Gram text must start with 'rank n'");
  std::size_t n;
  try {
    n = std::stoul(tokens[1]);
  } catch (const std::exception&) {
    throw DomainError("invalid rank '" + tokens[1] + "'");
  }
  if (tokens.size() != 2 + n * n)
    throw DomainError("expected " + std::to_string(n * n) + " matrix entries, found " +
                      std::to_string(tokens.size() - 2));
  IntMat g = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (g[i][j].set_str(tokens[2 + i * n + j], 10) != 0)
        throw DomainError("invalid integer '" + tokens[2 + i * n + j] + "'");
    }
  return GramLattice(g);
}

std::string format_gram(const GramLattice& l) {
  std::string s = "rank " + std::to_string(l.rank()) + "\n";
  for (std::size_t i = 0; i < l.rank(); ++i) {
    for (std::size_t j = 0; j < l.rank(); ++j) {
      if (j) s += " ";
      s += l.at(i, j).get_str();
    }
    s += "\n";
  }
  return s;
}

GramLattice load_fixture(const std::string& name) {
  std::string path = std::string(SEXTIC_FIXTURE_DIR) + "/lattices/" + name + ".gram";
  std::ifstream in(path);
  if (!in) throw DomainError("fixture not found: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_gram(ss.str());
}

}  // namespace sextic
