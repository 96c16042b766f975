#include "oracle.hpp"

#include <deque>

namespace oracle {

namespace {

int mod(long v, int p) {
  long r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

Id ipow(int p, int e) {
  Id r = 1;
  for (int i = 0; i < e; ++i) r *= static_cast<Id>(p);
  return r;
}

// Worklist closure: `step(x, push)` emits the elements derived from x.
template <class Step>
Set close(const Alg& a, const std::vector<Id>& gens, Step step) {
  Set in(a.n, false);
  std::deque<Id> work;
  auto push = [&](Id x) {
    if (!in[x]) {
      in[x] = true;
      work.push_back(x);
    }
  };
  push(a.zero);
  for (Id g : gens) push(g);
  while (!work.empty()) {
    const Id x = work.front();
    work.pop_front();
    step(x, push, in);
  }
  return in;
}

template <class Push>
void ideal_step(const Alg& a, Id x, Push& push, const Set& in) {
  push(a.neg[x]);
  for (Id y = 0; y < a.n; ++y) {
    if (in[y]) push(a.plus(x, y));
    push(a.minus(a.plus(y, x), y));
    for (std::size_t k = 0; k < a.ops.size(); ++k) {
      push(a.star(k, x, y));
      push(a.star(k, y, x));
    }
  }
  for (const auto& u : a.un) push(u[x]);
}

}  // namespace

Id encode(const FpConstants& s, const std::vector<int>& c) {
  Id id = 0;
  for (int i = s.dim - 1; i >= 0; --i) id = id * static_cast<Id>(s.p) + static_cast<Id>(mod(c[i], s.p));
  return id;
}

std::vector<int> decode(const FpConstants& s, Id id) {
  std::vector<int> c(s.dim);
  for (int i = 0; i < s.dim; ++i) {
    c[i] = static_cast<int>(id % static_cast<Id>(s.p));
    id /= static_cast<Id>(s.p);
  }
  return c;
}

Alg realize(const FpConstants& s) {
  Alg a;
  a.n = ipow(s.p, s.dim);
  a.zero = 0;
  std::vector<std::vector<int>> el(a.n);
  for (Id x = 0; x < a.n; ++x) el[x] = decode(s, x);
  a.add.resize(std::size_t(a.n) * a.n);
  a.neg.resize(a.n);
  for (Id x = 0; x < a.n; ++x) {
    std::vector<int> m(s.dim);
    for (int i = 0; i < s.dim; ++i) m[i] = -el[x][i];
    a.neg[x] = encode(s, m);
    for (Id y = 0; y < a.n; ++y) {
      std::vector<int> c(s.dim);
      for (int i = 0; i < s.dim; ++i) c[i] = el[x][i] + el[y][i];
      a.add[x * a.n + y] = encode(s, c);
    }
  }
  for (const auto& t : s.ops) {
    std::vector<Id> tab(std::size_t(a.n) * a.n);
    for (Id x = 0; x < a.n; ++x)
      for (Id y = 0; y < a.n; ++y) {
        std::vector<long> c(s.dim, 0);
        for (int i = 0; i < s.dim; ++i)
          for (int j = 0; j < s.dim; ++j) {
            const long coef = long(el[x][i]) * el[y][j];
            if (coef == 0) continue;
            for (int k = 0; k < s.dim; ++k) c[k] += coef * t[i * s.dim + j][k];
          }
        std::vector<int> r(s.dim);
        for (int k = 0; k < s.dim; ++k) r[k] = mod(c[k], s.p);
        tab[x * a.n + y] = encode(s, r);
      }
    a.ops.push_back(std::move(tab));
  }
  for (const auto& m : s.un) {
    std::vector<Id> tab(a.n);
    for (Id x = 0; x < a.n; ++x) {
      std::vector<long> c(s.dim, 0);
      for (int i = 0; i < s.dim; ++i)
        for (int k = 0; k < s.dim; ++k) c[k] += long(el[x][i]) * m[i][k];
      std::vector<int> r(s.dim);
      for (int k = 0; k < s.dim; ++k) r[k] = mod(c[k], s.p);
      tab[x] = encode(s, r);
    }
    a.un.push_back(std::move(tab));
  }
  return a;
}

Set full(const Alg& a) { return Set(a.n, true); }

Set singleton_zero(const Alg& a) {
  Set s(a.n, false);
  s[a.zero] = true;
  return s;
}

std::vector<Id> members(const Set& s) {
  std::vector<Id> out;
  for (Id i = 0; i < s.size(); ++i)
    if (s[i]) out.push_back(i);
  return out;
}

std::size_t count(const Set& s) {
  std::size_t c = 0;
  for (bool b : s) c += b;
  return c;
}

bool subset(const Set& a, const Set& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

Set centralizer(const Alg& a, const Set& over) {
  Set z(a.n, false);
  for (Id c = 0; c < a.n; ++c) {
    std::vector<Id> images{c};
    for (const auto& u : a.un) images.push_back(u[c]);
    bool ok = true;
    for (Id x = 0; x < a.n && ok; ++x) {
      if (!over[x]) continue;
      for (Id w : images) {
        if (a.plus(x, w) != a.plus(w, x)) ok = false;
        for (std::size_t k = 0; k < a.ops.size(); ++k)
          if (a.star(k, x, w) != a.zero || a.star(k, w, x) != a.zero) ok = false;
      }
    }
    z[c] = ok;
  }
  return z;
}

Set center(const Alg& a) { return centralizer(a, full(a)); }

Set ideal_closure(const Alg& a, const std::vector<Id>& gens) {
  return close(a, gens, [&](Id x, auto& push, const Set& in) { ideal_step(a, x, push, in); });
}

Set commutator(const Alg& a) {
  std::vector<Id> gens;
  for (Id x = 0; x < a.n; ++x)
    for (Id y = 0; y < a.n; ++y) {
      std::vector<Id> ys{y};
      for (const auto& u : a.un) ys.push_back(u[y]);
      for (Id w : ys) {
        gens.push_back(a.comm(x, w));
        for (std::size_t k = 0; k < a.ops.size(); ++k) gens.push_back(a.star(k, x, w));
      }
    }
  return ideal_closure(a, gens);
}

bool is_ideal(const Alg& a, const Set& s) {
  if (!s[a.zero]) return false;
  for (Id x = 0; x < a.n; ++x) {
    if (!s[x]) continue;
    if (!s[a.neg[x]]) return false;
    for (const auto& u : a.un)
      if (!s[u[x]]) return false;
    for (Id y = 0; y < a.n; ++y) {
      if (s[y] && !s[a.plus(x, y)]) return false;
      if (!s[a.minus(a.plus(y, x), y)]) return false;
      for (std::size_t k = 0; k < a.ops.size(); ++k)
        if (!s[a.star(k, x, y)] || !s[a.star(k, y, x)]) return false;
    }
  }
  return true;
}

bool is_singular(const Alg& a) { return count(center(a)) == a.n; }

namespace {

std::vector<long> bracket(const FpConstants& s, const std::vector<long>& x, const std::vector<long>& y) {
  std::vector<long> r(s.dim, 0);
  for (int i = 0; i < s.dim; ++i)
    for (int j = 0; j < s.dim; ++j) {
      const long c = x[i] * y[j];
      if (c == 0) continue;
      for (int k = 0; k < s.dim; ++k) r[k] += c * s.ops[0][i * s.dim + j][k];
    }
  for (auto& v : r) v = mod(v, s.p);
  return r;
}

std::vector<long> unit(const FpConstants& s, int i) {
  std::vector<long> e(s.dim, 0);
  e[i] = 1;
  return e;
}

bool zero_mod(const std::vector<long>& v, int p) {
  for (long c : v)
    if (mod(c, p) != 0) return false;
  return true;
}

}  // namespace

bool is_lie(const FpConstants& s) {
  for (int i = 0; i < s.dim; ++i)
    for (int j = i; j < s.dim; ++j) {
      auto a = bracket(s, unit(s, i), unit(s, j)), b = bracket(s, unit(s, j), unit(s, i));
      for (int k = 0; k < s.dim; ++k) a[k] += b[k];
      if (!zero_mod(a, s.p)) return false;
      if (i == j && !zero_mod(bracket(s, unit(s, i), unit(s, i)), s.p)) return false;
    }
  for (int i = 0; i < s.dim; ++i)
    for (int j = 0; j < s.dim; ++j)
      for (int k = 0; k < s.dim; ++k) {
        const auto x = unit(s, i), y = unit(s, j), z = unit(s, k);
        auto t = bracket(s, x, bracket(s, y, z));
        const auto u = bracket(s, y, bracket(s, z, x)), v = bracket(s, z, bracket(s, x, y));
        for (int m = 0; m < s.dim; ++m) t[m] += u[m] + v[m];
        if (!zero_mod(t, s.p)) return false;
      }
  return true;
}

bool is_leibniz_right(const FpConstants& s) {
  // [x,[y,z]] = [[x,y],z] - [[x,z],y]
  for (int i = 0; i < s.dim; ++i)
    for (int j = 0; j < s.dim; ++j)
      for (int k = 0; k < s.dim; ++k) {
        const auto x = unit(s, i), y = unit(s, j), z = unit(s, k);
        auto t = bracket(s, x, bracket(s, y, z));
        const auto u = bracket(s, bracket(s, x, y), z), v = bracket(s, bracket(s, x, z), y);
        for (int m = 0; m < s.dim; ++m) t[m] = t[m] - u[m] + v[m];
        if (!zero_mod(t, s.p)) return false;
      }
  return true;
}

Pair xcenter_lists(const Xm& x, bool crossed) {
  const Alg& c1 = x.c1;
  const Alg& c0 = x.c0;
  const std::size_t ops = c1.ops.size();
  Pair out{Set(c1.n, false), Set(c0.n, false)};
  for (Id z = 0; z < c1.n; ++z) {
    const Id dz = x.d[z];
    bool ok = true;
    for (Id a = 0; a < c1.n && ok; ++a) {
      if (c1.plus(z, a) != c1.plus(a, z)) ok = false;
      for (std::size_t k = 0; k < ops; ++k)
        if (c1.star(k, a, z) != c1.zero) ok = false;
      if (!crossed) {
        if (x.act(dz, a) != a) ok = false;
        for (std::size_t k = 0; k < ops; ++k)
          if (x.r(k, a, dz) != c1.zero) ok = false;
      }
    }
    for (Id b = 0; b < c0.n && ok; ++b) {
      if (c0.plus(b, dz) != c0.plus(dz, b)) ok = false;
      if (x.act(b, z) != z) ok = false;
      for (std::size_t k = 0; k < ops; ++k)
        if (x.l(k, b, z) != c1.zero) ok = false;
    }
    out.s1[z] = ok;
  }
  for (Id z = 0; z < c0.n; ++z) {
    bool ok = true;
    for (Id a = 0; a < c1.n && ok; ++a) {
      if (x.act(z, a) != a) ok = false;
      for (std::size_t k = 0; k < ops; ++k)
        if (x.r(k, a, z) != c1.zero) ok = false;
    }
    for (Id b = 0; b < c0.n && ok; ++b) {
      if (c0.plus(z, b) != c0.plus(b, z)) ok = false;
      for (std::size_t k = 0; k < ops; ++k)
        if (c0.star(k, b, z) != c0.zero) ok = false;
    }
    out.s0[z] = ok;
  }
  return out;
}

Pair xcommutator(const Xm& x) {
  const Alg& c1 = x.c1;
  const Alg& c0 = x.c0;
  const std::size_t ops = c1.ops.size();
  std::vector<Id> g1, g0;
  for (Id b = 0; b < c0.n; ++b)
    for (Id a = 0; a < c1.n; ++a) {
      g1.push_back(c1.minus(x.act(b, a), a));
      for (std::size_t k = 0; k < ops; ++k) g1.push_back(x.l(k, b, a));
    }
  for (Id a = 0; a < c1.n; ++a)
    for (Id c = 0; c < c1.n; ++c) {
      g1.push_back(c1.comm(a, c));
      for (std::size_t k = 0; k < ops; ++k) g1.push_back(c1.star(k, a, c));
    }
  for (Id a = 0; a < c0.n; ++a)
    for (Id c = 0; c < c0.n; ++c) {
      g0.push_back(c0.comm(a, c));
      for (std::size_t k = 0; k < ops; ++k) g0.push_back(c0.star(k, a, c));
    }
  Set k1 = close(c1, g1, [&](Id v, auto& push, const Set& in) {
    ideal_step(c1, v, push, in);
    for (Id b = 0; b < c0.n; ++b) {
      push(x.act(b, v));
      for (std::size_t k = 0; k < ops; ++k) {
        push(x.l(k, b, v));
        push(x.r(k, v, b));
      }
    }
  });
  return {k1, ideal_closure(c0, g0)};
}

Alg semidirect_with_omegas(const Xm& x) {
  const Alg& c1 = x.c1;
  const Alg& c0 = x.c0;
  const Id n1 = c1.n, n0 = c0.n, n = n1 * n0;
  auto id = [&](Id a, Id b) { return a + n1 * b; };
  Alg s;
  s.n = n;
  s.zero = id(c1.zero, c0.zero);
  s.add.resize(std::size_t(n) * n);
  s.neg.resize(n);
  for (Id u = 0; u < n; ++u)
    for (Id v = 0; v < n; ++v) {
      const Id a1 = u % n1, b1 = u / n1, a2 = v % n1, b2 = v / n1;
      s.add[u * n + v] = id(c1.plus(a1, x.act(b1, a2)), c0.plus(b1, b2));
    }
  for (Id u = 0; u < n; ++u)
    for (Id v = 0; v < n; ++v)
      if (s.add[u * n + v] == s.zero) s.neg[u] = v;
  for (std::size_t k = 0; k < c1.ops.size(); ++k) {
    std::vector<Id> tab(std::size_t(n) * n);
    for (Id u = 0; u < n; ++u)
      for (Id v = 0; v < n; ++v) {
        const Id a1 = u % n1, b1 = u / n1, a2 = v % n1, b2 = v / n1;
        const Id a = c1.plus(c1.plus(c1.star(k, a1, a2), x.r(k, a1, b2)), x.l(k, b1, a2));
        tab[u * n + v] = id(a, c0.star(k, b1, b2));
      }
    s.ops.push_back(std::move(tab));
  }
  for (std::size_t k = 0; k < c1.un.size(); ++k) {
    std::vector<Id> tab(n);
    for (Id u = 0; u < n; ++u) tab[u] = id(c1.un[k][u % n1], c0.un[k][u / n1]);
    s.un.push_back(std::move(tab));
  }
  std::vector<Id> w0(n), w1(n);
  for (Id u = 0; u < n; ++u) {
    w0[u] = id(c1.zero, u / n1);
    w1[u] = id(c1.zero, c0.plus(x.d[u % n1], u / n1));
  }
  s.un.push_back(std::move(w0));
  s.un.push_back(std::move(w1));
  return s;
}

Pair xcenter_transport(const Xm& x) {
  const Alg s = semidirect_with_omegas(x);
  const Set z = center(s);
  const Id n1 = x.c1.n;
  Pair out{Set(n1, false), Set(x.c0.n, false)};
  const auto& w0 = s.un[s.un.size() - 2];
  for (Id u = 0; u < s.n; ++u) {
    if (!z[u]) continue;
    if (u / n1 == x.c0.zero) out.s1[u % n1] = true;
    out.s0[w0[u] / n1] = true;
  }
  return out;
}

}  // namespace oracle
