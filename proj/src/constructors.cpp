#include "coverforge/constructors.hpp"

#include <cstdlib>
#include <numeric>

#include "coverforge/catalog.hpp"
#include "coverforge/errors.hpp"

namespace coverforge {

namespace {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

unsigned long long ipow(unsigned long long b, unsigned e) {
  unsigned long long r = 1;
  while (e--) {
    if (__builtin_mul_overflow(r, b, &r))
      throw OrderExceedsLimit("order does not fit in 64 bits");
  }
  return r;
}

void check_order(const Group& g, unsigned long long expect, const char* what) {
  if (g.order() != expect)
    throw Error(std::string("constructor postcondition failed for ") + what);
}

Perm cycle_perm(unsigned degree, const std::vector<Point>& pts) {
  std::vector<Point> img(degree);
  for (unsigned i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
  for (std::size_t i = 0; i < pts.size(); ++i)
    img[pts[i]] = pts[(i + 1) % pts.size()];
  return Perm(std::move(img));
}

// ---- small finite fields (primes and 4, 8, 9) ----

struct Field {
  unsigned q = 0;
  std::vector<std::uint8_t> addt, mult;

  std::uint8_t add(unsigned a, unsigned b) const { return addt[a * q + b]; }
  std::uint8_t mul(unsigned a, unsigned b) const { return mult[a * q + b]; }
  std::uint8_t neg(unsigned a) const {
    for (unsigned b = 0; b < q; ++b)
      if (add(a, b) == 0) return static_cast<std::uint8_t>(b);
    return 0;
  }
  std::uint8_t inv(unsigned a) const {
    for (unsigned b = 1; b < q; ++b)
      if (mul(a, b) == 1) return static_cast<std::uint8_t>(b);
    throw Error("field inverse of zero");
  }
  unsigned primitive() const {
    for (unsigned g = 1; g < q; ++g) {
      unsigned x = g, ord = 1;
      while (x != 1) {
        x = mul(x, g);
        ++ord;
      }
      if (ord == q - 1) return g;
    }
    throw Error("no primitive element");
  }
};

Field make_field(unsigned q) {
  Field f;
  f.q = q;
  f.addt.resize(q * q);
  f.mult.resize(q * q);
  if (is_prime(q)) {
    for (unsigned a = 0; a < q; ++a)
      for (unsigned b = 0; b < q; ++b) {
        f.addt[a * q + b] = static_cast<std::uint8_t>((a + b) % q);
        f.mult[a * q + b] = static_cast<std::uint8_t>((a * b) % q);
      }
    return f;
  }
  if (q == 4 || q == 8) {
    // binary polynomial basis; reduction x^2 = x+1 (q=4), x^3 = x+1 (q=8)
    unsigned deg = (q == 4) ? 2 : 3;
    unsigned red = (q == 4) ? 0b11 : 0b011;
    for (unsigned a = 0; a < q; ++a)
      for (unsigned b = 0; b < q; ++b) {
        f.addt[a * q + b] = static_cast<std::uint8_t>(a ^ b);
        unsigned prod = 0, x = a;
        for (unsigned bit = 0; bit < deg; ++bit) {
          if (b & (1u << bit)) prod ^= x;
          x <<= 1;
          if (x & q) x = (x ^ q) ^ red;
        }
        f.mult[a * q + b] = static_cast<std::uint8_t>(prod);
      }
    return f;
  }
  if (q == 9) {
    // a + 3b represents a + b*i with i^2 = 2 over F_3
    auto enc = [](unsigned a, unsigned b) { return a + 3 * b; };
    for (unsigned x = 0; x < 9; ++x)
      for (unsigned y = 0; y < 9; ++y) {
        unsigned a1 = x % 3, b1 = x / 3, a2 = y % 3, b2 = y / 3;
        f.addt[x * 9 + y] =
            static_cast<std::uint8_t>(enc((a1 + a2) % 3, (b1 + b2) % 3));
        unsigned ra = (a1 * a2 + 2 * b1 * b2) % 3;
        unsigned rb = (a1 * b2 + a2 * b1) % 3;
        f.mult[x * 9 + y] = static_cast<std::uint8_t>(enc(ra, rb));
      }
    return f;
  }
  throw UnsupportedField("no field table for q=" + std::to_string(q));
}

// ---- polynomial helpers over F_q (dense coefficient vectors) ----

using Poly = std::vector<std::uint8_t>;  // poly[i] = coefficient of x^i

Poly poly_mod(const Field& f, Poly num, const Poly& den) {
  while (num.size() >= den.size()) {
    std::uint8_t lead = num.back();
    if (lead != 0) {
      std::uint8_t scale = f.mul(lead, f.inv(den.back()));
      std::size_t shift = num.size() - den.size();
      for (std::size_t i = 0; i < den.size(); ++i) {
        std::uint8_t sub = f.mul(scale, den[i]);
        num[shift + i] = f.add(num[shift + i], f.neg(sub));
      }
    }
    num.pop_back();
  }
  return num;
}

bool poly_is_zero(const Poly& p) {
  for (auto c : p)
    if (c) return false;
  return true;
}

}  // namespace

std::string default_data_dir() {
  if (const char* env = std::getenv("COVERFORGE_DATA")) return env;
  return "data";
}

Group cyclic(unsigned n) {
  if (n == 0) throw InvalidParameter("cyclic group order must be positive");
  if (n == 1) return Group::trivial();
  std::vector<Point> img(n);
  for (unsigned i = 0; i < n; ++i) img[i] = static_cast<Point>((i + 1) % n);
  Group g({Perm(std::move(img))});
  check_order(g, n, "cyclic");
  return g;
}

Group dihedral(unsigned order) {
  if (order < 6 || order % 2 != 0)
    throw InvalidParameter("dihedral order must be even and at least 6");
  unsigned n = order / 2;
  std::vector<Point> rot(n), flip(n);
  for (unsigned i = 0; i < n; ++i) {
    rot[i] = static_cast<Point>((i + 1) % n);
    flip[i] = static_cast<Point>((n - i) % n);
  }
  Group g({Perm(std::move(rot)), Perm(std::move(flip))});
  check_order(g, order, "dihedral");
  return g;
}

Group quaternion(unsigned order) {
  unsigned n = order;
  if (n < 8 || (n & (n - 1)) != 0)
    throw InvalidParameter("generalized quaternion order must be 2^n >= 8");
  unsigned half = n / 2, quarter = n / 4;
  // regular action on a^i b^e (e in {0,1}), point i + half*e
  std::vector<Point> ra(n), rb(n);
  for (unsigned i = 0; i < half; ++i) {
    ra[i] = static_cast<Point>((i + 1) % half);
    ra[i + half] = static_cast<Point>((i + half - 1) % half + half);
    rb[i] = static_cast<Point>(i + half);
    rb[i + half] = static_cast<Point>((i + quarter) % half);
  }
  Group g({Perm(std::move(ra)), Perm(std::move(rb))});
  check_order(g, order, "quaternion");
  return g;
}

Group elementary_abelian(unsigned p, unsigned k) {
  if (!is_prime(p) || k == 0)
    throw InvalidParameter("elementary abelian group needs a prime and k >= 1");
  unsigned degree = p * k;
  std::vector<Perm> gens;
  for (unsigned j = 0; j < k; ++j) {
    std::vector<Point> pts(p);
    for (unsigned i = 0; i < p; ++i) pts[i] = static_cast<Point>(j * p + i);
    gens.push_back(cycle_perm(degree, pts));
  }
  Group g(std::move(gens));
  check_order(g, ipow(p, k), "elementary_abelian");
  return g;
}

Group sym(unsigned n) {
  if (n == 0) throw InvalidParameter("symmetric group degree must be positive");
  if (n == 1) return Group::trivial();
  std::vector<Point> full(n);
  for (unsigned i = 0; i < n; ++i) full[i] = static_cast<Point>((i + 1) % n);
  if (n == 2) return Group({Perm(std::move(full))});
  Group g({cycle_perm(n, {0, 1}), Perm(std::move(full))});
  unsigned long long fact = 1;
  for (unsigned i = 2; i <= n; ++i) fact = fact * i;
  check_order(g, fact, "sym");
  return g;
}

Group alt(unsigned n) {
  if (n == 0) throw InvalidParameter("alternating group degree must be positive");
  if (n <= 2) return n == 1 ? Group::trivial() : Group({Perm::identity(2)});
  std::vector<Point> pts;
  if (n % 2 == 1) {
    for (unsigned i = 0; i < n; ++i) pts.push_back(static_cast<Point>(i));
  } else {
    for (unsigned i = 1; i < n; ++i) pts.push_back(static_cast<Point>(i));
  }
  Group g({cycle_perm(n, {0, 1, 2}), cycle_perm(n, pts)});
  unsigned long long fact = 1;
  for (unsigned i = 2; i <= n; ++i) fact = fact * i;
  check_order(g, fact / 2, "alt");
  return g;
}

Group semidihedral(unsigned order) {
  unsigned n = 0;
  for (unsigned k = order; k > 1; k /= 2, ++n)
    if (k % 2 != 0) throw InvalidParameter("semidihedral order must be 2^n");
  if (n < 4) throw InvalidParameter("semidihedral group needs order at least 16");
  unsigned half = order / 2;      // degree 2^(n-1)
  unsigned m = order / 4 - 1;     // 2^(n-2) - 1
  std::vector<Point> a(half), b(half);
  for (unsigned i = 0; i < half; ++i) {
    a[i] = static_cast<Point>((i + 1) % half);
    b[i] = static_cast<Point>((static_cast<unsigned long long>(m) * i) % half);
  }
  Group g({Perm(std::move(a)), Perm(std::move(b))});
  check_order(g, order, "semidihedral");
  return g;
}

Group heisenberg(unsigned p) {
  if (!is_prime(p) || p == 2)
    throw InvalidParameter("heisenberg group needs an odd prime");
  unsigned long long deg = ipow(p, 3);
  if (deg > kMaxDegree) throw InvalidParameter("heisenberg degree exceeds maximum");
  unsigned n = static_cast<unsigned>(deg);
  // act on column vectors (v0, v1, v2), index v0 + v1 p + v2 p^2
  auto apply = [&](unsigned a, unsigned b, unsigned c) {
    std::vector<Point> img(n);
    for (unsigned v = 0; v < n; ++v) {
      unsigned v0 = v % p, v1 = (v / p) % p, v2 = v / (p * p);
      unsigned w0 = (v0 + a * v1 + b * v2) % p;
      unsigned w1 = (v1 + c * v2) % p;
      img[v] = static_cast<Point>(w0 + w1 * p + v2 * p * p);
    }
    return Perm(std::move(img));
  };
  Group g({apply(1, 0, 0), apply(0, 0, 1)});
  check_order(g, deg, "heisenberg");
  for (const Perm& gen : g.generators())
    if (gen.order() != p) throw Error("heisenberg generator order is not p");
  return g;
}

Group modular_gp(unsigned p) {
  if (!is_prime(p) || p == 2)
    throw InvalidParameter("modular group of order p^3 needs an odd prime");
  unsigned long long degll = ipow(p, 2);
  unsigned n = static_cast<unsigned>(degll);
  std::vector<Point> s(n), t(n);
  for (unsigned x = 0; x < n; ++x) {
    s[x] = static_cast<Point>((x + 1) % n);
    t[x] = static_cast<Point>((static_cast<unsigned long long>(1 + p) * x) % n);
  }
  Group g({Perm(std::move(s)), Perm(std::move(t))});
  check_order(g, ipow(p, 3), "modular_gp");
  return g;
}

Group affine_frobenius(unsigned q, unsigned r) {
  if (!is_prime(q) || !is_prime(r) || q == r)
    throw InvalidParameter("affine_frobenius needs distinct primes");
  // a = multiplicative order of q mod r
  unsigned a = 1;
  {
    unsigned long long x = q % r;
    while (x != 1) {
      x = (x * q) % r;
      ++a;
    }
  }
  unsigned long long degll = ipow(q, a);
  if (degll > kMaxDegree)
    throw InvalidParameter("affine_frobenius domain exceeds maximum degree");
  unsigned n = static_cast<unsigned>(degll);

  Field f = make_field(q);
  // find the lexicographically first monic degree-a divisor of
  // (x^r - 1)/(x - 1); all its irreducible factors have degree a, so any
  // degree-a divisor is irreducible
  Poly phi(r, 1);  // 1 + x + ... + x^(r-1)
  Poly factor;
  unsigned long long count = ipow(q, a);
  for (unsigned long long code = 0; code < count; ++code) {
    Poly cand(a + 1, 0);
    cand[a] = 1;
    unsigned long long c = code;
    for (unsigned i = 0; i < a; ++i) {
      cand[i] = static_cast<std::uint8_t>(c % q);
      c /= q;
    }
    if (poly_is_zero(poly_mod(f, phi, cand))) {
      factor = std::move(cand);
      break;
    }
  }
  if (factor.empty()) throw Error("cyclotomic factor search failed");

  // companion matrix action: e_i -> e_(i+1), e_(a-1) -> -(c_0 e_0 + ...)
  auto digit = [&](unsigned v, unsigned i) {
    for (unsigned k = 0; k < i; ++k) v /= q;
    return v % q;
  };
  std::vector<Point> mimg(n), timg(n);
  for (unsigned v = 0; v < n; ++v) {
    // image of vector v under M
    std::vector<unsigned> w(a, 0);
    for (unsigned i = 0; i + 1 < a; ++i) w[i + 1] = digit(v, i);
    unsigned top = digit(v, a - 1);
    for (unsigned i = 0; i < a; ++i)
      w[i] = f.add(w[i], f.mul(top, f.neg(factor[i])));
    unsigned enc = 0;
    for (unsigned i = a; i-- > 0;) enc = enc * q + w[i];
    mimg[v] = static_cast<Point>(enc);
    timg[v] = static_cast<Point>(v % q == q - 1u ? v - (q - 1) : v + 1);  // +e_0
  }
  Group g({Perm(std::move(timg)), Perm(std::move(mimg))});
  check_order(g, degll * r, "affine_frobenius");

  // irreducibility witness: the additive span of {M^k e_i : k < a} is all
  // of V for every basis vector e_i
  const Perm& mperm = g.generators()[1];
  auto vec_add = [&](unsigned u, unsigned v) {
    unsigned sum = 0;
    unsigned long long scale = 1;
    for (unsigned d2 = 0; d2 < a; ++d2) {
      sum += static_cast<unsigned>(scale) * f.add(digit(u, d2), digit(v, d2));
      scale *= q;
    }
    return sum;
  };
  for (unsigned i = 0; i < a; ++i) {
    std::vector<unsigned> seeds;
    unsigned x = static_cast<unsigned>(ipow(q, i));  // e_i
    for (unsigned k = 0; k < a; ++k) {
      seeds.push_back(x);
      x = mperm[static_cast<Point>(x)];
    }
    std::vector<bool> in_span(n, false);
    std::vector<unsigned> span{0};
    in_span[0] = true;
    for (std::size_t u = 0; u < span.size(); ++u)
      for (unsigned s : seeds) {
        unsigned sum = vec_add(span[u], s);
        if (!in_span[sum]) {
          in_span[sum] = true;
          span.push_back(sum);
        }
      }
    if (span.size() != n) throw Error("affine_frobenius module is reducible");
  }
  return g;
}

Group psl2(unsigned q) {
  bool prime = is_prime(q);
  if (!(prime && q <= 61) && q != 4 && q != 8 && q != 9)
    throw UnsupportedField("psl2 supports primes up to 61 and q in {4, 8, 9}");
  Field f = make_field(q);
  unsigned n = q + 1;  // projective line; point q = infinity
  const Point INF = static_cast<Point>(q);

  std::vector<Point> t(n), d(n), w(n);
  unsigned g0 = f.primitive();
  unsigned lambda = (q % 2 == 0) ? g0 : f.mul(g0, g0);
  for (unsigned x = 0; x < q; ++x) {
    t[x] = static_cast<Point>(f.add(x, 1));
    d[x] = static_cast<Point>(f.mul(lambda, x));
    w[x] = (x == 0) ? INF : static_cast<Point>(f.neg(f.inv(x)));
  }
  t[INF] = INF;
  d[INF] = INF;
  w[INF] = 0;

  std::vector<Perm> gens{Perm(std::move(t)), Perm(std::move(w))};
  if (lambda != 1) gens.insert(gens.begin() + 1, Perm(std::move(d)));
  Group g(std::move(gens));
  unsigned long long order =
      static_cast<unsigned long long>(q) * (q - 1) * (q + 1) / (q % 2 == 0 ? 1 : 2);
  check_order(g, order, "psl2");
  return g;
}

Group m12() { return m12(default_data_dir() + "/m12.txt"); }

Group m12(const std::string& fixture_path) {
  Catalog cat = load_catalog(fixture_path);
  const CatalogEntry* entry = cat.find(95040, 1);
  if (!entry) throw ParseError("m12 fixture entry missing", 0);
  Group g = entry->realize();
  // fixture validation: order, sharp 5-transitivity, perfectness
  check_order(g, 95040, "m12");
  // base points are chosen smallest-first, so for a 5-transitive group the
  // first five stabilizer orbits have sizes 12, 11, 10, 9, 8
  const auto& chain = g.chain();
  unsigned long long tower = 1;
  for (std::size_t i = 0; i < 5 && i < chain.levels.size(); ++i)
    tower *= chain.levels[i].orbit.size();
  if (tower != 95040) throw Error("m12 fixture is not sharply 5-transitive");
  if (!is_perfect(g)) throw Error("m12 fixture is not perfect");
  return g;
}

Group sylow_wreath_tower(unsigned p, unsigned n) {
  if (!is_prime(p) || n == 0) throw InvalidParameter("wreath tower needs a prime and n >= 1");
  unsigned long long degll = ipow(p, n);
  if (degll > 256) throw InvalidParameter("wreath tower supports p^n <= 256");
  unsigned exp = static_cast<unsigned>((degll - 1) / (p - 1));
  unsigned long long order = ipow(p, exp);  // throws when outside 64 bits

  unsigned deg = static_cast<unsigned>(degll);
  std::vector<Perm> gens;
  unsigned block = 1;
  for (unsigned level = 0; level < n; ++level) {
    block *= p;  // p^(level+1)
    // cycle the p blocks of size block/p inside the first block of size `block`
    std::vector<Point> img(deg);
    for (unsigned i = 0; i < deg; ++i) {
      if (i < block)
        img[i] = static_cast<Point>((i + block / p) % block);
      else
        img[i] = static_cast<Point>(i);
    }
    gens.emplace_back(std::move(img));
  }
  Group g(std::move(gens));
  check_order(g, order, "sylow_wreath_tower");
  return g;
}

Presentation semidihedral_presentation(unsigned order) {
  unsigned n = 0;
  for (unsigned k = order; k > 1; k /= 2, ++n)
    if (k % 2 != 0) throw InvalidParameter("semidihedral order must be 2^n");
  if (n < 4) throw InvalidParameter("semidihedral group needs order at least 16");
  Presentation p;
  p.generator_count = 2;  // a = 1, b = 2
  std::vector<int> ra(order / 2, 1);
  p.relators.push_back(ra);
  p.relators.push_back({2, 2});
  // b^-1 a b = a^(2^(n-2)-1)
  std::vector<int> rc{-2, 1, 2};
  for (unsigned i = 0; i < order / 4 - 1; ++i) rc.push_back(-1);
  p.relators.push_back(rc);
  return p;
}

Presentation heisenberg_presentation(unsigned p) {
  if (!is_prime(p) || p == 2) throw InvalidParameter("needs an odd prime");
  Presentation pr;
  pr.generator_count = 3;  // x = 1, y = 2, z = 3
  pr.relators.push_back(std::vector<int>(p, 1));
  pr.relators.push_back(std::vector<int>(p, 2));
  pr.relators.push_back(std::vector<int>(p, 3));
  pr.relators.push_back({-1, -3, 1, 3});            // [x,z]
  pr.relators.push_back({-2, -3, 2, 3});            // [y,z]
  pr.relators.push_back({-1, -2, 1, 2, -3});        // [x,y] = z
  return pr;
}

Presentation heisenberg_extension_presentation(unsigned p) {
  Presentation pr = heisenberg_presentation(p);
  pr.generator_count = 4;  // a = 4
  std::vector<int> apow(p * p, 4);
  apow.push_back(-3);  // a^(p^2) = z
  pr.relators.push_back(apow);
  pr.relators.push_back({-4, 1, 4, -1});            // x^a = x
  pr.relators.push_back({-4, 2, 4, -2, -1});        // y^a = xy
  return pr;
}

}  // namespace coverforge
