#include "cgk/seifert.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "cgk/error.hpp"
#include "cgk/inertia.hpp"

namespace cgk {

void validate_seifert(const IntMatrix& v) {
  require(v.square(), ErrorKind::InvalidInput, "Seifert matrix must be square");
  require(v.rows() % 2 == 0, ErrorKind::InvalidInput, "Seifert matrix must have even size");
  require(det_bareiss(v - v.transpose()) == 1, ErrorKind::InvalidInput,
          "Seifert matrix must satisfy det(V - V^T) = 1");
}

RatLaurent alexander(const IntMatrix& v) {
  validate_seifert(v);
  const std::size_t n = v.rows();
  if (n == 0) return RatLaurent(QPoly::constant(1));
  const IntMatrix vt = v.transpose();
  std::vector<Rat> xs, ys;
  for (std::size_t k = 0; k <= n; ++k) {
    Int t = static_cast<long>(k);
    xs.emplace_back(t);
    ys.emplace_back(det_bareiss(v - vt.scaled(t)));
  }
  return RatLaurent(interpolate(xs, ys)).normalized();
}

QPoly cot_polynomial(long d) {
  // Im((c + i)^d): sum over odd m of C(d, m) (-1)^((m-1)/2) c^(d-m).
  std::vector<Rat> coeffs(static_cast<std::size_t>(d), Rat(0));
  Int binom = 1;
  for (long m = 0; m <= d; ++m) {
    if (m > 0) binom = binom * (d - m + 1) / m;
    if (m % 2 == 1) {
      Rat c(binom);
      if (((m - 1) / 2) % 2 == 1) c = -c;
      coeffs[static_cast<std::size_t>(d - m)] = c;
    }
  }
  return QPoly(std::move(coeffs));
}

SignatureFunction::SignatureFunction(IntMatrix v) {
  validate_seifert(v);
  const IntMatrix vt = v.transpose();
  s_ = v + vt;
  a_ = v - vt;
  delta_ = alexander(v);
  const std::size_t n = v.rows();
  if (n == 0) return;
  // f(x) = det(S + x A) is even in x; det(S - i c A) = sum f_2j (-1)^j c^2j.
  std::vector<Rat> xs, ys;
  for (std::size_t k = 0; k <= n; ++k) {
    Int x = static_cast<long>(k);
    xs.emplace_back(x);
    ys.emplace_back(det_bareiss(s_ + a_.scaled(x)));
  }
  QPoly f = interpolate(xs, ys);
  std::vector<Rat> pc(static_cast<std::size_t>(f.degree() + 1), Rat(0));
  for (int i = 0; i <= f.degree(); ++i) {
    if (i % 2 == 1) {
      require(f.coeff(i) == 0, ErrorKind::InternalInvariantViolation,
              "det(S + xA) is not even in x");
      continue;
    }
    pc[static_cast<std::size_t>(i)] = (i / 2) % 2 == 0 ? f.coeff(i) : -f.coeff(i);
  }
  detpoly_ = QPoly(std::move(pc));
  require(!detpoly_.is_zero(), ErrorKind::InternalInvariantViolation,
          "Hermitian determinant vanishes identically");
  sturm_ = SturmSequence(squarefree_part(detpoly_));
}

bool SignatureFunction::singular_at(const Rat& tin) const {
  Rat t(tin);
  t.canonicalize();
  const long d = t.get_den().get_si();
  if (delta_.span() <= 0) return false;
  return (delta_.body() % cyclotomic_poly(static_cast<int>(d))).is_zero();
}

namespace {
struct CotData {
  QPoly q;
  SturmSequence sturm;
  std::vector<std::pair<Rat, Rat>> roots;  // decreasing
};

void isolate(const SturmSequence& s, const Rat& lo, const Rat& hi,
             std::vector<std::pair<Rat, Rat>>& out) {
  int n = s.count(lo, hi);
  if (n == 0) return;
  if (n == 1) {
    out.emplace_back(lo, hi);
    return;
  }
  Rat mid = (lo + hi) / 2;
  isolate(s, mid, hi, out);
  isolate(s, lo, mid, out);
}

const CotData& cot_data(long d) {
  static std::mutex mu;
  static std::map<long, CotData> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  CotData c;
  c.q = cot_polynomial(d);
  c.sturm = SturmSequence(c.q);
  Rat b = root_bound(c.q);
  isolate(c.sturm, -b, b, c.roots);
  require(c.roots.size() == static_cast<std::size_t>(d - 1), ErrorKind::InternalInvariantViolation,
          "cot polynomial root isolation failed");
  return cache.emplace(d, std::move(c)).first->second;
}
}  // namespace

int SignatureFunction::at(const Rat& tin) const {
  Rat t(tin);
  t.canonicalize();
  require(t > 0 && t < 1, ErrorKind::InvalidInput, "t must lie strictly between 0 and 1");
  const std::size_t n = s_.rows();
  if (n == 0) return 0;
  if (singular_at(t))
    fail(ErrorKind::SingularAtT, "e^{2 pi i t} is a root of the Alexander polynomial at t = " +
                                     t.get_str() + " (signature jump point)");
  const long k = t.get_num().get_si(), d = t.get_den().get_si();
  const CotData& cd = cot_data(d);
  auto [lo, hi] = cd.roots[static_cast<std::size_t>(k - 1)];
  Rat c;
  bool exact = false;
  if (cd.q.eval(hi) == 0) {
    c = hi;
    exact = true;
  }
  while (!exact && sturm_.count(lo, hi) > 0) {
    Rat mid = (lo + hi) / 2;
    if (cd.q.eval(mid) == 0) {
      c = mid;
      exact = true;
      break;
    }
    if (cd.sturm.count(lo, mid) == 1)
      hi = mid;
    else
      lo = mid;
  }
  if (!exact) c = (lo + hi) / 2;

  // Real form of S - i c A, scaled by the denominator of c.
  const Int u = c.get_num(), v = c.get_den();
  IntMatrix m(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = v * s_(i, j);
      m(n + i, n + j) = v * s_(i, j);
      m(i, n + j) = u * a_(i, j);
      m(n + i, j) = -u * a_(i, j);
    }
  Inertia in = inertia(std::move(m));
  require(in.zero == 0 && in.signature() % 2 == 0, ErrorKind::InternalInvariantViolation,
          "real form of the Hermitian matrix is degenerate at a regular point");
  return in.signature() / 2;
}

int lt_signature(const IntMatrix& v, const Rat& t) { return SignatureFunction(v).at(t); }

namespace {
ZPoly reciprocal_primitive(const ZPoly& g) {
  QPoly r = to_qpoly(ZPoly(g.rbegin(), g.rend()));
  return primitive_zpoly(r);
}
}  // namespace

FoxMilnorResult fox_milnor(const IntMatrix& v) {
  FoxMilnorResult out;
  RatLaurent d = alexander(v);
  out.factors = factor_over_q(d.body());
  out.passes = true;
  std::map<ZPoly, int> mult;
  for (const auto& [g, m] : out.factors.factors) mult[g] += m;
  for (const auto& [g, m] : mult) {
    ZPoly r = reciprocal_primitive(g);
    if (r == g) {
      if (m % 2 != 0) {
        out.passes = false;
        out.notes.push_back("self-reciprocal factor " + RatLaurent(to_qpoly(g)).str() +
                            " has odd multiplicity " + std::to_string(m));
      }
    } else {
      auto it = mult.find(r);
      int mr = it == mult.end() ? 0 : it->second;
      if (mr != m) {
        out.passes = false;
        out.notes.push_back("factor " + RatLaurent(to_qpoly(g)).str() +
                            " is not matched by its reciprocal");
      }
    }
  }
  return out;
}

std::vector<std::array<Int, 2>> metabolizing_vectors(const IntMatrix& v, int bound) {
  validate_seifert(v);
  if (v.rows() != 2) fail(ErrorKind::UnsupportedGenus, "metabolizing vector search is genus one only");
  std::vector<std::array<Int, 2>> out;
  for (long x = 0; x <= bound; ++x)
    for (long y = -bound; y <= bound; ++y) {
      if (x == 0 && y <= 0) continue;
      if (std::gcd(x, y < 0 ? -y : y) != 1) continue;
      Int q = v(0, 0) * x * x + (v(0, 1) + v(1, 0)) * x * y + v(1, 1) * y * y;
      if (q == 0) out.push_back({Int(x), Int(y)});
    }
  return out;
}

IntMatrix mirror(const IntMatrix& v) { return -v.transpose(); }

IntMatrix block_sum(const std::vector<IntMatrix>& parts) {
  IntMatrix m;
  for (const auto& p : parts) m = block_diagonal(m, p);
  return m;
}

IntMatrix twisted_double_matrix(long a) {
  require(a >= 0, ErrorKind::InvalidInput, "twisted double parameter must be non-negative");
  return IntMatrix{{-1, 1}, {0, a * (a + 1)}};
}

IntMatrix order_two_base_matrix() { return IntMatrix{{1, 1}, {0, -1}}; }

namespace {
IntMatrix lambda(long n) {
  IntMatrix m(static_cast<std::size_t>(n - 1), static_cast<std::size_t>(n - 1));
  for (long i = 0; i + 1 < n; ++i) {
    m(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = 1;
    if (i + 2 < n) m(static_cast<std::size_t>(i), static_cast<std::size_t>(i + 1)) = -1;
  }
  return m;
}
}  // namespace

IntMatrix torus_matrix(long p, long q) {
  require(p != 0 && q != 0, ErrorKind::InvalidInput, "torus parameters must be nonzero");
  require(std::gcd(p < 0 ? -p : p, q < 0 ? -q : q) == 1, ErrorKind::InvalidInput,
          "torus parameters must be coprime");
  if ((p < 0) != (q < 0)) return mirror(torus_matrix(p < 0 ? -p : p, q < 0 ? -q : q));
  if (p < 0) return torus_matrix(-p, -q);
  IntMatrix a = lambda(p), b = lambda(q);
  IntMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          m(i * b.rows() + k, j * b.cols() + l) = -a(i, j) * b(k, l);
  return m;
}

IntMatrix z49_model_matrix() {
  return IntMatrix{{-1, 1, 1, 1}, {0, 2, 0, 0}, {1, 0, -1, 1}, {1, 0, 0, 2}};
}

}  // namespace cgk
