#include "cgk/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

#include "cgk/error.hpp"

namespace cgk {

namespace {

class PdParser {
 public:
  explicit PdParser(const std::string& s) : s_(s) {}

  std::vector<std::array<long, 5>> run() {
    std::vector<std::array<long, 5>> out;  // i, j, k, l, sign (0 = infer)
    skip();
    bool wrapped = false;
    if (s_.compare(pos_, 2, "PD") == 0) {
      pos_ += 2;
      expect('[');
      wrapped = true;
    }
    for (;;) {
      skip();
      if (pos_ >= s_.size() || s_[pos_] == ']') break;
      if (s_[pos_] != 'X') err("expected 'X'");
      ++pos_;
      expect('[');
      std::array<long, 5> x{};
      for (int f = 0; f < 4; ++f) {
        if (f) expect(',');
        x[f] = number();
      }
      expect(']');
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) x[4] = s_[pos_++] == '+' ? 1 : -1;
      out.push_back(x);
    }
    if (wrapped) expect(']');
    skip();
    if (pos_ != s_.size()) err("trailing input");
    return out;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && (std::isspace(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == ',')) ++pos_;
  }
  void expect(char c) {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ >= s_.size() || s_[pos_] != c) err(std::string("expected '") + c + "'");
    ++pos_;
  }
  long number() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 9) err("expected an edge label");
    long v = std::stol(s_.substr(start, pos_ - start));
    if (v <= 0) err("edge labels must be positive");
    return v;
  }
  [[noreturn]] void err(const std::string& what) const {
    fail(ErrorKind::ParseError, what + " at position " + std::to_string(pos_));
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

i64 pow_signed(i64 q, int e, i64 n) {
  if (e > 0) return mod_norm(q, n);
  auto inv = inv_mod(q, n);
  require(inv.has_value(), ErrorKind::InvalidInput, "twist must be a unit");
  return *inv;
}

struct KernelData {
  std::vector<i64> orders;  // per SNF coordinate: order of its allowed values
  IntMatrix right;
};

KernelData kernel_over(const IntMatrix& r, i64 n) {
  KernelData k;
  if (r.cols() == 0) return k;
  if (r.rows() == 0) {
    k.orders.assign(r.cols(), n);
    k.right = IntMatrix::identity(r.cols());
    return k;
  }
  SmithForm sf = smith_form(r, true);
  k.right = sf.right;
  for (std::size_t i = 0; i < r.cols(); ++i) {
    Int s = i < sf.diag.size() ? sf.diag[i] : Int(0);
    k.orders.push_back(gcd_i64(mod_of(s, n), n));
  }
  return k;
}

std::vector<i64> nontrivial(const std::vector<i64>& orders) {
  std::vector<i64> out;
  for (i64 o : orders)
    if (o > 1) out.push_back(o);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_prime_power(i64 n) {
  if (n < 2) return false;
  i64 p = 2;
  while (n % p) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

void validate_diagram(const Diagram& d) {
  require(d.arcs >= 1, ErrorKind::IncidenceError, "diagram has no arcs");
  std::vector<int> ins(d.arcs, 0), outs(d.arcs, 0);
  for (const auto& c : d.crossings) {
    for (std::size_t a : {c.over, c.in, c.out})
      if (a >= d.arcs) fail(ErrorKind::IncidenceError, "arc " + std::to_string(a) + " out of range");
    require(c.sign == 1 || c.sign == -1, ErrorKind::IncidenceError, "crossing sign must be +1 or -1");
    ++ins[c.in];
    ++outs[c.out];
  }
  if (d.crossings.empty()) {
    require(d.arcs == 1, ErrorKind::IncidenceError, "a crossingless diagram has exactly one arc");
    return;
  }
  for (std::size_t a = 0; a < d.arcs; ++a) {
    if (ins[a] != 1) fail(ErrorKind::IncidenceError, "arc " + std::to_string(a) + " ends at " + std::to_string(ins[a]) + " crossings");
    if (outs[a] != 1) fail(ErrorKind::IncidenceError, "arc " + std::to_string(a) + " starts at " + std::to_string(outs[a]) + " crossings");
  }
  // Follow the strand through all undercrossings: one component.
  std::vector<std::size_t> next(d.arcs);
  for (const auto& c : d.crossings) next[c.in] = c.out;
  std::size_t a = 0, steps = 0;
  do {
    a = next[a];
    ++steps;
  } while (a != 0 && steps <= d.arcs);
  require(steps == d.arcs, ErrorKind::IncidenceError, "diagram has more than one component");
}

Diagram parse_pd(const std::string& text) {
  auto xs = PdParser(text).run();
  Diagram d;
  if (xs.empty()) return d;
  std::map<long, int> uses, under_in, under_out;
  for (const auto& x : xs) {
    for (int f = 0; f < 4; ++f) ++uses[x[f]];
    ++under_in[x[0]];
    ++under_out[x[2]];
  }
  for (const auto& [e, u] : uses)
    if (u != 2) fail(ErrorKind::IncidenceError, "edge " + std::to_string(e) + " appears " + std::to_string(u) + " times");
  for (const auto& [e, u] : under_in)
    if (u > 1) fail(ErrorKind::IncidenceError, "edge " + std::to_string(e) + " enters more than one undercrossing");
  for (const auto& [e, u] : under_out)
    if (u > 1) fail(ErrorKind::IncidenceError, "edge " + std::to_string(e) + " leaves more than one undercrossing");

  std::map<long, std::size_t> index;
  for (const auto& [e, u] : uses) index.emplace(e, index.size());
  std::vector<std::size_t> parent(index.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& x : xs) parent[find_root(parent, index[x[1]])] = find_root(parent, index[x[3]]);
  // Arcs numbered in order of their smallest edge label.
  std::map<std::size_t, std::size_t> arc_of_root;
  for (const auto& [e, i] : index) arc_of_root.emplace(find_root(parent, i), arc_of_root.size());
  auto arc = [&](long e) { return arc_of_root.at(find_root(parent, index.at(e))); };

  d.arcs = arc_of_root.size();
  for (const auto& x : xs) {
    Crossing c;
    c.over = arc(x[1]);
    c.in = arc(x[0]);
    c.out = arc(x[2]);
    if (x[4] != 0) {
      c.sign = static_cast<int>(x[4]);
    } else {
      const long i = x[0], j = x[1], k = x[2], l = x[3];
      bool pos = i == j || k == l || j - l == 1 || l - j > 1;
      c.sign = pos ? 1 : -1;
    }
    d.crossings.push_back(c);
  }
  validate_diagram(d);
  return d;
}

Diagram connected_sum(const Diagram& a, const Diagram& b) {
  validate_diagram(a);
  validate_diagram(b);
  if (a.crossings.empty()) return b;
  if (b.crossings.empty()) return a;
  // Cut each arc 0 just before its terminal undercrossing and cross-connect.
  const std::size_t y = a.arcs;
  Diagram s;
  s.arcs = a.arcs + b.arcs;
  for (Crossing c : a.crossings) {
    if (c.in == 0) c.in = y;
    s.crossings.push_back(c);
  }
  for (Crossing c : b.crossings) {
    c.over += y;
    c.out += y;
    c.in = c.in == 0 ? 0 : c.in + y;
    s.crossings.push_back(c);
  }
  validate_diagram(s);
  return s;
}

Diagram add_kink(const Diagram& d, std::size_t x, int sign) {
  validate_diagram(d);
  require(x < d.arcs, ErrorKind::InvalidInput, "kink arc out of range");
  require(sign == 1 || sign == -1, ErrorKind::InvalidInput, "kink sign must be +1 or -1");
  Diagram k = d;
  if (d.crossings.empty()) {
    k.crossings.push_back({0, 0, 0, sign});
    return k;
  }
  const std::size_t y = d.arcs;
  k.arcs = y + 1;
  for (auto& c : k.crossings)
    if (c.in == x) c.in = y;
  k.crossings.push_back({x, x, y, sign});
  validate_diagram(k);
  return k;
}

void MetacyclicGroup::validate() const {
  require(d >= 1 && n >= 2, ErrorKind::InvalidInput, "metacyclic group needs d >= 1 and n >= 2");
  require(gcd_i64(mod_norm(q, n), n) == 1, ErrorKind::InvalidInput, "twist q must be a unit mod n");
  require(pow_mod(mod_norm(q, n), d, n) == 1, ErrorKind::InvalidInput, "q^d must be 1 mod n");
}

IntMatrix relation_matrix(const Diagram& d, const MetacyclicGroup& g) {
  g.validate();
  validate_diagram(d);
  const i64 n = g.n;
  IntMatrix r(d.crossings.size(), d.arcs);
  for (std::size_t row = 0; row < d.crossings.size(); ++row) {
    const Crossing& c = d.crossings[row];
    const i64 qe = pow_signed(g.q, c.sign, n);
    r(row, c.out) += 1;
    r(row, c.in) -= qe;
    r(row, c.over) -= mod_norm(1 - qe, n);
    for (std::size_t col = 0; col < d.arcs; ++col) r(row, col) = mod_of(r(row, col), n);
  }
  return r;
}

LabelingSpace labeling_space(const Diagram& d, const MetacyclicGroup& g, std::size_t budget) {
  IntMatrix r = relation_matrix(d, g);
  const i64 n = g.n;
  LabelingSpace ls;
  ls.n = n;
  KernelData full = kernel_over(r, n);
  ls.size = 1;
  for (i64 o : full.orders) ls.size *= o;
  ls.module = nontrivial(full.orders);

  // Translation normal form: b_0 = 0.
  IntMatrix rr(r.rows(), r.cols() - 1);
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 1; j < r.cols(); ++j) rr(i, j - 1) = r(i, j);
  KernelData red = kernel_over(rr, n);
  ls.classes_mod_translation = 1;
  for (i64 o : red.orders) ls.classes_mod_translation *= o;
  ls.mod_translation = nontrivial(red.orders);

  if (ls.classes_mod_translation > static_cast<long>(budget)) return ls;
  const std::size_t m = red.orders.size();
  std::vector<i64> units;
  for (i64 u = 1; u < n; ++u)
    if (gcd_i64(u, n) == 1) units.push_back(u);
  std::set<ModRow> canon;
  std::vector<i64> y(m, 0);
  for (;;) {
    ModRow x(m, 0);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        x[i] = mod_norm(x[i] + mul_mod(mod_of(red.right(i, j), n), y[j] * (n / red.orders[j]), n), n);
    if (std::any_of(x.begin(), x.end(), [](i64 v) { return v != 0; })) {
      ModRow best;
      for (i64 u : units) {
        ModRow v = x;
        for (auto& e : v) e = mul_mod(e, u, n);
        if (best.empty() || v < best) best = v;
      }
      canon.insert(best);
    }
    std::size_t i = 0;
    while (i < m && y[i] + 1 >= red.orders[i]) y[i++] = 0;
    if (i == m) break;
    ++y[i];
  }
  ls.classes_up_to_scaling = static_cast<long>(canon.size());
  return ls;
}

std::vector<i64> classify_characters(const Diagram& d, const MetacyclicGroup& g) {
  require(is_prime_power(g.n), ErrorKind::InvalidInput, "classify_characters needs n a prime power");
  return labeling_space(d, g, 0).mod_translation;
}

}  // namespace cgk
